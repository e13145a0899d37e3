#include "vstrata/strata.hpp"

#include "vstrata/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vstrata {

StratumLabel::StratumLabel(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) throw InputError("stratum label needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw InputError("stratum label parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("stratum label parts must be non-increasing");
    }
    t_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

std::string StratumLabel::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

StratumLabel StratumLabel::parse(const std::string& text)
{
    std::string body;
    for (char c : text) {
        if (c != '(' && c != ')' && c != ' ') body.push_back(c);
    }
    std::vector<unsigned> parts;
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw InputError("bad stratum label '" + text + "'");
        }
        parts.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return StratumLabel(std::move(parts));
}

namespace {

StratumLabel head_then_ones(std::vector<unsigned> head, unsigned t)
{
    const unsigned used = std::accumulate(head.begin(), head.end(), 0U);
    if (used > t) throw InputError("label head exceeds t");
    head.resize(head.size() + (t - used), 1);
    return StratumLabel(std::move(head));
}

void enumerate(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur, std::vector<StratumLabel>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

unsigned part_or_zero(const StratumLabel& l, std::size_t i)
{
    return i < l.length() ? l.parts()[i] : 0;
}

} // namespace

StratumLabel tangent_label(unsigned t) { return head_then_ones({2}, t); }
StratumLabel triple_label(unsigned t) { return head_then_ones({3}, t); }
StratumLabel two_tangents_label(unsigned t) { return head_then_ones({2, 2}, t); }

std::vector<StratumLabel> partitions_enumerate(unsigned t, bool exclude_trivial)
{
    if (t < 1) throw InputError("partitions_enumerate needs t >= 1");
    std::vector<StratumLabel> out;
    std::vector<unsigned> cur;
    enumerate(t, t, cur, out);
    if (exclude_trivial) {
        std::erase_if(out, [](const StratumLabel& l) { return l.is_trivial(); });
    }
    return out;
}

const char* to_string(Dominance d)
{
    switch (d) {
    case Dominance::less_equal: return "less_equal";
    case Dominance::greater_equal: return "greater_equal";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
    }
    return "incomparable";
}

Dominance dominance_compare(const StratumLabel& a, const StratumLabel& b)
{
    if (a.t() != b.t()) throw InputError("dominance_compare: labels of different t");
    bool le = true;
    bool ge = true;
    unsigned sa = 0;
    unsigned sb = 0;
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        sa += part_or_zero(a, i);
        sb += part_or_zero(b, i);
        if (sa > sb) le = false;
        if (sa < sb) ge = false;
    }
    if (le && ge) return Dominance::equal;
    if (le) return Dominance::less_equal;
    if (ge) return Dominance::greater_equal;
    return Dominance::incomparable;
}

StratumDim hilb_stratum_dim(unsigned m, const StratumLabel& label)
{
    if (m < 1) throw InputError("hilb_stratum_dim needs m >= 1");
    const std::size_t t = label.t();
    const std::size_t s = label.length();
    return {m * t + s - t, t - s};
}

std::size_t sigma_stratum_dim(unsigned m, const StratumLabel& label)
{
    if (m < 1) throw InputError("sigma_stratum_dim needs m >= 1");
    const std::size_t t = label.t();
    return (static_cast<std::size_t>(m) + 1) * t - 1 - t + label.length();
}

ClosureFact closure_relation(const StratumLabel& a, const StratumLabel& b)
{
    ClosureFact fact;
    fact.dominance = dominance_compare(a, b);
    const unsigned t = a.t();
    bool proven = a == b;
    if (!proven && t >= 2 && a == tangent_label(t) && !b.is_trivial()) proven = true;
    if (!proven && t >= 3 && a == triple_label(t) && part_or_zero(b, 0) >= 3) proven = true;
    if (!proven && t >= 4 && a == two_tangents_label(t) && part_or_zero(b, 1) >= 2) proven = true;
    fact.relation = proven ? ClosureRelation::in_closure_of : ClosureRelation::unknown;
    return fact;
}

StratificationReport stratification_report(unsigned m, unsigned d, unsigned t)
{
    if (m < 2 || d < 3 || t < 2) throw InputError("stratification_report needs m >= 2, d >= 3, t >= 2");
    StratificationReport report;
    report.m = m;
    report.d = d;
    report.t = t;
    report.true_stratification = 2 * t <= d + 1;
    report.uniqueness_regime = t <= (d - 1) / 2;

    auto labels = partitions_enumerate(t, false);
    auto lex = labels;
    std::sort(lex.begin(), lex.end());

    const std::size_t top = sigma_stratum_dim(m, tangent_label(t));
    for (const auto& label : labels) {
        LabelReport lr;
        lr.label = label;
        const auto hd = hilb_stratum_dim(m, label);
        lr.hilb_dim = hd.dim;
        lr.hilb_codim = hd.codim;
        lr.sigma_dim = sigma_stratum_dim(m, label);
        if (!label.is_trivial()) {
            lr.has_dagger_codim = true;
            lr.dagger_codim = top - lr.sigma_dim;
            if (lr.dagger_codim == 1) report.codim_one_dagger.push_back(label);
        }
        lr.lex_rank = static_cast<std::size_t>(std::find(lex.begin(), lex.end(), label) - lex.begin());
        for (const auto& other : labels) {
            if (other == label) continue;
            if (closure_relation(other, label).relation == ClosureRelation::in_closure_of) {
                lr.in_closure_of.push_back(other);
            }
        }
        report.labels.push_back(std::move(lr));
    }
    return report;
}

} // namespace vstrata
