#ifndef VSTRATA_STRATA_HPP
#define VSTRATA_STRATA_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace vstrata {

// Partition t = t_1 + ... + t_s with t_1 >= ... >= t_s >= 1; labels one curvilinear stratum
// (s connected components of degrees t_1..t_s).
class StratumLabel {
public:
    StratumLabel() = default;
    // Throws InputError unless parts are positive and non-increasing.
    explicit StratumLabel(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned t() const { return t_; }
    std::size_t length() const { return parts_.size(); }
    bool is_trivial() const { return !parts_.empty() && parts_.front() == 1; }

    std::string to_string() const;

    // Parses "2,1,1" or "(2,1,1)".
    static StratumLabel parse(const std::string& text);

    // Lexicographic comparison of the part sequences; the non-canonical total order.
    auto operator<=>(const StratumLabel& other) const = default;

private:
    std::vector<unsigned> parts_;
    unsigned t_ = 0;
};

// The labels (2,1,...,1), (3,1,...,1) and (2,2,1,...,1) of total t.
StratumLabel tangent_label(unsigned t);
StratumLabel triple_label(unsigned t);
StratumLabel two_tangents_label(unsigned t);

// All partitions of t, largest first part first: t=3 gives (3), (2,1), (1,1,1).
// With exclude_trivial, (1,...,1) is omitted.
std::vector<StratumLabel> partitions_enumerate(unsigned t, bool exclude_trivial);

enum class Dominance { less_equal, greater_equal, equal, incomparable };
const char* to_string(Dominance d);

// Prefix-sum comparison. Throws InputError if a.t() != b.t().
Dominance dominance_compare(const StratumLabel& a, const StratumLabel& b);

struct StratumDim {
    std::size_t dim = 0;
    std::size_t codim = 0;
};

// Dimension m t + s - t of the curvilinear Hilbert stratum, codimension t - s.
StratumDim hilb_stratum_dim(unsigned m, const StratumLabel& label);

// Dimension (m+1) t - 1 - t + l of the union of spans of schemes in the stratum.
std::size_t sigma_stratum_dim(unsigned m, const StratumLabel& label);

enum class ClosureRelation { in_closure_of, unknown };

struct ClosureFact {
    ClosureRelation relation = ClosureRelation::unknown;
    Dominance dominance = Dominance::incomparable;
};

// Whether stratum `b` lies in the closure of stratum `a`. Only reported when a == b or
// when a is (2,1,..,1) with b != (1,..,1), a is (3,1,..,1) with b_1 >= 3, or a is
// (2,2,1,..,1) with b_2 >= 2. Everything else is `unknown`, with the dominance
// comparison of a and b attached for context.
ClosureFact closure_relation(const StratumLabel& a, const StratumLabel& b);

struct LabelReport {
    StratumLabel label;
    std::size_t hilb_dim = 0;
    std::size_t hilb_codim = 0;
    std::size_t sigma_dim = 0;
    // Codimension inside the union of the nontrivial strata; unset for (1,...,1).
    bool has_dagger_codim = false;
    std::size_t dagger_codim = 0;
    // Position in the lexicographic tie-break order (ascending). Non-canonical.
    std::size_t lex_rank = 0;
    // Labels whose closure is known to contain this stratum.
    std::vector<StratumLabel> in_closure_of;
};

struct StratificationReport {
    unsigned m = 0;
    unsigned d = 0;
    unsigned t = 0;
    std::vector<LabelReport> labels;
    // t <= (d+1)/2: images of different strata are disjoint.
    bool true_stratification = false;
    // 2 <= t <= floor((d-1)/2): each point has a unique scheme.
    bool uniqueness_regime = false;
    std::vector<StratumLabel> codim_one_dagger;
};

// Requires m >= 2, d >= 3, t >= 2.
StratificationReport stratification_report(unsigned m, unsigned d, unsigned t);

} // namespace vstrata

#endif // VSTRATA_STRATA_HPP
