#include "vstrata/certificate.hpp"

#include "vstrata/errors.hpp"

#include <algorithm>
#include <string>

namespace vstrata {

const char* to_string(SummandShape s)
{
    switch (s) {
    case SummandShape::power: return "power";
    case SummandShape::power_times_linear: return "power_times_linear";
    case SummandShape::power_times_quadric: return "power_times_quadric";
    }
    return "power";
}

const char* to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::border_rank: return "border_rank";
    case CertificateKind::rank_upper: return "rank_upper";
    case CertificateKind::uniqueness: return "uniqueness";
    case CertificateKind::dimension: return "dimension";
    }
    return "border_rank";
}

Form Summand::expand(unsigned d) const
{
    Form out;
    switch (shape) {
    case SummandShape::power:
        out = power_expand(base, d);
        break;
    case SummandShape::power_times_linear:
        if (!linear || d < 1) throw InputError("power_times_linear summand needs a linear factor and d >= 1");
        out = multiply(power_expand(base, d - 1), linear->as_form());
        break;
    case SummandShape::power_times_quadric:
        if (!quadric || quadric->d() != 2 || d < 2) {
            throw InputError("power_times_quadric summand needs a quadratic factor and d >= 2");
        }
        out = multiply(power_expand(base, d - 2), *quadric);
        break;
    }
    out *= coefficient;
    return out;
}

DecompositionRecord::DecompositionRecord(Form target, std::vector<Summand> summands)
    : target_(std::move(target)), summands_(std::move(summands))
{
    if (!verify()) throw CertificateRefused("decomposition does not re-expand to its target form");
}

bool DecompositionRecord::verify() const
{
    Form acc(target_.m(), target_.d());
    for (const auto& s : summands_) {
        if (s.base.m() != target_.m()) return false;
        acc += s.expand(target_.d());
    }
    return acc == target_;
}

bool Certificate::all_passed() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

MembershipRanks membership_ranks(const QMatrix& span, const QVector& v, RankMode mode)
{
    MembershipRanks r;
    r.without = rank(span, mode);
    r.with = rank(with_row(span, v), mode);
    return r;
}

namespace {

void require(Certificate& cert, Claim claim)
{
    if (!claim.passed) throw CertificateRefused("claim failed: " + claim.statement);
    cert.claims.push_back(std::move(claim));
}

} // namespace

Certificate certify_border_rank(const Form& p, const SchemeSpec& z, unsigned d, const CertifyOptions& options)
{
    if (p.m() != z.m || p.d() != d) throw InputError("certify_border_rank: form shape does not match (m, d)");
    if (p.is_zero()) throw InputError("certify_border_rank: the zero form has no border rank");
    validate(z);
    if (!is_curvilinear(z)) throw UnsupportedComponent("certify_border_rank needs a curvilinear scheme");

    const std::size_t deg = scheme_degree(z);
    Certificate cert;
    cert.kind = CertificateKind::border_rank;
    cert.value = deg;
    cert.scheme = z;

    const std::size_t cond_rank = rank(conditions_matrix(z, d), options.mode);
    require(cert, {"h1(Z, d) = 0", {cond_rank, deg}, cond_rank == deg});

    const QMatrix span = span_matrix(z, d);
    const auto in_span = membership_ranks(span, p.coeffs(), options.mode);
    require(cert, {"P lies in the span of Z", {in_span.without, in_span.with}, in_span.member()});

    Claim exclusion{"P lies outside the span of each of the " + std::to_string(proper_truncations(z).size()) +
                        " proper subschemes of Z",
                    {},
                    true};
    for (const auto& sub : proper_subscheme_spans(z, d)) {
        const auto r = membership_ranks(sub, p.coeffs(), options.mode);
        exclusion.ranks.push_back(r.without);
        exclusion.ranks.push_back(r.with);
        if (r.member()) exclusion.passed = false;
    }
    require(cert, std::move(exclusion));

    std::vector<std::size_t> cat_ranks;
    std::size_t flattening = 0;
    for (unsigned a = 1; 2 * a <= d; ++a) {
        cat_ranks.push_back(rank(catalecticant_matrix(p, a), options.mode));
        flattening = std::max(flattening, cat_ranks.back());
    }
    if (d == 1) flattening = 1;
    if (flattening > deg) {
        throw InternalInconsistency("flattening rank " + std::to_string(flattening) +
                                    " exceeds the degree of a scheme whose span contains P");
    }

    const std::size_t unique_limit = options.uniqueness_max_degree.value_or((d + 1) / 2);
    if (deg <= unique_limit) {
        require(cert, {"2 deg(Z) <= d + 1, so Z is the only scheme of degree <= deg(Z) spanning P and b(P) = deg(Z)",
                       {cond_rank, in_span.without},
                       true});
        if (flattening != deg) {
            throw InternalInconsistency("flattening rank " + std::to_string(flattening) +
                                        " differs from the certified border rank " + std::to_string(deg));
        }
        require(cert, {"flattening rank of P equals deg(Z)", cat_ranks, true});
        cert.scope = scope::unique_scheme;
        cert.border_rank = deg;
    } else if (flattening == deg) {
        require(cert, {"flattening rank of P reaches deg(Z), so b(P) = deg(Z)", cat_ranks, true});
        cert.scope = scope::certified;
        cert.border_rank = deg;
        cert.notes.push_back("uniqueness range exceeded: uniqueness of Z is not asserted");
    } else {
        cert.scope = scope::membership_only;
        cert.notes.push_back("uniqueness range exceeded: b(P) <= " + std::to_string(deg) +
                             ", flattening lower bound " + std::to_string(flattening));
    }

    if (z.m >= 2) {
        std::vector<std::size_t> line_ranks;
        bool ok = true;
        for (const auto& t : truncations_of_degree(z, 3)) {
            const std::size_t r = rank_exact(conditions_matrix(truncate(z, t), 1));
            line_ranks.push_back(r);
            if (r < 3) ok = false;
        }
        if (ok) {
            require(cert, {"no line meets Z in degree >= 3", line_ranks, true});
        } else {
            cert.notes.push_back("some line meets Z in degree >= 3");
        }
    }
    return cert;
}

} // namespace vstrata
