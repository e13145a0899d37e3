#ifndef VSTRATA_SCHEMES_HPP
#define VSTRATA_SCHEMES_HPP

#include "vstrata/forms.hpp"
#include "vstrata/rational.hpp"
#include "vstrata/rationalla.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace vstrata {

// A single reduced point.
struct Reduced {
    QVector point;
    bool operator==(const Reduced&) const = default;
};

// Length-k truncation of the curve germ c(t) = Σ_j curve_coeffs[j] t^j at c(0).
// Coefficients beyond the list are zero, so two entries describe a germ along a line.
struct Jet {
    std::vector<QVector> curve_coeffs;
    unsigned length = 2;
    bool operator==(const Jet&) const = default;
};

// kQ, the scheme cut out by the k-th power of the ideal of Q.
struct FatPoint {
    QVector point;
    unsigned multiplicity = 2;
    bool operator==(const FatPoint&) const = default;
};

// Z(Q, L) with ideal I_Q^3 + I_L^2, L the line through Q in direction line_direction.
struct TwoThreePoint {
    QVector point;
    QVector line_direction;
    bool operator==(const TwoThreePoint&) const = default;
};

using ComponentSpec = std::variant<Reduced, Jet, FatPoint, TwoThreePoint>;

// Zero-dimensional subscheme of P^m as a disjoint union of components.
// Operations accept an empty component list (the empty scheme); validate() does not.
struct SchemeSpec {
    unsigned m = 0;
    std::vector<ComponentSpec> components;
    bool operator==(const SchemeSpec&) const = default;
};

struct Hyperplane {
    QVector coeffs;
};

const char* kind_name(const ComponentSpec& c);
const QVector& support(const ComponentSpec& c);
bool is_curvilinear(const ComponentSpec& c);
bool is_curvilinear(const SchemeSpec& z);

// True when u and v are nonzero and proportional.
bool same_projective_point(const QVector& u, const QVector& v);

// Enforces the invariants (vector lengths, nonzero supports, smooth jets, direction off the
// support, pairwise distinct supports, at least one component). Throws InputError naming
// the offending component index.
void validate(const SchemeSpec& z);

std::size_t component_degree(unsigned m, const ComponentSpec& c);
std::size_t scheme_degree(const SchemeSpec& z);

// Rows spanning <ν_d(Z)> in Form coordinates. Reduced and Jet components only.
QMatrix span_matrix(const SchemeSpec& z, unsigned d);

// Rows are linear functionals on degree-d Forms whose common kernel is H^0(I_Z(d)).
QMatrix conditions_matrix(const SchemeSpec& z, unsigned d);

// deg(Z) - rank(conditions_matrix(Z, d)).
std::size_t h1(const SchemeSpec& z, unsigned d, RankMode mode = RankMode::exact);

// Per-component lengths of a curvilinear scheme (1 for Reduced, k for a Jet).
std::vector<unsigned> curvilinear_lengths(const SchemeSpec& z);

// The subscheme keeping the first lengths[i] steps of component i (0 drops it,
// 1 keeps only the support point).
SchemeSpec truncate(const SchemeSpec& z, const std::vector<unsigned>& lengths);

// All truncation vectors except the full one, in odometer order (first component fastest).
std::vector<std::vector<unsigned>> proper_truncations(const SchemeSpec& z);

// Span matrix of every proper subscheme, aligned with proper_truncations(). Curvilinear only.
std::vector<QMatrix> proper_subscheme_spans(const SchemeSpec& z, unsigned d);

// Truncation vectors of total degree exactly k.
std::vector<std::vector<unsigned>> truncations_of_degree(const SchemeSpec& z, std::size_t k);

struct ResidualTrace {
    SchemeSpec residual;
    // Z ∩ H written in the coordinates `hyperplane_basis` of H ≅ P^{m-1}.
    SchemeSpec trace;
    std::vector<QVector> hyperplane_basis;
};

// Res_H(Z) and Z ∩ H for schemes made of Reduced and FatPoint components (m >= 2).
ResidualTrace residual_trace_split(const SchemeSpec& z, const Hyperplane& h);

// h1(Z, d) <= h1(Res_H Z, d - 1) + h1_H(Z ∩ H, d). Requires d >= 1.
bool castelnuovo_check(const SchemeSpec& z, const Hyperplane& h, unsigned d);

// Every hyperplane meets Z in degree <= m (checked on every degree-(m+1) subscheme).
bool lgp_check(const SchemeSpec& z);

// No line meets Z in degree >= 3: every degree-3 subscheme spans a plane.
bool at_most_two_on_lines(const SchemeSpec& z);

// Jet whose curve is c(u t + v t^2), truncated to the jet's length. Requires u != 0.
Jet reparametrize(const Jet& jet, const Rational& u, const Rational& v);

} // namespace vstrata

#endif // VSTRATA_SCHEMES_HPP
