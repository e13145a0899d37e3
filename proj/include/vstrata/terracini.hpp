#ifndef VSTRATA_TERRACINI_HPP
#define VSTRATA_TERRACINI_HPP

#include "vstrata/certificate.hpp"
#include "vstrata/sampling.hpp"
#include "vstrata/schemes.hpp"
#include "vstrata/strata.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vstrata {

enum class JoinKind {
    secant,       // t double points
    tau,          // one (2,3)-point and t-2 double points
    osculating2,  // one 4-fold point and t-1 double points
};
const char* to_string(JoinKind k);
JoinKind parse_join_kind(const std::string& text);

struct TerraciniResult {
    JoinKind kind = JoinKind::secant;
    unsigned t = 0;
    SchemeSpec scheme;
    std::size_t scheme_degree = 0;
    std::size_t h1 = 0;
    // deg Z - 1 - h1(Z, d).
    std::size_t dim = 0;
    // min(N, deg Z - 1), N = C(m+d, m) - 1.
    std::size_t expected = 0;
    // tau only: h1 of the same configuration with a triple point in place of the (2,3)-point.
    std::optional<std::size_t> triple_point_h1;
    // tau only: (m+1)(t-2) + 2m < N.
    std::optional<bool> size_condition;
    Certificate certificate;
};

// Dimension of the join by Terracini's lemma: the degree-d interpolation problem of the
// random infinitesimal scheme above. Throws InputError if t is too small for the kind or
// deg Z > C(m+d, m).
TerraciniResult terracini_dim(unsigned m, unsigned d, JoinKind kind, unsigned t, Sampler& sampler);

// Union of random fat points, multiplicities as given (1 gives a reduced point).
SchemeSpec random_fat_union(unsigned m, const std::vector<unsigned>& multiplicities, Sampler& sampler);

// Dimension of the closure of the union of spans of schemes with the given label, from the
// rank of the parametrization's differential at a random point (curve germs with generic
// coefficients up to each part's length, generic span coefficients).
std::size_t stratum_dim_direct(unsigned m, unsigned d, const StratumLabel& label, Sampler& sampler);

struct GammaEntry {
    std::string name;
    StratumLabel label;
    // Dimension from the rank of the parametrization.
    std::size_t dim_direct = 0;
    // Dimension from an interpolation problem, when one is attached.
    std::optional<std::size_t> dim_interpolation;
    std::size_t codim = 0;
    std::size_t expected_codim = 0;
    std::size_t sigma_dim_formula = 0;
    // h1 of the configuration that proves the expected dimension.
    std::size_t lemma_h1 = 0;
    std::string lemma_scheme;
};

struct GammaReport {
    unsigned m = 0;
    unsigned d = 0;
    unsigned t = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    // dim σ_t from t double points.
    std::size_t secant_dim = 0;
    std::vector<GammaEntry> entries;
    Certificate certificate;
};

std::size_t gamma_alpha(unsigned m, unsigned d);
std::size_t gamma_beta(unsigned m, unsigned d);

// Codimension-1 and codimension-2 loci of σ_t: the tangent label (t <= α-1), two tangents
// (4 <= t <= α-2) and a non-collinear triple (t <= β-1). Requires t >= 3 and at least one of
// the ranges; InputError otherwise.
GammaReport gamma_dims(unsigned m, unsigned d, unsigned t, Sampler& sampler);

} // namespace vstrata

#endif // VSTRATA_TERRACINI_HPP
