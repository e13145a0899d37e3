#include "vstrata/terracini.hpp"

#include "vstrata/errors.hpp"

#include <algorithm>

namespace vstrata {

const char* to_string(JoinKind k)
{
    switch (k) {
    case JoinKind::secant: return "secant";
    case JoinKind::tau: return "tau";
    case JoinKind::osculating2: return "osculating2";
    }
    return "secant";
}

JoinKind parse_join_kind(const std::string& text)
{
    if (text == "secant") return JoinKind::secant;
    if (text == "tau") return JoinKind::tau;
    if (text == "osculating2") return JoinKind::osculating2;
    throw InputError("unknown join kind '" + text + "' (expected secant, tau or osculating2)");
}

SchemeSpec random_fat_union(unsigned m, const std::vector<unsigned>& multiplicities, Sampler& sampler)
{
    if (m < 1) throw InputError("random_fat_union needs m >= 1");
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        SchemeSpec z{m, {}};
        for (unsigned k : multiplicities) {
            if (k == 0) throw InputError("multiplicity must be positive");
            QVector q = sampler.point(m + 1);
            if (k == 1) {
                z.components.emplace_back(Reduced{std::move(q)});
            } else {
                z.components.emplace_back(FatPoint{std::move(q), k});
            }
        }
        try {
            validate(z);
        } catch (const InputError&) {
            continue;
        }
        return z;
    }
    throw ResampleExhausted("random_fat_union: supports kept colliding");
}

namespace {

std::size_t ambient_dim(unsigned m, unsigned d)
{
    return monomial_count(m, d) - 1;
}

QVector independent_direction(const QVector& q, Sampler& sampler)
{
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        QVector v = sampler.point(q.size());
        if (!same_projective_point(q, v)) return v;
    }
    throw ResampleExhausted("could not sample a line direction");
}

} // namespace

TerraciniResult terracini_dim(unsigned m, unsigned d, JoinKind kind, unsigned t, Sampler& sampler)
{
    if (m < 1 || d < 1) throw InputError("terracini_dim needs m >= 1 and d >= 1");
    const std::size_t big_n = ambient_dim(m, d);
    TerraciniResult out;
    out.kind = kind;
    out.t = t;

    switch (kind) {
    case JoinKind::secant:
        if (t < 1) throw InputError("secant join needs t >= 1");
        out.scheme = random_fat_union(m, std::vector<unsigned>(t, 2), sampler);
        break;
    case JoinKind::tau: {
        if (t < 2) throw InputError("tau join needs t >= 2");
        SchemeSpec rest = random_fat_union(m, std::vector<unsigned>(t - 1, 2), sampler);
        const QVector q = std::get<FatPoint>(rest.components.front()).point;
        out.scheme = SchemeSpec{m, {TwoThreePoint{q, independent_direction(q, sampler)}}};
        out.scheme.components.insert(out.scheme.components.end(), rest.components.begin() + 1, rest.components.end());
        break;
    }
    case JoinKind::osculating2: {
        if (t < 1) throw InputError("osculating2 join needs t >= 1");
        std::vector<unsigned> mult(t, 2);
        mult[0] = 4;
        out.scheme = random_fat_union(m, mult, sampler);
        break;
    }
    }

    out.scheme_degree = scheme_degree(out.scheme);
    if (out.scheme_degree > big_n + 1) {
        throw InputError("terracini_dim: scheme degree " + std::to_string(out.scheme_degree) + " exceeds C(m+d, m) = " +
                         std::to_string(big_n + 1));
    }
    const std::size_t cond_rank = rank_exact(conditions_matrix(out.scheme, d));
    out.h1 = out.scheme_degree - cond_rank;
    out.dim = out.scheme_degree - 1 - out.h1;
    out.expected = std::min(big_n, out.scheme_degree - 1);

    Certificate& cert = out.certificate;
    cert.kind = CertificateKind::dimension;
    cert.value = out.dim;
    cert.scheme = out.scheme;
    cert.scope = scope::certified;
    cert.seed = sampler.seed();
    cert.claims.push_back({"h1(Z, d) = " + std::to_string(out.h1), {cond_rank, out.scheme_degree}, true});
    cert.claims.push_back({"dimension = deg(Z) - 1 - h1(Z, d) = " + std::to_string(out.dim),
                           {out.scheme_degree, out.h1},
                           true});

    if (kind == JoinKind::tau) {
        SchemeSpec triple = out.scheme;
        triple.components.front() = FatPoint{support(triple.components.front()), 3};
        const std::size_t deg3 = scheme_degree(triple);
        const std::size_t rank3 = deg3 <= big_n + 1 ? rank_exact(conditions_matrix(triple, d)) : 0;
        if (deg3 <= big_n + 1) {
            out.triple_point_h1 = deg3 - rank3;
            if (*out.triple_point_h1 == 0) {
                if (out.h1 != 0) {
                    throw InternalInconsistency("h1 vanishes with a triple point but not with the (2,3)-point inside it");
                }
                cert.claims.push_back(
                    {"the same configuration with a triple point has h1 = 0, giving the same dimension", {rank3, deg3}, true});
            } else {
                cert.notes.push_back("triple-point cross-check not applicable: its h1 is " +
                                     std::to_string(*out.triple_point_h1));
            }
        } else {
            cert.notes.push_back("triple-point cross-check not applicable: degree exceeds C(m+d, m)");
        }
        out.size_condition = (static_cast<std::size_t>(m) + 1) * (t - 2) + 2 * m < big_n;
        if (!*out.size_condition) cert.notes.push_back("(m+1)(t-2) + 2m < N does not hold");
    }
    return out;
}

std::size_t stratum_dim_direct(unsigned m, unsigned d, const StratumLabel& label, Sampler& sampler)
{
    if (m < 1 || d < 2) throw InputError("stratum_dim_direct needs m >= 1 and d >= 2");
    QMatrix jac(0, monomial_count(m, d));
    std::vector<Form> coordinate;
    for (unsigned i = 0; i <= m; ++i) {
        QVector e(m + 1);
        e[i] = 1;
        coordinate.emplace_back(m, 1, std::move(e));
    }
    for (unsigned p : label.parts()) {
        std::vector<QVector> coeffs;
        for (unsigned j = 0; j < p; ++j) coeffs.push_back(sampler.point(m + 1));
        const QVector a = sampler.nonzero_coefficients(p);
        SchemeSpec germ{m, {}};
        if (p == 1) {
            germ.components.emplace_back(Reduced{coeffs[0]});
        } else {
            if (rank_exact(QMatrix::from_rows({coeffs[0], coeffs[1]}, m + 1)) < 2) {
                coeffs[1] = independent_direction(coeffs[0], sampler);
            }
            germ.components.emplace_back(Jet{coeffs, p});
        }
        // Derivatives along the span coefficients.
        jac.append_rows(span_matrix(germ, d));
        // Derivatives along coordinate i of curve coefficient j: sum_{l>=j} a_l d x_i [t^{l-j}] l(t)^{d-1}.
        const QMatrix lower = span_matrix(germ, d - 1);
        for (unsigned j = 0; j < p; ++j) {
            QVector tail(p);
            for (unsigned l = j; l < p; ++l) tail[l - j] = a[l] * static_cast<long>(d);
            const Form inner(m, d - 1, lower.combine_rows(tail));
            for (unsigned i = 0; i <= m; ++i) jac.append_row(multiply(inner, coordinate[i]).coeffs());
        }
    }
    const std::size_t r = rank_exact(jac);
    if (r == 0) throw InternalInconsistency("parametrization has zero differential");
    return r - 1;
}

std::size_t gamma_alpha(unsigned m, unsigned d)
{
    if (d < 1) throw InputError("gamma_alpha needs d >= 1");
    return monomial_count(m, d - 1) / (m + 1);
}

std::size_t gamma_beta(unsigned m, unsigned d)
{
    if (d < 2) throw InputError("gamma_beta needs d >= 2");
    return monomial_count(m, d - 2) / (m + 1);
}

GammaReport gamma_dims(unsigned m, unsigned d, unsigned t, Sampler& sampler)
{
    if (m < 2 || d < 3) throw InputError("gamma_dims needs m >= 2 and d >= 3");
    if (t < 3) throw InputError("gamma_dims needs t >= 3");
    GammaReport rep;
    rep.m = m;
    rep.d = d;
    rep.t = t;
    rep.alpha = gamma_alpha(m, d);
    rep.beta = gamma_beta(m, d);
    const bool has1 = t + 1 <= rep.alpha;
    const bool has2 = t >= 4 && t + 2 <= rep.alpha;
    const bool has3 = t + 1 <= rep.beta;
    if (!has1 && !has2 && !has3) {
        throw InputError("gamma_dims: t = " + std::to_string(t) + " is outside every range (alpha = " +
                         std::to_string(rep.alpha) + ", beta = " + std::to_string(rep.beta) + ")");
    }

    const auto secant = terracini_dim(m, d, JoinKind::secant, t, sampler);
    rep.secant_dim = secant.dim;
    Certificate& cert = rep.certificate;
    cert.kind = CertificateKind::dimension;
    cert.scope = scope::certified;
    cert.seed = sampler.seed();
    cert.claims.push_back({"dim sigma_t = " + std::to_string(secant.dim) + " from t double points",
                           {secant.scheme_degree, secant.h1},
                           true});

    const bool lemma_triples = d >= 5 && (m > 4 || d >= 6);
    const bool lemma_quadruple = d >= 6 && (m > 4 || d >= 7);

    auto lemma = [&](GammaEntry& e, std::vector<unsigned> mult, const std::string& description, bool hypotheses) {
        e.lemma_scheme = description;
        const SchemeSpec z = random_fat_union(m, mult, sampler);
        const std::size_t deg = scheme_degree(z);
        const std::size_t r = rank_exact(conditions_matrix(z, d));
        e.lemma_h1 = deg - r;
        if (hypotheses) {
            cert.claims.push_back({e.name + ": h1 = 0 for " + description, {r, deg}, e.lemma_h1 == 0});
        } else {
            cert.notes.push_back(e.name + ": d is below the interpolation lemma's range; h1 for " + description + " is " +
                                 std::to_string(e.lemma_h1));
        }
    };
    auto finish = [&](GammaEntry& e, std::size_t expected_codim) {
        e.expected_codim = expected_codim;
        e.sigma_dim_formula = std::min(sigma_stratum_dim(m, e.label), secant.dim);
        e.codim = secant.dim - std::min(secant.dim, e.dim_direct);
        std::vector<std::size_t> ranks{e.dim_direct, secant.dim};
        bool agree = e.dim_direct == e.sigma_dim_formula;
        if (e.dim_interpolation) {
            ranks.push_back(*e.dim_interpolation);
            agree = agree && *e.dim_interpolation == e.dim_direct;
        }
        cert.claims.push_back({e.name + ": dimension " + std::to_string(e.dim_direct) + ", codimension " +
                                   std::to_string(e.codim) + " in sigma_t",
                               ranks,
                               agree && e.codim == expected_codim});
        rep.entries.push_back(std::move(e));
    };

    if (has1) {
        GammaEntry e;
        e.name = "gamma1";
        e.label = tangent_label(t);
        e.dim_direct = stratum_dim_direct(m, d, e.label, sampler);
        e.dim_interpolation = terracini_dim(m, d, JoinKind::tau, t, sampler).dim;
        std::vector<unsigned> mult(rep.alpha, 2);
        mult[0] = 3;
        lemma(e, mult, "1 triple point and alpha - 1 double points", lemma_triples);
        finish(e, 1);
    }
    if (has2) {
        GammaEntry e;
        e.name = "gamma2";
        e.label = two_tangents_label(t);
        e.dim_direct = stratum_dim_direct(m, d, e.label, sampler);
        SchemeSpec z = random_fat_union(m, std::vector<unsigned>(t - 2, 2), sampler);
        for (std::size_t k = 0; k < 2; ++k) {
            const QVector q = support(z.components[k]);
            z.components[k] = TwoThreePoint{q, independent_direction(q, sampler)};
        }
        e.dim_interpolation = scheme_degree(z) - 1 - h1(z, d);
        std::vector<unsigned> mult(rep.alpha, 2);
        mult[0] = mult[1] = 3;
        lemma(e, mult, "2 triple points and alpha - 2 double points", lemma_triples);
        finish(e, 2);
    }
    if (has3) {
        GammaEntry e;
        e.name = "gamma3";
        e.label = triple_label(t);
        e.dim_direct = stratum_dim_direct(m, d, e.label, sampler);
        std::vector<unsigned> mult(rep.beta, 2);
        mult[0] = 4;
        lemma(e, mult, "1 quadruple point and beta - 1 double points", lemma_quadruple);
        finish(e, 2);
    }
    for (const auto& c : cert.claims) {
        if (!c.passed) throw CertificateRefused("claim failed: " + c.statement);
    }
    cert.value = secant.dim;
    return rep;
}

} // namespace vstrata
