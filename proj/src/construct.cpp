#include "vstrata/construct.hpp"

#include "vstrata/errors.hpp"
#include "vstrata/sylvester.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace vstrata {

namespace {

// Samples a point that keeps `basis` linearly independent and appends it.
QVector independent_point(Sampler& sampler, std::size_t n, std::vector<QVector>& basis)
{
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        auto v = sampler.point(n);
        basis.push_back(v);
        if (rank_exact(QMatrix::from_rows(basis, n)) == basis.size()) return v;
        basis.pop_back();
    }
    throw ResampleExhausted("could not sample an independent point");
}

std::vector<long> distinct_integers(Sampler& sampler, std::size_t count)
{
    const long long b = sampler.bound();
    if (count > static_cast<std::size_t>(2 * b + 1)) throw InputError("sampling bound too small for distinct values");
    std::set<long> seen;
    std::vector<long> out;
    while (out.size() < count) {
        const long v = static_cast<long>(sampler.uniform(-b, b));
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

void append_claims(Certificate& into, const Certificate& from, const std::string& prefix)
{
    for (auto c : from.claims) {
        c.statement = prefix + c.statement;
        into.claims.push_back(std::move(c));
    }
    for (const auto& n : from.notes) into.notes.push_back(prefix + n);
}

QVector linear_combination(const QVector& a, const Rational& x, const QVector& b, const Rational& y)
{
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = x * a[i] + y * b[i];
    return out;
}

Summand power_summand(const Rational& c, const QVector& linear)
{
    return {c, SummandShape::power, LinearForm(linear), std::nullopt, std::nullopt};
}

// Ranks of every degree-(m+1) subscheme in degree 1; linearly general position means all are m+1.
std::vector<std::size_t> general_position_ranks(const SchemeSpec& z)
{
    std::vector<std::size_t> out;
    for (const auto& t : truncations_of_degree(z, z.m + 1)) out.push_back(rank_exact(conditions_matrix(truncate(z, t), 1)));
    return out;
}

} // namespace

Construction construct_stratum_point(unsigned m, unsigned d, const StratumLabel& label, Sampler& sampler,
                                     const StratumPointOptions& options)
{
    if (m < 1 || d < 1) throw InputError("construct_stratum_point needs m >= 1 and d >= 1");
    if (label.t() == 0) throw InputError("empty stratum label");
    for (unsigned p : label.parts()) {
        if (p > d) throw InputError("label part " + std::to_string(p) + " exceeds d = " + std::to_string(d));
    }
    if (options.non_collinear && m < 2) throw InputError("non-collinear jets need m >= 2");
    const unsigned t = label.t();
    const std::size_t n = m + 1;

    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        SchemeSpec z{m, {}};
        for (unsigned p : label.parts()) {
            std::vector<QVector> frame;
            independent_point(sampler, n, frame);
            if (p == 1) {
                z.components.emplace_back(Reduced{frame[0]});
                continue;
            }
            independent_point(sampler, n, frame);
            if (options.non_collinear && p >= 3) independent_point(sampler, n, frame);
            z.components.emplace_back(Jet{frame, p});
        }
        try {
            validate(z);
        } catch (const InputError&) {
            continue;
        }

        const QMatrix span = span_matrix(z, d);
        const QVector coeffs = sampler.nonzero_coefficients(span.rows());
        Form point(m, d, span.combine_rows(coeffs));
        if (point.is_zero()) continue;

        CertifyOptions certify;
        certify.mode = options.mode;
        certify.uniqueness_max_degree = d >= 1 ? (d - 1) / 2 : 0;
        Certificate cert;
        try {
            cert = certify_border_rank(point, z, d, certify);
        } catch (const CertificateRefused&) {
            continue;
        }
        if (t > (d - 1) / 2) cert.notes.push_back("t exceeds floor((d-1)/2): uniqueness is not asserted");

        std::optional<DecompositionRecord> decomposition;
        if (label.length() == t) {
            std::vector<Summand> powers;
            for (std::size_t i = 0; i < z.components.size(); ++i) powers.push_back(power_summand(coeffs[i], support(z.components[i])));
            decomposition.emplace(point, std::move(powers));
            cert.decomposition = decomposition;
            const std::size_t flat = flattening_rank(point, options.mode);
            if (flat == t) {
                cert.claims.push_back({"P is a sum of t powers with flattening rank t, so r(P) = t", {flat, t}, true});
                cert.rank = t;
            } else {
                cert.notes.push_back("flattening rank " + std::to_string(flat) + " is below t; r(P) <= t only");
            }
        }
        cert.seed = sampler.seed();
        return {std::move(z), std::nullopt, std::move(point), std::move(decomposition), std::move(cert)};
    }
    throw ResampleExhausted("construct_stratum_point: every sample was degenerate");
}

Construction construct_e2plus(unsigned m, unsigned d, unsigned t1, unsigned s1, Sampler& sampler)
{
    if (m < 2) throw InputError("construct_e2plus needs m >= 2");
    if (t1 < 2 || 2 * t1 > d) throw InputError("construct_e2plus needs 2 <= t1 <= d/2");
    if (2 * s1 > d) throw InputError("construct_e2plus needs s1 <= d/2");
    const std::size_t n = m + 1;
    const unsigned r = d + 2 - t1;

    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        std::vector<QVector> frame;
        const QVector a = independent_point(sampler, n, frame);
        const QVector b = independent_point(sampler, n, frame);
        std::vector<QVector> others;
        for (unsigned i = 0; i < s1; ++i) others.push_back(sampler.point(n));

        // The rational normal curve of the line plus the s1 point powers must be independent.
        QMatrix curve_and_points = span_matrix(SchemeSpec{m, {Jet{{a, b}, d + 1}}}, d);
        for (const auto& s : others) curve_and_points.append_row(power_expand(LinearForm(s), d).coeffs());
        const std::size_t pre_rank = rank_exact(curve_and_points);
        if (pre_rank != d + 1 + s1) continue;

        SchemeSpec z{m, {Jet{{a, b}, t1}}};
        for (const auto& s : others) z.components.emplace_back(Reduced{s});
        try {
            validate(z);
        } catch (const InputError&) {
            continue;
        }

        // Binary picture in u = l_A, v = l_B: find sum_j lambda_j (s_j u + v)^d inside the jet span.
        const auto params = distinct_integers(sampler, r);
        QMatrix stacked(0, d + 1);
        for (long s : params) {
            stacked.append_row(power_expand(LinearForm(QVector{Rational(s), Rational(1)}), d).coeffs());
        }
        const QMatrix binary_jet =
            span_matrix(SchemeSpec{1, {Jet{{QVector{Rational(1), Rational(0)}, QVector{Rational(0), Rational(1)}}, t1}}}, d);
        stacked.append_rows(binary_jet);
        const auto left = kernel_basis(stacked.transpose());
        if (left.size() != 1) continue;
        const QVector& w = left[0];
        bool degenerate = w[r + t1 - 1] == 0;
        for (unsigned j = 0; j < r; ++j) degenerate = degenerate || w[j] == 0;
        if (degenerate) continue;

        QVector lambda(w.begin(), w.begin() + r);
        Form binary_part(1, d);
        for (unsigned j = 0; j < r; ++j) binary_part += lambda[j] * Form(1, d, stacked.row_vector(j));

        std::vector<Summand> summands;
        Form point(m, d);
        for (unsigned j = 0; j < r; ++j) {
            summands.push_back(power_summand(lambda[j], linear_combination(a, Rational(params[j]), b, Rational(1))));
            point += summands.back().expand(d);
        }
        const QVector c = sampler.nonzero_coefficients(s1);
        for (unsigned i = 0; i < s1; ++i) {
            summands.push_back(power_summand(c[i], others[i]));
            point += summands.back().expand(d);
        }

        Certificate border;
        try {
            border = certify_border_rank(point, z, d);
        } catch (const CertificateRefused&) {
            continue;
        }

        const auto syl = sylvester_binary(binary_part);
        if (syl.rank != r) {
            throw InternalInconsistency("binary part has Sylvester rank " + std::to_string(syl.rank) + ", expected " +
                                        std::to_string(r));
        }

        DecompositionRecord record(point, std::move(summands));
        const std::size_t size = record.size();
        Certificate cert;
        cert.kind = CertificateKind::rank_upper;
        cert.value = size;
        cert.scheme = z;
        append_claims(cert, border, "");
        cert.claims.push_back({"the rational normal curve of L and the extra points span a space of dimension d + s1",
                               {pre_rank, d + 1 + s1},
                               true});
        cert.claims.push_back({"the binary part has Sylvester rank d + 2 - t1", {syl.rank}, true});
        cert.claims.push_back({"the decomposition with d + 2 + s1 - t1 powers re-expands to P", {size}, record.verify()});
        const std::size_t b_value = border.border_rank.value_or(scheme_degree(z));
        cert.claims.push_back({"b(P) + r(P) <= 3d - 2", {b_value, size, 3 * static_cast<std::size_t>(d) - 2},
                               b_value + size + 2 <= 3 * static_cast<std::size_t>(d)});
        if (!cert.all_passed()) throw CertificateRefused("claim failed: " + cert.claims.back().statement);
        cert.border_rank = border.border_rank;
        cert.scope = border.border_rank ? scope::certified : scope::upper_bound_only;
        cert.notes.push_back("r(P) equals the decomposition size by the theorem; only the upper bound is checked here");
        cert.decomposition = record;
        cert.seed = sampler.seed();
        return {std::move(z), std::nullopt, std::move(point), std::move(record), std::move(cert)};
    }
    throw ResampleExhausted("construct_e2plus: every sample was degenerate");
}

Construction construct_f2(unsigned m, unsigned d, unsigned t, Sampler& sampler)
{
    if (m < 2) throw InputError("construct_f2 needs m >= 2");
    if (d < 5) throw InputError("construct_f2 needs d >= 5");
    if (t < 3 || t > d) throw InputError("construct_f2 needs 3 <= t <= d");
    const std::size_t n = m + 1;

    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        std::vector<QVector> frame;
        const QVector q = independent_point(sampler, n, frame);
        const QVector v = independent_point(sampler, n, frame);
        SchemeSpec z{m, {Jet{{q, v}, 2}}};
        std::vector<QVector> others;
        for (unsigned i = 0; i + 2 < t; ++i) {
            others.push_back(sampler.point(n));
            z.components.emplace_back(Reduced{others.back()});
        }
        try {
            validate(z);
        } catch (const InputError&) {
            continue;
        }
        const auto lgp_ranks = general_position_ranks(z);
        if (std::any_of(lgp_ranks.begin(), lgp_ranks.end(), [&](std::size_t r) { return r < n; })) continue;
        if (h1(z, d) != 0) continue;

        const QVector jet_coeffs = sampler.nonzero_coefficients(2);
        const QVector c = sampler.nonzero_coefficients(t - 2);

        // Binary jet term j = a0 u^d + a1 d u^{d-1} v with u = l_Q, v = l_V.
        QVector jc(d + 1);
        jc[0] = jet_coeffs[0];
        jc[1] = jet_coeffs[1] * static_cast<long>(d);
        const Form jet_term(1, d, jc);

        // d - 1 chosen roots (x_i : 1); the last root is forced by apolarity to j.
        const auto xs = distinct_integers(sampler, d - 1);
        Form base(1, 0, QVector{Rational(1)});
        for (long x : xs) base = multiply(base, Form(1, 1, QVector{Rational(1), Rational(-x)}));
        const QMatrix top = catalecticant_matrix(jet_term, d);
        auto apolar_value = [&](const Form& g) {
            Rational s = 0;
            for (unsigned i = 0; i <= d; ++i) s += g.coeffs()[i] * top(i, 0);
            return s;
        };
        const Rational c1 = apolar_value(multiply(base, Form(1, 1, QVector{Rational(1), Rational(0)})));
        const Rational c2 = apolar_value(multiply(base, Form(1, 1, QVector{Rational(0), Rational(1)})));
        if (c1 == 0 && c2 == 0) continue;
        std::vector<BinaryRoot> roots;
        for (long x : xs) roots.push_back({Rational(x), Rational(1)});
        const BinaryRoot last{c1, c2};
        bool repeated = false;
        for (const auto& rt : roots) repeated = repeated || (last.b != 0 && last.a / last.b == rt.a);
        if (repeated) continue;
        roots.push_back(last);

        QMatrix binary_powers(0, d + 1);
        for (const auto& rt : roots) binary_powers.append_row(power_expand(LinearForm(QVector{rt.a, rt.b}), d).coeffs());
        const auto lambda = membership_solve(binary_powers, jet_term.coeffs());
        if (!lambda) throw InternalInconsistency("jet term is not in the span of its apolar powers");

        std::vector<Summand> summands;
        for (std::size_t k = 0; k < roots.size(); ++k) {
            summands.push_back(power_summand((*lambda)[k], linear_combination(q, roots[k].a, v, roots[k].b)));
        }
        Form point(m, d, span_matrix(SchemeSpec{m, {Jet{{q, v}, 2}}}, d).combine_rows(jet_coeffs));
        for (unsigned i = 0; i + 2 < t; ++i) {
            summands.push_back(power_summand(c[i], others[i]));
            point += summands.back().expand(d);
        }

        Certificate border;
        try {
            border = certify_border_rank(point, z, d);
        } catch (const CertificateRefused&) {
            continue;
        }
        DecompositionRecord record(point, std::move(summands));
        const std::size_t size = record.size();

        Certificate cert;
        cert.kind = CertificateKind::rank_upper;
        cert.value = size;
        cert.scheme = z;
        append_claims(cert, border, "");
        cert.claims.push_back({"Z is in linearly general position", lgp_ranks, true});
        cert.claims.push_back({"the decomposition with d + t - 2 powers re-expands to P", {size}, record.verify()});
        const std::size_t b_value = border.border_rank.value_or(t);
        cert.claims.push_back({"b(P) + r(P) <= 3d - 2", {b_value, size, 3 * static_cast<std::size_t>(d) - 2},
                               b_value + size + 2 <= 3 * static_cast<std::size_t>(d)});
        if (!cert.all_passed()) throw CertificateRefused("claim failed: " + cert.claims.back().statement);
        cert.border_rank = border.border_rank;
        if (m == 2) {
            cert.scope = scope::outside_hypotheses;
            cert.notes.push_back("m = 2 is outside the theorem's hypotheses: r(P) = d + t - 2 is not asserted");
        } else if (2 * t <= d + 1) {
            cert.scope = scope::certified;
        } else {
            cert.scope = scope::upper_bound_only;
            cert.notes.push_back("2t > d + 1: the border rank certificate is an upper bound unless flattening pins it");
        }
        cert.notes.push_back("r(P) equals the decomposition size by the theorem; only the upper bound is checked here");
        cert.decomposition = record;
        cert.seed = sampler.seed();
        return {std::move(z), std::nullopt, std::move(point), std::move(record), std::move(cert)};
    }
    throw ResampleExhausted("construct_f2: every sample was degenerate");
}

Construction construct_conic_double(unsigned d, const StratumLabel& a_parts, const StratumLabel& b_parts,
                                    Sampler& sampler)
{
    if (d < 1) throw InputError("construct_conic_double needs d >= 1");
    if (a_parts.t() + b_parts.t() != 2 * d + 2) {
        throw InputError("construct_conic_double: deg A + deg B = " + std::to_string(a_parts.t() + b_parts.t()) +
                         ", expected 2d + 2 = " + std::to_string(2 * d + 2));
    }
    const unsigned m = 2;

    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        QMatrix g(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) g(i, j) = Rational(sampler.next_int());
        }
        if (rank_exact(g) != 3) continue;
        auto apply = [&](const Rational& x0, const Rational& x1, const Rational& x2) {
            QVector out(3);
            for (std::size_t i = 0; i < 3; ++i) out[i] = g(i, 0) * x0 + g(i, 1) * x1 + g(i, 2) * x2;
            return out;
        };
        const auto params = distinct_integers(sampler, a_parts.length() + b_parts.length());
        std::size_t next = 0;
        // The conic is s -> G (1, s, s^2); its germ at s0 is G(1,s0,s0^2) + t G(0,1,2 s0) + t^2 G(0,0,1).
        auto divisor = [&](const StratumLabel& parts) {
            SchemeSpec z{m, {}};
            for (unsigned p : parts.parts()) {
                const Rational s0(params[next++]);
                QVector c0 = apply(Rational(1), s0, s0 * s0);
                if (p == 1) {
                    z.components.emplace_back(Reduced{std::move(c0)});
                } else {
                    z.components.emplace_back(
                        Jet{{c0, apply(Rational(0), Rational(1), 2 * s0), apply(Rational(0), Rational(0), Rational(1))}, p});
                }
            }
            return z;
        };
        SchemeSpec a = divisor(a_parts);
        SchemeSpec b = divisor(b_parts);
        try {
            validate(a);
            validate(b);
        } catch (const InputError&) {
            continue;
        }

        const std::size_t deg_a = scheme_degree(a);
        const std::size_t deg_b = scheme_degree(b);
        QMatrix stacked = span_matrix(a, d);
        stacked.append_rows(span_matrix(b, d));
        const std::size_t joint = rank_exact(stacked);
        if (deg_a + deg_b != joint + 1) continue;
        const auto left = kernel_basis(stacked.transpose());
        if (left.size() != 1) continue;
        const QVector coeff_a(left[0].begin(), left[0].begin() + static_cast<std::ptrdiff_t>(deg_a));
        Form point(m, d, stacked.row_block(0, deg_a).combine_rows(coeff_a));
        if (point.is_zero()) continue;

        Certificate cert_a;
        Certificate cert_b;
        try {
            cert_a = certify_border_rank(point, a, d);
            cert_b = certify_border_rank(point, b, d);
        } catch (const CertificateRefused&) {
            continue;
        }

        Certificate cert;
        cert.kind = CertificateKind::border_rank;
        cert.value = std::min(deg_a, deg_b);
        cert.scheme = deg_a <= deg_b ? a : b;
        append_claims(cert, cert_a, "A: ");
        append_claims(cert, cert_b, "B: ");
        cert.claims.push_back({"the spans of A and B meet in exactly one point", {joint, deg_a, deg_b}, true});
        const std::size_t flat = flattening_rank(point);
        if (flat > cert.value) throw InternalInconsistency("flattening rank exceeds min(deg A, deg B)");
        if (flat == cert.value) {
            cert.claims.push_back({"flattening rank of P equals min(deg A, deg B), so b(P) = min(deg A, deg B)",
                                   {flat},
                                   true});
            cert.border_rank = flat;
            cert.scope = scope::certified;
        } else {
            cert.scope = scope::upper_bound_only;
            cert.notes.push_back("flattening lower bound " + std::to_string(flat) + " is below min(deg A, deg B)");
        }
        cert.seed = sampler.seed();
        return {std::move(a), std::move(b), std::move(point), std::nullopt, std::move(cert)};
    }
    throw ResampleExhausted("construct_conic_double: every sample was degenerate");
}

} // namespace vstrata
