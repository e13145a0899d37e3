// One PASS/FAIL line per acceptance criterion. Exit status 1 if any line fails.
#include "oracles.hpp"

#include "vstrata/construct.hpp"
#include "vstrata/errors.hpp"
#include "vstrata/strata.hpp"
#include "vstrata/sylvester.hpp"
#include "vstrata/terracini.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace vstrata;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            if (passed) detail << "first failure: " << what;
            passed = false;
        }
    }
};

bool distinct_support(const SchemeSpec& z, const QVector& p)
{
    for (const auto& c : z.components)
        if (same_projective_point(support(c), p)) return false;
    return true;
}

// Mixed reduced / jet / fat scheme of degree at most max_degree with pairwise distinct supports.
SchemeSpec mixed_scheme(Sampler& s, unsigned m, std::size_t max_degree)
{
    for (;;) {
        SchemeSpec z{m, {}};
        std::size_t deg = 0;
        const auto target = static_cast<std::size_t>(s.uniform(1, static_cast<long long>(max_degree)));
        while (deg < target) {
            const auto room = target - deg;
            const QVector p = s.point(m + 1);
            if (!distinct_support(z, p)) continue;
            const auto kind = s.uniform(0, 2);
            if (kind == 2 && room >= m + 1) {
                z.components.emplace_back(FatPoint{p, 2});
            } else if (kind == 1 && room >= 2) {
                const auto len = static_cast<unsigned>(s.uniform(2, static_cast<long long>(std::min<std::size_t>(room, 4))));
                std::vector<QVector> coeffs{p, s.point(m + 1)};
                if (s.uniform(0, 1) == 1) coeffs.push_back(s.point(m + 1));
                z.components.emplace_back(Jet{coeffs, len});
            } else {
                z.components.emplace_back(Reduced{p});
            }
            deg = scheme_degree(z);
        }
        try {
            validate(z);
            return z;
        } catch (const InputError&) {
        }
    }
}

SchemeSpec collinear_points(unsigned m, unsigned count)
{
    SchemeSpec z{m, {}};
    for (unsigned i = 0; i < count; ++i) {
        QVector p(m + 1);
        p[0] = 1;
        p[1] = i;
        z.components.emplace_back(Reduced{p});
    }
    return z;
}

std::size_t product_minus_one(const SchemeSpec& z)
{
    std::size_t prod = 1;
    for (auto k : curvilinear_lengths(z)) prod *= k + 1;
    return prod - 1;
}

const Claim* find_claim(const Certificate& c, const std::string& fragment)
{
    for (const auto& claim : c.claims)
        if (claim.statement.find(fragment) != std::string::npos) return &claim;
    return nullptr;
}

void independence(Outcome& o)
{
    const std::pair<unsigned, unsigned> cases[] = {{2, 4}, {2, 6}, {3, 5}};
    Sampler s(101);
    std::size_t checked = 0;
    for (const auto& [m, d] : cases) {
        for (int i = 0; i < 50; ++i) {
            const auto z = mixed_scheme(s, m, d + 1);
            o.expect(h1(z, d) == 0, "h1 != 0 for a scheme of degree " + std::to_string(scheme_degree(z)));
            ++checked;
        }
        o.expect(h1(collinear_points(m, d + 2), d) == 1, "d+2 collinear points do not give h1 = 1");
    }
    o.detail << (o.passed ? "" : "; ") << checked << " random schemes, 3 collinear configurations";
}

void stratum_formulas(Outcome& o)
{
    std::size_t n = 0;
    for (unsigned m = 2; m <= 3; ++m) {
        for (unsigned t = 1; t <= 6; ++t) {
            for (const auto& l : partitions_enumerate(t, false)) {
                const auto s = l.length();
                const auto h = hilb_stratum_dim(m, l);
                const auto sig = sigma_stratum_dim(m, l);
                o.expect(h.dim + (t - 1) == sig, l.to_string() + " violates hilb + (t-1) = sigma");
                o.expect(h.dim == m * t + s - t, l.to_string() + " hilb closed form");
                o.expect(sig == (m + 1) * t - 1 - t + s, l.to_string() + " sigma closed form");
                ++n;
            }
        }
    }
    o.detail << (o.passed ? "" : "; ") << n << " labels";
}

void triple_and_quadruple_lemmas(Outcome& o)
{
    Sampler s(303);
    const auto alpha = gamma_alpha(2, 6);
    o.expect(alpha == 7, "alpha(2,6) = " + std::to_string(alpha));
    for (unsigned i = 1; i <= 2; ++i) {
        for (int k = 0; k < 20; ++k) {
            std::vector<unsigned> mults(i, 3);
            mults.insert(mults.end(), 7 - i, 2);
            o.expect(h1(random_fat_union(2, mults, s), 6) == 0,
                     std::to_string(i) + " triple + " + std::to_string(7 - i) + " doubles, h1 != 0");
        }
    }
    std::size_t worst = 0;
    for (int k = 0; k < 20; ++k) {
        std::vector<unsigned> mults{4};
        mults.insert(mults.end(), 8, 2);
        const auto h = h1(random_fat_union(2, mults, s), 7);
        worst = std::max(worst, h);
        o.expect(h == 0, "4Q + 8 doubles in degree 7, h1 = " + std::to_string(h));
    }
    o.detail << (o.passed ? "" : "; ") << "alpha(2,6) = " << alpha << ", beta(2,7) from the floor formula = "
             << gamma_beta(2, 7) << ", max h1 over 4Q + 8 doubles = " << worst;
}

void codimension_loci(Outcome& o)
{
    Sampler s(404);
    const auto tau = terracini_dim(2, 6, JoinKind::tau, 3, s);
    o.expect(tau.dim == 7, "tau dim " + std::to_string(tau.dim));
    o.expect(tau.dim == 3 * (2 + 1) - 2, "tau dim differs from t(m+1)-2");
    const auto sec = terracini_dim(2, 6, JoinKind::secant, 3, s);
    o.expect(sec.dim == 8 && sec.dim - tau.dim == 1, "codim of the tau locus is not 1");
    o.expect(tau.triple_point_h1.has_value() && *tau.triple_point_h1 == 0 && tau.h1 == 0,
             "(2,3)-point and triple-point computations disagree");

    const auto g2 = gamma_dims(2, 6, 4, s);
    bool seen2 = false;
    for (const auto& e : g2.entries) {
        if (!(e.label == two_tangents_label(4))) continue;
        seen2 = true;
        o.expect(e.codim == 2, "Gamma2 codim " + std::to_string(e.codim));
        o.expect(e.dim_direct == sigma_stratum_dim(2, e.label), "Gamma2 dim differs from the stratum formula");
        o.expect(e.dim_direct == 9, "Gamma2 dim " + std::to_string(e.dim_direct));
    }
    o.expect(seen2, "no (2,2) entry at (2,6,4)");

    const auto g3 = gamma_dims(2, 7, 3, s);
    bool seen3 = false;
    for (const auto& e : g3.entries) {
        if (!(e.label == triple_label(3))) continue;
        seen3 = true;
        o.expect(e.codim == 2, "Gamma3 codim " + std::to_string(e.codim));
        o.expect(e.dim_direct == sigma_stratum_dim(2, e.label), "Gamma3 dim differs from the stratum formula");
        o.expect(e.dim_direct == 6, "Gamma3 dim " + std::to_string(e.dim_direct));
    }
    o.expect(seen3, "no (3) entry at (2,7,3)");
    o.expect(g2.certificate.all_passed() && g3.certificate.all_passed(), "gamma certificate claim failed");
    o.detail << (o.passed ? "" : "; ") << "tau 7 / secant 8, Gamma2 9 / 11, Gamma3 6 / 8";
}

void uniqueness_regime(Outcome& o)
{
    std::size_t runs = 0;
    for (const auto& label : partitions_enumerate(4, false)) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Sampler s(seed);
            const auto c = construct_stratum_point(2, 9, label, s);
            const auto& cert = c.certificate;
            const std::string tag = label.to_string() + " seed " + std::to_string(seed);
            o.expect(cert.all_passed(), tag + ": claim failed");
            o.expect(cert.scope == scope::unique_scheme, tag + ": scope " + cert.scope);
            const Claim* excl = find_claim(cert, "proper subschemes");
            o.expect(excl && excl->ranks.size() == 2 * product_minus_one(c.scheme), tag + ": exclusion not exhaustive");
            o.expect(flattening_rank(c.point) == 4, tag + ": flattening rank");
            o.expect(cert.border_rank && *cert.border_rank == 4, tag + ": border rank");
            ++runs;
        }
    }
    o.detail << (o.passed ? "" : "; ") << runs << " constructions";
}

void jet_on_a_line(Outcome& o)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Sampler s(seed);
        const auto c = construct_e2plus(2, 6, 2, 1, s);
        const std::string tag = "seed " + std::to_string(seed);
        o.expect(c.decomposition && c.decomposition->size() == 7, tag + ": decomposition size");
        o.expect(c.decomposition && c.decomposition->verify() && c.decomposition->target() == c.point,
                 tag + ": re-expansion");
        o.expect(c.certificate.border_rank && *c.certificate.border_rank == 3, tag + ": b != 3");
        o.expect(c.certificate.all_passed(), tag + ": claim failed");
    }
    Sampler s(77);
    const auto pure = construct_e2plus(2, 6, 2, 0, s);
    o.expect(pure.decomposition && pure.decomposition->size() == 6, "pure curve decomposition size");
    const Claim* syl = find_claim(pure.certificate, "Sylvester rank");
    o.expect(syl && syl->ranks.size() == 1 && syl->ranks[0] == 6, "pure curve Sylvester rank != 6");
    Form binary(1, 6);
    binary.coeff({5, 1}) = 1;
    o.expect(sylvester_binary(binary).rank == 6, "rank of x0^5 x1 != 6");
    o.detail << (o.passed ? "" : "; ") << "10 seeds, size 7, b = 3; pure case rank 6";
}

void tangent_plus_points(Outcome& o)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Sampler s(seed);
        const auto c = construct_f2(3, 5, 3, s);
        const std::string tag = "seed " + std::to_string(seed);
        o.expect(c.decomposition && c.decomposition->size() == 6, tag + ": decomposition size");
        bool member = false;
        if (c.decomposition) {
            QMatrix powers(0, c.point.coeffs().size());
            for (const auto& sm : c.decomposition->summands()) powers.append_row(sm.expand(5).coeffs());
            member = membership_solve(powers, c.point.coeffs()).has_value();
        }
        o.expect(member, tag + ": P not in the span of the decomposition");
        o.expect(c.certificate.border_rank && *c.certificate.border_rank == 3, tag + ": b != 3");
        const std::size_t r = c.decomposition ? c.decomposition->size() : 0;
        o.expect(3 + r == 9 && 3 + r <= 3 * 5 - 2, tag + ": budget");
        o.expect(c.certificate.all_passed(), tag + ": claim failed");
    }
    o.detail << (o.passed ? "" : "; ") << "10 seeds, size 6, b = 3, b + r = 9 <= 13";
}

void conic_pair(Outcome& o)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Sampler s(seed);
        const auto c = construct_conic_double(5, StratumLabel({6}), StratumLabel({6}), s);
        const std::string tag = "seed " + std::to_string(seed);
        if (!c.other_scheme) {
            o.expect(false, tag + ": missing second scheme");
            continue;
        }
        QMatrix stacked = span_matrix(c.scheme, 5);
        stacked.append_rows(span_matrix(*c.other_scheme, 5));
        const auto joint = rank_exact(stacked);
        o.expect(joint == 11, tag + ": Grassmann intersection dimension " + std::to_string(11 - static_cast<long>(joint)));
        for (const auto* z : {&c.scheme, &*c.other_scheme}) {
            o.expect(membership_ranks(span_matrix(*z, 5), c.point.coeffs()).member(), tag + ": P outside a span");
            for (const auto& sub : proper_subscheme_spans(*z, 5))
                o.expect(!membership_ranks(sub, c.point.coeffs()).member(), tag + ": P in a proper subspan");
        }
        o.expect(c.certificate.all_passed(), tag + ": claim failed");
    }
    o.detail << (o.passed ? "" : "; ") << "10 seeds, spans meet in one point";
}

void binary_ranks(Outcome& o)
{
    Sampler s(909, 9);
    std::size_t subs = 0;
    for (unsigned d = 3; d <= 8; ++d) {
        Form f(1, d);
        f.coeff({d - 1, 1}) = 1;
        o.expect(sylvester_binary(f).rank == d, "rank(x0^" + std::to_string(d - 1) + " x1)");
        int done = 0;
        while (done < 20) {
            const QVector r0 = s.point(2);
            const QVector r1 = s.point(2);
            if (r0[0] * r1[1] - r0[1] * r1[0] == 0) continue;
            const auto moved = sylvester_binary(oracle::substitute_binary(f, r0, r1));
            o.expect(moved.rank == d, "rank changed under substitution at d = " + std::to_string(d));
            if (moved.decomposition) o.expect(moved.decomposition->verify(), "decomposition does not re-expand");
            ++done;
            ++subs;
        }
    }
    o.detail << (o.passed ? "" : "; ") << "d = 3..8, " << subs << " substitutions";
}

void property_suites(Outcome& o)
{
    Sampler s(1010);
    // Castelnuovo on random residual splits: fat and reduced points, some forced onto H.
    for (int k = 0; k < 100; ++k) {
        const unsigned m = 2 + k % 2;
        const unsigned d = 3 + k % 4;
        QVector hc = s.point(m + 1);
        std::size_t pivot = 0;
        while (hc[pivot] == 0) ++pivot;
        SchemeSpec z{m, {}};
        const auto count = static_cast<int>(s.uniform(1, 5));
        for (int i = 0; i < count; ++i) {
            QVector p = s.point(m + 1);
            if (s.uniform(0, 1) == 1) {
                // project onto H along the pivot coordinate
                Rational dot = 0;
                for (unsigned j = 0; j <= m; ++j) dot += hc[j] * p[j];
                p[pivot] -= dot / hc[pivot];
                if (is_zero_vector(p)) continue;
            }
            if (!distinct_support(z, p)) continue;
            const auto mult = static_cast<unsigned>(s.uniform(1, 3));
            if (mult == 1) {
                z.components.emplace_back(Reduced{p});
            } else {
                z.components.emplace_back(FatPoint{p, mult});
            }
        }
        if (z.components.empty()) continue;
        o.expect(castelnuovo_check(z, Hyperplane{hc}, d), "Castelnuovo inequality failed");
    }
    for (int k = 0; k < 100; ++k) {
        const unsigned m = 2 + k % 2;
        const Jet j{{s.point(m + 1), s.point(m + 1), s.point(m + 1)}, static_cast<unsigned>(2 + k % 4)};
        if (same_projective_point(j.curve_coeffs[0], j.curve_coeffs[1])) continue;
        const Rational u(static_cast<long>(s.next_nonzero().get_si()), static_cast<unsigned long>(s.uniform(1, 5)));
        const Rational v(static_cast<long>(s.next_int().get_si()), static_cast<unsigned long>(s.uniform(1, 5)));
        const Jet r = reparametrize(j, u, v);
        const unsigned d = 3 + k % 3;
        const QMatrix a = span_matrix(SchemeSpec{m, {j}}, d);
        QMatrix both = a;
        both.append_rows(span_matrix(SchemeSpec{m, {r}}, d));
        o.expect(rank_exact(both) == rank_exact(a), "reparametrized jet changed its span");
    }
    for (unsigned t = 1; t <= 8; ++t) {
        const auto all = partitions_enumerate(t, false);
        auto le = [](const StratumLabel& a, const StratumLabel& b) {
            const auto r = dominance_compare(a, b);
            return r == Dominance::less_equal || r == Dominance::equal;
        };
        for (const auto& a : all) {
            o.expect(le(a, a), "reflexivity");
            for (const auto& b : all) {
                if (le(a, b) && le(b, a)) o.expect(a == b, "antisymmetry");
                for (const auto& c : all)
                    if (le(a, b) && le(b, c)) o.expect(le(a, c), "transitivity");
            }
        }
    }
    for (int k = 0; k < 100; ++k) {
        const auto rows = static_cast<std::size_t>(s.uniform(1, 30));
        const auto cols = static_cast<std::size_t>(s.uniform(1, 30));
        const QMatrix mat = k % 2 == 0
                                ? oracle::random_matrix(s, rows, cols, static_cast<int>(s.uniform(0, 90)))
                                : oracle::random_low_rank(s, rows, cols, static_cast<std::size_t>(s.uniform(1, 6)));
        o.expect(rank_exact(mat) == oracle::rank(mat), "Bareiss rank differs from naive elimination");
    }
    o.detail << (o.passed ? "" : "; ") << "100 splits, 100 jets, t <= 8, 100 matrices";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"independence of schemes of degree <= d+1", independence},
        {"stratum dimension formulas", stratum_formulas},
        {"triple and quadruple point interpolation", triple_and_quadruple_lemmas},
        {"codimension 1 and 2 loci", codimension_loci},
        {"uniqueness regime at (2,9,4)", uniqueness_regime},
        {"jet on a line plus points at (2,6,2,1)", jet_on_a_line},
        {"tangent vector plus points at (3,5,3)", tangent_plus_points},
        {"two divisors on a conic at d = 5", conic_pair},
        {"binary ranks", binary_ranks},
        {"property suites", property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail << " exception: " << e.what();
        }
        const auto secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.passed) ++failures;
        std::cout << (o.passed ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " ("
                  << o.detail.str() << ", " << std::fixed << std::setprecision(1) << secs << " s)\n";
    }
    return failures == 0 ? 0 : 1;
}
