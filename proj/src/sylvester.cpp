#include "vstrata/sylvester.hpp"

#include "vstrata/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace vstrata {

void trim(UniPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly derivative(const UniPoly& p)
{
    UniPoly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
    trim(out);
    return out;
}

namespace {

std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& b)
{
    if (b.empty()) throw InputError("polynomial division by zero");
    trim(a);
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

void make_monic(UniPoly& p)
{
    if (p.empty()) return;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
}

// Binary form of degree r -> (power of x1 dividing it, dehomogenization g(x, 1)).
std::pair<unsigned, UniPoly> dehomogenize(const Form& g)
{
    const unsigned r = g.d();
    unsigned e = 0;
    while (e <= r && g.coeffs()[e] == 0) ++e;
    UniPoly p(r + 1);
    for (unsigned i = 0; i <= r; ++i) p[r - i] = g.coeffs()[i];
    trim(p);
    return {e, p};
}

Form homogenize(unsigned e, const UniPoly& q)
{
    const unsigned deg = e + static_cast<unsigned>(q.size()) - 1;
    Form out(1, deg);
    for (std::size_t k = 0; k < q.size(); ++k) out.coeffs()[deg - k] = q[k];
    return out;
}

Rational eval_binary(const Form& g, const Rational& a, const Rational& b)
{
    const unsigned r = g.d();
    Rational acc = 0;
    for (unsigned i = 0; i <= r; ++i) {
        if (g.coeffs()[i] == 0) continue;
        Rational term = g.coeffs()[i];
        for (unsigned k = 0; k < r - i; ++k) term *= a;
        for (unsigned k = 0; k < i; ++k) term *= b;
        acc += term;
    }
    return acc;
}

using Complex = std::complex<long double>;

std::vector<Complex> approximate_roots(const UniPoly& p)
{
    const std::size_t n = p.size() - 1;
    // Scale so the largest coefficient has absolute value 1 before leaving exact arithmetic.
    Rational biggest = 0;
    for (const auto& c : p) biggest = std::max(biggest, Rational(abs(c)));
    std::vector<long double> c(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) c[k] = static_cast<long double>(Rational(p[k] / biggest).get_d());
    const long double lead = c[n];
    for (auto& v : c) v /= lead;

    std::vector<Complex> z(n);
    const Complex seed(0.4L, 0.9L);
    Complex acc(1.0L, 0.0L);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = acc;
        acc *= seed;
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex num(c[n], 0);
            for (std::size_t j = n; j-- > 0;) num = num * z[k] + c[j];
            Complex den(1, 0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) den *= (z[k] - z[j]);
            }
            if (std::abs(den) == 0) den = Complex(1e-18L, 0);
            const Complex step = num / den;
            z[k] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-30L) break;
    }
    return z;
}

// Convergents of the continued fraction of x, stopping once denominators get large.
std::vector<Rational> convergents(long double x)
{
    std::vector<Rational> out;
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    long double rest = x;
    for (int step = 0; step < 40; ++step) {
        const long double a_ld = std::floor(rest);
        if (std::fabs(a_ld) > 1e15L) break;
        const Integer a(static_cast<long>(a_ld));
        const Integer h = a * h_prev + h_prev2;
        const Integer k = a * k_prev + k_prev2;
        out.emplace_back(h, k);
        out.back().canonicalize();
        if (k > Integer("1000000000000")) break;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const long double frac = rest - a_ld;
        if (std::fabs(frac) < 1e-14L) break;
        rest = 1.0L / frac;
    }
    return out;
}

std::optional<Rational> find_one_rational_root(const UniPoly& p)
{
    for (const auto& z : approximate_roots(p)) {
        if (std::fabs(z.imag()) > 1e-6L * (1.0L + std::fabs(z.real()))) continue;
        for (const auto& candidate : convergents(z.real())) {
            if (poly_eval(p, candidate) == 0) return candidate;
        }
    }
    return std::nullopt;
}

} // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

UniPoly poly_divide_exact(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw InternalInconsistency("polynomial division left a remainder");
    return q;
}

Rational poly_eval(const UniPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

std::pair<std::vector<Rational>, UniPoly> rational_roots(const UniPoly& poly)
{
    UniPoly p = poly;
    trim(p);
    if (p.empty()) throw InputError("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    while (p.size() > 1 && p[0] == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    while (p.size() > 1) {
        std::optional<Rational> root;
        if (p.size() == 2) {
            root = -p[0] / p[1];
        } else {
            root = find_one_rational_root(p);
        }
        if (!root) break;
        roots.push_back(*root);
        p = poly_divide_exact(p, UniPoly{-*root, Rational(1)});
    }
    std::sort(roots.begin(), roots.end());
    return {roots, p};
}

bool is_square_free_binary(const Form& g)
{
    if (g.m() != 1) throw InputError("binary form expected");
    if (g.is_zero()) return false;
    auto [e, p] = dehomogenize(g);
    if (e >= 2) return false;
    if (p.size() <= 2) return true;
    return poly_gcd(p, derivative(p)).size() == 1;
}

Form binary_gcd(const std::vector<Form>& forms)
{
    std::optional<unsigned> e_min;
    UniPoly acc;
    for (const auto& f : forms) {
        if (f.m() != 1) throw InputError("binary form expected");
        if (f.is_zero()) continue;
        auto [e, p] = dehomogenize(f);
        e_min = e_min ? std::min(*e_min, e) : e;
        acc = acc.empty() ? p : poly_gcd(acc, p);
    }
    if (!e_min) throw InputError("gcd of zero forms");
    make_monic(acc);
    return homogenize(*e_min, acc);
}

std::vector<Form> apolar_kernel(const Form& f, unsigned r)
{
    if (f.m() != 1) throw InputError("apolar_kernel: binary form expected");
    std::vector<Form> out;
    for (auto& v : kernel_basis(catalecticant_matrix(f, r).transpose())) out.emplace_back(1, r, std::move(v));
    return out;
}

namespace {

// All roots of g when they are rational, with multiplicity; nullopt otherwise.
std::optional<std::vector<BinaryRoot>> rational_binary_roots(const Form& g)
{
    auto [e, p] = dehomogenize(g);
    std::vector<BinaryRoot> out;
    for (unsigned k = 0; k < e; ++k) out.push_back({Rational(1), Rational(0)});
    if (p.size() > 1) {
        auto [roots, rest] = rational_roots(p);
        if (rest.size() > 1) return std::nullopt;
        for (const auto& x : roots) out.push_back({x, Rational(1)});
    }
    return out;
}

// Points (j : 1) for j = 0, 1, -1, 2, -2, ... and finally (1 : 0).
std::vector<BinaryRoot> candidate_points(std::size_t count)
{
    std::vector<BinaryRoot> out;
    for (long j = 0; out.size() + 1 < count; ++j) {
        out.push_back({Rational(j), Rational(1)});
        if (j != 0 && out.size() + 1 < count) out.push_back({Rational(-j), Rational(1)});
    }
    out.push_back({Rational(1), Rational(0)});
    return out;
}

// Looks for a square-free member of span(kernel) with only rational roots, by forcing it to
// vanish at dim - 1 chosen points.
std::optional<Form> rational_member(const std::vector<Form>& kernel, const Form& base_locus)
{
    const std::size_t k = kernel.size();
    if (k == 1) {
        if (is_square_free_binary(kernel[0]) && rational_binary_roots(kernel[0])) return kernel[0];
        return std::nullopt;
    }
    std::vector<BinaryRoot> usable;
    for (const auto& pt : candidate_points(k + 24)) {
        if (eval_binary(base_locus, pt.a, pt.b) != 0) usable.push_back(pt);
    }
    for (std::size_t start = 0; start + (k - 1) <= usable.size(); ++start) {
        QMatrix eval(0, k);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            QVector row(k);
            for (std::size_t l = 0; l < k; ++l) row[l] = eval_binary(kernel[l], usable[start + i].a, usable[start + i].b);
            eval.append_row(row);
        }
        const auto sol = kernel_basis(eval);
        if (sol.size() != 1) continue;
        Form g(1, kernel.front().d());
        for (std::size_t l = 0; l < k; ++l) g += sol[0][l] * kernel[l];
        if (is_square_free_binary(g) && rational_binary_roots(g)) return g;
    }
    return std::nullopt;
}

Form any_square_free_member(const std::vector<Form>& kernel)
{
    if (kernel.size() == 1) return kernel[0];
    // A general member of a family without base points of multiplicity > 1 is square-free;
    // walk small deterministic combinations until one is.
    for (long shift = 1; shift < 200; ++shift) {
        Form g(1, kernel.front().d());
        long c = 1;
        for (const auto& k : kernel) {
            g += Rational(c) * k;
            c = (c * shift) % 97 + 1;
        }
        if (is_square_free_binary(g)) return g;
    }
    throw InternalInconsistency("no square-free member found in a family with square-free base locus");
}

} // namespace

SylvesterResult sylvester_binary(const Form& f)
{
    if (f.m() != 1) throw InputError("sylvester_binary needs a binary form (m = 1)");
    if (f.is_zero()) throw InputError("sylvester_binary: zero form");
    const unsigned d = f.d();
    if (d == 0) throw InputError("sylvester_binary: constant form");

    for (unsigned r = 1; r <= d; ++r) {
        const auto kernel = apolar_kernel(f, r);
        if (kernel.empty()) continue;
        const Form base = binary_gcd(kernel);
        const bool square_free = kernel.size() == 1 ? is_square_free_binary(kernel[0])
                                                    : (base.d() == 0 || is_square_free_binary(base));
        if (!square_free) continue;

        SylvesterResult out;
        out.rank = r;
        if (auto g = rational_member(kernel, base)) {
            out.apolar_form = *g;
            const auto roots = *rational_binary_roots(*g);
            QMatrix powers(0, d + 1);
            std::vector<LinearForm> linear;
            for (const auto& root : roots) {
                linear.emplace_back(QVector{root.a, root.b});
                powers.append_row(power_expand(linear.back(), d).coeffs());
            }
            const auto lambda = membership_solve(powers, f.coeffs());
            if (!lambda) throw InternalInconsistency("form is not in the span of the powers of its apolar roots");
            std::vector<Summand> summands;
            for (std::size_t j = 0; j < linear.size(); ++j) {
                summands.push_back({(*lambda)[j], SummandShape::power, linear[j], std::nullopt, std::nullopt});
            }
            out.decomposition.emplace(f, std::move(summands));
            out.field = "Q";
        } else {
            out.apolar_form = any_square_free_member(kernel);
            out.field = "Q(roots of apolar_form)";
        }
        return out;
    }
    throw InternalInconsistency("no square-free apolar form found up to the degree");
}

} // namespace vstrata
