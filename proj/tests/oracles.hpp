// Slow, obviously-correct reference implementations used only by the tests.
#ifndef VSTRATA_TESTS_ORACLES_HPP
#define VSTRATA_TESTS_ORACLES_HPP

#include "vstrata/forms.hpp"
#include "vstrata/rationalla.hpp"
#include "vstrata/sampling.hpp"
#include "vstrata/schemes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using vstrata::MultiIndex;
using vstrata::QMatrix;
using vstrata::QVector;
using vstrata::Rational;

// Textbook Gaussian elimination on a copy, pivoting on the first nonzero entry from the bottom.
inline std::size_t rank(const QMatrix& m)
{
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < a.size(); ++col) {
        std::size_t piv = a.size();
        for (std::size_t i = a.size(); i-- > r;) {
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Sparse polynomial in any number of variables.
using Poly = std::map<MultiIndex, Rational>;

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            MultiIndex e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Poly power(const Poly& p, unsigned e, std::size_t nvars)
{
    Poly acc{{MultiIndex(nvars, 0), Rational(1)}};
    for (unsigned k = 0; k < e; ++k) acc = mul(acc, p);
    return acc;
}

inline Poly linear(const QVector& c)
{
    Poly p;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        MultiIndex e(c.size(), 0);
        e[i] = 1;
        p[e] = c[i];
    }
    return p;
}

inline QVector to_coeffs(const Poly& p, unsigned m, unsigned d)
{
    QVector out(vstrata::monomial_count(m, d));
    const auto basis = vstrata::monomial_basis(m, d);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto it = p.find(basis[k]);
        if (it != p.end()) out[k] = it->second;
    }
    return out;
}

inline Poly from_coeffs(const QVector& c, unsigned m, unsigned d)
{
    Poly p;
    const auto basis = vstrata::monomial_basis(m, d);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (c[k] != 0) p[basis[k]] = c[k];
    }
    return p;
}

inline Poly differentiate(const Poly& p, std::size_t var)
{
    Poly out;
    for (const auto& [e, c] : p) {
        if (e[var] == 0) continue;
        MultiIndex f = e;
        --f[var];
        out[f] += c * static_cast<long>(e[var]);
    }
    return out;
}

inline Rational evaluate(const Poly& p, const QVector& x)
{
    Rational acc = 0;
    for (const auto& [e, c] : p) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
        acc += term;
    }
    return acc;
}

// f(row0 · x, row1 · x) for a binary form f.
inline vstrata::Form substitute_binary(const vstrata::Form& f, const QVector& row0, const QVector& row1)
{
    const auto p = from_coeffs(f.coeffs(), 1, f.d());
    const auto l0 = linear(row0);
    const auto l1 = linear(row1);
    Poly out;
    for (const auto& [e, c] : p) {
        const auto term = mul(power(l0, e[0], 2), power(l1, e[1], 2));
        for (const auto& [k, v] : term) out[k] += c * v;
    }
    return vstrata::Form(1, f.d(), to_coeffs(out, 1, f.d()));
}

// Rows [t^l] (Σ_j t^j c_j · x)^d for l < length, expanded with t as an extra variable.
inline QMatrix jet_span(const vstrata::Jet& jet, unsigned m, unsigned d)
{
    const std::size_t nv = m + 2;  // x_0..x_m, t
    Poly ell;
    for (std::size_t j = 0; j < jet.curve_coeffs.size(); ++j) {
        for (unsigned i = 0; i <= m; ++i) {
            if (jet.curve_coeffs[j][i] == 0) continue;
            MultiIndex e(nv, 0);
            e[i] = 1;
            e[m + 1] = static_cast<unsigned>(j);
            ell[e] += jet.curve_coeffs[j][i];
        }
    }
    const Poly full = power(ell, d, nv);
    QMatrix out(0, vstrata::monomial_count(m, d));
    for (unsigned l = 0; l < jet.length; ++l) {
        Poly slice;
        for (const auto& [e, c] : full) {
            if (e[m + 1] != l) continue;
            slice[MultiIndex(e.begin(), e.begin() + m + 1)] = c;
        }
        out.append_row(to_coeffs(slice, m, d));
    }
    return out;
}

// Functionals f -> (∂^α f)(Q), |α| = k - 1: their common kernel is the degree-d part of I_Q^k.
inline QMatrix fat_point_conditions(const QVector& q, unsigned k, unsigned d)
{
    const unsigned m = static_cast<unsigned>(q.size()) - 1;
    const auto forms = vstrata::monomial_basis(m, d);
    const auto ops = vstrata::monomial_basis(m, k - 1);
    QMatrix out(ops.size(), forms.size());
    for (std::size_t col = 0; col < forms.size(); ++col) {
        const Poly mono{{forms[col], Rational(1)}};
        for (std::size_t r = 0; r < ops.size(); ++r) {
            Poly p = mono;
            for (unsigned i = 0; i <= m; ++i)
                for (unsigned e = 0; e < ops[r][i]; ++e) p = differentiate(p, i);
            out(r, col) = evaluate(p, q);
        }
    }
    return out;
}

// Partitions of t by brute force over all 2^(t-1) compositions.
inline std::set<std::vector<unsigned>> partitions(unsigned t)
{
    std::set<std::vector<unsigned>> out;
    for (unsigned mask = 0; mask < (1U << (t - 1)); ++mask) {
        std::vector<unsigned> parts;
        unsigned run = 1;
        for (unsigned i = 0; i + 1 < t; ++i) {
            if (mask & (1U << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        std::sort(parts.rbegin(), parts.rend());
        out.insert(parts);
    }
    return out;
}

inline QMatrix random_matrix(vstrata::Sampler& s, std::size_t rows, std::size_t cols, int zero_percent)
{
    QMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (s.uniform(0, 99) < zero_percent) continue;
            const long num = static_cast<long>(s.uniform(-9, 9));
            const long den = static_cast<long>(s.uniform(1, 5));
            out(i, j) = Rational(num, den);
            out(i, j).canonicalize();
        }
    }
    return out;
}

// Random low-rank matrix: product of rows x r and r x cols factors.
inline QMatrix random_low_rank(vstrata::Sampler& s, std::size_t rows, std::size_t cols, std::size_t r)
{
    const QMatrix a = random_matrix(s, rows, r, 0);
    const QMatrix b = random_matrix(s, r, cols, 0);
    QMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
}

} // namespace oracle

#endif // VSTRATA_TESTS_ORACLES_HPP
