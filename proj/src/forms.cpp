#include "vstrata/forms.hpp"

#include "vstrata/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace vstrata {

namespace {

std::size_t small_binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void append_monomials(std::vector<MultiIndex>& out, MultiIndex& prefix, std::size_t pos, unsigned remaining)
{
    if (pos + 1 == prefix.size()) {
        prefix[pos] = remaining;
        out.push_back(prefix);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        prefix[pos] = e;
        append_monomials(out, prefix, pos + 1, remaining - e);
    }
}

} // namespace

unsigned total_degree(const MultiIndex& alpha)
{
    return std::accumulate(alpha.begin(), alpha.end(), 0U);
}

std::size_t monomial_count(unsigned m, unsigned d)
{
    return small_binomial(m + d, m);
}

std::vector<MultiIndex> monomial_basis(unsigned m, unsigned d)
{
    std::vector<MultiIndex> out;
    out.reserve(monomial_count(m, d));
    MultiIndex prefix(m + 1, 0);
    append_monomials(out, prefix, 0, d);
    return out;
}

std::size_t monomial_index(const MultiIndex& alpha)
{
    const std::size_t n = alpha.size();
    std::size_t remaining = total_degree(alpha);
    std::size_t index = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t parts = n - i - 1;
        if (remaining > alpha[i]) {
            index += small_binomial(remaining - alpha[i] - 1 + parts, parts);
        }
        remaining -= alpha[i];
    }
    return index;
}

Form::Form(unsigned m, unsigned d) : m_(m), d_(d), coeffs_(monomial_count(m, d)) {}

Form::Form(unsigned m, unsigned d, QVector coeffs) : m_(m), d_(d), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != monomial_count(m, d)) {
        throw InputError("form of degree " + std::to_string(d) + " in " + std::to_string(m + 1) +
                         " variables needs " + std::to_string(monomial_count(m, d)) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
    }
}

const Rational& Form::coeff(const MultiIndex& alpha) const
{
    return coeffs_.at(monomial_index(alpha));
}

Rational& Form::coeff(const MultiIndex& alpha)
{
    return coeffs_.at(monomial_index(alpha));
}

bool Form::is_zero() const
{
    return is_zero_vector(coeffs_);
}

Form& Form::operator+=(const Form& other)
{
    if (other.m_ != m_ || other.d_ != d_) throw InputError("adding forms of different shape");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Form& Form::operator-=(const Form& other)
{
    if (other.m_ != m_ || other.d_ != d_) throw InputError("subtracting forms of different shape");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Form& Form::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Form operator+(Form a, const Form& b)
{
    a += b;
    return a;
}

Form operator-(Form a, const Form& b)
{
    a -= b;
    return a;
}

Form operator*(const Rational& s, Form f)
{
    f *= s;
    return f;
}

LinearForm::LinearForm(QVector coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty() || is_zero_vector(coeffs_)) {
        throw InputError("linear form must be a nonzero vector");
    }
}

Form LinearForm::as_form() const
{
    return Form(m(), 1, coeffs_);
}

Form power_expand(const LinearForm& l, unsigned d)
{
    const unsigned m = l.m();
    const auto basis = monomial_basis(m, d);
    const Integer dfact = factorial(d);
    // powers[i][e] = c_i^e
    std::vector<QVector> powers(m + 1, QVector(d + 1));
    for (unsigned i = 0; i <= m; ++i) {
        powers[i][0] = 1;
        for (unsigned e = 1; e <= d; ++e) powers[i][e] = powers[i][e - 1] * l.coeffs()[i];
    }
    QVector out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Integer denom = 1;
        Rational value = 1;
        for (unsigned i = 0; i <= m; ++i) {
            const unsigned e = basis[k][i];
            denom *= factorial(e);
            value *= powers[i][e];
            if (value == 0) break;
        }
        if (value != 0) out[k] = value * Rational(dfact / denom);
    }
    return Form(m, d, std::move(out));
}

Form multiply(const Form& a, const Form& b)
{
    if (a.m() != b.m()) throw InputError("multiplying forms in different numbers of variables");
    const unsigned m = a.m();
    const auto ba = monomial_basis(m, a.d());
    const auto bb = monomial_basis(m, b.d());
    Form out(m, a.d() + b.d());
    MultiIndex sum(m + 1);
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b.coeffs()[j] == 0) continue;
            for (unsigned k = 0; k <= m; ++k) sum[k] = ba[i][k] + bb[j][k];
            out.coeffs()[monomial_index(sum)] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return out;
}

Form product_expand(std::span<const FormFactor> factors, unsigned target_degree)
{
    if (factors.empty()) throw InputError("product_expand needs at least one factor");
    const unsigned m = factors.front().base.m();
    unsigned degree = 0;
    for (const auto& f : factors) {
        if (f.base.m() != m) throw InputError("product_expand: factors in different numbers of variables");
        degree += f.base.d() * f.exponent;
    }
    if (degree != target_degree) {
        throw InputError("product_expand: factors have total degree " + std::to_string(degree) +
                         ", expected " + std::to_string(target_degree));
    }
    Form acc(m, 0, QVector{Rational(1)});
    for (const auto& f : factors) {
        for (unsigned e = 0; e < f.exponent; ++e) acc = multiply(acc, f.base);
    }
    return acc;
}

Form apply_diff(const MultiIndex& alpha, const Form& f)
{
    if (alpha.size() != f.m() + 1) throw InputError("apply_diff: multi-index has wrong length");
    const unsigned order = total_degree(alpha);
    if (order > f.d()) throw InputError("apply_diff: derivative order exceeds the degree");
    const auto basis = monomial_basis(f.m(), f.d());
    Form out(f.m(), f.d() - order);
    MultiIndex lowered(f.m() + 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (f.coeffs()[k] == 0) continue;
        Integer falling = 1;
        bool vanishes = false;
        for (unsigned i = 0; i <= f.m(); ++i) {
            if (basis[k][i] < alpha[i]) {
                vanishes = true;
                break;
            }
            lowered[i] = basis[k][i] - alpha[i];
            falling *= factorial(basis[k][i]) / factorial(lowered[i]);
        }
        if (vanishes) continue;
        out.coeffs()[monomial_index(lowered)] += f.coeffs()[k] * Rational(falling);
    }
    return out;
}

QMatrix catalecticant_matrix(const Form& f, unsigned a)
{
    if (a > f.d()) throw InputError("catalecticant order exceeds the degree");
    const auto ops = monomial_basis(f.m(), a);
    QMatrix out(0, monomial_count(f.m(), f.d() - a));
    for (const auto& alpha : ops) {
        out.append_row(apply_diff(alpha, f).coeffs());
    }
    return out;
}

std::size_t flattening_rank(const Form& f, RankMode mode)
{
    std::size_t best = 0;
    for (unsigned a = 1; 2 * a <= f.d(); ++a) {
        best = std::max(best, rank(catalecticant_matrix(f, a), mode));
    }
    if (f.d() == 1) best = f.is_zero() ? 0 : 1;
    return best;
}

} // namespace vstrata
