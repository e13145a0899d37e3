#ifndef VSTRATA_FORMS_HPP
#define VSTRATA_FORMS_HPP

#include "vstrata/rational.hpp"
#include "vstrata/rationalla.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace vstrata {

// Exponent vector of a monomial in x_0..x_m.
using MultiIndex = std::vector<unsigned>;

unsigned total_degree(const MultiIndex& alpha);

// Number of degree-d monomials in m+1 variables, C(m+d, m).
std::size_t monomial_count(unsigned m, unsigned d);

// Degree-d monomials in m+1 variables in graded-lex order: exponent vectors in
// decreasing lexicographic order, so x_0^d comes first and x_m^d last.
std::vector<MultiIndex> monomial_basis(unsigned m, unsigned d);

// Position of alpha inside monomial_basis(alpha.size() - 1, |alpha|).
std::size_t monomial_index(const MultiIndex& alpha);

// Homogeneous form of degree d in m+1 variables, coefficients indexed by monomial_basis(m, d).
// A nonzero Form is also a point of P^N, N = C(m+d, m) - 1.
class Form {
public:
    Form() = default;
    Form(unsigned m, unsigned d);
    Form(unsigned m, unsigned d, QVector coeffs);

    unsigned m() const { return m_; }
    unsigned d() const { return d_; }
    const QVector& coeffs() const { return coeffs_; }
    QVector& coeffs() { return coeffs_; }

    const Rational& coeff(const MultiIndex& alpha) const;
    Rational& coeff(const MultiIndex& alpha);

    bool is_zero() const;

    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(const Rational& scalar);

    bool operator==(const Form& other) const = default;

private:
    unsigned m_ = 0;
    unsigned d_ = 0;
    QVector coeffs_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator*(const Rational& s, Form f);

// Nonzero linear form Σ c_i x_i.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(QVector coeffs);

    unsigned m() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const QVector& coeffs() const { return coeffs_; }

    Form as_form() const;

    bool operator==(const LinearForm& other) const = default;

private:
    QVector coeffs_;
};

// L^d through the multinomial expansion. power_expand(L_Q, d) is the Veronese image of Q.
Form power_expand(const LinearForm& l, unsigned d);

Form multiply(const Form& a, const Form& b);

struct FormFactor {
    Form base;
    unsigned exponent = 1;
};

// Π base_i^{exponent_i}. Throws InputError if the total degree differs from target_degree
// or the factors live in different numbers of variables.
Form product_expand(std::span<const FormFactor> factors, unsigned target_degree);

// ∂^alpha F, a form of degree d - |alpha|. Throws InputError if |alpha| > d.
Form apply_diff(const MultiIndex& alpha, const Form& f);

// C(m+a, a) x C(m+d-a, d-a) matrix whose row alpha holds the coefficients of ∂^alpha F.
QMatrix catalecticant_matrix(const Form& f, unsigned a);

// max over 1 <= a <= floor(d/2) of rank(catalecticant_matrix(F, a)); a lower bound on border rank.
std::size_t flattening_rank(const Form& f, RankMode mode = RankMode::exact);

} // namespace vstrata

#endif // VSTRATA_FORMS_HPP
