#ifndef VSTRATA_SYLVESTER_HPP
#define VSTRATA_SYLVESTER_HPP

#include "vstrata/certificate.hpp"
#include "vstrata/forms.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vstrata {

// Univariate polynomial over Q, coefficients from the constant term up.
using UniPoly = std::vector<Rational>;

void trim(UniPoly& p);
UniPoly derivative(const UniPoly& p);
UniPoly poly_gcd(UniPoly a, UniPoly b);
// Exact division; throws InternalInconsistency if the remainder is nonzero.
UniPoly poly_divide_exact(const UniPoly& a, const UniPoly& b);
Rational poly_eval(const UniPoly& p, const Rational& x);
// All rational roots with multiplicity, found by floating-point root approximation and
// continued-fraction reconstruction, every candidate checked exactly. Returns the roots and
// the cofactor that is left once they are divided out.
std::pair<std::vector<Rational>, UniPoly> rational_roots(const UniPoly& p);

// Binary forms are Forms with m = 1; coefficient i belongs to x0^{r-i} x1^i.
bool is_square_free_binary(const Form& g);
// gcd of binary forms, up to a scalar; zero forms are ignored.
Form binary_gcd(const std::vector<Form>& forms);

// Degree-r forms g with g(∂) f = 0, as a basis of the kernel of the transposed catalecticant.
std::vector<Form> apolar_kernel(const Form& f, unsigned r);

// A root (a : b) of an apolar form corresponds to the linear form a x0 + b x1.
struct BinaryRoot {
    Rational a;
    Rational b;
};

struct SylvesterResult {
    std::size_t rank = 0;
    // The square-free apolar form of degree rank that was selected.
    Form apolar_form;
    // Explicit decomposition when every root of apolar_form is rational.
    std::optional<DecompositionRecord> decomposition;
    // "Q" when the decomposition is rational, otherwise a description of the extension
    // generated by the roots of apolar_form.
    std::string field;
};

// Waring rank of a nonzero binary form: least r such that the apolar forms of degree r
// include a square-free one. Throws InputError for the zero form or m != 1.
SylvesterResult sylvester_binary(const Form& f);

} // namespace vstrata

#endif // VSTRATA_SYLVESTER_HPP
