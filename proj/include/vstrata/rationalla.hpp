#ifndef VSTRATA_RATIONALLA_HPP
#define VSTRATA_RATIONALLA_HPP

#include "vstrata/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vstrata {

// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    // All rows must have the same length; an empty list gives a 0 x cols matrix.
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const;
    QVector row_vector(std::size_t i) const;

    void append_row(std::span<const Rational> values);
    void append_rows(const QMatrix& other);

    QMatrix transpose() const;
    // Rows [begin, end).
    QMatrix row_block(std::size_t begin, std::size_t end) const;

    // cᵀ·M for a coefficient vector c of length rows().
    QVector combine_rows(std::span<const Rational> coefficients) const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Rank over Q by fraction-free (Bareiss) elimination. Rows are first scaled to
// primitive integer rows; pivots are the first nonzero entry in column order.
std::size_t rank_exact(const QMatrix& m);

// Reduced row echelon form: `rows` holds the rank() nonzero rows, `pivots` their pivot columns.
struct Echelon {
    std::vector<QVector> rows;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};
Echelon reduced_row_echelon(const QMatrix& m);

// Basis of {v : M v = 0}; one vector per free column, with a 1 in that column.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Coefficients c with cᵀ M = v when v lies in the row space of M, nullopt otherwise.
// Throws InputError when v.size() != M.cols().
std::optional<QVector> membership_solve(const QMatrix& m, std::span<const Rational> v);

// Rank of M reduced modulo a prime p > 2^30. Never exceeds rank_exact(M).
// Throws ModularDenominatorError if some denominator vanishes mod p.
std::size_t modular_rank_probe(const QMatrix& m, std::uint64_t prime);

// Primes above 2^30 used by the modular fast path, in the order they are tried.
std::span<const std::uint64_t> probe_primes();

enum class RankMode {
    exact,
    // Accept a modular rank only when it reaches min(rows, cols), which then equals
    // the exact rank; anything else falls back to Bareiss.
    modular_prefilter,
};

std::size_t rank(const QMatrix& m, RankMode mode = RankMode::exact);

// M with v appended as a last row.
QMatrix with_row(const QMatrix& m, std::span<const Rational> v);

} // namespace vstrata

#endif // VSTRATA_RATIONALLA_HPP
