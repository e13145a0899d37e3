#include "vstrata/rationalla.hpp"

#include "vstrata/errors.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace vstrata {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols)
{
    QMatrix m(0, cols);
    for (const auto& r : rows) {
        m.append_row(r);
    }
    return m;
}

std::span<const Rational> QMatrix::row(std::size_t i) const
{
    return {entries_.data() + i * cols_, cols_};
}

QVector QMatrix::row_vector(std::size_t i) const
{
    auto r = row(i);
    return {r.begin(), r.end()};
}

void QMatrix::append_row(std::span<const Rational> values)
{
    if (values.size() != cols_) {
        throw InputError("row length " + std::to_string(values.size()) + " does not match " +
                         std::to_string(cols_) + " columns");
    }
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
}

void QMatrix::append_rows(const QMatrix& other)
{
    if (other.cols_ != cols_) {
        throw InputError("cannot stack matrices with different column counts");
    }
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    rows_ += other.rows_;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

QMatrix QMatrix::row_block(std::size_t begin, std::size_t end) const
{
    QMatrix b(0, cols_);
    for (std::size_t i = begin; i < end; ++i) {
        b.append_row(row(i));
    }
    return b;
}

QVector QMatrix::combine_rows(std::span<const Rational> coefficients) const
{
    if (coefficients.size() != rows_) {
        throw InputError("coefficient count does not match row count");
    }
    QVector out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (coefficients[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            out[j] += coefficients[i] * (*this)(i, j);
        }
    }
    return out;
}

QMatrix with_row(const QMatrix& m, std::span<const Rational> v)
{
    QMatrix out = m;
    out.append_row(v);
    return out;
}

namespace {

using IntRow = std::vector<Integer>;

// Scale each row by the lcm of its denominators, then divide by the content.
std::vector<IntRow> primitive_integer_rows(const QMatrix& m)
{
    std::vector<IntRow> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i)) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        IntRow r(m.cols());
        Integer g = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            r[j] = x.get_num() * (l / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_mpz_t());
        }
        if (g > 1) {
            for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Fraction-free forward elimination in place. Returns pivot columns; the first
// pivots.size() rows of `a` are the echelon rows afterwards.
std::vector<std::size_t> bareiss_forward(std::vector<IntRow>& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    const std::size_t n = a.size();
    Integer prev = 1;
    Integer t1;
    Integer t2;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        if (p != r) std::swap(a[p], a[r]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < n; ++i) {
            const bool lead_zero = a[i][c] == 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                // a[i][j] = (a[i][j]*piv - a[i][c]*a[r][j]) / prev
                mpz_mul(t1.get_mpz_t(), a[i][j].get_mpz_t(), piv.get_mpz_t());
                if (!lead_zero) {
                    mpz_mul(t2.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                }
                mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank_exact(const QMatrix& m)
{
    auto a = primitive_integer_rows(m);
    return bareiss_forward(a, m.cols()).size();
}

Echelon reduced_row_echelon(const QMatrix& m)
{
    auto a = primitive_integer_rows(m);
    Echelon e;
    e.pivots = bareiss_forward(a, m.cols());
    const std::size_t r = e.pivots.size();
    e.rows.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        QVector row(m.cols());
        const Integer& lead = a[i][e.pivots[i]];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (a[i][j] != 0) {
                row[j] = Rational(a[i][j], lead);
                row[j].canonicalize();
            }
        }
        e.rows[i] = std::move(row);
    }
    // Back substitution; each row already has a unit pivot.
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = e.rows[i][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) {
                if (e.rows[k][j] != 0) e.rows[i][j] -= f * e.rows[k][j];
            }
        }
    }
    return e;
}

std::vector<QVector> kernel_basis(const QMatrix& m)
{
    const Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < e.rank(); ++k) {
            v[e.pivots[k]] = -e.rows[k][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> membership_solve(const QMatrix& m, std::span<const Rational> v)
{
    if (v.size() != m.cols()) {
        throw InputError("membership_solve: vector length " + std::to_string(v.size()) +
                         " but matrix has " + std::to_string(m.cols()) + " columns");
    }
    // Solve Mᵀ c = v through the echelon form of [Mᵀ | v].
    QMatrix aug(m.cols(), m.rows() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug(j, i) = m(i, j);
        }
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        aug(j, m.rows()) = v[j];
    }
    const Echelon e = reduced_row_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.rows()) {
        return std::nullopt;
    }
    QVector c(m.rows());
    for (std::size_t k = 0; k < e.rank(); ++k) {
        c[e.pivots[k]] = e.rows[k][m.rows()];
    }
    return c;
}

namespace {

constexpr std::array<std::uint64_t, 4> kProbePrimes = {
    2305843009213693951ULL, // 2^61 - 1
    4294967291ULL,
    2147483647ULL, // 2^31 - 1
    4294967279ULL,
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (e != 0) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

std::uint64_t reduce(const Integer& z, std::uint64_t p)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), Integer(std::to_string(p)).get_mpz_t());
    return std::stoull(r.get_str());
}

} // namespace

std::span<const std::uint64_t> probe_primes()
{
    return kProbePrimes;
}

std::size_t modular_rank_probe(const QMatrix& m, std::uint64_t prime)
{
    if (prime <= (1ULL << 30U)) {
        throw InputError("modular_rank_probe: prime must exceed 2^30");
    }
    if (mpz_probab_prime_p(Integer(std::to_string(prime)).get_mpz_t(), 25) == 0) {
        throw InputError("modular_rank_probe: " + std::to_string(prime) + " is not prime");
    }
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& x = m(i, j);
            if (x == 0) continue;
            const std::uint64_t den = reduce(x.get_den(), prime);
            if (den == 0) {
                throw ModularDenominatorError("denominator divisible by " + std::to_string(prime));
            }
            a[i * cols + j] = mulmod(reduce(x.get_num(), prime), powmod(den, prime - 2, prime), prime);
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        }
        const std::uint64_t inv = powmod(a[r * cols + c], prime - 2, prime);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = mulmod(a[i * cols + c], inv, prime);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = mulmod(f, a[r * cols + j], prime);
                std::uint64_t& dst = a[i * cols + j];
                dst = dst >= sub ? dst - sub : dst + (prime - sub);
            }
        }
        ++r;
    }
    return r;
}

std::size_t rank(const QMatrix& m, RankMode mode)
{
    if (mode == RankMode::modular_prefilter) {
        const std::size_t full = std::min(m.rows(), m.cols());
        for (auto p : probe_primes()) {
            try {
                if (modular_rank_probe(m, p) == full) return full;
                break;
            } catch (const ModularDenominatorError&) {
                continue;
            }
        }
    }
    return rank_exact(m);
}

} // namespace vstrata
