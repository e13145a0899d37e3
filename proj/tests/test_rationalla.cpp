#include "oracles.hpp"

#include "vstrata/errors.hpp"
#include "vstrata/rationalla.hpp"
#include "vstrata/sampling.hpp"

#include <doctest.h>

using namespace vstrata;

TEST_CASE("canonical rational strings")
{
    CHECK(to_canonical_string(Rational(3)) == "3/1");
    CHECK(to_canonical_string(Rational(-4, 6)) == "-2/3");
    CHECK(parse_rational("6/-4") == Rational(-3, 2));
    CHECK(to_canonical_string(parse_rational("-10/4")) == "-5/2");
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("rank of small matrices")
{
    CHECK(rank_exact(QMatrix::identity(3)) == 3);
    CHECK(rank_exact(QMatrix(4, 4)) == 0);
    QMatrix v(5, 5);
    for (int i = 0; i < 5; ++i) {
        Rational p = 1;
        for (int j = 0; j < 5; ++j) {
            v(i, j) = p;
            p *= i + 1;
        }
    }
    CHECK(rank_exact(v) == 5);
    CHECK(oracle::rank(v) == 5);
    CHECK(rank_exact(QMatrix(0, 7)) == 0);
    CHECK(rank_exact(QMatrix(3, 0)) == 0);
}

TEST_CASE("kernel basis")
{
    CHECK(kernel_basis(QMatrix::identity(3)).empty());
    CHECK(kernel_basis(QMatrix(2, 3)).size() == 3);
    const QMatrix ones = QMatrix::from_rows({{1, 1, 1}}, 3);
    const auto k = kernel_basis(ones);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);
}

TEST_CASE("membership_solve")
{
    const auto id = QMatrix::identity(3);
    auto c = membership_solve(id, QVector{1, 0, 0});
    REQUIRE(c);
    CHECK(*c == QVector{1, 0, 0});

    const QMatrix single = QMatrix::from_rows({{2, -1, 5}}, 3);
    c = membership_solve(single, QVector{6, -3, 15});
    REQUIRE(c);
    CHECK((*c)[0] == 3);

    Sampler s(7);
    const QVector r1 = s.point(6);
    const QVector r2 = s.point(6);
    QVector v(6);
    for (int i = 0; i < 6; ++i) v[i] = 2 * r1[i] - 5 * r2[i];
    c = membership_solve(QMatrix::from_rows({r1, r2}, 6), v);
    REQUIRE(c);
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == -5);

    CHECK_FALSE(membership_solve(single, QVector{1, 0, 0}));
    CHECK_THROWS_AS(membership_solve(single, QVector{1, 0}), InputError);
}

TEST_CASE("probe primes are primes above 2^30")
{
    for (auto p : probe_primes()) {
        CHECK(p > (1ULL << 30));
        CHECK(mpz_probab_prime_p(Integer(std::to_string(p)).get_mpz_t(), 40) > 0);
    }
    CHECK(modular_rank_probe(QMatrix::identity(3), probe_primes()[0]) == 3);
    CHECK(modular_rank_probe(QMatrix(3, 3), probe_primes()[0]) == 0);
    CHECK_THROWS_AS(modular_rank_probe(QMatrix::identity(2), 1000003), InputError);
}

TEST_CASE("modular probe against exact rank on random integer matrices")
{
    Sampler s(11, 50);
    for (int trial = 0; trial < 100; ++trial) {
        QMatrix m(10, 10);
        const bool low = trial % 3 == 0;
        if (low) {
            m = oracle::random_low_rank(s, 10, 10, 1 + trial % 7);
        } else {
            for (std::size_t i = 0; i < 10; ++i)
                for (std::size_t j = 0; j < 10; ++j) m(i, j) = Rational(s.next_int());
        }
        const auto exact = rank_exact(m);
        for (auto p : probe_primes()) {
            try {
                const auto r = modular_rank_probe(m, p);
                CHECK(r <= exact);
                CHECK(r == exact);
            } catch (const ModularDenominatorError&) {
            }
        }
        CHECK(rank(m, RankMode::modular_prefilter) == exact);
    }
}

TEST_CASE("Bareiss rank agrees with naive elimination on random matrices")
{
    Sampler s(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rows = static_cast<std::size_t>(s.uniform(1, 30));
        const auto cols = static_cast<std::size_t>(s.uniform(1, 30));
        QMatrix m;
        if (trial % 2 == 0) {
            m = oracle::random_matrix(s, rows, cols, static_cast<int>(s.uniform(0, 90)));
        } else {
            m = oracle::random_low_rank(s, rows, cols, static_cast<std::size_t>(s.uniform(1, 6)));
        }
        const auto r = rank_exact(m);
        CHECK(r == oracle::rank(m));
        CHECK(r == rank_exact(m.transpose()));
        CHECK(m.cols() == r + kernel_basis(m).size());
        CHECK(reduced_row_echelon(m).rank() == r);
    }
}

TEST_CASE("rank invariances and kernel correctness")
{
    Sampler s(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = static_cast<std::size_t>(s.uniform(2, 12));
        const auto cols = static_cast<std::size_t>(s.uniform(2, 12));
        QMatrix m = oracle::random_low_rank(s, rows, cols, static_cast<std::size_t>(s.uniform(1, 5)));
        const auto r = rank_exact(m);

        QMatrix permuted(0, cols);
        for (std::size_t i = rows; i-- > 0;) permuted.append_row(m.row(i));
        CHECK(rank_exact(permuted) == r);

        QMatrix scaled = m;
        const Rational f(static_cast<long>(s.next_nonzero().get_si()), 7);
        for (std::size_t j = 0; j < cols; ++j) scaled(0, j) *= f;
        CHECK(rank_exact(scaled) == r);

        for (const auto& v : kernel_basis(m)) {
            for (std::size_t i = 0; i < rows; ++i) {
                Rational acc = 0;
                for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
                CHECK(acc == 0);
            }
        }

        const QVector probe = s.point(cols);
        const bool member = rank_exact(with_row(m, probe)) == r;
        const auto sol = membership_solve(m, probe);
        CHECK(member == sol.has_value());
        if (sol) CHECK(m.combine_rows(*sol) == probe);
    }
}

TEST_CASE("matrix shape errors")
{
    QMatrix m(0, 3);
    CHECK_THROWS_AS(m.append_row(QVector{1, 2}), InputError);
    CHECK_THROWS_AS(QMatrix::from_rows({{1, 2}, {1}}, 2), InputError);
}
