#include "vstrata/construct.hpp"
#include "vstrata/errors.hpp"

#include <doctest.h>

using namespace vstrata;

namespace {

StratumLabel L(std::vector<unsigned> parts)
{
    return StratumLabel(std::move(parts));
}

bool has_claim(const Certificate& c, const std::string& fragment)
{
    for (const auto& claim : c.claims)
        if (claim.statement.find(fragment) != std::string::npos) return claim.passed;
    return false;
}

} // namespace

TEST_CASE("stratum points at (2,9,4)")
{
    for (const auto& label : partitions_enumerate(4, false)) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Sampler s(seed);
            const auto c = construct_stratum_point(2, 9, label, s);
            CHECK(scheme_degree(c.scheme) == 4);
            CHECK(curvilinear_lengths(c.scheme).size() == label.length());
            CHECK(c.certificate.all_passed());
            CHECK(c.certificate.scope == scope::unique_scheme);
            REQUIRE(c.certificate.border_rank);
            CHECK(*c.certificate.border_rank == 4);
            CHECK(flattening_rank(c.point) == 4);
            CHECK(rank_exact(catalecticant_matrix(c.point, 4)) == 4);
        }
    }
}

TEST_CASE("non-collinear triple jet")
{
    Sampler s(5);
    StratumPointOptions opts;
    opts.non_collinear = true;
    const auto c = construct_stratum_point(2, 9, L({3, 1}), s, opts);
    CHECK(c.certificate.all_passed());
    CHECK(at_most_two_on_lines(c.scheme));
    // the fat-point scheme 3Q plus doubles at the other supports imposes independent conditions
    SchemeSpec fat{2, {}};
    for (std::size_t i = 0; i < c.scheme.components.size(); ++i) {
        const auto& comp = c.scheme.components[i];
        fat.components.emplace_back(FatPoint{support(comp), std::holds_alternative<Jet>(comp) ? 3U : 2U});
    }
    CHECK(h1(fat, 9) == 0);
}

TEST_CASE("reduced labels certify the rank as well")
{
    Sampler s(6);
    const auto c = construct_stratum_point(2, 7, L({1, 1, 1}), s);
    REQUIRE(c.certificate.rank);
    CHECK(*c.certificate.rank == 3);
    REQUIRE(c.decomposition);
    CHECK(c.decomposition->size() == 3);
    CHECK(c.decomposition->verify());
    CHECK(flattening_rank(c.point) == 3);
}

TEST_CASE("construction is reproducible from the seed")
{
    Sampler a(77);
    Sampler b(77);
    const auto x = construct_stratum_point(3, 7, L({2, 1}), a);
    const auto y = construct_stratum_point(3, 7, L({2, 1}), b);
    CHECK(x.scheme == y.scheme);
    CHECK(x.point == y.point);
}

TEST_CASE("a jet on a line plus points")
{
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Sampler s(seed);
        const auto c = construct_e2plus(2, 6, 2, 1, s);
        REQUIRE(c.decomposition);
        CHECK(c.decomposition->size() == 7);
        CHECK(c.decomposition->verify());
        CHECK(c.decomposition->target() == c.point);
        REQUIRE(c.certificate.border_rank);
        CHECK(*c.certificate.border_rank == 3);
        CHECK(*c.certificate.border_rank + c.decomposition->size() <= 3 * 6 - 2);
    }
    Sampler s(9);
    const auto pure = construct_e2plus(2, 6, 2, 0, s);
    REQUIRE(pure.decomposition);
    CHECK(pure.decomposition->size() == 6);
    CHECK(has_claim(pure.certificate, "Sylvester"));

    const auto bigger = construct_e2plus(3, 8, 3, 2, s);
    REQUIRE(bigger.decomposition);
    CHECK(bigger.decomposition->size() == 9);
    CHECK(bigger.decomposition->verify());
    CHECK(scheme_degree(bigger.scheme) == 5);
    if (bigger.certificate.border_rank) CHECK(*bigger.certificate.border_rank == 5);

    CHECK_THROWS_AS(construct_e2plus(2, 6, 4, 0, s), InputError);
    CHECK_THROWS_AS(construct_e2plus(2, 6, 1, 0, s), InputError);
    CHECK_THROWS_AS(construct_e2plus(1, 6, 2, 0, s), InputError);
    CHECK_THROWS_AS(construct_e2plus(2, 6, 2, 4, s), InputError);
}

TEST_CASE("a tangent vector plus points in general position")
{
    Sampler s(10);
    auto c = construct_f2(3, 5, 3, s);
    REQUIRE(c.decomposition);
    CHECK(c.decomposition->size() == 6);
    CHECK(c.decomposition->verify());
    REQUIRE(c.certificate.border_rank);
    CHECK(*c.certificate.border_rank == 3);
    CHECK(lgp_check(c.scheme));

    c = construct_f2(3, 7, 4, s);
    REQUIRE(c.decomposition);
    CHECK(c.decomposition->size() == 9);
    CHECK(c.decomposition->verify());

    c = construct_f2(3, 5, 5, s);
    REQUIRE(c.decomposition);
    CHECK(c.decomposition->size() == 8);
    CHECK(c.certificate.scope != scope::unique_scheme);

    c = construct_f2(2, 5, 3, s);
    CHECK(c.certificate.scope == scope::outside_hypotheses);

    CHECK_THROWS_AS(construct_f2(3, 4, 3, s), InputError);
    CHECK_THROWS_AS(construct_f2(3, 5, 2, s), InputError);
    CHECK_THROWS_AS(construct_f2(3, 5, 6, s), InputError);
}

TEST_CASE("two schemes on a conic sharing one point of their spans")
{
    Sampler s(11);
    auto c = construct_conic_double(5, L({6}), L({6}), s);
    REQUIRE(c.other_scheme);
    CHECK(scheme_degree(c.scheme) == 6);
    CHECK(scheme_degree(*c.other_scheme) == 6);
    CHECK(c.certificate.all_passed());
    CHECK(membership_ranks(span_matrix(c.scheme, 5), c.point.coeffs()).member());
    CHECK(membership_ranks(span_matrix(*c.other_scheme, 5), c.point.coeffs()).member());
    QMatrix stacked = span_matrix(c.scheme, 5);
    stacked.append_rows(span_matrix(*c.other_scheme, 5));
    CHECK(6 + 6 - 1 - rank_exact(stacked) == 0);

    c = construct_conic_double(5, L({4}), L({8}), s);
    REQUIRE(c.certificate.border_rank);
    CHECK(*c.certificate.border_rank == 4);

    c = construct_conic_double(5, L({3, 3}), L({6}), s);
    CHECK(c.scheme.components.size() == 2);
    CHECK(c.certificate.all_passed());

    CHECK_THROWS_AS(construct_conic_double(5, L({3}), L({6}), s), InputError);
}
