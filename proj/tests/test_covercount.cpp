#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqm/covercount.hpp"

#include "hqm/partitions.hpp"

using namespace hqm;

TEST_CASE("branch points from the genus")
{
    CHECK(branch_points_for_genus(2, 2) == 2);
    CHECK(branch_points_for_genus(3, 3) == 2);
    CHECK(branch_points_for_genus(3, 1) == 0);
    CHECK_FALSE(branch_points_for_genus(4, 2).has_value());
    CHECK_FALSE(branch_points_for_genus(2, 0).has_value());
}

TEST_CASE("b = 0 block counts partitions")
{
    const QSeries z = zhat_block(3, 0, 15);
    for (int d = 0; d <= 15; ++d)
        CHECK(z.coeff_q(d) == Rational(static_cast<long>(enumerate_partitions(d).size())));
}

TEST_CASE("character sums match the monodromy oracle")
{
    const int cases[][3] = {{2, 2, 2}, {2, 3, 2}, {2, 4, 2}, {2, 3, 4}, {3, 3, 1}, {3, 3, 2}, {3, 4, 2}, {3, 5, 1}, {4, 4, 2}, {2, 5, 2}};
    for (const auto& c : cases)
        CHECK(zhat_block(c[0], c[2], c[1]).coeff_q(c[1]) == brute_hom_count(c[0], c[1], c[2]));
    CHECK(brute_hom_count(2, 2, 2) == 2);
    CHECK(brute_hom_count(3, 3, 1) == 3);
    CHECK(brute_hom_count(2, 3, 0) == 3); // p(3) commuting pairs / 3!
}

TEST_CASE("oracle refuses large instances")
{
    CHECK_THROWS_AS(brute_hom_count(2, 7, 2), std::invalid_argument);
    CHECK_THROWS_AS(brute_hom_count(2, 6, 6), std::invalid_argument);
    CHECK(oracle_cost(2, 4, 2) == doctest::Approx(24.0 * 24.0 * 6.0));
}

TEST_CASE("connected counts match the transitive oracle")
{
    const CountSeries f = connected_F(2, 2, 5);
    CHECK(f.connected);
    REQUIRE(f.b == 2);
    CHECK(f.series.coeff_q(1) == 0);
    CHECK(f.series.coeff_q(2) == 2);
    for (int d = 1; d <= 5; ++d)
        CHECK(f.series.coeff_q(d) == brute_connected_count(2, d, 2));
    const CountSeries g = connected_F(3, 2, 4);
    for (int d = 1; d <= 4; ++d)
        CHECK(g.series.coeff_q(d) == brute_connected_count(3, d, 1));
}

TEST_CASE("genus one counts")
{
    const QSeries f1 = F1_series(12);
    CHECK(f1.coeff_q(1) == 1);
    CHECK(f1.coeff_q(2) == Rational(3, 2));
    CHECK(f1.coeff_q(6) == 2);
    for (int d = 1; d <= 5; ++d)
        CHECK(f1.coeff_q(d) == brute_connected_count(2, d, 0));
}

TEST_CASE("parity vanishing")
{
    for (int d = 0; d <= 10; ++d) {
        CHECK(nhat(2, 1, d) == 0);
        CHECK(nhat(4, 3, d) == 0);
    }
    CHECK(nhat(3, 1, 3) == 3);
    const CountSeries z = connected_F(4, 2, 10);
    CHECK_FALSE(z.b);
    CHECK(z.series.is_zero());
}

TEST_CASE("exp and log in X invert each other")
{
    const long t = trunc24_for(10);
    const auto blocks = zhat_blocks(3, 3, 10);
    XSeries c;
    const QSeries euler = euler_product(t);
    for (int k = 0; k <= 3; ++k)
        c.push_back((euler * blocks[static_cast<size_t>(k)]).truncated(t).scaled(Rational(BigInt(1), factorial(static_cast<unsigned>(k)))));
    const XSeries l = x_log(c);
    CHECK(l[0].is_zero());
    const XSeries back = x_exp(l);
    for (int k = 0; k <= 3; ++k)
        CHECK(back[static_cast<size_t>(k)] == c[static_cast<size_t>(k)]);
    XSeries bad{QSeries::constant(Rational(2), t)};
    CHECK_THROWS_AS(x_log(bad), std::domain_error);
}

TEST_CASE("disconnected counts drop the empty cover")
{
    const CountSeries f = disconnected_F(2, 2, 6);
    CHECK_FALSE(f.connected);
    CHECK(f.series.coeff_q(0) == 0);
    CHECK(f.series.coeff_q(2) == zhat_block(2, 2, 6).coeff_q(2));
    CHECK_THROWS_AS(connected_F(2, 1, 5), std::invalid_argument);
}
