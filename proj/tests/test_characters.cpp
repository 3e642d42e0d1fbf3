#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqm/characters.hpp"
#include "hqm/partitions.hpp"
#include "hqm/phipoly.hpp"

using namespace hqm;

TEST_CASE("class sizes")
{
    CHECK(class_size(4, 2) == 6);
    CHECK(class_size(5, 3) == 20);
    CHECK(class_size(6, 6) == 120);
    CHECK(class_size(2, 3) == 0);
}

TEST_CASE("single-cycle characters of S_4")
{
    // rows (4), (3,1), (2,2), (2,1,1), (1^4); columns transposition, 3-cycle, 4-cycle
    const std::vector<std::pair<std::vector<int>, std::array<int, 3>>> table{
        {{4}, {1, 1, 1}}, {{3, 1}, {1, 0, -1}}, {{2, 2}, {0, -1, 0}}, {{2, 1, 1}, {-1, 0, 1}}, {{1, 1, 1, 1}, {-1, 1, -1}}};
    for (const auto& [parts, row] : table)
        for (int m = 2; m <= 4; ++m)
            CHECK(chi_single_cycle(parts, m) == row[static_cast<size_t>(m - 2)]);
}

TEST_CASE("column orthogonality")
{
    for (int d = 2; d <= 9; ++d) {
        for (int m = 2; m <= d; ++m) {
            BigInt against_dim = 0, square = 0;
            for (const auto& l : enumerate_partitions(d)) {
                const BigInt chi = chi_single_cycle(l.parts(), m);
                against_dim += chi * hook_dim(l);
                square += chi * chi;
            }
            CHECK(against_dim == 0);
            CHECK(square * class_size(d, m) == factorial(static_cast<unsigned>(d)));
        }
    }
}

TEST_CASE("three routes to f_lambda agree")
{
    for (int m = 2; m <= 5; ++m) {
        const YPoly& phi = phi_cached(m);
        for (int d = m; d <= 9; ++d)
            for (const auto& l : enumerate_partitions(d)) {
                const Rational a = f_mn(l, m);
                CHECK(a.is_integer());
                CHECK(f_residue(l, m) == a);
                CHECK(f_phi(l, m, phi) == a);
            }
    }
}

TEST_CASE("transposition values are content sums")
{
    for (int d = 2; d <= 10; ++d)
        for (const auto& l : enumerate_partitions(d))
            CHECK(f_mn(l, 2) == Rational(content_sum(l)));
    CHECK(f_mn(Partition({2}), 2) == 1);
    CHECK(f_mn(Partition({1, 1}), 2) == -1);
}

TEST_CASE("small partitions")
{
    CHECK(f_mn(Partition({1}), 2) == 0);
    CHECK(f_phi(Partition({2}), 3, phi_cached(3)) == 0);
    CHECK_THROWS_AS(f_residue(Partition({2}), 3), std::invalid_argument);
    CHECK_THROWS(f_phi(Partition({3}), 3, phi_cached(2)));
    CHECK(f_mn(Partition({3}), 3) == 2);
}
