#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqm/partitions.hpp"

#include <set>

using namespace hqm;

namespace {

// Euler's pentagonal recurrence for p(n).
std::vector<long> partition_counts(int n_max)
{
    std::vector<long> p(static_cast<size_t>(n_max + 1), 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const long sgn = (k % 2) ? 1 : -1;
            p[static_cast<size_t>(n)] += sgn * p[static_cast<size_t>(n - g1)];
            if (g2 <= n)
                p[static_cast<size_t>(n)] += sgn * p[static_cast<size_t>(n - g2)];
        }
    }
    return p;
}

Rational pk_direct(const std::vector<int>& parts, int k)
{
    Rational s;
    for (size_t i = 1; i <= parts.size(); ++i) {
        const Rational shifted = Rational(parts[i - 1]) - Rational(static_cast<long>(i)) + Rational(1, 2);
        s += shifted.pow(static_cast<unsigned>(k)) - (Rational(1, 2) - Rational(static_cast<long>(i))).pow(static_cast<unsigned>(k));
    }
    return s;
}

} // namespace

TEST_CASE("partition counts follow the pentagonal recurrence")
{
    const auto p = partition_counts(30);
    for (int d = 0; d <= 30; ++d)
        CHECK(enumerate_partitions(d).size() == static_cast<size_t>(p[static_cast<size_t>(d)]));
}

TEST_CASE("enumeration order and validity")
{
    const auto ps = enumerate_partitions(5);
    REQUIRE(ps.size() == 7);
    CHECK(ps.front() == Partition({5}));
    CHECK(ps.back() == Partition({1, 1, 1, 1, 1}));
    for (size_t i = 1; i < ps.size(); ++i)
        CHECK(ps[i - 1] > ps[i]);
    std::set<std::vector<int>> seen;
    for_each_partition(12, [&](std::span<const int> parts) {
        int s = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            s += parts[i];
            if (i)
                CHECK(parts[i] <= parts[i - 1]);
        }
        CHECK(s == 12);
        seen.emplace(parts.begin(), parts.end());
    });
    CHECK(seen.size() == 77);
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0}));
}

TEST_CASE("conjugation")
{
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    for (const auto& l : enumerate_partitions(9))
        CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("Frobenius coordinates")
{
    const auto fc = frobenius(Partition({4, 2, 1}));
    CHECK(fc.P == std::vector<Rational>{Rational(7, 2), Rational(1, 2)});
    CHECK(fc.Q == std::vector<Rational>{Rational(5, 2), Rational(1, 2)});
    CHECK(frobenius(Partition()).P.empty());
}

TEST_CASE("shifted power sums agree across routes")
{
    for (int d = 0; d <= 9; ++d) {
        for (const auto& l : enumerate_partitions(d)) {
            const std::vector<int> parts(l.parts().begin(), l.parts().end());
            const auto fast = shifted_power_sums(l.parts(), 6);
            for (int k = 0; k <= 6; ++k) {
                const Rational want = pk_direct(parts, k);
                CHECK(pk(l, k) == want);
                CHECK(pk_padded(l, k, l.length() + 3) == want);
                CHECK(pk_via_frobenius(l, k) == want);
                CHECK(fast[static_cast<size_t>(k)] == want);
            }
            CHECK(pk(l, 1) == Rational(d));
            CHECK(pk(l.conjugate(), 2) == -pk(l, 2));
        }
    }
}

TEST_CASE("content sum, n statistic and hook dimension")
{
    const Partition l({3, 1});
    CHECK(content_sum(l) == 2);
    CHECK(n_stat(l) == 1);
    CHECK(hook_dim(l) == 3);
    for (int d = 1; d <= 9; ++d) {
        BigInt sum_sq = 0;
        for (const auto& p : enumerate_partitions(d)) {
            sum_sq += hook_dim(p) * hook_dim(p);
            CHECK(content_sum(p) == n_stat(p.conjugate()) - n_stat(p));
        }
        CHECK(sum_sq == factorial(static_cast<unsigned>(d)));
    }
}

TEST_CASE("elementary and complete symmetric functions")
{
    const std::vector<Rational> x{Rational(1), Rational(2), Rational(1, 2)};
    const auto s = elementary_and_complete(x, 3);
    CHECK(s.e[1] == Rational(7, 2));
    CHECK(s.e[2] == Rational(7, 2));
    CHECK(s.e[3] == Rational(1));
    // h_2 = sum_{i <= j} x_i x_j
    CHECK(s.h[2] == Rational(1) + Rational(4) + Rational(1, 4) + Rational(2) + Rational(1, 2) + Rational(1));
}
