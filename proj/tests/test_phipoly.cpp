#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqm/phipoly.hpp"

using namespace hqm;

namespace {

YPoly ypoly(int m, std::initializer_list<std::pair<MPoly::Exponents, Rational>> terms)
{
    MPoly p(m);
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return YPoly(m, p);
}

// [y^(m+1-i-j)] prod_{k=1}^{m} (1 + (d - k + 1/2) y) (1 - m y)^(d - i) for a concrete d >= i.
Rational bij_numeric(int m, int i, int j, int d)
{
    const int n = m + 1 - i - j;
    if (n < 0)
        return 0;
    std::vector<Rational> s(static_cast<size_t>(n + 1));
    s[0] = 1;
    auto mul_linear = [&](const Rational& a) { // times (1 + a y)
        for (int t = n; t >= 1; --t)
            s[static_cast<size_t>(t)] += a * s[static_cast<size_t>(t - 1)];
    };
    for (int k = 1; k <= m; ++k)
        mul_linear(Rational(d - k) + Rational(1, 2));
    for (int r = 0; r < d - i; ++r)
        mul_linear(Rational(-m));
    return s[static_cast<size_t>(n)];
}

} // namespace

TEST_CASE("symbolic phi reproduces the known polynomials")
{
    CHECK(build_phi_symbolic(2) == ypoly(2, {{{0, 1}, Rational(1, 2)}}));
    CHECK(build_phi_symbolic(3) ==
          ypoly(3, {{{0, 0, 1}, Rational(1, 3)}, {{2, 0, 0}, Rational(-1, 2)}, {{1, 0, 0}, Rational(5, 12)}}));
    CHECK(build_phi_symbolic(4) ==
          ypoly(4, {{{0, 0, 0, 1}, Rational(1, 4)}, {{1, 1, 0, 0}, Rational(-1)}, {{0, 1, 0, 0}, Rational(11, 8)}}));
}

TEST_CASE("interpolation agrees with the symbolic route")
{
    for (int m = 2; m <= 5; ++m) {
        const InterpolatedPhi ip = build_phi_interpolate_escalating(m);
        CHECK(ip.degree_bound == m);
        CHECK(ip.phi == build_phi_symbolic(m));
    }
    CHECK_THROWS_AS(build_phi_interpolate(3, 2), std::invalid_argument);
}

TEST_CASE("weighted degree m with leading term Y_m / m")
{
    for (int m = 2; m <= 7; ++m) {
        const auto diag = diagnose_phi(build_phi_symbolic(m));
        CHECK(diag.weighted_degree == m);
        CHECK(diag.degree_at_most_m);
        CHECK(diag.leading_is_inverse_m);
    }
}

TEST_CASE("ordered monomials put the top weight first")
{
    const auto mons = build_phi_symbolic(3).ordered_monomials();
    REQUIRE(mons.size() == 3);
    CHECK(mons[0].first == MPoly::Exponents{0, 0, 1});
    CHECK(mons[1].first == MPoly::Exponents{2, 0, 0});
    CHECK(mons[2].first == MPoly::Exponents{1, 0, 0});
}

TEST_CASE("shifted Faulhaber sums")
{
    for (int k = 0; k <= 6; ++k) {
        const DPoly p = faulhaber_shifted(k);
        for (int d = 0; d <= 12; ++d) {
            Rational s;
            for (int i = 1; i <= d; ++i)
                s += (Rational(1, 2) - Rational(i)).pow(static_cast<unsigned>(k));
            CHECK(p(Rational(d)) == s);
        }
    }
}

TEST_CASE("b_ij polynomials match direct expansion")
{
    for (int m = 2; m <= 6; ++m)
        for (int i = 0; i <= m + 1; ++i)
            for (int j = 0; i + j <= m + 2; ++j) {
                const DPoly p = bij_poly(m, i, j);
                for (int d = i; d <= i + m + 3; ++d)
                    CHECK(p(Rational(d)) == bij_numeric(m, i, j, d));
                if (i + j >= m + 2)
                    CHECK(p.is_zero());
                else
                    CHECK(p.degree() <= m + 1 - i - j);
                if (i + j == m + 1)
                    CHECK(p == DPoly::constant(Rational(1)));
                if (i + j == m)
                    CHECK(p == DPoly::constant(Rational(m * i) - Rational(m * m, 2)));
            }
}

TEST_CASE("phi cache is stable")
{
    const YPoly& a = phi_cached(4);
    const YPoly& b = phi_cached(4);
    CHECK(&a == &b);
    CHECK_THROWS_AS(build_phi_symbolic(1), std::invalid_argument);
}
