#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqm/qseries.hpp"
#include "hqm/rational.hpp"

#include <random>

using namespace hqm;

namespace {

QSeries q_pow(long n, long trunc = QSeries::kExact) { return QSeries::monomial(Rational(1), n * 24, trunc); }

// Dense product prod_{n=1}^{N} (1 - q^n)^2 in machine integers.
std::vector<long long> euler_squared_naive(int n_max)
{
    std::vector<long long> c(static_cast<size_t>(n_max + 1), 0);
    c[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int rep = 0; rep < 2; ++rep)
            for (int i = n_max; i >= n; --i)
                c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - n)];
    return c;
}

QSeries random_series(std::mt19937& rng, long trunc)
{
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), expo(0, 10);
    std::map<long, Rational> t;
    for (int i = 0; i < 6; ++i)
        t[expo(rng) * 12] = Rational(coef(rng), den(rng));
    return QSeries(t, trunc);
}

} // namespace

TEST_CASE("rationals reduce and print canonically")
{
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational().str() == "0");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(Rational::parse("10/-4"), std::invalid_argument);
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("addition cancels and keeps the smaller truncation")
{
    QSeries a = QSeries::constant(Rational(1), 240) + q_pow(1);
    QSeries s = a + QSeries::constant(Rational(-1));
    CHECK(s == q_pow(1, 240));
    CHECK(s.trunc24() == 240);
    CHECK(a + QSeries(QSeries::kExact) == a);
    const QSeries eta = eta_series(480);
    const QSeries zero = eta + (-eta);
    CHECK(zero.is_zero());
    CHECK(zero.trunc24() == 480);
}

TEST_CASE("products add exponents and truncate")
{
    const QSeries x = QSeries::monomial(Rational(1), 1);
    CHECK(x * x == QSeries::monomial(Rational(1), 2));
    std::map<long, Rational> geo;
    for (long n = 0; n <= 20; ++n)
        geo[n * 24] = 1;
    const QSeries g(geo, trunc24_for(20));
    const QSeries one_minus_q = QSeries::constant(Rational(1)) - q_pow(1);
    CHECK(one_minus_q * g == QSeries::constant(Rational(1), trunc24_for(20)));
    CHECK_THROWS_AS((void)g.coeff(trunc24_for(20)), std::out_of_range);
}

TEST_CASE("exp and log")
{
    const long t = trunc24_for(12);
    CHECK(exp_series(QSeries(t)) == QSeries::constant(Rational(1), t));
    const QSeries e = exp_series(q_pow(1, t));
    for (long n = 0; n <= 12; ++n)
        CHECK(e.coeff_q(n) == Rational(BigInt(1), factorial(static_cast<unsigned>(n))));
    const QSeries f = QSeries::constant(Rational(1), t) + q_pow(1);
    CHECK(exp_series(log_series(f)) == f);
    const QSeries h = q_pow(1, t) + q_pow(2);
    CHECK(log_series(exp_series(h)) == h);
    CHECK(log_series(QSeries::constant(Rational(1), t)).is_zero());
    CHECK_THROWS_AS(exp_series(QSeries::constant(Rational(2), t)), std::domain_error);
    CHECK_THROWS_AS(log_series(QSeries::constant(Rational(2), t)), std::domain_error);
}

TEST_CASE("log of the Euler product is -sigma_1(d)/d")
{
    const QSeries l = log_series(euler_product(trunc24_for(20)));
    for (long d = 1; d <= 20; ++d) {
        // -sum_{n k = d} 1/k
        Rational want;
        for (long k = 1; k <= d; ++k)
            if (d % k == 0)
                want -= Rational(1, k);
        CHECK(l.coeff_q(d) == want);
    }
}

TEST_CASE("D operator")
{
    CHECK(d_operator(QSeries::monomial(Rational(3), 5 * 24)) == QSeries::monomial(Rational(15), 5 * 24));
    CHECK(d_operator(QSeries::constant(Rational(7))).is_zero());
    CHECK(d_operator(QSeries::monomial(Rational(1), 1)) == QSeries::monomial(Rational(1, 24), 1));
}

TEST_CASE("eta: leading term, pentagonal pattern, square")
{
    const QSeries eta = eta_series(trunc24_for(30));
    CHECK(eta.valuation() == 1);
    CHECK(eta.coeff(1) == 1);
    std::map<long, Rational> pent;
    for (long k = -5; k <= 5; ++k) {
        const long g = k * (3 * k - 1) / 2;
        if (g <= 29)
            pent[g * 24 + 1] = (k % 2 == 0) ? 1 : -1;
    }
    CHECK(eta == QSeries(pent, trunc24_for(30)));

    const auto naive = euler_squared_naive(30);
    const QSeries sq = eta * eta;
    for (long n = 0; n <= 29; ++n)
        CHECK(sq.coeff(n * 24 + 2) == Rational(naive[static_cast<size_t>(n)]));
}

TEST_CASE("eta times the exponential of minus log eta is one")
{
    const long t = trunc24_for(25);
    const QSeries eta = eta_series(t);
    const QSeries inv = exp_series(-log_series(eta.shifted(-1))).shifted(-1);
    const QSeries prod = eta * inv;
    CHECK(prod.truncated(trunc24_for(24)) == QSeries::constant(Rational(1), trunc24_for(24)));
}

TEST_CASE("ring axioms and derivation rule on random series")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries a = random_series(rng, 300), b = random_series(rng, 250), c = random_series(rng, 280);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(d_operator(a * b) == d_operator(a) * b + a * d_operator(b));
    }
}

TEST_CASE("raising the truncation never changes known coefficients")
{
    const QSeries small = log_series(euler_product(trunc24_for(10)));
    const QSeries large = log_series(euler_product(trunc24_for(30)));
    CHECK(large.truncated(small.trunc24()) == small);
}
