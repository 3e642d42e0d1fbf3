#pragma once

#include "hqm/rational.hpp"

#include <map>

namespace hqm {

/*
 * Truncated formal series in q^(1/24) with rational coefficients.
 *
 * A stored term (e, c) stands for c * q^(e/24). Coefficients at exponent
 * indices e >= trunc24() are unknown; everything below is exact. Zero
 * coefficients are never stored. Negative indices are representable (the
 * Bloch-Okounkov coefficients carry a q^(-1/24) factor), but exp_series and
 * log_series refuse them.
 */
class QSeries {
public:
    static constexpr long kDenomExp = 24;
    // Truncation used for exact (polynomial) series; arithmetic saturates at it.
    static constexpr long kExact = 1L << 40;

    QSeries() = default;
    explicit QSeries(long trunc24) : trunc_(trunc24) {}
    QSeries(const std::map<long, Rational>& terms, long trunc24);

    static QSeries constant(const Rational& c, long trunc24 = kExact);
    static QSeries monomial(const Rational& c, long e, long trunc24 = kExact);

    [[nodiscard]] long trunc24() const { return trunc_; }
    [[nodiscard]] const std::map<long, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    // Coefficient of q^(e/24); throws std::out_of_range when e >= trunc24.
    [[nodiscard]] Rational coeff(long e) const;
    // Coefficient of the integral power q^n.
    [[nodiscard]] Rational coeff_q(long n) const { return coeff(n * kDenomExp); }

    // Lowest stored index, or trunc24 for the zero series.
    [[nodiscard]] long valuation() const;
    [[nodiscard]] bool has_integer_exponents() const;
    // Number of integral q-orders known, i.e. ceil(trunc24 / 24) for trunc24 > 0.
    [[nodiscard]] long known_q_orders() const;

    [[nodiscard]] QSeries truncated(long trunc24) const;
    // Multiply by q^(shift24 / 24).
    [[nodiscard]] QSeries shifted(long shift24) const;
    [[nodiscard]] QSeries scaled(const Rational& c) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries operator-() const { return scaled(Rational(-1)); }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    void add_term(long e, const Rational& c);

    std::map<long, Rational> terms_;
    long trunc_ = kExact;
};

// Truncation index for a series known through q^dmax.
constexpr long trunc24_for(long dmax) { return QSeries::kDenomExp * (dmax + 1); }
inline constexpr long kDefaultTrunc24 = 960;

// exp(f) for f with zero constant term and no negative exponents.
QSeries exp_series(const QSeries& f);
// log(f) for f with constant term 1 and no negative exponents.
QSeries log_series(const QSeries& f);
// D = q d/dq: c q^(e/24) -> c (e/24) q^(e/24).
QSeries d_operator(const QSeries& f);
// prod_{n>=1} (1 - q^n) below the truncation.
QSeries euler_product(long trunc24);
// eta(q) = q^(1/24) prod_{n>=1} (1 - q^n) below the truncation.
QSeries eta_series(long trunc24);

} // namespace hqm
