#pragma once

#include "hqm/phipoly.hpp"
#include "hqm/qseries.hpp"
#include "hqm/rational.hpp"

#include <map>
#include <vector>

namespace hqm {

/*
 * K = (k_2, k_3, ...): entry i holds k_{i+2}. Trailing zeros are insignificant.
 */
using MultiIndex = std::vector<int>;

/// sum_{i>=2} (i + 1) k_i
int expected_weight(const MultiIndex& k);
/// xi(-j) = (2^-j - 1) zeta(-j) = (2^-j - 1)(-B_{j+1}/(j+1))
Rational xi_neg(int j);

/// t^K/K! coefficient of V': sum_d sum_{lambda |- d} prod_i p_i(lambda)^{k_i} q^d.
QSeries vprime_taylor(const MultiIndex& k, int dmax);
/// t^K/K! coefficient A_K of V, including the q^(-1/24) factor.
QSeries v_taylor(const MultiIndex& k, int dmax);

/*
 * Taylor coefficients A_K of V for every K in t_2..t_mmax of total degree
 * <= tmax, all known through q^dmax (times q^(-1/24)).
 */
class TSeries {
public:
    static TSeries build(int mmax, int tmax, int dmax);

    [[nodiscard]] int mmax() const { return mmax_; }
    [[nodiscard]] int tmax() const { return tmax_; }
    [[nodiscard]] int dmax() const { return dmax_; }
    /// A_K; K padded or trimmed to mmax - 1 entries. Throws std::out_of_range beyond tmax.
    [[nodiscard]] const QSeries& coeff(const MultiIndex& k) const;
    /// t^K/K! coefficient of d/dt_i (V), i >= 2.
    [[nodiscard]] const QSeries& derivative_at(const MultiIndex& k, int i) const;
    /// V at t = 0, i.e. A_0.
    [[nodiscard]] const QSeries& at_zero() const { return coeff({}); }

private:
    [[nodiscard]] MultiIndex normalize(const MultiIndex& k) const;

    int mmax_ = 2;
    int tmax_ = 0;
    int dmax_ = 0;
    std::map<MultiIndex, QSeries> a_;
};

/// Highest total degree in Y_2..Y_m over the monomials of phi^b.
int required_t_degree(const YPoly& phi, int b);

/*
 * X^b coefficient of eta Z by the Bloch-Okounkov route:
 * (1/b!) eta [phi(D + xi(-1), D_2 + xi(-2), ...)^b V] at t = 0,
 * with D_k differentiation in t_k. Throws std::invalid_argument naming the
 * required degree when the supplied TSeries is too shallow.
 */
QSeries etaZ_via_operator(int m, int b, const YPoly& phi, const TSeries& v);
QSeries etaZ_via_operator(int m, int b, int dmax, const YPoly& phi);

/// The same coefficient from the character sums: prod(1 - q^n) Zhat_b / b!.
QSeries etaZ_direct(int m, int b, int dmax);

} // namespace hqm
