#pragma once

#include "hqm/qseries.hpp"
#include "hqm/rational.hpp"

#include <optional>
#include <vector>

namespace hqm {

/*
 * Counting m-simple covers of an elliptic curve.
 *
 * Genus and branch-point count are tied by 2g - 2 = (m - 1) b. The
 * disconnected counts come from character sums over partitions; connected
 * counts from the formal logarithm of prod(1 - q^n) * Zhat(q, X), which has
 * constant term 1 and integral exponents.
 */

/// b with 2(g - 1) = (m - 1) b, if such a nonnegative integer exists.
std::optional<int> branch_points_for_genus(int m, long g);

/// sum_{lambda |- d} f_lambda(c^(m))^b
Rational nhat(int m, int b, int d);

/// sum_{d=0}^{dmax} nhat(m, b, d) q^d, with the d = 0 term 1 for b = 0 and 0 otherwise.
QSeries zhat_block(int m, int b, int dmax);
/// Blocks b = 0..bmax from one pass over the partitions.
std::vector<QSeries> zhat_blocks(int m, int bmax, int dmax);

struct CountSeries {
    int m = 2;
    long g = 1;
    std::optional<int> b;
    bool connected = true;
    QSeries series; // coefficient of q^d is N_{g,d} (or Nhat_{g,d})
};

/// F_g^(m) to q^dmax; the zero series when no integral b exists. Requires g >= 2.
CountSeries connected_F(int m, long g, int dmax);
/// Fhat_g^(m) = sum_{d>=1} Nhat_{g,d} q^d.
CountSeries disconnected_F(int m, long g, int dmax);

/// sum_{d>=1} sigma_1(d)/d q^d; the -(1/24) log q part of F_1 is not included.
QSeries F1_series(int dmax);

/*
 * Truncated series in X with q-series coefficients: element b multiplies X^b
 * (no factorial). Used for the exp/log relation between connected and
 * disconnected generating functions.
 */
using XSeries = std::vector<QSeries>;
/// log C for C_0 = 1.
XSeries x_log(const XSeries& c);
/// exp L for L_0 = 0.
XSeries x_exp(const XSeries& l);

/*
 * Brute-force oracle: tuples (alpha, beta, gamma_1..gamma_b) in S_d with each
 * gamma_i an m-cycle and gamma_1...gamma_b = alpha beta alpha^-1 beta^-1,
 * divided by d!. The connected variant keeps tuples generating a transitive
 * subgroup. Refuses d > 6 or more than kOracleMaxWork tuple tests.
 */
inline constexpr double kOracleMaxWork = 2.0e9;
Rational brute_hom_count(int m, int d, int b);
Rational brute_connected_count(int m, int d, int b);
/// (d!)^2 |c|^(b-1) tuple tests.
double oracle_cost(int m, int d, int b);

} // namespace hqm
