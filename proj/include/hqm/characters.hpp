#pragma once

#include "hqm/partitions.hpp"
#include "hqm/rational.hpp"

namespace hqm {

class YPoly;

/// Number of m-cycles in S_d; zero when d < m.
BigInt class_size(int d, int m);

/// chi_lambda on the class (m, 1^{d-m}) by removing rim hooks of size m.
BigInt chi_single_cycle(std::span<const int> parts, int m);

/*
 * Modified character f_lambda(c^(m)) = |c| chi_lambda(c) / dim lambda.
 *
 * Three independent evaluations:
 *   f_mn       rim-hook removal with hook-length dimensions,
 *   f_residue  residue at infinity of x(x-1)...(x-m+1) phi(x-m)/phi(x),
 *   f_phi      the polynomial phi_m evaluated at p_1..p_m.
 * All return 0 when d < m except f_residue, which requires d >= m.
 */
Rational f_mn(const Partition& lambda, int m);
Rational f_residue(const Partition& lambda, int m);
Rational f_phi(const Partition& lambda, int m, const YPoly& phi);
Rational f_phi(std::span<const int> parts, int m, const YPoly& phi);

} // namespace hqm
