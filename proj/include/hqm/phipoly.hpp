#pragma once

#include "hqm/polynomial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hqm {

/*
 * Polynomial in Y_1..Y_m over Q, Y_j of weight j. Variable index j-1 holds
 * Y_j. Evaluated at the shifted power sums (p_1(lambda), ..., p_m(lambda)).
 */
class YPoly {
public:
    YPoly() : poly_(0) {}
    YPoly(int m, MPoly poly);

    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] const MPoly& poly() const { return poly_; }
    [[nodiscard]] long weighted_degree() const;
    [[nodiscard]] Rational eval(std::span<const Rational> p) const { return poly_.eval(p); }

    // Serialization order: weighted degree descending, then exponent vectors
    // lexicographically descending.
    [[nodiscard]] std::vector<std::pair<MPoly::Exponents, Rational>> ordered_monomials() const;

    friend bool operator==(const YPoly&, const YPoly&) = default;

private:
    int m_ = 0;
    MPoly poly_;
};

/// Thrown by the interpolation route when no polynomial of the given weighted degree fits.
class DegreeBoundTooSmall : public std::runtime_error {
public:
    explicit DegreeBoundTooSmall(int bound);
    [[nodiscard]] int bound() const { return bound_; }

private:
    int bound_;
};

/// sum_{i=1}^{d} (-i + 1/2)^k as a polynomial in d.
DPoly faulhaber_shifted(int k);

/// b_ij as a polynomial in d; zero when i + j > m + 1.
DPoly bij_poly(int m, int i, int j);

// Newton's identities: from power sums p[1..n] (p[0] unused) to e_0..e_n / h_0..h_n.
template <class T>
std::vector<T> elementary_from_power_sums(const std::vector<T>& p, int n, const T& one)
{
    std::vector<T> e{one};
    for (int i = 1; i <= n; ++i) {
        T acc = one * Rational(0);
        for (int k = 1; k <= i; ++k) {
            T term = e[static_cast<size_t>(i - k)] * p[static_cast<size_t>(k)];
            if (k % 2)
                acc += term;
            else
                acc -= term;
        }
        e.push_back(acc * Rational(1, i));
    }
    return e;
}

template <class T>
std::vector<T> complete_from_power_sums(const std::vector<T>& p, int n, const T& one)
{
    std::vector<T> h{one};
    for (int j = 1; j <= n; ++j) {
        T acc = one * Rational(0);
        for (int k = 1; k <= j; ++k)
            acc += h[static_cast<size_t>(j - k)] * p[static_cast<size_t>(k)];
        h.push_back(acc * Rational(1, j));
    }
    return h;
}

/// phi_m from the residue expansion, rewritten in shifted power sums with d = Y_1.
YPoly build_phi_symbolic(int m);

/// phi_m by exact interpolation against f_mn over all monomials of weighted degree <= degree_bound.
YPoly build_phi_interpolate(int m, int degree_bound);

struct InterpolatedPhi {
    YPoly phi;
    int degree_bound;
};
/// Interpolation starting at weighted degree m, raising the bound on failure up to m + max_extra.
InterpolatedPhi build_phi_interpolate_escalating(int m, int max_extra = 4);

struct PhiDiagnostics {
    long weighted_degree;
    bool degree_at_most_m;
    bool leading_is_inverse_m; // top term (1/m) Y_m
};
PhiDiagnostics diagnose_phi(const YPoly& phi);

/// Process-wide cache of build_phi_symbolic; thread-safe.
const YPoly& phi_cached(int m);

} // namespace hqm
