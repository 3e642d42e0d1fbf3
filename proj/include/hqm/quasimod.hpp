#pragma once

#include "hqm/qseries.hpp"
#include "hqm/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqm {

/// Bernoulli numbers with B_1 = -1/2; cached, thread-safe.
Rational bernoulli(int n);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for k in {2, 4, 6}, known through q^dmax.
QSeries eisenstein(int k, int dmax);

/// Polynomial in E2, E4, E6; the key (a, b, c) stands for E2^a E4^b E6^c.
class QMPoly {
public:
    using Key = std::array<int, 3>;

    void add_term(const Key& k, const Rational& c);
    [[nodiscard]] const std::map<Key, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(const Key& k) const;
    // Monomial count per weight 2a + 4b + 6c.
    [[nodiscard]] std::map<int, int> weight_breakdown() const;
    [[nodiscard]] bool homogeneous() const { return weight_breakdown().size() <= 1; }
    // -1 for the zero polynomial
    [[nodiscard]] int max_weight() const;

    friend bool operator==(const QMPoly&, const QMPoly&) = default;

private:
    std::map<Key, Rational> terms_;
};

inline constexpr int qm_weight(const QMPoly::Key& k) { return 2 * k[0] + 4 * k[1] + 6 * k[2]; }

/// Monomials E2^a E4^b E6^c of exactly weight w (empty for odd w).
std::vector<QMPoly::Key> qm_monomials_of_weight(int w);
/// Monomials of weight <= wmax, by weight ascending.
std::vector<QMPoly::Key> qm_monomials_up_to(int wmax);

QSeries qm_eval(const QMPoly& p, int dmax);

/// Exponent index of the first coefficient where a and b differ, below both truncations.
std::optional<long> first_mismatch(const QSeries& a, const QSeries& b);

class FitFailure : public std::runtime_error {
public:
    FitFailure(long q_order, const std::string& what);
    // First q-order whose coefficient no polynomial of the requested weight reproduces.
    [[nodiscard]] long q_order() const { return q_order_; }

private:
    long q_order_;
};

class Underdetermined : public std::invalid_argument {
public:
    Underdetermined(int required_dmax, const std::string& what);
    [[nodiscard]] int required_dmax() const { return required_dmax_; }

private:
    int required_dmax_;
};

struct FitResult {
    QMPoly poly;
    int wmax = 0;
    long unknowns = 0;
    long equations = 0;          // known q-orders used
    long surplus_verified = 0;   // equations beyond the rank, all satisfied
};

/*
 * Exact fit of f (integral exponents) by a QMPoly of weight <= wmax, or of
 * weight exactly wmax when single_weight is set. Rows are taken in q-order;
 * the first one contradicting its predecessors raises FitFailure. At least
 * `margin` rows beyond the rank must remain as checks, else Underdetermined.
 */
FitResult fit_qm(const QSeries& f, int wmax, int margin = 8, bool single_weight = false);

/// fit_qm at w0, w0 + 2, ... up to wcap; rethrows the last FitFailure.
FitResult fit_with_escalation(const QSeries& f, int w0, int wcap, int margin = 8);

/// eta D^j(A) from eta A by iterating eta D(A) = D(eta A) - E_2 eta A / 24.
QSeries eta_mul_d_iter(const QSeries& eta_a, int j, int dmax);

struct IdentityCheck {
    std::string name;
    bool ok = false;
    std::optional<long> first_divergent_q;
};

/// D(E2), D(E4), D(E6) in terms of E2, E4, E6, and D log Delta = E2, through q^dmax.
std::vector<IdentityCheck> check_derivation_system(int dmax);

} // namespace hqm
