#pragma once

#include "hqm/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace hqm {

/// Univariate polynomial over Q; coefficient i multiplies d^i.
class DPoly {
public:
    DPoly() = default;
    explicit DPoly(std::vector<Rational> coeffs);

    static DPoly constant(const Rational& c);
    static DPoly variable(); // d
    /// Unique polynomial of degree <= values.size()-1 through (0, v_0), (1, v_1), ...
    static DPoly interpolate(std::span<const Rational> values);

    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
    [[nodiscard]] Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    // -1 for the zero polynomial
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] Rational operator()(const Rational& d) const;

    DPoly& operator+=(const DPoly& o);
    DPoly& operator-=(const DPoly& o);
    DPoly& operator*=(const Rational& c);
    friend DPoly operator+(DPoly a, const DPoly& b) { return a += b; }
    friend DPoly operator-(DPoly a, const DPoly& b) { return a -= b; }
    friend DPoly operator*(const DPoly& a, const DPoly& b);
    friend DPoly operator*(DPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const DPoly&, const DPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/*
 * Sparse polynomial over Q in a fixed number of variables. Monomials are
 * exponent vectors; zero coefficients are never stored.
 */
class MPoly {
public:
    using Exponents = std::vector<int>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);
    // sum_i c_i x_index^i
    static MPoly from_univariate(int nvars, int index, const DPoly& p);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    [[nodiscard]] Rational eval(std::span<const Rational> x) const;
    [[nodiscard]] MPoly pow(unsigned e) const;
    /// p(x_1 + s_1, ..., x_n + s_n)
    [[nodiscard]] MPoly translate(std::span<const Rational> shifts) const;
    /// Maximal sum_i weights[i] * e_i over the monomials; -1 for zero.
    [[nodiscard]] long max_weight(std::span<const int> weights) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const MPoly&, const MPoly&) = default;

private:
    int nvars_;
    std::map<Exponents, Rational> terms_;
};

} // namespace hqm
