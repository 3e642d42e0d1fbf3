#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace hqm {

using BigInt = mpz_class;

/*
 * Exact rational number backed by GMP.
 *
 * Always in lowest terms with a positive denominator; zero is 0/1.
 * The canonical text form is "n" for integers and "n/d" otherwise.
 */
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T n) : v_(static_cast<long>(n)) {}

    template <std::unsigned_integral T>
    Rational(T n) : v_(static_cast<unsigned long>(n)) {}

    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n" or "n/d" with optional leading '-'.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return v_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return v_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] std::string str() const { return v_.get_str(); }

    [[nodiscard]] Rational pow(unsigned e) const;
    [[nodiscard]] Rational inverse() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    // this += a * b without temporaries
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

} // namespace hqm
