#include "hqm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hqm {

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && s.front() == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

Rational Rational::pow(unsigned e) const
{
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(r);
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b)
{
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    v_ += t;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace hqm
