#include "hqm/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqm {

namespace {

long sat_add(long a, long b)
{
    return std::min(a + b, QSeries::kExact);
}

long exponent_gcd(const std::map<long, Rational>& terms)
{
    long g = 0;
    for (const auto& [e, c] : terms)
        g = std::gcd(g, e);
    return g;
}

} // namespace

QSeries::QSeries(const std::map<long, Rational>& terms, long trunc24) : trunc_(trunc24)
{
    for (const auto& [e, c] : terms)
        if (e < trunc_ && !c.is_zero())
            terms_.emplace(e, c);
}

QSeries QSeries::constant(const Rational& c, long trunc24)
{
    return monomial(c, 0, trunc24);
}

QSeries QSeries::monomial(const Rational& c, long e, long trunc24)
{
    QSeries s(trunc24);
    if (e < trunc24 && !c.is_zero())
        s.terms_.emplace(e, c);
    return s;
}

Rational QSeries::coeff(long e) const
{
    if (e >= trunc_)
        throw std::out_of_range("QSeries: coefficient " + std::to_string(e) + "/24 beyond truncation");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

long QSeries::valuation() const
{
    return terms_.empty() ? trunc_ : terms_.begin()->first;
}

bool QSeries::has_integer_exponents() const
{
    return std::ranges::all_of(terms_, [](const auto& t) { return t.first % kDenomExp == 0; });
}

long QSeries::known_q_orders() const
{
    if (trunc_ <= 0)
        return 0;
    return (trunc_ + kDenomExp - 1) / kDenomExp;
}

QSeries QSeries::truncated(long trunc24) const
{
    if (trunc24 > trunc_)
        throw std::invalid_argument("QSeries: cannot extend truncation");
    return QSeries(terms_, trunc24);
}

QSeries QSeries::shifted(long shift24) const
{
    QSeries r(trunc_ == kExact ? kExact : trunc_ + shift24);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + shift24, c);
    return r;
}

QSeries QSeries::scaled(const Rational& c) const
{
    QSeries r(trunc_);
    if (c.is_zero())
        return r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(e, v * c);
    return r;
}

void QSeries::add_term(long e, const Rational& c)
{
    if (e >= trunc_ || c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    trunc_ = std::min(trunc_, o.trunc_);
    terms_.erase(terms_.lower_bound(trunc_), terms_.end());
    for (const auto& [e, c] : o.terms_) {
        if (e >= trunc_)
            break;
        add_term(e, c);
    }
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    return *this += -o;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    // Valid below the first index where an unknown coefficient of either
    // factor can contribute.
    long t = std::min(sat_add(a.trunc_, b.valuation()), sat_add(b.trunc_, a.valuation()));
    std::map<long, Rational> acc;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            long e = ea + eb;
            if (e >= t)
                break;
            acc[e].add_product(ca, cb);
        }
    }
    return QSeries(acc, t);
}

QSeries exp_series(const QSeries& f)
{
    if (f.valuation() < 0)
        throw std::domain_error("exp_series: negative exponents");
    if (!f.coeff(0).is_zero())
        throw std::domain_error("exp_series: nonzero constant term");
    const long t = f.trunc24();
    std::map<long, Rational> g{{0, Rational(1)}};
    long step = exponent_gcd(f.terms());
    if (step == 0)
        return QSeries(g, t);
    // e g_e = sum_k k f_k g_{e-k}, from D(exp f) = D(f) exp f.
    for (long e = step; e < t; e += step) {
        Rational s;
        for (const auto& [k, fk] : f.terms()) {
            if (k > e)
                break;
            auto it = g.find(e - k);
            if (it != g.end())
                s.add_product(fk * Rational(k), it->second);
        }
        if (!s.is_zero())
            g.emplace(e, s / Rational(e));
    }
    return QSeries(g, t);
}

QSeries log_series(const QSeries& f)
{
    if (f.valuation() < 0)
        throw std::domain_error("log_series: negative exponents");
    if (f.coeff(0) != Rational(1))
        throw std::domain_error("log_series: constant term must be 1");
    const long t = f.trunc24();
    std::map<long, Rational> g;
    long step = exponent_gcd(f.terms());
    if (step == 0)
        return QSeries(t);
    // e g_e = e f_e - sum_{0<k<e} k g_k f_{e-k}
    for (long e = step; e < t; e += step) {
        Rational s = f.terms().contains(e) ? f.terms().at(e) * Rational(e) : Rational();
        for (const auto& [k, gk] : g) {
            if (k >= e)
                break;
            auto it = f.terms().find(e - k);
            if (it != f.terms().end())
                s -= gk * Rational(k) * it->second;
        }
        if (!s.is_zero())
            g.emplace(e, s / Rational(e));
    }
    return QSeries(g, t);
}

QSeries d_operator(const QSeries& f)
{
    std::map<long, Rational> r;
    for (const auto& [e, c] : f.terms())
        r.emplace(e, c * Rational(BigInt(e), BigInt(QSeries::kDenomExp)));
    return QSeries(r, f.trunc24());
}

QSeries euler_product(long trunc24)
{
    if (trunc24 < 1)
        throw std::invalid_argument("euler_product: trunc24 must be positive");
    const long orders = (trunc24 + QSeries::kDenomExp - 1) / QSeries::kDenomExp;
    std::vector<BigInt> c(static_cast<size_t>(orders), 0);
    c[0] = 1;
    for (long n = 1; n < orders; ++n)
        for (long i = orders - 1; i >= n; --i)
            c[i] -= c[i - n];
    std::map<long, Rational> terms;
    for (long i = 0; i < orders; ++i)
        if (c[i] != 0)
            terms.emplace(i * QSeries::kDenomExp, Rational(c[i]));
    return QSeries(terms, trunc24);
}

QSeries eta_series(long trunc24)
{
    if (trunc24 < 1)
        throw std::invalid_argument("eta_series: trunc24 must be >= 1");
    // q^(1/24) * P(q) is known below trunc24 once P is known below trunc24 - 1.
    if (trunc24 == 1)
        return QSeries(1);
    return euler_product(trunc24 - 1).shifted(1);
}

} // namespace hqm
