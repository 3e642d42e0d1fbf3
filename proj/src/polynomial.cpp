#include "hqm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hqm {

DPoly::DPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void DPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

DPoly DPoly::constant(const Rational& c)
{
    return DPoly(std::vector<Rational>{c});
}

DPoly DPoly::variable()
{
    return DPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

DPoly DPoly::interpolate(std::span<const Rational> values)
{
    // Lagrange basis on the nodes 0..n
    const long n = static_cast<long>(values.size());
    DPoly result;
    for (long j = 0; j < n; ++j) {
        if (values[static_cast<size_t>(j)].is_zero())
            continue;
        DPoly basis = constant(Rational(1));
        Rational denom = 1;
        for (long i = 0; i < n; ++i) {
            if (i == j)
                continue;
            basis = basis * DPoly(std::vector<Rational>{Rational(-i), Rational(1)});
            denom *= Rational(j - i);
        }
        result += basis * (values[static_cast<size_t>(j)] / denom);
    }
    return result;
}

Rational DPoly::operator()(const Rational& d) const
{
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= d;
        r += *it;
    }
    return r;
}

DPoly& DPoly::operator+=(const DPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

DPoly& DPoly::operator*=(const Rational& c)
{
    for (auto& v : c_)
        v *= c;
    trim();
    return *this;
}

DPoly operator*(const DPoly& a, const DPoly& b)
{
    if (a.c_.empty() || b.c_.empty())
        return DPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j].add_product(a.c_[i], b.c_[j]);
    return DPoly(std::move(r));
}

MPoly MPoly::constant(int nvars, const Rational& c)
{
    MPoly p(nvars);
    p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars)
        throw std::out_of_range("MPoly::variable: index out of range");
    MPoly p(nvars);
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MPoly MPoly::from_univariate(int nvars, int index, const DPoly& u)
{
    MPoly p(nvars);
    Exponents e(static_cast<size_t>(nvars), 0);
    for (size_t i = 0; i < u.coeffs().size(); ++i) {
        e[static_cast<size_t>(index)] = static_cast<int>(i);
        p.add_term(e, u.coeffs()[i]);
    }
    return p;
}

Rational MPoly::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("MPoly: exponent vector has wrong length");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational MPoly::eval(std::span<const Rational> x) const
{
    if (static_cast<int>(x.size()) < nvars_)
        throw std::invalid_argument("MPoly::eval: too few values");
    Rational r;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                t *= x[i].pow(static_cast<unsigned>(e[i]));
        r += t;
    }
    return r;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result = constant(nvars_, Rational(1));
    MPoly base = *this;
    while (e) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e)
            base = base * base;
    }
    return result;
}

MPoly MPoly::translate(std::span<const Rational> shifts) const
{
    if (static_cast<int>(shifts.size()) != nvars_)
        throw std::invalid_argument("MPoly::translate: wrong number of shifts");
    std::vector<MPoly> lin;
    for (int i = 0; i < nvars_; ++i)
        lin.push_back(variable(nvars_, i) + constant(nvars_, shifts[static_cast<size_t>(i)]));
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        MPoly t = constant(nvars_, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[static_cast<size_t>(i)] != 0)
                t = t * lin[static_cast<size_t>(i)].pow(static_cast<unsigned>(e[static_cast<size_t>(i)]));
        r += t;
    }
    return r;
}

long MPoly::max_weight(std::span<const int> weights) const
{
    long best = -1;
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i)
            w += static_cast<long>(weights[i]) * e[i];
        best = std::max(best, w);
    }
    return best;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("MPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("MPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("MPoly: variable count mismatch");
    MPoly r(a.nvars_);
    MPoly::Exponents e(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

} // namespace hqm
