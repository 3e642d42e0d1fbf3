#include "hqm/partitions.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hqm {

namespace {

Rational half(long odd_numerator)
{
    return Rational(BigInt(odd_numerator), BigInt(2));
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::part(int i) const
{
    return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    os << '(';
    for (int i = 0; i < p.length(); ++i)
        os << (i ? "," : "") << p.parts()[static_cast<size_t>(i)];
    return os << ')';
}

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : static_cast<size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

std::vector<Partition> enumerate_partitions(int d)
{
    std::vector<Partition> out;
    for_each_partition(d, [&](std::span<const int> a) { out.emplace_back(std::vector<int>(a.begin(), a.end())); });
    return out;
}

std::vector<Rational> shifted(const Partition& lambda, int length)
{
    if (length < lambda.length())
        throw std::invalid_argument("shifted: length below number of parts");
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(length));
    for (int i = 1; i <= length; ++i)
        out.push_back(half(2L * (lambda.part(i) - i) + 1));
    return out;
}

FrobeniusCoords frobenius(const Partition& lambda)
{
    FrobeniusCoords fc;
    Partition conj = lambda.conjugate();
    for (int i = 1; lambda.part(i) - i >= 0; ++i)
        fc.P.push_back(half(2L * (lambda.part(i) - i) + 1));
    for (int i = 1; conj.part(i) - i >= 0; ++i)
        fc.Q.push_back(half(2L * (conj.part(i) - i) + 1));
    return fc;
}

Rational pk_padded(const Partition& lambda, int k, int length)
{
    if (k < 0)
        throw std::invalid_argument("pk: k must be nonnegative");
    if (length < lambda.length())
        throw std::invalid_argument("pk: length below number of parts");
    Rational s;
    for (int i = 1; i <= length; ++i)
        s += half(2L * (lambda.part(i) - i) + 1).pow(static_cast<unsigned>(k)) - half(1 - 2L * i).pow(static_cast<unsigned>(k));
    return s;
}

Rational pk(const Partition& lambda, int k)
{
    return pk_padded(lambda, k, lambda.length());
}

Rational pk_via_frobenius(const Partition& lambda, int k)
{
    if (k < 0)
        throw std::invalid_argument("pk: k must be nonnegative");
    FrobeniusCoords fc = frobenius(lambda);
    Rational s;
    for (const auto& p : fc.P)
        s += p.pow(static_cast<unsigned>(k));
    for (const auto& q : fc.Q)
        s -= (-q).pow(static_cast<unsigned>(k));
    return s;
}

std::vector<Rational> shifted_power_sums(std::span<const int> parts, int kmax)
{
    // Doubled Frobenius coordinates 2p = 2(lambda_i - i) + 1 and 2q likewise
    // for the conjugate; 2^k p_k = sum (2p)^k - sum (-2q)^k.
    std::vector<long> twoP, twoQ;
    const int len = static_cast<int>(parts.size());
    for (int i = 1; i <= len && parts[static_cast<size_t>(i - 1)] >= i; ++i)
        twoP.push_back(2L * (parts[static_cast<size_t>(i - 1)] - i) + 1);
    // |Q| = |P| = side of the Durfee square
    for (int i = 1; i <= static_cast<int>(twoP.size()); ++i) {
        // conjugate part lambda'_i = #{j : lambda_j >= i}
        auto ci = std::upper_bound(parts.begin(), parts.end(), i, std::greater<>()) - parts.begin();
        twoQ.push_back(2L * (ci - i) + 1);
    }
    std::vector<Rational> out(static_cast<size_t>(kmax + 1));
    std::vector<BigInt> powP(twoP.size(), 1), powQ(twoQ.size(), 1);
    BigInt scale = 1;
    for (int k = 0; k <= kmax; ++k) {
        BigInt s = 0;
        for (const auto& v : powP)
            s += v;
        for (const auto& v : powQ)
            s -= v;
        out[static_cast<size_t>(k)] = Rational(s, scale);
        for (size_t i = 0; i < powP.size(); ++i)
            powP[i] *= twoP[i];
        for (size_t i = 0; i < powQ.size(); ++i)
            powQ[i] *= -twoQ[i];
        scale *= 2;
    }
    return out;
}

SymmetricFunctions elementary_and_complete(std::span<const Rational> x, int jmax)
{
    if (jmax < 0)
        throw std::invalid_argument("elementary_and_complete: jmax must be nonnegative");
    const auto n = static_cast<size_t>(jmax + 1);
    SymmetricFunctions sf{std::vector<Rational>(n), std::vector<Rational>(n)};
    sf.e[0] = 1;
    sf.h[0] = 1;
    // prod (1 + x_i y) and prod 1/(1 - x_i y), one factor at a time
    for (const auto& xi : x) {
        for (size_t j = n - 1; j >= 1; --j)
            sf.e[j].add_product(xi, sf.e[j - 1]);
        for (size_t j = 1; j < n; ++j)
            sf.h[j].add_product(xi, sf.h[j - 1]);
    }
    return sf;
}

long content_sum(const Partition& lambda)
{
    long s = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            s += j - i;
    return s;
}

long n_stat(const Partition& lambda)
{
    long s = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        s += static_cast<long>(i - 1) * lambda.part(i);
    return s;
}

BigInt hook_dim(std::span<const int> parts)
{
    const int len = static_cast<int>(parts.size());
    unsigned d = 0;
    for (int p : parts)
        d += static_cast<unsigned>(p);
    std::vector<int> conj(len == 0 ? 0 : static_cast<size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j)
            ++conj[static_cast<size_t>(j)];
    BigInt hooks = 1;
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < parts[static_cast<size_t>(i)]; ++j)
            hooks *= (parts[static_cast<size_t>(i)] - j - 1) + (conj[static_cast<size_t>(j)] - i - 1) + 1;
    return factorial(d) / hooks;
}

BigInt hook_dim(const Partition& lambda)
{
    return hook_dim(lambda.parts());
}

} // namespace hqm
