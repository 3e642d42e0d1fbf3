#include "hqm/characters.hpp"

#include "hqm/phipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hqm {

namespace {

void check_m(int m)
{
    if (m < 2)
        throw std::invalid_argument("character: m must be >= 2");
}

int total(std::span<const int> parts)
{
    int d = 0;
    for (int p : parts)
        d += p;
    return d;
}

} // namespace

BigInt class_size(int d, int m)
{
    check_m(m);
    if (d < 0)
        throw std::invalid_argument("class_size: d must be nonnegative");
    if (d < m)
        return 0;
    return factorial(static_cast<unsigned>(d)) / (BigInt(m) * factorial(static_cast<unsigned>(d - m)));
}

BigInt chi_single_cycle(std::span<const int> parts, int m)
{
    check_m(m);
    const int len = static_cast<int>(parts.size());
    // beta numbers lambda_i + len - i, strictly decreasing
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)] + len - i - 1;

    BigInt chi = 0;
    for (int i = 0; i < len; ++i) {
        int from = beta[static_cast<size_t>(i)];
        int to = from - m;
        if (to < 0 || std::ranges::find(beta, to) != beta.end())
            continue;
        int height = 0;
        for (int b : beta)
            if (b > to && b < from)
                ++height;
        std::vector<int> moved = beta;
        moved[static_cast<size_t>(i)] = to;
        std::ranges::sort(moved, std::greater<>());
        std::vector<int> rest;
        for (int j = 0; j < len; ++j) {
            int part = moved[static_cast<size_t>(j)] - (len - j - 1);
            if (part > 0)
                rest.push_back(part);
        }
        BigInt dim = hook_dim(rest);
        if (height % 2)
            chi -= dim;
        else
            chi += dim;
    }
    return chi;
}

Rational f_mn(const Partition& lambda, int m)
{
    check_m(m);
    const int d = lambda.size();
    if (d < m)
        return Rational();
    return Rational(class_size(d, m) * chi_single_cycle(lambda.parts(), m), hook_dim(lambda));
}

Rational f_residue(const Partition& lambda, int m)
{
    check_m(m);
    const int d = lambda.size();
    if (d < m)
        throw std::invalid_argument("f_residue: requires d >= m");
    // With y = 1/x the integrand is -y^{-m-2} S(y) dy where
    //   S(y) = prod_{k<m} (1 - k y) * prod_i (1 - (mu_i + m) y) / (1 - mu_i y),
    // mu_i = lambda_i + d - i. Hence f = -[y^{m+1}] S(y) / m^2.
    const auto order = static_cast<size_t>(m + 2);
    std::vector<Rational> s(order);
    s[0] = 1;
    auto mul_linear = [&](const Rational& a) { // S *= (1 - a y)
        for (size_t j = order - 1; j >= 1; --j)
            s[j] -= a * s[j - 1];
    };
    auto div_linear = [&](const Rational& a) { // S /= (1 - a y)
        for (size_t j = 1; j < order; ++j)
            s[j].add_product(a, s[j - 1]);
    };
    for (int k = 1; k < m; ++k)
        mul_linear(Rational(k));
    for (int i = 1; i <= d; ++i) {
        Rational mu(lambda.part(i) + d - i);
        mul_linear(mu + Rational(m));
        div_linear(mu);
    }
    return -s[order - 1] / Rational(m * m);
}

Rational f_phi(std::span<const int> parts, int m, const YPoly& phi)
{
    check_m(m);
    if (phi.m() != m)
        throw std::invalid_argument("f_phi: polynomial built for a different m");
    if (total(parts) < m)
        return Rational();
    std::vector<Rational> p = shifted_power_sums(parts, m);
    return phi.eval(std::span<const Rational>(p).subspan(1));
}

Rational f_phi(const Partition& lambda, int m, const YPoly& phi)
{
    return f_phi(lambda.parts(), m, phi);
}

} // namespace hqm
