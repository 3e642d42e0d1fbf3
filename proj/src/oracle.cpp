// Brute-force enumeration of Hom(pi_1, S_d) with prescribed m-cycle monodromy.

#include "hqm/covercount.hpp"

#include "hqm/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hqm {

namespace {

constexpr int kMaxDegree = 6;
using Perm = std::array<uint8_t, kMaxDegree>;

struct Group {
    int d;
    std::vector<Perm> elements;
    std::vector<Perm> m_cycles;
};

Perm compose(const Perm& a, const Perm& b, int d) // (a b)(x) = a(b(x))
{
    Perm r{};
    for (int x = 0; x < d; ++x)
        r[x] = a[b[x]];
    return r;
}

Perm inverse(const Perm& a, int d)
{
    Perm r{};
    for (int x = 0; x < d; ++x)
        r[a[x]] = static_cast<uint8_t>(x);
    return r;
}

bool is_identity(const Perm& a, int d)
{
    for (int x = 0; x < d; ++x)
        if (a[x] != x)
            return false;
    return true;
}

bool is_m_cycle(const Perm& p, int d, int m)
{
    std::array<bool, kMaxDegree> seen{};
    int cycles_of_m = 0;
    for (int x = 0; x < d; ++x) {
        if (seen[x])
            continue;
        int len = 0;
        for (int y = x; !seen[y]; y = p[y]) {
            seen[y] = true;
            ++len;
        }
        if (len == m)
            ++cycles_of_m;
        else if (len != 1)
            return false;
    }
    return cycles_of_m == 1;
}

Group make_group(int d, int m)
{
    Group g{d, {}, {}};
    Perm p{};
    std::iota(p.begin(), p.begin() + d, 0);
    do {
        g.elements.push_back(p);
        if (is_m_cycle(p, d, m))
            g.m_cycles.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));
    return g;
}

bool transitive(const std::vector<const Perm*>& gens, int d)
{
    std::array<int, kMaxDegree> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = d;
    for (const Perm* g : gens) {
        for (int x = 0; x < d; ++x) {
            int a = find(x), b = find((*g)[x]);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

Rational count_tuples(int m, int d, int b, bool connected)
{
    if (m < 2 || d < 0 || b < 0)
        throw std::invalid_argument("oracle: need m >= 2, d >= 0, b >= 0");
    if (d > kMaxDegree || oracle_cost(m, d, b) > kOracleMaxWork) {
        std::ostringstream msg;
        msg << "oracle: refusing d=" << d << ", b=" << b << " (about " << oracle_cost(m, d, b)
            << " tuple tests; limit d <= " << kMaxDegree << ")";
        throw std::invalid_argument(msg.str());
    }
    if (d == 0)
        return Rational(b == 0 && !connected ? 1 : 0);

    const Group g = make_group(d, m);
    std::vector<BigInt> per_alpha(g.elements.size(), 0);
    parallel_for(g.elements.size(), [&](size_t ia) {
        const Perm& alpha = g.elements[ia];
        const Perm alpha_inv = inverse(alpha, d);
        unsigned long hits = 0;
        std::vector<const Perm*> gens{&alpha, nullptr};
        std::vector<const Perm*> gammas(static_cast<size_t>(b), nullptr);
        for (const Perm& beta : g.elements) {
            const Perm comm = compose(compose(alpha, beta, d), compose(alpha_inv, inverse(beta, d), d), d);
            gens[1] = &beta;
            if (b == 0) {
                if (is_identity(comm, d) && (!connected || transitive(gens, d)))
                    ++hits;
                continue;
            }
            // gamma_1..gamma_{b-1} enumerated; gamma_b forced to prefix^-1 * comm
            Perm last{};
            auto recurse = [&](auto&& self, int depth, const Perm& prefix) -> void {
                if (depth == b - 1) {
                    last = compose(inverse(prefix, d), comm, d);
                    if (!is_m_cycle(last, d, m))
                        return;
                    if (connected) {
                        gammas[static_cast<size_t>(b - 1)] = &last;
                        std::vector<const Perm*> all = gens;
                        all.insert(all.end(), gammas.begin(), gammas.end());
                        if (!transitive(all, d))
                            return;
                    }
                    ++hits;
                    return;
                }
                for (const Perm& c : g.m_cycles) {
                    gammas[static_cast<size_t>(depth)] = &c;
                    self(self, depth + 1, compose(prefix, c, d));
                }
            };
            Perm id{};
            std::iota(id.begin(), id.begin() + d, 0);
            recurse(recurse, 0, id);
        }
        per_alpha[ia] = hits;
    });
    BigInt total = 0;
    for (const auto& v : per_alpha)
        total += v;
    return Rational(total, factorial(static_cast<unsigned>(d)));
}

} // namespace

double oracle_cost(int m, int d, int b)
{
    double fact = std::tgamma(d + 1.0);
    double cls = d >= m ? fact / (m * std::tgamma(d - m + 1.0)) : 0.0;
    return fact * fact * (b >= 1 ? std::pow(std::max(cls, 1.0), b - 1) : 1.0);
}

Rational brute_hom_count(int m, int d, int b)
{
    return count_tuples(m, d, b, false);
}

Rational brute_connected_count(int m, int d, int b)
{
    return count_tuples(m, d, b, true);
}

} // namespace hqm
