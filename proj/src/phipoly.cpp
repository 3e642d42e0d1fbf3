#include "hqm/phipoly.hpp"

#include "hqm/characters.hpp"
#include "hqm/linalg.hpp"
#include "hqm/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace hqm {

namespace {

std::vector<int> y_weights(int m)
{
    std::vector<int> w;
    for (int j = 1; j <= m; ++j)
        w.push_back(j);
    return w;
}

// All exponent vectors (a_1..a_m) with sum j a_j <= bound.
void weighted_monomials(int m, int bound, int var, MPoly::Exponents& cur, std::vector<MPoly::Exponents>& out)
{
    if (var == m) {
        out.push_back(cur);
        return;
    }
    const int w = var + 1;
    for (int a = 0; a * w <= bound; ++a) {
        cur[static_cast<size_t>(var)] = a;
        weighted_monomials(m, bound - a * w, var + 1, cur, out);
    }
    cur[static_cast<size_t>(var)] = 0;
}

Rational monomial_value(const MPoly::Exponents& e, const std::vector<Rational>& p)
{
    Rational v = 1;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            v *= p[i + 1].pow(static_cast<unsigned>(e[i]));
    return v;
}

} // namespace

YPoly::YPoly(int m, MPoly poly) : m_(m), poly_(std::move(poly))
{
    if (poly_.nvars() != m)
        throw std::invalid_argument("YPoly: polynomial must have m variables");
}

long YPoly::weighted_degree() const
{
    return poly_.max_weight(y_weights(m_));
}

std::vector<std::pair<MPoly::Exponents, Rational>> YPoly::ordered_monomials() const
{
    const auto w = y_weights(m_);
    auto weight = [&](const MPoly::Exponents& e) {
        long s = 0;
        for (size_t i = 0; i < e.size(); ++i)
            s += static_cast<long>(w[i]) * e[i];
        return s;
    };
    std::vector<std::pair<MPoly::Exponents, Rational>> out(poly_.terms().begin(), poly_.terms().end());
    std::ranges::sort(out, [&](const auto& a, const auto& b) {
        long wa = weight(a.first), wb = weight(b.first);
        if (wa != wb)
            return wa > wb;
        return a.first > b.first;
    });
    return out;
}

DegreeBoundTooSmall::DegreeBoundTooSmall(int bound)
    : std::runtime_error("degree bound too small: " + std::to_string(bound)), bound_(bound)
{
}

DPoly faulhaber_shifted(int k)
{
    if (k < 0)
        throw std::invalid_argument("faulhaber_shifted: k must be nonnegative");
    // degree k + 1, so k + 2 nodes determine it
    std::vector<Rational> values{Rational(0)};
    Rational acc;
    for (int d = 1; d <= k + 1; ++d) {
        acc += Rational(BigInt(1 - 2 * d), BigInt(2)).pow(static_cast<unsigned>(k));
        values.push_back(acc);
    }
    return DPoly::interpolate(values);
}

DPoly bij_poly(int m, int i, int j)
{
    if (m < 2)
        throw std::invalid_argument("bij_poly: m must be >= 2");
    if (i < 0 || j < 0)
        throw std::invalid_argument("bij_poly: indices must be nonnegative");
    const int n = m + 1 - i - j;
    if (n < 0)
        return DPoly();

    // e_t(d - 1/2, ..., d - m + 1/2) from prod_k (1 + (d - k + 1/2) y)
    std::vector<DPoly> e(static_cast<size_t>(m + 1));
    e[0] = DPoly::constant(Rational(1));
    for (int k = 1; k <= m; ++k) {
        DPoly root = DPoly::variable() + DPoly::constant(Rational(BigInt(1 - 2 * k), BigInt(2)));
        for (int t = k; t >= 1; --t)
            e[static_cast<size_t>(t)] += e[static_cast<size_t>(t - 1)] * root;
    }

    DPoly result;
    DPoly binom = DPoly::constant(Rational(1)); // binom(d - i, s)
    Rational power = 1;                         // (-m)^s
    for (int s = 0; s <= n; ++s) {
        if (s > 0) {
            binom = binom * (DPoly::variable() + DPoly::constant(Rational(-i - s + 1)));
            binom *= Rational(1, s);
            power *= Rational(-m);
        }
        if (n - s <= m)
            result += e[static_cast<size_t>(n - s)] * binom * power;
    }
    return result;
}

YPoly build_phi_symbolic(int m)
{
    if (m < 2)
        throw std::invalid_argument("build_phi_symbolic: m must be >= 2");
    const MPoly one = MPoly::constant(m, Rational(1));

    // Raw power sums of lambda~ (length d) are p_k + S_k(d), with d = Y_1.
    std::vector<MPoly> raw{MPoly(m)};
    for (int k = 1; k <= m; ++k)
        raw.push_back(MPoly::variable(m, k - 1) + MPoly::from_univariate(m, 0, faulhaber_shifted(k)));

    const auto e = elementary_from_power_sums(raw, m, one);
    const auto h = complete_from_power_sums(raw, m, one);

    MPoly f(m);
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; i + j <= m; ++j) {
            MPoly b = MPoly::from_univariate(m, 0, bij_poly(m, i, j));
            if (b.is_zero())
                continue;
            MPoly term = e[static_cast<size_t>(i)] * h[static_cast<size_t>(j)] * b;
            if (i % 2)
                f -= term;
            else
                f += term;
        }
    }
    f *= Rational(-1, m * m);
    return YPoly(m, std::move(f));
}

YPoly build_phi_interpolate(int m, int degree_bound)
{
    if (m < 2)
        throw std::invalid_argument("build_phi_interpolate: m must be >= 2");
    if (degree_bound < m)
        throw std::invalid_argument("build_phi_interpolate: degree bound must be >= m");

    std::vector<MPoly::Exponents> monos;
    MPoly::Exponents cur(static_cast<size_t>(m), 0);
    weighted_monomials(m, degree_bound, 0, cur, monos);
    const size_t n = monos.size();

    RationalMatrix rows;
    std::vector<Rational> rhs;
    auto add_size = [&](int d) {
        for_each_partition(d, [&](std::span<const int> parts) {
            std::vector<Rational> p = shifted_power_sums(parts, m);
            std::vector<Rational> row;
            row.reserve(n);
            for (const auto& e : monos)
                row.push_back(monomial_value(e, p));
            rows.push_back(std::move(row));
            rhs.push_back(f_mn(Partition(std::vector<int>(parts.begin(), parts.end())), m));
        });
    };

    int d = m;
    while (rows.size() < n + 20)
        add_size(d++);

    LinearSolution sol = solve_exact(rows, rhs);
    for (int extra = 0; sol.status == LinearSolution::Status::underdetermined && extra < 8; ++extra) {
        add_size(d++);
        sol = solve_exact(rows, rhs);
    }
    if (sol.status == LinearSolution::Status::inconsistent)
        throw DegreeBoundTooSmall(degree_bound);
    if (sol.status == LinearSolution::Status::underdetermined)
        throw std::runtime_error("build_phi_interpolate: sample does not determine the polynomial");

    MPoly poly(m);
    for (size_t k = 0; k < n; ++k)
        poly.add_term(monos[k], sol.x[k]);
    YPoly phi(m, std::move(poly));

    // two further sizes, not used for fitting
    for (int v = d; v < d + 2; ++v) {
        bool ok = true;
        for_each_partition(v, [&](std::span<const int> parts) {
            if (ok && f_phi(parts, m, phi) != f_mn(Partition(std::vector<int>(parts.begin(), parts.end())), m))
                ok = false;
        });
        if (!ok)
            throw DegreeBoundTooSmall(degree_bound);
    }
    return phi;
}

InterpolatedPhi build_phi_interpolate_escalating(int m, int max_extra)
{
    for (int bound = m;; ++bound) {
        try {
            return {build_phi_interpolate(m, bound), bound};
        } catch (const DegreeBoundTooSmall&) {
            if (bound >= m + max_extra)
                throw;
        }
    }
}

PhiDiagnostics diagnose_phi(const YPoly& phi)
{
    const int m = phi.m();
    PhiDiagnostics diag{phi.weighted_degree(), false, false};
    diag.degree_at_most_m = diag.weighted_degree <= m;
    MPoly::Exponents top(static_cast<size_t>(m), 0);
    top[static_cast<size_t>(m - 1)] = 1;
    bool unique_top = true;
    const auto w = y_weights(m);
    for (const auto& [e, c] : phi.poly().terms()) {
        long s = 0;
        for (size_t i = 0; i < e.size(); ++i)
            s += static_cast<long>(w[i]) * e[i];
        if (s >= m && e != top)
            unique_top = false;
    }
    diag.leading_is_inverse_m = unique_top && phi.poly().coeff(top) == Rational(1, m);
    return diag;
}

const YPoly& phi_cached(int m)
{
    static std::mutex mu;
    static std::map<int, YPoly> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, build_phi_symbolic(m)).first;
    return it->second;
}

} // namespace hqm
