#include "hqm/bo.hpp"

#include "hqm/covercount.hpp"
#include "hqm/parallel.hpp"
#include "hqm/partitions.hpp"
#include "hqm/quasimod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hqm {

namespace {

void check_index(const MultiIndex& k)
{
    for (int v : k)
        if (v < 0)
            throw std::invalid_argument("multi-index entries must be nonnegative");
}

int total_degree(const MultiIndex& k)
{
    return std::accumulate(k.begin(), k.end(), 0);
}

// Every multi-index with `len` entries and total degree <= tmax.
std::vector<MultiIndex> indices_up_to(size_t len, int tmax)
{
    std::vector<MultiIndex> out;
    MultiIndex cur(len, 0);
    auto rec = [&](auto&& self, size_t pos, int left) -> void {
        if (pos == len) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, tmax);
    return out;
}

// Partition sums sum_lambda prod_i p_{i+2}(lambda)^{k_i} for each index, per d.
std::vector<QSeries> vprime_all(const std::vector<MultiIndex>& ks, int mmax, int dmax)
{
    const size_t nk = ks.size();
    std::vector<std::vector<Rational>> per_d(static_cast<size_t>(dmax + 1), std::vector<Rational>(nk));
    parallel_for(per_d.size(), [&](size_t d) {
        auto& sums = per_d[d];
        for_each_partition(static_cast<int>(d), [&](std::span<const int> parts) {
            const auto p = shifted_power_sums(parts, mmax);
            for (size_t j = 0; j < nk; ++j) {
                Rational term = 1;
                for (size_t i = 0; i < ks[j].size(); ++i)
                    if (ks[j][i])
                        term *= p[i + 2].pow(static_cast<unsigned>(ks[j][i]));
                sums[j] += term;
            }
        });
    });
    std::vector<QSeries> out;
    for (size_t j = 0; j < nk; ++j) {
        std::map<long, Rational> terms;
        for (size_t d = 0; d < per_d.size(); ++d)
            terms.emplace(static_cast<long>(d) * QSeries::kDenomExp, per_d[d][j]);
        out.emplace_back(terms, trunc24_for(dmax));
    }
    return out;
}

// Sub-indices L <= K.
std::vector<MultiIndex> sub_indices(const MultiIndex& k)
{
    std::vector<MultiIndex> out{MultiIndex(k.size(), 0)};
    for (size_t i = 0; i < k.size(); ++i) {
        std::vector<MultiIndex> next;
        for (const auto& l : out)
            for (int v = 0; v <= k[i]; ++v) {
                next.push_back(l);
                next.back()[i] = v;
            }
        out = std::move(next);
    }
    return out;
}

// A_K = q^(-1/24) sum_{L<=K} binom(K, L) prod (-xi(-i))^{l_i} A'_{K-L}
template <class Lookup>
QSeries fold_xi(const MultiIndex& k, Lookup&& vprime)
{
    QSeries acc(QSeries::kExact);
    for (const auto& l : sub_indices(k)) {
        Rational c = 1;
        MultiIndex rest = k;
        for (size_t i = 0; i < k.size(); ++i) {
            if (!l[i])
                continue;
            c *= Rational(binomial(k[i], l[i])) * (-xi_neg(static_cast<int>(i) + 2)).pow(static_cast<unsigned>(l[i]));
            rest[i] -= l[i];
        }
        if (!c.is_zero())
            acc += vprime(rest).scaled(c);
    }
    return acc.shifted(-1);
}

} // namespace

int expected_weight(const MultiIndex& k)
{
    check_index(k);
    int w = 0;
    for (size_t i = 0; i < k.size(); ++i)
        w += (static_cast<int>(i) + 3) * k[i];
    return w;
}

Rational xi_neg(int j)
{
    if (j < 1)
        throw std::invalid_argument("xi_neg: j must be positive");
    const Rational zeta = -bernoulli(j + 1) / Rational(j + 1);
    return (Rational(1) / Rational(2).pow(static_cast<unsigned>(j)) - Rational(1)) * zeta;
}

QSeries vprime_taylor(const MultiIndex& k, int dmax)
{
    check_index(k);
    if (dmax < 0)
        throw std::invalid_argument("dmax must be nonnegative");
    return vprime_all({k}, static_cast<int>(k.size()) + 1, dmax).front();
}

QSeries v_taylor(const MultiIndex& k, int dmax)
{
    check_index(k);
    if (dmax < 0)
        throw std::invalid_argument("dmax must be nonnegative");
    const auto subs = sub_indices(k);
    const auto vp = vprime_all(subs, static_cast<int>(k.size()) + 1, dmax);
    std::map<MultiIndex, QSeries> table;
    for (size_t i = 0; i < subs.size(); ++i)
        table.emplace(subs[i], vp[i]);
    return fold_xi(k, [&](const MultiIndex& r) -> const QSeries& { return table.at(r); });
}

TSeries TSeries::build(int mmax, int tmax, int dmax)
{
    if (mmax < 1 || tmax < 0 || dmax < 0)
        throw std::invalid_argument("TSeries::build: need mmax >= 1, tmax >= 0, dmax >= 0");
    TSeries t;
    t.mmax_ = mmax;
    t.tmax_ = tmax;
    t.dmax_ = dmax;
    const auto ks = indices_up_to(static_cast<size_t>(mmax - 1), tmax);
    const auto vp = vprime_all(ks, mmax, dmax);
    std::map<MultiIndex, QSeries> vprime;
    for (size_t i = 0; i < ks.size(); ++i)
        vprime.emplace(ks[i], vp[i]);
    for (const auto& k : ks)
        t.a_.emplace(k, fold_xi(k, [&](const MultiIndex& r) -> const QSeries& { return vprime.at(r); }));
    return t;
}

MultiIndex TSeries::normalize(const MultiIndex& k) const
{
    check_index(k);
    const size_t len = static_cast<size_t>(mmax_ - 1);
    for (size_t i = len; i < k.size(); ++i)
        if (k[i])
            throw std::out_of_range("TSeries: index uses t_" + std::to_string(i + 2) + " beyond mmax");
    MultiIndex out(len, 0);
    std::copy_n(k.begin(), std::min(len, k.size()), out.begin());
    return out;
}

const QSeries& TSeries::coeff(const MultiIndex& k) const
{
    const MultiIndex n = normalize(k);
    if (total_degree(n) > tmax_)
        throw std::out_of_range("TSeries: t-degree " + std::to_string(total_degree(n)) + " exceeds " + std::to_string(tmax_));
    return a_.at(n);
}

const QSeries& TSeries::derivative_at(const MultiIndex& k, int i) const
{
    if (i < 2 || i > mmax_)
        throw std::out_of_range("TSeries: derivative variable out of range");
    MultiIndex n = normalize(k);
    ++n[static_cast<size_t>(i - 2)];
    return coeff(n);
}

int required_t_degree(const YPoly& phi, int b)
{
    int best = 0;
    for (const auto& [e, c] : phi.poly().terms())
        best = std::max(best, std::accumulate(e.begin() + 1, e.end(), 0));
    return best * b;
}

QSeries etaZ_via_operator(int m, int b, const YPoly& phi, const TSeries& v)
{
    if (m < 2 || b < 0)
        throw std::invalid_argument("etaZ_via_operator: need m >= 2, b >= 0");
    if (phi.m() != m)
        throw std::invalid_argument("etaZ_via_operator: phi does not match m");
    const int need = required_t_degree(phi, b);
    if (v.tmax() < need || v.mmax() < m)
        throw std::invalid_argument("etaZ_via_operator: TSeries too shallow; required t-degree " + std::to_string(need) +
                                    " in t_2..t_" + std::to_string(m));
    std::vector<Rational> shifts;
    for (int j = 1; j <= m; ++j)
        shifts.push_back(xi_neg(j));
    const MPoly op = phi.poly().pow(static_cast<unsigned>(b)).translate(shifts);
    QSeries acc(QSeries::kExact);
    for (const auto& [e, c] : op.terms()) {
        QSeries term = v.coeff(MultiIndex(e.begin() + 1, e.end()));
        for (int i = 0; i < e[0]; ++i)
            term = d_operator(term);
        acc += term.scaled(c);
    }
    const long t = trunc24_for(v.dmax());
    QSeries out = (eta_series(t) * acc).scaled(Rational(BigInt(1), factorial(static_cast<unsigned>(b))));
    if (!out.has_integer_exponents())
        throw std::logic_error("etaZ_via_operator: fractional exponents survived");
    return out.truncated(std::min(out.trunc24(), t));
}

QSeries etaZ_via_operator(int m, int b, int dmax, const YPoly& phi)
{
    if (dmax < 0)
        throw std::invalid_argument("dmax must be nonnegative");
    return etaZ_via_operator(m, b, phi, TSeries::build(m, required_t_degree(phi, b), dmax));
}

QSeries etaZ_direct(int m, int b, int dmax)
{
    const long t = trunc24_for(dmax);
    return (euler_product(t) * zhat_block(m, b, dmax)).truncated(t).scaled(Rational(BigInt(1), factorial(static_cast<unsigned>(b))));
}

} // namespace hqm
