#include "hqm/covercount.hpp"

#include "hqm/characters.hpp"
#include "hqm/parallel.hpp"
#include "hqm/partitions.hpp"
#include "hqm/phipoly.hpp"

#include <stdexcept>

namespace hqm {

namespace {

void check_m(int m)
{
    if (m < 2)
        throw std::invalid_argument("m must be >= 2");
}

void check_dmax(int dmax)
{
    if (dmax < 0)
        throw std::invalid_argument("dmax must be nonnegative");
}

} // namespace

std::optional<int> branch_points_for_genus(int m, long g)
{
    check_m(m);
    if (g < 1 || (2 * (g - 1)) % (m - 1) != 0)
        return std::nullopt;
    return static_cast<int>(2 * (g - 1) / (m - 1));
}

Rational nhat(int m, int b, int d)
{
    check_m(m);
    if (b < 0 || d < 0)
        throw std::invalid_argument("nhat: b and d must be nonnegative");
    const YPoly& phi = phi_cached(m);
    Rational s;
    for_each_partition(d, [&](std::span<const int> parts) { s += f_phi(parts, m, phi).pow(static_cast<unsigned>(b)); });
    return s;
}

std::vector<QSeries> zhat_blocks(int m, int bmax, int dmax)
{
    check_m(m);
    check_dmax(dmax);
    if (bmax < 0)
        throw std::invalid_argument("zhat_blocks: bmax must be nonnegative");
    const YPoly& phi = phi_cached(m);
    const auto nb = static_cast<size_t>(bmax + 1);
    std::vector<std::vector<Rational>> per_d(static_cast<size_t>(dmax + 1), std::vector<Rational>(nb));
    parallel_for(per_d.size(), [&](size_t d) {
        auto& sums = per_d[d];
        for_each_partition(static_cast<int>(d), [&](std::span<const int> parts) {
            const Rational f = f_phi(parts, m, phi);
            Rational power = 1;
            for (size_t b = 0; b < nb; ++b) {
                sums[b] += power;
                power *= f;
            }
        });
    });
    std::vector<QSeries> blocks;
    for (size_t b = 0; b < nb; ++b) {
        std::map<long, Rational> terms;
        for (size_t d = 0; d < per_d.size(); ++d)
            terms.emplace(static_cast<long>(d) * QSeries::kDenomExp, per_d[d][b]);
        blocks.emplace_back(terms, trunc24_for(dmax));
    }
    return blocks;
}

QSeries zhat_block(int m, int b, int dmax)
{
    if (b < 0)
        throw std::invalid_argument("zhat_block: b must be nonnegative");
    return zhat_blocks(m, b, dmax).back();
}

XSeries x_log(const XSeries& c)
{
    if (c.empty())
        return {};
    const QSeries diff = c[0] - QSeries::constant(Rational(1));
    if (!diff.is_zero())
        throw std::domain_error("x_log: X^0 coefficient must be 1");
    XSeries l;
    l.emplace_back(c[0].trunc24());
    for (size_t b = 1; b < c.size(); ++b) {
        QSeries acc(QSeries::kExact);
        for (size_t k = 1; k < b; ++k)
            acc += (l[k] * c[b - k]).scaled(Rational(static_cast<long>(k)));
        l.push_back(c[b] - acc.scaled(Rational(1, static_cast<long>(b))));
    }
    return l;
}

XSeries x_exp(const XSeries& l)
{
    if (l.empty())
        return {};
    if (!l[0].is_zero())
        throw std::domain_error("x_exp: X^0 coefficient must vanish");
    XSeries e;
    e.push_back(QSeries::constant(Rational(1), l[0].trunc24()));
    for (size_t b = 1; b < l.size(); ++b) {
        QSeries acc(QSeries::kExact);
        for (size_t k = 1; k <= b; ++k)
            acc += (l[k] * e[b - k]).scaled(Rational(static_cast<long>(k)));
        e.push_back(acc.scaled(Rational(1, static_cast<long>(b))));
    }
    return e;
}

CountSeries connected_F(int m, long g, int dmax)
{
    check_m(m);
    check_dmax(dmax);
    if (g < 2)
        throw std::invalid_argument("connected_F: g must be >= 2 (use F1_series for g = 1)");
    CountSeries out{m, g, branch_points_for_genus(m, g), true, QSeries(trunc24_for(dmax))};
    if (!out.b)
        return out;
    const int b = *out.b;
    const long t = trunc24_for(dmax);
    const QSeries euler = euler_product(t);
    auto blocks = zhat_blocks(m, b, dmax);
    XSeries c;
    for (int k = 0; k <= b; ++k)
        c.push_back((euler * blocks[static_cast<size_t>(k)]).truncated(t).scaled(Rational(BigInt(1), factorial(static_cast<unsigned>(k)))));
    XSeries l = x_log(c);
    out.series = l[static_cast<size_t>(b)].scaled(Rational(factorial(static_cast<unsigned>(b))));
    return out;
}

CountSeries disconnected_F(int m, long g, int dmax)
{
    check_m(m);
    check_dmax(dmax);
    if (g < 1)
        throw std::invalid_argument("disconnected_F: g must be >= 1");
    CountSeries out{m, g, branch_points_for_genus(m, g), false, QSeries(trunc24_for(dmax))};
    if (!out.b)
        return out;
    QSeries block = zhat_block(m, *out.b, dmax);
    out.series = block - QSeries::constant(block.coeff(0));
    return out;
}

QSeries F1_series(int dmax)
{
    check_dmax(dmax);
    std::map<long, Rational> terms;
    for (long d = 1; d <= dmax; ++d) {
        long sigma = 0;
        for (long k = 1; k <= d; ++k)
            if (d % k == 0)
                sigma += k;
        terms.emplace(d * QSeries::kDenomExp, Rational(BigInt(sigma), BigInt(d)));
    }
    return QSeries(terms, trunc24_for(dmax));
}

} // namespace hqm
