#include "hqm/quasimod.hpp"

#include "hqm/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hqm {

Rational bernoulli(int n)
{
    if (n < 0)
        throw std::invalid_argument("bernoulli: negative index");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        const long k = static_cast<long>(cache.size());
        // sum_{j=0}^{k} C(k+1, j) B_j = 0
        Rational s;
        for (long j = 0; j < k; ++j)
            s += Rational(binomial(k + 1, j)) * cache[static_cast<size_t>(j)];
        cache.push_back(-s / Rational(k + 1));
    }
    return cache[static_cast<size_t>(n)];
}

QSeries eisenstein(int k, int dmax)
{
    if (k != 2 && k != 4 && k != 6)
        throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
    if (dmax < 0)
        throw std::invalid_argument("eisenstein: dmax must be nonnegative");
    const Rational c = -Rational(2 * k) / bernoulli(k);
    std::map<long, Rational> terms{{0, Rational(1)}};
    for (long n = 1; n <= dmax; ++n) {
        BigInt sigma = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d)
                continue;
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
            sigma += p;
        }
        terms.emplace(n * QSeries::kDenomExp, c * Rational(sigma));
    }
    return QSeries(terms, trunc24_for(dmax));
}

void QMPoly::add_term(const Key& k, const Rational& c)
{
    if (k[0] < 0 || k[1] < 0 || k[2] < 0)
        throw std::invalid_argument("QMPoly: negative exponent");
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational QMPoly::coeff(const Key& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational() : it->second;
}

std::map<int, int> QMPoly::weight_breakdown() const
{
    std::map<int, int> out;
    for (const auto& [k, c] : terms_)
        ++out[qm_weight(k)];
    return out;
}

int QMPoly::max_weight() const
{
    int w = -1;
    for (const auto& [k, c] : terms_)
        w = std::max(w, qm_weight(k));
    return w;
}

std::vector<QMPoly::Key> qm_monomials_of_weight(int w)
{
    std::vector<QMPoly::Key> out;
    if (w < 0 || w % 2)
        return out;
    for (int c = 0; 6 * c <= w; ++c)
        for (int b = 0; 6 * c + 4 * b <= w; ++b)
            out.push_back({(w - 6 * c - 4 * b) / 2, b, c});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QMPoly::Key> qm_monomials_up_to(int wmax)
{
    std::vector<QMPoly::Key> out;
    for (int w = 0; w <= wmax; w += 2) {
        auto part = qm_monomials_of_weight(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

QSeries power(const QSeries& base, int e, long trunc)
{
    QSeries r = QSeries::constant(Rational(1), trunc);
    for (int i = 0; i < e; ++i)
        r = r * base;
    return r;
}

// Expansions of every monomial in `keys`, sharing powers of E2, E4, E6.
std::vector<QSeries> expand_monomials(const std::vector<QMPoly::Key>& keys, int dmax)
{
    const long t = trunc24_for(dmax);
    const std::array<QSeries, 3> e{eisenstein(2, dmax), eisenstein(4, dmax), eisenstein(6, dmax)};
    std::array<std::map<int, QSeries>, 3> powers;
    auto get = [&](int i, int n) -> const QSeries& {
        auto it = powers[i].find(n);
        if (it == powers[i].end())
            it = powers[i].emplace(n, power(e[i], n, t)).first;
        return it->second;
    };
    std::vector<QSeries> out;
    out.reserve(keys.size());
    for (const auto& k : keys)
        out.push_back(get(0, k[0]) * get(1, k[1]) * get(2, k[2]));
    return out;
}

} // namespace

QSeries qm_eval(const QMPoly& p, int dmax)
{
    std::vector<QMPoly::Key> keys;
    for (const auto& [k, c] : p.terms())
        keys.push_back(k);
    const auto ex = expand_monomials(keys, dmax);
    QSeries out(trunc24_for(dmax));
    size_t i = 0;
    for (const auto& [k, c] : p.terms())
        out += ex[i++].scaled(c);
    return out;
}

std::optional<long> first_mismatch(const QSeries& a, const QSeries& b)
{
    const long t = std::min(a.trunc24(), b.trunc24());
    const QSeries diff = a.truncated(t) - b.truncated(t);
    if (diff.is_zero())
        return std::nullopt;
    return diff.terms().begin()->first;
}

FitFailure::FitFailure(long q_order, const std::string& what) : std::runtime_error(what), q_order_(q_order) {}

Underdetermined::Underdetermined(int required_dmax, const std::string& what)
    : std::invalid_argument(what), required_dmax_(required_dmax)
{
}

FitResult fit_qm(const QSeries& f, int wmax, int margin, bool single_weight)
{
    if (!f.has_integer_exponents() || f.valuation() < 0)
        throw std::invalid_argument("fit_qm: series must have nonnegative integral exponents");
    if (wmax < 0)
        throw std::invalid_argument("fit_qm: wmax must be nonnegative");
    if (margin < 0)
        throw std::invalid_argument("fit_qm: margin must be nonnegative");
    const auto keys = single_weight ? qm_monomials_of_weight(wmax) : qm_monomials_up_to(wmax);
    const long n = static_cast<long>(keys.size());
    const long known = f.trunc24() == QSeries::kExact ? n + margin : f.known_q_orders();
    if (known < n + margin) {
        std::ostringstream msg;
        msg << "fit_qm: " << known << " known coefficients, need " << n + margin << " (" << n
            << " unknowns + margin " << margin << ")";
        throw Underdetermined(static_cast<int>(n + margin - 1), msg.str());
    }
    const int dmax = static_cast<int>(known - 1);

    FitResult res;
    res.wmax = wmax;
    res.unknowns = n;
    res.equations = known;
    if (n == 0) {
        if (auto e = first_mismatch(f, QSeries(trunc24_for(dmax))))
            throw FitFailure(*e / QSeries::kDenomExp, "fit_qm: no monomials of the requested weight and the series is nonzero");
        res.surplus_verified = known;
        return res;
    }

    const auto basis = expand_monomials(keys, dmax);
    IncrementalEchelon ech(static_cast<size_t>(n));
    RationalMatrix rows;
    std::vector<Rational> rhs;
    for (long q = 0; q < known; ++q) {
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(n));
        for (const auto& b : basis)
            row.push_back(b.coeff_q(q));
        const Rational target = f.coeff_q(q);
        switch (ech.add_row(row, target)) {
        case IncrementalEchelon::Outcome::independent:
            rows.push_back(std::move(row));
            rhs.push_back(target);
            break;
        case IncrementalEchelon::Outcome::dependent:
            break;
        case IncrementalEchelon::Outcome::inconsistent: {
            std::ostringstream msg;
            msg << "fit_qm: no QM polynomial of weight " << (single_weight ? "" : "<= ") << wmax
                << " matches the coefficient of q^" << q;
            throw FitFailure(q, msg.str());
        }
        }
    }
    const long rank = static_cast<long>(ech.rank());
    if (rank < n || known - rank < margin) {
        std::ostringstream msg;
        msg << "fit_qm: rank " << rank << " of " << n << " with " << known - rank << " check rows; need margin " << margin;
        throw Underdetermined(static_cast<int>(known + (n - rank) + std::max<long>(0, margin - (known - rank)) - 1), msg.str());
    }
    const LinearSolution sol = solve_exact(rows, rhs);
    if (sol.status != LinearSolution::Status::unique)
        throw std::logic_error("fit_qm: selected rows are not independent");
    for (size_t i = 0; i < keys.size(); ++i)
        res.poly.add_term(keys[i], sol.x[i]);
    if (auto e = first_mismatch(qm_eval(res.poly, dmax), f)) {
        const long q = *e / QSeries::kDenomExp;
        throw FitFailure(q, "fit_qm: verification failed at q^" + std::to_string(q));
    }
    res.surplus_verified = known - rank;
    return res;
}

FitResult fit_with_escalation(const QSeries& f, int w0, int wcap, int margin)
{
    if (w0 % 2)
        ++w0;
    std::optional<FitFailure> last;
    for (int w = w0; w <= wcap; w += 2) {
        try {
            return fit_qm(f, w, margin);
        } catch (const FitFailure& e) {
            last = e;
        }
    }
    if (last)
        throw *last;
    throw std::invalid_argument("fit_with_escalation: empty weight range");
}

QSeries eta_mul_d_iter(const QSeries& eta_a, int j, int dmax)
{
    if (j < 0)
        throw std::invalid_argument("eta_mul_d_iter: j must be nonnegative");
    const QSeries e2 = eisenstein(2, dmax).scaled(Rational(1, 24));
    QSeries g = eta_a.truncated(std::min(eta_a.trunc24(), trunc24_for(dmax)));
    for (int i = 0; i < j; ++i)
        g = d_operator(g) - e2 * g;
    return g;
}

std::vector<IdentityCheck> check_derivation_system(int dmax)
{
    const QSeries e2 = eisenstein(2, dmax), e4 = eisenstein(4, dmax), e6 = eisenstein(6, dmax);
    auto report = [](std::string name, const QSeries& lhs, const QSeries& rhs) {
        IdentityCheck c{std::move(name), true, std::nullopt};
        if (auto e = first_mismatch(lhs, rhs)) {
            c.ok = false;
            c.first_divergent_q = *e / QSeries::kDenomExp;
        }
        return c;
    };
    std::vector<IdentityCheck> out;
    out.push_back(report("D(E2) = (E2^2 - E4)/12", d_operator(e2), (e2 * e2 - e4).scaled(Rational(1, 12))));
    out.push_back(report("D(E4) = (E2 E4 - E6)/3", d_operator(e4), (e2 * e4 - e6).scaled(Rational(1, 3))));
    out.push_back(report("D(E6) = (E2 E6 - E4^2)/2", d_operator(e6), (e2 * e6 - e4 * e4).scaled(Rational(1, 2))));
    // Delta / q has constant term 1, and D log Delta = 1 + D log(Delta / q).
    const QSeries e4x = eisenstein(4, dmax + 1), e6x = eisenstein(6, dmax + 1);
    const QSeries delta = (e4x * e4x * e4x - e6x * e6x).scaled(Rational(1, 1728));
    const QSeries reduced = delta.shifted(-QSeries::kDenomExp);
    const QSeries dlog = QSeries::constant(Rational(1), reduced.trunc24()) + d_operator(log_series(reduced));
    out.push_back(report("D log Delta = E2", dlog, e2));
    return out;
}

} // namespace hqm
