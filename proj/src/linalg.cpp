#include "hqm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hqm {

namespace {

std::vector<BigInt> integer_row(const std::vector<Rational>& row, const Rational& rhs)
{
    BigInt l = 1;
    for (const auto& v : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.denominator().get_mpz_t());
    std::vector<BigInt> out;
    out.reserve(row.size() + 1);
    for (const auto& v : row)
        out.push_back(v.numerator() * (l / v.denominator()));
    out.push_back(rhs.numerator() * (l / rhs.denominator()));
    return out;
}

void remove_content(std::vector<BigInt>& row)
{
    BigInt g = 0;
    for (const auto& v : row)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

} // namespace

LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("solve_exact: row count mismatch");
    const size_t rows = a.size();
    const size_t n = rows == 0 ? 0 : a[0].size();
    std::vector<std::vector<BigInt>> m;
    std::vector<size_t> origin;
    m.reserve(rows);
    for (size_t i = 0; i < rows; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("solve_exact: ragged matrix");
        m.push_back(integer_row(a[i], b[i]));
        origin.push_back(i);
    }

    LinearSolution sol;
    std::vector<size_t> pivot_cols;
    BigInt prev = 1;
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows; ++col) {
        size_t p = r;
        while (p < rows && m[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        std::swap(origin[p], origin[r]);
        const BigInt& piv = m[r][col];
        for (size_t i = r + 1; i < rows; ++i) {
            const BigInt factor = m[i][col];
            for (size_t j = col + 1; j <= n; ++j) {
                BigInt v = piv * m[i][j] - factor * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            // columns skipped earlier in this row were already zero
            m[i][col] = 0;
        }
        prev = piv;
        pivot_cols.push_back(col);
        ++r;
    }
    sol.rank = r;

    for (size_t i = r; i < rows; ++i) {
        if (m[i][n] != 0) {
            sol.status = LinearSolution::Status::inconsistent;
            size_t first = origin[i];
            for (size_t k = i + 1; k < rows; ++k)
                if (m[k][n] != 0 && origin[k] < first)
                    first = origin[k];
            sol.inconsistent_row = first;
            return sol;
        }
    }
    if (r < n) {
        sol.status = LinearSolution::Status::underdetermined;
        return sol;
    }

    sol.x.assign(n, Rational());
    for (size_t k = r; k-- > 0;) {
        const size_t col = pivot_cols[k];
        Rational s(m[k][n]);
        for (size_t j = col + 1; j < n; ++j)
            if (m[k][j] != 0)
                s -= Rational(m[k][j]) * sol.x[j];
        sol.x[col] = s / Rational(m[k][col]);
    }
    sol.status = LinearSolution::Status::unique;
    return sol;
}

IncrementalEchelon::Outcome IncrementalEchelon::add_row(const std::vector<Rational>& row, const Rational& rhs)
{
    if (row.size() != ncols_)
        throw std::invalid_argument("IncrementalEchelon: row length mismatch");
    std::vector<BigInt> v = integer_row(row, rhs);
    for (size_t k = 0; k < rows_.size(); ++k) {
        const size_t pc = pivots_[k];
        if (v[pc] == 0)
            continue;
        const BigInt a = rows_[k][pc];
        const BigInt c = v[pc];
        for (size_t j = 0; j <= ncols_; ++j)
            v[j] = a * v[j] - c * rows_[k][j];
        remove_content(v);
    }
    size_t pc = 0;
    while (pc < ncols_ && v[pc] == 0)
        ++pc;
    if (pc == ncols_)
        return v[ncols_] == 0 ? Outcome::dependent : Outcome::inconsistent;
    remove_content(v);
    // keep earlier rows reduced in the new pivot column
    for (auto& other : rows_) {
        if (other[pc] == 0)
            continue;
        const BigInt a = v[pc];
        const BigInt c = other[pc];
        for (size_t j = 0; j <= ncols_; ++j)
            other[j] = a * other[j] - c * v[j];
        remove_content(other);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return Outcome::independent;
}

} // namespace hqm
