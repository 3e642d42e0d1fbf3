#pragma once

#include "hqm/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hqm {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
    enum class Status { unique, underdetermined, inconsistent };
    Status status = Status::inconsistent;
    std::vector<Rational> x;              // set when unique
    size_t rank = 0;
    std::optional<size_t> inconsistent_row; // original index of a row that cannot be satisfied
};

/*
 * Solve A x = b exactly by fraction-free (Bareiss) elimination.
 *
 * Rows are scaled to integers first; every intermediate entry is then a
 * minor of the augmented integer matrix, so divisions are exact. A may be
 * rectangular. Pivots are taken from the lowest-index remaining row.
 */
LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

/*
 * Online rank tracker: rows are fed one at a time and reduced against the
 * previously accepted ones (fraction-free, content-normalized).
 */
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(size_t ncols) : ncols_(ncols) {}

    enum class Outcome { independent, dependent, inconsistent };
    // Row is the coefficient part; rhs the right-hand side.
    Outcome add_row(const std::vector<Rational>& row, const Rational& rhs);

    [[nodiscard]] size_t rank() const { return pivots_.size(); }
    [[nodiscard]] size_t ncols() const { return ncols_; }

private:
    size_t ncols_;
    std::vector<std::vector<BigInt>> rows_; // augmented, integer
    std::vector<size_t> pivots_;
};

} // namespace hqm
