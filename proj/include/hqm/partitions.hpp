#pragma once

#include "hqm/rational.hpp"

#include <compare>
#include <iosfwd>
#include <span>
#include <vector>

namespace hqm {

/// Integer partition: weakly decreasing positive parts. The empty partition has size 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] std::span<const int> parts() const { return parts_; }
    // lambda_i with 1-based i; zero beyond the last part.
    [[nodiscard]] int part(int i) const;

    [[nodiscard]] Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Written as (3,1,1); the empty partition as ().
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of d in lexicographically decreasing order, (d) first.
std::vector<Partition> enumerate_partitions(int d);

/// Streams the partitions of d (same order) as weakly decreasing part lists.
template <class F>
void for_each_partition(int d, F&& fn)
{
    if (d < 0)
        return;
    std::vector<int> a;
    if (d > 0)
        a.push_back(d);
    for (;;) {
        fn(std::span<const int>(a));
        // rightmost part > 1
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty())
            return;
        int v = --a.back();
        int rem = ones + 1;
        while (rem > 0) {
            int p = rem < v ? rem : v;
            a.push_back(p);
            rem -= p;
        }
    }
}

/// Frobenius coordinates shifted by 1/2: P = {lambda~_i > 0}, Q the same for the conjugate.
struct FrobeniusCoords {
    std::vector<Rational> P; // descending
    std::vector<Rational> Q; // descending
};

/// (lambda~_1, ..., lambda~_length) with lambda~_i = lambda_i - i + 1/2.
std::vector<Rational> shifted(const Partition& lambda, int length);

FrobeniusCoords frobenius(const Partition& lambda);

/// Shifted power sum p_k = sum_i (lambda~_i^k - (-i+1/2)^k), summed to the number of parts.
Rational pk(const Partition& lambda, int k);
/// Same sum taken over i = 1..length (length >= number of parts).
Rational pk_padded(const Partition& lambda, int k, int length);
/// p_k through the Frobenius form sum_P p^k - sum_Q (-q)^k.
Rational pk_via_frobenius(const Partition& lambda, int k);
/// p_0..p_kmax for a part list; integer arithmetic on doubled coordinates.
std::vector<Rational> shifted_power_sums(std::span<const int> parts, int kmax);

struct SymmetricFunctions {
    std::vector<Rational> e; // e_0..e_jmax
    std::vector<Rational> h; // h_0..h_jmax
};

/// Elementary and complete symmetric functions of x via their generating products.
SymmetricFunctions elementary_and_complete(std::span<const Rational> x, int jmax);

/// Sum over boxes (i, j) of the content j - i.
long content_sum(const Partition& lambda);
/// n(lambda) = sum_i (i - 1) lambda_i.
long n_stat(const Partition& lambda);
/// Dimension of the irreducible S_d representation, via the hook-length formula.
BigInt hook_dim(const Partition& lambda);
BigInt hook_dim(std::span<const int> parts);

} // namespace hqm
