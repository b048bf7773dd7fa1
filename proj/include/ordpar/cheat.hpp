#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordpar/core.hpp"

namespace ordpar {

enum class WitnessCase { Case1, Case2, Case3a, Case3b, SmallNFallback };

std::string to_string(WitnessCase c);

/**
 * A point x of the ordered box with sum z that hedges both parities as far
 * as possible: min(f(x), 1 - f(x)) equals gamma(z, n).
 */
struct HedgeWitness {
    std::size_t n = 0;
    Rat z;
    WitnessCase case_tag = WitnessCase::Case1;
    std::vector<Rat> x;
    Rat achieved;
};

/**
 * Builds the hedging witness for a binarized variable of range [0, n] with
 * value z.
 *
 *   z < 1/2          (z, 0, ..., 0)
 *   n - z < 1/2      (1, ..., 1, z - n + 1)
 *   otherwise        k = integer nearest to z (smaller on ties), clamped to
 *                    [1, n-1]; with lo = (2z - 2k + 1)/4, hi = (2z - 2k + 3)/4
 *     k <= n-2       (1 x (k-1), 1/2, lo, lo, 0, ...)
 *     k == n-1       (1 x (n-3), hi, hi, 1/2)
 *     n <= 2         ((2z+1)/4, (2z-1)/4), or (1/2) when n = 1
 *
 * Throws OutOfRange unless 0 <= z <= n.
 */
HedgeWitness lemma7_witness(std::size_t n, const Rat& z);

/// max min(f(x), 1 - f(x)) over the ordered box with sum(x) = z, by exact LP.
Rat hedge_lp_optimum(std::size_t n, const Rat& z);

/// True iff the LP optimum, gamma(z, n) and the witness value all coincide.
bool verify_lemma7_optimality(std::size_t n, const Rat& z);

using IndexFamily = std::vector<std::vector<std::size_t>>;

struct CutFamilyCondition {
    IndexFamily family;
    /// sum_{i in I} gamma(z_i) per member I of the family.
    std::vector<Rat> gamma_sums;
    bool all_satisfied = false;

    /// Positions in `family` whose gamma sum is below 1.
    std::vector<std::size_t> failing_sets() const;
};

struct MultiWitness {
    CutFamilyCondition condition;
    /// Per-group hedging witnesses, present only when the condition holds.
    std::optional<GroupedPoint> point;
    /// Every restriction of the point to a family member passed both the even
    /// and the odd separation oracle.
    bool restrictions_verified = false;
};

/**
 * Evaluates sum_{i in I} gamma(z_i) for every I of the family (0-based group
 * indices). When every sum reaches 1, assembles the per-group hedging
 * witnesses into one point and checks each restriction against both parity
 * polytopes. Throws OutOfRange for z_i outside [0, r_i], IndexOutOfRange for
 * bad group indices and DimensionMismatch when z has the wrong length.
 */
MultiWitness theorem8_witness(const GroupShape& shape, std::span<const Rat> z, const IndexFamily& family);

/// Parses "1,2;2,3" (1-based) into 0-based index sets.
IndexFamily parse_family(std::string_view text);

}  // namespace ordpar
