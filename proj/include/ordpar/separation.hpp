#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ordpar/core.hpp"

namespace ordpar {

/// a . x >= rhs over the flattened variables of a shape.
struct LinearInequality {
    std::vector<Rat> coefficients;
    Rat rhs;

    Rat evaluate(std::span<const Rat> x) const;
    bool holds_at(std::span<const Rat> x) const { return evaluate(x) >= rhs; }
    /// "a1 a2 ... an >= b"
    std::string to_string() const;
};

struct SeparationCertificate {
    /// f(x^(i)) per group.
    std::vector<Rat> lambdas;
    /// Sorted 0-based group indices of the flip set F.
    std::vector<std::size_t> f_set;
    /// Left-hand side of the parity inequality for F at the query point.
    Rat lhs_value;
    bool violated = false;
};

/**
 * Left-hand side sum_{i not in F} lambda_i + sum_{i in F} (1 - lambda_i) of
 * the parity inequality for flip set F, given per-group alternating sums.
 */
Rat parity_lhs(std::span<const Rat> lambdas, std::span<const std::size_t> f_set);

/**
 * Decides membership of an ordered-box point in the ordered parity polytope
 * of the given parity, in time linear in n.
 *
 * The flip set starts as {i : lambda_i > 1/2}; when its cardinality has the
 * wrong parity (Even polytopes need |F| odd, Odd polytopes |F| even) the
 * group whose lambda is closest to 1/2 is toggled, smallest index on ties.
 * The resulting F minimizes the left-hand side over all admissible flip sets.
 *
 * Throws NotInOrderedBox if some group is not ordered in [0,1], and
 * DimensionMismatch if the point does not match the shape.
 */
SeparationCertificate separate(const GroupShape& shape, Parity parity, const GroupedPoint& point);

/**
 * The parity inequality for flip set F in flat x-space. Group i outside F
 * contributes (+1,-1,+1,...), group i in F contributes (-1,+1,-1,...), and
 * the |F| constant terms move to the right-hand side: rhs = 1 - |F|.
 */
LinearInequality inequality_for_f_set(const GroupShape& shape, std::span<const std::size_t> f_set);

/// Largest group count accepted by outer_description.
inline constexpr std::size_t kMaxDescriptionGroups = 24;

/// The ordering and bound inequalities 1 >= x_1 >= ... >= x_r >= 0 of every group.
std::vector<LinearInequality> box_inequalities(const GroupShape& shape);

/**
 * Complete outer description: the box inequalities of every group followed
 * by one parity inequality per admissible flip set (|F| odd for Even, |F|
 * even including the empty set for Odd), in increasing bitmask order.
 * Throws TooManyGroups when k exceeds kMaxDescriptionGroups.
 */
std::vector<LinearInequality> outer_description(const GroupShape& shape, Parity parity);

/// Renders a 0-based index set 1-based, e.g. "{1,2,3}".
std::string format_index_set(std::span<const std::size_t> indices);

}  // namespace ordpar
