#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ordpar/core.hpp"
#include "ordpar/rational.hpp"

namespace ordpar::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };
enum class Direction { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

std::string to_string(Sense sense);
std::string to_string(Status status);

struct Row {
    std::vector<Rat> coefficients;
    Sense sense = Sense::GreaterEqual;
    Rat rhs;
};

/**
 * A linear program in natural row form. Every variable starts with lower
 * bound 0 and no upper bound; clear `lower[j]` for a free variable.
 */
struct LinearProgram {
    explicit LinearProgram(std::size_t variables = 0);

    std::size_t variable_count() const { return objective.size(); }
    void add_row(std::vector<Rat> coefficients, Sense sense, Rat rhs);

    Direction direction = Direction::Minimize;
    std::vector<Rat> objective;
    std::vector<Row> rows;
    std::vector<std::optional<Rat>> lower;
    std::vector<std::optional<Rat>> upper;
};

/// Debug dump in the form "min c.x st rows...".
std::string to_string(const LinearProgram& program);

struct LPOutcome {
    Status status = Status::Infeasible;
    Rat value;
    std::vector<Rat> solution;
    std::size_t pivots = 0;
};

/// Hard bound on simplex pivots per solve. Reaching it throws PivotLimitExceeded.
inline constexpr std::size_t kPivotLimit = 1'000'000;

/**
 * Solves the program exactly with a two-phase primal simplex using Bland's
 * least-index rule. Throws MalformedProgram on dimension mismatches.
 */
LPOutcome solve(const LinearProgram& program);

/// True iff the solution satisfies every row and bound exactly.
bool satisfies(const LinearProgram& program, std::span<const Rat> solution);

}  // namespace ordpar::lp

namespace ordpar {

/// Guard on the number of candidate points visited by enumerate_points.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/**
 * All ordered 0/1 points of the given total parity, generated from their
 * per-group count vectors in lexicographic order.
 */
std::vector<GroupedPoint> enumerate_points(const GroupShape& shape, Parity parity);

/// True iff x lies in the convex hull of the points (exact LP feasibility).
bool hull_membership(std::span<const std::vector<Rat>> points, std::span<const Rat> x);
bool hull_membership(std::span<const GroupedPoint> points, const GroupedPoint& x);

using BinarySet = std::vector<std::vector<Rat>>;

/**
 * Randomized check of the glueing property at a single coordinate:
 * conv[(X0 x {0} x Y0) u (X1 x {1} x Y1)] equals the intersection of
 * conv[(X0 x {0}) u (X1 x {1})] x R^n and R^m x conv[({0} x Y0) u ({1} x Y1)].
 * Each sample is tested for membership on both sides.
 */
bool glueing_check(const BinarySet& x0, const BinarySet& x1, const BinarySet& y0, const BinarySet& y1,
                   std::size_t samples, std::uint64_t seed = 20150101);

/// Rational in [0,1] on a grid with a random denominator <= max_denominator.
Rat random_grid_rational(std::mt19937_64& rng, std::int64_t max_denominator = 16);

/// Random point of the ordered box with grid-rational entries.
GroupedPoint random_ordered_point(std::mt19937_64& rng, const GroupShape& shape, std::int64_t max_denominator = 16);

}  // namespace ordpar
