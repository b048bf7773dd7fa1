#include <algorithm>

#include "ordpar/errors.hpp"
#include "ordpar/exactlp.hpp"

namespace ordpar {

std::vector<GroupedPoint> enumerate_points(const GroupShape& shape, Parity parity)
{
    std::uint64_t candidates = 1;
    for (std::size_t r : shape.groups()) {
        candidates *= r + 1;
        if (candidates > kEnumerationLimit)
            throw TooLarge("shape " + shape.to_string() + " has more than " + std::to_string(kEnumerationLimit) +
                           " ordered 0/1 points");
    }

    std::vector<GroupedPoint> points;
    std::vector<std::size_t> counts(shape.group_count(), 0);
    const std::size_t wanted = parity == Parity::Even ? 0 : 1;
    while (true) {
        std::size_t total = 0;
        for (std::size_t c : counts)
            total += c;
        if (total % 2 == wanted) {
            std::vector<std::vector<Rat>> entries;
            entries.reserve(counts.size());
            for (std::size_t i = 0; i < counts.size(); ++i) {
                std::vector<Rat> group(shape.size(i));
                std::fill(group.begin(), group.begin() + static_cast<std::ptrdiff_t>(counts[i]), Rat(1));
                entries.push_back(std::move(group));
            }
            points.emplace_back(shape, std::move(entries));
        }
        // Odometer with the last group running fastest gives lexicographic order.
        std::size_t i = counts.size();
        while (i > 0 && counts[i - 1] == shape.size(i - 1))
            counts[--i] = 0;
        if (i == 0)
            return points;
        ++counts[i - 1];
    }
}

bool hull_membership(std::span<const std::vector<Rat>> points, std::span<const Rat> x)
{
    if (points.empty())
        throw EmptyComponent("hull membership needs at least one point");
    const std::size_t dim = x.size();
    for (const auto& p : points)
        if (p.size() != dim)
            throw DimensionMismatch("point of dimension " + std::to_string(p.size()) + " in hull of dimension " +
                                    std::to_string(dim));

    lp::LinearProgram program(points.size());
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<Rat> row(points.size());
        for (std::size_t v = 0; v < points.size(); ++v)
            row[v] = points[v][d];
        program.add_row(std::move(row), lp::Sense::Equal, x[d]);
    }
    program.add_row(std::vector<Rat>(points.size(), Rat(1)), lp::Sense::Equal, Rat(1));
    return lp::solve(program).status == lp::Status::Optimal;
}

bool hull_membership(std::span<const GroupedPoint> points, const GroupedPoint& x)
{
    std::vector<std::vector<Rat>> flat;
    flat.reserve(points.size());
    for (const auto& p : points) {
        if (!(p.shape() == x.shape()))
            throw DimensionMismatch("hull point shape " + p.shape().to_string() + " differs from query shape " +
                                    x.shape().to_string());
        flat.push_back(p.flat());
    }
    return hull_membership(flat, x.flat());
}

Rat random_grid_rational(std::mt19937_64& rng, std::int64_t max_denominator)
{
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_denominator);
    const std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(0, den);
    return Rat(num_dist(rng), den);
}

GroupedPoint random_ordered_point(std::mt19937_64& rng, const GroupShape& shape, std::int64_t max_denominator)
{
    std::vector<std::vector<Rat>> entries;
    entries.reserve(shape.group_count());
    for (std::size_t i = 0; i < shape.group_count(); ++i) {
        std::vector<Rat> group;
        for (std::size_t j = 0; j < shape.size(i); ++j)
            group.push_back(random_grid_rational(rng, max_denominator));
        std::sort(group.begin(), group.end(), [](const Rat& a, const Rat& b) { return a > b; });
        entries.push_back(std::move(group));
    }
    return GroupedPoint(shape, std::move(entries));
}

namespace {

std::size_t common_dimension(const BinarySet& set, const char* name)
{
    if (set.empty())
        throw EmptyComponent(std::string("glueing component ") + name + " is empty");
    const std::size_t dim = set.front().size();
    for (const auto& v : set)
        if (v.size() != dim)
            throw DimensionMismatch(std::string("vectors of ") + name + " differ in dimension");
    return dim;
}

std::vector<Rat> concat(std::span<const Rat> a, const Rat& middle, std::span<const Rat> b)
{
    std::vector<Rat> out(a.begin(), a.end());
    out.push_back(middle);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<Rat> random_combination(std::mt19937_64& rng, const BinarySet& points)
{
    std::vector<Rat> weights;
    Rat total;
    for (std::size_t i = 0; i < points.size(); ++i) {
        weights.push_back(random_grid_rational(rng));
        total += weights.back();
    }
    if (total.is_zero()) {
        weights.assign(points.size(), Rat(1));
        total = Rat(static_cast<std::int64_t>(points.size()));
    }
    std::vector<Rat> out(points.front().size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t d = 0; d < out.size(); ++d)
            if (!points[i][d].is_zero())
                out[d] += weights[i] / total * points[i][d];
    return out;
}

}  // namespace

bool glueing_check(const BinarySet& x0, const BinarySet& x1, const BinarySet& y0, const BinarySet& y1,
                   std::size_t samples, std::uint64_t seed)
{
    const std::size_t m = common_dimension(x0, "X0");
    const std::size_t n = common_dimension(y0, "Y0");
    if (common_dimension(x1, "X1") != m || common_dimension(y1, "Y1") != n)
        throw DimensionMismatch("glueing components disagree in dimension");
    if (m > 4 || n > 4)
        throw TooLarge("glueing check supports dimensions up to 4");

    const Rat zero(0), one(1);
    BinarySet glued, left, right, superset;
    for (const auto& x : x0)
        for (const auto& y : y0)
            glued.push_back(concat(x, zero, y));
    for (const auto& x : x1)
        for (const auto& y : y1)
            glued.push_back(concat(x, one, y));
    for (const auto& x : x0)
        left.push_back(concat(x, zero, {}));
    for (const auto& x : x1)
        left.push_back(concat(x, one, {}));
    for (const auto& y : y0)
        right.push_back(concat({}, zero, y));
    for (const auto& y : y1)
        right.push_back(concat({}, one, y));
    for (const auto* xs : {&x0, &x1})
        for (const auto* ys : {&y0, &y1})
            for (const auto& x : *xs)
                for (const auto& y : *ys)
                    for (const Rat* mid : {&zero, &one})
                        superset.push_back(concat(x, *mid, y));

    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        // Cycle through uniform grid points, points of the glued hull, and
        // points of the hull of all 0/1 combinations of the components.
        std::vector<Rat> p;
        switch (s % 3) {
        case 0:
            for (std::size_t d = 0; d < m + 1 + n; ++d)
                p.push_back(random_grid_rational(rng));
            break;
        case 1:
            p = random_combination(rng, glued);
            break;
        default:
            p = random_combination(rng, superset);
            break;
        }
        const std::span<const Rat> view(p);
        const bool in_glued = hull_membership(glued, view);
        const bool in_intersection =
            hull_membership(left, view.first(m + 1)) && hull_membership(right, view.subspan(m));
        if (in_glued != in_intersection)
            return false;
    }
    return true;
}

}  // namespace ordpar
