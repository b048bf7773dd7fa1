#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "oracles.hpp"
#include "ordpar/errors.hpp"
#include "ordpar/exactlp.hpp"

using namespace ordpar;
using lp::Direction;
using lp::LinearProgram;
using lp::Sense;
using lp::Status;

TEST_CASE("solve: small textbook programs")
{
    SUBCASE("bounded maximum")
    {
        LinearProgram p(1);
        p.direction = Direction::Maximize;
        p.objective = {1};
        p.add_row({1}, Sense::LessEqual, Rat(3, 2));
        const auto out = lp::solve(p);
        CHECK(out.status == Status::Optimal);
        CHECK(out.value == Rat(3, 2));
        CHECK(out.solution == std::vector<Rat>{Rat(3, 2)});
    }
    SUBCASE("infeasible")
    {
        LinearProgram p(1);
        p.direction = Direction::Maximize;
        p.objective = {1};
        p.add_row({1}, Sense::LessEqual, Rat(1));
        p.add_row({1}, Sense::GreaterEqual, Rat(2));
        CHECK(lp::solve(p).status == Status::Infeasible);
    }
    SUBCASE("unbounded")
    {
        LinearProgram p(2);
        p.direction = Direction::Maximize;
        p.objective = {1, 1};
        CHECK(lp::solve(p).status == Status::Unbounded);
    }
    SUBCASE("equalities and two-sided bounds")
    {
        // min x - y  st  x + y = 1, -2 <= x <= 4, 0 <= y <= 3/2
        LinearProgram p(2);
        p.objective = {1, -1};
        p.lower[0] = Rat(-2);
        p.upper[0] = Rat(4);
        p.upper[1] = Rat(3, 2);
        p.add_row({1, 1}, Sense::Equal, Rat(1));
        const auto out = lp::solve(p);
        REQUIRE(out.status == Status::Optimal);
        CHECK(out.value == Rat(-2));
        CHECK(out.solution == std::vector<Rat>{Rat(-1, 2), Rat(3, 2)});
        CHECK(lp::satisfies(p, out.solution));
    }
    SUBCASE("negative right-hand sides and a free variable without bounds")
    {
        // min x  st  x >= -5/3, x free
        LinearProgram p(1);
        p.objective = {1};
        p.lower[0].reset();
        p.add_row({1}, Sense::GreaterEqual, Rat(-5, 3));
        const auto out = lp::solve(p);
        REQUIRE(out.status == Status::Optimal);
        CHECK(out.value == Rat(-5, 3));
    }
    SUBCASE("redundant equality rows")
    {
        LinearProgram p(2);
        p.objective = {1, 2};
        p.add_row({1, 1}, Sense::Equal, Rat(2));
        p.add_row({2, 2}, Sense::Equal, Rat(4));
        const auto out = lp::solve(p);
        REQUIRE(out.status == Status::Optimal);
        CHECK(out.value == Rat(2));
    }
}

TEST_CASE("solve: Beale's cycling example terminates with the optimum")
{
    LinearProgram p(4);
    p.objective = {Rat(-3, 4), 20, Rat(-1, 2), 6};
    p.add_row({Rat(1, 4), -8, -1, 9}, Sense::LessEqual, 0);
    p.add_row({Rat(1, 2), -12, Rat(-1, 2), 3}, Sense::LessEqual, 0);
    p.add_row({0, 0, 1, 0}, Sense::LessEqual, 1);
    const auto out = lp::solve(p);
    REQUIRE(out.status == Status::Optimal);
    CHECK(out.value == Rat(-5, 4));
    CHECK(lp::satisfies(p, out.solution));
}

TEST_CASE("solve: malformed programs are rejected")
{
    LinearProgram p(2);
    p.rows.push_back({{1}, Sense::LessEqual, 1});
    CHECK_THROWS_AS(lp::solve(p), MalformedProgram);
    LinearProgram q(2);
    q.objective.push_back(1);
    CHECK_THROWS_AS(lp::solve(q), MalformedProgram);
}

TEST_CASE("debug dump names the direction and rows")
{
    LinearProgram p(2);
    p.objective = {1, Rat(-1, 2)};
    p.add_row({1, 1}, Sense::LessEqual, 3);
    const std::string text = lp::to_string(p);
    CHECK(text.find("min") == 0);
    CHECK(text.find("<= 3") != std::string::npos);
}

namespace {

// Solves a square system exactly by Gauss-Jordan; nullopt if singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a, std::vector<Rat> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero())
                continue;
            const Rat factor = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[r][j] -= factor * a[col][j];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

// Best objective over all basic feasible points of {A x <= b} (bounded region), or nullopt if empty.
std::optional<Rat> vertex_enumeration_min(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                                          const std::vector<Rat>& c)
{
    const std::size_t m = a.size(), n = c.size();
    std::optional<Rat> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n)
            continue;
        std::vector<std::vector<Rat>> sa;
        std::vector<Rat> sb;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1u) {
                sa.push_back(a[i]);
                sb.push_back(b[i]);
            }
        auto x = solve_square(sa, sb);
        if (!x)
            continue;
        bool feasible = true;
        for (std::size_t i = 0; i < m && feasible; ++i)
            feasible = oracle::dot(a[i], *x) <= b[i];
        if (!feasible)
            continue;
        const Rat v = oracle::dot(c, *x);
        if (!best || v < *best)
            best = v;
    }
    return best;
}

}  // namespace

TEST_CASE("property: simplex optimum matches vertex enumeration on random boxed programs")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), rhs(-3, 6);
    int optimal = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const std::size_t extra = 2 + trial % 3;
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        LinearProgram p(n);
        for (std::size_t j = 0; j < n; ++j) {
            p.lower[j] = Rat(-3);
            p.upper[j] = Rat(3);
            std::vector<Rat> lo(n), hi(n);
            lo[j] = -1;
            hi[j] = 1;
            a.push_back(lo);
            b.push_back(3);
            a.push_back(hi);
            b.push_back(3);
        }
        for (std::size_t i = 0; i < extra; ++i) {
            std::vector<Rat> row(n);
            for (auto& v : row)
                v = Rat(coef(rng), den(rng));
            const Rat r(rhs(rng), den(rng));
            p.add_row(row, Sense::LessEqual, r);
            a.push_back(row);
            b.push_back(r);
        }
        for (std::size_t j = 0; j < n; ++j)
            p.objective[j] = Rat(coef(rng), den(rng));

        const auto expected = vertex_enumeration_min(a, b, p.objective);
        const auto out = lp::solve(p);
        if (!expected) {
            CHECK(out.status == Status::Infeasible);
            ++infeasible;
            continue;
        }
        REQUIRE(out.status == Status::Optimal);
        CHECK(out.value == *expected);
        CHECK(lp::satisfies(p, out.solution));
        CHECK(oracle::dot(p.objective, out.solution) == out.value);
        ++optimal;
    }
    CHECK(optimal > 100);
    CHECK(infeasible > 0);
}

TEST_CASE("enumerate_points")
{
    const auto even22 = enumerate_points(GroupShape({2, 2}), Parity::Even);
    REQUIRE(even22.size() == 5);
    CHECK(even22[0].to_string() == "0,0;0,0");
    CHECK(even22[1].to_string() == "0,0;1,1");
    CHECK(even22[2].to_string() == "1,0;1,0");
    CHECK(even22[3].to_string() == "1,1;0,0");
    CHECK(even22[4].to_string() == "1,1;1,1");

    const auto odd1 = enumerate_points(GroupShape({1}), Parity::Odd);
    REQUIRE(odd1.size() == 1);
    CHECK(odd1[0].to_string() == "1");

    const auto even3 = enumerate_points(GroupShape({3}), Parity::Even);
    REQUIRE(even3.size() == 2);
    CHECK(even3[0].to_string() == "0,0,0");
    CHECK(even3[1].to_string() == "1,1,0");

    CHECK_THROWS_AS(enumerate_points(GroupShape(std::vector<std::size_t>(21, 1)), Parity::Even), TooLarge);
}

TEST_CASE("property: enumerate_points equals filtered {0,1}^n")
{
    const std::vector<std::vector<std::size_t>> shapes = {{1}, {4}, {1, 1}, {2, 3}, {1, 2, 1}, {3, 1, 2, 2}, {1, 1, 1, 1, 1, 1}};
    for (const auto& sizes : shapes)
        for (int parity = 0; parity < 2; ++parity) {
            auto expected = oracle::parity_points(sizes, parity);
            std::vector<std::vector<Rat>> got;
            for (const auto& p : enumerate_points(GroupShape(sizes), parity ? Parity::Odd : Parity::Even))
                got.push_back(p.flat());
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
        }
}

TEST_CASE("hull_membership")
{
    const std::vector<std::vector<Rat>> seg = {{0, 0}, {1, 1}};
    CHECK(hull_membership(seg, std::vector<Rat>{Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(hull_membership(seg, std::vector<Rat>{1, 0}));
    const auto even22 = enumerate_points(GroupShape({2, 2}), Parity::Even);
    CHECK(hull_membership(even22, GroupedPoint::parse("1,0;1,0")));
    CHECK_FALSE(hull_membership(even22, GroupedPoint::parse("1,1;1,0")));
    CHECK_THROWS_AS(hull_membership(seg, std::vector<Rat>{1}), DimensionMismatch);
}

TEST_CASE("glueing_check")
{
    using S = BinarySet;
    CHECK(glueing_check(S{{0}}, S{{0}}, S{{0}}, S{{0}}, 20));
    CHECK(glueing_check(S{{0}}, S{{1}}, S{{0}}, S{{1}}, 100));
    CHECK(glueing_check(S{{0, 0}}, S{{1, 1}}, S{{0}}, S{{1}}, 100));
    CHECK(glueing_check(S{{0, 1}, {1, 0}}, S{{1, 1}, {0, 0}}, S{{1, 0, 1}}, S{{0, 0, 0}, {1, 1, 1}}, 100));
    CHECK_THROWS_AS(glueing_check(S{}, S{{1}}, S{{0}}, S{{1}}, 5), EmptyComponent);
    CHECK_THROWS_AS(glueing_check(S{{0}}, S{{1, 1}}, S{{0}}, S{{1}}, 5), DimensionMismatch);
    CHECK_THROWS_AS(glueing_check(S{{0, 0, 0, 0, 0}}, S{{1, 1, 1, 1, 1}}, S{{0}}, S{{1}}, 5), TooLarge);
}

TEST_CASE("random points are on the grid and ordered")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const Rat r = random_grid_rational(rng);
        CHECK(r >= Rat(0));
        CHECK(r <= Rat(1));
        CHECK((r * Rat(720720)).is_integer());  // lcm(1..16)
        const auto p = random_ordered_point(rng, GroupShape({3, 2}));
        CHECK(is_ordered_unit_box(p));
    }
}
