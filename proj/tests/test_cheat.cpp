#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ordpar/cheat.hpp"
#include "ordpar/errors.hpp"
#include "ordpar/exactlp.hpp"
#include "ordpar/separation.hpp"

using namespace ordpar;

namespace {
std::vector<Rat> rats(std::initializer_list<Rat> values) { return values; }
}  // namespace

TEST_CASE("lemma7_witness: one example per case")
{
    auto w = lemma7_witness(4, Rat(1, 4));
    CHECK(w.case_tag == WitnessCase::Case1);
    CHECK(w.x == rats({Rat(1, 4), 0, 0, 0}));
    CHECK(w.achieved == Rat(1, 4));

    w = lemma7_witness(3, Rat(14, 5));
    CHECK(w.case_tag == WitnessCase::Case2);
    CHECK(w.x == rats({1, 1, Rat(4, 5)}));
    CHECK(w.achieved == Rat(1, 5));

    w = lemma7_witness(4, Rat(2));
    CHECK(w.case_tag == WitnessCase::Case3a);
    CHECK(w.x == rats({1, Rat(1, 2), Rat(1, 4), Rat(1, 4)}));
    CHECK(alternating_sum(w.x) == Rat(1, 2));
    CHECK(w.achieved == Rat(1, 2));

    w = lemma7_witness(4, Rat(3));
    CHECK(w.case_tag == WitnessCase::Case3b);
    CHECK(w.x == rats({1, Rat(3, 4), Rat(3, 4), Rat(1, 2)}));
    CHECK(w.achieved == Rat(1, 2));

    w = lemma7_witness(2, Rat(1));
    CHECK(w.case_tag == WitnessCase::SmallNFallback);
    CHECK(w.x == rats({Rat(3, 4), Rat(1, 4)}));
    CHECK(w.achieved == Rat(1, 2));

    w = lemma7_witness(1, Rat(1, 2));
    CHECK(w.case_tag == WitnessCase::SmallNFallback);
    CHECK(w.x == rats({Rat(1, 2)}));
}

TEST_CASE("lemma7_witness: boundaries z = 1/2 and z = n - 1/2 go to case 3")
{
    auto w = lemma7_witness(4, Rat(1, 2));
    CHECK(w.case_tag == WitnessCase::Case3a);
    CHECK(w.x == rats({Rat(1, 2), 0, 0, 0}));
    w = lemma7_witness(4, Rat(7, 2));
    CHECK(w.case_tag == WitnessCase::Case3b);
    CHECK(w.x == rats({1, 1, 1, Rat(1, 2)}));
    // z = 3/2 is equally near k = 1 and k = 2; the smaller k is used.
    w = lemma7_witness(5, Rat(3, 2));
    CHECK(w.x == rats({Rat(1, 2), Rat(1, 2), Rat(1, 2), 0, 0}));
}

TEST_CASE("lemma7_witness: range checks")
{
    CHECK_THROWS_AS(lemma7_witness(3, Rat(-1, 16)), OutOfRange);
    CHECK_THROWS_AS(lemma7_witness(3, Rat(49, 16)), OutOfRange);
    CHECK_THROWS_AS(lemma7_witness(0, Rat(0)), OutOfRange);
    CHECK_THROWS_AS(verify_lemma7_optimality(2, Rat(3)), OutOfRange);
}

TEST_CASE("hedge LP optimum")
{
    CHECK(hedge_lp_optimum(4, Rat(2)) == Rat(1, 2));
    CHECK(hedge_lp_optimum(1, Rat(1)) == Rat(0));
    CHECK(hedge_lp_optimum(5, Rat(0)) == Rat(0));
    CHECK(verify_lemma7_optimality(4, Rat(2)));
    CHECK(verify_lemma7_optimality(1, Rat(1)));
    CHECK(verify_lemma7_optimality(5, Rat(0)));
}

TEST_CASE("property: witness invariants on the 1/16 grid")
{
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::int64_t t = 0; t <= static_cast<std::int64_t>(16 * n); ++t) {
            const Rat z(t, 16);
            const auto w = lemma7_witness(n, z);
            REQUIRE(w.x.size() == n);
            Rat sum, f;
            for (std::size_t j = 0; j < n; ++j) {
                sum += w.x[j];
                f += j % 2 == 0 ? w.x[j] : -w.x[j];
                CHECK(w.x[j] <= (j == 0 ? Rat(1) : w.x[j - 1]));
            }
            CHECK(w.x.back() >= Rat(0));
            CHECK(sum == z);
            const Rat nz = Rat(static_cast<std::int64_t>(n)) - z;
            const Rat expected = min(min(z, nz), Rat(1, 2));
            CHECK(min(f, Rat(1) - f) == expected);
            CHECK(w.achieved == expected);
            if (w.case_tag != WitnessCase::Case1 && w.case_tag != WitnessCase::Case2)
                CHECK(f == Rat(1, 2));
        }
}

TEST_CASE("theorem8_witness: worked examples")
{
    SUBCASE("four pairs at z = 1, all 2-subsets")
    {
        IndexFamily family;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                family.push_back({a, b});
        const auto r = theorem8_witness(GroupShape({2, 2, 2, 2}), rats({1, 1, 1, 1}), family);
        CHECK(r.condition.all_satisfied);
        for (const auto& s : r.condition.gamma_sums)
            CHECK(s == Rat(1));
        REQUIRE(r.point.has_value());
        CHECK(r.point->to_string() == "3/4,1/4;3/4,1/4;3/4,1/4;3/4,1/4");
        CHECK(r.restrictions_verified);
    }
    SUBCASE("gamma vanishes at the upper bound")
    {
        const auto r = theorem8_witness(GroupShape({2, 2}), rats({2, 2}), IndexFamily{{0, 1}});
        CHECK_FALSE(r.condition.all_satisfied);
        CHECK(r.condition.gamma_sums == rats({0}));
        CHECK(r.condition.failing_sets() == std::vector<std::size_t>{0});
        CHECK_FALSE(r.point.has_value());
    }
    SUBCASE("a single group cannot reach 1")
    {
        const auto r = theorem8_witness(GroupShape({4}), rats({2}), IndexFamily{{0}});
        CHECK(r.condition.gamma_sums == rats({Rat(1, 2)}));
        CHECK_FALSE(r.point.has_value());
    }
}

TEST_CASE("theorem8_witness: input checks")
{
    CHECK_THROWS_AS(theorem8_witness(GroupShape({2, 2}), rats({1, 3}), IndexFamily{{0, 1}}), OutOfRange);
    CHECK_THROWS_AS(theorem8_witness(GroupShape({2, 2}), rats({1, 1}), IndexFamily{{0, 2}}), IndexOutOfRange);
    CHECK_THROWS_AS(theorem8_witness(GroupShape({2, 2}), rats({1}), IndexFamily{{0}}), DimensionMismatch);
}

TEST_CASE("parse_family turns 1-based text into 0-based sets")
{
    CHECK(parse_family("1,2;2,3") == IndexFamily{{0, 1}, {1, 2}});
    CHECK(parse_family("4") == IndexFamily{{3}});
    CHECK_THROWS_AS(parse_family("0,1"), ParseError);
    CHECK_THROWS_AS(parse_family("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_family(""), ParseError);
}

TEST_CASE("property: random families with the condition yield points in both polytopes")
{
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> groups(2, 5), size(1, 4);
    int satisfied = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::size_t> sizes(groups(rng));
        for (auto& s : sizes)
            s = size(rng);
        const GroupShape shape(sizes);
        std::vector<Rat> z;
        for (auto s : sizes) {
            std::uniform_int_distribution<std::int64_t> t(0, 8 * static_cast<std::int64_t>(s));
            z.push_back(Rat(t(rng), 8));
        }
        IndexFamily family;
        for (int f = 0; f < 3; ++f) {
            std::vector<std::size_t> set;
            for (std::size_t i = 0; i < sizes.size(); ++i)
                if (rng() % 2)
                    set.push_back(i);
            if (!set.empty())
                family.push_back(set);
        }
        if (family.empty())
            continue;
        const auto r = theorem8_witness(shape, z, family);
        bool expect = true;
        for (std::size_t f = 0; f < family.size(); ++f) {
            Rat s;
            for (auto i : family[f])
                s += min(min(z[i], Rat(static_cast<std::int64_t>(sizes[i])) - z[i]), Rat(1, 2));
            CHECK(r.condition.gamma_sums[f] == s);
            expect = expect && s >= Rat(1);
        }
        CHECK(r.condition.all_satisfied == expect);
        CHECK(r.point.has_value() == expect);
        if (!r.point)
            continue;
        ++satisfied;
        CHECK(r.restrictions_verified);
        for (const auto& set : family) {
            const auto sub = r.point->restricted(set);
            std::vector<std::size_t> sub_sizes;
            for (auto i : set)
                sub_sizes.push_back(sizes[i]);
            const auto lam = oracle::lambdas(sub_sizes, sub.flat());
            CHECK(oracle::min_parity_lhs(lam, 0) >= Rat(1));
            CHECK(oracle::min_parity_lhs(lam, 1) >= Rat(1));
        }
    }
    CHECK(satisfied > 10);
}
