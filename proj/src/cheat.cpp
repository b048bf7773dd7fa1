#include "ordpar/cheat.hpp"

#include <charconv>

#include "ordpar/exactlp.hpp"
#include "ordpar/separation.hpp"

namespace ordpar {

std::string to_string(WitnessCase c)
{
    switch (c) {
    case WitnessCase::Case1:
        return "Case1";
    case WitnessCase::Case2:
        return "Case2";
    case WitnessCase::Case3a:
        return "Case3a";
    case WitnessCase::Case3b:
        return "Case3b";
    case WitnessCase::SmallNFallback:
        return "SmallNFallback";
    }
    return "?";
}

HedgeWitness lemma7_witness(std::size_t n, const Rat& z)
{
    if (n == 0)
        throw OutOfRange("a binarized variable needs n >= 1");
    const Rat upper(static_cast<std::int64_t>(n));
    const Rat half(1, 2);
    if (z.sign() < 0 || z > upper)
        throw OutOfRange("z = " + z.to_string() + " outside [0, " + upper.to_string() + "]");

    HedgeWitness w;
    w.n = n;
    w.z = z;
    w.x.assign(n, Rat(0));
    if (z < half) {
        w.case_tag = WitnessCase::Case1;
        w.x[0] = z;
    } else if (upper - z < half) {
        w.case_tag = WitnessCase::Case2;
        for (std::size_t i = 0; i + 1 < n; ++i)
            w.x[i] = 1;
        w.x[n - 1] = z - upper + Rat(1);
    } else if (n <= 2) {
        w.case_tag = WitnessCase::SmallNFallback;
        if (n == 1) {
            w.x[0] = half;
        } else {
            w.x[0] = (Rat(2) * z + Rat(1)) / Rat(4);
            w.x[1] = (Rat(2) * z - Rat(1)) / Rat(4);
        }
    } else {
        // Nearest integer with ties going down, kept away from 0 and n.
        Rat k_rat = ceil(z - half);
        k_rat = max(Rat(1), min(k_rat, upper - Rat(1)));
        const auto k = static_cast<std::size_t>(k_rat.to_double());
        if (k + 2 <= n) {
            w.case_tag = WitnessCase::Case3a;
            const Rat low = (Rat(2) * z - Rat(2) * k_rat + Rat(1)) / Rat(4);
            for (std::size_t i = 0; i + 1 < k; ++i)
                w.x[i] = 1;
            w.x[k - 1] = half;
            w.x[k] = low;
            w.x[k + 1] = low;
        } else {
            w.case_tag = WitnessCase::Case3b;
            const Rat high = (Rat(2) * z - Rat(2) * k_rat + Rat(3)) / Rat(4);
            for (std::size_t i = 0; i + 3 < n; ++i)
                w.x[i] = 1;
            w.x[n - 3] = high;
            w.x[n - 2] = high;
            w.x[n - 1] = half;
        }
    }
    const Rat f = alternating_sum(w.x);
    w.achieved = min(f, Rat(1) - f);
    return w;
}

Rat hedge_lp_optimum(std::size_t n, const Rat& z)
{
    if (n == 0)
        throw OutOfRange("a binarized variable needs n >= 1");
    if (z.sign() < 0 || z > Rat(static_cast<std::int64_t>(n)))
        throw OutOfRange("z = " + z.to_string() + " outside [0, " + std::to_string(n) + "]");

    // Variables x_1..x_n then the hedge value g.
    const std::size_t g = n;
    lp::LinearProgram program(n + 1);
    program.direction = lp::Direction::Maximize;
    program.objective[g] = 1;
    program.lower[g].reset();
    program.upper[0] = Rat(1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::vector<Rat> row(n + 1);
        row[j] = 1;
        row[j + 1] = -1;
        program.add_row(std::move(row), lp::Sense::GreaterEqual, Rat(0));
    }
    std::vector<Rat> sum(n + 1, Rat(1));
    sum[g] = 0;
    program.add_row(std::move(sum), lp::Sense::Equal, z);

    std::vector<Rat> below_f(n + 1), below_complement(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        const Rat sign = j % 2 == 0 ? Rat(1) : Rat(-1);
        below_f[j] = -sign;
        below_complement[j] = sign;
    }
    below_f[g] = 1;
    below_complement[g] = 1;
    program.add_row(std::move(below_f), lp::Sense::LessEqual, Rat(0));
    program.add_row(std::move(below_complement), lp::Sense::LessEqual, Rat(1));

    const lp::LPOutcome outcome = lp::solve(program);
    if (outcome.status != lp::Status::Optimal)
        throw Infeasible("hedge LP is " + lp::to_string(outcome.status));
    return outcome.value;
}

bool verify_lemma7_optimality(std::size_t n, const Rat& z)
{
    const Rat optimum = hedge_lp_optimum(n, z);
    return optimum == gamma(z, n) && optimum == lemma7_witness(n, z).achieved;
}

std::vector<std::size_t> CutFamilyCondition::failing_sets() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gamma_sums.size(); ++i)
        if (gamma_sums[i] < Rat(1))
            out.push_back(i);
    return out;
}

MultiWitness theorem8_witness(const GroupShape& shape, std::span<const Rat> z, const IndexFamily& family)
{
    const std::size_t k = shape.group_count();
    if (z.size() != k)
        throw DimensionMismatch("expected " + std::to_string(k) + " z values, got " + std::to_string(z.size()));
    std::vector<Rat> gammas;
    gammas.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        gammas.push_back(gamma(z[i], shape.size(i)));

    MultiWitness result;
    result.condition.family = family;
    result.condition.all_satisfied = true;
    for (const auto& set : family) {
        Rat sum;
        for (std::size_t i : set) {
            if (i >= k)
                throw IndexOutOfRange("family index " + std::to_string(i + 1) + " exceeds k = " + std::to_string(k));
            sum += gammas[i];
        }
        if (sum < Rat(1))
            result.condition.all_satisfied = false;
        result.condition.gamma_sums.push_back(std::move(sum));
    }
    if (!result.condition.all_satisfied)
        return result;

    std::vector<std::vector<Rat>> entries;
    entries.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        entries.push_back(lemma7_witness(shape.size(i), z[i]).x);
    GroupedPoint point(shape, std::move(entries));

    result.restrictions_verified = true;
    for (const auto& set : family) {
        const GroupedPoint part = point.restricted(set);
        for (Parity parity : {Parity::Even, Parity::Odd})
            if (separate(part.shape(), parity, part).violated)
                result.restrictions_verified = false;
    }
    result.point = std::move(point);
    return result;
}

IndexFamily parse_family(std::string_view text)
{
    IndexFamily family;
    for (auto set_text : split(text, ';')) {
        std::vector<std::size_t> set;
        for (auto token : split(set_text, ',')) {
            std::size_t value = 0;
            const auto* end = token.data() + token.size();
            auto [ptr, ec] = std::from_chars(token.data(), end, value);
            if (token.empty() || ec != std::errc() || ptr != end || value == 0)
                throw ParseError("malformed index set '" + std::string(set_text) + "' (indices are 1-based)");
            set.push_back(value - 1);
        }
        family.push_back(std::move(set));
    }
    return family;
}

}  // namespace ordpar
