#include "ordpar/gtsp.hpp"

namespace ordpar::gtsp {

std::string to_string(CutKind kind)
{
    switch (kind) {
    case CutKind::Connectivity:
        return "connectivity";
    case CutKind::BlossomOriginal:
        return "blossom";
    case CutKind::BlossomStrengthened:
        return "blossom-strengthened";
    }
    return "?";
}

BinarizedSolution BinarizedSolution::from_parts(std::vector<Rat> x1, std::vector<Rat> x2)
{
    if (x1.size() != x2.size())
        throw DimensionMismatch("x1 and x2 differ in length");
    BinarizedSolution s;
    s.z.reserve(x1.size());
    for (std::size_t e = 0; e < x1.size(); ++e)
        s.z.push_back(x1[e] + x2[e]);
    s.x1 = std::move(x1);
    s.x2 = std::move(x2);
    return s;
}

CutWeights blossom_weights_original(const BinarizedSolution& solution)
{
    CutWeights w;
    for (std::size_t e = 0; e < solution.x1.size(); ++e) {
        const Rat sum = solution.x1[e] + solution.x2[e];
        const Rat diff = solution.x1[e] - solution.x2[e];
        w.c.push_back(min(sum, Rat(2) - sum));
        w.c_prime.push_back(min(Rat(1) - diff, Rat(1) + diff));
    }
    return w;
}

CutWeights blossom_weights_strengthened(const BinarizedSolution& solution)
{
    CutWeights w;
    for (std::size_t e = 0; e < solution.x1.size(); ++e) {
        if (solution.x1[e] < solution.x2[e])
            throw OrderingViolated("edge " + std::to_string(e) + " has x1 = " + solution.x1[e].to_string() +
                                   " < x2 = " + solution.x2[e].to_string());
        const Rat diff = solution.x1[e] - solution.x2[e];
        w.c.push_back(diff);
        w.c_prime.push_back(Rat(1) - diff);
    }
    return w;
}

FlipChoice greedy_odd_flip(std::span<const Rat> c, std::span<const Rat> c_prime)
{
    if (c.empty() || c.size() != c_prime.size())
        throw DimensionMismatch("odd flip needs matching, nonempty weight lists");
    std::vector<bool> in_f(c.size(), false);
    std::size_t size = 0;
    std::size_t closest = 0;
    Rat closest_gap = abs(c[0] - c_prime[0]);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c_prime[j] < c[j]) {
            in_f[j] = true;
            ++size;
        }
        Rat gap = abs(c[j] - c_prime[j]);
        if (gap < closest_gap) {
            closest = j;
            closest_gap = std::move(gap);
        }
    }
    if (size % 2 == 0)
        in_f[closest] = !in_f[closest];

    FlipChoice choice;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (in_f[j]) {
            choice.flip.push_back(j);
            choice.beta += c_prime[j];
        } else {
            choice.beta += c[j];
        }
    }
    return choice;
}

CutResult min_odd_cut(const Graph& graph, const CutWeights& weights, CutKind kind)
{
    const std::size_t n = graph.node_count();
    if (n > kMaxOddCutNodes)
        throw TooManyNodes("odd cut enumeration supports at most " + std::to_string(kMaxOddCutNodes) +
                           " nodes, graph has " + std::to_string(n));
    if (weights.c.size() != graph.edge_count() || weights.c_prime.size() != graph.edge_count())
        throw DimensionMismatch("cut weights do not match the edge count");

    std::optional<CutResult> best;
    std::vector<bool> in_s(n, false);
    std::vector<Rat> c, c_prime;
    const std::uint64_t masks = n == 0 ? 0 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
        for (std::size_t v = 1; v < n; ++v)
            in_s[v] = (mask >> (v - 1)) & 1u;
        const std::vector<std::size_t> cut = graph.cut_edges(in_s);
        if (cut.empty())
            continue;
        c.clear();
        c_prime.clear();
        for (std::size_t e : cut) {
            c.push_back(weights.c[e]);
            c_prime.push_back(weights.c_prime[e]);
        }
        FlipChoice choice = greedy_odd_flip(c, c_prime);
        if (best && !(choice.beta < best->beta))
            continue;
        CutResult result;
        for (std::size_t v = 1; v < n; ++v)
            if (in_s[v])
                result.nodes.push_back(v);
        for (std::size_t j : choice.flip)
            result.flip_edges.push_back(cut[j]);
        result.beta = std::move(choice.beta);
        result.kind = kind;
        best = std::move(result);
    }
    if (!best)
        throw DisconnectedGraph("no nontrivial cut with edges exists");
    return *best;
}

Rat cut_gamma_sum(const Graph& graph, const std::vector<bool>& in_s, std::span<const Rat> z)
{
    Rat sum;
    for (std::size_t e : graph.cut_edges(in_s))
        sum += gamma(z[e], 2);
    return sum;
}

}  // namespace ordpar::gtsp
