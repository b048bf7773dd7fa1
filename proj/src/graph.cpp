#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ordpar/gtsp.hpp"

namespace ordpar::gtsp {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)), incident_(node_count)
{
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        if (u >= node_count_ || v >= node_count_)
            throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) + " has an endpoint outside [0, " +
                             std::to_string(node_count_) + ")");
        if (u == v)
            throw SelfLoop("self-loop at node " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw DuplicateEdge("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        incident_[u].push_back(e);
        incident_[v].push_back(e);
    }
}

bool Graph::is_connected() const
{
    if (node_count_ == 0)
        return true;
    std::vector<bool> seen(node_count_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : incident_[v]) {
            const std::size_t w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == node_count_;
}

std::vector<std::size_t> Graph::cut_edges(const std::vector<bool>& in_s) const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (in_s[edges_[e].u] != in_s[edges_[e].v])
            out.push_back(e);
    return out;
}

Graph load_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_number = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_number;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            return true;
        }
        return false;
    };
    auto read_pair = [&](const char* what) {
        std::istringstream fields(line);
        long long a = -1, b = -1;
        std::string rest;
        if (!(fields >> a >> b) || (fields >> rest) || a < 0 || b < 0)
            throw ParseError(std::string("expected ") + what + ", got '" + line + "'", line_number);
        return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    };

    if (!next_line())
        throw ParseError("missing header line 'n m'", line_number + 1);
    const auto [n, m] = read_pair("'n m'");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line())
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), line_number + 1);
        const auto [u, v] = read_pair("'u v'");
        if (u >= n || v >= n)
            throw ParseError("node id out of range [0, " + std::to_string(n) + ")", line_number);
        edges.push_back({u, v});
    }
    if (next_line())
        throw ParseError("unexpected content after " + std::to_string(m) + " edges", line_number);

    Graph graph(n, std::move(edges));
    if (!graph.is_connected())
        throw DisconnectedGraph("graph is not connected");
    return graph;
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str());
}

Graph cycle_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return Graph(10, std::move(edges));
}

std::optional<CutResult> separate_connectivity(const Graph& graph, std::span<const Rat> z)
{
    const std::size_t n = graph.node_count();
    if (z.size() != graph.edge_count())
        throw DimensionMismatch("edge value vector has the wrong length");
    if (!graph.is_connected())
        throw DisconnectedGraph("graph is not connected");
    if (n < 2)
        return std::nullopt;

    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto [u, v] = graph.edges()[e];
        w[u][v] += z[e];
        w[v][u] += z[e];
    }
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t v = 0; v < n; ++v)
        members[v] = {v};
    std::vector<std::size_t> active(n);
    for (std::size_t v = 0; v < n; ++v)
        active[v] = v;

    std::optional<Rat> best;
    std::vector<std::size_t> best_side;
    while (active.size() > 1) {
        std::vector<bool> added(n, false);
        std::vector<Rat> attach(n);
        std::size_t previous = active.front();
        std::size_t last = active.front();
        for (std::size_t step = 0; step < active.size(); ++step) {
            std::size_t pick = n;
            for (std::size_t v : active)
                if (!added[v] && (pick == n || attach[v] > attach[pick]))
                    pick = v;
            added[pick] = true;
            previous = last;
            last = pick;
            for (std::size_t v : active)
                if (!added[v])
                    attach[v] += w[pick][v];
        }
        if (!best || attach[last] < *best) {
            best = attach[last];
            best_side = members[last];
        }
        // Merge the last vertex of the phase into the one added before it.
        for (std::size_t v : active) {
            w[previous][v] += w[last][v];
            w[v][previous] = w[previous][v];
        }
        w[previous][previous] = 0;
        members[previous].insert(members[previous].end(), members[last].begin(), members[last].end());
        active.erase(std::find(active.begin(), active.end(), last));
    }

    if (!(*best < Rat(2)))
        return std::nullopt;
    std::vector<bool> in_s(n, false);
    for (std::size_t v : best_side)
        in_s[v] = true;
    if (in_s[0])
        in_s.flip();
    CutResult cut;
    for (std::size_t v = 0; v < n; ++v)
        if (in_s[v])
            cut.nodes.push_back(v);
    cut.beta = *best;
    cut.kind = CutKind::Connectivity;
    return cut;
}

}  // namespace ordpar::gtsp
