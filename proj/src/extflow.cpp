#include "ordpar/extflow.hpp"

#include <algorithm>
#include <sstream>

#include "ordpar/exactlp.hpp"

namespace ordpar {

FlowNetwork::FlowNetwork(const GroupShape& shape, Parity parity)
    : shape_(shape), layers_(parity == Parity::Even ? shape : shape.appended(1)), parity_(parity)
{
    const std::size_t k = layers_.group_count();
    ids_.assign(2 * (k + 1), std::nullopt);
    for (std::size_t i = 0; i <= k; ++i)
        for (int side = 0; side <= 1; ++side) {
            if (side == 1 && (i == 0 || i == k))
                continue;
            ids_[2 * i + static_cast<std::size_t>(side)] = nodes_.size();
            nodes_.push_back({i, side});
        }
    source_ = *node_id(0, 0);
    sink_ = *node_id(k, 0);

    for (std::size_t i = 1; i <= k; ++i)
        for (int side = 0; side <= 1; ++side) {
            const auto tail = node_id(i - 1, side);
            if (!tail)
                continue;
            for (std::size_t label = 0; label <= layers_.size(i - 1); ++label) {
                if (parity == Parity::Odd && i == k && label != 1)
                    continue;
                const int head_side = label % 2 == 0 ? side : 1 - side;
                const auto head = node_id(i, head_side);
                if (!head)
                    continue;
                arcs_.push_back({*tail, *head, i, label});
            }
        }
}

std::optional<std::size_t> FlowNetwork::node_id(std::size_t layer, int side) const
{
    const std::size_t slot = 2 * layer + static_cast<std::size_t>(side);
    if (side < 0 || side > 1 || slot >= ids_.size())
        return std::nullopt;
    return ids_[slot];
}

std::vector<std::size_t> FlowNetwork::projection(std::size_t arc) const
{
    const FlowArc& a = arcs_.at(arc);
    std::vector<std::size_t> rows;
    if (a.layer > shape_.group_count())
        return rows;
    const std::size_t first = shape_.offset(a.layer - 1);
    for (std::size_t j = 0; j < a.label; ++j)
        rows.push_back(first + j);
    return rows;
}

std::string FlowNetwork::to_dot() const
{
    std::ostringstream out;
    out << "digraph parity_flow {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        out << "  n" << v << " [label=\"(" << nodes_[v].layer << "," << nodes_[v].side << ")\"";
        if (v == source_ || v == sink_)
            out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const auto& a : arcs_)
        out << "  n" << a.tail << " -> n" << a.head << " [label=\"x" << a.layer << ":" << a.label << "\"];\n";
    out << "}\n";
    return out.str();
}

FlowNetwork build_network(const GroupShape& shape, Parity parity) { return FlowNetwork(shape, parity); }

namespace {

std::vector<Rat> arc_costs(const FlowNetwork& network, std::span<const Rat> objective)
{
    if (objective.size() != network.shape().dimension())
        throw DimensionMismatch("objective of length " + std::to_string(objective.size()) + " for dimension " +
                                std::to_string(network.shape().dimension()));
    std::vector<Rat> costs(network.arcs().size());
    for (std::size_t a = 0; a < costs.size(); ++a)
        for (std::size_t j : network.projection(a))
            costs[a] += objective[j];
    return costs;
}

GroupedPoint project_path(const FlowNetwork& network, std::span<const std::size_t> path)
{
    std::vector<Rat> flat(network.shape().dimension());
    for (std::size_t a : path)
        for (std::size_t j : network.projection(a))
            flat[j] = 1;
    return GroupedPoint::from_flat(network.shape(), flat);
}

}  // namespace

PathSolution optimize(const GroupShape& shape, Parity parity, std::span<const Rat> objective)
{
    const FlowNetwork network(shape, parity);
    const std::vector<Rat> costs = arc_costs(network, objective);
    const auto& arcs = network.arcs();
    const auto& nodes = network.nodes();

    std::vector<std::optional<Rat>> dist(nodes.size());
    std::vector<std::optional<std::size_t>> pred(nodes.size());
    dist[network.source()] = Rat(0);
    // Arcs are stored layer by layer, so one sweep is a topological pass.
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        const FlowArc& arc = arcs[a];
        if (!dist[arc.tail])
            continue;
        Rat candidate = *dist[arc.tail] + costs[a];
        bool better = !dist[arc.head] || candidate < *dist[arc.head];
        if (!better && candidate == *dist[arc.head]) {
            const FlowArc& current = arcs[*pred[arc.head]];
            better = arc.label < current.label ||
                     (arc.label == current.label && nodes[arc.tail].side < nodes[current.tail].side);
        }
        if (better) {
            dist[arc.head] = std::move(candidate);
            pred[arc.head] = a;
        }
    }
    if (!dist[network.sink()])
        throw Infeasible("no " + to_string(parity) + " ordered 0/1 point exists for shape " + shape.to_string());

    std::vector<std::size_t> path;
    for (std::size_t v = network.sink(); v != network.source(); v = arcs[*pred[v]].tail)
        path.push_back(*pred[v]);
    std::reverse(path.begin(), path.end());
    GroupedPoint point = project_path(network, path);
    return PathSolution{std::move(path), *dist[network.sink()], std::move(point)};
}

std::vector<GroupedPoint> projected_paths(const FlowNetwork& network)
{
    std::vector<std::vector<std::size_t>> outgoing(network.nodes().size());
    for (std::size_t a = 0; a < network.arcs().size(); ++a)
        outgoing[network.arcs()[a].tail].push_back(a);

    std::vector<GroupedPoint> points;
    std::vector<std::size_t> path;
    auto walk = [&](auto&& self, std::size_t v) -> void {
        if (v == network.sink()) {
            points.push_back(project_path(network, path));
            return;
        }
        for (std::size_t a : outgoing[v]) {
            path.push_back(a);
            self(self, network.arcs()[a].head);
            path.pop_back();
        }
    };
    walk(walk, network.source());
    return points;
}

namespace {

lp::LinearProgram flow_program(const FlowNetwork& network)
{
    const auto& arcs = network.arcs();
    lp::LinearProgram program(arcs.size());
    for (std::size_t v = 0; v < network.nodes().size(); ++v) {
        std::vector<Rat> row(arcs.size());
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            if (arcs[a].tail == v)
                row[a] += 1;
            if (arcs[a].head == v)
                row[a] -= 1;
        }
        if (v == network.source())
            program.add_row(std::move(row), lp::Sense::Equal, Rat(1));
        else if (v == network.sink())
            program.add_row(std::move(row), lp::Sense::Equal, Rat(-1));
        else
            program.add_row(std::move(row), lp::Sense::Equal, Rat(0));
    }
    return program;
}

}  // namespace

Rat flow_lp_optimum(const FlowNetwork& network, std::span<const Rat> objective)
{
    lp::LinearProgram program = flow_program(network);
    program.objective = arc_costs(network, objective);
    const lp::LPOutcome outcome = lp::solve(program);
    if (outcome.status != lp::Status::Optimal)
        throw Infeasible("flow polytope LP is " + lp::to_string(outcome.status));
    return outcome.value;
}

bool membership_lp(const GroupShape& shape, Parity parity, const GroupedPoint& point)
{
    if (!(point.shape() == shape))
        throw DimensionMismatch("point shape " + point.shape().to_string() + " differs from " + shape.to_string());
    const FlowNetwork network(shape, parity);
    lp::LinearProgram program = flow_program(network);
    const std::vector<Rat> x = point.flat();
    std::vector<std::vector<Rat>> projection_rows(x.size(), std::vector<Rat>(network.arcs().size()));
    for (std::size_t a = 0; a < network.arcs().size(); ++a)
        for (std::size_t j : network.projection(a))
            projection_rows[j][a] = 1;
    for (std::size_t j = 0; j < x.size(); ++j)
        program.add_row(std::move(projection_rows[j]), lp::Sense::Equal, x[j]);
    return lp::solve(program).status == lp::Status::Optimal;
}

}  // namespace ordpar
