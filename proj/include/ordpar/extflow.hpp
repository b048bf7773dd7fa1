#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordpar/core.hpp"

namespace ordpar {

/// Grid node (layer, side) of the layered network.
struct FlowNode {
    std::size_t layer = 0;
    int side = 0;
};

struct FlowArc {
    std::size_t tail = 0;
    std::size_t head = 0;
    /// 1-based layer, matching the group it encodes.
    std::size_t layer = 0;
    /// Number of leading ones this arc sets in its group.
    std::size_t label = 0;
};

/**
 * Layered DAG whose unit s-t flows project onto an ordered parity polytope.
 *
 * Nodes are (i, a) for i in 0..k and a in {0,1}, without (0,1) and (k,1).
 * From every node of layer i-1 leave r_i + 1 arcs labelled l = 0..r_i; even
 * labels keep the side, odd labels switch it. Arcs whose head would be a
 * removed node are omitted. An arc labelled l in layer i projects ones onto
 * x^(i)_1..x^(i)_l, so each s-t path uses an even number of side switches and
 * projects to an even ordered 0/1 point.
 *
 * Odd networks are the even network of the shape with a unit group appended,
 * whose last layer keeps only the label-1 arc; the appended coordinate is
 * dropped by the projection.
 */
class FlowNetwork {
public:
    FlowNetwork(const GroupShape& shape, Parity parity);

    /// Shape of the projected space.
    const GroupShape& shape() const { return shape_; }
    Parity parity() const { return parity_; }
    /// Number of layers in the underlying grid (k, or k+1 for odd networks).
    std::size_t layer_count() const { return layers_.group_count(); }

    const std::vector<FlowNode>& nodes() const { return nodes_; }
    const std::vector<FlowArc>& arcs() const { return arcs_; }
    std::size_t source() const { return source_; }
    std::size_t sink() const { return sink_; }
    std::optional<std::size_t> node_id(std::size_t layer, int side) const;

    /// Flat x-indices (of the projected space) that receive a one from this arc.
    std::vector<std::size_t> projection(std::size_t arc) const;

    /// GraphViz rendering with arcs labelled by their group and label.
    std::string to_dot() const;

private:
    GroupShape shape_;
    GroupShape layers_;
    Parity parity_;
    std::vector<FlowNode> nodes_;
    std::vector<FlowArc> arcs_;
    std::vector<std::optional<std::size_t>> ids_;
    std::size_t source_ = 0;
    std::size_t sink_ = 0;
};

FlowNetwork build_network(const GroupShape& shape, Parity parity = Parity::Even);

struct PathSolution {
    std::vector<std::size_t> arcs;
    Rat value;
    GroupedPoint point;
};

/**
 * Minimizes a linear objective over the parity polytope by a single forward
 * shortest-path pass over the layers. Equal-cost predecessors are resolved
 * by smaller label, then by lower tail side. Throws DimensionMismatch when
 * the objective does not have length n and Infeasible if the sink is
 * unreachable.
 */
PathSolution optimize(const GroupShape& shape, Parity parity, std::span<const Rat> objective);

/// Points obtained by projecting every s-t path, in path enumeration order.
std::vector<GroupedPoint> projected_paths(const FlowNetwork& network);

/// Minimum of the objective over the projected flow polytope, solved as an exact LP.
Rat flow_lp_optimum(const FlowNetwork& network, std::span<const Rat> objective);

/**
 * True iff some unit s-t flow y >= 0 of the network projects onto the point,
 * decided by exact LP feasibility.
 */
bool membership_lp(const GroupShape& shape, Parity parity, const GroupedPoint& point);

}  // namespace ordpar
