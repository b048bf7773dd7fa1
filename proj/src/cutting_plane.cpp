#include <set>
#include <sstream>

#include "ordpar/exactlp.hpp"
#include "ordpar/gtsp.hpp"

namespace ordpar::gtsp {

namespace {

// LP column layout: one (z, x1, x2) triple per edge.
std::size_t z_col(std::size_t e) { return 3 * e; }
std::size_t x1_col(std::size_t e) { return 3 * e + 1; }
std::size_t x2_col(std::size_t e) { return 3 * e + 2; }

std::vector<bool> membership(std::size_t n, const std::vector<std::size_t>& nodes)
{
    std::vector<bool> in_s(n, false);
    for (std::size_t v : nodes)
        in_s[v] = true;
    return in_s;
}

lp::Row connectivity_row(const Graph& graph, const CutResult& cut)
{
    lp::Row row{std::vector<Rat>(3 * graph.edge_count()), lp::Sense::GreaterEqual, Rat(2)};
    for (std::size_t e : graph.cut_edges(membership(graph.node_count(), cut.nodes)))
        row.coefficients[z_col(e)] = 1;
    return row;
}

// sum_{e not in F} (x1 - x2) + sum_{e in F} (1 - x1 + x2) >= 1
lp::Row strengthened_row(const Graph& graph, const CutResult& cut)
{
    lp::Row row{std::vector<Rat>(3 * graph.edge_count()), lp::Sense::GreaterEqual, Rat(1)};
    const std::set<std::size_t> flip(cut.flip_edges.begin(), cut.flip_edges.end());
    for (std::size_t e : graph.cut_edges(membership(graph.node_count(), cut.nodes))) {
        const bool in_f = flip.count(e) > 0;
        row.coefficients[x1_col(e)] = in_f ? -1 : 1;
        row.coefficients[x2_col(e)] = in_f ? 1 : -1;
        if (in_f)
            row.rhs -= 1;
    }
    return row;
}

// Unfolds a folded flip set back to the doubled-edge inequality whose
// left-hand side at the current point equals the folded beta.
lp::Row original_row(const Graph& graph, const CutResult& cut, const BinarizedSolution& point)
{
    lp::Row row{std::vector<Rat>(3 * graph.edge_count()), lp::Sense::GreaterEqual, Rat(1)};
    const std::set<std::size_t> flip(cut.flip_edges.begin(), cut.flip_edges.end());
    for (std::size_t e : graph.cut_edges(membership(graph.node_count(), cut.nodes))) {
        const Rat& a = point.x1[e];
        const Rat& b = point.x2[e];
        if (flip.count(e) == 0) {
            if (a + b <= Rat(2) - a - b) {
                row.coefficients[x1_col(e)] = 1;
                row.coefficients[x2_col(e)] = 1;
            } else {
                row.coefficients[x1_col(e)] = -1;
                row.coefficients[x2_col(e)] = -1;
                row.rhs -= 2;
            }
        } else {
            if (Rat(1) - a + b <= Rat(1) + a - b) {
                row.coefficients[x1_col(e)] = -1;
                row.coefficients[x2_col(e)] = 1;
            } else {
                row.coefficients[x1_col(e)] = 1;
                row.coefficients[x2_col(e)] = -1;
            }
            row.rhs -= 1;
        }
    }
    return row;
}

std::string row_key(const lp::Row& row)
{
    return join(row.coefficients, " ") + " >= " + row.rhs.to_string();
}

GammaScan scan_gamma(const Graph& graph, std::span<const Rat> z)
{
    GammaScan scan;
    const std::size_t n = graph.node_count();
    std::vector<bool> in_s(n, false);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        for (std::size_t v = 1; v < n; ++v)
            in_s[v] = (mask >> (v - 1)) & 1u;
        Rat sum = cut_gamma_sum(graph, in_s, z);
        if (scan.cuts_examined == 0 || sum < scan.min_sum)
            scan.min_sum = sum;
        if (sum < Rat(1))
            ++scan.failures;
        ++scan.cuts_examined;
    }
    return scan;
}

}  // namespace

lp::Row cut_inequality(const Graph& graph, const CutResult& cut, const BinarizedSolution& point)
{
    switch (cut.kind) {
    case CutKind::Connectivity:
        return connectivity_row(graph, cut);
    case CutKind::BlossomStrengthened:
        return strengthened_row(graph, cut);
    case CutKind::BlossomOriginal:
        break;
    }
    if (point.x1.size() != graph.edge_count() || point.x2.size() != graph.edge_count())
        throw DimensionMismatch("binarized point does not match the edge count");
    return original_row(graph, cut, point);
}

std::size_t SolveReport::count(CutKind kind) const
{
    std::size_t total = 0;
    for (const auto& cut : cuts)
        total += cut.kind == kind ? 1 : 0;
    return total;
}

bool SolveReport::gamma_condition_held() const
{
    for (const auto& round : rounds)
        if (round.gamma_scan && round.gamma_scan->failures > 0)
            return false;
    return true;
}

SolveReport cutting_plane_solve(const Graph& graph, const SolveConfig& config)
{
    const std::size_t n = graph.node_count();
    const std::size_t m = graph.edge_count();
    if (n < 3)
        throw GraphTooSmall("the cutting-plane loop needs at least 3 nodes");
    if (!graph.is_connected())
        throw DisconnectedGraph("graph is not connected");
    const bool any_blossom = config.blossom_original || config.blossom_strengthened;
    if (any_blossom && n > kMaxOddCutNodes)
        throw TooManyNodes("blossom separation supports at most " + std::to_string(kMaxOddCutNodes) + " nodes");

    lp::LinearProgram program(3 * m);
    for (std::size_t e = 0; e < m; ++e) {
        program.objective[z_col(e)] = 1;
        program.upper[x1_col(e)] = Rat(1);
        std::vector<Rat> link(3 * m);
        link[z_col(e)] = 1;
        link[x1_col(e)] = -1;
        link[x2_col(e)] = -1;
        program.add_row(std::move(link), lp::Sense::Equal, Rat(0));
        std::vector<Rat> order(3 * m);
        order[x1_col(e)] = 1;
        order[x2_col(e)] = -1;
        program.add_row(std::move(order), lp::Sense::GreaterEqual, Rat(0));
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Rat> degree(3 * m);
        for (std::size_t e : graph.incident(v))
            degree[z_col(e)] = 1;
        program.add_row(std::move(degree), lp::Sense::GreaterEqual, Rat(2));
    }

    SolveReport report;
    std::set<std::string> pool;
    for (std::size_t round = 1;; ++round) {
        const lp::LPOutcome outcome = lp::solve(program);
        if (outcome.status != lp::Status::Optimal)
            throw Infeasible("GTSP relaxation is " + lp::to_string(outcome.status));

        RoundRecord record;
        record.round = round;
        record.bound = outcome.value;
        std::vector<Rat> z(m), x1(m), x2(m);
        for (std::size_t e = 0; e < m; ++e) {
            z[e] = outcome.solution[z_col(e)];
            x1[e] = outcome.solution[x1_col(e)];
            x2[e] = outcome.solution[x2_col(e)];
        }
        BinarizedSolution point{z, x1, x2};
        report.final_bound = outcome.value;
        report.final_solution = point;

        if (round > 1) {
            const RoundRecord& previous = report.rounds.back();
            const std::size_t added = previous.connectivity_added + previous.blossom_original_added +
                                      previous.blossom_strengthened_added;
            if (added > 0 && previous.bound == record.bound)
                ++report.stalled_rounds;
        }

        auto add_cut = [&](const CutResult& cut, lp::Row row) {
            if (!pool.insert(row_key(row)).second)
                return false;
            program.rows.push_back(row);
            report.cut_rows.push_back(std::move(row));
            report.cuts.push_back(cut);
            return true;
        };

        bool connectivity_clean = true;
        if (config.connectivity) {
            if (auto cut = separate_connectivity(graph, z)) {
                connectivity_clean = false;
                if (add_cut(*cut, cut_inequality(graph, *cut, point)))
                    ++record.connectivity_added;
            }
        }
        if (connectivity_clean) {
            if (!report.connectivity_bound)
                report.connectivity_bound = record.bound;
            if (any_blossom) {
                record.gamma_scan = scan_gamma(graph, z);
                if (config.blossom_original) {
                    CutResult cut = min_odd_cut(graph, blossom_weights_original(point), CutKind::BlossomOriginal);
                    if (cut.beta < Rat(1) && add_cut(cut, cut_inequality(graph, cut, point)))
                        ++record.blossom_original_added;
                }
                if (config.blossom_strengthened) {
                    CutResult cut =
                        min_odd_cut(graph, blossom_weights_strengthened(point), CutKind::BlossomStrengthened);
                    if (cut.beta < Rat(1) && add_cut(cut, cut_inequality(graph, cut, point)))
                        ++record.blossom_strengthened_added;
                }
            }
        }

        const std::size_t added =
            record.connectivity_added + record.blossom_original_added + record.blossom_strengthened_added;
        report.rounds.push_back(std::move(record));
        if (added == 0)
            break;
        if (round >= config.round_cap) {
            report.round_cap_exceeded = true;
            break;
        }
    }
    return report;
}

std::string format_report(const SolveReport& report, const Graph& graph, const SolveConfig& config)
{
    std::ostringstream out;
    std::string cuts = config.connectivity ? "connectivity" : "";
    auto append = [&](const std::string& name) { cuts += (cuts.empty() ? "" : ",") + name; };
    if (config.blossom_original)
        append("blossom");
    if (config.blossom_strengthened)
        append("blossom-strengthened");

    out << "# gtsp cutting-plane report";
    if (!config.instance_label.empty())
        out << ": " << config.instance_label;
    out << '\n';
    out << "# graph: " << graph.node_count() << " nodes, " << graph.edge_count() << " edges; cuts: " << cuts
        << "; round cap " << config.round_cap << '\n';
    for (const auto& r : report.rounds)
        out << "round " << r.round << ": bound " << r.bound << ", +" << r.connectivity_added << " connectivity, +"
            << r.blossom_original_added + r.blossom_strengthened_added << " blossom\n";

    if (report.round_cap_exceeded)
        out << "round cap exceeded after " << report.rounds.size() << " rounds\n";
    if (report.stalled_rounds > 0)
        out << "stall: bound unchanged for " << report.stalled_rounds << " rounds while cuts were added\n";
    out << "bound " << report.final_bound << '\n';
    if (report.connectivity_bound)
        out << "connectivity bound " << *report.connectivity_bound << '\n';
    out << "cuts connectivity " << report.count(CutKind::Connectivity) << ", blossom "
        << report.count(CutKind::BlossomOriginal) << ", blossom-strengthened "
        << report.count(CutKind::BlossomStrengthened) << '\n';
    bool any_scan = false;
    for (const auto& r : report.rounds) {
        if (!r.gamma_scan)
            continue;
        any_scan = true;
        out << "gamma check round " << r.round << ": " << r.gamma_scan->cuts_examined << " cuts examined, min gamma sum "
            << r.gamma_scan->min_sum << ", ";
        if (r.gamma_scan->failures == 0)
            out << "condition holds\n";
        else
            out << "condition fails on " << r.gamma_scan->failures << " cuts\n";
    }
    if (any_scan)
        out << "gamma condition: " << (report.gamma_condition_held() ? "holds on every examined cut"
                                                                      : "fails on some examined cut")
            << '\n';
    out << "z " << join(report.final_solution.z) << '\n';
    return out.str();
}

}  // namespace ordpar::gtsp
