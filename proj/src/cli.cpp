#include "ordpar/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ordpar/cheat.hpp"
#include "ordpar/extflow.hpp"
#include "ordpar/gtsp.hpp"
#include "ordpar/separation.hpp"

namespace ordpar::cli {

namespace {

struct FlagSpec {
    std::string name;
    std::string help;
    bool required = false;
    bool is_switch = false;
};

struct CommandSpec {
    std::vector<std::string> path;
    std::string help;
    std::vector<FlagSpec> flags;
};

const std::vector<CommandSpec>& commands()
{
    static const std::vector<CommandSpec> specs = {
        {{"separate"},
         "Separate a point from an ordered parity polytope",
         {{"shape", "group sizes, e.g. 2,2", true},
          {"parity", "even or odd", true},
          {"point", "grouped point, e.g. \"1,1/2;1,0\"", true}}},
        {{"describe"},
         "Print the complete outer description, one 'a1 ... an >= b' per line",
         {{"shape", "group sizes, e.g. 2,2", true}, {"parity", "even (default) or odd"}}},
        {{"optimize"},
         "Minimize a linear objective over an ordered parity polytope",
         {{"shape", "group sizes, e.g. 2,2", true},
          {"parity", "even or odd", true},
          {"objective", "comma separated rationals, one per variable", true}}},
        {{"network"},
         "Print the flow network of the extended formulation",
         {{"shape", "group sizes, e.g. 2,2", true},
          {"parity", "even (default) or odd"},
          {"dot", "emit GraphViz dot", false, true}}},
        {{"witness"},
         "Hedging witness for one binarized variable",
         {{"n", "number of binary variables", true}, {"z", "value of the integer variable, 0 <= z <= n", true}}},
        {{"multiwitness"},
         "Check the gamma-sum condition for a family of groups and assemble the witness",
         {{"shape", "group sizes, e.g. 2,2,2,2", true},
          {"z", "comma separated values, one per group", true},
          {"family", "1-based index sets, e.g. \"1,2;2,3\"", true}}},
        {{"gtsp", "solve"},
         "Cutting-plane loop for the graphic TSP relaxation",
         {{"graph", "graph file: 'n m' then m lines 'u v'", true},
          {"cuts", "connectivity[,blossom][,blossom-strengthened] (default connectivity)"},
          {"rounds", "round cap (default 50)"},
          {"report", "also write the report to this file"},
          {"label", "instance label for the report header"}}},
    };
    return specs;
}

struct BoundCommand {
    const CommandSpec* spec = nullptr;
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> switches;
};

void configure(CLI::App& root, std::vector<BoundCommand>& bound)
{
    root.require_subcommand(1);
    bound.reserve(commands().size());
    std::map<std::string, CLI::App*> groups;
    for (const auto& spec : commands()) {
        CLI::App* parent = &root;
        for (std::size_t i = 0; i + 1 < spec.path.size(); ++i) {
            auto& group = groups[spec.path[i]];
            if (!group) {
                group = parent->add_subcommand(spec.path[i], spec.path[i] + " commands");
                group->require_subcommand(1);
            }
            parent = group;
        }
        bound.push_back({&spec, parent->add_subcommand(spec.path.back(), spec.help), {}, {}});
    }
    for (auto& b : bound) {
        for (const auto& flag : b.spec->flags) {
            if (flag.is_switch) {
                b.app->add_flag("--" + flag.name, b.switches[flag.name], flag.help);
            } else {
                auto* option = b.app->add_option("--" + flag.name, b.values[flag.name], flag.help);
                if (flag.required)
                    option->required();
            }
        }
    }
}

template <typename F>
auto flag_value(const Invocation& inv, const std::string& name, F&& convert)
{
    const auto it = inv.flags.find(name);
    if (it == inv.flags.end())
        throw UsageError("missing --" + name);
    try {
        return convert(it->second);
    } catch (const ParseError& e) {
        throw UsageError("--" + name + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

std::string flag_or(const Invocation& inv, const std::string& name, std::string fallback)
{
    const auto it = inv.flags.find(name);
    return it == inv.flags.end() ? fallback : it->second;
}

std::size_t parse_count(const std::string& text)
{
    std::size_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw ParseError("expected a nonnegative integer, got '" + text + "'");
    return value;
}

void run_separate(const Invocation& inv, std::ostream& out)
{
    const auto shape = flag_value(inv, "shape", GroupShape::parse);
    const auto parity = flag_value(inv, "parity", parse_parity);
    const auto point = flag_value(inv, "point", GroupedPoint::parse);
    if (!(point.shape() == shape))
        throw DimensionMismatch("point has group sizes " + point.shape().to_string() + ", shape is " +
                                shape.to_string());
    const SeparationCertificate cert = separate(shape, parity, point);
    out << "lambdas " << join(cert.lambdas) << '\n';
    out << (cert.violated ? "violated" : "satisfied") << " F=" << format_index_set(cert.f_set)
        << " lhs=" << cert.lhs_value << '\n';
}

void run_describe(const Invocation& inv, std::ostream& out)
{
    const auto shape = flag_value(inv, "shape", GroupShape::parse);
    Parity parity = Parity::Even;
    if (inv.flags.count("parity"))
        parity = flag_value(inv, "parity", parse_parity);
    for (const auto& ineq : outer_description(shape, parity))
        out << ineq.to_string() << '\n';
}

void run_optimize(const Invocation& inv, std::ostream& out)
{
    const auto shape = flag_value(inv, "shape", GroupShape::parse);
    const auto parity = flag_value(inv, "parity", parse_parity);
    const auto objective = flag_value(inv, "objective", parse_rat_list);
    const PathSolution solution = optimize(shape, parity, objective);
    out << "value " << solution.value << '\n';
    out << "point " << solution.point.to_string() << '\n';
}

void run_network(const Invocation& inv, std::ostream& out)
{
    const auto shape = flag_value(inv, "shape", GroupShape::parse);
    Parity parity = Parity::Even;
    if (inv.flags.count("parity"))
        parity = flag_value(inv, "parity", parse_parity);
    const FlowNetwork network = build_network(shape, parity);
    if (inv.flags.count("dot")) {
        out << network.to_dot();
        return;
    }
    out << "nodes " << network.nodes().size() << " arcs " << network.arcs().size() << '\n';
    for (const auto& arc : network.arcs()) {
        const FlowNode& tail = network.nodes()[arc.tail];
        const FlowNode& head = network.nodes()[arc.head];
        out << "layer " << arc.layer << " label " << arc.label << ": (" << tail.layer << ',' << tail.side << ") -> ("
            << head.layer << ',' << head.side << ")\n";
    }
}

void run_witness(const Invocation& inv, std::ostream& out)
{
    const auto n = flag_value(inv, "n", parse_count);
    const auto z = flag_value(inv, "z", Rat::parse);
    const HedgeWitness w = lemma7_witness(n, z);
    out << "case " << to_string(w.case_tag) << '\n';
    out << "x " << join(w.x) << '\n';
    out << "achieved " << w.achieved << '\n';
}

void run_multiwitness(const Invocation& inv, std::ostream& out)
{
    const auto shape = flag_value(inv, "shape", GroupShape::parse);
    const auto z = flag_value(inv, "z", parse_rat_list);
    const auto family = flag_value(inv, "family", parse_family);
    const MultiWitness result = theorem8_witness(shape, z, family);
    const auto& condition = result.condition;
    for (std::size_t i = 0; i < condition.family.size(); ++i)
        out << "set " << format_index_set(condition.family[i]) << ": gamma sum " << condition.gamma_sums[i]
            << (condition.gamma_sums[i] < Rat(1) ? " fails" : " ok") << '\n';
    if (!result.point) {
        out << "condition fails\n";
        return;
    }
    out << "witness " << result.point->to_string() << '\n';
    out << (result.restrictions_verified ? "restrictions pass even and odd separation"
                                         : "restriction check FAILED")
        << '\n';
}

gtsp::SolveConfig parse_cuts(const std::string& text)
{
    gtsp::SolveConfig config;
    config.connectivity = false;
    for (auto token : split(text, ',')) {
        if (token == "connectivity")
            config.connectivity = true;
        else if (token == "blossom")
            config.blossom_original = true;
        else if (token == "blossom-strengthened")
            config.blossom_strengthened = true;
        else
            throw ParseError("unknown cut family '" + std::string(token) + "'");
    }
    return config;
}

void run_gtsp_solve(const Invocation& inv, std::ostream& out)
{
    const auto path = flag_value(inv, "graph", [](const std::string& s) { return s; });
    gtsp::SolveConfig config;
    if (inv.flags.count("cuts"))
        config = flag_value(inv, "cuts", parse_cuts);
    if (inv.flags.count("rounds"))
        config.round_cap = flag_value(inv, "rounds", parse_count);
    config.instance_label = flag_or(inv, "label", path + " (desk-scale instance)");

    const gtsp::Graph graph = gtsp::load_graph_file(path);
    const gtsp::SolveReport report = gtsp::cutting_plane_solve(graph, config);
    const std::string text = gtsp::format_report(report, graph, config);
    out << text;
    if (inv.flags.count("report")) {
        std::ofstream file(inv.flags.at("report"));
        if (!file)
            throw ParseError("cannot write report file '" + inv.flags.at("report") + "'");
        file << text;
    }
}

void execute(const Invocation& inv, std::ostream& out)
{
    const std::string& name = inv.command.front();
    if (name == "separate")
        run_separate(inv, out);
    else if (name == "describe")
        run_describe(inv, out);
    else if (name == "optimize")
        run_optimize(inv, out);
    else if (name == "network")
        run_network(inv, out);
    else if (name == "witness")
        run_witness(inv, out);
    else if (name == "multiwitness")
        run_multiwitness(inv, out);
    else if (name == "gtsp")
        run_gtsp_solve(inv, out);
    else
        throw UsageError("unknown command '" + name + "'");
}

void parse_into(CLI::App& app, const std::vector<std::string>& args)
{
    std::vector<std::string> storage{"ordpar"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage)
        argv.push_back(a.data());
    app.parse(static_cast<int>(argv.size()), argv.data());
}

Invocation collect(const std::vector<BoundCommand>& bound)
{
    for (const auto& b : bound) {
        if (!b.app->parsed())
            continue;
        Invocation inv;
        inv.command = b.spec->path;
        for (const auto& flag : b.spec->flags) {
            const std::string option = "--" + flag.name;
            if (b.app->count(option) == 0)
                continue;
            inv.flags[flag.name] = flag.is_switch ? "true" : b.values.at(flag.name);
        }
        return inv;
    }
    throw UsageError("no command given");
}

}  // namespace

Invocation parse(const std::vector<std::string>& args)
{
    CLI::App app{"ordpar"};
    std::vector<BoundCommand> bound;
    configure(app, bound);
    try {
        parse_into(app, args);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    return collect(bound);
}

std::vector<std::string> render(const Invocation& invocation)
{
    std::vector<std::string> args = invocation.command;
    const CommandSpec* spec = nullptr;
    for (const auto& s : commands())
        if (s.path == invocation.command)
            spec = &s;
    for (const auto& [name, value] : invocation.flags) {
        args.push_back("--" + name);
        bool is_switch = false;
        if (spec)
            for (const auto& flag : spec->flags)
                if (flag.name == name)
                    is_switch = flag.is_switch;
        if (!is_switch)
            args.push_back(value);
    }
    return args;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"ordpar: ordered parity polytopes and GTSP parity cuts"};
    std::vector<BoundCommand> bound;
    configure(app, bound);
    try {
        parse_into(app, args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        std::ostringstream buffer;
        execute(collect(bound), buffer);
        out << buffer.str();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

}  // namespace ordpar::cli
