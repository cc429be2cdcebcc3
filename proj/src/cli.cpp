#include "collatz/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "collatz/cycles.hpp"
#include "collatz/nodes.hpp"
#include "collatz/report.hpp"
#include "collatz/verify.hpp"

namespace collatz {

namespace {

struct GlobalOptions {
    std::string problem;
    std::string mapping_file;
    unsigned precision = kDefaultDigits;
    std::string r_mode;
    std::string format = "md";
    std::string out_file;
    std::string par;
};

struct NodesOptions {
    int max_node = 0; // 0: layout default
    int min_node = 0;
    std::int64_t max_k = 10'000'000;
    unsigned max_digits = kMaxDigits;
    bool no_escalate = false;
    bool table2 = false;
    bool table3 = false;
    bool table5 = false;
};

struct CyclesOptions {
    std::string range = "-200..200";
    std::uint64_t max_steps = 10'000;
    std::string max_magnitude = "1000000000000000000";
    unsigned threads = 1;
};

struct VerifyOptions {
    std::string which;
    std::size_t k = 0;
    std::int64_t window_start = 1;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    std::uint64_t limit = kDefaultEnumerationLimit;
    unsigned threads = 1;
};

struct TrajectoryOptions {
    std::size_t k = 0;
    std::int64_t k1 = -1;
    std::int64_t k2 = -1;
    std::int64_t window_start = 1;
    std::size_t head = 0;
    std::size_t tail = 0;
    std::string start;
};

struct GapOptions {
    std::string node;
};

MappingSpec load_mapping(const GlobalOptions& g, const std::string& fallback)
{
    if (!g.mapping_file.empty()) {
        if (!g.problem.empty()) {
            throw ConfigError("--problem and --mapping are exclusive");
        }
        std::ifstream in(g.mapping_file);
        if (!in) {
            throw ConfigError("cannot read mapping file '" + g.mapping_file + "'");
        }
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("mapping file '" + g.mapping_file + "' is not valid JSON: " + e.what());
        }
        return MappingSpec::from_json(doc);
    }
    return mapping_preset(g.problem.empty() ? fallback : g.problem);
}

std::optional<Rational> par_of(const GlobalOptions& g)
{
    if (g.par.empty()) {
        return std::nullopt;
    }
    return parse_rational(g.par);
}

// Exact R for odd bases, Stirling for the diadic case: these are the
// modes that reproduce the reference tables.
LogFactorialMode r_mode_for(const GlobalOptions& g, int base)
{
    if (!g.r_mode.empty()) {
        return parse_log_factorial_mode(g.r_mode);
    }
    return base == 2 ? LogFactorialMode::stirling : LogFactorialMode::exact;
}

void check_precision(unsigned digits)
{
    if (digits < kMinDigits || digits > kMaxDigits) {
        throw ConfigError("--precision must lie in [" + std::to_string(kMinDigits) + ", " + std::to_string(kMaxDigits) +
                          "]");
    }
}

std::string cmd_nodes(const GlobalOptions& g, const NodesOptions& o)
{
    if (o.table2 + o.table3 + o.table5 > 1) {
        throw ConfigError("--table2, --table3 and --table5 are exclusive");
    }
    check_precision(g.precision);
    NodeLayout layout = NodeLayout::plain;
    int max_node = 14;
    int min_node = 1;
    if (o.table2) {
        layout = NodeLayout::table2;
        max_node = 9;
    } else if (o.table3) {
        layout = NodeLayout::table3;
        min_node = 7;
    } else if (o.table5) {
        layout = NodeLayout::table5;
        max_node = 10;
    }
    if (o.max_node != 0) {
        max_node = o.max_node;
    }
    if (o.min_node != 0) {
        min_node = o.min_node;
    }
    if (max_node < 1) {
        throw ConfigError("--max-node must be >= 1");
    }

    const auto spec = load_mapping(g, o.table5 ? "3x1" : "collatz");
    auto factors = FactorSystem::from_mapping(spec, par_of(g));
    if (o.table5) {
        // The 3x+1 reference layout gives r and s as powers of 3.
        factors.rs_base = 3;
    }
    const PrecisionConfig precision{g.precision, !o.no_escalate, o.max_digits};
    const NodeRunOptions run{r_mode_for(g, factors.base), true};
    auto records = run_nodes(factors, StopCriteria{max_node, o.max_k}, precision, run);
    std::erase_if(records, [&](const NodeRecord& r) { return r.main_index < min_node; });
    return render_nodes(records, layout, parse_output_format(g.format));
}

std::string cmd_cycles(const GlobalOptions& g, const CyclesOptions& o)
{
    const auto spec = load_mapping(g, "collatz");
    const auto range = parse_range(o.range);
    SearchBudget budget;
    budget.max_steps = o.max_steps;
    try {
        budget.max_magnitude = BigInt(o.max_magnitude);
    } catch (const std::exception&) {
        throw ConfigError("--max-magnitude must be an integer");
    }
    const auto format = parse_output_format(g.format);
    auto result = find_cycles(spec, range, budget, o.threads);
    if (auto par = par_of(g)) {
        for (auto& c : result.cycles) {
            c.certificate = certify(spec, c, *par, g.precision);
        }
    }
    return render_cycles(spec, range, result, format);
}

std::string cmd_verify(const GlobalOptions& g, const VerifyOptions& o)
{
    const auto spec = load_mapping(g, "collatz");
    const auto format = parse_output_format(g.format);
    const WindowOptions win{o.limit, o.threads};
    if (o.which == "periodicity") {
        return render_periodicity(verify_periodicity(spec, o.k, o.window_start, o.samples, o.seed, win), format);
    }
    return render_distribution(verify_distribution(spec, o.k, o.window_start, win), format);
}

std::string cmd_trajectories(const GlobalOptions& g, const TrajectoryOptions& o)
{
    const auto spec = load_mapping(g, "collatz");
    const auto format = parse_output_format(g.format);
    if (!o.start.empty()) {
        BigInt n;
        try {
            n = BigInt(o.start);
        } catch (const std::exception&) {
            throw ConfigError("--start must be an integer");
        }
        auto t = iterate(spec, n, o.k);
        auto symbols = t.symbols;
        ClassMember row{std::move(t), std::move(symbols)};
        return render_class({row}, 1, 1, format);
    }
    std::int64_t k1 = o.k1;
    std::int64_t k2 = o.k2;
    const auto k = static_cast<std::int64_t>(o.k);
    if (k1 < 0 && k2 < 0) {
        throw ConfigError("trajectories needs --k1 or --k2 (or --start)");
    }
    if (k1 < 0) {
        k1 = k - k2;
    } else if (k2 < 0) {
        k2 = k - k1;
    }
    if (k1 < 0 || k2 < 0 || k1 + k2 != k) {
        throw ConfigError("--k1 + --k2 must equal --k");
    }
    const auto rows = enumerate_class(spec, o.k, k1, k2, o.window_start);
    if (o.head == 0 && o.tail == 0) {
        return render_class(rows, rows.size(), rows.size(), format);
    }
    return render_class(head_tail(rows, o.head, o.tail), rows.size(), o.head, format);
}

std::string cmd_gap(const GlobalOptions& g, const GapOptions& o)
{
    check_precision(g.precision);
    int main_index = 0;
    int secondary_index = 0;
    {
        const auto dot = o.node.find('.');
        try {
            std::size_t used_a = 0;
            std::size_t used_b = 0;
            if (dot == std::string::npos) {
                throw std::invalid_argument("no dot");
            }
            main_index = std::stoi(o.node.substr(0, dot), &used_a);
            secondary_index = std::stoi(o.node.substr(dot + 1), &used_b);
            if (used_a != dot || used_b != o.node.size() - dot - 1) {
                throw std::invalid_argument("trailing");
            }
        } catch (const std::exception&) {
            throw ConfigError("--node must look like MAIN.SECONDARY, got '" + o.node + "'");
        }
    }
    const auto spec = load_mapping(g, "collatz");
    const auto factors = FactorSystem::from_mapping(spec, par_of(g));
    const NodeRunOptions run{r_mode_for(g, factors.base), true};
    const auto records = run_nodes(factors, StopCriteria{main_index, std::numeric_limits<std::int64_t>::max() / 4},
                                   PrecisionConfig{g.precision, true, kMaxDigits}, run);
    const auto* rec = find_node(records, main_index, secondary_index);
    if (rec == nullptr || !rec->metrics) {
        throw ConfigError("node " + o.node + " does not exist in this run");
    }
    ScopedPrecision prec(rec->digits);
    GapReport rep{main_index, secondary_index, rec->metrics->ln_C, rec->metrics->ln_R,
                  gap_analysis(rec->metrics->ln_C, rec->metrics->ln_R, factors)};
    return render_gap(rep, parse_output_format(g.format));
}

void emit(const GlobalOptions& g, const std::string& text, std::ostream& out)
{
    if (g.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.out_file, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write '" + g.out_file + "'");
    }
    file << text;
}

} // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cycle analysis for generalized 3x+1 mappings"};
    app.name("collatz");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--problem", g.problem, "Preset: collatz, 3x1, carnielli-t<d>, carnielli-l<d>");
    app.add_option("--mapping", g.mapping_file, "Custom mapping JSON file");
    app.add_option("--precision", g.precision, "Decimal digits of working precision")->capture_default_str();
    app.add_option("--r-mode", g.r_mode, "exact, stirling or ramanujan (default depends on the problem)");
    app.add_option("--format", g.format, "md, csv or json")->capture_default_str();
    app.add_option("--out", g.out_file, "Write to FILE instead of standard output");
    app.add_option("--par", g.par, "Constant of the least-term bound, e.g. 7/24");

    NodesOptions nodes_opt;
    auto* nodes = app.add_subcommand("nodes", "PP*PG node table");
    nodes->add_option("--max-node", nodes_opt.max_node, "Last main node");
    nodes->add_option("--min-node", nodes_opt.min_node, "First main node shown");
    nodes->add_option("--max-k", nodes_opt.max_k, "Stop before k exceeds this")->capture_default_str();
    nodes->add_option("--max-digits", nodes_opt.max_digits, "Precision cap for escalation")->capture_default_str();
    nodes->add_flag("--no-escalate", nodes_opt.no_escalate, "Fail instead of raising precision");
    nodes->add_flag("--table2", nodes_opt.table2, "Lambda at 14 decimals, nodes 1-9");
    nodes->add_flag("--table3", nodes_opt.table3, "Deltas at 28 decimals, nodes 7-14");
    nodes->add_flag("--table5", nodes_opt.table5, "3x+1 run, nodes 1-10");

    CyclesOptions cycles_opt;
    auto* cycles = app.add_subcommand("cycles", "Search cycles and certify |m| <= C");
    cycles->add_option("--range", cycles_opt.range, "LO..HI of least terms")->capture_default_str();
    cycles->add_option("--max-steps", cycles_opt.max_steps, "Steps per start")->capture_default_str();
    cycles->add_option("--max-magnitude", cycles_opt.max_magnitude, "Largest |value| followed")->capture_default_str();
    cycles->add_option("--threads", cycles_opt.threads, "Worker threads")->capture_default_str();

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Window checks of the residue sequences");
    verify->add_option("which", verify_opt.which, "periodicity or distribution")
        ->required()
        ->check(CLI::IsMember({"periodicity", "distribution"}));
    verify->add_option("--k", verify_opt.k, "Sequence length")->required();
    verify->add_option("--window-start", verify_opt.window_start, "First start of the window")->capture_default_str();
    verify->add_option("--samples", verify_opt.samples, "Random periodicity samples")->capture_default_str();
    verify->add_option("--seed", verify_opt.seed, "Sampling seed")->capture_default_str();
    verify->add_option("--limit", verify_opt.limit, "Largest window")->capture_default_str();
    verify->add_option("--threads", verify_opt.threads, "Worker threads")->capture_default_str();

    TrajectoryOptions traj_opt;
    auto* traj = app.add_subcommand("trajectories", "List one (k1, k2) class of a window");
    traj->add_option("--k", traj_opt.k, "Trajectory length")->required();
    traj->add_option("--k1", traj_opt.k1, "Expanding steps");
    traj->add_option("--k2", traj_opt.k2, "Contracting steps");
    traj->add_option("--window-start", traj_opt.window_start, "First start of the window")->capture_default_str();
    traj->add_option("--head", traj_opt.head, "Rows from the top (0 with --tail 0: all)");
    traj->add_option("--tail", traj_opt.tail, "Rows from the bottom");
    traj->add_option("--start", traj_opt.start, "Show the trajectory of one start instead");

    GapOptions gap_opt;
    auto* gap = app.add_subcommand("gap", "Steps needed to close ln R - ln C at a node");
    gap->add_option("--node", gap_opt.node, "MAIN.SECONDARY")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << "see: collatz " << sub->get_name() << " --help\n";
        }
        return 2;
    }

    try {
        std::string text;
        if (*nodes) {
            text = cmd_nodes(g, nodes_opt);
        } else if (*cycles) {
            text = cmd_cycles(g, cycles_opt);
        } else if (*verify) {
            text = cmd_verify(g, verify_opt);
        } else if (*traj) {
            text = cmd_trajectories(g, traj_opt);
        } else if (*gap) {
            text = cmd_gap(g, gap_opt);
        }
        emit(g, text, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionCapError& e) {
        err << "precision cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace collatz
