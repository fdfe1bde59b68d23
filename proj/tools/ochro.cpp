// ochro - oriented chromatic number toolkit
//
// Subcommands: gen, chi, bounds, oclique-check, verify-lemma2, experiment.
// Exit codes: 0 ok, 1 usage error, 2 parse error, 3 budget exhausted,
// 4 assertion/check failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ochro/ochro.hpp"
#include "ochro/reporting.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCheckFailed = 4;

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("OCHRO_BUDGET")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0)
            return value;
        std::cerr << "warning: ignoring unparsable OCHRO_BUDGET='" << env << "'\n";
    }
    return ochro::Budget{}.max_nodes;
}

void emit(const std::string& out_path, const std::string& contents)
{
    if (out_path == "-")
        std::cout << contents;
    else
        ochro::write_file(out_path, contents);
}

struct GenOptions {
    std::string kind;
    int d = 3;
    int n = 4;
    int p = 4;
    std::string out = "-";
};

int run_gen(const GenOptions& opt)
{
    std::string contents;
    int n = 0, m = 0, max_degree = 0;
    if (opt.kind == "hypercube") {
        const auto g = ochro::gen_hypercube(opt.d);
        contents = ochro::serialize(g);
        n = g.vertex_count();
        m = g.edge_count();
        max_degree = g.max_degree();
    } else if (opt.kind == "path" || opt.kind == "cycle" || opt.kind == "complete"
        || opt.kind == "star") {
        const auto kind = opt.kind == "path" ? ochro::GraphKind::Path
            : opt.kind == "cycle"            ? ochro::GraphKind::Cycle
            : opt.kind == "complete"         ? ochro::GraphKind::Complete
                                             : ochro::GraphKind::Star;
        const auto g = ochro::gen_basic(kind, opt.n);
        contents = ochro::serialize(g);
        n = g.vertex_count();
        m = g.edge_count();
        max_degree = g.max_degree();
    } else if (opt.kind == "lemma2") {
        const auto d = ochro::lemma2_digraph(opt.p);
        contents = ochro::serialize(d);
        n = d.vertex_count();
        m = d.arc_count();
        max_degree = ochro::underlying(d).max_degree();
    } else if (opt.kind == "k11n-oriented") {
        const auto d = ochro::gen_k11n_oriented(opt.n);
        contents = ochro::serialize(d);
        n = d.vertex_count();
        m = d.arc_count();
        max_degree = ochro::underlying(d).max_degree();
    } else {
        std::cerr << "unknown kind '" << opt.kind << "'\n";
        return kExitUsage;
    }
    emit(opt.out, contents);
    std::ostream& info = opt.out == "-" ? std::cerr : std::cout;
    info << "n=" << n << " m=" << m << " max_degree=" << max_degree << "\n";
    return kExitOk;
}

struct ChiOptions {
    std::string file;
    bool exact = false;
    bool heuristic = false;
    bool all_orientations = false;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::string witness_out;
    bool json = false;
};

int run_chi(const ChiOptions& opt)
{
    std::istringstream in(ochro::read_file(opt.file));
    const ochro::AnyGraph parsed = ochro::parse_graph_auto(in);
    const ochro::Budget budget{opt.budget};
    const bool heuristic = opt.heuristic && !opt.exact;

    ochro::SearchResult result;
    if (std::holds_alternative<ochro::UndirectedGraph>(parsed)) {
        const auto& g = std::get<ochro::UndirectedGraph>(parsed);
        if (!opt.all_orientations) {
            std::cerr << "undirected input: pass --all-orientations to search over all 2^m orientations\n";
            return kExitUsage;
        }
        if (heuristic) {
            ochro::for_each_orientation(g, [&](std::uint64_t mask, const ochro::OrientedGraph& d) {
                auto r = ochro::ochi_heuristic(d, opt.seed);
                result.stats.nodes += r.stats.nodes;
                if (r.value > result.value) {
                    result.value = r.value;
                    result.witness = std::move(r.witness);
                    result.orientation_mask = mask;
                }
            });
            result.lower = 1;
            result.upper = result.value;
            result.stats.completed = true;
        } else {
            result = ochro::ochi_graph_exact(g, budget);
        }
    } else {
        const auto& d = std::get<ochro::OrientedGraph>(parsed);
        if (opt.all_orientations) {
            std::cerr << "--all-orientations applies to undirected input only\n";
            return kExitUsage;
        }
        result = heuristic ? ochro::ochi_heuristic(d, opt.seed) : ochro::ochi_exact(d, budget);
    }

    if (opt.json)
        std::cout << ochro::search_json(result).dump(2) << "\n";
    else
        std::cout << ochro::search_text(result);
    if (!opt.witness_out.empty())
        ochro::write_file(opt.witness_out, ochro::serialize_witness(result.witness));
    return result.stats.completed ? kExitOk : kExitBudget;
}

struct BoundsOptions {
    std::string file;
    int hypercube_d = 0;
    double epsilon = 1.0;
    bool json = false;
};

int run_bounds(const BoundsOptions& opt)
{
    if (opt.file.empty() == (opt.hypercube_d == 0)) {
        std::cerr << "pass exactly one of <file> or --hypercube <d>\n";
        return kExitUsage;
    }

    std::optional<ochro::UndirectedGraph> graph;
    std::optional<ochro::HypercubeBracket> cube;
    bool from_orientation = false;
    if (opt.hypercube_d > 0) {
        graph = ochro::gen_hypercube(opt.hypercube_d);
        cube = ochro::hypercube_bracket(opt.hypercube_d);
    } else {
        std::istringstream in(ochro::read_file(opt.file));
        const ochro::AnyGraph parsed = ochro::parse_graph_auto(in);
        if (std::holds_alternative<ochro::UndirectedGraph>(parsed)) {
            graph = std::get<ochro::UndirectedGraph>(parsed);
        } else {
            graph = ochro::underlying(std::get<ochro::OrientedGraph>(parsed));
            from_orientation = true;
        }
    }

    ochro::BoundsReport report = ochro::bounds_report(*graph, opt.epsilon);
    if (from_orientation)
        report.flags.push_back("input was oriented; bounds refer to its underlying graph");

    if (opt.json) {
        nlohmann::json j = ochro::bounds_json(report);
        if (cube)
            j["hypercube"] = {{"d", cube->d}, {"lower", ochro::round6(cube->lower)},
                {"upper", ochro::round6(cube->upper)}, {"mx_value", ochro::round6(cube->mx_value)},
                {"gap_factor", ochro::round6(cube->gap_factor)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ochro::bounds_text(report);
        if (cube)
            std::cout << "hypercube bracket: [" << ochro::fmt6(cube->lower) << ", "
                      << ochro::fmt6(cube->upper) << "] (bracket gap factor about "
                      << ochro::fmt6(cube->gap_factor) << ")\n";
    }
    return kExitOk;
}

struct OcliqueOptions {
    std::string file;
    bool json = false;
};

int run_oclique(const OcliqueOptions& opt)
{
    std::istringstream in(ochro::read_file(opt.file));
    const ochro::OrientedGraph d = ochro::parse_oriented(in);
    const ochro::DiameterReport report = ochro::pair_diameter(d);
    if (opt.json)
        std::cout << ochro::oclique_json(report, d.vertex_count()).dump(2) << "\n";
    else
        std::cout << ochro::oclique_text(report, d.vertex_count());
    const bool oclique = report.is_finite() && report.value <= 2;
    return oclique ? kExitOk : kExitCheckFailed;
}

struct Lemma2Options {
    int p = 4;
    bool json = false;
};

int run_verify_lemma2(const Lemma2Options& opt)
{
    const ochro::Lemma2Report report = ochro::verify_lemma2(opt.p);
    if (opt.json)
        std::cout << ochro::lemma2_json(report).dump(2) << "\n";
    else
        std::cout << ochro::lemma2_text(report);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

struct ExperimentOptions {
    int d = 3;
    int trials = 100;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    std::string out;
    std::string format; // csv | json | "" = from extension
    unsigned threads = 1;
    bool timing = false;
};

int run_experiment(const ExperimentOptions& opt)
{
    std::string format = opt.format;
    if (format.empty())
        format = opt.out.size() >= 5 && opt.out.substr(opt.out.size() - 5) == ".json" ? "json" : "csv";
    if (format != "csv" && format != "json") {
        std::cerr << "unknown format '" << format << "', expected csv or json\n";
        return kExitUsage;
    }

    const ochro::ExperimentRecord record = ochro::run_experiment(opt.d, opt.trials, opt.seed,
        ochro::Budget{opt.budget}, opt.threads, opt.timing);

    const std::string contents
        = format == "json" ? ochro::experiment_json(record).dump(2) + "\n" : ochro::experiment_csv(record);
    emit(opt.out.empty() ? "-" : opt.out, contents);
    if (!opt.out.empty())
        std::cout << ochro::experiment_summary(record);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"oriented chromatic numbers: generators, solvers, bound formulas, experiments"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph or digraph file");
    gen_cmd->add_option("kind", gen.kind, "hypercube|path|cycle|complete|star|lemma2|k11n-oriented")
        ->required();
    gen_cmd->add_option("--d", gen.d, "hypercube dimension");
    gen_cmd->add_option("--n", gen.n, "vertex count (path/cycle/complete/star) or independent-set size (k11n-oriented)");
    gen_cmd->add_option("--p", gen.p, "construction parameter (lemma2)");
    gen_cmd->add_option("--out", gen.out, "output path, '-' for stdout");

    ChiOptions chi;
    auto* chi_cmd = app.add_subcommand("chi", "oriented chromatic number of a digraph or graph");
    chi_cmd->add_option("file", chi.file, "input graph file")->required();
    auto* exact_flag = chi_cmd->add_flag("--exact", chi.exact, "exact search (default)");
    chi_cmd->add_flag("--heuristic", chi.heuristic, "greedy upper bound only")->excludes(exact_flag);
    chi_cmd->add_flag("--all-orientations", chi.all_orientations,
        "maximize over all orientations (undirected input)");
    chi_cmd->add_option("--budget", chi.budget, "node budget (default OCHRO_BUDGET or 10^7)");
    chi_cmd->add_option("--seed", chi.seed, "seed for the heuristic vertex order");
    chi_cmd->add_option("--witness-out", chi.witness_out, "write the witness colouring here");
    chi_cmd->add_flag("--json", chi.json, "JSON report");

    BoundsOptions bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every applicable bound formula");
    bounds_cmd->add_option("file", bounds.file, "input graph file");
    bounds_cmd->add_option("--hypercube", bounds.hypercube_d, "use Q_d instead of a file");
    bounds_cmd->add_option("--epsilon", bounds.epsilon, "epsilon for the dense lower bound (default 1)");
    bounds_cmd->add_flag("--json", bounds.json, "JSON report");

    OcliqueOptions oclique;
    auto* oclique_cmd = app.add_subcommand("oclique-check", "pair-diameter and oclique test");
    oclique_cmd->add_option("file", oclique.file, "oriented graph file")->required();
    oclique_cmd->add_flag("--json", oclique.json, "JSON report");

    Lemma2Options lemma2;
    auto* lemma2_cmd = app.add_subcommand("verify-lemma2", "verify the extremal construction");
    lemma2_cmd->add_option("--p", lemma2.p, "construction parameter, p >= 3")->required();
    lemma2_cmd->add_flag("--json", lemma2.json, "JSON report");

    ExperimentOptions experiment;
    auto* exp_cmd = app.add_subcommand("experiment", "seeded random hypercube orientations");
    exp_cmd->add_option("--d", experiment.d, "hypercube dimension")->required();
    exp_cmd->add_option("--trials", experiment.trials, "number of trials (default 100)");
    exp_cmd->add_option("--seed", experiment.seed, "master seed (default 1)");
    exp_cmd->add_option("--budget", experiment.budget, "node budget per exact solve");
    exp_cmd->add_option("--out", experiment.out, "output path ('' = stdout)");
    exp_cmd->add_option("--format", experiment.format, "csv|json (default: by extension, else csv)");
    exp_cmd->add_option("--threads", experiment.threads, "worker threads (default 1)");
    exp_cmd->add_flag("--timing", experiment.timing, "fill the millis column (breaks byte-level reproducibility)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::uint64_t budget = default_budget();
    if (chi.budget == 0)
        chi.budget = budget;
    if (experiment.budget == 0)
        experiment.budget = budget;

    try {
        if (gen_cmd->parsed())
            return run_gen(gen);
        if (chi_cmd->parsed())
            return run_chi(chi);
        if (bounds_cmd->parsed())
            return run_bounds(bounds);
        if (oclique_cmd->parsed())
            return run_oclique(oclique);
        if (lemma2_cmd->parsed())
            return run_verify_lemma2(lemma2);
        if (exp_cmd->parsed())
            return run_experiment(experiment);
    } catch (const ochro::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
