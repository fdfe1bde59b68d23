// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// per criterion. Exits nonzero when any criterion fails. The CLI binary path
// is taken from argv[1] (used by the determinism criterion).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ochro/ochro.hpp"
#include "oracles.hpp"

using namespace ochro;

namespace {

struct Outcome {
    bool passed;
    std::string note;
};

std::string fmt_double(double v)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return buffer;
}

struct NamedGraph {
    std::string name;
    UndirectedGraph graph;
};

std::vector<NamedGraph> corpus()
{
    std::vector<NamedGraph> graphs;
    for (int n = 2; n <= 5; ++n)
        graphs.push_back({"P" + std::to_string(n), gen_basic(GraphKind::Path, n)});
    for (int n = 3; n <= 6; ++n)
        graphs.push_back({"C" + std::to_string(n), gen_basic(GraphKind::Cycle, n)});
    graphs.push_back({"K1,3", gen_basic(GraphKind::Star, 4)});
    graphs.push_back({"K4", gen_basic(GraphKind::Complete, 4)});
    graphs.push_back({"Q2", gen_hypercube(2)});
    return graphs;
}

struct SweepData {
    // per graph: list of exact values over all orientations
    std::map<std::string, std::vector<int>> exact_values;
    bool equivalence_holds = true;
    std::string counterexample;
};

SweepData sweep_all_orientations()
{
    SweepData data;
    for (const auto& [name, g] : corpus()) {
        auto& values = data.exact_values[name];
        values.reserve(static_cast<std::size_t>(orientation_count(g)));
        for_each_orientation(g, [&](std::uint64_t mask, const OrientedGraph& d) {
            const SearchResult result = ochi_exact(d);
            if (!result.stats.completed)
                throw std::runtime_error(name + " orientation did not complete");
            values.push_back(result.value);
            const bool full = result.value == d.vertex_count();
            const bool oclique = is_oclique(d);
            if (full != oclique && data.equivalence_holds) {
                data.equivalence_holds = false;
                data.counterexample = name + " mask " + std::to_string(mask);
            }
        });
    }
    return data;
}

Outcome criterion_lemma2()
{
    for (int p = 3; p <= 12; ++p) {
        const Lemma2Report report = verify_lemma2(p);
        if (!report.all_passed()) {
            for (const auto& check : report.checks)
                if (!check.passed)
                    return {false, "p=" + std::to_string(p) + " failed " + check.name + ": " + check.detail};
        }
    }
    return {true, "p=3..12, all five checks"};
}

Outcome criterion_constant()
{
    const TSolution sol = solve_t_equation(0.0);
    const double constant = std::sqrt(sol.t);
    if (std::abs(sol.residual) > 1e-10)
        return {false, "residual " + std::to_string(sol.residual)};
    if (std::abs(constant - 0.8007) >= 0.00005)
        return {false, "sqrt(t0) = " + std::to_string(constant) + " does not round to 0.8007"};
    std::ostringstream note;
    note << "sqrt(t0) = " << fmt_double(constant) << ", residual " << sol.residual;
    return {true, note.str()};
}

Outcome criterion_equivalence(const SweepData& data)
{
    if (!data.equivalence_holds)
        return {false, "counterexample at " + data.counterexample};
    std::size_t total = 0;
    for (const auto& [name, values] : data.exact_values)
        total += values.size();
    return {true, std::to_string(total) + " orientations, zero counterexamples"};
}

Outcome criterion_ksz_validity(const SweepData& data)
{
    for (const auto& [name, g] : corpus()) {
        const auto& values = data.exact_values.at(name);
        for (const int chi : values) {
            const double lhs = static_cast<double>(chi) * (chi - 1) / 2.0
                + static_cast<double>(g.vertex_count()) * std::log2(static_cast<double>(chi));
            if (lhs < static_cast<double>(g.edge_count()))
                return {false, name + ": chi=" + std::to_string(chi) + " violates the counting bound"};
        }
    }
    return {true, "counting inequality holds on every exactly solved instance"};
}

Outcome criterion_chain(const SweepData& data)
{
    for (const auto& [name, g] : corpus()) {
        const int harmonious = harmonious_exact(g).value;
        const int graph_exact = ochi_graph_exact(g).value;
        int max_orientation = 0;
        for (const int v : data.exact_values.at(name))
            max_orientation = std::max(max_orientation, v);
        const double mx = upper_mx(g.vertex_count(), g.max_degree());
        const double capped = std::min(mx, static_cast<double>(g.vertex_count()));
        if (graph_exact != max_orientation)
            return {false, name + ": graph-level value disagrees with the orientation sweep"};
        if (harmonious < graph_exact)
            return {false, name + ": harmonious below oriented"};
        if (harmonious < g.max_degree() + 1)
            return {false, name + ": harmonious below max degree + 1"};
        if (static_cast<double>(harmonious) <= std::sqrt(2.0 * g.edge_count()))
            return {false, name + ": harmonious fails sqrt(2m) bound"};
        if (static_cast<double>(harmonious) > capped + 1e-9)
            return {false, name + ": harmonious exceeds min(2*Delta*sqrt(n-1), n)"};
    }
    return {true, "harmonious >= oriented >= per-orientation; degree and edge bounds hold"};
}

Outcome criterion_hypercube()
{
    const SearchResult q2 = ochi_graph_exact(gen_hypercube(2));
    if (!q2.stats.completed)
        return {false, "Q2 sweep did not complete"};
    const int q2_lo = static_cast<int>(std::ceil(sqrt_t_at_zero() * 2.0));
    if (q2.value < q2_lo || q2.value > 4)
        return {false, "Q2 value " + std::to_string(q2.value) + " outside [" + std::to_string(q2_lo) + ",4]"};

    int q3_max = 0;
    std::uint64_t orientations = 0;
    for_each_orientation(gen_hypercube(3), [&](std::uint64_t, const OrientedGraph& d) {
        const SearchResult result = ochi_exact(d);
        if (!result.stats.completed)
            throw std::runtime_error("Q3 orientation did not complete");
        q3_max = std::max(q3_max, result.value);
        ++orientations;
    });
    if (orientations != 4096)
        return {false, "expected 4096 orientations, saw " + std::to_string(orientations)};
    const int q3_lo = ksz_lower(8, 12);
    if (q3_max < q3_lo || q3_max > 8)
        return {false, "Q3 max " + std::to_string(q3_max) + " outside [" + std::to_string(q3_lo) + ",8]"};
    return {true, "Q2 value " + std::to_string(q2.value) + " in [" + std::to_string(q2_lo)
        + ",4]; Q3 sweep max " + std::to_string(q3_max) + " in [" + std::to_string(q3_lo) + ",8]"};
}

Outcome criterion_ksz_numbers()
{
    const int ksz = ksz_lower(1024, 5120);
    const int lemma3_ceiling = ceil_guarded(lemma3_lower(1024, 5120));
    if (ksz != 26)
        return {false, "ksz_lower(1024,5120) = " + std::to_string(ksz)};
    if (lemma3_ceiling != 26)
        return {false, "ceil(lemma3_lower(1024,5120)) = " + std::to_string(lemma3_ceiling)};
    return {true, "both density lower-bound routes give 26 on Q_10"};
}

Outcome criterion_k11n()
{
    const OrientedGraph d = gen_k11n_oriented(3);
    const DiameterReport diameter = pair_diameter(d);
    if (!diameter.is_finite() || diameter.value != 3)
        return {false, "pair-diameter " + std::to_string(diameter.value)};
    const SearchResult chi = ochi_exact(d);
    if (!chi.stats.completed || chi.value != 3)
        return {false, "chromatic value " + std::to_string(chi.value)};
    const int oracle = oracles::min_oriented_colours(d);
    if (oracle != 3)
        return {false, "oracle disagrees: " + std::to_string(oracle)};
    return {true, "pair-diameter 3, chromatic value 3 (oracle-confirmed)"};
}

Outcome criterion_cli_determinism(const std::string& cli)
{
    if (cli.empty())
        return {false, "CLI binary path not provided (argv[1])"};
    const std::string dir = "acceptance_tmp";
    if (std::system(("mkdir -p " + dir).c_str()) != 0)
        return {false, "cannot create scratch directory"};
    const std::string base = cli + " experiment --d 3 --trials 100 --seed 1";
    const std::string a = dir + "/run_a.csv", b = dir + "/run_b.csv", c = dir + "/run_c.csv";
    if (std::system((base + " --out " + a + " > /dev/null").c_str()) != 0)
        return {false, "first run failed"};
    if (std::system((base + " --out " + b + " > /dev/null").c_str()) != 0)
        return {false, "second run failed"};
    if (std::system((base + " --threads 4 --out " + c + " > /dev/null").c_str()) != 0)
        return {false, "threaded run failed"};
    const std::string run_a = read_file(a), run_b = read_file(b), run_c = read_file(c);
    if (run_a != run_b)
        return {false, "repeat run differs byte-wise"};
    if (run_a != run_c)
        return {false, "thread count changes the output"};
    if (run_a.find("trial,seed,mask_digest") != 0)
        return {false, "unexpected CSV layout"};
    return {true, "two runs and a 4-thread run byte-identical"};
}

Outcome criterion_oracle_equivalence()
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 6); // 2..7
        const OrientedGraph d = oracles::random_digraph(n, 0xace0 + seed);
        const SearchResult result = ochi_exact(d);
        const int oracle = oracles::min_oriented_colours(d);
        if (!result.stats.completed || result.value != oracle)
            return {false, "seed " + std::to_string(seed) + ": solver " + std::to_string(result.value)
                + " vs brute force " + std::to_string(oracle)};
        if (!is_oriented_colouring(d, result.witness))
            return {false, "seed " + std::to_string(seed) + ": witness invalid"};
    }
    return {true, "200 random digraphs, solver == brute force"};
}

} // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    int failures = 0;

    const auto report = [&](int id, const std::string& name, const Outcome& outcome) {
        std::cout << (outcome.passed ? "PASS" : "FAIL") << " " << id << " " << name
                  << " -- " << outcome.note << "\n";
        if (!outcome.passed)
            ++failures;
    };

    const auto guarded = [&](int id, const std::string& name, auto&& fn) {
        try {
            report(id, name, fn());
        } catch (const std::exception& e) {
            report(id, name, {false, std::string("exception: ") + e.what()});
        }
    };

    SweepData sweep;
    bool sweep_ok = false;
    try {
        sweep = sweep_all_orientations();
        sweep_ok = true;
    } catch (const std::exception& e) {
        std::cout << "FAIL - orientation sweep -- exception: " << e.what() << "\n";
        failures += 3; // criteria 3..5 cannot run
    }

    guarded(1, "lemma2-construction", criterion_lemma2);
    guarded(2, "density-constant", criterion_constant);
    if (sweep_ok) {
        guarded(3, "oclique-characterization", [&] { return criterion_equivalence(sweep); });
        guarded(4, "counting-bound-validity", [&] { return criterion_ksz_validity(sweep); });
        guarded(5, "harmonious-chain", [&] { return criterion_chain(sweep); });
    }
    guarded(6, "hypercube-bracket", criterion_hypercube);
    guarded(7, "q10-lower-bound-routes", criterion_ksz_numbers);
    guarded(8, "k11n-example", criterion_k11n);
    guarded(9, "experiment-determinism", [&] { return criterion_cli_determinism(cli); });
    guarded(10, "solver-oracle-equivalence", criterion_oracle_equivalence);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
