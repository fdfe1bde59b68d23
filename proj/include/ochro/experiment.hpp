#ifndef OCHRO_EXPERIMENT_HPP
#define OCHRO_EXPERIMENT_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ochro/bounds.hpp"
#include "ochro/generators.hpp"
#include "ochro/graph.hpp"
#include "ochro/rng.hpp"
#include "ochro/solver.hpp"

namespace ochro {

inline constexpr int kExperimentDimensionLimit = 12;
inline constexpr int kExperimentExactVertexLimit = 16; // exact solve only when 2^d <= this

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string mask_digest;
    int heuristic_chi = 0;
    std::optional<int> exact_chi;
    bool oclique = false;
    std::uint64_t nodes = 0;
    std::uint64_t millis = 0; // stays 0 unless timing was requested
    int certified_lower = 1;
};

struct ExperimentRecord {
    int d = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::uint64_t budget_nodes = 0;
    double target = 0.0; // sqrt(t0)*sqrt(2^d), the density lower bound to beat
    std::vector<TrialRecord> records;
    int best_certified_lower = 0;
    int best_trial = -1;
    std::uint64_t best_seed = 0;
};

namespace detail {

inline std::string fnv1a_hex(const std::vector<bool>& mask)
{
    // bits packed LSB-first into bytes, then FNV-1a 64
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    const std::size_t bytes = (mask.size() + 7) / 8;
    for (std::size_t byte = 0; byte < bytes; ++byte) {
        std::uint8_t value = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
            const std::size_t index = byte * 8 + bit;
            if (index < mask.size() && mask[index])
                value |= static_cast<std::uint8_t>(1u << bit);
        }
        hash = (hash ^ value) * 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4)
        out << ((hash >> shift) & 0xf);
    return out.str();
}

// rows[v] = vertices reachable from v by a directed path of length <= 2
struct ReachTwo {
    int n;
    std::size_t words;
    std::vector<std::uint64_t> bits;

    explicit ReachTwo(const OrientedGraph& d)
        : n(d.vertex_count()), words((static_cast<std::size_t>(n) + 63) / 64)
    {
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (int v = 0; v < n; ++v) {
            auto* row = &bits[static_cast<std::size_t>(v) * words];
            for (int u : d.out_neighbours(v)) {
                row[static_cast<std::size_t>(u) >> 6] |= 1ULL << (u & 63);
                for (int w : d.out_neighbours(u))
                    row[static_cast<std::size_t>(w) >> 6] |= 1ULL << (w & 63);
            }
        }
    }

    bool reachable(int u, int v) const
    {
        return (bits[static_cast<std::size_t>(u) * words + (static_cast<std::size_t>(v) >> 6)]
                   >> (v & 63))
            & 1ULL;
    }

    bool close(int u, int v) const { return reachable(u, v) || reachable(v, u); }
};

inline bool oclique_by_reach(const ReachTwo& reach)
{
    for (int u = 0; u < reach.n; ++u)
        for (int v = u + 1; v < reach.n; ++v)
            if (!reach.close(u, v))
                return false;
    return true;
}

// greedy clique in the pairwise-close relation; certified lower bound
inline int core_by_reach(const ReachTwo& reach)
{
    std::vector<int> close_degree(static_cast<std::size_t>(reach.n), 0);
    for (int u = 0; u < reach.n; ++u)
        for (int v = 0; v < reach.n; ++v)
            if (u != v && reach.close(u, v))
                ++close_degree[static_cast<std::size_t>(u)];
    std::vector<int> candidates(static_cast<std::size_t>(reach.n));
    std::iota(candidates.begin(), candidates.end(), 0);
    int core = 0;
    while (!candidates.empty()) {
        int pick = candidates.front();
        for (int v : candidates)
            if (close_degree[static_cast<std::size_t>(v)] > close_degree[static_cast<std::size_t>(pick)])
                pick = v;
        ++core;
        std::vector<int> next;
        for (int v : candidates)
            if (v != pick && reach.close(pick, v))
                next.push_back(v);
        candidates = std::move(next);
    }
    return core;
}

} // namespace detail

// One seeded random-orientation trial of Q_d: heuristic colouring always,
// exact solve when the cube is small enough, plus the oclique flag and a
// certified lower bound on the orientation's chromatic value.
inline TrialRecord run_trial(const UndirectedGraph& hypercube, int trial_index,
    std::uint64_t master_seed, Budget budget, bool with_timing)
{
    const detail::Timer timer;
    TrialRecord record;
    record.trial = trial_index;
    record.seed = mix_seed(master_seed, static_cast<std::uint64_t>(trial_index));

    const OrientedGraph d = random_orientation(hypercube, record.seed);
    record.mask_digest = detail::fnv1a_hex(orientation_mask_of(hypercube, d));

    const SearchResult heur = ochi_heuristic(d, record.seed);
    record.heuristic_chi = heur.value;
    record.nodes = heur.stats.nodes;

    const detail::ReachTwo reach(d);
    record.oclique = detail::oclique_by_reach(reach);
    record.certified_lower = detail::core_by_reach(reach);

    if (d.vertex_count() <= kExperimentExactVertexLimit) {
        const SearchResult exact = ochi_exact(d, budget);
        record.nodes += exact.stats.nodes;
        if (exact.stats.completed) {
            record.exact_chi = exact.value;
            record.certified_lower = std::max(record.certified_lower, exact.value);
        } else {
            record.certified_lower = std::max(record.certified_lower, exact.lower);
        }
    }

    if (with_timing)
        record.millis = static_cast<std::uint64_t>(timer.millis());
    return record;
}

// Trials are independent (seed derived from the trial index), so any thread
// count produces the identical record; results land in trial order.
inline ExperimentRecord run_experiment(int d, int trials, std::uint64_t master_seed,
    Budget budget = {}, unsigned threads = 1, bool with_timing = false)
{
    if (d < 1 || d > kExperimentDimensionLimit)
        throw GraphError("experiment dimension " + std::to_string(d) + " outside 1.."
            + std::to_string(kExperimentDimensionLimit));
    if (trials < 1)
        throw GraphError("need at least one trial");

    ExperimentRecord record;
    record.d = d;
    record.seed = master_seed;
    record.trials = trials;
    record.budget_nodes = budget.max_nodes;
    record.target = sqrt_t_at_zero() * std::sqrt(std::exp2(d));
    record.records.resize(static_cast<std::size_t>(trials));

    const UndirectedGraph hypercube = gen_hypercube(d);
    std::atomic<int> next_trial{0};
    auto worker = [&] {
        for (;;) {
            const int index = next_trial.fetch_add(1);
            if (index >= trials)
                return;
            record.records[static_cast<std::size_t>(index)]
                = run_trial(hypercube, index, master_seed, budget, with_timing);
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    for (const auto& trial : record.records)
        if (trial.certified_lower > record.best_certified_lower) {
            record.best_certified_lower = trial.certified_lower;
            record.best_trial = trial.trial;
            record.best_seed = trial.seed;
        }
    return record;
}

inline std::string experiment_csv(const ExperimentRecord& record)
{
    std::ostringstream out;
    out << "trial,seed,mask_digest,heuristic_chi,exact_chi,is_oclique,nodes,millis\n";
    for (const auto& t : record.records) {
        out << t.trial << "," << t.seed << "," << t.mask_digest << "," << t.heuristic_chi << ",";
        if (t.exact_chi)
            out << *t.exact_chi;
        out << "," << (t.oclique ? 1 : 0) << "," << t.nodes << "," << t.millis << "\n";
    }
    return out.str();
}

} // namespace ochro

#endif // OCHRO_EXPERIMENT_HPP
