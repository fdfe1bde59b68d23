#ifndef OCHRO_SOLVER_HPP
#define OCHRO_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "ochro/colouring.hpp"
#include "ochro/diameter.hpp"
#include "ochro/graph.hpp"
#include "ochro/rng.hpp"

namespace ochro {

// Node-count budget; a node is one attempted vertex/colour assignment.
// Wall-clock limits are deliberately not used, so runs reproduce exactly.
struct Budget {
    std::uint64_t max_nodes = 10'000'000;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double millis = 0.0;
    bool completed = false;
};

// Result of a chromatic search. When completed, value is exact and
// lower == value == upper. When the budget ran out, [lower, upper] is the
// certified bracket and value/witness carry the best colouring found.
struct SearchResult {
    int value = 0;
    int lower = 0;
    int upper = 0;
    Colouring witness;
    std::optional<std::uint64_t> orientation_mask; // set by graph-level search
    SearchStats stats;
};

namespace detail {

class Timer {
public:
    double millis() const
    {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

// growable bitset rows used by the greedy colourers
struct BitRows {
    std::vector<std::vector<std::uint64_t>> rows;

    void add_row() { rows.emplace_back(); }

    void set(std::size_t row, int bit)
    {
        auto& r = rows[row];
        const std::size_t word = static_cast<std::size_t>(bit) >> 6;
        if (r.size() <= word)
            r.resize(word + 1, 0);
        r[word] |= 1ULL << (bit & 63);
    }

    void or_into(std::size_t row, std::vector<std::uint64_t>& acc) const
    {
        const auto& r = rows[row];
        for (std::size_t w = 0; w < r.size(); ++w)
            acc[w] |= r[w];
    }
};

inline int first_clear_bit(const std::vector<std::uint64_t>& words, int limit)
{
    for (int c = 0; c <= limit; ++c)
        if (!((words[static_cast<std::size_t>(c) >> 6] >> (c & 63)) & 1ULL))
            return c;
    return limit + 1;
}

inline std::vector<int> shuffled_vertex_order(int n, std::uint64_t seed)
{
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)],
            order[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1))]);
    return order;
}

enum class Outcome { Sat, Unsat, OutOfBudget };

// Decision search: does d admit an oriented colouring with at most k colours?
// Backtracking over vertices in dynamic saturation order (most distinct
// neighbour colours, then higher degree, then lower index), with at most one
// fresh colour offered per step and an incremental count of arcs between
// each ordered pair of colour classes.
class OrientedDecision {
public:
    OrientedDecision(const OrientedGraph& d, int k, std::uint64_t& nodes, std::uint64_t max_nodes)
        : d_(d), k_(k), n_(d.vertex_count()), nodes_(nodes), max_nodes_(max_nodes)
    {
        colour_.assign(static_cast<std::size_t>(n_), -1);
        class_size_.assign(static_cast<std::size_t>(k_), 0);
        cnt_.assign(static_cast<std::size_t>(k_) * k_, 0);
        nb_colour_count_.assign(static_cast<std::size_t>(n_) * k_, 0);
        saturation_.assign(static_cast<std::size_t>(n_), 0);
        seen_in_.assign(static_cast<std::size_t>(k_), 0);
        degree_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            degree_[static_cast<std::size_t>(v)] = d.in_degree(v) + d.out_degree(v);
    }

    Outcome run(Colouring& witness)
    {
        assign(0, 0); // colour classes are nameable, so vertex 0 opens class 0
        const Outcome out = n_ == 1 ? (solution_ = colour_, Outcome::Sat) : extend(1);
        if (out == Outcome::Sat)
            witness = Colouring(solution_);
        return out;
    }

private:
    Outcome extend(int assigned)
    {
        if (assigned == n_) {
            solution_ = colour_; // capture before the unwind clears it
            return Outcome::Sat;
        }
        const int v = pick_vertex();
        const int limit = std::min(used_, k_ - 1);
        bool out_of_budget = false;
        for (int c = 0; c <= limit; ++c) {
            if (++nodes_ > max_nodes_)
                return Outcome::OutOfBudget;
            if (!feasible(v, c))
                continue;
            assign(v, c);
            const Outcome sub = extend(assigned + 1);
            unassign(v, c);
            if (sub == Outcome::Sat)
                return sub;
            if (sub == Outcome::OutOfBudget)
                out_of_budget = true;
        }
        return out_of_budget ? Outcome::OutOfBudget : Outcome::Unsat;
    }

    int pick_vertex() const
    {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[static_cast<std::size_t>(v)] >= 0)
                continue;
            if (best < 0 || better(v, best))
                best = v;
        }
        return best;
    }

    bool better(int v, int w) const
    {
        const int sv = saturation_[static_cast<std::size_t>(v)];
        const int sw = saturation_[static_cast<std::size_t>(w)];
        if (sv != sw)
            return sv > sw;
        const int dv = degree_[static_cast<std::size_t>(v)];
        const int dw = degree_[static_cast<std::size_t>(w)];
        if (dv != dw)
            return dv > dw;
        return v < w;
    }

    // colour c for v: proper, no class pair gets arcs in both directions
    // (against recorded counts and among the arcs this step adds)
    bool feasible(int v, int c)
    {
        ++stamp_;
        for (int u : d_.in_neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu < 0)
                continue;
            if (cu == c || cnt_[static_cast<std::size_t>(c) * k_ + cu] > 0)
                return false;
            seen_in_[static_cast<std::size_t>(cu)] = stamp_;
        }
        for (int u : d_.out_neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu < 0)
                continue;
            if (cu == c || cnt_[static_cast<std::size_t>(cu) * k_ + c] > 0)
                return false;
            if (seen_in_[static_cast<std::size_t>(cu)] == stamp_)
                return false;
        }
        return true;
    }

    void assign(int v, int c)
    {
        colour_[static_cast<std::size_t>(v)] = c;
        if (c == used_)
            ++used_;
        ++class_size_[static_cast<std::size_t>(c)];
        for (int u : d_.in_neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu >= 0)
                ++cnt_[static_cast<std::size_t>(cu) * k_ + c];
            else
                bump_saturation(u, c);
        }
        for (int u : d_.out_neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu >= 0)
                ++cnt_[static_cast<std::size_t>(c) * k_ + cu];
            else
                bump_saturation(u, c);
        }
    }

    void unassign(int v, int c)
    {
        colour_[static_cast<std::size_t>(v)] = -1;
        for (int u : d_.in_neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu >= 0)
                --cnt_[static_cast<std::size_t>(cu) * k_ + c];
            else
                drop_saturation(u, c);
        }
        for (int u : d_.out_neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu >= 0)
                --cnt_[static_cast<std::size_t>(c) * k_ + cu];
            else
                drop_saturation(u, c);
        }
        if (--class_size_[static_cast<std::size_t>(c)] == 0 && c == used_ - 1)
            --used_;
    }

    void bump_saturation(int u, int c)
    {
        if (++nb_colour_count_[static_cast<std::size_t>(u) * k_ + c] == 1)
            ++saturation_[static_cast<std::size_t>(u)];
    }

    void drop_saturation(int u, int c)
    {
        if (--nb_colour_count_[static_cast<std::size_t>(u) * k_ + c] == 0)
            --saturation_[static_cast<std::size_t>(u)];
    }

    const OrientedGraph& d_;
    int k_;
    int n_;
    int used_ = 0;
    std::uint64_t& nodes_;
    std::uint64_t max_nodes_;
    std::vector<int> colour_;
    std::vector<int> solution_;
    std::vector<int> class_size_;
    std::vector<int> cnt_;
    std::vector<int> nb_colour_count_;
    std::vector<int> saturation_;
    std::vector<int> degree_;
    std::vector<std::uint64_t> seen_in_;
    std::uint64_t stamp_ = 0;
};

} // namespace detail

// Greedy oriented colouring over a seeded random vertex order: each vertex
// takes the least colour that creates no forbidden pattern. Endpoints of a
// directed path of length <= 2 can never share a colour in any oriented
// colouring, so those colours are excluded outright; that exclusion is what
// keeps a fresh colour always legal and the greedy free of dead ends.
inline SearchResult ochi_heuristic(const OrientedGraph& d, std::uint64_t seed = 0)
{
    const detail::Timer timer;
    const int n = d.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    // arcs_out[a]: classes b with an arc a->b; arcs_in[a]: classes b with b->a
    detail::BitRows arcs_out, arcs_in;
    std::vector<std::uint64_t> forbidden;
    int used = 0;

    SearchResult result;
    for (int v : detail::shuffled_vertex_order(n, seed)) {
        forbidden.assign(static_cast<std::size_t>(used) / 64 + 1, 0);
        auto forbid = [&](int w) {
            const int cw = colour[static_cast<std::size_t>(w)];
            if (cw >= 0)
                forbidden[static_cast<std::size_t>(cw) >> 6] |= 1ULL << (cw & 63);
        };
        for (int u : d.in_neighbours(v)) {
            forbid(u);
            for (int w : d.in_neighbours(u))
                forbid(w); // w -> u -> v
            const int cu = colour[static_cast<std::size_t>(u)];
            if (cu >= 0) // v in class c would add arc cu->c, illegal where c->cu exists
                arcs_in.or_into(static_cast<std::size_t>(cu), forbidden);
        }
        for (int u : d.out_neighbours(v)) {
            forbid(u);
            for (int w : d.out_neighbours(u))
                forbid(w); // v -> u -> w
            const int cu = colour[static_cast<std::size_t>(u)];
            if (cu >= 0)
                arcs_out.or_into(static_cast<std::size_t>(cu), forbidden);
        }
        const int c = detail::first_clear_bit(forbidden, used - 1);
        if (c == used) {
            arcs_out.add_row();
            arcs_in.add_row();
            ++used;
        }
        colour[static_cast<std::size_t>(v)] = c;
        for (int u : d.in_neighbours(v)) {
            const int cu = colour[static_cast<std::size_t>(u)];
            if (cu >= 0) {
                arcs_out.set(static_cast<std::size_t>(cu), c);
                arcs_in.set(static_cast<std::size_t>(c), cu);
            }
        }
        for (int u : d.out_neighbours(v)) {
            const int cu = colour[static_cast<std::size_t>(u)];
            if (cu >= 0) {
                arcs_out.set(static_cast<std::size_t>(c), cu);
                arcs_in.set(static_cast<std::size_t>(cu), c);
            }
        }
        ++result.stats.nodes;
    }

    result.value = used;
    result.lower = 1;
    result.upper = used;
    result.witness = Colouring(std::move(colour));
    result.stats.completed = true;
    result.stats.millis = timer.millis();
    return result;
}

// Certified lower bound: a greedily grown set of vertices that pairwise lie
// at directed distance <= 2 in one direction or the other. Any two such
// vertices must take distinct colours in an oriented colouring.
inline int pairwise_close_core(const OrientedGraph& d)
{
    const int n = d.vertex_count();
    if (n <= 1)
        return n;
    std::vector<std::vector<bool>> close(static_cast<std::size_t>(n),
        std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < n; ++u)
        for (int w : d.out_neighbours(u)) {
            close[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = true;
            close[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = true;
            for (int x : d.out_neighbours(w)) {
                close[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] = true;
                close[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)] = true;
            }
        }

    std::vector<int> close_degree(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && close[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                ++close_degree[static_cast<std::size_t>(u)];

    std::vector<int> candidates(static_cast<std::size_t>(n));
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
            if (v != pick && close[static_cast<std::size_t>(pick)][static_cast<std::size_t>(v)])
                next.push_back(v);
        candidates = std::move(next);
    }
    return core;
}

// Exact oriented chromatic number of a fixed digraph by iterative deepening
// between the core lower bound and the greedy upper bound. On budget
// exhaustion the bracket reflects every k fully refuted so far.
inline SearchResult ochi_exact(const OrientedGraph& d, Budget budget = {})
{
    const detail::Timer timer;
    SearchResult heur = ochi_heuristic(d, 0);
    const int lb = pairwise_close_core(d);

    SearchResult result;
    result.lower = lb;
    result.upper = heur.value;
    result.witness = std::move(heur.witness);
    result.value = heur.value;

    std::uint64_t nodes = 0;
    bool exhausted = false;
    for (int k = lb; k < result.upper; ++k) {
        detail::OrientedDecision search(d, k, nodes, budget.max_nodes);
        Colouring witness;
        const detail::Outcome out = search.run(witness);
        if (out == detail::Outcome::Sat) {
            result.value = k;
            result.upper = k;
            result.witness = std::move(witness);
            break;
        }
        if (out == detail::Outcome::OutOfBudget) {
            exhausted = true;
            break;
        }
        result.lower = k + 1; // k colours refuted exhaustively
    }

    if (!exhausted) {
        result.lower = result.value;
        result.upper = result.value;
    }
    result.stats.nodes = nodes;
    result.stats.completed = !exhausted;
    result.stats.millis = timer.millis();
    return result;
}

// Exact oriented chromatic number of an undirected graph: the maximum of
// ochi_exact over all 2^m orientations. Orientations that cannot beat the
// running maximum are dismissed with a single decision search.
inline SearchResult ochi_graph_exact(const UndirectedGraph& g, Budget budget = {},
    int limit_m = kDefaultOrientationLimit)
{
    const detail::Timer timer;
    const int n = g.vertex_count();
    SearchResult result;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int certified_lower = 0; // may exceed the witnessed value after exhaustion

    for_each_orientation(g, [&](std::uint64_t mask, const OrientedGraph& d) -> bool {
        const int k_start = result.value; // does d admit <= best colours?
        const int core = pairwise_close_core(d);
        if (core <= k_start && k_start > 0) {
            detail::OrientedDecision search(d, k_start, nodes, budget.max_nodes);
            Colouring witness;
            const detail::Outcome out = search.run(witness);
            if (out == detail::Outcome::Sat)
                return true; // cannot raise the maximum
            if (out == detail::Outcome::OutOfBudget) {
                exhausted = true;
                return false;
            }
        }
        // every k reached here is already refuted (or covered by the core)
        // for this orientation, so its chromatic value is at least k
        for (int k = std::max(k_start + 1, core); k <= n; ++k) {
            certified_lower = std::max(certified_lower, k);
            if (k == n) { // rainbow colouring is always oriented
                std::vector<int> rainbow(static_cast<std::size_t>(n));
                std::iota(rainbow.begin(), rainbow.end(), 0);
                result.value = n;
                result.witness = Colouring(std::move(rainbow));
                result.orientation_mask = mask;
                return true;
            }
            detail::OrientedDecision search(d, k, nodes, budget.max_nodes);
            Colouring witness;
            const detail::Outcome out = search.run(witness);
            if (out == detail::Outcome::Sat) {
                result.value = k;
                result.witness = std::move(witness);
                result.orientation_mask = mask;
                return true;
            }
            if (out == detail::Outcome::OutOfBudget) {
                exhausted = true;
                return false;
            }
        }
        return true;
    }, limit_m);

    result.lower = std::max(result.value, certified_lower);
    result.upper = exhausted ? n : result.value;
    result.stats.nodes = nodes;
    result.stats.completed = !exhausted;
    result.stats.millis = timer.millis();
    return result;
}

// ---- harmonious colourings ----

// Greedy harmonious colouring over a seeded random order. Keeps colours
// distinct within distance two (sharing a colour there would repeat a colour
// pair on two edges through the common neighbour) and never reuses an edge's
// colour pair, so a fresh colour always extends and the run cannot dead-end.
inline SearchResult harmonious_greedy(const UndirectedGraph& g, std::uint64_t seed = 0)
{
    const detail::Timer timer;
    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    detail::BitRows pair_with; // pair_with[a]: colours b with an edge coloured {a,b}
    std::vector<std::uint64_t> forbidden;
    int used = 0;

    SearchResult result;
    for (int v : detail::shuffled_vertex_order(n, seed)) {
        forbidden.assign(static_cast<std::size_t>(used) / 64 + 1, 0);
        auto forbid = [&](int c) { forbidden[static_cast<std::size_t>(c) >> 6] |= 1ULL << (c & 63); };
        for (int u : g.neighbours(v)) {
            const int cu = colour[static_cast<std::size_t>(u)];
            if (cu >= 0) {
                forbid(cu);
                pair_with.or_into(static_cast<std::size_t>(cu), forbidden);
            }
            for (int w : g.neighbours(u)) {
                const int cw = colour[static_cast<std::size_t>(w)];
                if (cw >= 0)
                    forbid(cw); // distance-2 exclusion
            }
        }
        const int c = detail::first_clear_bit(forbidden, used - 1);
        if (c == used) {
            pair_with.add_row();
            ++used;
        }
        colour[static_cast<std::size_t>(v)] = c;
        for (int u : g.neighbours(v)) {
            const int cu = colour[static_cast<std::size_t>(u)];
            if (cu >= 0 && u != v) {
                pair_with.set(static_cast<std::size_t>(cu), c);
                pair_with.set(static_cast<std::size_t>(c), cu);
            }
        }
        ++result.stats.nodes;
    }

    result.value = used;
    result.lower = 1;
    result.upper = used;
    result.witness = Colouring(std::move(colour));
    result.stats.completed = true;
    result.stats.millis = timer.millis();
    return result;
}

namespace detail {

// Decision search for harmonious colourings with at most k colours.
class HarmoniousDecision {
public:
    HarmoniousDecision(const UndirectedGraph& g, int k, std::uint64_t& nodes, std::uint64_t max_nodes)
        : g_(g), k_(k), n_(g.vertex_count()), nodes_(nodes), max_nodes_(max_nodes)
    {
        colour_.assign(static_cast<std::size_t>(n_), -1);
        class_size_.assign(static_cast<std::size_t>(k_), 0);
        pair_cnt_.assign(static_cast<std::size_t>(k_) * k_, 0);
        nb_colour_count_.assign(static_cast<std::size_t>(n_) * k_, 0);
        saturation_.assign(static_cast<std::size_t>(n_), 0);
        seen_.assign(static_cast<std::size_t>(k_), 0);

        // square neighbourhoods (distinct vertices within distance 2)
        square_.resize(static_cast<std::size_t>(n_));
        std::vector<std::uint64_t> stamp_v(static_cast<std::size_t>(n_), 0);
        std::uint64_t stamp = 0;
        for (int v = 0; v < n_; ++v) {
            ++stamp;
            stamp_v[static_cast<std::size_t>(v)] = stamp;
            auto& sq = square_[static_cast<std::size_t>(v)];
            for (int u : g.neighbours(v)) {
                if (stamp_v[static_cast<std::size_t>(u)] != stamp) {
                    stamp_v[static_cast<std::size_t>(u)] = stamp;
                    sq.push_back(u);
                }
                for (int w : g.neighbours(u))
                    if (stamp_v[static_cast<std::size_t>(w)] != stamp) {
                        stamp_v[static_cast<std::size_t>(w)] = stamp;
                        sq.push_back(w);
                    }
            }
        }
    }

    Outcome run(Colouring& witness)
    {
        assign(0, 0); // colour classes are nameable, so vertex 0 opens class 0
        const Outcome out = n_ == 1 ? (solution_ = colour_, Outcome::Sat) : extend(1);
        if (out == Outcome::Sat)
            witness = Colouring(solution_);
        return out;
    }

private:
    Outcome extend(int assigned)
    {
        if (assigned == n_) {
            solution_ = colour_; // capture before the unwind clears it
            return Outcome::Sat;
        }
        const int v = pick_vertex();
        const int limit = std::min(used_, k_ - 1);
        bool out_of_budget = false;
        for (int c = 0; c <= limit; ++c) {
            if (++nodes_ > max_nodes_)
                return Outcome::OutOfBudget;
            if (!feasible(v, c))
                continue;
            assign(v, c);
            const Outcome sub = extend(assigned + 1);
            unassign(v, c);
            if (sub == Outcome::Sat)
                return sub;
            if (sub == Outcome::OutOfBudget)
                out_of_budget = true;
        }
        return out_of_budget ? Outcome::OutOfBudget : Outcome::Unsat;
    }

    int pick_vertex() const
    {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[static_cast<std::size_t>(v)] >= 0)
                continue;
            if (best < 0 || better(v, best))
                best = v;
        }
        return best;
    }

    bool better(int v, int w) const
    {
        const int sv = saturation_[static_cast<std::size_t>(v)];
        const int sw = saturation_[static_cast<std::size_t>(w)];
        if (sv != sw)
            return sv > sw;
        const auto dv = square_[static_cast<std::size_t>(v)].size();
        const auto dw = square_[static_cast<std::size_t>(w)].size();
        if (dv != dw)
            return dv > dw;
        return v < w;
    }

    bool feasible(int v, int c)
    {
        for (int u : square_[static_cast<std::size_t>(v)])
            if (colour_[static_cast<std::size_t>(u)] == c)
                return false;
        ++stamp_;
        for (int u : g_.neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu < 0)
                continue;
            if (pair_cnt_[pair_index(c, cu)] > 0)
                return false;
            if (seen_[static_cast<std::size_t>(cu)] == stamp_)
                return false;
            seen_[static_cast<std::size_t>(cu)] = stamp_;
        }
        return true;
    }

    std::size_t pair_index(int a, int b) const
    {
        if (a > b)
            std::swap(a, b);
        return static_cast<std::size_t>(a) * k_ + b;
    }

    void assign(int v, int c)
    {
        colour_[static_cast<std::size_t>(v)] = c;
        if (c == used_)
            ++used_;
        ++class_size_[static_cast<std::size_t>(c)];
        for (int u : g_.neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu >= 0)
                ++pair_cnt_[pair_index(c, cu)];
        }
        for (int u : square_[static_cast<std::size_t>(v)])
            if (colour_[static_cast<std::size_t>(u)] < 0)
                bump_saturation(u, c);
    }

    void unassign(int v, int c)
    {
        colour_[static_cast<std::size_t>(v)] = -1;
        for (int u : g_.neighbours(v)) {
            const int cu = colour_[static_cast<std::size_t>(u)];
            if (cu >= 0)
                --pair_cnt_[pair_index(c, cu)];
        }
        for (int u : square_[static_cast<std::size_t>(v)])
            if (colour_[static_cast<std::size_t>(u)] < 0)
                drop_saturation(u, c);
        if (--class_size_[static_cast<std::size_t>(c)] == 0 && c == used_ - 1)
            --used_;
    }

    void bump_saturation(int u, int c)
    {
        if (++nb_colour_count_[static_cast<std::size_t>(u) * k_ + c] == 1)
            ++saturation_[static_cast<std::size_t>(u)];
    }

    void drop_saturation(int u, int c)
    {
        if (--nb_colour_count_[static_cast<std::size_t>(u) * k_ + c] == 0)
            --saturation_[static_cast<std::size_t>(u)];
    }

    const UndirectedGraph& g_;
    int k_;
    int n_;
    int used_ = 0;
    std::uint64_t& nodes_;
    std::uint64_t max_nodes_;
    std::vector<int> colour_;
    std::vector<int> solution_;
    std::vector<int> class_size_;
    std::vector<int> pair_cnt_;
    std::vector<int> nb_colour_count_;
    std::vector<int> saturation_;
    std::vector<std::vector<int>> square_;
    std::vector<std::uint64_t> seen_;
    std::uint64_t stamp_ = 0;
};

} // namespace detail

inline constexpr int kDefaultHarmoniousLimit = 12;

// every colour pair covers at most one edge, so C(k,2) >= m
inline int harmonious_pair_lower(int m)
{
    int k = 1;
    while (static_cast<long long>(k) * (k - 1) / 2 < m)
        ++k;
    return k;
}

// Exact harmonious chromatic number, for small graphs.
inline SearchResult harmonious_exact(const UndirectedGraph& g, Budget budget = {},
    int limit_n = kDefaultHarmoniousLimit)
{
    if (g.vertex_count() > limit_n)
        throw GraphError("harmonious_exact limited to n <= " + std::to_string(limit_n)
            + ", got n=" + std::to_string(g.vertex_count()));

    const detail::Timer timer;
    SearchResult greedy = harmonious_greedy(g, 0);
    const int lb = std::max(g.max_degree() + 1, harmonious_pair_lower(g.edge_count()));

    SearchResult result;
    result.lower = lb;
    result.upper = greedy.value;
    result.witness = std::move(greedy.witness);
    result.value = greedy.value;

    std::uint64_t nodes = 0;
    bool exhausted = false;
    for (int k = lb; k < result.upper; ++k) {
        detail::HarmoniousDecision search(g, k, nodes, budget.max_nodes);
        Colouring witness;
        const detail::Outcome out = search.run(witness);
        if (out == detail::Outcome::Sat) {
            result.value = k;
            result.upper = k;
            result.witness = std::move(witness);
            break;
        }
        if (out == detail::Outcome::OutOfBudget) {
            exhausted = true;
            break;
        }
        result.lower = k + 1;
    }

    if (!exhausted) {
        result.lower = result.value;
        result.upper = result.value;
    }
    result.stats.nodes = nodes;
    result.stats.completed = !exhausted;
    result.stats.millis = timer.millis();
    return result;
}

} // namespace ochro

#endif // OCHRO_SOLVER_HPP
