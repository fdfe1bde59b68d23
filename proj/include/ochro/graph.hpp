#ifndef OCHRO_GRAPH_HPP
#define OCHRO_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ochro/rng.hpp"

namespace ochro {

// unordered edge, stored as (min, max); ordered arc, stored as (tail, head)
using Edge = std::pair<int, int>;
using Arc = std::pair<int, int>;

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultOrientationLimit = 24; // refuse 2^m streams past this
inline constexpr int kDefaultHypercubeLimit = 20;

namespace detail {

inline std::string pair_str(int u, int v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// CSR adjacency over 0..n-1, rows sorted ascending
struct Csr {
    std::vector<int> offsets;
    std::vector<int> flat;

    Csr() = default;

    Csr(int n, const std::vector<Arc>& pairs)
    {
        offsets.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [u, v] : pairs)
            ++offsets[static_cast<std::size_t>(u) + 1];
        for (std::size_t i = 1; i < offsets.size(); ++i)
            offsets[i] += offsets[i - 1];
        flat.resize(pairs.size());
        std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
        for (const auto& [u, v] : pairs)
            flat[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
        for (int v = 0; v < n; ++v)
            std::sort(flat.begin() + offsets[v], flat.begin() + offsets[v + 1]);
    }

    std::span<const int> row(int v) const
    {
        return {flat.data() + offsets[static_cast<std::size_t>(v)],
            flat.data() + offsets[static_cast<std::size_t>(v) + 1]};
    }
};

} // namespace detail

// Simple undirected graph on vertices 0..n-1. Immutable once built; the edge
// list is kept in canonical form (each edge as (min,max), sorted
// lexicographically), which also fixes the edge order that orientation
// bitmasks refer to.
class UndirectedGraph {
public:
    static UndirectedGraph build(int n, std::vector<Edge> edges)
    {
        if (n < 1)
            throw GraphError("graph needs at least one vertex, got n=" + std::to_string(n));
        for (auto& [u, v] : edges) {
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge " + detail::pair_str(u, v) + " has endpoint outside 0.." + std::to_string(n - 1));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw GraphError("duplicate edge " + detail::pair_str(dup->first, dup->second));
        return UndirectedGraph(n, std::move(edges));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // canonical edge list; index i here is the meaning of mask bit i
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbours(int v) const { return adj_.row(v); }
    int degree(int v) const { return static_cast<int>(adj_.row(v).size()); }
    int max_degree() const { return max_degree_; }
    double avg_degree() const { return 2.0 * edge_count() / n_; }

    bool adjacent(int u, int v) const
    {
        auto row = adj_.row(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    UndirectedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
    {
        std::vector<Arc> both;
        both.reserve(edges_.size() * 2);
        for (const auto& [u, v] : edges_) {
            both.emplace_back(u, v);
            both.emplace_back(v, u);
        }
        adj_ = detail::Csr(n_, both);
        for (int v = 0; v < n_; ++v)
            max_degree_ = std::max(max_degree_, degree(v));
    }

    int n_;
    std::vector<Edge> edges_;
    detail::Csr adj_;
    int max_degree_ = 0;
};

// Directed graph with no self-loops, no duplicate arcs and no antiparallel
// pair u->v / v->u; arcs kept sorted lexicographically.
class OrientedGraph {
public:
    static OrientedGraph build(int n, std::vector<Arc> arcs)
    {
        if (n < 1)
            throw GraphError("digraph needs at least one vertex, got n=" + std::to_string(n));
        for (const auto& [u, v] : arcs) {
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("arc " + detail::pair_str(u, v) + " has endpoint outside 0.." + std::to_string(n - 1));
        }
        std::sort(arcs.begin(), arcs.end());
        auto dup = std::adjacent_find(arcs.begin(), arcs.end());
        if (dup != arcs.end())
            throw GraphError("duplicate arc " + detail::pair_str(dup->first, dup->second));
        for (const auto& [u, v] : arcs) {
            if (u > v && std::binary_search(arcs.begin(), arcs.end(), Arc{v, u}))
                throw GraphError("antiparallel arcs between " + std::to_string(v) + " and " + std::to_string(u));
        }
        return OrientedGraph(n, std::move(arcs), trusted_tag{});
    }

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const int> out_neighbours(int v) const { return out_.row(v); }
    std::span<const int> in_neighbours(int v) const { return in_.row(v); }
    int out_degree(int v) const { return static_cast<int>(out_.row(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_.row(v).size()); }

    bool has_arc(int u, int v) const
    {
        auto row = out_.row(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b)
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    friend OrientedGraph orient(const UndirectedGraph&, const std::vector<bool>&);
    friend OrientedGraph random_orientation(const UndirectedGraph&, std::uint64_t);

    struct trusted_tag {};

    // arcs must already be sorted, unique, loop- and antiparallel-free
    OrientedGraph(int n, std::vector<Arc> arcs, trusted_tag) : n_(n), arcs_(std::move(arcs))
    {
        out_ = detail::Csr(n_, arcs_);
        std::vector<Arc> rev;
        rev.reserve(arcs_.size());
        for (const auto& [u, v] : arcs_)
            rev.emplace_back(v, u);
        in_ = detail::Csr(n_, rev);
    }

    static OrientedGraph from_orientation(int n, std::vector<Arc> arcs)
    {
        std::sort(arcs.begin(), arcs.end());
        return OrientedGraph(n, std::move(arcs), trusted_tag{});
    }

    int n_;
    std::vector<Arc> arcs_;
    detail::Csr out_;
    detail::Csr in_;
};

inline UndirectedGraph underlying(const OrientedGraph& d)
{
    std::vector<Edge> edges;
    edges.reserve(d.arcs().size());
    for (const auto& [u, v] : d.arcs())
        edges.emplace_back(std::min(u, v), std::max(u, v));
    return UndirectedGraph::build(d.vertex_count(), std::move(edges));
}

// Decode an orientation bitmask over the canonical edge order: bit i clear
// orients edge i from its smaller endpoint to its larger one, bit i set
// reverses it.
inline OrientedGraph orient(const UndirectedGraph& g, const std::vector<bool>& mask)
{
    if (static_cast<int>(mask.size()) != g.edge_count())
        throw GraphError("orientation mask has " + std::to_string(mask.size()) + " bits, graph has m="
            + std::to_string(g.edge_count()));
    std::vector<Arc> arcs;
    arcs.reserve(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const auto& [u, v] = g.edges()[i];
        arcs.emplace_back(mask[i] ? Arc{v, u} : Arc{u, v});
    }
    return OrientedGraph::from_orientation(g.vertex_count(), std::move(arcs));
}

inline std::vector<bool> mask_from_integer(std::uint64_t bits, int m)
{
    std::vector<bool> mask(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        mask[static_cast<std::size_t>(i)] = (bits >> i) & 1ULL;
    return mask;
}

// Visit all 2^m orientations in increasing mask order; fn(mask, digraph).
// A callback returning bool may stop the stream early by returning false.
// Refuses graphs past limit_m edges rather than silently looping for days.
template <typename F>
void for_each_orientation(const UndirectedGraph& g, F&& fn, int limit_m = kDefaultOrientationLimit)
{
    const int m = g.edge_count();
    if (m > limit_m)
        throw GraphError("refusing to enumerate 2^" + std::to_string(m) + " orientations (limit m="
            + std::to_string(limit_m) + ")");
    const std::uint64_t total = 1ULL << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if constexpr (std::is_same_v<std::invoke_result_t<F&, std::uint64_t, const OrientedGraph&>, bool>) {
            if (!fn(mask, orient(g, mask_from_integer(mask, m))))
                return;
        } else {
            fn(mask, orient(g, mask_from_integer(mask, m)));
        }
    }
}

inline std::uint64_t orientation_count(const UndirectedGraph& g) { return 1ULL << g.edge_count(); }

// One SplitMix64 draw per edge, in canonical edge order; bit = low bit of the
// draw, with the same decode convention as orient().
inline OrientedGraph random_orientation(const UndirectedGraph& g, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        arcs.emplace_back(rng.next_bit() ? Arc{v, u} : Arc{u, v});
    return OrientedGraph::from_orientation(g.vertex_count(), std::move(arcs));
}

inline std::vector<bool> orientation_mask_of(const UndirectedGraph& g, const OrientedGraph& d)
{
    if (d.vertex_count() != g.vertex_count() || d.arc_count() != g.edge_count())
        throw GraphError("digraph is not an orientation of this graph");
    std::vector<bool> mask(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& [u, v] = g.edges()[i];
        if (d.has_arc(u, v))
            mask[i] = false;
        else if (d.has_arc(v, u))
            mask[i] = true;
        else
            throw GraphError("digraph is not an orientation of this graph: edge "
                + detail::pair_str(u, v) + " missing");
    }
    return mask;
}

} // namespace ochro

#endif // OCHRO_GRAPH_HPP
