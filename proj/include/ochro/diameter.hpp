#ifndef OCHRO_DIAMETER_HPP
#define OCHRO_DIAMETER_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ochro/graph.hpp"

namespace ochro {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

namespace detail {

template <typename NeighbourFn>
void bfs_from(int n, int source, NeighbourFn&& neighbours, std::vector<int>& dist, std::vector<int>& queue)
{
    dist.assign(static_cast<std::size_t>(n), kUnreachable);
    queue.clear();
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : neighbours(v))
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
}

} // namespace detail

inline std::vector<int> directed_distances_from(const OrientedGraph& d, int source)
{
    std::vector<int> dist, queue;
    detail::bfs_from(d.vertex_count(), source, [&](int v) { return d.out_neighbours(v); }, dist, queue);
    return dist;
}

// Pair-diameter: max over unordered pairs {u,v} of the shorter directed
// distance between them, min(dist(u->v), dist(v->u)). A pair with no directed
// path either way makes it infinite.
struct DiameterReport {
    int value = 0; // kUnreachable encodes infinity
    std::optional<Edge> witness_pair; // a pair attaining the max; absent for n <= 1

    bool is_finite() const { return value != kUnreachable; }
};

inline DiameterReport pair_diameter(const OrientedGraph& d)
{
    const int n = d.vertex_count();
    DiameterReport report;
    if (n <= 1)
        return report;

    // fold min(dist(u->v), dist(v->u)) over one BFS sweep per source
    std::vector<int> best(static_cast<std::size_t>(n) * n, kUnreachable);
    std::vector<int> dist, queue;
    for (int s = 0; s < n; ++s) {
        detail::bfs_from(n, s, [&](int v) { return d.out_neighbours(v); }, dist, queue);
        for (int t = 0; t < n; ++t) {
            const int dv = dist[static_cast<std::size_t>(t)];
            auto& slot_st = best[static_cast<std::size_t>(s) * n + t];
            auto& slot_ts = best[static_cast<std::size_t>(t) * n + s];
            slot_st = std::min(slot_st, dv);
            slot_ts = std::min(slot_ts, dv);
        }
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int pd = best[static_cast<std::size_t>(u) * n + v];
            if (!report.witness_pair || report.value < pd) {
                report.value = pd;
                report.witness_pair = Edge{u, v};
            }
            if (report.value == kUnreachable)
                return report;
        }
    return report;
}

inline bool is_oclique(const OrientedGraph& d)
{
    const DiameterReport r = pair_diameter(d);
    return r.is_finite() && r.value <= 2;
}

inline int undirected_diameter(const UndirectedGraph& g)
{
    const int n = g.vertex_count();
    int diam = 0;
    std::vector<int> dist, queue;
    for (int s = 0; s < n && diam != kUnreachable; ++s) {
        detail::bfs_from(n, s, [&](int v) { return g.neighbours(v); }, dist, queue);
        for (int t = 0; t < n; ++t)
            diam = std::max(diam, dist[static_cast<std::size_t>(t)]);
    }
    return diam;
}

// Degree/diameter sanity check: any undirected graph of diameter <= 2 has
// max degree >= sqrt(n-1). Vacuously true past diameter 2; must never come
// back false, so a false return flags a bug in the graph code.
inline bool moore_check(const UndirectedGraph& g)
{
    const int diam = undirected_diameter(g);
    if (diam == kUnreachable || diam > 2)
        return true;
    const double delta = g.max_degree();
    return delta * delta >= g.vertex_count() - 1;
}

} // namespace ochro

#endif // OCHRO_DIAMETER_HPP
