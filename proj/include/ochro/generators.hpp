#ifndef OCHRO_GENERATORS_HPP
#define OCHRO_GENERATORS_HPP

#include <string>
#include <vector>

#include "ochro/graph.hpp"

namespace ochro {

// Q_d: vertices are the d-bit strings (vertex index = binary encoding),
// adjacent iff they differ in exactly one bit.
inline UndirectedGraph gen_hypercube(int d, int limit_d = kDefaultHypercubeLimit)
{
    if (d < 1 || d > limit_d)
        throw GraphError("hypercube dimension " + std::to_string(d) + " outside 1.." + std::to_string(limit_d));
    const int n = 1 << d;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(d) << (d - 1));
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            const int w = v ^ (1 << b);
            if (v < w)
                edges.emplace_back(v, w);
        }
    return UndirectedGraph::build(n, std::move(edges));
}

enum class GraphKind { Path, Cycle, Complete, Star };

inline UndirectedGraph gen_basic(GraphKind kind, int n)
{
    if (n < 1)
        throw GraphError("need n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    switch (kind) {
    case GraphKind::Path:
        for (int v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        break;
    case GraphKind::Cycle:
        if (n < 3)
            throw GraphError("cycle needs n >= 3, got " + std::to_string(n));
        for (int v = 0; v < n; ++v)
            edges.emplace_back(v, (v + 1) % n);
        break;
    case GraphKind::Complete:
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        break;
    case GraphKind::Star:
        // centre 0, leaves 1..n-1
        for (int v = 1; v < n; ++v)
            edges.emplace_back(0, v);
        break;
    }
    return UndirectedGraph::build(n, std::move(edges));
}

// The orientation of K_{1,1,n} with both apexes dominating/dominated by the
// independent set: apexes a=0, b=1, independents 2..n+1; arcs a->v_i, v_i->b
// and b->a. Has pair-diameter 3 yet admits an oriented colouring with 3
// colours ({a}, {b}, independents).
inline OrientedGraph gen_k11n_oriented(int n)
{
    if (n < 2)
        throw GraphError("independent part needs n >= 2, got " + std::to_string(n));
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(2 * n + 1));
    arcs.emplace_back(1, 0);
    for (int i = 0; i < n; ++i) {
        arcs.emplace_back(0, 2 + i);
        arcs.emplace_back(2 + i, 1);
    }
    return OrientedGraph::build(n + 2, std::move(arcs));
}

} // namespace ochro

#endif // OCHRO_GENERATORS_HPP
