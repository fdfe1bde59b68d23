#ifndef OCHRO_COLOURING_HPP
#define OCHRO_COLOURING_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ochro/graph.hpp"

namespace ochro {

struct ColouringError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertex -> colour map with 0-based colours. Solver output is canonical:
// colours 0..k-1 all in use.
struct Colouring {
    std::vector<int> colour;

    Colouring() = default;
    explicit Colouring(std::vector<int> c) : colour(std::move(c)) {}

    int size() const { return static_cast<int>(colour.size()); }
    int operator[](int v) const { return colour[static_cast<std::size_t>(v)]; }

    int colour_count() const
    {
        int k = 0;
        for (int c : colour)
            k = std::max(k, c + 1);
        return k;
    }

    // all colours 0..k-1 used at least once, none negative
    bool is_canonical() const
    {
        const int k = colour_count();
        std::vector<bool> used(static_cast<std::size_t>(k), false);
        for (int c : colour) {
            if (c < 0)
                return false;
            used[static_cast<std::size_t>(c)] = true;
        }
        return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    }
};

namespace detail {

inline void require_covers(const Colouring& c, int n, const char* what)
{
    if (c.size() != n)
        throw ColouringError(std::string(what) + ": colouring covers " + std::to_string(c.size())
            + " vertices, graph has " + std::to_string(n));
    for (int v = 0; v < n; ++v)
        if (c[v] < 0)
            throw ColouringError(std::string(what) + ": vertex " + std::to_string(v) + " uncoloured");
}

} // namespace detail

inline bool is_proper(const UndirectedGraph& g, const Colouring& c)
{
    detail::require_covers(c, g.vertex_count(), "is_proper");
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

// Oriented colouring: proper on the underlying graph, and between any two
// colour classes all arcs point the same way. Equivalently there are no arcs
// v->w and x->y with c(v)=c(y) and c(w)=c(x).
inline bool is_oriented_colouring(const OrientedGraph& d, const Colouring& c)
{
    detail::require_covers(c, d.vertex_count(), "is_oriented_colouring");
    const int k = c.colour_count();
    // direction[a*k+b] = 1 once an arc from class a to class b is seen
    std::vector<signed char> direction(static_cast<std::size_t>(k) * k, 0);
    for (const auto& [u, v] : d.arcs()) {
        const int a = c[u], b = c[v];
        if (a == b)
            return false;
        if (direction[static_cast<std::size_t>(b) * k + a])
            return false;
        direction[static_cast<std::size_t>(a) * k + b] = 1;
    }
    return true;
}

// Harmonious colouring: proper, and no two distinct edges share the same
// unordered colour pair.
inline bool is_harmonious(const UndirectedGraph& g, const Colouring& c)
{
    detail::require_covers(c, g.vertex_count(), "is_harmonious");
    const int k = c.colour_count();
    std::vector<signed char> pair_used(static_cast<std::size_t>(k) * k, 0);
    for (const auto& [u, v] : g.edges()) {
        int a = c[u], b = c[v];
        if (a == b)
            return false;
        if (a > b)
            std::swap(a, b);
        auto& slot = pair_used[static_cast<std::size_t>(a) * k + b];
        if (slot)
            return false;
        slot = 1;
    }
    return true;
}

} // namespace ochro

#endif // OCHRO_COLOURING_HPP
