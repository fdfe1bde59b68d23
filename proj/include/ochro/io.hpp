#ifndef OCHRO_IO_HPP
#define OCHRO_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ochro/colouring.hpp"
#include "ochro/graph.hpp"

namespace ochro {

// DIMACS-like formats, 1-based on disk, 0-based in memory:
//   undirected:  p edge <n> <m>     then m lines  e <u> <v>
//   oriented:    p oriented <n> <m> then m lines  a <u> <v>   (arc u->v)
// 'c' lines are comments. Serialization is canonical (edges/arcs sorted), so
// parse(serialize(g)) == g byte for byte.

struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_)
    {
    }
};

namespace detail {

struct ParsedHeader {
    std::string format;
    int n = 0;
    long long m = 0;
    int header_line = 0;
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // next non-blank, non-comment line; false at end of input
    bool next(std::string& out)
    {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            const auto first = raw.find_first_not_of(" \t");
            if (first == std::string::npos || raw[first] == 'c')
                continue;
            out = raw;
            return true;
        }
        return false;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

inline ParsedHeader read_header(LineReader& reader)
{
    std::string line;
    if (!reader.next(line))
        throw ParseError(reader.line(), "missing problem line 'p edge|oriented <n> <m>'");
    std::istringstream fields(line);
    std::string tag;
    ParsedHeader header;
    if (!(fields >> tag >> header.format >> header.n >> header.m) || tag != "p")
        throw ParseError(reader.line(), "malformed problem line: '" + line + "'");
    header.header_line = reader.line();
    return header;
}

template <typename Pair>
std::vector<Pair> read_pairs(LineReader& reader, const ParsedHeader& header, char expected_tag)
{
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(header.m));
    std::string line;
    while (reader.next(line)) {
        std::istringstream fields(line);
        char tag = 0;
        int u = 0, v = 0;
        if (!(fields >> tag >> u >> v) || tag != expected_tag)
            throw ParseError(reader.line(), "expected '" + std::string(1, expected_tag)
                + " <u> <v>', got '" + line + "'");
        if (u < 1 || v < 1 || u > header.n || v > header.n)
            throw ParseError(reader.line(), "vertex outside 1.." + std::to_string(header.n)
                + " in '" + line + "'");
        pairs.emplace_back(u - 1, v - 1);
    }
    if (static_cast<long long>(pairs.size()) != header.m)
        throw ParseError(reader.line(), "header promised " + std::to_string(header.m)
            + " lines, found " + std::to_string(pairs.size()));
    return pairs;
}

} // namespace detail

inline UndirectedGraph parse_undirected(std::istream& in)
{
    detail::LineReader reader(in);
    const auto header = detail::read_header(reader);
    if (header.format != "edge")
        throw ParseError(header.header_line, "expected format 'edge', got '" + header.format + "'");
    auto edges = detail::read_pairs<Edge>(reader, header, 'e');
    try {
        return UndirectedGraph::build(header.n, std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(header.header_line, e.what());
    }
}

inline OrientedGraph parse_oriented(std::istream& in)
{
    detail::LineReader reader(in);
    const auto header = detail::read_header(reader);
    if (header.format != "oriented")
        throw ParseError(header.header_line, "expected format 'oriented', got '" + header.format + "'");
    auto arcs = detail::read_pairs<Arc>(reader, header, 'a');
    try {
        return OrientedGraph::build(header.n, std::move(arcs));
    } catch (const GraphError& e) {
        throw ParseError(header.header_line, e.what());
    }
}

using AnyGraph = std::variant<UndirectedGraph, OrientedGraph>;

inline AnyGraph parse_graph_auto(std::istream& in)
{
    detail::LineReader reader(in);
    const auto header = detail::read_header(reader);
    if (header.format == "edge") {
        auto edges = detail::read_pairs<Edge>(reader, header, 'e');
        try {
            return UndirectedGraph::build(header.n, std::move(edges));
        } catch (const GraphError& e) {
            throw ParseError(header.header_line, e.what());
        }
    }
    if (header.format == "oriented") {
        auto arcs = detail::read_pairs<Arc>(reader, header, 'a');
        try {
            return OrientedGraph::build(header.n, std::move(arcs));
        } catch (const GraphError& e) {
            throw ParseError(header.header_line, e.what());
        }
    }
    throw ParseError(header.header_line, "unknown format '" + header.format + "'");
}

inline std::string serialize(const UndirectedGraph& g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

inline std::string serialize(const OrientedGraph& d)
{
    std::ostringstream out;
    out << "p oriented " << d.vertex_count() << " " << d.arc_count() << "\n";
    for (const auto& [u, v] : d.arcs())
        out << "a " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

// witness format: 's chi <k>' then one 'v <vertex> <colour>' line per vertex
// (vertex 1-based, colour 0-based)
inline std::string serialize_witness(const Colouring& c)
{
    std::ostringstream out;
    out << "s chi " << c.colour_count() << "\n";
    for (int v = 0; v < c.size(); ++v)
        out << "v " << v + 1 << " " << c[v] << "\n";
    return out.str();
}

inline Colouring parse_witness(std::istream& in)
{
    detail::LineReader reader(in);
    std::string line;
    if (!reader.next(line))
        throw ParseError(reader.line(), "missing witness header 's chi <k>'");
    std::istringstream header(line);
    std::string tag, kind;
    int k = 0;
    if (!(header >> tag >> kind >> k) || tag != "s" || kind != "chi")
        throw ParseError(reader.line(), "malformed witness header: '" + line + "'");
    std::vector<std::pair<int, int>> entries;
    while (reader.next(line)) {
        std::istringstream fields(line);
        char vtag = 0;
        int v = 0, c = 0;
        if (!(fields >> vtag >> v >> c) || vtag != 'v' || v < 1 || c < 0)
            throw ParseError(reader.line(), "expected 'v <vertex> <colour>', got '" + line + "'");
        entries.emplace_back(v - 1, c);
    }
    std::vector<int> colour(entries.size(), -1);
    for (const auto& [v, c] : entries) {
        if (v >= static_cast<int>(colour.size()) || colour[static_cast<std::size_t>(v)] != -1)
            throw ParseError(reader.line(), "vertex " + std::to_string(v + 1) + " out of range or repeated");
        colour[static_cast<std::size_t>(v)] = c;
    }
    return Colouring(std::move(colour));
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << contents;
}

} // namespace ochro

#endif // OCHRO_IO_HPP
