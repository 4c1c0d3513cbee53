#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lipmap/error.hpp"
#include "lipmap/graph.hpp"
#include "lipmap/mapping.hpp"

namespace lipmap::io {

namespace detail {

    inline std::vector<std::string_view> tokens_of(std::string_view line)
    {
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    [[noreturn]] inline void fail(const std::string& name, int line, const std::string& message)
    {
        throw InputError(name + ":" + std::to_string(line) + ": " + message);
    }

    template <class Int>
    Int parse_int(std::string_view token, const std::string& name, int line)
    {
        Int value{};
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            fail(name, line, "expected an integer, got '" + std::string(token) + "'");
        return value;
    }

} // namespace detail

/// Edge list: optional header "p <n> <m>" (or DIMACS "p edge <n> <m>"),
/// then one "u v" (or "e u v") per line with ids from 0. '#' starts a
/// comment. Without a header the order is one more than the largest id.
inline Graph read_edge_list(std::istream& in, const std::string& name)
{
    std::optional<int> declared_n, declared_m;
    std::vector<std::pair<Edge, int>> edges;
    std::string line;
    int lineno = 0;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokens_of(line);
        if (tok.empty())
            continue;
        if (tok[0] == "p") {
            if (declared_n)
                detail::fail(name, lineno, "duplicate header");
            if (!edges.empty())
                detail::fail(name, lineno, "header after edges");
            std::size_t at = tok.size() == 4 ? 2 : 1;
            if (tok.size() != 3 && tok.size() != 4)
                detail::fail(name, lineno, "header must be 'p <n> <m>'");
            declared_n = detail::parse_int<int>(tok[at], name, lineno);
            declared_m = detail::parse_int<int>(tok[at + 1], name, lineno);
            if (*declared_n < 1 || *declared_m < 0)
                detail::fail(name, lineno, "header needs n >= 1 and m >= 0");
            continue;
        }
        if (tok[0] == "e")
            tok.erase(tok.begin());
        if (tok.size() != 2)
            detail::fail(name, lineno, "expected 'u v'");
        Vertex u = detail::parse_int<Vertex>(tok[0], name, lineno);
        Vertex v = detail::parse_int<Vertex>(tok[1], name, lineno);
        if (u < 0 || v < 0)
            detail::fail(name, lineno, "negative vertex id");
        if (declared_n && (u >= *declared_n || v >= *declared_n))
            detail::fail(name, lineno, "vertex id >= n = " + std::to_string(*declared_n));
        if (u == v)
            detail::fail(name, lineno, "self-loop at vertex " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.push_back({{u, v}, lineno});
    }
    const int n = declared_n.value_or(max_id + 1);
    if (n < 1)
        throw InputError(name + ": graph has no vertices");
    if (declared_m && *declared_m != static_cast<int>(edges.size()))
        throw InputError(name + ": header declares " + std::to_string(*declared_m) + " edges, found "
                         + std::to_string(edges.size()));
    Graph g(n);
    for (const auto& [e, at] : edges) {
        if (g.has_edge(e.first, e.second))
            detail::fail(name, at, "duplicate edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
        g.add_edge(e.first, e.second);
    }
    return g;
}

/// "v value" per line; each vertex at most once. With `order`, ids are
/// checked against it.
inline PartialMapping read_mapping(std::istream& in, const std::string& name, std::optional<int> order = std::nullopt)
{
    PartialMapping f;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokens_of(line);
        if (tok.empty())
            continue;
        if (tok.size() != 2)
            detail::fail(name, lineno, "expected 'vertex value'");
        Vertex v = detail::parse_int<Vertex>(tok[0], name, lineno);
        Value x = detail::parse_int<Value>(tok[1], name, lineno);
        if (v < 0 || (order && v >= *order))
            detail::fail(name, lineno, "vertex " + std::to_string(v) + " out of range");
        if (!f.emplace(v, x).second)
            detail::fail(name, lineno, "vertex " + std::to_string(v) + " assigned twice");
    }
    return f;
}

inline void write_mapping(std::ostream& os, const FullMapping& f)
{
    for (Vertex v = 0; v < f.order(); ++v)
        os << v << ' ' << f[v] << '\n';
}

inline void write_edge_list(std::ostream& os, const Graph& g)
{
    os << "p " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
}

} // namespace lipmap::io
