#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lipmap/error.hpp"

namespace lipmap {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Distance value used for vertices in a different component.
inline constexpr int kUnreachable = -1;

/// Undirected simple graph on the dense vertex set 0..n-1.
///
/// Neighbor lists are kept strictly increasing, so two graphs with the same
/// edge set compare equal and iterate identically.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(check_order(n)) {}

    Graph(int n, std::span<const Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    /// Inserts {u,v}; rejects self-loops, parallel edges and bad ids.
    void add_edge(Vertex u, Vertex v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++m_;
    }

    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int size() const { return m_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const
    {
        const auto& list = adj_[u];
        return std::binary_search(list.begin(), list.end(), v);
    }

    [[nodiscard]] bool contains(Vertex v) const { return v >= 0 && v < order(); }

    /// Edges as (u,v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static std::size_t check_order(int n)
    {
        if (n < 0)
            throw InputError("negative vertex count");
        return static_cast<std::size_t>(n);
    }

    void check_vertex(Vertex v) const
    {
        if (!contains(v))
            throw InputError("vertex " + std::to_string(v) + " out of range for graph of order "
                             + std::to_string(order()));
    }

    static void insert_sorted(std::vector<Vertex>& list, Vertex v)
    {
        list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    }

    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

namespace graphs {

inline Graph path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

/// K_{1,leaves}; the center is vertex 0.
inline Graph star(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

} // namespace graphs

/// Shortest-path lengths from `source`; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    if (!g.contains(source))
        throw InputError("BFS source " + std::to_string(source) + " out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(dist.size());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n)
        : n_(n), dist_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable)
    {
    }

    [[nodiscard]] int order() const { return n_; }

    [[nodiscard]] int operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
    int& operator()(Vertex u, Vertex v) { return dist_[index(u, v)]; }

    [[nodiscard]] std::span<const int> row(Vertex u) const
    {
        return {dist_.data() + index(u, 0), static_cast<std::size_t>(n_)};
    }

private:
    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<int> dist_;
};

/// One BFS per vertex, O(n*m).
inline DistanceMatrix all_pairs_distances(const Graph& g)
{
    DistanceMatrix d(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        auto row = bfs_distances(g, u);
        for (Vertex v = 0; v < g.order(); ++v)
            d(u, v) = row[v];
    }
    return d;
}

inline bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

inline void require_connected(const Graph& g, const char* what)
{
    if (g.order() == 0)
        throw PreconditionError(std::string(what) + ": empty graph");
    if (!is_connected(g))
        throw PreconditionError(std::string(what) + ": graph is not connected");
}

struct Diameter {
    int value = 0;
    Vertex u = 0; ///< lexicographically smallest pair realizing `value`
    Vertex v = 0;
};

inline Diameter diameter(const DistanceMatrix& d)
{
    Diameter best;
    for (Vertex u = 0; u < d.order(); ++u) {
        for (Vertex v = u + 1; v < d.order(); ++v) {
            if (d(u, v) == kUnreachable)
                throw PreconditionError("diameter: graph is not connected");
            if (d(u, v) > best.value)
                best = {d(u, v), u, v};
        }
    }
    return best;
}

inline Diameter diameter(const Graph& g)
{
    require_connected(g, "diameter");
    Diameter best;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto row = bfs_distances(g, u);
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (row[v] > best.value)
                best = {row[v], u, v};
    }
    return best;
}

struct Bipartition {
    /// Side (0 or 1) of every vertex; absent when an odd cycle exists.
    std::optional<std::vector<int>> sides;
    /// Closed walk v0 v1 ... vk (v0 adjacent to vk) of odd length when
    /// `sides` is absent; empty otherwise.
    std::vector<Vertex> odd_cycle;

    explicit operator bool() const { return sides.has_value(); }
};

/// Two-colors every component by BFS; on the first monochromatic edge the
/// odd cycle through the two BFS branches is returned instead.
inline Bipartition bipartition(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> side(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, 0);

    for (Vertex start = 0; start < g.order(); ++start) {
        if (side[start] != -1)
            continue;
        side[start] = 0;
        std::deque<Vertex> queue{start};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    // Climb both tree paths to their lowest common ancestor.
                    std::vector<Vertex> left{v}, right{w};
                    Vertex a = v, b = w;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        left.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        right.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    Bipartition result;
                    result.odd_cycle.assign(left.rbegin(), left.rend());
                    result.odd_cycle.insert(result.odd_cycle.end(), right.begin(), right.end());
                    return result;
                }
            }
        }
    }
    return {std::move(side), {}};
}

struct CliqueUnionCheck {
    bool value = true;
    /// (center, leaf, leaf) of an induced K_{1,2} when `value` is false.
    std::optional<std::array<Vertex, 3>> cherry;

    explicit operator bool() const { return value; }
};

/// True iff every component is complete, i.e. no induced K_{1,2} exists.
inline CliqueUnionCheck is_clique_union(const Graph& g)
{
    for (Vertex c = 0; c < g.order(); ++c) {
        auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j]))
                    return {false, std::array<Vertex, 3>{c, nb[i], nb[j]}};
    }
    return {};
}

inline bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

} // namespace lipmap
