#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lipmap/graph.hpp"

namespace lipmap {

using Value = std::int64_t;

/// f' : V' -> Z on a subset of the vertices. Ordered so iteration is
/// deterministic.
using PartialMapping = std::map<Vertex, Value>;

/// Total vertex -> integer map with a designated root.
struct FullMapping {
    std::vector<Value> values;
    Vertex root = 0;

    [[nodiscard]] Value operator[](Vertex v) const { return values[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int order() const { return static_cast<int>(values.size()); }

    friend bool operator==(const FullMapping&, const FullMapping&) = default;
};

struct LipschitzParams {
    Value M = 1;
    bool strong = false;
};

inline void check_lipschitz_constant(Value M)
{
    if (M < 1)
        throw InputError("Lipschitz constant M must be >= 1, got " + std::to_string(M));
}

inline void check_partial(const Graph& g, const PartialMapping& f)
{
    for (const auto& [v, value] : f)
        if (!g.contains(v))
            throw InputError("prescribed vertex " + std::to_string(v) + " out of range for graph of order "
                             + std::to_string(g.order()));
}

/// Does `f` agree with `partial` on every prescribed vertex?
inline bool extends(const FullMapping& f, const PartialMapping& partial)
{
    return std::all_of(partial.begin(), partial.end(), [&](const auto& kv) {
        return kv.first < f.order() && f[kv.first] == kv.second;
    });
}

struct Validity {
    enum class Failure { none, root_not_zero, edge };

    Failure failure = Failure::none;
    std::optional<Edge> edge; ///< first violating edge in edge order

    [[nodiscard]] bool ok() const { return failure == Failure::none; }
    explicit operator bool() const { return ok(); }
};

inline bool edge_ok(Value a, Value b, const LipschitzParams& p)
{
    Value diff = a > b ? a - b : b - a;
    return p.strong ? diff == p.M : diff <= p.M;
}

/// Checks f(root) = 0 and the per-edge constraint (|diff| <= M, or == M when
/// strong). The first failing edge is reported.
inline Validity is_valid(const Graph& g, const FullMapping& f, const LipschitzParams& p)
{
    check_lipschitz_constant(p.M);
    if (f.order() != g.order())
        throw InputError("mapping has " + std::to_string(f.order()) + " values, graph has "
                         + std::to_string(g.order()) + " vertices");
    if (!g.contains(f.root))
        throw InputError("root " + std::to_string(f.root) + " out of range");
    require_connected(g, "is_valid");
    if (f[f.root] != 0)
        return {Validity::Failure::root_not_zero, std::nullopt};
    for (auto [u, v] : g.edges())
        if (!edge_ok(f[u], f[v], p))
            return {Validity::Failure::edge, Edge{u, v}};
    return {};
}

/// Size of the image.
inline int range_of(const FullMapping& f)
{
    std::set<Value> image(f.values.begin(), f.values.end());
    return static_cast<int>(image.size());
}

/// max - min + 1.
inline Value span_of(const FullMapping& f)
{
    if (f.values.empty())
        return 0;
    auto [lo, hi] = std::minmax_element(f.values.begin(), f.values.end());
    return *hi - *lo + 1;
}

/// f(v) = M * (d(root,v) mod 2), which alternates by exactly M along every
/// edge of a bipartite graph. Absent for non-bipartite graphs.
inline std::optional<FullMapping> strong_mapping_witness(const Graph& g, Vertex root, Value M)
{
    check_lipschitz_constant(M);
    require_connected(g, "strong_mapping_witness");
    if (!bipartition(g))
        return std::nullopt;
    auto dist = bfs_distances(g, root);
    FullMapping f{std::vector<Value>(dist.size()), root};
    for (std::size_t v = 0; v < dist.size(); ++v)
        f.values[v] = M * (dist[v] % 2);
    return f;
}

/// 1-Lipschitz with image inside {-1, 0, 1}: 0 is "uncolored", +-1 the two
/// gases, which then never touch.
inline bool is_widom_rowlinson(const Graph& g, const FullMapping& f)
{
    if (!is_valid(g, f, {1, false}))
        return false;
    return std::all_of(f.values.begin(), f.values.end(), [](Value x) { return x >= -1 && x <= 1; });
}

} // namespace lipmap
