#pragma once

#include <optional>

#include "lipmap/graph.hpp"
#include "lipmap/mapping.hpp"

namespace lipmap {

/// Closed form M * (diam(G) + 1).
///
/// For M = 1 this is the largest number of distinct values any 1-Lipschitz
/// mapping takes. For M >= 2 it is only an upper bound: the distance
/// witness below reaches diam + 1 distinct values and span M * diam + 1.
/// Use range_of / span_of on a mapping to see the measured quantities.
inline Value max_range(const Graph& g, Value M)
{
    check_lipschitz_constant(M);
    return M * (diameter(g).value + 1);
}

/// f(v) = M * d(r, v), rooted at the first vertex of the lexicographically
/// smallest diametral pair.
inline FullMapping max_range_witness(const Graph& g, Value M)
{
    check_lipschitz_constant(M);
    auto diam = diameter(g);
    auto dist = bfs_distances(g, diam.u);
    FullMapping f{std::vector<Value>(dist.size()), diam.u};
    for (std::size_t v = 0; v < dist.size(); ++v)
        f.values[v] = M * dist[v];
    return f;
}

struct StrongMaxRange {
    Value value = 0;
    FullMapping witness;
};

/// Strong variant: absent on non-bipartite graphs. On bipartite graphs the
/// distance witness is strong since adjacent vertices sit at consecutive BFS
/// levels.
inline std::optional<StrongMaxRange> max_range_strong(const Graph& g, Value M)
{
    check_lipschitz_constant(M);
    require_connected(g, "max_range_strong");
    if (!bipartition(g))
        return std::nullopt;
    return StrongMaxRange{max_range(g, M), max_range_witness(g, M)};
}

} // namespace lipmap
