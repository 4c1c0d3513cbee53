#pragma once

#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lipmap/graph.hpp"
#include "lipmap/interval.hpp"
#include "lipmap/lhom.hpp"
#include "lipmap/mapping.hpp"

namespace lipmap {

enum class FailureReason {
    not_reachable,       ///< pair (u, v) with |f(u) - f(v)| > M * d(u, v)
    no_root_candidate,   ///< no vertex can take the value 0
    empty_interval,      ///< admissible interval of vertex u became empty
    prescribed_conflict, ///< prescribed value of u clashes with a side constraint
    not_bipartite,       ///< strong mappings need a bipartite graph
};

struct NotExtendable {
    FailureReason reason = FailureReason::no_root_candidate;
    Vertex u = -1;
    Vertex v = -1;

    friend bool operator==(const NotExtendable&, const NotExtendable&) = default;
};

inline std::string describe(const NotExtendable& failure, Value M)
{
    const auto u = std::to_string(failure.u);
    switch (failure.reason) {
    case FailureReason::not_reachable:
        return "not " + std::to_string(M) + "-reachable: (" + u + "," + std::to_string(failure.v) + ")";
    case FailureReason::no_root_candidate:
        return "no root candidate";
    case FailureReason::empty_interval:
        return "empty interval at vertex " + u;
    case FailureReason::prescribed_conflict:
        return "prescribed value conflict at vertex " + u;
    case FailureReason::not_bipartite:
        return "graph is not bipartite";
    }
    return "unknown";
}

class ExtensionResult {
public:
    ExtensionResult(FullMapping mapping) : outcome_(std::move(mapping)) {}
    ExtensionResult(NotExtendable failure) : outcome_(failure) {}

    [[nodiscard]] bool extended() const { return std::holds_alternative<FullMapping>(outcome_); }
    explicit operator bool() const { return extended(); }

    [[nodiscard]] const FullMapping& mapping() const { return std::get<FullMapping>(outcome_); }
    [[nodiscard]] const NotExtendable& failure() const { return std::get<NotExtendable>(outcome_); }

private:
    std::variant<FullMapping, NotExtendable> outcome_;
};

struct Reachability {
    bool ok = true;
    std::optional<Edge> violation;

    explicit operator bool() const { return ok; }
};

namespace detail {

    inline Value abs_value(Value x) { return x < 0 ? -x : x; }

    inline bool pair_reachable(Value fu, Value fv, int dist, Value M)
    {
        if (dist == kUnreachable)
            throw PreconditionError("prescribed vertices lie in different components");
        return abs_value(fu - fv) <= M * dist;
    }

} // namespace detail

/// Every pair of prescribed vertices satisfies |f(u) - f(v)| <= M * d(u, v).
inline Reachability is_M_reachable(const PartialMapping& f, const DistanceMatrix& d, Value M)
{
    check_lipschitz_constant(M);
    for (auto it = f.begin(); it != f.end(); ++it) {
        if (it->first < 0 || it->first >= d.order())
            throw InputError("vertex " + std::to_string(it->first) + " outside distance matrix");
        for (auto jt = std::next(it); jt != f.end(); ++jt)
            if (!detail::pair_reachable(it->second, jt->second, d(it->first, jt->first), M))
                return {false, Edge{it->first, jt->first}};
    }
    return {};
}

inline bool is_rooted(const PartialMapping& f)
{
    for (const auto& kv : f)
        if (kv.second == 0)
            return true;
    return false;
}

namespace detail {

    /// BFS distance rows of the prescribed vertices, keyed in prescription
    /// order.
    inline std::vector<std::vector<int>> prescribed_rows(const Graph& g, const PartialMapping& f)
    {
        std::vector<std::vector<int>> rows;
        rows.reserve(f.size());
        for (const auto& kv : f)
            rows.push_back(bfs_distances(g, kv.first));
        return rows;
    }

    template <class DistFn>
    std::optional<Edge> first_unreachable_pair(const PartialMapping& f, Value M, DistFn&& dist)
    {
        std::size_t i = 0;
        for (auto it = f.begin(); it != f.end(); ++it, ++i) {
            std::size_t j = i + 1;
            for (auto jt = std::next(it); jt != f.end(); ++jt, ++j)
                if (!pair_reachable(it->second, jt->second, dist(i, jt->first), M))
                    return Edge{it->first, jt->first};
        }
        return std::nullopt;
    }

    /// Root choice shared by the characterization and the general algorithm:
    /// a prescribed zero if one exists, else the smallest unprescribed r for
    /// which f + (r -> 0) stays M-reachable. `dist(i, v)` is the distance
    /// from the i-th prescribed vertex to v.
    template <class DistFn>
    std::variant<Vertex, NotExtendable> choose_root(const Graph& g, const PartialMapping& f, Value M,
                                                    VertexInterval window, DistFn&& dist)
    {
        if (auto bad = first_unreachable_pair(f, M, dist))
            return NotExtendable{FailureReason::not_reachable, bad->first, bad->second};
        for (const auto& [v, value] : f)
            if (value == 0)
                return v;
        if (!window.contains(0))
            return NotExtendable{FailureReason::no_root_candidate};
        for (Vertex r = 0; r < g.order(); ++r) {
            if (f.count(r))
                continue;
            bool ok = true;
            std::size_t i = 0;
            for (auto it = f.begin(); ok && it != f.end(); ++it, ++i)
                ok = pair_reachable(it->second, 0, dist(i, r), M);
            if (ok)
                return r;
        }
        return NotExtendable{FailureReason::no_root_candidate};
    }

    inline void check_extension_input(const Graph& g, const PartialMapping& f, Value M, const char* what)
    {
        check_lipschitz_constant(M);
        check_partial(g, f);
        require_connected(g, what);
    }

} // namespace detail

struct Extendability {
    bool ok = false;
    std::optional<Vertex> root;
    std::optional<NotExtendable> failure;

    explicit operator bool() const { return ok; }
};

/// Decides extendability without constructing the mapping: f is
/// M-reachable and rooted, or f + (r -> 0) is M-reachable for some
/// unprescribed r. Only BFS rows of the prescribed vertices are needed.
inline Extendability is_extendable(const Graph& g, const PartialMapping& f, Value M)
{
    detail::check_extension_input(g, f, M, "is_extendable");
    auto rows = detail::prescribed_rows(g, f);
    auto root = detail::choose_root(g, f, M, VertexInterval{0, 0},
                                    [&](std::size_t i, Vertex v) { return rows[i][static_cast<std::size_t>(v)]; });
    if (auto* r = std::get_if<Vertex>(&root))
        return {true, *r, std::nullopt};
    return {false, std::nullopt, std::get<NotExtendable>(root)};
}

namespace detail {

    /// Greedy construction on a connected graph with all-pairs distances:
    /// root choice, then repeatedly map an unmapped neighbor of the mapped
    /// set to the smallest-magnitude value of
    ///   window  ∩  ⋂_{c mapped} [f(c) - M d(c,a), f(c) + M d(c,a)],
    /// keeping that intersection up to date for every unmapped vertex.
    /// Integer intervals have the Helly property, so pairwise M-reachability
    /// keeps the intersection nonempty at every step.
    inline ExtensionResult extend_with_distances(const Graph& g, const DistanceMatrix& d, const PartialMapping& f,
                                                 Value M, VertexInterval window)
    {
        const int n = g.order();
        for (const auto& [v, value] : f)
            if (!window.contains(value))
                return NotExtendable{FailureReason::prescribed_conflict, v};

        std::vector<Vertex> prescribed;
        for (const auto& kv : f)
            prescribed.push_back(kv.first);
        auto root = choose_root(g, f, M, window, [&](std::size_t i, Vertex v) { return d(prescribed[i], v); });
        if (auto* failure = std::get_if<NotExtendable>(&root))
            return *failure;
        const Vertex r = std::get<Vertex>(root);

        std::vector<Value> value(static_cast<std::size_t>(n), 0);
        std::vector<char> mapped(static_cast<std::size_t>(n), 0);
        std::vector<VertexInterval> admissible(static_cast<std::size_t>(n), window);
        std::vector<Vertex> queue;
        queue.reserve(static_cast<std::size_t>(n));

        auto assign = [&](Vertex a, Value k) {
            value[a] = k;
            mapped[a] = 1;
            auto row = d.row(a);
            for (Vertex w = 0; w < n; ++w)
                if (!mapped[w])
                    admissible[w] = admissible[w].intersect(VertexInterval{k, k}.widen(M * row[w]));
        };

        PartialMapping start = f;
        start.emplace(r, 0);
        for (const auto& [v, k] : start) {
            assign(v, k);
            queue.push_back(v);
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (mapped[w])
                    continue;
                if (admissible[w].is_empty())
                    return NotExtendable{FailureReason::empty_interval, w};
                assign(w, admissible[w].pick());
                queue.push_back(w);
            }
        }
        return FullMapping{std::move(value), r};
    }

} // namespace detail

/// General graphs: O(n*m) for the distances plus O(n^2) for the greedy
/// phase; the unrooted root search adds O(n * |V'|).
inline ExtensionResult extend_general(const Graph& g, const PartialMapping& f, Value M)
{
    detail::check_extension_input(g, f, M, "extend_general");
    auto d = all_pairs_distances(g);
    auto any = VertexInterval{std::numeric_limits<Value>::min() / 4, std::numeric_limits<Value>::max() / 4};
    return detail::extend_with_distances(g, d, f, M, any);
}

/// As extend_general, with every value confined to `window`. Used by the
/// fixed-range search; `d` must be the distance matrix of `g`.
inline ExtensionResult extend_in_window(const Graph& g, const DistanceMatrix& d, const PartialMapping& f, Value M,
                                        VertexInterval window)
{
    return detail::extend_with_distances(g, d, f, M, window);
}

/// Interval propagation on trees.
///
/// Every vertex starts with P(v) = {f(v)} if prescribed, else the clamp box
/// [-B, B] with B = M(n-1) + max|f|, which contains every rooted extension.
/// A DFS from each prescribed vertex narrows neighbors to
/// [lo(v) - M, hi(v) + M] ∩ P(w). Prescribed intervals stay pinned; a clash
/// between prescriptions then surfaces as an empty interval at an
/// unprescribed vertex, or as an adjacent prescribed pair. A root with
/// 0 ∈ P(r) is pinned and propagated, and a BFS from it picks
/// f(child) ∈ [f(parent) - M, f(parent) + M] ∩ P(child).
inline ExtensionResult extend_on_tree(const Graph& g, const PartialMapping& f, Value M)
{
    detail::check_extension_input(g, f, M, "extend_on_tree");
    if (!is_tree(g))
        throw PreconditionError("extend_on_tree: graph is not a tree");
    const int n = g.order();

    for (auto [u, v] : g.edges()) {
        auto fu = f.find(u), fv = f.find(v);
        if (fu != f.end() && fv != f.end() && detail::abs_value(fu->second - fv->second) > M)
            return NotExtendable{FailureReason::not_reachable, u, v};
    }

    Value max_abs = 0;
    for (const auto& kv : f)
        max_abs = std::max(max_abs, detail::abs_value(kv.second));
    const Value clamp = M * (n - 1) + max_abs;

    std::vector<VertexInterval> P(static_cast<std::size_t>(n), VertexInterval{-clamp, clamp});
    std::vector<char> pinned(static_cast<std::size_t>(n), 0);
    for (const auto& [v, value] : f) {
        P[v] = VertexInterval::point(value);
        pinned[v] = 1;
    }

    std::optional<Vertex> first_empty;
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::vector<Vertex> stack;
    auto propagate_from = [&](Vertex start) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, start);
        seen[start] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (P[v].is_empty())
                continue;
            auto reach = P[v].widen(M);
            for (Vertex w : g.neighbors(v)) {
                if (!pinned[w]) {
                    auto narrowed = P[w].intersect(reach);
                    if (narrowed.is_empty() && !P[w].is_empty() && !first_empty)
                        first_empty = w;
                    P[w] = narrowed;
                }
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    };

    for (const auto& kv : f)
        propagate_from(kv.first);
    if (first_empty)
        return NotExtendable{FailureReason::empty_interval, *first_empty};

    std::optional<Vertex> root;
    for (Vertex v = 0; v < n && !root; ++v)
        if (P[v].contains(0))
            root = v;
    if (!root)
        return NotExtendable{FailureReason::no_root_candidate};

    P[*root] = VertexInterval::point(0);
    pinned[*root] = 1;
    propagate_from(*root);
    if (first_empty)
        return NotExtendable{FailureReason::empty_interval, *first_empty};

    std::vector<Value> value(static_cast<std::size_t>(n), 0);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue{*root};
    done[*root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex p = queue[head];
        for (Vertex w : g.neighbors(p)) {
            if (done[w])
                continue;
            auto choice = VertexInterval::point(value[p]).widen(M).intersect(P[w]);
            if (choice.is_empty())
                return NotExtendable{FailureReason::empty_interval, w};
            value[w] = choice.pick();
            done[w] = 1;
            queue.push_back(w);
        }
    }
    return FullMapping{std::move(value), *root};
}

/// Strong extension (every edge changes by exactly M).
///
/// The graph must be bipartite and every prescribed value a multiple of M;
/// after dividing by M the question is a list homomorphism into the path
/// -n..n with |a - b| = 1. Pairs violating |g(u) - g(v)| <= d(u, v) or the
/// parity g(u) - g(v) ≡ d(u, v) (mod 2) are rejected up front; the list
/// homomorphism solver decides the rest.
inline ExtensionResult extend_strong(const Graph& g, const PartialMapping& f, Value M)
{
    detail::check_extension_input(g, f, M, "extend_strong");
    const int n = g.order();
    if (!bipartition(g))
        return NotExtendable{FailureReason::not_bipartite};

    PartialMapping scaled;
    for (const auto& [v, value] : f) {
        if (value % M != 0)
            return NotExtendable{FailureReason::prescribed_conflict, v};
        scaled.emplace(v, value / M);
    }

    auto rows = detail::prescribed_rows(g, scaled);
    std::size_t i = 0;
    for (auto it = scaled.begin(); it != scaled.end(); ++it, ++i) {
        for (auto jt = std::next(it); jt != scaled.end(); ++jt) {
            const int dist = rows[i][static_cast<std::size_t>(jt->first)];
            const Value diff = detail::abs_value(it->second - jt->second);
            if (diff > dist || (diff - dist) % 2 != 0)
                return NotExtendable{FailureReason::not_reachable, it->first, jt->first};
        }
        // |g(v)| <= d(root, v) <= n - 1 in any rooted strong extension.
        if (detail::abs_value(it->second) > n - 1)
            return NotExtendable{FailureReason::no_root_candidate};
    }

    auto solution = lhom::solve(lhom::build_instance(g, scaled, 1, true), true);
    if (!solution)
        return NotExtendable{FailureReason::no_root_candidate};
    FullMapping out = solution->to_full_mapping();
    for (auto& x : out.values)
        x *= M;
    return out;
}

} // namespace lipmap
