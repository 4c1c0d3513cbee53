#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lipmap/error.hpp"
#include "lipmap/graph.hpp"
#include "lipmap/mapping.hpp"

/// Brute-force ground truth for small graphs. Nothing here relies on the
/// extension or range theory: mappings are enumerated directly and checked
/// edge by edge. The only pruning is |f(v)| <= M * d(root, v), which follows
/// from the edge constraint along a shortest path.
namespace lipmap::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    [[nodiscard]] Rational reduced() const
    {
        auto g = std::gcd(num, den);
        return g == 0 ? *this : Rational{num / g, den / g};
    }
    [[nodiscard]] double to_double() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

namespace detail {

    /// Depth-first over vertices 0..n-1 with candidate values ascending, so
    /// mappings come out in lexicographic order of the value sequence.
    template <class Visit>
    class Enumerator {
    public:
        Enumerator(const Graph& g, Vertex root, LipschitzParams p, const PartialMapping* pins, std::uint64_t budget,
                   Visit& visit)
            : g_(g), p_(p), pins_(pins), budget_(budget), visit_(visit),
              values_(static_cast<std::size_t>(g.order()), 0), root_(root)
        {
            auto dist = bfs_distances(g, root);
            bound_.resize(dist.size());
            for (std::size_t v = 0; v < dist.size(); ++v)
                bound_[v] = p.M * dist[v];
        }

        void run() { descend(0); }
        [[nodiscard]] std::uint64_t emitted() const { return emitted_; }

    private:
        // Returns false once the visitor asks to stop.
        bool descend(Vertex v)
        {
            const int n = g_.order();
            if (v == n) {
                if (++emitted_ > budget_)
                    throw ResourceError("mapping enumeration exceeded budget of " + std::to_string(budget_));
                return visit_(FullMapping{values_, root_});
            }
            Value lo = -bound_[v], hi = bound_[v];
            for (Vertex u : g_.neighbors(v)) {
                if (u >= v)
                    break;
                lo = std::max(lo, values_[u] - p_.M);
                hi = std::min(hi, values_[u] + p_.M);
            }
            if (pins_) {
                if (auto it = pins_->find(v); it != pins_->end()) {
                    lo = std::max(lo, it->second);
                    hi = std::min(hi, it->second);
                }
            }
            for (Value x = lo; x <= hi; ++x) {
                if (p_.strong && !strong_ok(v, x))
                    continue;
                values_[v] = x;
                if (!descend(v + 1))
                    return false;
            }
            return true;
        }

        bool strong_ok(Vertex v, Value x) const
        {
            for (Vertex u : g_.neighbors(v)) {
                if (u >= v)
                    break;
                Value diff = x - values_[u];
                if (diff != p_.M && diff != -p_.M)
                    return false;
            }
            return true;
        }

        const Graph& g_;
        LipschitzParams p_;
        const PartialMapping* pins_;
        std::uint64_t budget_;
        Visit& visit_;
        std::vector<Value> values_;
        std::vector<Value> bound_;
        Vertex root_;
        std::uint64_t emitted_ = 0;
    };

    inline void check_oracle_input(const Graph& g, Vertex root, const LipschitzParams& p)
    {
        check_lipschitz_constant(p.M);
        require_connected(g, "oracle");
        if (!g.contains(root))
            throw InputError("root " + std::to_string(root) + " out of range");
    }

} // namespace detail

/// Calls `visit(const FullMapping&)` for every (strong) M-Lipschitz mapping
/// rooted at `root` that agrees with `pins` (if given), in lexicographic
/// order. `visit` returns false to stop early.
template <class Visit>
void for_each_mapping(const Graph& g, Vertex root, const LipschitzParams& p, Visit&& visit,
                      std::uint64_t budget = kDefaultBudget, const PartialMapping* pins = nullptr)
{
    detail::check_oracle_input(g, root, p);
    if (pins) {
        check_partial(g, *pins);
        if (auto it = pins->find(root); it != pins->end() && it->second != 0)
            return;
    }
    detail::Enumerator<std::remove_reference_t<Visit>> e(g, root, p, pins, budget, visit);
    e.run();
}

inline std::vector<FullMapping> enumerate_mappings(const Graph& g, Vertex root, const LipschitzParams& p,
                                                   std::uint64_t budget = kDefaultBudget)
{
    std::vector<FullMapping> out;
    for_each_mapping(g, root, p, [&](const FullMapping& f) {
        out.push_back(f);
        return true;
    }, budget);
    return out;
}

struct EnumerationStats {
    std::uint64_t count = 0;
    std::uint64_t range_sum = 0;
    int max_range_distinct = 0;
    Value max_span = 0;

    /// Average range with denominator `count` (not reduced).
    [[nodiscard]] Rational avg_range() const { return {range_sum, count}; }
};

inline EnumerationStats stats(const Graph& g, Vertex root, const LipschitzParams& p,
                              std::uint64_t budget = kDefaultBudget)
{
    EnumerationStats s;
    for_each_mapping(g, root, p, [&](const FullMapping& f) {
        const int r = range_of(f);
        ++s.count;
        s.range_sum += static_cast<std::uint64_t>(r);
        s.max_range_distinct = std::max(s.max_range_distinct, r);
        s.max_span = std::max(s.max_span, span_of(f));
        return true;
    }, budget);
    return s;
}

inline std::uint64_t count_mappings(const Graph& g, Vertex root, const LipschitzParams& p,
                                    std::uint64_t budget = kDefaultBudget)
{
    std::uint64_t count = 0;
    for_each_mapping(g, root, p, [&](const FullMapping&) {
        ++count;
        return true;
    }, budget);
    return count;
}

/// Every extension of `prescribed`, over all roots in ascending order. A
/// mapping with several zeros is visited once per zero.
template <class Visit>
void for_each_extension(const Graph& g, const PartialMapping& prescribed, const LipschitzParams& p, Visit&& visit,
                        std::uint64_t budget = kDefaultBudget)
{
    bool go_on = true;
    auto wrapped = [&](const FullMapping& f) { return go_on = visit(f); };
    for (Vertex root = 0; root < g.order() && go_on; ++root)
        for_each_mapping(g, root, p, wrapped, budget, &prescribed);
}

/// First enumerated extension, trying roots in ascending order.
inline std::optional<FullMapping> brute_extendable(const Graph& g, const PartialMapping& prescribed, Value M,
                                                   bool strong, std::uint64_t budget = kDefaultBudget)
{
    std::optional<FullMapping> found;
    for_each_extension(g, prescribed, {M, strong}, [&](const FullMapping& f) {
        found = f;
        return false;
    }, budget);
    return found;
}

/// Distinct-value ranges attained by extensions of `prescribed`.
inline std::set<int> extension_ranges(const Graph& g, const PartialMapping& prescribed, Value M, bool strong,
                                      std::uint64_t budget = kDefaultBudget)
{
    std::set<int> ranges;
    for_each_extension(g, prescribed, {M, strong}, [&](const FullMapping& f) {
        ranges.insert(range_of(f));
        return true;
    }, budget);
    return ranges;
}

/// First enumerated extension whose distinct-value range is exactly `r`.
inline std::optional<FullMapping> extension_with_range(const Graph& g, const PartialMapping& prescribed, Value M,
                                                       bool strong, int r, std::uint64_t budget = kDefaultBudget)
{
    std::optional<FullMapping> found;
    for_each_extension(g, prescribed, {M, strong}, [&](const FullMapping& f) {
        if (range_of(f) != r)
            return true;
        found = f;
        return false;
    }, budget);
    return found;
}

struct MonotonicityCheck {
    bool holds = true;
    std::optional<Edge> counterexample; ///< non-edge whose addition increased the count

    explicit operator bool() const { return holds; }
};

/// For every non-adjacent pair {a, b}: count(G) >= count(G + ab), with both
/// counts taken at the same root.
inline MonotonicityCheck count_monotonicity_check(const Graph& g, Value M, Vertex root = 0,
                                                  std::uint64_t budget = kDefaultBudget)
{
    const LipschitzParams p{M, false};
    const auto base = count_mappings(g, root, p, budget);
    const auto edges = g.edges();
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
            if (g.has_edge(a, b))
                continue;
            Graph plus(g.order(), edges);
            plus.add_edge(a, b);
            if (count_mappings(plus, root, p, budget) > base)
                return {false, Edge{a, b}};
        }
    }
    return {};
}

} // namespace lipmap::oracle
