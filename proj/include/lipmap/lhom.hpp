#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lipmap/error.hpp"
#include "lipmap/graph.hpp"
#include "lipmap/interval.hpp"
#include "lipmap/mapping.hpp"

namespace lipmap::lhom {

/// Finite set of integers stored as sorted, disjoint, non-touching closed
/// ranges. A list of the reduction is a single range until propagation
/// under the strong rule splits it.
class IntSet {
public:
    IntSet() = default;
    explicit IntSet(VertexInterval range)
    {
        if (!range.is_empty())
            ranges_.push_back(range);
    }

    static IntSet singleton(Value x) { return IntSet(VertexInterval::point(x)); }

    static IntSet from_values(std::vector<Value> values)
    {
        std::sort(values.begin(), values.end());
        std::vector<VertexInterval> ranges;
        for (Value x : values)
            ranges.push_back(VertexInterval::point(x));
        return IntSet(normalize(std::move(ranges)));
    }

    [[nodiscard]] bool empty() const { return ranges_.empty(); }
    [[nodiscard]] const std::vector<VertexInterval>& ranges() const { return ranges_; }
    [[nodiscard]] bool is_interval() const { return ranges_.size() <= 1; }
    [[nodiscard]] Value min() const { return ranges_.front().lo(); }
    [[nodiscard]] Value max() const { return ranges_.back().hi(); }

    [[nodiscard]] Value count() const
    {
        Value total = 0;
        for (const auto& r : ranges_)
            total += r.hi() - r.lo() + 1;
        return total;
    }

    [[nodiscard]] bool contains(Value x) const
    {
        auto it = std::partition_point(ranges_.begin(), ranges_.end(),
                                       [x](const VertexInterval& r) { return r.hi() < x; });
        return it != ranges_.end() && it->contains(x);
    }

    [[nodiscard]] std::vector<Value> values() const
    {
        std::vector<Value> out;
        for (const auto& r : ranges_)
            for (Value x = r.lo(); x <= r.hi(); ++x)
                out.push_back(x);
        return out;
    }

    /// True iff the set is {min, min+step, ..., max}.
    [[nodiscard]] bool is_progression(Value step) const
    {
        if (empty())
            return true;
        auto vals = values();
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (vals[i] - vals[i - 1] != step)
                return false;
        return true;
    }

    [[nodiscard]] IntSet intersect(const IntSet& other) const
    {
        std::vector<VertexInterval> out;
        auto a = ranges_.begin();
        auto b = other.ranges_.begin();
        while (a != ranges_.end() && b != other.ranges_.end()) {
            auto both = a->intersect(*b);
            if (!both.is_empty())
                out.push_back(both);
            if (a->hi() < b->hi())
                ++a;
            else
                ++b;
        }
        return IntSet(std::move(out));
    }

    /// Values adjacent to some member in the target: within distance M
    /// (loops included), or at distance exactly M when strong. Clipped to
    /// [-bound, bound].
    [[nodiscard]] IntSet neighborhood(Value M, bool strong, Value bound) const
    {
        std::vector<VertexInterval> shifted;
        for (const auto& r : ranges_) {
            if (strong) {
                shifted.emplace_back(r.lo() - M, r.hi() - M);
                shifted.emplace_back(r.lo() + M, r.hi() + M);
            } else {
                shifted.push_back(r.widen(M));
            }
        }
        std::sort(shifted.begin(), shifted.end(),
                  [](const VertexInterval& x, const VertexInterval& y) { return x.lo() < y.lo(); });
        return IntSet(normalize(std::move(shifted))).intersect(IntSet(VertexInterval{-bound, bound}));
    }

    /// Members ordered by |x|, nonnegative first on ties.
    [[nodiscard]] std::vector<Value> values_by_magnitude() const
    {
        auto vals = values();
        std::stable_sort(vals.begin(), vals.end(), [](Value x, Value y) {
            Value ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
            if (ax != ay)
                return ax < ay;
            return x > y;
        });
        return vals;
    }

    friend bool operator==(const IntSet&, const IntSet&) = default;

    /// "lo..hi" for a single range, "{a,b,c}" otherwise.
    [[nodiscard]] std::string to_string() const
    {
        std::ostringstream os;
        if (ranges_.size() == 1) {
            os << ranges_[0].lo() << ".." << ranges_[0].hi();
            return os.str();
        }
        os << '{';
        bool first = true;
        for (Value x : values()) {
            os << (first ? "" : ",") << x;
            first = false;
        }
        os << '}';
        return os.str();
    }

    static IntSet parse(const std::string& text)
    {
        try {
            if (auto dots = text.find(".."); dots != std::string::npos)
                return IntSet(VertexInterval{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))});
            if (text.size() < 2 || text.front() != '{' || text.back() != '}')
                throw InputError("bad list '" + text + "'");
            std::vector<Value> vals;
            std::istringstream is(text.substr(1, text.size() - 2));
            std::string item;
            while (std::getline(is, item, ','))
                vals.push_back(std::stoll(item));
            return from_values(std::move(vals));
        } catch (const std::logic_error&) {
            throw InputError("bad list '" + text + "'");
        }
    }

private:
    explicit IntSet(std::vector<VertexInterval> sorted_disjoint) : ranges_(std::move(sorted_disjoint)) {}

    // Merges overlapping or touching ranges of a list sorted by lo.
    static std::vector<VertexInterval> normalize(std::vector<VertexInterval> sorted)
    {
        std::vector<VertexInterval> out;
        for (const auto& r : sorted) {
            if (r.is_empty())
                continue;
            if (!out.empty() && r.lo() <= out.back().hi() + 1)
                out.back() = {out.back().lo(), std::max(out.back().hi(), r.hi())};
            else
                out.push_back(r);
        }
        return out;
    }

    std::vector<VertexInterval> ranges_;
};

/// List-homomorphism instance into the integers -n..n, with a |a-b| <= M
/// edge rule (loops included) or |a-b| = M (strong, no loops).
struct LHomInstance {
    Graph source;
    Value target_n = 0;
    Value M = 1;
    bool strong = false;
    std::vector<IntSet> lists;
};

/// Prescribed vertices get a singleton list, the rest the whole target.
/// The target bound is n = |V(g)|; prescribed values outside [-n, n] are
/// rejected.
inline LHomInstance build_instance(const Graph& g, const PartialMapping& prescribed, Value M, bool strong)
{
    check_lipschitz_constant(M);
    check_partial(g, prescribed);
    LHomInstance inst{g, g.order(), M, strong, {}};
    inst.lists.assign(static_cast<std::size_t>(g.order()), IntSet(VertexInterval{-inst.target_n, inst.target_n}));
    for (const auto& [v, value] : prescribed) {
        if (value < -inst.target_n || value > inst.target_n)
            throw InputError("prescribed value " + std::to_string(value) + " at vertex " + std::to_string(v)
                             + " outside target [-" + std::to_string(inst.target_n) + ", "
                             + std::to_string(inst.target_n) + "]");
        inst.lists[static_cast<std::size_t>(v)] = IntSet::singleton(value);
    }
    return inst;
}

struct SolveStats {
    long revisions = 0;  ///< domain shrink events during propagation
    long backtracks = 0; ///< value choices that had to be undone
};

/// AC-3: shrink every domain to values with support in each neighbor's
/// domain. Returns false when some domain empties.
inline bool arc_consistency(const LHomInstance& inst, std::vector<IntSet>& domains, SolveStats* stats = nullptr)
{
    const int n = inst.source.order();
    std::vector<Vertex> queue;
    std::vector<char> queued(static_cast<std::size_t>(n), 1);
    for (Vertex v = 0; v < n; ++v)
        queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        queued[v] = 0;
        auto support = domains[v].neighborhood(inst.M, inst.strong, inst.target_n);
        for (Vertex w : inst.source.neighbors(v)) {
            auto narrowed = domains[w].intersect(support);
            if (narrowed == domains[w])
                continue;
            domains[w] = std::move(narrowed);
            if (stats)
                ++stats->revisions;
            if (domains[w].empty())
                return false;
            if (!queued[w]) {
                queued[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return std::none_of(domains.begin(), domains.end(), [](const IntSet& d) { return d.empty(); });
}

struct LHomSolution {
    std::vector<Value> values;
    /// Vertex pinned to 0 when solved with require_zero.
    std::optional<Vertex> root;

    [[nodiscard]] FullMapping to_full_mapping() const { return {values, root.value_or(0)}; }
};

namespace detail {

    inline bool assign_in_order(const LHomInstance& inst, std::vector<IntSet> domains, Vertex next,
                                std::vector<Value>& out, SolveStats* stats)
    {
        const int n = inst.source.order();
        while (next < n && domains[next].count() == 1)
            ++next;
        if (next == n) {
            for (Vertex v = 0; v < n; ++v)
                out[v] = domains[v].min();
            return true;
        }
        for (Value k : domains[next].values_by_magnitude()) {
            auto trial = domains;
            trial[next] = IntSet::singleton(k);
            if (arc_consistency(inst, trial, stats) && assign_in_order(inst, std::move(trial), next + 1, out, stats))
                return true;
            if (stats)
                ++stats->backtracks;
        }
        return false;
    }

} // namespace detail

/// Arc consistency to a fixpoint, then assignment in vertex order taking the
/// smallest-magnitude value and re-propagating. Backtracks if a choice dead
/// ends (counted in `stats`), so the answer is exact.
///
/// With `require_zero`, vertices whose list admits 0 are pinned to 0 in
/// ascending order until one pin leads to a solution; that vertex is the
/// returned root.
inline std::optional<LHomSolution> solve(const LHomInstance& inst, bool require_zero, SolveStats* stats = nullptr)
{
    const int n = inst.source.order();
    if (static_cast<int>(inst.lists.size()) != n)
        throw InputError("instance has " + std::to_string(inst.lists.size()) + " lists for "
                         + std::to_string(n) + " vertices");
    auto domains = inst.lists;
    if (!arc_consistency(inst, domains, stats))
        return std::nullopt;

    std::vector<Value> values(static_cast<std::size_t>(n));
    if (!require_zero) {
        if (!detail::assign_in_order(inst, std::move(domains), 0, values, stats))
            return std::nullopt;
        return LHomSolution{std::move(values), std::nullopt};
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!domains[v].contains(0))
            continue;
        auto pinned = domains;
        pinned[v] = IntSet::singleton(0);
        if (arc_consistency(inst, pinned, stats) && detail::assign_in_order(inst, std::move(pinned), 0, values, stats))
            return LHomSolution{std::move(values), v};
    }
    return std::nullopt;
}

/// Header "n M strong" (strong as 0/1), then one list per source vertex.
inline void write_instance(std::ostream& os, const LHomInstance& inst)
{
    os << inst.target_n << ' ' << inst.M << ' ' << (inst.strong ? 1 : 0) << '\n';
    for (const auto& list : inst.lists)
        os << list.to_string() << '\n';
}

/// Reads the lists back; the source graph is not part of the dump and is
/// taken from the caller.
inline LHomInstance read_instance(std::istream& is, Graph source)
{
    LHomInstance inst;
    int strong = 0;
    if (!(is >> inst.target_n >> inst.M >> strong))
        throw InputError("bad instance header");
    inst.strong = strong != 0;
    inst.source = std::move(source);
    std::string token;
    while (is >> token)
        inst.lists.push_back(IntSet::parse(token));
    if (static_cast<int>(inst.lists.size()) != inst.source.order())
        throw InputError("instance lists do not match source order");
    return inst;
}

} // namespace lipmap::lhom
