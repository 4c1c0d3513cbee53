#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lipmap/extend.hpp"
#include "lipmap/graph.hpp"
#include "lipmap/mapping.hpp"
#include "lipmap/oracle.hpp"

namespace lipmap {

struct RangeSearchOptions {
    /// For M >= 2 the window search is not known to be complete; graphs up to
    /// this order fall back to exhaustive enumeration.
    int oracle_threshold = 12;
    std::uint64_t oracle_budget = oracle::kDefaultBudget;
};

struct FixedRangeResult {
    enum class Status { found, absent, unknown };

    Status status = Status::absent;
    std::optional<FullMapping> witness;

    [[nodiscard]] bool found() const { return status == Status::found; }
};

namespace detail {

    /// Windows [a, a + width - 1] with a <= 0 <= b, in ascending a. For each,
    /// the window ends are forced by pinning an unprescribed vertex to each end
    /// that no prescribed value already covers. Returns the first extension
    /// accepted by `accept`.
    template <class Accept>
    std::optional<FullMapping> search_windows(const Graph& g, const DistanceMatrix& d, const PartialMapping& f,
                                              Value M, Value width, Accept&& accept)
    {
        std::set<Value> image;
        for (const auto& kv : f)
            image.insert(kv.second);

        for (Value a = -(width - 1); a <= 0; ++a) {
            const Value b = a + width - 1;
            const VertexInterval window{a, b};
            if (!extend_in_window(g, d, f, M, window))
                continue;

            std::vector<std::optional<Vertex>> low_pins{std::nullopt}, high_pins{std::nullopt};
            if (!image.count(a)) {
                low_pins.clear();
                for (Vertex v = 0; v < g.order(); ++v)
                    if (!f.count(v))
                        low_pins.emplace_back(v);
            }
            if (a != b && !image.count(b)) {
                high_pins.clear();
                for (Vertex v = 0; v < g.order(); ++v)
                    if (!f.count(v))
                        high_pins.emplace_back(v);
            }

            for (auto va : low_pins) {
                PartialMapping with_low = f;
                if (va)
                    with_low.emplace(*va, a);
                if (va && !extend_in_window(g, d, with_low, M, window))
                    continue;
                for (auto vb : high_pins) {
                    if (va && vb && *va == *vb)
                        continue;
                    PartialMapping pinned = with_low;
                    if (vb)
                        pinned.emplace(*vb, b);
                    auto result = extend_in_window(g, d, pinned, M, window);
                    if (result && accept(result.mapping()))
                        return result.mapping();
                }
            }
        }
        return std::nullopt;
    }

} // namespace detail

/// Extension of `f` whose image has exactly `r` distinct values.
///
/// For M = 1 the image of a connected graph is a contiguous run of integers,
/// so an extension confined to a width-r window that attains both window
/// ends has range exactly r; the window search is exact. For M >= 2 windows
/// of every width from r up to M(diam+1) are searched and the range checked;
/// when that finds nothing, small graphs are settled by enumeration and
/// larger ones report `unknown`.
inline FixedRangeResult fixed_range_extend(const Graph& g, const PartialMapping& f, Value M, Value r,
                                           const RangeSearchOptions& options = {})
{
    detail::check_extension_input(g, f, M, "fixed_range_extend");
    if (r < 1)
        throw InputError("range must be >= 1");
    const auto d = all_pairs_distances(g);
    const Value diam = diameter(d).value;
    // At most n distinct values, and the image spans at most M * diam + 1.
    if (r > M * (diam + 1) || r > g.order() || r > M * diam + 1)
        return {FixedRangeResult::Status::absent, std::nullopt};

    auto exact = [r](const FullMapping& m) { return range_of(m) == r; };
    if (M == 1) {
        if (auto m = detail::search_windows(g, d, f, M, r, exact))
            return {FixedRangeResult::Status::found, m};
        return {FixedRangeResult::Status::absent, std::nullopt};
    }

    for (Value width = r; width <= M * (diam + 1); ++width)
        if (auto m = detail::search_windows(g, d, f, M, width, exact))
            return {FixedRangeResult::Status::found, m};
    if (g.order() > options.oracle_threshold)
        return {FixedRangeResult::Status::unknown, std::nullopt};
    try {
        if (auto m = oracle::extension_with_range(g, f, M, false, static_cast<int>(r), options.oracle_budget))
            return {FixedRangeResult::Status::found, m};
    } catch (const ResourceError&) {
        return {FixedRangeResult::Status::unknown, std::nullopt};
    }
    return {FixedRangeResult::Status::absent, std::nullopt};
}

struct MaxRangeExtension {
    Value range = 0;
    FullMapping witness;
    /// False when some larger range came back `unknown` (M >= 2 only).
    bool exact = true;
};

enum class MaxRangeSearch { binary, linear };

/// Largest r for which fixed_range_extend succeeds. The extension found by
/// extend_general gives a feasible starting point r0. For M = 1 the feasible
/// ranges form one contiguous block, so binary search over [r0, diam+1] is
/// sound; `linear` scans downward instead and must agree. For M >= 2 the scan
/// is always linear.
inline std::optional<MaxRangeExtension> max_range_extend(const Graph& g, const PartialMapping& f, Value M,
                                                         MaxRangeSearch mode = MaxRangeSearch::binary,
                                                         const RangeSearchOptions& options = {})
{
    auto base = extend_general(g, f, M);
    if (!base)
        return std::nullopt;
    const Value r0 = range_of(base.mapping());
    const Value diam = diameter(g).value;
    const Value top = std::min<Value>({M * (diam + 1), M * diam + 1, g.order()});

    if (M == 1 && mode == MaxRangeSearch::binary) {
        Value lo = r0, hi = top;
        while (lo < hi) {
            Value mid = lo + (hi - lo + 1) / 2;
            if (fixed_range_extend(g, f, M, mid, options).found())
                lo = mid;
            else
                hi = mid - 1;
        }
        auto best = fixed_range_extend(g, f, M, lo, options);
        return MaxRangeExtension{lo, *best.witness, true};
    }

    bool exact = true;
    for (Value r = top; r > r0; --r) {
        auto attempt = fixed_range_extend(g, f, M, r, options);
        if (attempt.found())
            return MaxRangeExtension{r, *attempt.witness, exact};
        if (attempt.status == FixedRangeResult::Status::unknown)
            exact = false;
    }
    auto at_base = fixed_range_extend(g, f, M, r0, options);
    return MaxRangeExtension{r0, at_base.found() ? *at_base.witness : base.mapping(), exact};
}

} // namespace lipmap
