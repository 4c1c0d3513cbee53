#pragma once

#include <algorithm>
#include <ostream>

#include "lipmap/mapping.hpp"

namespace lipmap {

/// Closed integer interval [lo, hi], or empty. Every empty interval compares
/// equal to every other.
class VertexInterval {
public:
    constexpr VertexInterval() = default; // empty
    constexpr VertexInterval(Value lo, Value hi) : lo_(lo), hi_(hi)
    {
        if (lo_ > hi_)
            *this = VertexInterval{};
    }

    static constexpr VertexInterval point(Value x) { return {x, x}; }
    static constexpr VertexInterval empty() { return {}; }

    [[nodiscard]] constexpr bool is_empty() const { return lo_ > hi_; }
    [[nodiscard]] constexpr Value lo() const { return lo_; }
    [[nodiscard]] constexpr Value hi() const { return hi_; }
    [[nodiscard]] constexpr bool contains(Value x) const { return lo_ <= x && x <= hi_; }

    [[nodiscard]] constexpr VertexInterval intersect(const VertexInterval& other) const
    {
        if (is_empty() || other.is_empty())
            return {};
        return {std::max(lo_, other.lo_), std::min(hi_, other.hi_)};
    }

    /// [lo - by, hi + by]; empty stays empty.
    [[nodiscard]] constexpr VertexInterval widen(Value by) const
    {
        if (is_empty())
            return {};
        return {lo_ - by, hi_ + by};
    }

    /// Element of minimum absolute value, the nonnegative one on ties.
    /// Requires a nonempty interval.
    [[nodiscard]] constexpr Value pick() const
    {
        if (lo_ > 0)
            return lo_;
        if (hi_ < 0)
            return hi_;
        return 0;
    }

    friend constexpr bool operator==(const VertexInterval& a, const VertexInterval& b)
    {
        if (a.is_empty() || b.is_empty())
            return a.is_empty() && b.is_empty();
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    friend std::ostream& operator<<(std::ostream& os, const VertexInterval& i)
    {
        if (i.is_empty())
            return os << "EMPTY";
        return os << '[' << i.lo_ << ',' << i.hi_ << ']';
    }

private:
    Value lo_ = 1;
    Value hi_ = 0;
};

} // namespace lipmap
