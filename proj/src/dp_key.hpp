#pragma once

#include "domcover/solution.hpp"

#include <cstdint>

namespace domcover::detail {

// (size, cover) pair ordered lexicographically: size ascending first, then
// cover ascending (min objective) or descending (max objective). Because the
// order is compatible with addition, per-child optima sum to a global optimum.
struct Key {
    static constexpr std::int64_t infeasible = std::int64_t{1} << 50;

    std::int64_t size = infeasible;
    std::int64_t cover = 0;

    static constexpr Key none() noexcept { return {}; }
    static constexpr Key zero() noexcept { return {0, 0}; }
    constexpr bool feasible() const noexcept { return size < infeasible; }

    friend constexpr Key operator+(Key a, Key b) noexcept
    {
        if (!a.feasible() || !b.feasible())
            return none();
        return {a.size + b.size, a.cover + b.cover};
    }
    friend constexpr Key operator-(Key a, Key b) noexcept { return {a.size - b.size, a.cover - b.cover}; }
    friend constexpr bool operator==(Key, Key) = default;
};

/// Strictly better under the objective. Infeasible keys are never better.
constexpr bool better(Key a, Key b, Objective o) noexcept
{
    if (!a.feasible())
        return false;
    if (!b.feasible())
        return true;
    if (a.size != b.size)
        return a.size < b.size;
    return o == Objective::min ? a.cover < b.cover : a.cover > b.cover;
}

// Index of the best key; earlier entries win ties.
template <std::size_t N>
constexpr std::size_t best_of(const Key (&keys)[N], Objective o) noexcept
{
    std::size_t pick = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (better(keys[i], keys[pick], o))
            pick = i;
    return pick;
}

} // namespace domcover::detail
