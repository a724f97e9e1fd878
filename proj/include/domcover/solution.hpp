#pragma once

#include "domcover/graph.hpp"

#include <string_view>

namespace domcover {

/// Which extreme of the cover number to pursue among minimum dominating sets.
enum class Objective { min, max };

std::string_view to_string(Objective o) noexcept;

/// One minimum dominating set optimised for an objective.
struct Solution {
    Objective objective = Objective::min;
    std::size_t size = 0;
    CoverValue cover = 0;
    VertexSet witness;
};

} // namespace domcover
