#pragma once

#include <vector>

#include "homcalc/ints.hpp"

namespace homcalc {

/// Exact feasibility of { lambda >= 0 : A lambda = b } via phase-one
/// simplex with Bland's rule over rationals.
bool rational_system_feasible(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

/// Whether target is a convex combination of the given points
/// (exact rational arithmetic).
bool in_convex_hull(const std::vector<Vec>& points, const Vec& target);

}  // namespace homcalc
