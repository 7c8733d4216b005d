/*
 * simplex.hpp
 * -----------
 * Exact rational linear-programming feasibility via phase-1 simplex with
 * Bland's rule.  Small dense problems only; this backs the Newton
 * polyhedron membership test where floating point would misclassify
 * points that sit exactly on a facet.
 */
#pragma once

#include <optional>
#include <vector>

#include "idealkit/field.hpp"

namespace idealkit {

// Find x >= 0 with A x = b, or nullopt when the system is infeasible.
// A is row-major, dimensions rows x cols; b has size rows.
std::optional<std::vector<Q>> solve_feasibility(
    const std::vector<std::vector<Q>>& A, const std::vector<Q>& b);

}  // namespace idealkit
