#pragma once

#include "torickit/numeric.hpp"

#include <optional>
#include <vector>

namespace torickit {

/// Exact linear algebra over the rationals on small dense systems.
namespace linalg {

/// Rank of the span of the given vectors.
std::size_t rank(const std::vector<RatVector> &vectors);
std::size_t rank(const std::vector<IntVector> &vectors);

/// Basis of {x in Q^n : <row, x> = 0 for every row}.
std::vector<RatVector> nullspace(const std::vector<RatVector> &rows, std::size_t n);

/// Some lambda with sum_i lambda_i * generators[i] = target, if one exists.
/// The solution is unique when the generators are linearly independent.
std::optional<RatVector> solve_combination(const std::vector<RatVector> &generators, const RatVector &target);
std::optional<RatVector> solve_combination(const std::vector<IntVector> &generators, const IntVector &target);

/// Decides whether some m satisfies <m, a> = 0 for every a in `zero` and
/// <m, b> > 0 for every b in `positive` (Fourier-Motzkin elimination).
bool strictly_feasible(const std::vector<RatVector> &zero, const std::vector<RatVector> &positive,
                       std::size_t n);

/// True iff v lies in the closed cone generated by `generators`.
bool in_cone(const IntVector &v, const std::vector<IntVector> &generators);

} // namespace linalg
} // namespace torickit
