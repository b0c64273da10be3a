// Exact two-phase primal simplex with Bland's anti-cycling rule, plus
// feasibility checking and weighted-sum certificate evaluation.
//
// solve_lp        exact optimum; free variables split x = x+ - x- internally
//                 and recombined on report; equalities handled natively by
//                 phase 1. The returned point is a vertex and is re-checked
//                 against every constraint before returning.
// check_feasible  exact evaluation of every constraint and sign restriction
//                 at a point; sign violations report label "sign(name)".
//                 Names in the point that are not declared are ignored.
// weighted_bound  upper bound on a target variable from a convex combination
//                 of <=-constraints. The combined form reads
//                 t_c * target + r(x) <= W; the leftover r is eliminated
//                 exactly against the constraints not involving the target
//                 (an auxiliary LP maximizing -r; by duality this finds a
//                 sign-correct multiplier combination whenever one exists).
//                 Returns nullopt (not a certificate) when t_c <= 0 or the
//                 auxiliary LP has no finite optimum.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "declab/linear_program.hpp"

namespace declab {

LpSolution solve_lp(const LinearProgram& lp);

std::vector<LpViolation> check_feasible(const LinearProgram& lp,
                                        const std::map<std::string, Rat>& point);

std::optional<Rat> weighted_bound(const LinearProgram& lp,
                                  const std::map<std::string, Rat>& weights,
                                  const std::string& target);

}  // namespace declab
