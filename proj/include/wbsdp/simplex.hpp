#pragma once

#include <string>
#include <vector>

#include "wbsdp/rational.hpp"

namespace wbsdp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string lpStatusName(LpStatus s);

// max c.z subject to A z <= b, E z = f, z_i >= 0 for i < numNonneg, the rest
// free. Exact rational two-phase simplex with Bland's anti-cycling rule.
struct SimplexProblem {
    std::size_t numVars = 0;
    std::size_t numNonneg = 0;  // the first numNonneg variables are >= 0
    std::vector<Rat> objective;
    std::vector<std::vector<Rat>> ineqA;
    std::vector<Rat> ineqB;
    std::vector<std::vector<Rat>> eqA;
    std::vector<Rat> eqB;
};

struct SimplexResult {
    LpStatus status = LpStatus::Infeasible;
    Rat optimum;
    std::vector<Rat> solution;
};

SimplexResult solveSimplex(const SimplexProblem& problem, std::size_t scaleBound = 10000);

}  // namespace wbsdp
