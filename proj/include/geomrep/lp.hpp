#pragma once

#include "geomrep/linalg.hpp"
#include "geomrep/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geomrep {

enum class Rel { LessEq, Eq };

struct LinConstraint {
    Vec coeffs;
    Rel rel = Rel::LessEq;
    Rat rhs;
};

// Variables are free (unrestricted in sign); strictness never appears here,
// callers encode strict constraints via an explicit slack variable.
struct LinearProgram {
    std::vector<std::string> variables;
    std::vector<LinConstraint> constraints;
    std::optional<Vec> objective;  // maximize, when present
};

enum class LpStatus { Optimal, Feasible, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Vec assignment;  // per variable, for Optimal/Feasible
    Rat value;       // objective value, for Optimal
};

/// Exact two-phase rational simplex with Bland's anti-cycling rule.
/// Returned assignments are re-checked against every constraint before return.
LpResult solve(const LinearProgram& lp);

/// Human-readable dump of the program, for debugging.
std::string lp_to_text(const LinearProgram& lp);

}  // namespace geomrep
