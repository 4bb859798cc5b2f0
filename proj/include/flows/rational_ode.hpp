#pragma once

#include <optional>

#include "flows/hermite.hpp"
#include "flows/upoly.hpp"

namespace flows {

// First-order linear equation a f' + b f = c over Q(x), a != 0.
struct RationalODEProblem {
    RF1 a, b, c;
};

struct ODELimits {
    int max_pole_order = 30;
    int max_numerator_degree = 60;
};

struct ODESolveResult {
    // A rational particular solution, when one exists within the universal
    // denominator / degree bounds (which are proven upper bounds, so
    // nullopt means none exists).
    std::optional<RF1> particular;
    // True iff every solution of a f' + b f = 0 is rational, i.e.
    // exp(-int b/a) is rational: zero rational part and integer residues.
    bool homogeneous_rational = false;
};

// Universal-denominator construction: candidate pole orders per squarefree
// factor of `a` from the indicial balance, numerator degree from the balance
// at infinity, then exact linear algebra. Throws undecided_error if a bound
// exceeds the configured limits.
ODESolveResult rational_ode_solve(const RationalODEProblem& p, const ODELimits& lim = {});

} // namespace flows
