#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flows/hermite.hpp"
#include "flows/rational_ode.hpp"
#include "flows/vector_field.hpp"

namespace flows {

// Orbit classification of a vector field. For a finite level N the field
// `orbit_pow` stores W^N (reduced, numerator and denominator leading
// coefficients 1); the orbit function itself is its N-th root.
struct OrbitReport {
    enum class Kind { Level0, FiniteLevel, NotFiniteLevel };
    Kind kind = Kind::Level0;
    int level = 0;                 // N when kind == FiniteLevel
    std::optional<RF> orbit_pow;   // W^N
    std::optional<RF> trace;       // (2r + x r_x - y p_x)/(x r - y p)
    std::optional<RF1> logderiv;   // dehomogenized W_x/W
    std::vector<LogTerm> residues;
    std::string note;

    bool is_level(int n) const { return kind == Kind::FiniteLevel && level == n; }
};

// Solves W r + W_x (y p - x r) = 0 for the 1-homogeneous orbit function by
// exact integration of the dehomogenized log-derivative r/(x r - y p).
// Level N requires a vanishing rational part and rational residues with
// denominator lcm N; irrational/complex residues or a nonzero rational part
// report NotFiniteLevel.
OrbitReport orbit_function(const VectorField& F);

// Trace of the commutation system, a (-1)-homogeneous function.
RF orbit_trace(const VectorField& F);

// True iff every solution of f r(x) + f'(x)(x r(x) - p(x)) = 1 is rational,
// which characterizes level-1 algebraic flows.
bool level1_check(const VectorField& F, const ODELimits& lim = {});

// Partner second component from the orbit function:
//   beta = -r * int y r_x W / r^2 dx,  integration constant 0.
// The integral must close rationally; log terms signal a W inconsistent
// with F.
RF beta_from_W(const VectorField& F, const RF& W);

struct AlphaResult {
    RF alpha;
    Rat c; // proportionality constant in alpha r - beta p = c W (x r - y p)
};

// Completes beta to a commuting partner using the proportionality identity;
// the admissible constant c is pinned by exact linear solving on the
// bracket. Throws when no constant makes the pair commute.
AlphaResult alpha_from_wronskian(const VectorField& F, const RF& W, const RF& beta);

} // namespace flows
