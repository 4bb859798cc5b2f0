#pragma once

#include <vector>

#include "flows/upoly.hpp"

namespace flows {

struct LogTerm {
    Rat coefficient;
    Poly1 argument; // monic, squarefree
};

// Integral of a univariate rational function split into a rational part and
// a sum of logarithms. When some residues are irrational or complex the
// rational log terms found are kept and `algebraic_residues` is set; the
// integral then has no elementary form over Q alone.
struct IntegralResult {
    RF1 rational_part;
    std::vector<LogTerm> log_terms;
    bool algebraic_residues = false;

    bool is_rational() const { return log_terms.empty() && !algebraic_residues; }
};

// Hermite reduction (linear variant) followed by the resultant-based
// log-part computation.
IntegralResult hermite_logpart(const RF1& g);

// d/dx of the result, defined when no algebraic marker is present; used to
// verify integrals exactly.
RF1 integral_derivative(const IntegralResult& r);

} // namespace flows
