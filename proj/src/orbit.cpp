#include "flows/orbit.hpp"

#include <numeric>

#include "flows/errors.hpp"

namespace flows {

RF orbit_trace(const VectorField& F) {
    RF defect = F.radial_defect();
    if (defect.is_zero()) throw precondition_error("orbit_trace: level-0 field");
    const RF &p = F.p(), &r = F.r();
    RF T = (RF(2) * r + RF::x() * r.derivative(Var::x) - RF::y() * p.derivative(Var::x)) / defect;
    return T;
}

OrbitReport orbit_function(const VectorField& F) {
    OrbitReport rep;
    if (is_level0(F)) {
        rep.kind = OrbitReport::Kind::Level0;
        rep.note = "x r - y p = 0";
        return rep;
    }
    rep.trace = orbit_trace(F);

    // W_x / W = r / (x r - y p), a (-1)-homogeneous function.
    RF logd = F.r() / F.radial_defect();
    RF1 g = logd.dehomogenize(-1);
    rep.logderiv = g;

    IntegralResult I = hermite_logpart(g);
    rep.residues = I.log_terms;
    if (I.algebraic_residues) {
        rep.kind = OrbitReport::Kind::NotFiniteLevel;
        rep.note = "irrational or complex residues in the orbit log-derivative";
        return rep;
    }
    if (!I.rational_part.is_zero()) {
        rep.kind = OrbitReport::Kind::NotFiniteLevel;
        rep.note = "orbit function carries an exponential factor";
        return rep;
    }

    // Level N = lcm of the residue denominators; W^N = prod v^(N c),
    // rehomogenized to degree N (the y-power is the integration constant).
    mpz_class N = 1;
    for (const auto& t : I.log_terms) N = lcm(N, t.coefficient.den());
    if (!N.fits_sint_p())
        throw undecided_error("orbit level exceeds representable range");
    const int level = static_cast<int>(N.get_si());

    RF1 wn(Rat(1));
    for (const auto& t : I.log_terms) {
        Rat e = t.coefficient * Rat(N);
        // e is an integer by construction of N.
        if (!e.num().fits_sint_p())
            throw undecided_error("orbit exponent exceeds representable range");
        wn = wn * RF1(t.argument).pow(e.num().get_si());
    }
    RF W = RF::rehomogenize(wn, level).normalized_leading();

    // Exact check of the orbit equation in N-th power form:
    // N r W^N + (W^N)_x (y p - x r) = 0.
    RF residual = RF(Rat(level)) * F.r() * W - W.derivative(Var::x) * F.radial_defect();
    if (!residual.is_zero())
        throw precondition_error("internal: orbit function fails its defining equation");

    rep.kind = OrbitReport::Kind::FiniteLevel;
    rep.level = level;
    rep.orbit_pow = W;
    return rep;
}

bool level1_check(const VectorField& F, const ODELimits& lim) {
    if (F.radial_defect().is_zero())
        throw precondition_error("level1_check: level-0 field");
    RF1 rho = F.r().dehomogenize(2);
    RF1 pi = F.p().dehomogenize(2);
    RationalODEProblem prob;
    prob.a = RF1::var() * rho - pi;
    prob.b = rho;
    prob.c = RF1(Rat(1));
    if (prob.a.is_zero())
        throw precondition_error("level1_check: level-0 field");
    ODESolveResult r = rational_ode_solve(prob, lim);
    return r.particular.has_value() && r.homogeneous_rational;
}

RF beta_from_W(const VectorField& F, const RF& W) {
    if (F.r().is_zero()) throw precondition_error("beta_from_W: r = 0");
    if (!W.is_homogeneous_of(1))
        throw precondition_error("beta_from_W: orbit function must be 1-homogeneous");
    RF integrand = RF::y() * F.r().derivative(Var::x) * W / (F.r() * F.r());
    if (integrand.is_zero()) return RF();
    RF1 h = integrand.dehomogenize(-1);
    IntegralResult I = hermite_logpart(h);
    if (!I.is_rational())
        throw precondition_error("beta_from_W: integral does not close rationally; "
                                 "W is inconsistent with the field");
    // The integral of a (-1)-homogeneous function in x is 0-homogeneous.
    RF G = RF::rehomogenize(I.rational_part, 0);
    return -F.r() * G;
}

AlphaResult alpha_from_wronskian(const VectorField& F, const RF& W, const RF& beta) {
    if (F.r().is_zero()) throw precondition_error("alpha_from_wronskian: r = 0");
    RF base = beta * F.p() / F.r();
    RF step = W * F.radial_defect() / F.r();

    auto bracket_at = [&](const Rat& c) {
        return lie_bracket(F, VectorField(base + RF(c) * step, beta));
    };
    auto [b0x, b0y] = bracket_at(Rat(0));
    auto [b1x, b1y] = bracket_at(Rat(1));
    RF dx = b1x - b0x, dy = b1y - b0y;

    std::optional<Rat> c;
    if (!dx.is_zero()) {
        RF q = -b0x / dx;
        if (!q.is_constant()) throw precondition_error("alpha_from_wronskian: no admissible constant");
        c = q.num().is_zero() ? Rat(0) : q.num().constant_value() / q.den().constant_value();
    } else if (!dy.is_zero()) {
        RF q = -b0y / dy;
        if (!q.is_constant()) throw precondition_error("alpha_from_wronskian: no admissible constant");
        c = q.num().is_zero() ? Rat(0) : q.num().constant_value() / q.den().constant_value();
    } else {
        // Bracket independent of c: admissible iff already commuting.
        if (!b0x.is_zero() || !b0y.is_zero())
            throw precondition_error("alpha_from_wronskian: no admissible constant");
        c = Rat(0);
    }
    RF alpha = base + RF(*c) * step;
    auto w = commute_check(F, VectorField(alpha, beta));
    if (!w.commutes) throw precondition_error("alpha_from_wronskian: no admissible constant");
    return {alpha, *c};
}

} // namespace flows
