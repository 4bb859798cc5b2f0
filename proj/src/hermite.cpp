#include "flows/hermite.hpp"

#include "flows/errors.hpp"

namespace flows {

namespace {

struct XGcd {
    Poly1 g, s, t; // s*a + t*b = g, g monic
};

XGcd xgcd(const Poly1& a, const Poly1& b) {
    Poly1 r0 = a, r1 = b;
    Poly1 s0(Rat(1)), s1, t0, t1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = Poly1::divrem(r0, r1);
        Poly1 s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat u = r0.lc().inverse();
    return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
}

// Solve B*a + C*b = c with deg B < deg b; requires gcd(a, b) = 1.
std::pair<Poly1, Poly1> diophantine(const Poly1& a, const Poly1& b, const Poly1& c) {
    XGcd e = xgcd(a, b);
    if (e.g.degree() != 0)
        throw precondition_error("internal: diophantine solve with non-coprime moduli");
    Poly1 B = Poly1::divrem(e.s * c, b).second;
    Poly1 C = Poly1::exact_div(c - B * a, b);
    return {B, C};
}

} // namespace

IntegralResult hermite_logpart(const RF1& g) {
    IntegralResult out;
    if (g.is_zero()) return out;

    // Polynomial part integrates termwise.
    auto [poly_part, rem] = Poly1::divrem(g.num(), g.den());
    out.rational_part = RF1(poly_part.antiderivative());

    Poly1 A = rem;
    Poly1 D = g.den(); // monic by RF1 canonical form
    if (A.is_zero()) return out;

    // Hermite reduction: peel multiple poles until the denominator is
    // squarefree.
    RF1 reduced;
    Poly1 Dm = Poly1::gcd(D, D.derivative());
    Poly1 Ds = Poly1::exact_div(D, Dm);
    while (Dm.degree() > 0) {
        Poly1 Dm2 = Poly1::gcd(Dm, Dm.derivative());
        Poly1 Dms = Poly1::exact_div(Dm, Dm2);
        Poly1 a = -Poly1::exact_div(Ds * Dm.derivative(), Dm);
        auto [B, C] = diophantine(a, Dms, A);
        A = C - Poly1::exact_div(B.derivative() * Ds, Dms);
        reduced += RF1(B, Dm);
        Dm = Dm2;
    }
    out.rational_part += reduced;
    if (A.is_zero()) return out;

    // Log part via the resultant in an auxiliary variable t (embedded as y):
    // residues are the roots of res_x(A - t D', D).
    RF1 h(A, Ds);
    A = h.num();
    Poly1 Dsf = h.den();
    Poly la = A.lift(Var::x) - Poly::var(Var::y) * Dsf.derivative().lift(Var::x);
    Poly res = Poly::resultant(la, Dsf.lift(Var::x), Var::x);
    if (res.is_zero())
        throw precondition_error("internal: vanishing log-part resultant");
    Poly1 rt = Poly1::from_poly(res, Var::y);

    int accounted = 0;
    for (const auto& [c, mult] : rational_roots(rt)) {
        (void)mult;
        if (c.is_zero()) continue;
        Poly1 v = Poly1::gcd(A - Dsf.derivative().scaled(c), Dsf);
        if (v.degree() == 0) continue;
        out.log_terms.push_back({c, v});
        accounted += v.degree();
    }
    out.algebraic_residues = accounted != Dsf.degree();
    return out;
}

RF1 integral_derivative(const IntegralResult& r) {
    if (r.algebraic_residues)
        throw precondition_error("integral with algebraic residues has no rational derivative form");
    RF1 d = r.rational_part.derivative();
    for (const auto& t : r.log_terms)
        d += RF1(t.argument.derivative().scaled(t.coefficient), t.argument);
    return d;
}

} // namespace flows
