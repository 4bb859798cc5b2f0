#include "flows/rational_ode.hpp"

#include <algorithm>

#include "flows/errors.hpp"
#include "flows/linalg.hpp"

namespace flows {

namespace {

bool homogeneous_solutions_rational(const RF1& a, const RF1& b) {
    if (b.is_zero()) return true; // f' = 0
    IntegralResult I = hermite_logpart(-b / a);
    if (I.algebraic_residues || !I.rational_part.is_zero()) return false;
    for (const auto& t : I.log_terms)
        if (!t.coefficient.is_integer()) return false;
    return true;
}

// Largest positive integer root of `p`, or 0.
int max_positive_integer_root(const Poly1& p) {
    int best = 0;
    for (const auto& [root, mult] : rational_roots(p)) {
        (void)mult;
        if (root.is_integer() && root.sign() > 0) {
            mpz_class n = root.num();
            if (n.fits_sint_p()) best = std::max(best, static_cast<int>(n.get_si()));
        }
    }
    return best;
}

} // namespace

ODESolveResult rational_ode_solve(const RationalODEProblem& prob, const ODELimits& lim) {
    if (prob.a.is_zero())
        throw precondition_error("rational_ode_solve: leading coefficient a is zero");

    ODESolveResult out;
    out.homogeneous_rational = homogeneous_solutions_rational(prob.a, prob.b);

    // Clear to polynomial coefficients P f' + Q f = R.
    Poly1 L = Poly1::lcm(Poly1::lcm(prob.a.den(), prob.b.den()), prob.c.den());
    Poly1 P = prob.a.num() * Poly1::exact_div(L, prob.a.den());
    Poly1 Q = prob.b.num() * Poly1::exact_div(L, prob.b.den());
    Poly1 R = prob.c.num() * Poly1::exact_div(L, prob.c.den());
    Poly1 g = Poly1::gcd(Poly1::gcd(P, Q), R);
    if (g.degree() > 0) {
        P = Poly1::exact_div(P, g);
        Q = Poly1::exact_div(Q, g);
        R = Poly1::exact_div(R, g);
    }

    if (R.is_zero()) {
        out.particular = RF1();
        return out;
    }

    // Universal denominator: at a root of P with multiplicity k, a rational
    // solution can have pole order at most k-1, except at roots where Q
    // vanishes to order exactly k-1; there the indicial equation
    // m S'(x) T(x) = U(x), T = P/S^k, U = Q/S^(k-1), can admit a larger
    // positive integer m. The gcd chain below strips Q by one vanishing
    // order per step so the U-value at the surviving roots stays polynomial
    // (corr collects the dropped cofactors).
    Poly1 M(Rat(1));
    for (const auto& f : squarefree_factor(P).factors) {
        const Poly1& S = f.factor;
        if (S.degree() == 0) continue;
        const int k = f.multiplicity;
        int bound = k - 1;
        Poly1 T = Poly1::exact_div(P.monic(), S.pow(static_cast<unsigned>(k)));
        Poly1 Sw = S, Qw = Q.scaled(P.lc().inverse()), corr(Rat(1));
        for (int i = 1; i < k && Sw.degree() > 0; ++i) {
            Poly1 g = Poly1::gcd(Sw, Qw);
            corr = corr * Poly1::exact_div(S, g);
            if (g.degree() == 0) {
                Sw = g;
                break;
            }
            Qw = Poly1::exact_div(Qw, g);
            Sw = g;
        }
        if (Sw.degree() > 0) {
            // I(t) = res_x(Sw, Qw - t S' T corr), t embedded as y.
            Poly ind = Qw.lift(Var::x) -
                       Poly::var(Var::y) * (S.derivative() * T * corr).lift(Var::x);
            Poly res = Poly::resultant(Sw.lift(Var::x), ind, Var::x);
            if (!res.is_zero() && !res.is_constant())
                bound = std::max(bound, max_positive_integer_root(Poly1::from_poly(res, Var::y)));
        }
        if (bound > lim.max_pole_order)
            throw undecided_error("universal denominator pole order exceeds the configured cap");
        if (bound > 0) M = M * S.pow(static_cast<unsigned>(bound));
    }

    // Numerator degree from the balance at infinity; every case's bound is
    // listed, the maximum is a safe upper bound.
    const int dp = P.degree(), dm = M.degree(), dr = R.degree();
    std::vector<int> cand{dm, dr + dm - dp + 1};
    if (!Q.is_zero()) {
        const int dq = Q.degree();
        cand.push_back(dr + dm - dq);
        if (dq == dp - 1) {
            Rat ratio = Q.lc() / P.lc();
            if (ratio.is_integer()) {
                mpz_class n = mpz_class(dm) - ratio.num();
                if (n.fits_sint_p()) cand.push_back(static_cast<int>(n.get_si()));
            }
        }
    }
    int n = *std::max_element(cand.begin(), cand.end());
    if (n > lim.max_numerator_degree)
        throw undecided_error("numerator degree bound exceeds the configured cap");
    if (n < 0) return out; // only f = 0 could solve, and R != 0

    // P (N' M - N M') + Q N M = R M^2, linear in the coefficients of N.
    const Poly1 M2 = M * M, Md = M.derivative();
    const Poly1 rhs_poly = R * M2;
    const int max_deg = std::max({P.degree() + n - 1 + dm, Q.degree() + n + dm,
                                  rhs_poly.degree()});
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(max_deg) + 1,
                                       std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(0)));
    std::vector<Rat> rhs(static_cast<std::size_t>(max_deg) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        std::vector<Rat> mono(static_cast<std::size_t>(i) + 1, Rat(0));
        mono.back() = Rat(1);
        Poly1 xi(mono);
        Poly1 contrib = P * (xi.derivative() * M - xi * Md) + Q * xi * M;
        for (int d = 0; d <= contrib.degree(); ++d)
            rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = contrib.coeff(d);
    }
    for (int d = 0; d <= rhs_poly.degree(); ++d)
        rhs[static_cast<std::size_t>(d)] = rhs_poly.coeff(d);

    auto sol = solve_linear(rows, rhs);
    if (!sol) return out;
    Poly1 N(std::vector<Rat>(sol->begin(), sol->end()));
    RF1 f(N, M);
    // Exact verification of the candidate.
    if (prob.a * f.derivative() + prob.b * f - prob.c != RF1())
        throw precondition_error("internal: ODE particular solution failed verification");
    out.particular = f;
    return out;
}

} // namespace flows
