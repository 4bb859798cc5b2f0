#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "flows/rational.hpp"

namespace flows {

enum class Var { x, y };

struct Mono {
    int dx = 0;
    int dy = 0;
    int deg() const { return dx + dy; }
    friend bool operator==(const Mono& a, const Mono& b) {
        return a.dx == b.dx && a.dy == b.dy;
    }
};

// Graded-lexicographic term order with x before y; the map comparator is
// inverted so iteration starts at the leading term.
struct MonoBefore {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() > b.deg();
        return a.dx > b.dx;
    }
};

// Sparse bivariate polynomial over Q. No zero coefficients are stored.
class Poly {
public:
    using TermMap = std::map<Mono, Rat, MonoBefore>;

    Poly() = default;
    Poly(const Rat& c) { add_term(Mono{0, 0}, c); }
    Poly(long c) : Poly(Rat(c)) {}
    static Poly var(Var v) { return monomial(Rat(1), v == Var::x ? 1 : 0, v == Var::x ? 0 : 1); }
    static Poly monomial(const Rat& c, int dx, int dy);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0}); }
    Rat constant_value() const; // requires is_constant
    bool only_var(Var v) const; // true also for constants

    int total_degree() const { return t_.empty() ? -1 : t_.begin()->first.deg(); }
    int valuation() const;      // min total degree; -1 for zero
    int degree(Var v) const;    // -1 for zero

    const TermMap& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }
    Mono leading_mono() const;  // requires nonzero
    Rat leading_coeff() const;  // requires nonzero
    Rat coeff(int dx, int dy) const;

    std::optional<int> homogeneous_degree() const;
    Poly homogeneous_component(int d) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rat& c) const;
    Poly pow(unsigned e) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(Var v) const;
    Rat eval(const Rat& x, const Rat& y) const;
    std::complex<double> eval(const std::complex<double>& x,
                              const std::complex<double>& y) const;
    Poly swap_vars() const;

    // Exact quotient when b divides a, nullopt otherwise.
    static std::optional<Poly> try_divide(const Poly& a, const Poly& b);
    // Monic (leading coefficient 1 under the term order) gcd; gcd(0,0)=0.
    static Poly gcd(const Poly& a, const Poly& b);
    // Resultant with respect to `eliminate`; result involves only the other variable.
    static Poly resultant(const Poly& a, const Poly& b, Var eliminate);

    // Coefficients with respect to `main`; values involve only the other variable.
    std::map<int, Poly> collect(Var main) const;
    static Poly from_collect(const std::map<int, Poly>& c, Var main);

private:
    TermMap t_;
    void add_term(const Mono& m, const Rat& c);
    friend class PolyOps;
};

} // namespace flows
