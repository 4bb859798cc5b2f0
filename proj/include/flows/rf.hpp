#pragma once

#include <complex>
#include <optional>

#include "flows/poly.hpp"
#include "flows/upoly.hpp"

namespace flows {

// Reduced bivariate rational function. Canonical form: gcd(num, den) = 1 and
// the denominator's leading coefficient under graded-lex is 1, so equality is
// representation equality. The homogeneity degree is recomputed on every
// construction, never trusted from callers.
class RF {
public:
    RF() : num_(), den_(Rat(1)) {}
    RF(const Rat& c) : num_(c), den_(Rat(1)) { set_homog(); }
    RF(long c) : RF(Rat(c)) {}
    RF(Poly p) : num_(std::move(p)), den_(Rat(1)) { set_homog(); }
    RF(const Poly& n, const Poly& d);
    static RF var(Var v) { return RF(Poly::var(v)); }
    static RF x() { return var(Var::x); }
    static RF y() { return var(Var::y); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    // Degree d with f(xz, yz) = z^d f(x, y); nullopt when not homogeneous.
    // The zero function is homogeneous of every degree and reports nullopt
    // here; use is_homogeneous_of for membership tests.
    std::optional<int> homogeneous_degree() const {
        return is_zero() ? std::nullopt : homog_;
    }
    bool is_homogeneous_of(int d) const { return is_zero() || homog_ == d; }

    RF operator-() const;
    friend RF operator+(const RF& a, const RF& b);
    friend RF operator-(const RF& a, const RF& b);
    friend RF operator*(const RF& a, const RF& b);
    friend RF operator/(const RF& a, const RF& b);
    RF& operator+=(const RF& o) { *this = *this + o; return *this; }
    RF& operator-=(const RF& o) { *this = *this - o; return *this; }
    RF& operator*=(const RF& o) { *this = *this * o; return *this; }
    RF& operator/=(const RF& o) { *this = *this / o; return *this; }
    friend bool operator==(const RF& a, const RF& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RF& a, const RF& b) { return !(a == b); }

    RF pow(long e) const;
    RF derivative(Var v) const;
    RF substitute(const RF& sx, const RF& sy) const;
    RF swap_vars() const;

    std::optional<Rat> eval(const Rat& x, const Rat& y) const; // nullopt on a pole
    std::complex<double> eval(const std::complex<double>& x,
                              const std::complex<double>& y) const;

    // f(x, 1) for an input homogeneous of degree d.
    RF1 dehomogenize(int d) const;
    // y^d * g(x/y), reduced.
    static RF rehomogenize(const RF1& g, int d);

    // Scale so the numerator's leading coefficient is 1 (orbit-function
    // normalization); denominator stays monic.
    RF normalized_leading() const;

    std::optional<int> numerator_homogeneous_degree() const {
        return num_.homogeneous_degree();
    }

private:
    Poly num_, den_;
    std::optional<int> homog_;
    void set_homog();
};

} // namespace flows
