#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "flows/poly.hpp"
#include "flows/rational.hpp"

namespace flows {

// Dense univariate polynomial over Q. coeff()[i] is the coefficient of x^i;
// the vector carries no trailing zeros (zero polynomial = empty vector).
class Poly1 {
public:
    Poly1() = default;
    Poly1(const Rat& c) { c_.push_back(c); trim(); }
    Poly1(long c) : Poly1(Rat(c)) {}
    explicit Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1 var() { return Poly1(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rat(0);
    }
    Rat lc() const; // requires nonzero

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { a += b; return a; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { a -= b; return a; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    Poly1 scaled(const Rat& c) const;
    Poly1 pow(unsigned e) const;
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Poly1 derivative() const;
    Poly1 antiderivative() const; // constant term 0
    Poly1 monic() const;
    Rat eval(const Rat& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    static std::pair<Poly1, Poly1> divrem(const Poly1& a, const Poly1& b);
    static Poly1 exact_div(const Poly1& a, const Poly1& b);
    static Poly1 gcd(const Poly1& a, const Poly1& b); // monic
    static Poly1 lcm(const Poly1& a, const Poly1& b);

    // Bridges to the bivariate type.
    Poly lift(Var v) const;
    static Poly1 from_poly(const Poly& p, Var v); // requires p.only_var(v)

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

struct SquarefreeFactor {
    Poly1 factor; // monic
    int multiplicity = 0;
};

struct SquarefreeDecomposition {
    Rat unit;                              // p = unit * prod factor^multiplicity
    std::vector<SquarefreeFactor> factors; // ascending multiplicity
};

// Yun's algorithm. p must be nonzero.
SquarefreeDecomposition squarefree_factor(const Poly1& p);

// All rational roots with multiplicity, by divisor search on the cleared
// leading/trailing coefficients. p must be nonzero.
std::vector<std::pair<Rat, int>> rational_roots(const Poly1& p);

// Reduced univariate rational function; denominator monic.
class RF1 {
public:
    RF1() : num_(), den_(Rat(1)) {}
    RF1(const Rat& c) : num_(c), den_(Rat(1)) {}
    RF1(long c) : RF1(Rat(c)) {}
    RF1(Poly1 n) : num_(std::move(n)), den_(Rat(1)) {}
    RF1(const Poly1& n, const Poly1& d);
    static RF1 var() { return RF1(Poly1::var()); }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RF1 operator-() const;
    friend RF1 operator+(const RF1& a, const RF1& b);
    friend RF1 operator-(const RF1& a, const RF1& b);
    friend RF1 operator*(const RF1& a, const RF1& b);
    friend RF1 operator/(const RF1& a, const RF1& b);
    RF1& operator+=(const RF1& o) { *this = *this + o; return *this; }
    RF1& operator-=(const RF1& o) { *this = *this - o; return *this; }
    friend bool operator==(const RF1& a, const RF1& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RF1& a, const RF1& b) { return !(a == b); }

    RF1 derivative() const;
    RF1 pow(long e) const;
    std::optional<Rat> eval(const Rat& x) const; // nullopt on a pole
    std::complex<double> eval(const std::complex<double>& x) const;

private:
    Poly1 num_, den_;
};

} // namespace flows
