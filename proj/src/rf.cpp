#include "flows/rf.hpp"

#include "flows/errors.hpp"

namespace flows {

RF::RF(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw precondition_error("rational function with zero denominator");
    Poly g = Poly::gcd(n, d);
    Poly nn = n, dd = d;
    if (!g.is_constant()) {
        nn = *Poly::try_divide(n, g);
        dd = *Poly::try_divide(d, g);
    }
    Rat s = dd.leading_coeff().inverse();
    num_ = nn.scaled(s);
    den_ = dd.scaled(s);
    set_homog();
}

void RF::set_homog() {
    homog_.reset();
    if (num_.is_zero()) return;
    auto hn = num_.homogeneous_degree();
    auto hd = den_.homogeneous_degree();
    if (hn && hd) homog_ = *hn - *hd;
}

RF RF::operator-() const {
    RF out = *this;
    out.num_ = -out.num_;
    return out;
}

RF operator+(const RF& a, const RF& b) {
    return RF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RF operator-(const RF& a, const RF& b) {
    return RF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RF operator*(const RF& a, const RF& b) { return RF(a.num_ * b.num_, a.den_ * b.den_); }

RF operator/(const RF& a, const RF& b) {
    if (b.is_zero()) throw precondition_error("division by zero rational function");
    return RF(a.num_ * b.den_, a.den_ * b.num_);
}

RF RF::pow(long e) const {
    if (e == 0) return RF(Rat(1));
    if (e < 0) {
        if (is_zero()) throw precondition_error("zero to a negative power");
        return RF(den_, num_).pow(-e);
    }
    return RF(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RF RF::derivative(Var v) const {
    return RF(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

namespace {

// P(sx, sy) as a rational function, by a double Horner scheme over the
// coefficients collected in x.
RF subst_poly(const Poly& p, const RF& sx, const RF& sy) {
    if (p.is_zero()) return RF();
    auto cx = p.collect(Var::x);
    RF acc;
    int prev_e = -1;
    // Iterate from the highest power of x down, multiplying by sx^gap.
    for (auto it = cx.rbegin(); it != cx.rend(); ++it) {
        const auto& [e, cy] = *it;
        if (prev_e >= 0) acc = acc * sx.pow(prev_e - e);
        // cy is a polynomial in y alone: Horner in sy.
        RF inner;
        Poly1 u = Poly1::from_poly(cy, Var::y);
        for (std::size_t i = u.coeffs().size(); i-- > 0;)
            inner = inner * sy + RF(u.coeffs()[i]);
        acc = acc + inner;
        prev_e = e;
    }
    if (prev_e > 0) acc = acc * sx.pow(prev_e);
    return acc;
}

} // namespace

RF RF::substitute(const RF& sx, const RF& sy) const {
    RF n = subst_poly(num_, sx, sy);
    RF d = subst_poly(den_, sx, sy);
    if (d.is_zero())
        throw precondition_error("substitution makes the denominator vanish identically");
    return n / d;
}

RF RF::swap_vars() const { return RF(num_.swap_vars(), den_.swap_vars()); }

std::optional<Rat> RF::eval(const Rat& x, const Rat& y) const {
    Rat d = den_.eval(x, y);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x, y) / d;
}

std::complex<double> RF::eval(const std::complex<double>& x,
                              const std::complex<double>& y) const {
    return num_.eval(x, y) / den_.eval(x, y);
}

RF1 RF::dehomogenize(int d) const {
    if (!is_homogeneous_of(d))
        throw precondition_error("dehomogenize: input is not homogeneous of the stated degree");
    auto at_y1 = [](const Poly& p) {
        std::vector<Rat> c;
        for (const auto& [m, v] : p.terms()) {
            if (static_cast<int>(c.size()) <= m.dx)
                c.resize(static_cast<std::size_t>(m.dx) + 1, Rat(0));
            c[static_cast<std::size_t>(m.dx)] += v;
        }
        return Poly1(std::move(c));
    };
    return RF1(at_y1(num_), at_y1(den_));
}

RF RF::rehomogenize(const RF1& g, int d) {
    // y^d * n(x/y)/m(x/y) = y^(d - deg n + deg m) * N(x,y) / M(x,y) with N, M
    // the homogenizations of n, m.
    auto homogenize = [](const Poly1& u) {
        Poly out;
        const int deg = u.degree();
        for (int i = 0; i <= deg; ++i)
            if (!u.coeff(i).is_zero())
                out += Poly::monomial(u.coeff(i), i, deg - i);
        return out;
    };
    if (g.is_zero()) return RF();
    const int e = d - g.num().degree() + g.den().degree();
    Poly n = homogenize(g.num());
    Poly m = homogenize(g.den());
    if (e >= 0)
        n = n * Poly::monomial(Rat(1), 0, e);
    else
        m = m * Poly::monomial(Rat(1), 0, -e);
    return RF(n, m);
}

RF RF::normalized_leading() const {
    if (is_zero()) return *this;
    RF out = *this;
    Rat s = num_.leading_coeff().inverse();
    out.num_ = out.num_.scaled(s);
    return out;
}

} // namespace flows
