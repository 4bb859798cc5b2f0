#include "flows/poly.hpp"

#include <algorithm>

#include "flows/errors.hpp"

namespace flows {

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly Poly::monomial(const Rat& c, int dx, int dy) {
    Poly p;
    if (dx < 0 || dy < 0) throw precondition_error("monomial with negative exponent");
    p.add_term(Mono{dx, dy}, c);
    return p;
}

Rat Poly::constant_value() const {
    if (t_.empty()) return Rat(0);
    if (!is_constant()) throw precondition_error("constant_value on non-constant polynomial");
    return t_.begin()->second;
}

bool Poly::only_var(Var v) const {
    for (const auto& [m, c] : t_) {
        (void)c;
        if (v == Var::x ? m.dy != 0 : m.dx != 0) return false;
    }
    return true;
}

int Poly::valuation() const {
    if (t_.empty()) return -1;
    int v = t_.begin()->first.deg();
    for (const auto& [m, c] : t_) {
        (void)c;
        v = std::min(v, m.deg());
    }
    return v;
}

int Poly::degree(Var v) const {
    if (t_.empty()) return -1;
    int d = 0;
    for (const auto& [m, c] : t_) {
        (void)c;
        d = std::max(d, v == Var::x ? m.dx : m.dy);
    }
    return d;
}

Mono Poly::leading_mono() const {
    if (t_.empty()) throw precondition_error("leading term of zero polynomial");
    return t_.begin()->first;
}

Rat Poly::leading_coeff() const {
    if (t_.empty()) throw precondition_error("leading term of zero polynomial");
    return t_.begin()->second;
}

Rat Poly::coeff(int dx, int dy) const {
    auto it = t_.find(Mono{dx, dy});
    return it == t_.end() ? Rat(0) : it->second;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = t_.begin()->first.deg();
    for (const auto& [m, c] : t_) {
        (void)c;
        if (m.deg() != d) return std::nullopt;
    }
    return d;
}

Poly Poly::homogeneous_component(int d) const {
    Poly out;
    for (const auto& [m, c] : t_)
        if (m.deg() == d) out.t_.emplace(m, c);
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_)
            out.add_term(Mono{ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : t_) out.t_.emplace(m, v * c);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out(Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

Poly Poly::derivative(Var v) const {
    Poly out;
    for (const auto& [m, c] : t_) {
        if (v == Var::x) {
            if (m.dx > 0) out.add_term(Mono{m.dx - 1, m.dy}, c * Rat(m.dx));
        } else {
            if (m.dy > 0) out.add_term(Mono{m.dx, m.dy - 1}, c * Rat(m.dy));
        }
    }
    return out;
}

Rat Poly::eval(const Rat& x, const Rat& y) const {
    // Powers cached, exponents are small.
    std::vector<Rat> px{Rat(1)}, py{Rat(1)};
    auto at = [](std::vector<Rat>& cache, const Rat& base, int e) -> const Rat& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };
    Rat acc(0);
    for (const auto& [m, c] : t_) acc += c * at(px, x, m.dx) * at(py, y, m.dy);
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x,
                                const std::complex<double>& y) const {
    std::vector<std::complex<double>> px{1.0}, py{1.0};
    auto at = [](std::vector<std::complex<double>>& cache, const std::complex<double>& base,
                 int e) -> const std::complex<double>& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };
    std::complex<double> acc(0.0);
    for (const auto& [m, c] : t_) acc += c.to_double() * at(px, x, m.dx) * at(py, y, m.dy);
    return acc;
}

Poly Poly::swap_vars() const {
    Poly out;
    for (const auto& [m, c] : t_) out.t_.emplace(Mono{m.dy, m.dx}, c);
    return out;
}

std::optional<Poly> Poly::try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw precondition_error("division by zero polynomial");
    Poly q, r = a;
    const Mono lb = b.leading_mono();
    const Rat lbc = b.leading_coeff();
    while (!r.is_zero()) {
        const Mono lr = r.leading_mono();
        int dx = lr.dx - lb.dx, dy = lr.dy - lb.dy;
        if (dx < 0 || dy < 0) return std::nullopt;
        Poly t = monomial(r.leading_coeff() / lbc, dx, dy);
        q += t;
        r -= t * b;
    }
    return q;
}

std::map<int, Poly> Poly::collect(Var main) const {
    std::map<int, Poly> out;
    for (const auto& [m, c] : t_) {
        int e = main == Var::x ? m.dx : m.dy;
        Mono rest = main == Var::x ? Mono{0, m.dy} : Mono{m.dx, 0};
        out[e].add_term(rest, c);
    }
    return out;
}

Poly Poly::from_collect(const std::map<int, Poly>& c, Var main) {
    Poly out;
    for (const auto& [e, p] : c)
        for (const auto& [m, v] : p.t_) {
            Mono full = main == Var::x ? Mono{e + m.dx, m.dy} : Mono{m.dx, e + m.dy};
            out.add_term(full, v);
        }
    return out;
}

namespace {

// Euclidean gcd for polynomials in a single variable, monic result.
Poly gcd_univar(Poly a, Poly b) {
    auto divrem_univar = [](const Poly& n, const Poly& d, Var v) {
        Poly q, r = n;
        const Mono ld = d.leading_mono();
        const Rat ldc = d.leading_coeff();
        int degd = v == Var::x ? ld.dx : ld.dy;
        while (!r.is_zero()) {
            const Mono lr = r.leading_mono();
            int degr = v == Var::x ? lr.dx : lr.dy;
            if (degr < degd) break;
            int e = degr - degd;
            Poly t = Poly::monomial(r.leading_coeff() / ldc, v == Var::x ? e : 0,
                                    v == Var::x ? 0 : e);
            q += t;
            r -= t * d;
        }
        return std::pair<Poly, Poly>(q, r);
    };
    Var v = Var::x;
    if (a.only_var(Var::y) && b.only_var(Var::y) && (!a.is_constant() || !b.is_constant()))
        v = Var::y;
    while (!b.is_zero()) {
        Poly r = divrem_univar(a, b, v).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading_coeff().inverse());
}

// gcd of the coefficients of `p` with respect to x (a polynomial in y).
Poly content_x(const Poly& p) {
    Poly g;
    for (const auto& [e, c] : p.collect(Var::x)) {
        (void)e;
        g = gcd_univar(g, c);
        if (g.is_constant() && !g.is_zero()) return Poly(Rat(1));
    }
    return g;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    auto q = Poly::try_divide(a, b);
    if (!q) throw precondition_error("internal: inexact polynomial division");
    return *q;
}

// Pseudo-remainder of a by b viewed in (Q[y])[x].
Poly prem_x(Poly r, const Poly& b) {
    const int degb = b.degree(Var::x);
    const Poly lb = b.collect(Var::x).rbegin()->second;
    while (!r.is_zero() && r.degree(Var::x) >= degb) {
        auto rc = r.collect(Var::x);
        const int degr = rc.rbegin()->first;
        const Poly lr = rc.rbegin()->second;
        Poly shift = Poly::monomial(Rat(1), degr - degb, 0);
        r = lb * r - lr * shift * b;
    }
    return r;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    auto monic = [](const Poly& p) {
        return p.is_zero() ? p : p.scaled(p.leading_coeff().inverse());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
    if ((a.only_var(Var::x) && b.only_var(Var::x)) ||
        (a.only_var(Var::y) && b.only_var(Var::y)))
        return gcd_univar(a, b);
    if (a.degree(Var::x) == 0 || b.degree(Var::x) == 0) {
        // One operand is y-only: gcd divides its content in y.
        const Poly& yonly = a.degree(Var::x) == 0 ? a : b;
        const Poly& other = a.degree(Var::x) == 0 ? b : a;
        return gcd_univar(yonly, content_x(other));
    }

    Poly ca = content_x(a), cb = content_x(b);
    Poly g_cont = gcd_univar(ca, cb);
    Poly A = divide_exact(a, ca), B = divide_exact(b, cb);
    if (A.degree(Var::x) < B.degree(Var::x)) std::swap(A, B);
    Poly g_pp;
    while (true) {
        if (B.degree(Var::x) == 0) {
            // Nonzero remainder free of x: the primitive parts are coprime.
            g_pp = Poly(Rat(1));
            break;
        }
        Poly r = prem_x(A, B);
        if (r.is_zero()) {
            g_pp = divide_exact(B, content_x(B));
            break;
        }
        A = B;
        B = divide_exact(r, content_x(r));
    }
    Poly g = g_cont * g_pp;
    return g.scaled(g.leading_coeff().inverse());
}

Poly Poly::resultant(const Poly& a, const Poly& b, Var eliminate) {
    if (a.is_zero() || b.is_zero()) return Poly();
    auto ac = a.collect(eliminate), bc = b.collect(eliminate);
    const int m = ac.rbegin()->first, n = bc.rbegin()->first;
    auto coeff_of = [](const std::map<int, Poly>& c, int e) {
        auto it = c.find(e);
        return it == c.end() ? Poly() : it->second;
    };
    if (m == 0 && n == 0) return Poly(Rat(1));
    if (m == 0) return coeff_of(ac, 0).pow(static_cast<unsigned>(n));
    if (n == 0) return coeff_of(bc, 0).pow(static_cast<unsigned>(m));

    // Sylvester matrix, then Bareiss fraction-free elimination.
    const int N = m + n;
    std::vector<std::vector<Poly>> M(static_cast<std::size_t>(N),
                                     std::vector<Poly>(static_cast<std::size_t>(N)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = coeff_of(ac, m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = coeff_of(bc, n - j);

    int sign = 1;
    Poly prev(Rat(1));
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return Poly();
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Poly();
        }
        prev = M[k][k];
    }
    Poly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

} // namespace flows
