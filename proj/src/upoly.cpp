#include "flows/upoly.hpp"

#include <algorithm>
#include <set>

#include "flows/errors.hpp"

namespace flows {

Rat Poly1::lc() const {
    if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly1 Poly1::operator-() const {
    Poly1 out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly1& Poly1::operator+=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(out));
}

Poly1 Poly1::scaled(const Rat& c) const {
    if (c.is_zero()) return Poly1();
    Poly1 out = *this;
    for (auto& v : out.c_) v *= c;
    return out;
}

Poly1 Poly1::pow(unsigned e) const {
    Poly1 out(Rat(1)), base = *this;
    while (e) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

Poly1 Poly1::derivative() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly1(std::move(out));
}

Poly1 Poly1::antiderivative() const {
    if (c_.empty()) return Poly1();
    std::vector<Rat> out(c_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return Poly1(std::move(out));
}

Poly1 Poly1::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

Rat Poly1::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::complex<double> Poly1::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

std::pair<Poly1, Poly1> Poly1::divrem(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw precondition_error("univariate division by zero");
    Poly1 q, r = a;
    const int db = b.degree();
    const Rat blc = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rat c = r.lc() / blc;
        std::vector<Rat> t(static_cast<std::size_t>(k) + 1, Rat(0));
        t.back() = c;
        Poly1 term(std::move(t));
        q += term;
        r -= term * b;
    }
    return {q, r};
}

Poly1 Poly1::exact_div(const Poly1& a, const Poly1& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw precondition_error("internal: inexact univariate division");
    return q;
}

Poly1 Poly1::gcd(const Poly1& a, const Poly1& b) {
    Poly1 u = a, v = b;
    while (!v.is_zero()) {
        Poly1 r = divrem(u, v).second;
        u = v;
        v = r;
    }
    return u.monic();
}

Poly1 Poly1::lcm(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    return exact_div(a * b, gcd(a, b)).monic();
}

Poly Poly1::lift(Var v) const {
    Poly out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int e = static_cast<int>(i);
        out += Poly::monomial(c_[i], v == Var::x ? e : 0, v == Var::x ? 0 : e);
    }
    return out;
}

Poly1 Poly1::from_poly(const Poly& p, Var v) {
    if (!p.only_var(v)) throw precondition_error("from_poly: polynomial not univariate");
    std::vector<Rat> c;
    for (const auto& [m, coeff] : p.terms()) {
        int e = v == Var::x ? m.dx : m.dy;
        if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e) + 1, Rat(0));
        c[static_cast<std::size_t>(e)] = coeff;
    }
    return Poly1(std::move(c));
}

SquarefreeDecomposition squarefree_factor(const Poly1& p) {
    if (p.is_zero()) throw precondition_error("squarefree factorization of zero polynomial");
    SquarefreeDecomposition out;
    out.unit = p.lc();
    if (p.degree() == 0) return out;
    Poly1 f = p.monic();
    Poly1 d = Poly1::gcd(f, f.derivative());
    Poly1 v = Poly1::exact_div(f, d);
    Poly1 w = Poly1::exact_div(f.derivative(), d);
    int i = 1;
    while (v.degree() > 0) {
        Poly1 z = w - v.derivative();
        Poly1 g = Poly1::gcd(v, z);
        if (g.degree() > 0) out.factors.push_back({g, i});
        v = Poly1::exact_div(v, g);
        w = Poly1::exact_div(z, g);
        ++i;
    }
    return out;
}

namespace {

// Trial division with a Pollard-Brent fallback for large cofactors.
void factor_mpz(mpz_class n, std::map<mpz_class, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (mpz_class p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += 1;
        return;
    }
    // Pollard rho (Brent variant).
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        mpz_class c = rng.get_z_range(n - 3) + 1;
        mpz_class x = rng.get_z_range(n - 2) + 2, y = x, d = 1;
        auto step = [&](mpz_class v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) {
            factor_mpz(d, out);
            factor_mpz(n / d, out);
            return;
        }
    }
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<mpz_class, int> f;
    factor_mpz(n, f);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : f) {
        std::size_t sz = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly1& p) {
    if (p.is_zero()) throw precondition_error("rational roots of zero polynomial");
    // Clear denominators and the content: integer primitive polynomial.
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.den());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (den_lcm / c.den()));
    mpz_class content = 0;
    for (const auto& v : z) content = gcd(content, v);
    if (content > 1)
        for (auto& v : z) v /= content;

    std::vector<std::pair<Rat, int>> roots;
    std::size_t lo = 0;
    while (lo < z.size() && z[lo] == 0) ++lo;
    if (lo > 0) roots.push_back({Rat(0), static_cast<int>(lo)});
    if (lo + 1 >= z.size()) return roots; // constant left

    std::vector<Rat> work;
    for (std::size_t i = lo; i < z.size(); ++i) work.push_back(Rat(z[i]));
    Poly1 q{std::vector<Rat>(work)};

    const mpz_class a0 = z[lo], an = z.back();
    std::set<Rat> candidates;
    for (const auto& pnum : divisors(a0))
        for (const auto& pden : divisors(an)) {
            Rat c(mpq_class(pnum, pden));
            candidates.insert(c);
            candidates.insert(-c);
        }
    for (const auto& c : candidates) {
        int mult = 0;
        while (!q.is_constant() && q.eval(c).is_zero()) {
            // Divide by (x - c).
            Poly1 lin{std::vector<Rat>{-c, Rat(1)}};
            q = Poly1::exact_div(q, lin);
            ++mult;
        }
        if (mult > 0) roots.push_back({c, mult});
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

RF1::RF1(const Poly1& n, const Poly1& d) {
    if (d.is_zero()) throw precondition_error("rational function with zero denominator");
    Poly1 g = Poly1::gcd(n, d);
    Poly1 nn = g.degree() > 0 ? Poly1::exact_div(n, g) : n;
    Poly1 dd = g.degree() > 0 ? Poly1::exact_div(d, g) : d;
    Rat s = dd.lc();
    num_ = nn.scaled(s.inverse());
    den_ = dd.scaled(s.inverse());
}

RF1 RF1::operator-() const {
    RF1 out = *this;
    out.num_ = -out.num_;
    return out;
}

RF1 operator+(const RF1& a, const RF1& b) {
    return RF1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RF1 operator-(const RF1& a, const RF1& b) {
    return RF1(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RF1 operator*(const RF1& a, const RF1& b) { return RF1(a.num_ * b.num_, a.den_ * b.den_); }

RF1 operator/(const RF1& a, const RF1& b) {
    if (b.is_zero()) throw precondition_error("division by zero rational function");
    return RF1(a.num_ * b.den_, a.den_ * b.num_);
}

RF1 RF1::derivative() const {
    return RF1(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RF1 RF1::pow(long e) const {
    if (e == 0) return RF1(Rat(1));
    if (e < 0) {
        if (is_zero()) throw precondition_error("zero to a negative power");
        return RF1(den_, num_).pow(-e);
    }
    return RF1(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::optional<Rat> RF1::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
}

std::complex<double> RF1::eval(const std::complex<double>& x) const {
    return num_.eval(x) / den_.eval(x);
}

} // namespace flows
