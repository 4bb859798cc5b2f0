#include "flows/vector_field.hpp"

#include "flows/errors.hpp"

namespace flows {

VectorField::VectorField(RF x_comp, RF y_comp)
    : p_(std::move(x_comp)), r_(std::move(y_comp)) {
    if (!p_.is_homogeneous_of(2) || !r_.is_homogeneous_of(2))
        throw precondition_error("vector field components must be 2-homogeneous");
}

std::pair<RF, RF> lie_bracket(const VectorField& F, const VectorField& G) {
    const RF &p = F.p(), &r = F.r(), &a = G.p(), &b = G.r();
    RF c1 = p * a.derivative(Var::x) + r * a.derivative(Var::y) -
            a * p.derivative(Var::x) - b * p.derivative(Var::y);
    RF c2 = p * b.derivative(Var::x) + r * b.derivative(Var::y) -
            a * r.derivative(Var::x) - b * r.derivative(Var::y);
    return {c1, c2};
}

CommuteWitness commute_check(const VectorField& F, const VectorField& G) {
    auto [c1, c2] = lie_bracket(F, G);
    CommuteWitness w;
    w.residual_x = c1;
    w.residual_y = c2;
    w.commutes = c1.is_zero() && c2.is_zero();
    return w;
}

bool is_level0(const VectorField& F) { return F.radial_defect().is_zero(); }

namespace {

// u(xz,yz)/z as a first-order series in z: requires the valuation gap
// val(num) - val(den) = 1 and leading ratio equal to `lead`. Returns the
// z-linear coefficient.
RF scaled_series_linear_term(const RF& u, const RF& lead) {
    if (u.is_zero()) throw precondition_error("flow component is identically zero");
    const Poly &N = u.num(), &D = u.den();
    const int vn = N.valuation(), vd = D.valuation();
    if (vn - vd != 1)
        throw precondition_error("flow component violates the scaled boundary condition");
    Poly n0 = N.homogeneous_component(vn), n1 = N.homogeneous_component(vn + 1);
    Poly d0 = D.homogeneous_component(vd), d1 = D.homogeneous_component(vd + 1);
    if (RF(n0, d0) != lead)
        throw precondition_error("flow component violates the scaled boundary condition");
    return (RF(n1) * RF(d0) - RF(n0) * RF(d1)) / (RF(d0) * RF(d0));
}

} // namespace

RationalFlow::RationalFlow(RF u, RF v) : u_(std::move(u)), v_(std::move(v)) {
    // Validates the boundary condition; the field itself is discarded here.
    scaled_series_linear_term(u_, RF::x());
    scaled_series_linear_term(v_, RF::y());
}

RationalFlow RationalFlow::after(const RationalFlow& other) const {
    return RationalFlow(u_.substitute(other.u_, other.v_),
                        v_.substitute(other.u_, other.v_));
}

RationalFlow compose_level0(const RF& J, const RF& K) {
    if (!J.is_homogeneous_of(1) || !K.is_homogeneous_of(1))
        throw precondition_error("compose_level0 requires 1-homogeneous arguments");
    RF den = RF(1) - J - K;
    return RationalFlow(RF::x() / den, RF::y() / den);
}

VectorField field_of_rational_flow(const RationalFlow& f) {
    RF p = scaled_series_linear_term(f.u(), RF::x());
    RF r = scaled_series_linear_term(f.v(), RF::y());
    return VectorField(p, r);
}

VectorField conjugate_field(const RF& A, const VectorField& F) {
    if (A.is_zero() || !A.is_homogeneous_of(0))
        throw precondition_error("conjugation factor must be 0-homogeneous and nonzero");
    RF defect = F.radial_defect();
    RF p = A * F.p() - A.derivative(Var::y) * defect;
    RF r = A * F.r() + A.derivative(Var::x) * defect;
    return VectorField(p, r);
}

BirMap BirMap::linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if ((a * d - b * c).is_zero()) throw precondition_error("linear map must be invertible");
    BirMap m;
    m.k_ = Linear{{a, b, c, d}};
    return m;
}

BirMap BirMap::radial(const Poly& P, const Poly& Q) {
    if (P.is_zero() || Q.is_zero())
        throw precondition_error("radial map with zero polynomial");
    auto hp = P.homogeneous_degree(), hq = Q.homogeneous_degree();
    if (!hp || !hq || *hp != *hq)
        throw precondition_error("radial map requires homogeneous P, Q of equal degree");
    if (!Poly::gcd(P, Q).is_constant())
        throw precondition_error("radial map requires coprime P, Q");
    BirMap m;
    m.k_ = Radial{P, Q};
    return m;
}

BirMap BirMap::compose(std::vector<BirMap> maps) {
    if (maps.size() == 1) return maps.front();
    BirMap m;
    m.k_ = std::move(maps);
    return m;
}

BirMap BirMap::inverse() const {
    BirMap m;
    if (const auto* lin = std::get_if<Linear>(&k_)) {
        const Rat &a = lin->m[0], &b = lin->m[1], &c = lin->m[2], &d = lin->m[3];
        Rat det = a * d - b * c;
        m.k_ = Linear{{d / det, -b / det, -c / det, a / det}};
    } else if (const auto* rad = std::get_if<Radial>(&k_)) {
        m.k_ = Radial{rad->Q, rad->P};
    } else {
        const auto& list = std::get<std::vector<BirMap>>(k_);
        std::vector<BirMap> inv;
        for (auto it = list.rbegin(); it != list.rend(); ++it) inv.push_back(it->inverse());
        m.k_ = std::move(inv);
    }
    return m;
}

std::pair<Rat, Rat> BirMap::apply(const std::pair<Rat, Rat>& pt) const {
    if (const auto* lin = std::get_if<Linear>(&k_)) {
        return {lin->m[0] * pt.first + lin->m[1] * pt.second,
                lin->m[2] * pt.first + lin->m[3] * pt.second};
    }
    if (const auto* rad = std::get_if<Radial>(&k_)) {
        Rat q = rad->Q.eval(pt.first, pt.second);
        if (q.is_zero()) throw precondition_error("radial map evaluated on its singular locus");
        Rat s = rad->P.eval(pt.first, pt.second) / q;
        return {pt.first * s, pt.second * s};
    }
    std::pair<Rat, Rat> cur = pt;
    for (const auto& m : std::get<std::vector<BirMap>>(k_)) cur = m.apply(cur);
    return cur;
}

} // namespace flows
