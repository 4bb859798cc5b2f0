#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "flows/rf.hpp"

namespace flows {

// Vector field of a projective flow: a pair of 2-homogeneous rational
// functions. Homogeneity is Euler-verified on construction.
class VectorField {
public:
    VectorField(RF x_comp, RF y_comp);
    const RF& p() const { return p_; } // coefficient of d/dx
    const RF& r() const { return r_; } // coefficient of d/dy

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.p_ == b.p_ && a.r_ == b.r_;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    VectorField operator-() const { return VectorField(-p_, -r_); }
    friend VectorField operator+(const VectorField& a, const VectorField& b) {
        return VectorField(a.p_ + b.p_, a.r_ + b.r_);
    }
    VectorField scaled(const Rat& c) const { return VectorField(RF(c) * p_, RF(c) * r_); }

    // x r - y p; zero exactly for a level-0 field.
    RF radial_defect() const { return RF::x() * r_ - RF::y() * p_; }

    // Conjugation by the linear involution (x,y) -> (y,x).
    VectorField mirrored() const { return VectorField(r_.swap_vars(), p_.swap_vars()); }

private:
    RF p_, r_;
};

// Lie bracket [F, G]; the components are 3-homogeneous unless zero, so the
// result is a raw pair rather than a VectorField.
std::pair<RF, RF> lie_bracket(const VectorField& F, const VectorField& G);

struct CommuteWitness {
    bool commutes = false;
    RF residual_x, residual_y; // reduced bracket components, zero iff commuting
};

// Exact commutation test; equivalent to the vanishing of the two coupled
// first-order relations between the fields.
CommuteWitness commute_check(const VectorField& F, const VectorField& G);

bool is_level0(const VectorField& F);

// Closed-form rational flow map. The constructor verifies the scaled
// boundary condition u(xz,yz)/z -> x, v(xz,yz)/z -> y by exact first-order
// series expansion in the scale parameter.
class RationalFlow {
public:
    RationalFlow(RF u, RF v);
    const RF& u() const { return u_; }
    const RF& v() const { return v_; }
    static RationalFlow identity() { return RationalFlow(RF::x(), RF::y()); }

    // Composition of flow maps (this after other).
    RationalFlow after(const RationalFlow& other) const;

    friend bool operator==(const RationalFlow& a, const RationalFlow& b) {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }

private:
    RF u_, v_;
};

// x/(1-J-K) . y/(1-J-K) for 1-homogeneous J, K; with K = 0 this is the flow
// of J alone, and the construction realizes composition of level-0 flows.
RationalFlow compose_level0(const RF& J, const RF& K);

// Exact vector field of a rational flow: the z-linear term of u(xz,yz)/z,
// extracted by homogeneous-component arithmetic (no numeric limits).
VectorField field_of_rational_flow(const RationalFlow& f);

// Vector field transformation under conjugation with the radial map
// (x,y) -> (xA, yA), A 0-homogeneous nonzero:
//   p' = A p - A_y (x r - y p),  r' = A r + A_x (x r - y p).
VectorField conjugate_field(const RF& A, const VectorField& F);

// Birational 1-homogeneous plane map: linear, radial (x,y)->(xP/Q, yP/Q),
// or a composition of such maps.
class BirMap {
public:
    struct Linear {
        std::array<Rat, 4> m; // row-major 2x2
    };
    struct Radial {
        Poly P, Q;
    };

    static BirMap linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
    static BirMap radial(const Poly& P, const Poly& Q);
    static BirMap radial(const RF& A) { return radial(A.num(), A.den()); }
    static BirMap compose(std::vector<BirMap> maps); // applied left to right

    BirMap inverse() const;
    std::pair<Rat, Rat> apply(const std::pair<Rat, Rat>& pt) const;

    bool is_linear() const { return std::holds_alternative<Linear>(k_); }
    bool is_radial() const { return std::holds_alternative<Radial>(k_); }
    const Radial& as_radial() const { return std::get<Radial>(k_); }
    const Linear& as_linear() const { return std::get<Linear>(k_); }

private:
    std::variant<Linear, Radial, std::vector<BirMap>> k_;
    BirMap() = default;
};

} // namespace flows
