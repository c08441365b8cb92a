#pragma once

#include <cmath>
#include <ostream>

#include "mink/error.hpp"

namespace mink {

/// 3-vector in the rectangular coordinates of E^3_1. Carries no causal
/// information of its own; the metric lives in the operations.
template <typename T>
struct TVec3 {
    T x1{}, x2{}, x3{};
};

using MVec3 = TVec3<double>;

template <typename T>
inline TVec3<T> operator+(const TVec3<T>& a, const TVec3<T>& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

template <typename T>
inline TVec3<T> operator-(const TVec3<T>& a, const TVec3<T>& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

template <typename T>
inline TVec3<T> operator-(const TVec3<T>& a) {
    return {-a.x1, -a.x2, -a.x3};
}

template <typename T, typename K>
inline auto operator*(const K& k, const TVec3<T>& v) -> TVec3<decltype(k * v.x1)> {
    return {k * v.x1, k * v.x2, k * v.x3};
}

/// Flat metric <u,v> = -u1 v1 + u2 v2 + u3 v3.
template <typename T>
inline T inner(const TVec3<T>& u, const TVec3<T>& v) {
    return -(u.x1 * v.x1) + u.x2 * v.x2 + u.x3 * v.x3;
}

/// Lorentz vector product, componentwise
/// (u2 v3 - u3 v2, u1 v3 - u3 v1, u2 v1 - u1 v2).
/// Satisfies e1 x e2 = -e3, e2 x e3 = e1, e3 x e1 = -e2 and
/// <u x v, u> = <u x v, v> = 0 under the flat metric.
template <typename T>
inline TVec3<T> cross(const TVec3<T>& u, const TVec3<T>& v) {
    return {u.x2 * v.x3 - u.x3 * v.x2,
            u.x1 * v.x3 - u.x3 * v.x1,
            u.x2 * v.x1 - u.x1 * v.x2};
}

inline double euclid_sq(const MVec3& v) {
    return v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
}

/// |v| = sqrt(|<v,v>|)
inline double mnorm(const MVec3& v) {
    return std::sqrt(std::fabs(inner(v, v)));
}

inline const MVec3 e1{1, 0, 0};
inline const MVec3 e2{0, 1, 0};
inline const MVec3 e3{0, 0, 1};

enum class CausalClass { Spacelike, Timelike, Null };

inline const char* causal_name(CausalClass c) {
    switch (c) {
        case CausalClass::Spacelike: return "spacelike";
        case CausalClass::Timelike: return "timelike";
        case CausalClass::Null: return "null";
    }
    return "?";
}

/// Spacelike iff <v,v> > 0 or v = 0, timelike iff < 0, null iff = 0 with
/// v != 0. The exact-zero test is |<v,v>| <= null_tol * (1 + |v|^2_euclid).
inline CausalClass causal_character(const MVec3& v, double null_tol = tol::null_tol) {
    const double q = inner(v, v);
    if (std::fabs(q) <= null_tol * (1.0 + euclid_sq(v))) {
        const bool zero = v.x1 == 0.0 && v.x2 == 0.0 && v.x3 == 0.0;
        return zero ? CausalClass::Spacelike : CausalClass::Null;
    }
    return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

enum class AngleKind { Hyperbolic, Central, Spacelike, LorentzianTimelike };

inline const char* angle_kind_name(AngleKind k) {
    switch (k) {
        case AngleKind::Hyperbolic: return "hyperbolic";
        case AngleKind::Central: return "central";
        case AngleKind::Spacelike: return "spacelike";
        case AngleKind::LorentzianTimelike: return "lorentzian-timelike";
    }
    return "?";
}

struct AngleMeasure {
    double theta = 0;  // >= 0; radians for the spacelike kind
    AngleKind kind = AngleKind::Spacelike;
};

/// Angle between two non-null vectors, dispatching on causal characters:
/// both timelike (same time orientation)   -> hyperbolic, cosh t = -<u,v>/(|u||v|)
/// both spacelike, timelike plane          -> central,    cosh t =  |<u,v>|/(|u||v|)
/// both spacelike, spacelike plane         -> spacelike,  cos  t =   <u,v>/(|u||v|)
/// mixed                                   -> lorentzian, sinh t =  |<u,v>|/(|u||v|)
/// The central/spacelike split is decided by |<u,v>| >= |u||v| within angle_tol.
inline AngleMeasure angle_between(const MVec3& u, const MVec3& v,
                                  double null_tol = tol::null_tol,
                                  double angle_tol = tol::angle_tol) {
    const CausalClass cu = causal_character(u, null_tol);
    const CausalClass cv = causal_character(v, null_tol);
    if (cu == CausalClass::Null || cv == CausalClass::Null)
        raise(Err::NullInput, "angle undefined for null or zero vectors");
    const double prod = mnorm(u) * mnorm(v);
    const double ip = inner(u, v);
    if (cu == CausalClass::Timelike && cv == CausalClass::Timelike) {
        if (u.x1 * v.x1 < 0)
            raise(Err::OppositeOrientation, "timelike vectors have opposite time orientation");
        const double r = -ip / prod;
        return {std::acosh(std::max(r, 1.0)), AngleKind::Hyperbolic};
    }
    if (cu == CausalClass::Spacelike && cv == CausalClass::Spacelike) {
        const double r = ip / prod;
        if (std::fabs(r) >= 1.0 - angle_tol) {
            return {std::acosh(std::max(std::fabs(r), 1.0)), AngleKind::Central};
        }
        return {std::acos(r), AngleKind::Spacelike};
    }
    return {std::asinh(std::fabs(ip) / prod), AngleKind::LorentzianTimelike};
}

inline std::ostream& operator<<(std::ostream& os, const MVec3& v) {
    return os << "(" << v.x1 << ", " << v.x2 << ", " << v.x3 << ")";
}

}  // namespace mink
