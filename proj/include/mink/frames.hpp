#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mink/expr.hpp"
#include "mink/vec3.hpp"

namespace mink {

using JVec3 = TVec3<Jet>;

inline MVec3 value(const JVec3& v) { return {v.x1.c[0], v.x2.c[0], v.x3.c[0]}; }

struct Curve3 {
    std::array<Expr, 3> components;  // expressions in t
    double t_lo = 0, t_hi = 1;
    ParamBindings params;
};

struct SurfacePatch {
    std::array<Expr, 3> components;  // expressions in u, v
    ParamBindings params;
};

/// A parametric curve together with a unit normal field along it. This is
/// the working abstraction for every Darboux quantity: a surface patch is
/// just one way of providing the normal field, an offset construction is
/// another.
struct FramedCurve {
    std::function<JVec3(double)> position;    // order-4 jets of x(t)
    std::function<JVec3(double)> normal_raw;  // normal field before normalization
    double t_lo = 0, t_hi = 1;
    std::string label;
};

/// Curve evaluator without a normal field (for frenet / arclength).
std::function<JVec3(double)> curve_evaluator(const Curve3& c);

FramedCurve framed_from_exprs(const Curve3& c, const std::array<Expr, 3>& normal);
FramedCurve framed_from_patch(const Curve3& c, const SurfacePatch& patch,
                              const Expr& u_of_t, const Expr& v_of_t);

/// Derivatives of x with respect to arc length s, obtained from t-jets by
/// the chain rule d/ds = (1/|x'(t)|) d/dt. No reparametrization is built.
struct ArcJets {
    JVec3 x_s;   // jets in s: coefficient k holds d^k x / ds^k / k!
    Jet ds_dt;
};
ArcJets arclength_jet(const Curve3& c, double t0);
ArcJets arclength_jet_fn(const std::function<JVec3(double)>& position, double t0);

struct FrenetFrame {
    MVec3 T, N, B;
    double kappa = 0, tau = 0;
    int epsilon = 1;  // sign of <N,N> for spacelike curves
    CausalClass curve_class = CausalClass::Spacelike;
};

FrenetFrame frenet(const Curve3& c, double t0);
FrenetFrame frenet(const FramedCurve& fc, double t0);

struct SurfaceNormalResult {
    MVec3 n;
    CausalClass surface_class;
};
SurfaceNormalResult surface_normal(const SurfacePatch& p, double u0, double v0);

struct DarbouxFrame {
    MVec3 T, g, n;
    double kg = 0, kn = 0, taug = 0;
    CausalClass surface_class = CausalClass::Timelike;
    CausalClass curve_class = CausalClass::Spacelike;
    double eq3_kg = 0, eq3_taug = 0;  // triple-product route values
    double path_discrepancy = 0;      // two-route disagreement (see README)
};

DarbouxFrame darboux(const FramedCurve& fc, double t0);

/// Full jet-level Darboux data at a point; the pair machinery feeds on this.
struct FrameJets {
    JVec3 X, T, g, n, Tdot, gdot, ndot;
    Jet speed;            // ds/dt
    Jet kg, kn, taug;
    int eps_T = 1;        // sign of <T,T>
    int eps_n = 1;        // sign of <n,n>
    int eta_g = 1;        // sign of <g,g>
    double eq3_kg = 0, eq3_taug = 0, path_discrepancy = 0;
};
FrameJets darboux_jets(const FramedCurve& fc, double t0);

struct FrameAngle {
    double phi = 0;       // signed; |phi| is the angle between g and N
    double dphi_ds = 0;
    AngleKind kind = AngleKind::Spacelike;
    int branch = 1;       // +-1, antipodal branch of the decomposition
};
FrameAngle frenet_darboux_angle(const FramedCurve& fc, double t0);

struct LineClassification {
    bool is_geodesic = false, is_asymptotic = false, is_principal = false;
    double max_kg = 0, max_kn = 0, max_taug = 0;
};
LineClassification classify_line(const FramedCurve& fc,
                                 const std::vector<double>& grid, double tol);

/// Uniform grid over [lo, hi] with the endpoints inset.
std::vector<double> make_grid(double lo, double hi, int n, double inset = 1e-3);

/// d/dt of a jet (one order lower, top coefficient padded with zero).
Jet jet_dt(const Jet& a);
JVec3 jet_dt(const JVec3& v);

struct UnitJets {
    JVec3 v;
    int eps;  // sign of <v,v>
};
/// Normalize a jet vector under the indefinite metric; throws on_null when
/// the value is null or zero.
UnitJets normalize_jets(const JVec3& v, Err on_null, const char* what);

/// Arc length from t_a to t_b by composite Simpson quadrature on |x'(t)|.
double arc_length(const std::function<JVec3(double)>& position,
                  double t_a, double t_b, int panels = 64);

}  // namespace mink
