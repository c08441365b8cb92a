#include "mink/frames.hpp"

#include <cmath>

namespace mink {

Jet jet_dt(const Jet& a) {
    Jet r;
    for (int k = 0; k < Jet::order; ++k) r.c[k] = a.c[k + 1] * (k + 1);
    r.c[Jet::order] = 0;
    return r;
}

JVec3 jet_dt(const JVec3& v) { return {jet_dt(v.x1), jet_dt(v.x2), jet_dt(v.x3)}; }

namespace {

Jet dshift(const Jet& a) { return jet_dt(a); }

JVec3 vshift(const JVec3& v) { return jet_dt(v); }

JVec3 dv_ds(const JVec3& v, const Jet& speed) {
    return {jet_dt(v.x1) / speed, jet_dt(v.x2) / speed, jet_dt(v.x3) / speed};
}

double euclid_val(const JVec3& v) {
    const MVec3 w = value(v);
    return std::sqrt(euclid_sq(w));
}

}  // namespace

/// Normalize under the indefinite metric. The causal sign is fixed by the
/// value at the expansion point; near-null input is rejected.
UnitJets normalize_jets(const JVec3& v, Err on_null, const char* what) {
    const Jet q = inner(v, v);
    const double scale = 1.0 + euclid_val(v) * euclid_val(v);
    if (std::fabs(q.c[0]) <= tol::null_tol * scale)
        raise(on_null, std::string(what) + " is null or zero");
    const int eps = q.c[0] > 0 ? 1 : -1;
    const Jet nrm = sqrt(eps > 0 ? q : -q);
    return {{v.x1 / nrm, v.x2 / nrm, v.x3 / nrm}, eps};
}

double arc_length(const std::function<JVec3(double)>& position,
                  double t_a, double t_b, int panels) {
    if (panels % 2) ++panels;
    const double h = (t_b - t_a) / panels;
    if (h == 0) return 0;
    auto speed = [&](double t) {
        const JVec3 V = jet_dt(position(t));
        return std::sqrt(std::fabs(inner(value(V), value(V))));
    };
    double acc = speed(t_a) + speed(t_b);
    for (int i = 1; i < panels; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * speed(t_a + i * h);
    return acc * h / 3.0;
}

std::vector<double> make_grid(double lo, double hi, int n, double inset) {
    std::vector<double> g;
    if (n < 2) n = 2;
    const double a = lo + inset, b = hi - inset;
    g.reserve(n);
    for (int i = 0; i < n; ++i) g.push_back(a + (b - a) * i / (n - 1));
    return g;
}

std::function<JVec3(double)> curve_evaluator(const Curve3& c) {
    return [c](double t) -> JVec3 {
        return {eval_jet(c.components[0], "t", t, c.params),
                eval_jet(c.components[1], "t", t, c.params),
                eval_jet(c.components[2], "t", t, c.params)};
    };
}

FramedCurve framed_from_exprs(const Curve3& c, const std::array<Expr, 3>& normal) {
    FramedCurve fc;
    fc.position = curve_evaluator(c);
    const ParamBindings params = c.params;
    fc.normal_raw = [normal, params](double t) -> JVec3 {
        return {eval_jet(normal[0], "t", t, params),
                eval_jet(normal[1], "t", t, params),
                eval_jet(normal[2], "t", t, params)};
    };
    fc.t_lo = c.t_lo;
    fc.t_hi = c.t_hi;
    return fc;
}

FramedCurve framed_from_patch(const Curve3& c, const SurfacePatch& patch,
                              const Expr& u_of_t, const Expr& v_of_t) {
    FramedCurve fc;
    fc.position = curve_evaluator(c);
    std::array<Expr, 3> su, sv;
    for (int i = 0; i < 3; ++i) {
        su[i] = differentiate(patch.components[i], "u");
        sv[i] = differentiate(patch.components[i], "v");
    }
    SurfacePatch p = patch;
    Expr uo = u_of_t, vo = v_of_t;
    fc.normal_raw = [p, su, sv, uo, vo](double t) -> JVec3 {
        JVec3 du{eval_jet2(su[0], uo, vo, t, p.params),
                 eval_jet2(su[1], uo, vo, t, p.params),
                 eval_jet2(su[2], uo, vo, t, p.params)};
        JVec3 dv{eval_jet2(sv[0], uo, vo, t, p.params),
                 eval_jet2(sv[1], uo, vo, t, p.params),
                 eval_jet2(sv[2], uo, vo, t, p.params)};
        return cross(du, dv);
    };
    fc.t_lo = c.t_lo;
    fc.t_hi = c.t_hi;
    return fc;
}

ArcJets arclength_jet_fn(const std::function<JVec3(double)>& position, double t0) {
    const JVec3 X = position(t0);
    const JVec3 V = vshift(X);
    const Jet q = inner(V, V);
    const double scale = 1.0 + euclid_val(V) * euclid_val(V);
    if (std::fabs(q.c[0]) <= tol::null_tol * scale)
        raise(Err::NullVelocity, "curve velocity is null or zero");
    const int eps = q.c[0] > 0 ? 1 : -1;
    const Jet speed = sqrt(eps > 0 ? q : -q);

    ArcJets out;
    out.ds_dt = speed;
    // repeated d/ds, reading off the value at each order
    static const double fact[5] = {1, 1, 2, 6, 24};
    JVec3 cur = X;
    for (int k = 0; k <= Jet::order; ++k) {
        out.x_s.x1.c[k] = cur.x1.c[0] / fact[k];
        out.x_s.x2.c[k] = cur.x2.c[0] / fact[k];
        out.x_s.x3.c[k] = cur.x3.c[0] / fact[k];
        if (k < Jet::order) cur = dv_ds(cur, speed);
    }
    return out;
}

ArcJets arclength_jet(const Curve3& c, double t0) {
    return arclength_jet_fn(curve_evaluator(c), t0);
}

namespace {

struct FrenetJets {
    JVec3 T, N, B;
    Jet kappa, tau;
    int eps_T, eps_N, eta_B;
};

FrenetJets frenet_jets_fn(const std::function<JVec3(double)>& position, double t0) {
    const JVec3 X = position(t0);
    const JVec3 V = vshift(X);
    const Jet q = inner(V, V);
    const double vscale = 1.0 + euclid_val(V) * euclid_val(V);
    if (std::fabs(q.c[0]) <= tol::null_tol * vscale)
        raise(Err::NullVelocity, "curve velocity is null or zero");
    const int eps_T = q.c[0] > 0 ? 1 : -1;
    const Jet speed = sqrt(eps_T > 0 ? q : -q);
    const JVec3 T{V.x1 / speed, V.x2 / speed, V.x3 / speed};
    const JVec3 Tdot = dv_ds(T, speed);
    const Jet a2 = inner(Tdot, Tdot);
    const double ascale = euclid_val(Tdot);
    if (ascale * ascale <= tol::kappa_tol)
        raise(Err::VanishingCurvature, "curvature below tolerance, frame undefined");
    if (std::fabs(a2.c[0]) <= tol::null_tol * (1.0 + ascale * ascale))
        raise(Err::NullPrincipalNormal, "principal normal is null");
    const int eps_N = a2.c[0] > 0 ? 1 : -1;
    const Jet kappa = sqrt(eps_N > 0 ? a2 : -a2);
    if (kappa.c[0] <= tol::kappa_tol)
        raise(Err::VanishingCurvature, "curvature below tolerance, frame undefined");
    const JVec3 N{Tdot.x1 / kappa, Tdot.x2 / kappa, Tdot.x3 / kappa};
    const JVec3 B = cross(N, T);
    const int eta_B = -eps_T * eps_N;
    const JVec3 Ndot = dv_ds(N, speed);
    const Jet tau = inner(Ndot, B) / double(eta_B);
    return {T, N, B, kappa, tau, eps_T, eps_N, eta_B};
}

}  // namespace

FrenetFrame frenet(const Curve3& c, double t0) {
    auto pos = curve_evaluator(c);
    const FrenetJets fj = frenet_jets_fn(pos, t0);
    FrenetFrame f;
    f.T = value(fj.T);
    f.N = value(fj.N);
    f.B = value(fj.B);
    f.kappa = fj.kappa.c[0];
    f.tau = fj.tau.c[0];
    f.epsilon = fj.eps_N;
    f.curve_class = fj.eps_T > 0 ? CausalClass::Spacelike : CausalClass::Timelike;
    return f;
}

FrenetFrame frenet(const FramedCurve& fc, double t0) {
    const FrenetJets fj = frenet_jets_fn(fc.position, t0);
    FrenetFrame f;
    f.T = value(fj.T);
    f.N = value(fj.N);
    f.B = value(fj.B);
    f.kappa = fj.kappa.c[0];
    f.tau = fj.tau.c[0];
    f.epsilon = fj.eps_N;
    f.curve_class = fj.eps_T > 0 ? CausalClass::Spacelike : CausalClass::Timelike;
    return f;
}

SurfaceNormalResult surface_normal(const SurfacePatch& p, double u0, double v0) {
    std::map<std::string, Jet> env{{"u", Jet::variable(u0)}, {"v", Jet::constant(v0)}};
    std::map<std::string, Jet> env_v{{"u", Jet::constant(u0)}, {"v", Jet::variable(v0)}};
    MVec3 su, sv;
    {
        const Jet x = eval_jet_env(p.components[0], env, p.params);
        const Jet y = eval_jet_env(p.components[1], env, p.params);
        const Jet z = eval_jet_env(p.components[2], env, p.params);
        su = {derivative(x, 1), derivative(y, 1), derivative(z, 1)};
    }
    {
        const Jet x = eval_jet_env(p.components[0], env_v, p.params);
        const Jet y = eval_jet_env(p.components[1], env_v, p.params);
        const Jet z = eval_jet_env(p.components[2], env_v, p.params);
        sv = {derivative(x, 1), derivative(y, 1), derivative(z, 1)};
    }
    const MVec3 w = cross(su, sv);
    const CausalClass wc = causal_character(w);
    if (wc == CausalClass::Null ||
        (w.x1 == 0 && w.x2 == 0 && w.x3 == 0))
        raise(Err::DegeneratePatch, "patch normal direction is null or zero");
    const double nrm = mnorm(w);
    if (nrm <= tol::null_tol)
        raise(Err::DegeneratePatch, "patch normal direction is null or zero");
    SurfaceNormalResult out;
    out.n = (1.0 / nrm) * w;
    // spacelike normal <=> timelike surface, and vice versa
    out.surface_class = wc == CausalClass::Spacelike ? CausalClass::Timelike
                                                     : CausalClass::Spacelike;
    return out;
}

FrameJets darboux_jets(const FramedCurve& fc, double t0) {
    FrameJets F;
    F.X = fc.position(t0);
    const JVec3 V = vshift(F.X);
    const Jet q = inner(V, V);
    const double vscale = 1.0 + euclid_val(V) * euclid_val(V);
    if (std::fabs(q.c[0]) <= tol::null_tol * vscale)
        raise(Err::NullVelocity, "curve velocity is null or zero");
    F.eps_T = q.c[0] > 0 ? 1 : -1;
    F.speed = sqrt(F.eps_T > 0 ? q : -q);
    F.T = {V.x1 / F.speed, V.x2 / F.speed, V.x3 / F.speed};

    const UnitJets nu = normalize_jets(fc.normal_raw(t0), Err::DegeneratePatch, "normal field");
    F.n = nu.v;
    F.eps_n = nu.eps;
    if (std::fabs(inner(value(F.n), value(F.T))) > tol::frame_tol)
        raise(Err::FrameSignatureMismatch, "normal field is not orthogonal to the tangent");
    if (F.eps_n == -1 && F.eps_T == -1)
        raise(Err::FrameSignatureMismatch,
              "timelike curve on a spacelike surface fits neither frame signature");

    F.g = cross(F.n, F.T);
    F.eta_g = -F.eps_T * F.eps_n;
    F.Tdot = dv_ds(F.T, F.speed);
    F.gdot = dv_ds(F.g, F.speed);
    F.ndot = dv_ds(F.n, F.speed);

    // Row extraction against the frame derivative equations: this is the
    // convention every pair identity is verified in.
    if (F.eps_n == 1) {  // surface timelike
        const double eps = F.eps_T;
        F.kg = inner(F.Tdot, F.g) / double(F.eta_g);
        F.kn = -eps * inner(F.Tdot, F.n);
        F.taug = inner(F.ndot, F.g) / double(F.eta_g);
    } else {             // surface spacelike, curve spacelike
        F.kg = inner(F.Tdot, F.g);
        F.kn = -1.0 * inner(F.Tdot, F.n);
        F.taug = inner(F.ndot, F.g);
    }

    // Triple-product route: kg = <T, Tdot x n>, taug = <T, n x ndot>. It
    // agrees with the row extraction up to the sign of <g,g>; both values
    // and the two-route disagreement are reported.
    F.eq3_kg = inner(F.T, cross(F.Tdot, F.n)).c[0];
    F.eq3_taug = inner(F.T, cross(F.n, F.ndot)).c[0];
    const double d1 = std::fabs(F.eq3_kg - F.eta_g * F.kg.c[0]);
    const double d2 = std::fabs(F.eq3_taug + F.eta_g * F.taug.c[0]);
    F.path_discrepancy = std::max(d1, d2);
    return F;
}

DarbouxFrame darboux(const FramedCurve& fc, double t0) {
    const FrameJets F = darboux_jets(fc, t0);
    DarbouxFrame d;
    d.T = value(F.T);
    d.g = value(F.g);
    d.n = value(F.n);
    d.kg = F.kg.c[0];
    d.kn = F.kn.c[0];
    d.taug = F.taug.c[0];
    d.surface_class = F.eps_n > 0 ? CausalClass::Timelike : CausalClass::Spacelike;
    d.curve_class = F.eps_T > 0 ? CausalClass::Spacelike : CausalClass::Timelike;
    d.eq3_kg = F.eq3_kg;
    d.eq3_taug = F.eq3_taug;
    d.path_discrepancy = F.path_discrepancy;
    return d;
}

FrameAngle frenet_darboux_angle(const FramedCurve& fc, double t0) {
    const FrameJets D = darboux_jets(fc, t0);
    const FrenetJets Fr = frenet_jets_fn(fc.position, t0);

    // decompose g in the (N, B) basis: g = a N + b B with coefficients
    // a = <g,N>/<N,N>, b = <g,B>/<B,B>
    const Jet a = inner(D.g, Fr.N) / double(Fr.eps_N);
    const Jet b = inner(D.g, Fr.B) / double(Fr.eta_B);
    const Jet adot = dshift(a) / D.speed;
    const Jet bdot = dshift(b) / D.speed;

    FrameAngle out;
    if (D.eps_T == -1) {
        // timelike curve: N, B span a spacelike plane, circular rotation
        out.phi = std::atan2(b.c[0], a.c[0]);
        out.dphi_ds = (a * bdot - b * adot).c[0];
        out.kind = AngleKind::Spacelike;
        out.branch = 1;
        return out;
    }
    // hyperbolic rotation; the pairing depends on which of N, B shares g's
    // causal class: g = br(cosh(phi) N + sinh(phi) B) or with N, B swapped
    if (std::fabs(a.c[0]) >= std::fabs(b.c[0])) {
        out.branch = a.c[0] >= 0 ? 1 : -1;
        out.phi = std::asinh(out.branch * b.c[0]);
        out.dphi_ds = bdot.c[0] / a.c[0];
        out.kind = D.eta_g < 0 ? AngleKind::Hyperbolic : AngleKind::Central;
    } else {
        out.branch = b.c[0] >= 0 ? 1 : -1;
        out.phi = std::asinh(out.branch * a.c[0]);
        out.dphi_ds = adot.c[0] / b.c[0];
        out.kind = AngleKind::LorentzianTimelike;
    }
    return out;
}

LineClassification classify_line(const FramedCurve& fc,
                                 const std::vector<double>& grid, double tol_) {
    LineClassification c;
    for (double t : grid) {
        const FrameJets F = darboux_jets(fc, t);
        c.max_kg = std::max(c.max_kg, std::fabs(F.kg.c[0]));
        c.max_kn = std::max(c.max_kn, std::fabs(F.kn.c[0]));
        c.max_taug = std::max(c.max_taug, std::fabs(F.taug.c[0]));
    }
    c.is_geodesic = c.max_kg < tol_;
    c.is_asymptotic = c.max_kn < tol_;
    c.is_principal = c.max_taug < tol_;
    return c;
}

}  // namespace mink
