#include "mink/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mink {

using ordered_json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCurveVars{"t"};
const std::vector<std::string> kSurfaceVars{"u", "v"};

Expr parse_or_scene_error(const std::string& src,
                          const std::vector<std::string>& vars,
                          const std::string& where) {
    try {
        return parse(src, vars);
    } catch (const Error& e) {
        raise(Err::SceneError, where + ": " + e.what());
    }
}

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::stod(buf);
}

}  // namespace

std::string format12(double v) {
    if (std::fabs(v) < 5e-13) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

int exit_code_for(Err code) {
    switch (code) {
        case Err::SceneError:
        case Err::SyntaxError:
        case Err::UnknownIdentifier:
            return 2;
        case Err::LambdaZero:
        case Err::OffsetSingular:
        case Err::UnclassifiableType:
        case Err::CausalDrift:
        case Err::ThetaDegenerate:
        case Err::NotAsymptotic:
            return 4;
        default:
            return 3;
    }
}

Scene catalog() {
    Scene sc;
    const double two_pi = 6.283185307179586;

    auto curve = [&](const std::string& name, std::array<std::string, 3> c,
                     double lo, double hi) {
        sc.curves[name] = SceneCurve{std::move(c), lo, hi, {}};
    };
    curve("circle_unit", {"0", "cos(t)", "sin(t)"}, 0, two_pi);
    curve("cyl_hyperbola", {"sinh(t)", "cosh(t)", "0"}, 0, 1.2);
    curve("cyl_helix", {"sinh(t)", "cosh(t)", "1.4*t"}, 0, 1.2);
    curve("cyl_flex", {"sinh(t)", "cosh(t)", "1.5*t+0.2*sin(t)"}, 0, 1.2);
    curve("cyl_helix_t2", {"sinh(t)", "cosh(t)", "0.6*t"}, 0, 1.2);
    curve("cyl_helix_time", {"sinh(t)", "cosh(t)", "0.5*t"}, 0, 1.2);
    curve("tl_hyperbola", {"sinh(t)", "cosh(t)", "0"}, -1, 1);
    curve("hp_geodesic", {"cosh(t)", "sinh(t)", "0"}, -1, 1);
    curve("sp_helix", {"0.5*t", "1.5*cos(t)", "1.5*sin(t)"}, 0, two_pi);
    curve("hplane_circle", {"cosh(0.8)", "sinh(0.8)*cos(t)", "sinh(0.8)*sin(t)"}, 0, two_pi);
    curve("desitter_cap", {"sinh(0.75)", "cosh(0.75)*cos(t)", "cosh(0.75)*sin(t)"}, 0, two_pi);
    curve("line", {"0", "t", "0"}, 0, 1);

    sc.surfaces["desitter"] =
        SceneSurface{{"sinh(u)", "cosh(u)*cos(v)", "cosh(u)*sin(v)"}, {}};
    sc.surfaces["hplane"] =
        SceneSurface{{"cosh(u)", "sinh(u)*cos(v)", "sinh(u)*sin(v)"}, {}};
    sc.surfaces["lcylinder"] = SceneSurface{{"sinh(u)", "cosh(u)", "v"}, {}};
    sc.surfaces["spacelike_plane"] = SceneSurface{{"0", "u", "v"}, {}};

    auto patch = [&](const std::string& name, const std::string& curve_name,
                     const std::string& surface_name, std::array<std::string, 2> uv) {
        SceneFramed f;
        f.curve = curve_name;
        f.surface = surface_name;
        f.uv = std::move(uv);
        sc.framed[name] = std::move(f);
    };
    auto direct = [&](const std::string& name, const std::string& curve_name,
                      std::array<std::string, 3> n) {
        SceneFramed f;
        f.curve = curve_name;
        f.normal = std::move(n);
        sc.framed[name] = std::move(f);
    };
    direct("equator", "circle_unit", {"0", "cos(t)", "sin(t)"});
    patch("plane_circle", "circle_unit", "spacelike_plane", {"cos(t)", "sin(t)"});
    direct("osc_plane_circle", "circle_unit", {"-1", "0", "0"});
    direct("tl_hyperbola", "tl_hyperbola", {"sinh(t)", "cosh(t)", "0"});
    direct("hplane_geodesic", "hp_geodesic", {"cosh(t)", "sinh(t)", "0"});
    direct("helix_binormal", "sp_helix", {"-1.5", "0.5*sin(t)", "-0.5*cos(t)"});
    direct("line_on_plane", "line", {"0", "0", "1"});
    patch("cyl_hyperbola", "cyl_hyperbola", "lcylinder", {"t", "0"});
    patch("cyl_helix", "cyl_helix", "lcylinder", {"t", "1.4*t"});
    patch("cyl_flex", "cyl_flex", "lcylinder", {"t", "1.5*t+0.2*sin(t)"});
    patch("cyl_helix_t2", "cyl_helix_t2", "lcylinder", {"t", "0.6*t"});
    patch("cyl_helix_time", "cyl_helix_time", "lcylinder", {"t", "0.5*t"});
    patch("hplane_circle", "hplane_circle", "hplane", {"0.8", "t"});
    patch("desitter_cap", "desitter_cap", "desitter", {"0.75", "t"});

    auto pair = [&](const std::string& name, const std::string& framed_name,
                    double lambda, double mismatch = 1.0) {
        ScenePair p;
        p.framed = framed_name;
        p.lambda = lambda;
        p.lambda_mismatch = mismatch;
        sc.pairs[name] = std::move(p);
    };
    pair("pair_type1_equator", "equator", 0.5);
    pair("pair_type1_helix", "cyl_helix", 0.3);
    pair("pair_type1_flex", "cyl_flex", 0.15);
    pair("pair_type2_helix", "cyl_helix_t2", -0.8);
    pair("pair_type3_hyperbola", "cyl_hyperbola", 0.3);
    pair("pair_type3_helix", "cyl_helix_time", 0.25);
    pair("pair_type4_helix", "cyl_helix", 0.8);
    pair("pair_type5_plane", "plane_circle", 0.4);
    pair("pair_type5_hplane", "hplane_circle", 0.4);
    pair("pair_equator_lambda0", "equator", 0.0);
    pair("pair_equator_singular", "equator", -1.0);
    pair("pair_equator_perturbed", "equator", 0.5, 1.01);
    pair("pair_flex_perturbed", "cyl_flex", 0.15, 1.01);
    return sc;
}

namespace {

ParamBindings parse_params(const ordered_json& j) {
    ParamBindings p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number())
            raise(Err::SceneError, "parameter '" + it.key() + "' must be a number");
        p[it.key()] = it.value().get<double>();
    }
    return p;
}

std::array<std::string, 3> parse_components(const ordered_json& j,
                                            const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        raise(Err::SceneError, where + ": components must be an array of 3 strings");
    std::array<std::string, 3> out;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_string())
            raise(Err::SceneError, where + ": components must be strings");
        out[i] = j[i].get<std::string>();
    }
    return out;
}

}  // namespace

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Err::SceneError, "cannot open scene file '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        raise(Err::SceneError, std::string("scene JSON parse failure: ") + e.what());
    }
    Scene sc = catalog();
    if (j.contains("params")) {
        for (auto& [k, v] : parse_params(j["params"])) sc.params[k] = v;
    }
    if (j.contains("curves")) {
        for (auto it = j["curves"].begin(); it != j["curves"].end(); ++it) {
            const auto& cj = it.value();
            SceneCurve c;
            c.components = parse_components(cj.at("components"), "curve " + it.key());
            if (!cj.contains("domain") || !cj["domain"].is_array() ||
                cj["domain"].size() != 2)
                raise(Err::SceneError, "curve " + it.key() + ": domain must be [lo, hi]");
            c.lo = cj["domain"][0].get<double>();
            c.hi = cj["domain"][1].get<double>();
            if (!(c.lo < c.hi))
                raise(Err::SceneError, "curve " + it.key() + ": empty domain");
            if (cj.contains("params")) c.params = parse_params(cj["params"]);
            sc.curves[it.key()] = std::move(c);
        }
    }
    if (j.contains("surfaces")) {
        for (auto it = j["surfaces"].begin(); it != j["surfaces"].end(); ++it) {
            SceneSurface s;
            s.components =
                parse_components(it.value().at("components"), "surface " + it.key());
            if (it.value().contains("params"))
                s.params = parse_params(it.value()["params"]);
            sc.surfaces[it.key()] = std::move(s);
        }
    }
    if (j.contains("framed")) {
        for (auto it = j["framed"].begin(); it != j["framed"].end(); ++it) {
            const auto& fj = it.value();
            SceneFramed f;
            if (!fj.contains("curve"))
                raise(Err::SceneError, "framed " + it.key() + ": missing curve");
            f.curve = fj["curve"].get<std::string>();
            if (fj.contains("normal")) {
                f.normal = parse_components(fj["normal"], "framed " + it.key());
            } else if (fj.contains("surface") && fj.contains("uv")) {
                f.surface = fj["surface"].get<std::string>();
                const auto& uv = fj["uv"];
                if (!uv.is_array() || uv.size() != 2)
                    raise(Err::SceneError, "framed " + it.key() + ": uv must be 2 strings");
                f.uv = {uv[0].get<std::string>(), uv[1].get<std::string>()};
            } else {
                raise(Err::SceneError,
                      "framed " + it.key() + ": needs either normal or surface+uv");
            }
            sc.framed[it.key()] = std::move(f);
        }
    }
    if (j.contains("pairs")) {
        for (auto it = j["pairs"].begin(); it != j["pairs"].end(); ++it) {
            const auto& pj = it.value();
            ScenePair p;
            if (!pj.contains("framed") || !pj.contains("lambda"))
                raise(Err::SceneError, "pair " + it.key() + ": needs framed and lambda");
            p.framed = pj["framed"].get<std::string>();
            p.lambda = pj["lambda"].get<double>();
            if (pj.contains("grid")) p.grid = pj["grid"].get<int>();
            if (pj.contains("lambda_mismatch"))
                p.lambda_mismatch = pj["lambda_mismatch"].get<double>();
            sc.pairs[it.key()] = std::move(p);
        }
    }
    return sc;
}

Curve3 build_curve(const Scene& sc, const std::string& name) {
    auto it = sc.curves.find(name);
    if (it == sc.curves.end())
        raise(Err::SceneError, "unknown curve '" + name + "'");
    Curve3 c;
    for (int i = 0; i < 3; ++i)
        c.components[i] =
            parse_or_scene_error(it->second.components[i], kCurveVars, "curve " + name);
    c.t_lo = it->second.lo;
    c.t_hi = it->second.hi;
    c.params = sc.params;
    for (auto& [k, v] : it->second.params) c.params[k] = v;
    return c;
}

SurfacePatch build_surface(const Scene& sc, const std::string& name) {
    auto it = sc.surfaces.find(name);
    if (it == sc.surfaces.end())
        raise(Err::SceneError, "unknown surface '" + name + "'");
    SurfacePatch p;
    for (int i = 0; i < 3; ++i)
        p.components[i] = parse_or_scene_error(it->second.components[i], kSurfaceVars,
                                               "surface " + name);
    p.params = sc.params;
    for (auto& [k, v] : it->second.params) p.params[k] = v;
    return p;
}

FramedCurve build_framed(const Scene& sc, const std::string& name) {
    auto it = sc.framed.find(name);
    if (it == sc.framed.end())
        raise(Err::SceneError, "unknown framed curve '" + name + "'");
    const SceneFramed& f = it->second;
    const Curve3 c = build_curve(sc, f.curve);
    FramedCurve fc;
    if (f.normal) {
        std::array<Expr, 3> n;
        for (int i = 0; i < 3; ++i)
            n[i] = parse_or_scene_error((*f.normal)[i], kCurveVars, "framed " + name);
        fc = framed_from_exprs(c, n);
    } else {
        const SurfacePatch p = build_surface(sc, *f.surface);
        const Expr u = parse_or_scene_error((*f.uv)[0], kCurveVars, "framed " + name);
        const Expr v = parse_or_scene_error((*f.uv)[1], kCurveVars, "framed " + name);
        fc = framed_from_patch(c, p, u, v);
    }
    fc.label = name;
    return fc;
}

MannheimPair build_pair(const Scene& sc, const std::string& name) {
    auto it = sc.pairs.find(name);
    if (it == sc.pairs.end())
        raise(Err::SceneError, "unknown pair '" + name + "'");
    const FramedCurve fc = build_framed(sc, it->second.framed);
    MannheimPair p = construct_pair(fc, it->second.lambda, it->second.grid);
    p.lambda_verify = it->second.lambda * it->second.lambda_mismatch;
    return p;
}

int cmd_frames(const Scene& sc, const std::string& framed_name, int samples,
               bool frenet_mode, std::ostream& out, std::ostream& err) {
    try {
        const FramedCurve fc = build_framed(sc, framed_name);
        const std::vector<double> grid = make_grid(fc.t_lo, fc.t_hi, samples);
        if (frenet_mode)
            out << "t,s,ds_dt,Tx,Ty,Tz,Nx,Ny,Nz,Bx,By,Bz,kappa,tau\n";
        else
            out << "t,s,ds_dt,Tx,Ty,Tz,gx,gy,gz,nx,ny,nz,kg,kn,taug\n";
        double s_acc = 0;
        double t_prev = fc.t_lo;
        for (double t : grid) {
            s_acc += arc_length(fc.position, t_prev, t, 16);
            t_prev = t;
            const double ds_dt =
                mnorm(value(jet_dt(fc.position(t))));
            std::vector<double> cells{t, s_acc, ds_dt};
            if (frenet_mode) {
                const FrenetFrame f = frenet(fc, t);
                for (double v : {f.T.x1, f.T.x2, f.T.x3, f.N.x1, f.N.x2, f.N.x3,
                                 f.B.x1, f.B.x2, f.B.x3, f.kappa, f.tau})
                    cells.push_back(v);
            } else {
                const DarbouxFrame d = darboux(fc, t);
                for (double v : {d.T.x1, d.T.x2, d.T.x3, d.g.x1, d.g.x2, d.g.x3,
                                 d.n.x1, d.n.x2, d.n.x3, d.kg, d.kn, d.taug})
                    cells.push_back(v);
            }
            for (size_t i = 0; i < cells.size(); ++i)
                out << (i ? "," : "") << format12(cells[i]);
            out << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code);
    }
}

int cmd_classify(const Scene& sc, const std::string& framed_name, double tol_,
                 std::ostream& out, std::ostream& err) {
    try {
        const FramedCurve fc = build_framed(sc, framed_name);
        const LineClassification c =
            classify_line(fc, make_grid(fc.t_lo, fc.t_hi, 33), tol_);
        ordered_json j;
        j["geodesic"] = c.is_geodesic;
        j["asymptotic"] = c.is_asymptotic;
        j["principal"] = c.is_principal;
        out << j.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code);
    }
}

int cmd_construct(const Scene& sc, const std::string& pair_name,
                  std::ostream& out, std::ostream& err) {
    try {
        const MannheimPair p = build_pair(sc, pair_name);
        out << pair_type_name(p.type) << "\n";
        out << "s1,s,ds_ds1,theta,kg,kn,taug,kg1,kn1,taug1\n";
        for (double t : p.grid) {
            const PairSample s = pair_sample(p, t);
            const double cells[] = {s.s1, s.s, s.ds_ds1, s.theta, s.kg, s.kn,
                                    s.taug, s.kg1, s.kn1, s.taug1};
            for (size_t i = 0; i < 10; ++i)
                out << (i ? "," : "") << format12(cells[i]);
            out << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code);
    }
}

int cmd_verify(const Scene& sc, const std::string& pair_name,
               const std::vector<std::string>& relations, double tol_,
               std::ostream& out, std::ostream& err) {
    try {
        const MannheimPair p = build_pair(sc, pair_name);
        std::vector<VerificationReport> reports;
        auto want = [&](const std::string& r) {
            return relations.empty() ||
                   std::find(relations.begin(), relations.end(), r) != relations.end();
        };
        for (const std::string& r :
             {std::string("thm4.1"), std::string("thm4.2"), std::string("thm4.3"),
              std::string("corollaries"), std::string("special")}) {
            if (!want(r)) continue;
            std::vector<VerificationReport> part;
            if (r == "thm4.1") part = verify_thm41(p, p.grid, tol_);
            else if (r == "thm4.2") part = verify_thm42(p, p.grid, tol_);
            else if (r == "thm4.3") part = verify_thm43(p, p.grid, tol_);
            else if (r == "corollaries") part = verify_corollaries(p, p.grid, tol_);
            else {
                try {
                    part = verify_special_asymptotic(p, p.grid, tol_);
                } catch (const Error& e) {
                    if (e.code != Err::NotAsymptotic) throw;
                    VerificationReport rep;
                    rep.relation_id = "special";
                    rep.tolerance = tol_;
                    rep.pass = false;
                    rep.sign_variant_used = SignVariant::NotApplicable;
                    rep.note = std::string("precondition failed: ") + e.what();
                    part.push_back(std::move(rep));
                }
            }
            for (auto& rep : part) reports.push_back(std::move(rep));
        }
        for (const std::string& r : relations) {
            if (r != "thm4.1" && r != "thm4.2" && r != "thm4.3" &&
                r != "corollaries" && r != "special")
                raise(Err::SceneError, "unknown relation group '" + r + "'");
        }
        bool all_pass = true;
        ordered_json j;
        j["pair"] = pair_name;
        j["type"] = pair_type_name(p.type);
        j["lambda"] = round12(p.lambda);
        j["tolerance"] = round12(tol_);
        j["relations"] = ordered_json::array();
        for (const auto& rep : reports) {
            all_pass = all_pass && rep.pass;
            ordered_json rj;
            rj["relation_id"] = rep.relation_id;
            rj["max_abs_residual"] = round12(rep.max_abs_residual);
            rj["tolerance"] = round12(rep.tolerance);
            rj["pass"] = rep.pass;
            rj["sign_variant_used"] = sign_variant_name(rep.sign_variant_used);
            if (!rep.note.empty()) rj["note"] = rep.note;
            ordered_json res = ordered_json::array();
            for (double v : rep.residuals) res.push_back(round12(v));
            rj["residuals"] = std::move(res);
            j["relations"].push_back(std::move(rj));
        }
        j["pass"] = all_pass;
        out << j.dump(2) << "\n";
        return all_pass ? 0 : 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code);
    }
}

}  // namespace mink
