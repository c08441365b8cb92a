#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mink/mannheim.hpp"

namespace mink {

struct SceneCurve {
    std::array<std::string, 3> components;
    double lo = 0, hi = 1;
    ParamBindings params;
};

struct SceneSurface {
    std::array<std::string, 3> components;
    ParamBindings params;
};

struct SceneFramed {
    std::string curve;
    // either a direct normal field n(t)...
    std::optional<std::array<std::string, 3>> normal;
    // ...or a surface patch with a parameter-domain curve (u(t), v(t))
    std::optional<std::string> surface;
    std::optional<std::array<std::string, 2>> uv;
};

struct ScenePair {
    std::string framed;
    double lambda = 0;
    int grid = 33;
    // factor applied to lambda during verification only; 1 means none.
    // Used by the negative-control scenes.
    double lambda_mismatch = 1.0;
};

struct Scene {
    ParamBindings params;
    std::map<std::string, SceneCurve> curves;
    std::map<std::string, SceneSurface> surfaces;
    std::map<std::string, SceneFramed> framed;
    std::map<std::string, ScenePair> pairs;
};

/// Built-in named objects: the de Sitter patch, hyperbolic plane, Lorentzian
/// cylinder, spacelike/timelike hyperbolas and helices, and the standard
/// partner pairs used by the test suites.
Scene catalog();

/// Parse a scene file and merge it over the catalog (file entries win).
Scene load_scene_file(const std::string& path);

Curve3 build_curve(const Scene& sc, const std::string& name);
SurfacePatch build_surface(const Scene& sc, const std::string& name);
FramedCurve build_framed(const Scene& sc, const std::string& name);
MannheimPair build_pair(const Scene& sc, const std::string& name);

/// CLI entry points. Diagnostics go to err; structured output goes to out.
/// Exit codes: 0 pass, 1 verification failure, 2 scene error, 3 frame
/// error, 4 pair-construction error.
int cmd_frames(const Scene& sc, const std::string& framed_name, int samples,
               bool frenet_mode, std::ostream& out, std::ostream& err);
int cmd_classify(const Scene& sc, const std::string& framed_name, double tol,
                 std::ostream& out, std::ostream& err);
int cmd_construct(const Scene& sc, const std::string& pair_name,
                  std::ostream& out, std::ostream& err);
int cmd_verify(const Scene& sc, const std::string& pair_name,
               const std::vector<std::string>& relations, double tol,
               std::ostream& out, std::ostream& err);

int exit_code_for(Err code);

/// Fixed 12-decimal CSV cell with negative-zero snapped to zero.
std::string format12(double v);

}  // namespace mink
