#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mink/scene.hpp"

namespace {

struct CommonOpts {
    std::string scene_path;
    std::string out_path;
    double tol = 1e-7;
    int samples = 33;
};

int run_with_output(const std::string& out_path,
                    const std::function<int(std::ostream&)>& fn) {
    if (out_path.empty()) return fn(std::cout);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file '" << out_path << "'\n";
        return 2;
    }
    return fn(out);
}

mink::Scene load_or_catalog(const std::string& path, int& rc) {
    rc = 0;
    if (path.empty()) return mink::catalog();
    try {
        return mink::load_scene_file(path);
    } catch (const mink::Error& e) {
        std::cerr << e.what() << "\n";
        rc = mink::exit_code_for(e.code);
        return {};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frenet/Darboux frame toolkit for curves on surfaces in "
                 "Minkowski 3-space, with Mannheim partner pair construction "
                 "and identity verification"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string name;
    bool frenet_mode = false;
    std::string relations_csv;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scene", o.scene_path, "scene file (merged over the catalog)");
        cmd->add_option("--out", o.out_path, "output path (default: standard output)");
    };

    CLI::App* frames = app.add_subcommand("frames", "export frame samples as CSV");
    frames->add_option("--name", name, "framed curve name")->required();
    frames->add_option("--samples", o.samples, "number of samples");
    frames->add_flag("--frenet", frenet_mode, "export the Frenet frame instead");
    add_common(frames);

    CLI::App* classify = app.add_subcommand("classify", "geodesic/asymptotic/principal flags");
    classify->add_option("--name", name, "framed curve name")->required();
    classify->add_option("--tol", o.tol, "classification tolerance");
    add_common(classify);

    CLI::App* construct = app.add_subcommand("construct", "materialize a partner pair");
    construct->add_option("--name", name, "pair name")->required();
    add_common(construct);

    CLI::App* verify = app.add_subcommand("verify", "run identity verifiers on a pair");
    verify->add_option("--name", name, "pair name")->required();
    verify->add_option("--relations", relations_csv,
                       "comma-separated subset of thm4.1,thm4.2,thm4.3,corollaries,special");
    verify->add_option("--tol", o.tol, "verification tolerance");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_rc = app.exit(e);
        return cli_rc == 0 ? 0 : 2;
    }

    int rc = 0;
    const mink::Scene sc = load_or_catalog(o.scene_path, rc);
    if (rc) return rc;

    if (frames->parsed())
        return run_with_output(o.out_path, [&](std::ostream& out) {
            return mink::cmd_frames(sc, name, o.samples, frenet_mode, out, std::cerr);
        });
    if (classify->parsed())
        return run_with_output(o.out_path, [&](std::ostream& out) {
            return mink::cmd_classify(sc, name, o.tol, out, std::cerr);
        });
    if (construct->parsed())
        return run_with_output(o.out_path, [&](std::ostream& out) {
            return mink::cmd_construct(sc, name, out, std::cerr);
        });
    if (verify->parsed()) {
        std::vector<std::string> relations;
        std::stringstream ss(relations_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) relations.push_back(item);
        return run_with_output(o.out_path, [&](std::ostream& out) {
            return mink::cmd_verify(sc, name, relations, o.tol, out, std::cerr);
        });
    }
    return 2;
}
