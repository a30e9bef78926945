/*
 * winsamp CLI: bound / reconstruct / sweep / ppcheck.
 *
 * Configuration comes from an optional flat key=value file plus repeatable
 * --set KEY=VALUE overrides; --grid LO:HI:STEP adds one grid axis per use.
 */

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "winsamp/harness.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::string seed;
    std::vector<std::string> overrides;
    std::vector<std::string> grid_axes;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "flat key=value config file");
    sub->add_option("--out", args.out_dir, "output directory for artifacts");
    sub->add_option("--seed", args.seed, "jitter seed (u64), overrides jitter.seed");
    sub->add_option("--set", args.overrides, "override KEY=VALUE (repeatable)");
    sub->add_option("--grid", args.grid_axes, "grid axis LO:HI:STEP (repeatable)");
}

int dispatch(const std::string& mode, const CommonArgs& args) {
    try {
        winsamp::Config cfg = args.config_path.empty()
                                  ? winsamp::Config()
                                  : winsamp::Config::from_file(args.config_path);
        for (const auto& kv : args.overrides) cfg.apply_override(kv);
        if (!args.out_dir.empty()) cfg.set("out", args.out_dir);
        if (!args.seed.empty()) cfg.set("jitter.seed", args.seed);
        if (!args.grid_axes.empty()) {
            std::string joined;
            for (const auto& a : args.grid_axes) {
                if (!joined.empty()) joined += ";";
                joined += a;
            }
            cfg.set("grid", joined);
        }
        return winsamp::run(mode, cfg, std::cout, std::cerr);
    } catch (const winsamp::ConfigError& e) {
        std::cerr << "{\"error\":\"config\",\"message\":\"" << e.what() << "\"}\n";
        return winsamp::exit_config_error;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"windowed irregular-sampling reconstruction and truncation bounds"};
    app.require_subcommand(1);

    CommonArgs bound_args, rec_args, sweep_args, pp_args;
    add_common(app.add_subcommand("bound", "evaluate the truncation bound K_delta"), bound_args);
    add_common(app.add_subcommand("reconstruct", "measure truncation error on a grid"), rec_args);
    add_common(app.add_subcommand("sweep", "sweep one parameter, one summary row per value"),
               sweep_args);
    add_common(app.add_subcommand("ppcheck", "empirical Plancherel-Polya inequality check"),
               pp_args);

    CLI11_PARSE(app, argc, argv);

    const CLI::App* sub = app.get_subcommands().front();
    const std::string mode = sub->get_name();
    if (mode == "bound") return dispatch(mode, bound_args);
    if (mode == "reconstruct") return dispatch(mode, rec_args);
    if (mode == "sweep") return dispatch(mode, sweep_args);
    return dispatch(mode, pp_args);
}
