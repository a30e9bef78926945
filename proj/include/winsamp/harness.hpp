#ifndef WINSAMP_HARNESS_HPP
#define WINSAMP_HARNESS_HPP

/*
 * Experiment modes tying the modules together: bound-only evaluation,
 * reconstruction with certification, parameter sweeps and the empirical
 * Plancherel-Polya check.  Each mode is a pure function of the parsed
 * config (plus the seed inside it), so re-running a config reproduces the
 * artifacts byte for byte.
 *
 * Exit codes: 0 success, 1 config error, 2 domain/precondition error,
 * 3 certified-inequality violation.
 */

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "winsamp/config.hpp"
#include "winsamp/report.hpp"

namespace winsamp {

enum ExitCode : int {
    exit_ok = 0,
    exit_config_error = 1,
    exit_domain_error = 2,
    exit_inequality_violation = 3,
};

namespace harness_detail {

inline nlohmann::json config_echo(const Config& cfg) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : cfg.entries()) j[k] = v;
    return j;
}

inline JitterSpec jitter_from_config(const Config& cfg, int d) {
    JitterSpec jit;
    jit.kind = jitter_kind_from_string(cfg.get("jitter.kind", "constant"));
    if (jit.kind == JitterKind::custom)
        throw ConfigError("jitter.kind=custom is not configurable from files");
    jit.amplitudes = cfg.has("jitter.M") ? cfg.get_doubles("jitter.M")
                                         : std::vector<double>(static_cast<std::size_t>(d), 0.0);
    if (jit.amplitudes.size() == 1 && d > 1)
        jit.amplitudes.assign(static_cast<std::size_t>(d), jit.amplitudes[0]);
    if (static_cast<int>(jit.amplitudes.size()) != d)
        throw ConfigError("jitter.M: expected " + std::to_string(d) + " amplitudes");
    jit.seed = cfg.get_u64("jitter.seed", 0);
    return jit;
}

inline Signal signal_from_config(const Config& cfg, double q) {
    return make_signal(cfg.get("signal.kind", "sinc_power"),
                       cfg.has("signal.params") ? cfg.get_doubles("signal.params")
                                                : std::vector<double>{1.0},
                       q);
}

inline GridSpec grid_from_config(const Config& cfg, int d) {
    GridSpec g;
    std::stringstream ss(cfg.get("grid"));
    std::string axis;
    while (std::getline(ss, axis, ';')) {
        double lo = 0, hi = 0, step = 0;
        if (std::sscanf(axis.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
            throw ConfigError("grid axis must be LO:HI:STEP, got: " + axis);
        g.lo.push_back(lo);
        g.hi.push_back(hi);
        g.step.push_back(step);
    }
    if (g.dimension() == 1 && d > 1) {
        g.lo.assign(static_cast<std::size_t>(d), g.lo[0]);
        g.hi.assign(static_cast<std::size_t>(d), g.hi[0]);
        g.step.assign(static_cast<std::size_t>(d), g.step[0]);
    }
    if (g.dimension() != d) throw ConfigError("grid: expected " + std::to_string(d) + " axes");
    return g;
}

inline std::vector<long long> radii_from_config(const Config& cfg, int d) {
    std::vector<long long> n = cfg.get_ints("N");
    if (n.size() == 1 && d > 1) n.assign(static_cast<std::size_t>(d), n[0]);
    if (static_cast<int>(n.size()) != d)
        throw ConfigError("N: expected " + std::to_string(d) + " radii");
    return n;
}

inline void maybe_write(const Config& cfg, const std::string& name, const std::string& body) {
    if (!cfg.has("out")) return;
    const std::filesystem::path dir(cfg.get("out"));
    std::filesystem::create_directories(dir);
    write_file((dir / name).string(), body);
}

} // namespace harness_detail

/// Mode bound-only: emit the BoundBreakdown JSON for the configured inputs.
inline int run_bound(const Config& cfg, std::ostream& os) {
    const int d = static_cast<int>(cfg.get_int("d", 1));
    BoundInputs in;
    in.d = d;
    in.q = cfg.get_double("q");
    in.radii = harness_detail::radii_from_config(cfg, d);
    in.jitter = cfg.has("M") ? cfg.get_doubles("M")
                             : std::vector<double>(static_cast<std::size_t>(d), 0.0);
    if (in.jitter.size() == 1 && d > 1) in.jitter.assign(static_cast<std::size_t>(d), in.jitter[0]);
    if (cfg.has("delta")) {
        in.delta = cfg.get_doubles("delta");
        if (in.delta.size() == 1 && d > 1) in.delta.assign(static_cast<std::size_t>(d), in.delta[0]);
    } else {
        in.delta.resize(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            in.delta[static_cast<std::size_t>(j)] = 1.0 - 2.0 * in.jitter[static_cast<std::size_t>(j)];
    }
    const BoundBreakdown b = k_bound(in);
    nlohmann::json j = breakdown_to_json(b);
    j["schema_version"] = kReportSchemaVersion;
    j["config"] = harness_detail::config_echo(cfg);
    const std::string body = j.dump(2) + "\n";
    os << body;
    harness_detail::maybe_write(cfg, "bound.json", body);
    return exit_ok;
}

/// Mode reconstruct: measure the truncation error over the grid and, unless
/// certification is disabled or inadmissible, check it against the bound.
inline int run_reconstruct(const Config& cfg, std::ostream& os) {
    const int d = static_cast<int>(cfg.get_int("d", 1));
    const double q = cfg.get_double("q", 2.0);
    ReconstructionRequest req{harness_detail::signal_from_config(cfg, q),
                              harness_detail::radii_from_config(cfg, d),
                              harness_detail::jitter_from_config(cfg, d),
                              harness_detail::grid_from_config(cfg, d)};
    if (req.signal.dimension() != d)
        throw ConfigError("signal dimension does not match d");
    req.q = q;
    req.certify = cfg.get_int("certify", 1) != 0;
    req.quadrature.radius = cfg.get_double("quad.radius", req.quadrature.radius);
    req.quadrature.nodes_per_unit =
        static_cast<int>(cfg.get_int("quad.nodes_per_unit", req.quadrature.nodes_per_unit));

    const ErrorReport rep = measure_error(req);

    std::ostringstream csv;
    write_residual_csv(rep, d, csv);
    const std::string json_body = report_to_json(rep, harness_detail::config_echo(cfg)).dump(2) + "\n";
    os << json_body;
    harness_detail::maybe_write(cfg, "report.csv", csv.str());
    harness_detail::maybe_write(cfg, "report.json", json_body);

    if (rep.certified && rep.sup_error > rep.certified_bound) return exit_inequality_violation;
    return exit_ok;
}

/// Mode pp-check: empirical Plancherel-Polya ratio
/// sum |f(t_n)|^q / (B_{d,q} ||f||_q^q) over |n_j| <= radius, must be <= 1.
inline int run_ppcheck(const Config& cfg, std::ostream& os) {
    const int d = static_cast<int>(cfg.get_int("d", 1));
    const double q = cfg.get_double("q", 2.0);
    const long long radius = cfg.get_int("pp.radius", 1000);
    const Signal f = harness_detail::signal_from_config(cfg, q);
    if (f.dimension() != d) throw ConfigError("signal dimension does not match d");
    const JitterSpec jit = harness_detail::jitter_from_config(cfg, d);

    // One global window: every sampled index carries jitter.
    const NodeSet ns(std::vector<double>(static_cast<std::size_t>(d), 0.0),
                     std::vector<long long>(static_cast<std::size_t>(d), radius), jit);

    StableSum sum;
    std::vector<long long> idx(static_cast<std::size_t>(d), -radius);
    std::vector<double> t(static_cast<std::size_t>(d));
    while (true) {
        for (int j = 0; j < d; ++j)
            t[static_cast<std::size_t>(j)] = ns.node(j, idx[static_cast<std::size_t>(j)]);
        sum.add(std::pow(std::abs(f(t)), q));
        int j = d - 1;
        while (j >= 0) {
            if (++idx[static_cast<std::size_t>(j)] <= radius) break;
            idx[static_cast<std::size_t>(j)] = -radius;
            --j;
        }
        if (j < 0) break;
    }

    QuadratureSpec quad;
    quad.radius = cfg.get_double("quad.radius", quad.radius);
    quad.nodes_per_unit = static_cast<int>(cfg.get_int("quad.nodes_per_unit", quad.nodes_per_unit));
    const double norm_q = std::pow(lq_norm(f, q, quad).upper(), q);

    std::vector<double> delta(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        delta[static_cast<std::size_t>(j)] = 1.0 - 2.0 * jit.amplitudes[static_cast<std::size_t>(j)];
    const double b = pp_constant_multi(q, delta, f.exponential_type());
    const double ratio = sum.value() / (b * norm_q);

    nlohmann::json j{{"schema_version", kReportSchemaVersion},
                     {"sample_sum", sum.value()},
                     {"pp_constant", b},
                     {"norm_upper_q", norm_q},
                     {"ratio", ratio},
                     {"config", harness_detail::config_echo(cfg)}};
    const std::string body = j.dump(2) + "\n";
    os << body;
    harness_detail::maybe_write(cfg, "ppcheck.json", body);
    return ratio <= 1.0 ? exit_ok : exit_inequality_violation;
}

/// Mode sweep: vary one scalar config key over a value list, one summary row
/// per value (bound decay / slope studies).
inline int run_sweep(const Config& cfg, std::ostream& os) {
    const std::string key = cfg.get("sweep.key");
    const std::vector<double> values = cfg.get_doubles("sweep.values");
    const bool with_reconstruct = cfg.get("sweep.mode", "bound") == "reconstruct";

    std::ostringstream csv;
    csv << key << ",k_delta" << (with_reconstruct ? ",sup_error,tightness" : "") << "\n";
    int worst = exit_ok;
    for (double v : values) {
        Config point = cfg;
        std::ostringstream vs;
        vs.precision(17);
        vs << v;
        point.set(key, vs.str());

        std::ostringstream sink;
        const int d = static_cast<int>(point.get_int("d", 1));
        const double q = point.get_double("q", 2.0);
        BoundInputs in;
        in.d = d;
        in.q = q;
        in.radii = harness_detail::radii_from_config(point, d);
        const JitterSpec jit = harness_detail::jitter_from_config(point, d);
        in.jitter = jit.amplitudes;
        in.delta.resize(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            in.delta[static_cast<std::size_t>(j)] = 1.0 - 2.0 * in.jitter[static_cast<std::size_t>(j)];
        const double k = k_bound(in).k_delta;

        csv << format_double(v) << "," << format_double(k);
        if (with_reconstruct) {
            const int rc = run_reconstruct(point, sink);
            worst = std::max(worst, rc);
            const nlohmann::json rep = nlohmann::json::parse(sink.str());
            csv << "," << format_double(rep["sup_error"].get<double>()) << ","
                << format_double(rep.value("tightness", 0.0));
        }
        csv << "\n";
    }
    os << csv.str();
    harness_detail::maybe_write(cfg, "sweep.csv", csv.str());
    return worst;
}

/// Dispatch on mode with the documented exit-code contract.
inline int run(const std::string& mode, const Config& cfg, std::ostream& os,
               std::ostream& err) {
    try {
        if (mode == "bound") return run_bound(cfg, os);
        if (mode == "reconstruct") return run_reconstruct(cfg, os);
        if (mode == "sweep") return run_sweep(cfg, os);
        if (mode == "ppcheck") return run_ppcheck(cfg, os);
        throw ConfigError("unknown mode: " + mode);
    } catch (const ConfigError& e) {
        err << nlohmann::json{{"error", "config"}, {"message", e.what()}}.dump() << "\n";
        return exit_config_error;
    } catch (const std::invalid_argument& e) {
        err << nlohmann::json{{"error", "config"}, {"message", e.what()}}.dump() << "\n";
        return exit_config_error;
    } catch (const std::domain_error& e) {
        err << nlohmann::json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
        return exit_domain_error;
    }
}

} // namespace winsamp

#endif
