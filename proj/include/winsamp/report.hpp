#ifndef WINSAMP_REPORT_HPP
#define WINSAMP_REPORT_HPP

/*
 * CSV / JSON emission.  All floating-point output carries 17 significant
 * digits so that re-parsing round-trips bit-exactly.
 */

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "winsamp/bounds.hpp"
#include "winsamp/reconstruct.hpp"

namespace winsamp {

inline constexpr int kReportSchemaVersion = 1;

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline nlohmann::json breakdown_to_json(const BoundBreakdown& b) {
    return nlohmann::json{{"c1", b.c1},
                          {"c2", b.c2},
                          {"c3", b.c3},
                          {"c4", b.c4},
                          {"a_p", b.a_p},
                          {"b_q", b.b_q},
                          {"k_delta", b.k_delta},
                          {"log_k_delta", b.log_k_delta}};
}

/// CSV: one row per grid point, columns x1..xd,f,Y,residual.
inline void write_residual_csv(const ErrorReport& rep, int d, std::ostream& os) {
    for (int j = 1; j <= d; ++j) os << "x" << j << ",";
    os << "f,Y,residual\n";
    for (const auto& row : rep.residuals) {
        for (double xj : row.x) os << format_double(xj) << ",";
        os << format_double(row.f) << "," << format_double(row.y) << ","
           << format_double(row.residual) << "\n";
    }
}

inline nlohmann::json report_to_json(const ErrorReport& rep, const nlohmann::json& config_echo) {
    nlohmann::json j{{"schema_version", kReportSchemaVersion},
                     {"sup_error", rep.sup_error},
                     {"argmax", rep.argmax},
                     {"certified", rep.certified},
                     {"config", config_echo}};
    if (rep.certified) {
        j["k_delta"] = rep.k_delta;
        j["norm_upper"] = rep.norm_upper;
        j["certified_bound"] = rep.certified_bound;
        j["tightness"] = rep.tightness;
        j["bound"] = breakdown_to_json(*rep.bound);
    } else if (!rep.uncertified_reason.empty()) {
        j["uncertified_reason"] = rep.uncertified_reason;
    }
    return j;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << contents;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

} // namespace winsamp

#endif
