#include "levykit/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "levykit/errors.hpp"
#include "levykit/version.hpp"

namespace levykit {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write_text(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw invalid_input_error("cannot open " + tmp + " for writing");
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw invalid_input_error("cannot move " + tmp + " into place");
}

std::string report_preamble(const std::string& command, std::uint64_t cfg_hash) {
    std::ostringstream os;
    os << "#levykit_version=" << version << "\n";
    char hex[24];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(cfg_hash));
    os << "#config_hash=" << hex << "\n";
    os << "#command=" << command << "\n";
    return os.str();
}

std::string density_csv(const DensityGrid& grid, const std::string& preamble,
                        const std::string& model_label) {
    std::ostringstream os;
    os << preamble;
    os << "#t=" << format_g17(grid.t) << "\n";
    os << "#model=" << model_label << "\n";
    os << "#mass=" << format_g17(grid.mass) << "\n";
    os << "#min_value=" << format_g17(grid.min_value) << "\n";
    os << "#freq_tail_mass=" << format_g17(grid.freq_tail_mass) << "\n";
    os << "#dx=" << format_g17(grid.dx) << "\n";
    os << "#frequency_extent=" << format_g17(grid.frequency_extent) << "\n";
    os << "x,p\n";
    for (std::size_t j = 0; j < grid.x.size(); ++j)
        os << format_g17(grid.x[j]) << "," << format_g17(grid.p[j]) << "\n";
    return os.str();
}

std::string rate_csv(const std::vector<RateResult>& rows, const std::string& preamble) {
    std::ostringstream os;
    os << preamble;
    os << "x,D_sq,xi0,status\n";
    for (const auto& row : rows) {
        os << format_g17(row.x[0]) << "," << format_g17(row.d_sq) << ","
           << format_g17(row.xi0[0]) << ","
           << (row.status == RateStatus::converged ? "converged" : "boundary-capped")
           << "\n";
    }
    return os.str();
}

namespace {
const char* flag_name(RowFlag flag) {
    switch (flag) {
        case RowFlag::ok: return "ok";
        case RowFlag::underflow: return "underflow";
        case RowFlag::regime: return "regime";
        case RowFlag::error: return "error";
    }
    return "?";
}
}  // namespace

std::string bound_csv(const BoundReport& report, const std::string& preamble) {
    std::ostringstream os;
    os << preamble;
    os << "#bound_id=" << report.bound_id << "\n";
    os << "#scale=log\n";
    os << "point,lhs,rhs,slack,flag\n";
    for (const auto& row : report.rows) {
        os << format_g17(row.key) << "," << format_g17(row.lhs_log) << ","
           << format_g17(row.rhs_log) << "," << format_g17(row.slack) << ","
           << flag_name(row.flag) << "\n";
    }
    return os.str();
}

std::string bound_summary_json(const BoundReport& report) {
    std::ostringstream os;
    os << "{\"bound_id\": \"" << report.bound_id << "\", \"c\": " << format_g17(report.c)
       << ", \"gamma\": " << format_g17(report.gamma)
       << ", \"verdict\": \"" << (report.pass ? "pass" : "fail") << "\"}\n";
    return os.str();
}

std::string nash_csv(const NashReport& report, const std::string& preamble) {
    std::ostringstream os;
    os << preamble;
    os << "#delta=" << format_g17(report.delta) << "\n";
    os << "#worst_C0=" << format_g17(report.worst_c0) << "\n";
    os << "function_id,L1,L2,form,lhs,rhs0,C0\n";
    for (const auto& row : report.rows) {
        if (row.excluded) continue;
        os << row.id << "," << format_g17(row.l1) << "," << format_g17(row.l2) << ","
           << format_g17(row.form) << "," << format_g17(row.lhs) << ","
           << format_g17(row.rhs0) << "," << format_g17(row.c0) << "\n";
    }
    return os.str();
}

std::string ldp_csv(const LdpTable& table, const std::string& preamble) {
    std::ostringstream os;
    os << preamble;
    os << "#D_sq=" << format_g17(table.d_sq) << "\n";
    os << "#threshold=" << format_g17(table.threshold) << "\n";
    os << "ell,e,log_p,status\n";
    for (const auto& row : table.rows) {
        os << format_g17(row.ell) << "," << format_g17(row.e) << ","
           << format_g17(row.log_p) << "," << (row.ok ? "ok" : row.error) << "\n";
    }
    return os.str();
}

}  // namespace levykit
