#pragma once

#include <cstdint>
#include <string>

#include "levykit/bounds.hpp"
#include "levykit/density.hpp"
#include "levykit/dirichlet.hpp"
#include "levykit/rate.hpp"

namespace levykit {

/// Shortest round-trippable decimal form (17 significant digits).
std::string format_g17(double v);

/// Write-to-temp-then-rename so readers never see partial files.
void atomic_write_text(const std::string& path, const std::string& content);

/// `#key=value` comment lines carried by every report file.
std::string report_preamble(const std::string& command, std::uint64_t cfg_hash);

std::string density_csv(const DensityGrid& grid, const std::string& preamble,
                        const std::string& model_label);
std::string rate_csv(const std::vector<RateResult>& rows, const std::string& preamble);
std::string bound_csv(const BoundReport& report, const std::string& preamble);
std::string bound_summary_json(const BoundReport& report);
std::string nash_csv(const NashReport& report, const std::string& preamble);
std::string ldp_csv(const LdpTable& table, const std::string& preamble);

}  // namespace levykit
