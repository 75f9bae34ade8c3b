#pragma once

// Command-line front end: decompose / eval / verify / integrate with
// machine-readable JSON reports. Exit codes: 0 all checks pass, 1 a check
// failed, 2 parse or usage error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "almansi/verify.hpp"

namespace almansi {

inline constexpr const char* kToolVersion = "1.0.0";

struct Report {
    std::string tool_version{kToolVersion};
    std::string command;
    std::vector<CheckResult> checks;  // sorted by name
    std::uint64_t seed{0};
    std::int64_t elapsed_ms{0};
};

std::string report_to_json_string(const Report& report);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace almansi
