#pragma once

// Named verification suites: each check pins one identity of the
// decomposition machinery at a fixed tolerance and reports a residual.
// Deterministic for a given seed; sorted by check name.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "almansi/poly.hpp"

namespace almansi {

struct CheckResult {
    std::string name;
    bool pass{false};
    double residual{0.0};
    double tolerance{0.0};
    std::string details;
};

struct VerifyConfig {
    std::uint64_t seed{0};
    long long samples{200000};
    // replaces the default tolerance of deterministic checks and the
    // absolute floor of statistical ones
    std::optional<double> tol_override;
};

// reconstruction, harmonicity, crf, fueter, meanvalue, poisson, all
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& cfg);

// deterministic polynomial corpus: variable counts cycle 1,2,3, total
// degree <= 4, coefficients uniform in [-1,1]^4
std::vector<QPolynomial> make_polynomial_corpus(std::uint64_t seed, int count);

}  // namespace almansi
