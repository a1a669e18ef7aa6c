#pragma once

#include "permfact/report.hpp"

#include <string>
#include <vector>

namespace permfact {

/// oracle, closedform, schur, m1, jackson, hz, dimred, polynomiality, all.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one named suite for sizes up to n_max. Enumeration-bound parts are
/// clipped to the oracle guards; the clipping is reported in the lines.
/// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& name, int n_max);

}  // namespace permfact
