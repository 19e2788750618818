// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Parsed command-line configuration and the dispatcher that turns it into a
// report.  Kept apart from main() so the test suite can drive subcommands
// in-process and compare byte-identical output.

#ifndef BKPQ_RUN_CONFIG_HPP
#define BKPQ_RUN_CONFIG_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bkpq/json_io.hpp"

namespace bkpq {

/// @brief Everything a subcommand run depends on, after flag resolution.
struct RunConfig {
    std::string command;
    int p = 1;
    int q = 1;
    double alpha = 0.0;
    std::vector<double> s_values;
    std::vector<double> t_values;
    std::int64_t samples = 100000;
    std::int64_t mc_samples = 1000000;
    std::uint64_t seed = 12345;
    double truncation = 20.0;
    int nodes = 280;
    std::string spherical = "auto";  ///< spherical route: auto | mc | exact
    int m = 0;
    std::vector<int> u;
    bool component_selected = false;  ///< --m/--u given on `density`
    std::vector<double> lambda;
    std::vector<double> sigma;
    int points = 20;
    std::string output_format = "json";
    std::string output_path;
};

/// @brief The resolved configuration echoed into every report.
Json config_to_json(const RunConfig& config);

/// @brief Run the selected subcommand and stream its report; returns the
/// process exit code (0).  Precondition and numeric failures are thrown as
/// the library exceptions and mapped to exit codes by the caller.
int dispatch(const RunConfig& config, std::ostream& out);

}  // namespace bkpq

#endif  // BKPQ_RUN_CONFIG_HPP
