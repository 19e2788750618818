// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Command-line front end.  Every subcommand prints one JSON report (or a CSV
// grid) and exits 0; precondition violations exit 2, numeric failures exit 3.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bkpq/errors.hpp"
#include "run_config.hpp"

namespace {

void add_common_flags(CLI::App* cmd, bkpq::RunConfig& config) {
    cmd->add_option("--p", config.p, "rank p of the series");
    cmd->add_option("--q", config.q, "signature partner q (q >= p)");
    cmd->add_option("--seed", config.seed, "random seed")
        ->envname("BKPQ_SEED");
    cmd->add_option("--output", config.output_path, "write the report here");
    cmd->add_option("--format", config.output_format, "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
    bkpq::RunConfig config;
    CLI::App app{"bkpq: eigenbasis decomposition toolkit for matrix-ball kernels"};
    app.require_subcommand(1);

    CLI::App* support = app.add_subcommand(
        "support", "list support components at one parameter value");
    add_common_flags(support, config);
    support->add_option("--alpha", config.alpha)->required();

    CLI::App* density = app.add_subcommand(
        "density", "symbolic component density plus a numeric grid");
    add_common_flags(density, config);
    density->add_option("--alpha", config.alpha)->required();
    CLI::Option* m_opt = density->add_option("--m", config.m);
    density->add_option("--u", config.u);
    density->add_option("--nodes", config.nodes);
    density->add_option("--truncation", config.truncation);

    CLI::App* verify = app.add_subcommand(
        "verify-plancherel", "check lhs = rhs of the decomposition identity");
    add_common_flags(verify, config);
    verify->add_option("--alpha", config.alpha)->required();
    verify->add_option("--t", config.t_values)->required();
    verify->add_option("--samples", config.samples);
    verify->add_option("--truncation", config.truncation);
    verify->add_option("--nodes", config.nodes);
    verify->add_option("--spherical", config.spherical,
                       "spherical route: auto, mc, or exact");

    CLI::App* bintegral = app.add_subcommand(
        "b-integral", "matrix beta integral: closed form vs Monte-Carlo");
    add_common_flags(bintegral, config);
    bintegral->add_option("--lambda", config.lambda)->required();
    bintegral->add_option("--sigma", config.sigma)->required();
    bintegral->add_option("--mc-samples", config.mc_samples);

    CLI::App* spherical = app.add_subcommand(
        "spherical", "Monte-Carlo spherical function estimate");
    add_common_flags(spherical, config);
    spherical->add_option("--s", config.s_values)->required();
    spherical->add_option("--t", config.t_values)->required();
    spherical->add_option("--samples", config.samples);

    CLI::App* gram = app.add_subcommand(
        "gram", "minimum eigenvalue of a random kernel Gram matrix");
    add_common_flags(gram, config);
    gram->add_option("--alpha", config.alpha)->required();
    gram->add_option("--points", config.points);

    CLI::App* gk = app.add_subcommand(
        "gk-density", "cross-check both forms of the continuous density factor");
    add_common_flags(gk, config);
    gk->add_option("--s", config.s_values)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::endl;
        return 2;
    }

    for (CLI::App* sub : app.get_subcommands()) {
        config.command = sub->get_name();
    }
    config.component_selected = m_opt->count() > 0;

    try {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!config.output_path.empty()) {
            file.open(config.output_path);
            if (!file) {
                std::cerr << "cannot open output file: " << config.output_path
                          << std::endl;
                return 2;
            }
            out = &file;
        }
        return bkpq::dispatch(config, *out);
    } catch (const bkpq::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n"
                  << app.help() << std::endl;
        return 2;
    } catch (const bkpq::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << std::endl;
        return 3;
    }
}
