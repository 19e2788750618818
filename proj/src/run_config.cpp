// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "run_config.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "bkpq/b_integral.hpp"
#include "bkpq/berezin.hpp"
#include "bkpq/errors.hpp"
#include "bkpq/geometry.hpp"
#include "bkpq/plancherel.hpp"
#include "bkpq/rng.hpp"
#include "bkpq/spherical.hpp"
#include "bkpq/symbolic.hpp"

namespace bkpq {

namespace {

Json complex_to_json(const Cx& z) {
    Json j = Json::object();
    j.set("re", z.real()).set("im", z.imag());
    return j;
}

Json real_array(const std::vector<double>& values) {
    Json j = Json::array();
    for (const double v : values) {
        j.push_back(v);
    }
    return j;
}

Json int_array(const std::vector<int>& values) {
    Json j = Json::array();
    for (const int v : values) {
        j.push_back(v);
    }
    return j;
}

Eigen::VectorXcd to_complex_vector(const std::vector<double>& values) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(values.size()));
    for (size_t i = 0; i < values.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = Cx(values[i], 0.0);
    }
    return out;
}

TorusCoord torus_from(const std::vector<double>& values, int p) {
    if (static_cast<int>(values.size()) != p) {
        throw ShapeError("expected exactly p torus coordinates via --t");
    }
    Eigen::VectorXd t(p);
    for (int k = 0; k < p; ++k) {
        t(k) = values[static_cast<size_t>(k)];
    }
    return TorusCoord::canonical(t);
}

void require_json(const RunConfig& config) {
    if (config.output_format != "json") {
        throw DomainError(
            "csv output is only available for grid reports (density)");
    }
}

Json wrap_report(const RunConfig& config, Json result) {
    Json j = Json::object();
    j.set("schema_version", "1");
    j.set("config", config_to_json(config));
    j.set("result", std::move(result));
    return j;
}

Json run_support(const RunConfig& config) {
    const SeriesConstants constants(config.p, config.q);
    Json components = Json::array();
    for (const ComponentIndex& index :
         enumerate_support(constants, config.alpha)) {
        Json c = Json::object();
        c.set("m", index.m);
        c.set("u", int_array(index.u));
        Json fixed = Json::array();
        for (int tau = 1; tau <= index.m; ++tau) {
            const AffineForm pin = pinned_coordinate(
                constants, tau, index.u[static_cast<size_t>(tau - 1)], 0);
            fixed.push_back(pin.eval(config.alpha, std::span<const Cx>()).real());
        }
        c.set("fixed", std::move(fixed));
        components.push_back(std::move(c));
    }
    Json result = Json::object();
    result.set("components", std::move(components));
    return result;
}

struct GridRow {
    double y = 0.0;
    Cx value{0.0, 0.0};
};

std::vector<GridRow> density_grid(const RunConfig& config,
                                  const PlancherelComponent& comp) {
    const int dims = config.p - comp.index.m;
    std::vector<GridRow> grid;
    if (dims == 0) {
        const Cx value = evaluate(comp.density, config.alpha, std::span<const Cx>());
        grid.push_back(GridRow{0.0, value});
        return grid;
    }
    const int n = config.nodes;
    grid.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double y =
            -config.truncation +
            2.0 * config.truncation * static_cast<double>(i) / (n - 1);
        std::vector<Cx> s(static_cast<size_t>(dims), Cx(0.0, 0.0));
        s[0] = Cx(0.0, y);
        const Cx value = evaluate(comp.density, config.alpha,
                                  std::span<const Cx>(s.data(), s.size()));
        grid.push_back(GridRow{y, value});
    }
    return grid;
}

int run_density(const RunConfig& config, std::ostream& out) {
    const SeriesConstants constants(config.p, config.q);
    ComponentIndex index;
    if (config.component_selected) {
        index.m = config.m;
        index.u = config.u;
    }
    const PlancherelComponent comp = component_by_cascade(constants, index);
    const std::vector<GridRow> grid = density_grid(config, comp);
    if (config.output_format == "csv") {
        out << "y,re,im\n";
        char line[128];
        for (const GridRow& row : grid) {
            std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", row.y,
                          row.value.real(), row.value.imag());
            out << line;
        }
        return 0;
    }
    Json grid_json = Json::array();
    for (const GridRow& row : grid) {
        Json r = Json::object();
        r.set("y", row.y);
        r.set("re", row.value.real());
        r.set("im", row.value.imag());
        grid_json.push_back(std::move(r));
    }
    Json fixed = Json::array();
    for (const AffineForm& pin : comp.fixed_coordinates) {
        fixed.push_back(pin.eval(config.alpha, std::span<const Cx>()).real());
    }
    Json result = Json::object();
    result.set("m", comp.index.m);
    result.set("u", int_array(comp.index.u));
    result.set("weight", complex_to_json(comp.weight));
    result.set("fixed", std::move(fixed));
    result.set("expression", expr_to_json(comp.density));
    result.set("grid", std::move(grid_json));
    out << wrap_report(config, std::move(result)).dump() << "\n";
    return 0;
}

Json run_verify(const RunConfig& config) {
    const SeriesConstants constants(config.p, config.q);
    const TorusCoord t = torus_from(config.t_values, config.p);
    EvalBudget budget;
    budget.mc_samples = config.samples;
    budget.seed = config.seed;
    budget.truncation_radius = config.truncation;
    budget.nodes_per_axis = config.nodes;
    if (config.spherical == "mc") {
        budget.spherical_mode = SphericalMode::monte_carlo;
    } else if (config.spherical == "exact") {
        budget.spherical_mode = SphericalMode::rank1_quadrature;
    } else if (config.spherical != "auto") {
        throw DomainError("--spherical must be auto, mc, or exact");
    }
    const VerificationReport report =
        reconstruct(constants, config.alpha, t, budget);
    return report_to_json(report);
}

Json run_b_integral(const RunConfig& config) {
    if (config.lambda.size() != static_cast<size_t>(config.p) ||
        config.sigma.size() != static_cast<size_t>(config.p)) {
        throw ShapeError("--lambda and --sigma must list exactly p values");
    }
    const BIntegralParams params(config.p, config.q,
                                 to_complex_vector(config.lambda),
                                 to_complex_vector(config.sigma));
    const Cx closed = closed_form(params);
    const SphericalEstimate mc =
        monte_carlo_estimate(params, config.mc_samples, config.seed);
    Json result = Json::object();
    result.set("closed", complex_to_json(closed));
    result.set("monte_carlo", complex_to_json(mc.value));
    result.set("std_error", mc.std_error);
    result.set("n_samples", static_cast<long long>(mc.n_samples));
    return result;
}

Json run_spherical(const RunConfig& config) {
    if (config.s_values.size() != static_cast<size_t>(config.p)) {
        throw ShapeError("--s must list exactly p values");
    }
    const TorusCoord t = torus_from(config.t_values, config.p);
    const Eigen::VectorXcd s = to_complex_vector(config.s_values);
    const SphericalEstimate est =
        spherical_function(s, t, config.q, config.samples, config.seed);
    Json result = Json::object();
    result.set("value", complex_to_json(est.value));
    result.set("std_error", est.std_error);
    result.set("n_samples", static_cast<long long>(est.n_samples));
    result.set("seed", static_cast<unsigned long long>(est.seed));
    return result;
}

Json run_gram(const RunConfig& config) {
    if (config.points < 1) {
        throw DomainError("--points must be at least 1");
    }
    Rng rng(config.seed);
    std::vector<BallPoint> points;
    points.reserve(static_cast<size_t>(config.points));
    for (int i = 0; i < config.points; ++i) {
        Eigen::MatrixXd g(config.p, config.q);
        for (int r = 0; r < config.p; ++r) {
            for (int c = 0; c < config.q; ++c) {
                g(r, c) = rng.normal();
            }
        }
        const double opnorm = g.jacobiSvd().singularValues()(0);
        const double radius = 0.8 * rng.uniform();
        points.emplace_back(g * (radius / opnorm), config.p, config.q);
    }
    const double min_eig = gram_min_eigenvalue(config.alpha, points);
    Json result = Json::object();
    result.set("min_eigenvalue", min_eig);
    result.set("trace", static_cast<double>(config.points));
    result.set("points", config.points);
    result.set("admissible", berezin_admissible(config.alpha, config.p));
    return result;
}

Json run_gk_density(const RunConfig& config) {
    if (config.s_values.size() != static_cast<size_t>(config.p)) {
        throw ShapeError("--s must list exactly p values");
    }
    const SeriesConstants constants(config.p, config.q);
    std::vector<Cx> s;
    s.reserve(config.s_values.size());
    for (const double v : config.s_values) {
        s.emplace_back(v, 0.0);
    }
    const GammaFactorExpr expr = gk_density(constants);
    const Cx gamma_route =
        evaluate(expr, 0.0, std::span<const Cx>(s.data(), s.size()));
    const Cx elementary =
        gk_density_elementary(constants, std::span<const Cx>(s.data(), s.size()));
    Json result = Json::object();
    result.set("gamma_route", complex_to_json(gamma_route));
    result.set("elementary", complex_to_json(elementary));
    result.set("gap", std::abs(gamma_route - elementary));
    return result;
}

}  // namespace

Json config_to_json(const RunConfig& config) {
    Json j = Json::object();
    j.set("command", config.command);
    j.set("p", config.p);
    j.set("q", config.q);
    j.set("alpha", config.alpha);
    j.set("s", real_array(config.s_values));
    j.set("t", real_array(config.t_values));
    j.set("samples", static_cast<long long>(config.samples));
    j.set("mc_samples", static_cast<long long>(config.mc_samples));
    j.set("seed", static_cast<unsigned long long>(config.seed));
    j.set("truncation", config.truncation);
    j.set("nodes", config.nodes);
    j.set("spherical", config.spherical);
    j.set("m", config.m);
    j.set("u", int_array(config.u));
    j.set("lambda", real_array(config.lambda));
    j.set("sigma", real_array(config.sigma));
    j.set("points", config.points);
    j.set("format", config.output_format);
    j.set("output", config.output_path);
    return j;
}

int dispatch(const RunConfig& config, std::ostream& out) {
    if (config.output_format != "json" && config.output_format != "csv") {
        throw DomainError("--format must be json or csv");
    }
    if (config.command == "density") {
        return run_density(config, out);
    }
    require_json(config);
    Json result;
    if (config.command == "support") {
        result = run_support(config);
    } else if (config.command == "verify-plancherel") {
        result = run_verify(config);
    } else if (config.command == "b-integral") {
        result = run_b_integral(config);
    } else if (config.command == "spherical") {
        result = run_spherical(config);
    } else if (config.command == "gram") {
        result = run_gram(config);
    } else if (config.command == "gk-density") {
        result = run_gk_density(config);
    } else {
        throw DomainError("unknown subcommand: " + config.command);
    }
    out << wrap_report(config, std::move(result)).dump() << "\n";
    return 0;
}

}  // namespace bkpq
