// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/plancherel.hpp"

#include <cmath>
#include <optional>

#include "bkpq/berezin.hpp"
#include "bkpq/errors.hpp"
#include "bkpq/rng.hpp"
#include "bkpq/spherical.hpp"

namespace bkpq {

namespace {

bool is_degenerate_alpha(const SeriesConstants& constants, double alpha) {
    if (constants.p != constants.q) {
        return false;
    }
    const double nearest = std::round(alpha);
    return std::abs(alpha - nearest) < 1e-12 && nearest >= 1.0 &&
           nearest <= static_cast<double>(constants.p - 1);
}

std::uint64_t component_seed(const EvalBudget& budget,
                             const ComponentIndex& index) {
    std::uint64_t seed = derive_seed(
        budget.seed, {0x706c616eULL, static_cast<std::uint64_t>(index.m)});
    for (const int u : index.u) {
        seed = derive_seed(seed, {static_cast<std::uint64_t>(u) + 1});
    }
    return seed;
}

// Integral of one component: density over the residual imaginary axes times
// the spherical factor at (pins ++ iy), with a shared Haar batch per
// component so the y-integrand is smooth.
ComponentContribution component_contribution(const SeriesConstants& constants,
                                             const PlancherelComponent& comp,
                                             double alpha, const TorusCoord& t,
                                             const EvalBudget& budget, double C) {
    const int p = constants.p;
    const int q = constants.q;
    const int m = comp.index.m;
    const int dims = p - m;
    const bool at_origin = (t.t.size() == 0) || (t.t.maxCoeff() == 0.0);

    Eigen::VectorXcd pins(m);
    for (int tau = 0; tau < m; ++tau) {
        pins(tau) = comp.fixed_coordinates[static_cast<size_t>(tau)].eval(
            alpha, std::span<const Cx>());
    }

    const bool use_rank1 =
        budget.spherical_mode != SphericalMode::monte_carlo && p == 1;
    if (budget.spherical_mode == SphericalMode::rank1_quadrature && p != 1) {
        throw DomainError(
            "component_contribution: the deterministic spherical route is only "
            "defined for p = 1");
    }

    std::optional<SphericalBatch> batch;
    std::optional<Rank1Table> table;
    if (!at_origin) {
        if (use_rank1) {
            table.emplace(t.t(0), q);
        } else {
            batch.emplace(p, q, t, budget.mc_samples,
                          component_seed(budget, comp.index));
        }
    }

    const auto f = [&](std::span<const double> y) -> NodeValue {
        std::vector<Cx> s_res(static_cast<size_t>(dims));
        for (int i = 0; i < dims; ++i) {
            s_res[static_cast<size_t>(i)] = Cx(0.0, y[static_cast<size_t>(i)]);
        }
        const Cx density = evaluate(comp.density, alpha,
                                    std::span<const Cx>(s_res.data(), s_res.size()));
        if (at_origin || density == Cx(0.0, 0.0)) {
            return NodeValue{density, 0.0};
        }
        Eigen::VectorXcd s_full(p);
        s_full.head(m) = pins;
        for (int i = 0; i < dims; ++i) {
            s_full(m + i) = s_res[static_cast<size_t>(i)];
        }
        if (use_rank1) {
            return NodeValue{density * table->evaluate(s_full(0)), 0.0};
        }
        const SphericalEstimate phi = batch->estimate(s_full);
        return NodeValue{density * phi.value, std::abs(density) * phi.std_error};
    };

    const AxisGrid grid(budget.truncation_radius, budget.nodes_per_axis,
                        budget.rule);
    const IntegralResultWithSpread integral = integrate_axes(f, dims, grid);

    ComponentContribution out;
    out.index = comp.index;
    const double scale = std::abs(C * comp.weight);
    out.contribution = C * comp.weight * integral.value;
    out.std_error = scale * integral.spread;
    out.truncation_bound = scale * integral.truncation_bound;
    return out;
}

VerificationReport assemble_report(const SeriesConstants& constants,
                                   double alpha, const TorusCoord& t,
                                   const EvalBudget& budget, double C) {
    VerificationReport report;
    report.alpha = alpha;
    report.t = t.t;
    report.calibration_C = C;
    report.lhs = b_function(alpha, t);

    const std::vector<ComponentIndex> support = enumerate_support(constants, alpha);
    double se_sum = 0.0;
    for (const ComponentIndex& index : support) {
        const PlancherelComponent comp = component_by_cascade(constants, index);
        const ComponentContribution share =
            component_contribution(constants, comp, alpha, t, budget, C);
        report.rhs += share.contribution;
        se_sum += share.std_error;
        report.truncation_bound += share.truncation_bound;
        report.per_component.push_back(share);
    }
    report.rel_error = std::abs(report.rhs - report.lhs) / std::abs(report.lhs);
    report.error_budget = 3.0 * se_sum + report.truncation_bound;
    return report;
}

}  // namespace

double calibrate_constant(const SeriesConstants& constants, double alpha_ref,
                          const EvalBudget& budget) {
    const double hd = 0.5 * (constants.p + constants.q);
    if (!(alpha_ref > hd - 1.0)) {
        throw DomainError(
            "calibrate_constant: reference alpha must exceed (p+q)/2 - 1");
    }
    const TorusCoord origin(Eigen::VectorXd::Zero(constants.p));
    const PlancherelComponent continuous = component_by_cascade(
        constants, ComponentIndex{0, {}});
    const ComponentContribution raw = component_contribution(
        constants, continuous, alpha_ref, origin, budget, 1.0);
    const double mass = raw.contribution.real();
    if (!(mass > 0.0)) {
        throw SingularError("calibrate_constant: non-positive reference mass");
    }
    return 1.0 / mass;
}

VerificationReport reconstruct_with_constant(const SeriesConstants& constants,
                                             double alpha, const TorusCoord& t,
                                             const EvalBudget& budget, double C) {
    if (is_degenerate_alpha(constants, alpha)) {
        throw DegenerateError(
            "reconstruct: integer alpha in [1, p-1] at p = q is degenerate");
    }
    return assemble_report(constants, alpha, t, budget, C);
}

VerificationReport reconstruct(const SeriesConstants& constants, double alpha,
                               const TorusCoord& t, const EvalBudget& budget) {
    if (is_degenerate_alpha(constants, alpha)) {
        throw DegenerateError(
            "reconstruct: integer alpha in [1, p-1] at p = q is degenerate");
    }
    const double hd = 0.5 * (constants.p + constants.q);
    const double alpha_ref = std::max(alpha, hd + 2.0);
    const double C = calibrate_constant(constants, alpha_ref, budget);
    return assemble_report(constants, alpha, t, budget, C);
}

ContinuityProbe continuity_probe(const SeriesConstants& constants, int kappa,
                                 const TorusCoord& t, const EvalBudget& budget) {
    if (constants.p == constants.q) {
        throw DomainError(
            "continuity_probe: the crossing is continuous only for p != q");
    }
    if (kappa < 0) {
        throw DomainError("continuity_probe: kappa must be non-negative");
    }
    ContinuityProbe probe;
    const double hd = 0.5 * (constants.p + constants.q);
    probe.alpha_line = hd - 1.0 - 2.0 * kappa;
    const double C = calibrate_constant(constants, hd + 2.0, budget);
    probe.deltas = {0.05, 0.02, 0.01};
    for (const double delta : probe.deltas) {
        probe.above.push_back(reconstruct_with_constant(
            constants, probe.alpha_line + delta, t, budget, C));
        probe.below.push_back(reconstruct_with_constant(
            constants, probe.alpha_line - delta, t, budget, C));
        probe.gaps.push_back(std::abs(probe.above.back().rhs -
                                      probe.below.back().rhs));
    }
    return probe;
}

PlancherelDecomposition decomposition_report(const SeriesConstants& constants,
                                             double alpha) {
    if (is_degenerate_alpha(constants, alpha)) {
        throw DegenerateError(
            "decomposition_report: integer alpha in [1, p-1] at p = q is degenerate");
    }
    PlancherelDecomposition decomposition;
    decomposition.alpha = alpha;
    for (const ComponentIndex& index : enumerate_support(constants, alpha)) {
        decomposition.components.push_back(
            component_by_cascade(constants, index));
    }
    decomposition.vanishing = vanishing_analysis(constants, alpha);
    return decomposition;
}

namespace {

Json index_to_json(const ComponentIndex& index) {
    Json u = Json::array();
    for (const int v : index.u) {
        u.push_back(v);
    }
    Json j = Json::object();
    j.set("m", index.m).set("u", std::move(u));
    return j;
}

}  // namespace

Json report_to_json(const VerificationReport& report) {
    Json t = Json::array();
    for (Eigen::Index k = 0; k < report.t.size(); ++k) {
        t.push_back(report.t(k));
    }
    Json components = Json::array();
    for (const ComponentContribution& share : report.per_component) {
        Json c = Json::object();
        c.set("m", share.index.m);
        Json u = Json::array();
        for (const int v : share.index.u) {
            u.push_back(v);
        }
        c.set("u", std::move(u));
        Json value = Json::object();
        value.set("re", share.contribution.real());
        value.set("im", share.contribution.imag());
        c.set("contribution", std::move(value));
        c.set("std_error", share.std_error);
        c.set("truncation_bound", share.truncation_bound);
        components.push_back(std::move(c));
    }
    Json rhs = Json::object();
    rhs.set("re", report.rhs.real()).set("im", report.rhs.imag());
    Json j = Json::object();
    j.set("alpha", report.alpha)
        .set("t", std::move(t))
        .set("lhs", report.lhs)
        .set("rhs", std::move(rhs))
        .set("rel_error", report.rel_error)
        .set("error_budget", report.error_budget)
        .set("truncation_bound", report.truncation_bound)
        .set("calibration_C", report.calibration_C)
        .set("components", std::move(components));
    return j;
}

Json decomposition_to_json(const PlancherelDecomposition& decomposition) {
    Json components = Json::array();
    for (const PlancherelComponent& comp : decomposition.components) {
        components.push_back(component_to_json(comp));
    }
    Json survivors = Json::array();
    for (const ComponentIndex& index : decomposition.vanishing.survivors) {
        survivors.push_back(index_to_json(index));
    }
    Json vanished = Json::array();
    for (const ComponentIndex& index : decomposition.vanishing.vanished) {
        vanished.push_back(index_to_json(index));
    }
    Json j = Json::object();
    j.set("alpha", decomposition.alpha)
        .set("components", std::move(components))
        .set("regime", decomposition.vanishing.regime)
        .set("survivors", std::move(survivors))
        .set("vanished", std::move(vanished))
        .set("note", decomposition.vanishing.note);
    return j;
}

}  // namespace bkpq
