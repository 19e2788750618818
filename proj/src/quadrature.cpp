// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>

namespace bkpq {

namespace {

// Symmetric decomposition of one axis rule: strictly positive half-nodes
// (each standing for the +/- mirror pair) plus an optional center node at 0.
struct HalfAxis {
    std::vector<std::pair<double, double>> positive;  // (x > 0, weight)
    std::optional<double> center_weight;              // weight at x = 0
};

// Legendre polynomial value and derivative at x by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

HalfAxis make_half_axis(const AxisGrid& grid) {
    const int n = grid.nodes_per_axis;
    const double radius = grid.truncation_radius;
    HalfAxis half;
    if (grid.rule == AxisRule::gauss_legendre) {
        // Newton iteration from the Chebyshev-like initial guess; only the
        // positive roots are computed, the mirror pair is exact negation.
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 64; ++iter) {
                const auto [value, deriv] = legendre_pair(n, x);
                dp = deriv;
                const double step = value / deriv;
                x -= step;
                if (std::abs(step) < 1e-15) {
                    const auto [v2, d2] = legendre_pair(n, x);
                    dp = d2;
                    break;
                }
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            half.positive.emplace_back(x * radius, w * radius);
        }
        if (n % 2 == 1) {
            const auto [value, deriv] = legendre_pair(n, 0.0);
            (void)value;  // P_n(0) = 0 for odd n
            half.center_weight = 2.0 / (deriv * deriv) * radius;
        }
    } else {
        const double h = 2.0 * radius / (n - 1);
        for (int i = 0; i < n / 2; ++i) {
            const double x = radius - i * h;
            const double w = (i == 0) ? 0.5 * h : h;
            half.positive.emplace_back(x, w);
        }
        if (n % 2 == 1) {
            half.center_weight = h;
        }
    }
    return half;
}

// Recursive tensor accumulation pairing +x with -x on every axis, so an
// integrand odd in any coordinate cancels within each pair before weighting.
struct PairedAccumulator {
    const std::function<NodeValue(std::span<const double>)>* f;
    const HalfAxis* half;
    int dims;
    std::vector<double> y;

    NodeValue run(int axis) {
        if (axis == dims) {
            return (*f)(std::span<const double>(y.data(), y.size()));
        }
        NodeValue total;
        for (const auto& [x, w] : half->positive) {
            y[static_cast<std::size_t>(axis)] = x;
            const NodeValue a = run(axis + 1);
            y[static_cast<std::size_t>(axis)] = -x;
            const NodeValue b = run(axis + 1);
            total.value += w * (a.value + b.value);
            total.spread += w * (a.spread + b.spread);
        }
        if (half->center_weight) {
            y[static_cast<std::size_t>(axis)] = 0.0;
            const NodeValue c = run(axis + 1);
            total.value += *half->center_weight * c.value;
            total.spread += *half->center_weight * c.spread;
        }
        return total;
    }
};

// Sum of |f| over a boundary face of axis `face_axis` (the face coordinate is
// preset in `y`), weighted by the rule on the remaining axes.  Comparing the
// face sum at the cutoff with the same sum one unit inside measures the actual
// exponential decay rate, which then bounds the discarded tail mass.
struct FaceAccumulator {
    const std::function<NodeValue(std::span<const double>)>* f;
    const HalfAxis* half;
    int dims;
    int face_axis;
    std::vector<double> y;

    double run(int axis) {
        if (axis == dims) {
            return std::abs(
                (*f)(std::span<const double>(y.data(), y.size())).value);
        }
        if (axis == face_axis) {
            return run(axis + 1);
        }
        double total = 0.0;
        for (const auto& [x, w] : half->positive) {
            y[static_cast<std::size_t>(axis)] = x;
            total += w * run(axis + 1);
            y[static_cast<std::size_t>(axis)] = -x;
            total += w * run(axis + 1);
        }
        if (half->center_weight) {
            y[static_cast<std::size_t>(axis)] = 0.0;
            total += *half->center_weight * run(axis + 1);
        }
        return total;
    }
};

IntegralResultWithSpread integrate_impl(
    const std::function<NodeValue(std::span<const double>)>& f, int dims,
    const AxisGrid& grid) {
    if (dims < 0) {
        throw DomainError("integrate_axes: dims must be non-negative");
    }
    if (dims > 3) {
        throw BudgetError(
            "integrate_axes: grids are capped at 3 axes; use mc_mean");
    }
    IntegralResultWithSpread out;
    if (dims == 0) {
        const NodeValue v = f(std::span<const double>());
        out.value = v.value;
        out.spread = v.spread;
        return out;
    }
    const HalfAxis half = make_half_axis(grid);
    PairedAccumulator acc{&f, &half, dims,
                          std::vector<double>(static_cast<std::size_t>(dims))};
    const NodeValue total = acc.run(0);
    out.value = total.value;
    out.spread = total.spread;
    const double r_out = grid.truncation_radius;
    const double r_in = std::max(r_out - 1.0, 0.5 * r_out);
    for (int j = 0; j < dims; ++j) {
        FaceAccumulator face{&f, &half, dims, j,
                             std::vector<double>(static_cast<std::size_t>(dims))};
        for (const double sign : {1.0, -1.0}) {
            face.y[static_cast<std::size_t>(j)] = sign * r_out;
            const double edge = face.run(0);
            if (edge <= 0.0) continue;
            face.y[static_cast<std::size_t>(j)] = sign * r_in;
            const double inner = face.run(0);
            // Fit |f| ~ A exp(-rate * |y_j|) through the two face sums; the
            // tail integral beyond the cutoff is then edge / rate.  The rate is
            // clamped so a flat or noisy pair of samples still yields a finite,
            // pessimistic bound.
            double rate = 0.2;
            if (inner > edge) {
                rate = std::log(inner / edge) / (r_out - r_in);
            }
            rate = std::clamp(rate, 0.2, 10.0);
            out.truncation_bound += edge / rate;
        }
    }
    return out;
}

}  // namespace

AxisGrid::AxisGrid(double radius, int nodes, AxisRule rule_)
    : truncation_radius(radius), nodes_per_axis(nodes), rule(rule_) {
    if (!(radius > 0.0)) {
        throw DomainError("AxisGrid: truncation radius must be positive");
    }
    if (nodes < 8) {
        throw DomainError("AxisGrid: at least 8 nodes per axis are required");
    }
}

std::vector<std::pair<double, double>> axis_nodes(const AxisGrid& grid) {
    const HalfAxis half = make_half_axis(grid);
    std::vector<std::pair<double, double>> nodes;
    nodes.reserve(static_cast<std::size_t>(grid.nodes_per_axis));
    for (auto it = half.positive.begin(); it != half.positive.end(); ++it) {
        nodes.emplace_back(-it->first, it->second);
    }
    if (half.center_weight) {
        nodes.emplace_back(0.0, *half.center_weight);
    }
    for (auto it = half.positive.rbegin(); it != half.positive.rend(); ++it) {
        nodes.emplace_back(it->first, it->second);
    }
    return nodes;
}

IntegralResult integrate_axes(const std::function<Cx(std::span<const double>)>& f,
                              int dims, const AxisGrid& grid) {
    const auto wrapped = [&f](std::span<const double> y) -> NodeValue {
        return NodeValue{f(y), 0.0};
    };
    const IntegralResultWithSpread full = integrate_impl(wrapped, dims, grid);
    return IntegralResult{full.value, full.truncation_bound};
}

IntegralResultWithSpread integrate_axes(
    const std::function<NodeValue(std::span<const double>)>& f, int dims,
    const AxisGrid& grid) {
    return integrate_impl(f, dims, grid);
}

}  // namespace bkpq
