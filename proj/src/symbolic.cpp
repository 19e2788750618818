// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/symbolic.hpp"

#include <algorithm>
#include <cmath>

#include "bkpq/errors.hpp"

namespace bkpq {

namespace {

// Classification radius for the limit evaluation in evaluate().  Pinned
// arguments are exact rationals pushed through doubles, so genuine singular
// hits land within a few ulps; generic evaluation points stay far away.
constexpr double kLimitRadius = 1e-9;

double ipow(double base, int n) {
    if (n < 0) return 1.0 / ipow(base, -n);
    double acc = 1.0;
    for (int k = 0; k < n; ++k) acc *= base;
    return acc;
}

Rat rat_pow(const Rat& base, int n) {
    Rat acc(1);
    for (int k = 0; k < n; ++k) acc *= base;
    return acc;
}

long long ll_factorial(long long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    if (n > 20) throw OverflowError("factorial exceeds exact integer range");
    long long f = 1;
    for (long long k = 2; k <= n; ++k) f *= k;
    return f;
}

bool near_nonpositive_integer_cx(Cx z, double radius, long long* n_out) {
    const double re = z.real();
    if (re > 0.5) return false;
    const double n = std::round(re);
    if (n > 0.0) return false;
    if (std::abs(re - n) <= radius && std::abs(z.imag()) <= radius) {
        if (n_out) *n_out = static_cast<long long>(-n);
        return true;
    }
    return false;
}

double residue_coefficient_double(long long n) {
    double f = 1.0;
    for (long long k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return ((n % 2) != 0) ? -1.0 / f : 1.0 / f;
}

// Apply s_var = value to a single affine form (without dropping the slot yet).
AffineForm transform_form(const AffineForm& form, int var_index, const AffineForm& value) {
    const Rat k = form.c_s[static_cast<size_t>(var_index)];
    AffineForm out;
    out.c0 = form.c0 + k * value.c0;
    out.c_alpha = form.c_alpha + k * value.c_alpha;
    out.c_s.reserve(form.c_s.size() - 1);
    for (size_t j = 0; j < form.c_s.size(); ++j) {
        if (static_cast<int>(j) == var_index) continue;
        out.c_s.push_back(form.c_s[j] + k * value.c_s[j]);
    }
    return out;
}

void check_subst_args(const GammaFactorExpr& expr, int var_index, const AffineForm& value,
                      const char* who) {
    if (var_index < 0 || var_index >= expr.num_vars) {
        throw IndexError(std::string(who) + ": variable index " + std::to_string(var_index) +
                         " out of range for " + std::to_string(expr.num_vars) + " variables");
    }
    if (value.nvars() != expr.num_vars) {
        throw ShapeError(std::string(who) + ": replacement form has " +
                         std::to_string(value.nvars()) + " variable slots, expression has " +
                         std::to_string(expr.num_vars));
    }
    if (value.c_s[static_cast<size_t>(var_index)] != Rat(0)) {
        throw ShapeError(std::string(who) + ": replacement form depends on the substituted variable");
    }
}

} // namespace

SeriesConstants::SeriesConstants(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < p) {
        throw DomainError("SeriesConstants: need 1 <= p <= q, got p = " + std::to_string(p) +
                          ", q = " + std::to_string(q));
    }
    if (p > 3) {
        throw BudgetError("SeriesConstants: desk scale supports p <= 3, got p = " + std::to_string(p));
    }
    h = Rat(p + q, 2) - 1;
}

AffineForm AffineForm::constant(const Rat& v, int nvars) {
    AffineForm f(nvars);
    f.c0 = v;
    return f;
}

AffineForm AffineForm::alpha_term(const Rat& coeff, int nvars) {
    AffineForm f(nvars);
    f.c_alpha = coeff;
    return f;
}

AffineForm AffineForm::variable(int k, const Rat& coeff, int nvars) {
    if (k < 0 || k >= nvars) {
        throw IndexError("AffineForm::variable: index " + std::to_string(k) +
                         " out of range for " + std::to_string(nvars) + " variables");
    }
    AffineForm f(nvars);
    f.c_s[static_cast<size_t>(k)] = coeff;
    return f;
}

bool AffineForm::is_constant() const {
    if (c_alpha != Rat(0)) return false;
    for (const Rat& c : c_s) {
        if (c != Rat(0)) return false;
    }
    return true;
}

bool AffineForm::is_identically_zero() const {
    return c0 == Rat(0) && is_constant();
}

AffineForm& AffineForm::operator+=(const AffineForm& other) {
    if (other.c_s.size() != c_s.size()) {
        throw ShapeError("AffineForm: adding forms over different variable counts");
    }
    c0 += other.c0;
    c_alpha += other.c_alpha;
    for (size_t j = 0; j < c_s.size(); ++j) c_s[j] += other.c_s[j];
    return *this;
}

AffineForm& AffineForm::scale(const Rat& factor) {
    c0 *= factor;
    c_alpha *= factor;
    for (Rat& c : c_s) c *= factor;
    return *this;
}

Cx AffineForm::eval(double alpha, std::span<const Cx> s) const {
    if (s.size() != c_s.size()) {
        throw ShapeError("AffineForm::eval: got " + std::to_string(s.size()) +
                         " spectral values for " + std::to_string(c_s.size()) + " slots");
    }
    Cx acc(rat_to_double(c0) + rat_to_double(c_alpha) * alpha, 0.0);
    for (size_t j = 0; j < c_s.size(); ++j) {
        if (c_s[j] != Rat(0)) acc += rat_to_double(c_s[j]) * s[j];
    }
    return acc;
}

GammaFactorExpr GammaFactorExpr::one(int nvars) {
    GammaFactorExpr e;
    e.num_vars = nvars;
    e.two_exponent = AffineForm(nvars);
    return e;
}

GammaFactorExpr GammaFactorExpr::zero(int nvars) {
    GammaFactorExpr e = one(nvars);
    e.constant = Rat(0);
    return e;
}

void GammaFactorExpr::mul_gamma(const AffineForm& form, int mult) {
    if (is_zero() || mult == 0) return;
    if (form.nvars() != num_vars) {
        throw ShapeError("mul_gamma: form variable count mismatch");
    }
    for (auto it = gamma_factors.begin(); it != gamma_factors.end(); ++it) {
        if (it->form == form) {
            it->mult += mult;
            if (it->mult == 0) gamma_factors.erase(it);
            return;
        }
    }
    gamma_factors.push_back(GammaFactor{form, mult});
}

void GammaFactorExpr::mul_poly(const AffineForm& form, int power) {
    if (is_zero() || power == 0) return;
    if (power < 0) throw DomainError("mul_poly: power must be >= 1");
    if (form.nvars() != num_vars) {
        throw ShapeError("mul_poly: form variable count mismatch");
    }
    if (form.is_constant()) {
        if (form.c0 == Rat(0)) {
            *this = zero(num_vars);
        } else {
            constant *= rat_pow(form.c0, power);
        }
        return;
    }
    for (auto& pf : poly_factors) {
        if (pf.form == form) {
            pf.power += power;
            return;
        }
    }
    poly_factors.push_back(PolyFactor{form, power});
}

void GammaFactorExpr::mul_expr(const GammaFactorExpr& other) {
    if (other.num_vars != num_vars) {
        throw ShapeError("mul_expr: variable count mismatch");
    }
    if (is_zero()) return;
    if (other.is_zero()) {
        *this = zero(num_vars);
        return;
    }
    constant *= other.constant;
    two_exponent += other.two_exponent;
    pi_exponent += other.pi_exponent;
    for (const auto& g : other.gamma_factors) mul_gamma(g.form, g.mult);
    for (const auto& pf : other.poly_factors) mul_poly(pf.form, pf.power);
}

Cx evaluate(const GammaFactorExpr& expr, double alpha, std::span<const Cx> s) {
    if (static_cast<int>(s.size()) != expr.num_vars) {
        throw ShapeError("evaluate: got " + std::to_string(s.size()) +
                         " spectral values for " + std::to_string(expr.num_vars) + " variables");
    }
    if (expr.is_zero()) return Cx(0.0, 0.0);

    Cx log_acc(0.0, 0.0);
    double limit_coeff = 1.0;
    long long eps_exponent = 0;     // net power of the resolving parameter
    bool undirected_pole = false;   // a singular factor whose argument is frozen in alpha
    std::string undirected_msg;

    for (const auto& g : expr.gamma_factors) {
        const Cx arg = g.form.eval(alpha, s);
        long long n = 0;
        if (near_nonpositive_integer_cx(arg, kLimitRadius, &n)) {
            eps_exponent -= g.mult;
            const double rate = rat_to_double(g.form.c_alpha);
            if (rate == 0.0) {
                // No alpha-direction to resolve a finite limit along.  Harmless
                // when the zeros outnumber the poles (handled below); fatal when
                // the limit would otherwise be finite or infinite.
                undirected_pole = true;
                undirected_msg = "evaluate: gamma argument at pole -" + std::to_string(n) +
                                 " does not move with alpha; the limit cannot be resolved";
            } else {
                limit_coeff *= ipow(residue_coefficient_double(n) / rate, g.mult);
            }
        } else {
            log_acc += static_cast<double>(g.mult) * log_gamma(arg);
        }
    }
    for (const auto& pf : expr.poly_factors) {
        const Cx val = pf.form.eval(alpha, s);
        if (std::abs(val) <= kLimitRadius) {
            eps_exponent += pf.power;
            const double rate = rat_to_double(pf.form.c_alpha);
            if (rate == 0.0) {
                undirected_pole = true;
                undirected_msg = "evaluate: polynomial factor vanishes and does not move with alpha";
            } else {
                limit_coeff *= ipow(rate, pf.power);
            }
        } else {
            log_acc += static_cast<double>(pf.power) * std::log(val);
        }
    }

    // A strict excess of vanishing factors forces the value to zero no matter
    // how (or whether) the individual limits are taken.
    if (eps_exponent > 0) return Cx(0.0, 0.0);
    if (undirected_pole) throw PoleError(undirected_msg);
    if (eps_exponent < 0) {
        throw PoleError("evaluate: uncancelled pole of order " + std::to_string(-eps_exponent) +
                        " at alpha = " + std::to_string(alpha));
    }

    const Cx e2 = expr.two_exponent.eval(alpha, s);
    log_acc += e2 * std::log(2.0);
    log_acc += static_cast<double>(expr.pi_exponent) * std::log(M_PI);
    if (log_acc.real() > 700.0) {
        throw OverflowError("evaluate: magnitude exceeds double range (log = " +
                            std::to_string(log_acc.real()) + ")");
    }
    return rat_to_double(expr.constant) * limit_coeff * std::exp(log_acc);
}

GammaFactorExpr substitute(const GammaFactorExpr& expr, int var_index, const AffineForm& value) {
    check_subst_args(expr, var_index, value, "substitute");
    GammaFactorExpr out = GammaFactorExpr::one(expr.num_vars - 1);
    if (expr.is_zero()) return GammaFactorExpr::zero(expr.num_vars - 1);
    out.constant = expr.constant;
    out.pi_exponent = expr.pi_exponent;
    out.two_exponent = transform_form(expr.two_exponent, var_index, value);
    for (const auto& g : expr.gamma_factors) {
        out.mul_gamma(transform_form(g.form, var_index, value), g.mult);
    }
    for (const auto& pf : expr.poly_factors) {
        const AffineForm tf = transform_form(pf.form, var_index, value);
        if (tf.is_identically_zero()) {
            return GammaFactorExpr::zero(expr.num_vars - 1);
        }
        out.mul_poly(tf, pf.power);
        if (out.is_zero()) return out;  // constant form folded to zero
    }
    return out;
}

GammaFactorExpr residue_step(const GammaFactorExpr& expr, int var_index, const AffineForm& pole) {
    check_subst_args(expr, var_index, pole, "residue_step");
    if (expr.is_zero()) {
        throw NoPoleError("residue_step: the zero expression has no poles");
    }

    long long pole_order_num = 0;
    long long zero_order = 0;
    int singular_index = -1;
    int singular_count = 0;
    long long singular_n = 0;

    for (size_t i = 0; i < expr.gamma_factors.size(); ++i) {
        const auto& g = expr.gamma_factors[i];
        const AffineForm tf = transform_form(g.form, var_index, pole);
        if (tf.is_constant() && is_nonpositive_integer(tf.c0)) {
            if (g.mult > 0) {
                pole_order_num += g.mult;
                ++singular_count;
                singular_index = static_cast<int>(i);
                singular_n = -tf.c0.numerator();
            } else {
                zero_order += -g.mult;
                ++singular_count;
            }
        }
    }
    for (const auto& pf : expr.poly_factors) {
        const AffineForm tf = transform_form(pf.form, var_index, pole);
        if (tf.is_identically_zero()) {
            zero_order += pf.power;
            ++singular_count;
        }
    }

    const long long net_order = pole_order_num - zero_order;
    if (pole_order_num == 0 || net_order <= 0) {
        throw NoPoleError("residue_step: expression is regular at the claimed pole (net order " +
                          std::to_string(net_order) + ")");
    }
    if (net_order > 1 || singular_count != 1 || pole_order_num != 1) {
        throw PoleOrderError("residue_step: claimed simple pole has order " +
                             std::to_string(net_order) + " with " +
                             std::to_string(singular_count) + " singular factor(s)");
    }
    const Rat c = expr.gamma_factors[static_cast<size_t>(singular_index)]
                      .form.c_s[static_cast<size_t>(var_index)];
    if (c == Rat(0)) {
        throw PoleOrderError("residue_step: singular gamma factor does not involve the variable");
    }

    GammaFactorExpr rest = expr;
    rest.gamma_factors.erase(rest.gamma_factors.begin() + singular_index);
    GammaFactorExpr out = substitute(rest, var_index, pole);
    out.constant *= gamma_residue_coefficient(static_cast<int>(singular_n)) / c;
    return out;
}

GammaFactorExpr gk_density_on(const SeriesConstants& constants, int nvars) {
    if (nvars < 0) throw DomainError("gk_density_on: negative variable count");
    GammaFactorExpr e = GammaFactorExpr::one(nvars);
    const Rat qp2(constants.q - constants.p, 2);
    const Rat half(1, 2);
    for (int k = 0; k < nvars; ++k) {
        AffineForm plus = AffineForm::constant(qp2, nvars);
        plus.c_s[static_cast<size_t>(k)] = Rat(1);
        AffineForm minus = AffineForm::constant(qp2, nvars);
        minus.c_s[static_cast<size_t>(k)] = Rat(-1);
        e.mul_gamma(plus, 1);
        e.mul_gamma(minus, 1);
        e.mul_gamma(AffineForm::variable(k, Rat(1), nvars), -1);
        e.mul_gamma(AffineForm::variable(k, Rat(-1), nvars), -1);
    }
    for (int k = 0; k < nvars; ++k) {
        for (int l = k + 1; l < nvars; ++l) {
            for (const int sign_l : {+1, -1}) {
                for (const int sign_k : {+1, -1}) {
                    AffineForm num = AffineForm::constant(half, nvars);
                    num.c_s[static_cast<size_t>(l)] = Rat(sign_l, 2);
                    num.c_s[static_cast<size_t>(k)] = Rat(sign_k, 2);
                    e.mul_gamma(num, 1);
                    AffineForm den(nvars);
                    den.c_s[static_cast<size_t>(l)] = Rat(sign_l, 2);
                    den.c_s[static_cast<size_t>(k)] = Rat(sign_k, 2);
                    e.mul_gamma(den, -1);
                }
            }
        }
    }
    return e;
}

GammaFactorExpr gk_density(const SeriesConstants& constants) {
    return gk_density_on(constants, constants.p);
}

Cx gk_density_elementary(const SeriesConstants& constants, std::span<const Cx> s) {
    const int n = static_cast<int>(s.size());
    const int diff = constants.q - constants.p;
    Cx acc(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        const Cx sk = s[static_cast<size_t>(k)];
        if (diff % 2 == 0) {
            for (int tau = 0; tau < diff / 2; ++tau) {
                acc *= static_cast<double>(tau) * static_cast<double>(tau) - sk * sk;
            }
        } else {
            Cx factor = -sk * std::tan(M_PI * sk);
            for (int tau = 0; tau <= (diff - 3) / 2; ++tau) {
                const double half_odd = static_cast<double>(tau) + 0.5;
                factor *= half_odd * half_odd - sk * sk;
            }
            acc *= factor;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const Cx sl = s[static_cast<size_t>(l)];
            const Cx sk = s[static_cast<size_t>(k)];
            acc *= 0.25 * (sl * sl - sk * sk) * std::tan(0.5 * M_PI * (sl + sk)) *
                   std::tan(0.5 * M_PI * (sl - sk));
        }
    }
    return acc;
}

GammaFactorExpr large_alpha_integrand(const SeriesConstants& constants) {
    const int p = constants.p;
    GammaFactorExpr e = GammaFactorExpr::one(p);
    e.two_exponent.c_alpha = Rat(p);
    for (int j = 1; j <= p; ++j) {
        AffineForm f = AffineForm::constant(Rat(1 - j), p);
        f.c_alpha = Rat(1);
        e.mul_gamma(f, -1);
    }
    const Rat shift = (Rat(1) - constants.half_dim()) / 2;  // (1 - (p+q)/2)/2
    for (int k = 0; k < p; ++k) {
        for (const int sign : {+1, -1}) {
            AffineForm f = AffineForm::constant(shift, p);
            f.c_alpha = Rat(1, 2);
            f.c_s[static_cast<size_t>(k)] = Rat(sign, 2);
            e.mul_gamma(f, 1);
        }
    }
    e.mul_expr(gk_density_on(constants, p));
    return e;
}

std::vector<ComponentIndex> enumerate_support(const SeriesConstants& constants, double alpha) {
    std::vector<ComponentIndex> out;
    out.push_back(ComponentIndex{0, {}});
    const double half_dim = rat_to_double(constants.half_dim());
    for (int m = 1; m <= constants.p; ++m) {
        // strict inequality alpha + m + 2 u_m < (p+q)/2
        const double bound = 0.5 * (half_dim - static_cast<double>(m) - alpha);
        if (bound <= 0.0) continue;
        const int u_max = static_cast<int>(std::floor(bound - 1e-12));
        if (u_max < 0) continue;
        std::vector<int> u(static_cast<size_t>(m), 0);
        // lexicographic enumeration of non-decreasing u with u_m <= u_max
        auto emit = [&](auto&& self, int pos, int low) -> void {
            if (pos == m) {
                out.push_back(ComponentIndex{m, u});
                return;
            }
            for (int v = low; v <= u_max; ++v) {
                u[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, v);
            }
        };
        emit(emit, 0, 0);
        if (out.size() > 10000) {
            throw BudgetError("enumerate_support: component count exceeds desk scale");
        }
    }
    return out;
}

AffineForm pinned_coordinate(const SeriesConstants& constants, int tau, int u_tau, int nvars) {
    AffineForm f(nvars);
    f.c0 = Rat(tau + 2 * u_tau) - constants.half_dim();
    f.c_alpha = Rat(1);
    return f;
}

namespace {

void check_component_index(const SeriesConstants& constants, const ComponentIndex& index) {
    if (index.m < 0 || index.m > constants.p) {
        throw DomainError("component index: m must lie in [0, p], got " + std::to_string(index.m));
    }
    if (static_cast<int>(index.u.size()) != index.m) {
        throw ShapeError("component index: u has " + std::to_string(index.u.size()) +
                         " entries for m = " + std::to_string(index.m));
    }
    int prev = 0;
    for (const int v : index.u) {
        if (v < prev) {
            throw DomainError("component index: u must be non-decreasing and non-negative");
        }
        prev = v;
    }
    if (!index.u.empty() && index.u.front() < 0) {
        throw DomainError("component index: u must be non-negative");
    }
}

} // namespace

PlancherelComponent component_by_cascade(const SeriesConstants& constants,
                                         const ComponentIndex& index) {
    check_component_index(constants, index);
    PlancherelComponent comp;
    comp.index = index;
    GammaFactorExpr expr = large_alpha_integrand(constants);
    for (int tau = 1; tau <= index.m; ++tau) {
        const int u_tau = index.u[static_cast<size_t>(tau - 1)];
        const AffineForm pole = pinned_coordinate(constants, tau, u_tau, expr.num_vars);
        expr = residue_step(expr, 0, pole);
        comp.fixed_coordinates.push_back(pinned_coordinate(constants, tau, u_tau, 0));
    }
    comp.density = expr;
    double w = 1.0;
    for (int k = 0; k < index.m; ++k) {
        w *= -4.0 * M_PI;                                  // one crossed pole pair each
        w *= static_cast<double>(constants.p - k);         // p!/(p-m)! symmetrization
    }
    comp.weight = Cx(w, 0.0);
    return comp;
}

ClosedFormComponent component_closed_form(const SeriesConstants& constants,
                                          const ComponentIndex& index) {
    check_component_index(constants, index);
    const int p = constants.p;
    const int q = constants.q;
    const int m = index.m;
    const Rat hd = constants.half_dim();
    auto u_at = [&](int tau) -> int {  // u_0 = 0 convention
        return tau == 0 ? 0 : index.u[static_cast<size_t>(tau - 1)];
    };

    ClosedFormComponent out;

    // alpha-only prefactor
    GammaFactorExpr e = GammaFactorExpr::one(0);
    e.constant = Rat(ll_factorial(p), ll_factorial(m));
    e.two_exponent.c0 = Rat(m);      // from (2 pi)^m
    e.two_exponent.c_alpha = Rat(1); // overall 2^alpha
    e.pi_exponent = m;
    for (int j = 1; j <= p; ++j) {
        AffineForm f = AffineForm::constant(Rat(1 - j), 0);
        f.c_alpha = Rat(1);
        e.mul_gamma(f, -1);
    }
    for (int tau = 1; tau <= m; ++tau) {
        const int u = u_at(tau);
        const int uprev = u_at(tau - 1);
        AffineForm lin = AffineForm::constant(hd - Rat(2 * u + tau), 0);
        lin.c_alpha = Rat(-1);
        e.mul_poly(lin, 1);
        AffineForm g1 = AffineForm::constant(Rat(-p + tau + 2 * u), 0);
        g1.c_alpha = Rat(1);
        e.mul_gamma(g1, 1);
        AffineForm g2 = AffineForm::constant(Rat(q - tau - 2 * u), 0);
        g2.c_alpha = Rat(-1);
        e.mul_gamma(g2, 1);
        e.constant /= Rat(ll_factorial(u - uprev));
        AffineForm g3 = AffineForm::constant(hd - Rat(tau - 1 + u + uprev), 0);
        g3.c_alpha = Rat(-1);
        e.mul_gamma(g3, -1);
    }
    for (int sigma = 1; sigma <= m; ++sigma) {
        for (int tau = sigma + 1; tau <= m; ++tau) {
            const int us = u_at(sigma);
            const int ut = u_at(tau);
            const int us_prev = u_at(sigma - 1);
            AffineForm lin = AffineForm::constant(hd - Rat(tau + sigma, 2) - Rat(us + ut), 0);
            lin.c_alpha = Rat(-1);
            e.mul_poly(lin, 1);
            e.constant *= Rat(tau - sigma, 2) + Rat(ut - us);
            e.mul_gamma(AffineForm::constant(Rat(tau - sigma + 1, 2) + Rat(ut - us), 0), 1);
            AffineForm g4 = AffineForm::constant(hd - Rat(tau + sigma, 2) - Rat(us + ut) + Rat(1, 2), 0);
            g4.c_alpha = Rat(-1);
            e.mul_gamma(g4, 1);
            e.mul_gamma(AffineForm::constant(Rat(tau - sigma, 2) + Rat(ut - us_prev), 0), -1);
            AffineForm g5 = AffineForm::constant(hd - Rat(sigma + tau, 2) - Rat(us + ut), 0);
            g5.c_alpha = Rat(-1);
            e.mul_gamma(g5, -1);
        }
    }
    out.e_factor = e;

    // residual density over the p - m remaining variables
    const int nres = p - m;
    GammaFactorExpr dens = GammaFactorExpr::one(nres);
    for (int r = 0; r < nres; ++r) {
        for (const int sign : {+1, -1}) {
            AffineForm f = AffineForm::constant((Rat(m + 1) - hd) / 2, nres);
            f.c_alpha = Rat(1, 2);
            f.c_s[static_cast<size_t>(r)] = Rat(sign, 2);
            dens.mul_gamma(f, 1);
        }
    }
    for (int tau = 1; tau <= m; ++tau) {
        const int u = u_at(tau);
        const int uprev = u_at(tau - 1);
        for (int r = 0; r < nres; ++r) {
            for (const int sign : {+1, -1}) {
                AffineForm lin = AffineForm::constant((hd - Rat(tau + 2 * u)) / 2, nres);
                lin.c_alpha = Rat(-1, 2);
                lin.c_s[static_cast<size_t>(r)] = Rat(sign, 2);
                dens.mul_poly(lin, 1);
                AffineForm gn = AffineForm::constant((hd - Rat(tau - 1 + 2 * u)) / 2, nres);
                gn.c_alpha = Rat(-1, 2);
                gn.c_s[static_cast<size_t>(r)] = Rat(sign, 2);
                dens.mul_gamma(gn, 1);
                AffineForm gd = AffineForm::constant((hd - Rat(tau - 2 - 2 * uprev)) / 2, nres);
                gd.c_alpha = Rat(-1, 2);
                gd.c_s[static_cast<size_t>(r)] = Rat(sign, 2);
                dens.mul_gamma(gd, -1);
            }
        }
    }
    dens.mul_expr(gk_density_on(constants, nres));
    out.density = dens;
    return out;
}

VanishingReport vanishing_analysis(const SeriesConstants& constants, double alpha) {
    VanishingReport report;
    report.alpha = alpha;
    const auto support = enumerate_support(constants, alpha);
    const double rounded = std::round(alpha);
    const bool is_integer = std::abs(alpha - rounded) <= 1e-9;
    const long long n = static_cast<long long>(rounded);

    if (is_integer && constants.p == constants.q && n >= 1 && n <= constants.p - 1) {
        report.regime = "degenerate";
        report.note = "integer parameter in [1, p-1] with p = q lies outside the supported family; "
                      "component analysis is not defined here";
        return report;
    }
    if (is_integer && n >= 0 && n <= constants.p - 1) {
        report.regime = "integer_small";
        const int hh = constants.p - static_cast<int>(n);
        report.note = "only components with at least " + std::to_string(hh) +
                      " pinned coordinates and vanishing leading shifts survive";
        for (const auto& c : support) {
            bool survives = c.m >= hh;
            for (int tau = 0; survives && tau < hh; ++tau) {
                if (c.u[static_cast<size_t>(tau)] != 0) survives = false;
            }
            (survives ? report.survivors : report.vanished).push_back(c);
        }
        return report;
    }
    if (is_integer && n < 0) {
        report.regime = "integer_negative";
        report.note = "only fully pinned components with m + 2 u_m <= " + std::to_string(-n) +
                      " survive";
        for (const auto& c : support) {
            const bool full = c.m == constants.p;
            const bool small_enough =
                full && (c.m + 2 * c.u.back() <= static_cast<int>(-n));
            ((full && small_enough) ? report.survivors : report.vanished).push_back(c);
        }
        return report;
    }
    report.regime = "generic";
    report.note = is_integer ? "integer parameter >= p carries no extra vanishing"
                             : "non-integer parameter: every supported component carries mass";
    report.survivors = support;
    return report;
}

Json affine_to_json(const AffineForm& form) {
    Json j = Json::object();
    j.set("c0", rat_to_string(form.c0));
    j.set("c_alpha", rat_to_string(form.c_alpha));
    Json cs = Json::array();
    for (const Rat& c : form.c_s) cs.push_back(rat_to_string(c));
    j.set("c_s", std::move(cs));
    return j;
}

Json expr_to_json(const GammaFactorExpr& expr) {
    Json j = Json::object();
    j.set("const", rat_to_string(expr.constant));
    j.set("two_pow", affine_to_json(expr.two_exponent));
    j.set("pi_pow", expr.pi_exponent);
    Json gs = Json::array();
    for (const auto& g : expr.gamma_factors) {
        Json item = Json::object();
        item.set("form", affine_to_json(g.form));
        item.set("mult", g.mult);
        gs.push_back(std::move(item));
    }
    j.set("gammas", std::move(gs));
    Json ps = Json::array();
    for (const auto& pf : expr.poly_factors) {
        Json item = Json::object();
        item.set("form", affine_to_json(pf.form));
        item.set("pow", pf.power);
        ps.push_back(std::move(item));
    }
    j.set("polys", std::move(ps));
    return j;
}

Json component_to_json(const PlancherelComponent& comp) {
    Json j = Json::object();
    j.set("m", comp.index.m);
    Json u = Json::array();
    for (const int v : comp.index.u) u.push_back(v);
    j.set("u", std::move(u));
    Json w = Json::object();
    w.set("re", comp.weight.real());
    w.set("im", comp.weight.imag());
    j.set("weight", std::move(w));
    Json fixed = Json::array();
    for (const auto& f : comp.fixed_coordinates) fixed.push_back(affine_to_json(f));
    j.set("fixed_coordinates", std::move(fixed));
    j.set("residual_density", expr_to_json(comp.density));
    return j;
}

} // namespace bkpq
