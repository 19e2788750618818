// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Exact symbolic layer for spectral densities.  A density is a product of
// gamma functions and polynomial factors whose arguments are affine forms in
// one deformation parameter (alpha) and finitely many spectral variables
// (s_1..s_n), together with an exact rational prefactor, a power of 2 with
// affine exponent, and an integer power of pi.  Iterated residues and
// substitutions are performed exactly over the rationals; doubles enter only
// at evaluation time.

#ifndef BKPQ_SYMBOLIC_HPP
#define BKPQ_SYMBOLIC_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bkpq/gamma.hpp"
#include "bkpq/json_io.hpp"
#include "bkpq/rational.hpp"

namespace bkpq {

/// @brief Structural constants of the rank-p series at signature (p, q).
struct SeriesConstants {
    int p = 1;
    int q = 1;
    Rat h;           ///< (p+q)/2 - 1, the largest half-sum entry
    int dim_k = 1;   ///< multiplicity of the restricted roots' half-space (always 1 here)

    SeriesConstants(int p_, int q_);

    /// @brief Exact (p+q)/2.
    Rat half_dim() const { return h + 1; }
};

/// @brief Affine form c0 + c_alpha * alpha + sum_k c_s[k] * s_k with exact
/// rational coefficients.
struct AffineForm {
    Rat c0 = Rat(0);
    Rat c_alpha = Rat(0);
    std::vector<Rat> c_s;

    AffineForm() = default;
    explicit AffineForm(int nvars) : c_s(static_cast<size_t>(nvars), Rat(0)) {}

    static AffineForm constant(const Rat& v, int nvars);
    static AffineForm alpha_term(const Rat& coeff, int nvars);
    static AffineForm variable(int k, const Rat& coeff, int nvars);

    int nvars() const { return static_cast<int>(c_s.size()); }
    bool is_constant() const;
    bool is_identically_zero() const;

    AffineForm& operator+=(const AffineForm& other);
    AffineForm& scale(const Rat& factor);

    /// @brief Numeric value at the given parameter point.
    Cx eval(double alpha, std::span<const Cx> s) const;

    bool operator==(const AffineForm&) const = default;
};

/// @brief Gamma(form)^mult; negative mult means denominator powers.
struct GammaFactor {
    AffineForm form;
    int mult = 1;
    bool operator==(const GammaFactor&) const = default;
};

/// @brief (form)^power with power >= 1.
struct PolyFactor {
    AffineForm form;
    int power = 1;
    bool operator==(const PolyFactor&) const = default;
};

/// @brief Product expression
///   constant * 2^(two_exponent) * pi^(pi_exponent)
///     * prod Gamma(g.form)^(g.mult) * prod (p.form)^(p.power).
///
/// The zero expression is represented by constant == 0 with empty factor
/// lists.  Gamma factors with equal forms are merged; factors whose merged
/// multiplicity is zero are dropped.
struct GammaFactorExpr {
    Rat constant = Rat(1);
    AffineForm two_exponent;
    int pi_exponent = 0;
    std::vector<GammaFactor> gamma_factors;
    std::vector<PolyFactor> poly_factors;
    int num_vars = 0;

    static GammaFactorExpr one(int nvars);
    static GammaFactorExpr zero(int nvars);

    bool is_zero() const { return constant == Rat(0); }

    /// @brief Multiply by Gamma(form)^mult, merging with existing factors.
    void mul_gamma(const AffineForm& form, int mult);
    /// @brief Multiply by (form)^power; a constant form folds into the prefactor.
    void mul_poly(const AffineForm& form, int power);
    /// @brief Multiply by another expression over the same variables.
    void mul_expr(const GammaFactorExpr& other);
};

/// @brief Evaluate an expression at numeric (alpha, s).
///
/// Gamma arguments and polynomial factors that land on a singular point
/// (within 1e-9 of a non-positive integer, resp. of zero) are resolved as a
/// one-parameter limit along the alpha direction: each singular item
/// contributes its leading Laurent/Taylor coefficient with approach rate given
/// by the alpha-coefficient of its argument.  If the net order is negative the
/// limit is zero; if positive, or if a singular item does not move with alpha,
/// PoleError is thrown.  Throws OverflowError when the magnitude leaves double
/// range and ShapeError when s.size() != num_vars.
Cx evaluate(const GammaFactorExpr& expr, double alpha, std::span<const Cx> s);

/// @brief Substitute s_var = value (an affine form independent of s_var) and
/// drop the variable, re-indexing the remaining ones.  Throws IndexError for a
/// bad variable index and ShapeError for size or dependence violations.
GammaFactorExpr substitute(const GammaFactorExpr& expr, int var_index, const AffineForm& value);

/// @brief Take the residue at the simple pole s_var = pole.
///
/// Requires exactly one gamma factor to become singular under the
/// substitution (its argument an exact non-positive-integer constant), with
/// multiplicity one, a nonzero coefficient on s_var, and no other factor
/// singular or vanishing identically there.  Throws NoPoleError when the
/// expression is regular at the claimed pole and PoleOrderError when the pole
/// order differs from one.
GammaFactorExpr residue_step(const GammaFactorExpr& expr, int var_index, const AffineForm& pole);

/// @brief Spectral-multiplicity density as a gamma-factor expression over
/// nvars spectral variables (per-coordinate factors use the (p, q) offsets).
GammaFactorExpr gk_density_on(const SeriesConstants& constants, int nvars);

/// @brief Spectral-multiplicity density over the full p variables.
GammaFactorExpr gk_density(const SeriesConstants& constants);

/// @brief Elementary (trigonometric/polynomial) closed form of the same
/// density, used as an independent route for cross-checking gk_density.
Cx gk_density_elementary(const SeriesConstants& constants, std::span<const Cx> s);

/// @brief Integrand of the continuous part in the large-parameter regime:
///   2^(p alpha) / prod_j Gamma(alpha - j + 1)
///     * prod_k Gamma((alpha - (p+q)/2 + 1 + s_k)/2) Gamma((alpha - (p+q)/2 + 1 - s_k)/2)
///     * gk_density.
GammaFactorExpr large_alpha_integrand(const SeriesConstants& constants);

/// @brief Index (m, u) of a support component: m pinned coordinates with
/// non-decreasing integer shifts u_1 <= ... <= u_m >= 0.
struct ComponentIndex {
    int m = 0;
    std::vector<int> u;
    bool operator==(const ComponentIndex&) const = default;
};

/// @brief All components present at the given alpha: m = 0 always, plus every
/// (m, u) with u non-decreasing and alpha + m + 2 u_m < (p+q)/2 strictly.
/// Ordered by m ascending, then u lexicographically.
std::vector<ComponentIndex> enumerate_support(const SeriesConstants& constants, double alpha);

/// @brief Pinned coordinate value s_tau = alpha - (p+q)/2 + tau + 2 u_tau as an
/// affine form in alpha over nvars residual variables.
AffineForm pinned_coordinate(const SeriesConstants& constants, int tau, int u_tau, int nvars);

/// @brief A discrete (or the continuous, m = 0) piece of the decomposition.
struct PlancherelComponent {
    ComponentIndex index;
    Cx weight;                                  ///< (-4 pi)^m p!/(p-m)!; 1 for m = 0
    std::vector<AffineForm> fixed_coordinates;  ///< pinned s_1..s_m as forms in alpha
    GammaFactorExpr density;                    ///< over the p - m residual variables
};

/// @brief Component density via iterated exact residues of the continuous
/// integrand at the pinned coordinates.  This route is canonical.
PlancherelComponent component_by_cascade(const SeriesConstants& constants, const ComponentIndex& index);

/// @brief Component density from the closed-form product package
/// (independent route used to cross-check the cascade).
struct ClosedFormComponent {
    GammaFactorExpr e_factor;  ///< alpha-only prefactor (num_vars == 0)
    GammaFactorExpr density;   ///< over the p - m residual variables
};
ClosedFormComponent component_closed_form(const SeriesConstants& constants, const ComponentIndex& index);

/// @brief Which components carry nonzero mass at special integer parameters.
struct VanishingReport {
    double alpha = 0.0;
    std::string regime;  ///< "generic", "integer_small", "integer_negative", "degenerate"
    std::vector<ComponentIndex> survivors;
    std::vector<ComponentIndex> vanished;
    std::string note;
};
VanishingReport vanishing_analysis(const SeriesConstants& constants, double alpha);

/// @brief JSON encodings (stable field order, exact rationals as "n/d").
Json affine_to_json(const AffineForm& form);
Json expr_to_json(const GammaFactorExpr& expr);
Json component_to_json(const PlancherelComponent& comp);

} // namespace bkpq

#endif // BKPQ_SYMBOLIC_HPP
