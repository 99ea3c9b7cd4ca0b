#pragma once

#include <vector>

#include "choquet/space.hpp"

namespace choquet {

inline constexpr double kConvexTol = 1e-7;

/// Q -> direction . Q + offset on the dual of Phi.
struct AffinePiece {
  Eigen::VectorXd direction;
  double offset = 0.0;
};

/// A convex function on K(Phi) given as the max of finitely many affine
/// functionals. Composing it with the embedding yields a convex-trace field.
struct ConvexTraceSpec {
  std::vector<AffinePiece> pieces;
};

/// f^x(phi) = max_j (phi(x_j) - f(x_j)).
double phi_conjugate(const FunctionSystem& sys, const ScalarField& f, const PhiFunction& phi);

/// f^xx(x) = sup { phi(x) : phi in Phi, phi <= f }, one LP per point over the
/// basis coefficients.
ScalarField biconjugate(const FunctionSystem& sys, const ScalarField& f);

/// ||f - f^xx||_inf <= tol.
bool is_choquet_convex(const FunctionSystem& sys, const ScalarField& f, double tol = kConvexTol);

/// Trace-convexification restricted to positive measures:
/// inf { <mu, f> : mu in M_x(Phi) }, solved over measures. Agrees with
/// biconjugate() by LP duality.
ScalarField hat_positive(const FunctionSystem& sys, const ScalarField& f);

/// Trace-convexification over signed measures nu with B nu = B e_x, clamped
/// to the strip [min f - alpha, max f + alpha]. Collapses to min f - alpha
/// whenever f is outside the span of the basis.
ScalarField hat_signed(const FunctionSystem& sys, const ScalarField& f, double alpha = 1.0);

/// Pointwise max of Choquet-convex fields. Throws InputError if an input is
/// not Choquet convex.
ScalarField sup_family(const FunctionSystem& sys, const std::vector<ScalarField>& fields,
                       double tol = kConvexTol);

/// f(x_j) = max_i (a_i . b_j + beta_i).
ScalarField realize_convex_trace(const FunctionSystem& sys, const ConvexTraceSpec& spec);

/// The same max evaluated at an arbitrary point of the dual.
double evaluate_spec(const ConvexTraceSpec& spec, const Eigen::VectorXd& q);

void check_spec(const FunctionSystem& sys, const ConvexTraceSpec& spec);

}  // namespace choquet
