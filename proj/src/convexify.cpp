#include "choquet/convexify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "choquet/lp.hpp"
#include "choquet/measures.hpp"
#include "choquet/parallel.hpp"

namespace choquet {

double phi_conjugate(const FunctionSystem& sys, const ScalarField& f, const PhiFunction& phi) {
  check_field(sys, f);
  const ScalarField v = evaluate(sys, phi);
  return (v.values - f.values).maxCoeff();
}

ScalarField biconjugate(const FunctionSystem& sys, const ScalarField& f) {
  sys.require_valid();
  check_field(sys, f);
  const auto n = static_cast<Eigen::Index>(sys.size());
  const auto d = static_cast<Eigen::Index>(sys.dim());

  // maximize b_x . c  subject to  B^T c <= f, c free.
  lp::LinearProgram base(d, n, lp::Bounds::free());
  base.constraints = sys.basis().transpose();
  base.relations.assign(static_cast<std::size_t>(n), lp::Relation::LE);
  base.rhs = f.values;

  const auto values = parallel_map<double>(sys.size(), [&](std::size_t x) {
    lp::LinearProgram prog = base;
    prog.objective = -sys.basis().col(static_cast<Eigen::Index>(x));
    const lp::Outcome out = lp::solve(prog);
    if (!out.optimal()) {
      // The constant min f is always a feasible minorant, and the constants
      // condition bounds the objective.
      throw ConsistencyError(std::string("biconjugate LP returned ") + lp::to_string(out.status) +
                             " at point '" + sys.label(x) + "'");
    }
    return -out.value;
  });
  ScalarField g{Eigen::VectorXd(n)};
  for (Eigen::Index j = 0; j < n; ++j) g.values(j) = values[static_cast<std::size_t>(j)];
  return g;
}

bool is_choquet_convex(const FunctionSystem& sys, const ScalarField& f, double tol) {
  if (!(tol >= 0.0)) throw InputError("convexity tolerance must be nonnegative");
  const ScalarField g = biconjugate(sys, f);
  return (f.values - g.values).cwiseAbs().maxCoeff() <= tol;
}

ScalarField hat_positive(const FunctionSystem& sys, const ScalarField& f) {
  sys.require_valid();
  check_field(sys, f);
  const auto values = parallel_map<double>(sys.size(), [&](std::size_t x) {
    return key_interval(sys, f, x).lo;
  });
  return {Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()))};
}

ScalarField hat_signed(const FunctionSystem& sys, const ScalarField& f, double alpha) {
  sys.require_valid();
  check_field(sys, f);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("strip width alpha must be positive");
  const auto n = static_cast<Eigen::Index>(sys.size());
  const auto d = static_cast<Eigen::Index>(sys.dim());
  const double lo = f.values.minCoeff() - alpha;
  const double hi = f.values.maxCoeff() + alpha;

  // minimize <nu, f> over signed nu with B nu = B e_x.
  lp::LinearProgram base(n, d, lp::Bounds::free());
  base.constraints = sys.basis();
  base.objective = f.values;

  const auto values = parallel_map<double>(sys.size(), [&](std::size_t x) {
    lp::LinearProgram prog = base;
    prog.rhs = sys.basis().col(static_cast<Eigen::Index>(x));
    const lp::Outcome out = lp::solve(prog);
    switch (out.status) {
      case lp::Status::Unbounded: return lo;
      case lp::Status::Optimal: return std::clamp(out.value, lo, hi);
      case lp::Status::Infeasible: break;
    }
    throw ConsistencyError("signed trace-convexification LP infeasible at point '" +
                           sys.label(x) + "'");
  });
  return {Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()))};
}

ScalarField sup_family(const FunctionSystem& sys, const std::vector<ScalarField>& fields,
                       double tol) {
  if (fields.empty()) throw InputError("sup_family needs at least one field");
  ScalarField out{Eigen::VectorXd::Constant(static_cast<Eigen::Index>(sys.size()),
                                            -std::numeric_limits<double>::infinity())};
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (!is_choquet_convex(sys, fields[k], tol)) {
      throw InputError("sup_family input " + std::to_string(k) + " is not Choquet convex");
    }
    out.values = out.values.cwiseMax(fields[k].values);
  }
  return out;
}

void check_spec(const FunctionSystem& sys, const ConvexTraceSpec& spec) {
  if (spec.pieces.empty()) throw InputError("convex-trace spec has no affine pieces");
  for (std::size_t k = 0; k < spec.pieces.size(); ++k) {
    const AffinePiece& p = spec.pieces[k];
    if (static_cast<std::size_t>(p.direction.size()) != sys.dim()) {
      throw InputError("affine piece " + std::to_string(k) + " has " +
                       std::to_string(p.direction.size()) + " coefficients, basis has " +
                       std::to_string(sys.dim()));
    }
    if (!p.direction.allFinite() || !std::isfinite(p.offset)) {
      throw InputError("affine piece " + std::to_string(k) + " has non-finite entries");
    }
  }
}

double evaluate_spec(const ConvexTraceSpec& spec, const Eigen::VectorXd& q) {
  double best = -std::numeric_limits<double>::infinity();
  for (const AffinePiece& p : spec.pieces) best = std::max(best, p.direction.dot(q) + p.offset);
  return best;
}

ScalarField realize_convex_trace(const FunctionSystem& sys, const ConvexTraceSpec& spec) {
  check_spec(sys, spec);
  const auto n = static_cast<Eigen::Index>(sys.size());
  ScalarField f{Eigen::VectorXd(n)};
  for (Eigen::Index j = 0; j < n; ++j) f.values(j) = evaluate_spec(spec, sys.basis().col(j));
  return f;
}

}  // namespace choquet
