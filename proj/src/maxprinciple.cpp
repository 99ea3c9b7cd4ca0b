#include "choquet/maxprinciple.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "choquet/lp.hpp"
#include "choquet/measures.hpp"
#include "choquet/parallel.hpp"
#include "choquet/rng.hpp"
#include "choquet/sets.hpp"

namespace choquet {

namespace {

PointSet intersect(const PointSet& a, const PointSet& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                        std::back_inserter(out));
  return PointSet(std::move(out));
}

// Bauer's principle is exact on finite spaces up to floating-point noise.
constexpr double kBauerTol = 1e-9;

}  // namespace

PointSet argmax_set(const ScalarField& f, double tol) {
  if (f.size() == 0) throw InputError("argmax of an empty field");
  if (!f.values.allFinite()) throw InputError("field contains non-finite values");
  if (!(tol >= 0.0)) throw InputError("argmax tolerance must be nonnegative");
  const double top = f.values.maxCoeff();
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] >= top - tol) idx.push_back(j);
  }
  return PointSet(std::move(idx));
}

MaxReport bauer_verify(const FunctionSystem& sys, const ConvexTraceSpec& spec) {
  return bauer_verify(sys, spec, choquet_boundary(sys).boundary());
}

MaxReport bauer_verify(const FunctionSystem& sys, const ConvexTraceSpec& spec,
                       const PointSet& boundary) {
  const ScalarField f = realize_convex_trace(sys, spec);
  MaxReport r;
  r.argmax = argmax_set(f);
  r.max_value = f.values.maxCoeff();
  r.boundary = boundary;
  r.boundary_argmax = intersect(r.argmax, boundary);
  r.boundary_max = -std::numeric_limits<double>::infinity();
  for (std::size_t j : boundary.indices) r.boundary_max = std::max(r.boundary_max, f[j]);
  r.bauer_ok = !r.boundary_argmax.empty() && std::abs(r.boundary_max - r.max_value) <= kBauerTol;
  return r;
}

MultiMaxReport multi_max_verify(const FunctionSystem& sys,
                                const std::vector<ConvexTraceSpec>& specs) {
  return multi_max_verify(sys, specs, choquet_boundary(sys).boundary());
}

MultiMaxReport multi_max_verify(const FunctionSystem& sys,
                                const std::vector<ConvexTraceSpec>& specs,
                                const PointSet& boundary) {
  if (specs.empty()) throw InputError("multi_max_verify needs a nonempty family");
  MultiMaxReport r;
  for (const ConvexTraceSpec& spec : specs) {
    r.argmaxes.push_back(argmax_set(realize_convex_trace(sys, spec)));
  }
  r.common_argmax = r.argmaxes.front();
  for (std::size_t k = 1; k < r.argmaxes.size(); ++k) {
    r.common_argmax = intersect(r.common_argmax, r.argmaxes[k]);
  }
  r.common_boundary_argmax = intersect(r.common_argmax, boundary);
  r.hypothesis_void = r.common_argmax.empty();
  r.ok = r.hypothesis_void || !r.common_boundary_argmax.empty();
  return r;
}

PhiFunction expose(const FunctionSystem& sys, std::size_t x) {
  sys.require_valid();
  sys.check_index(x);
  if (!is_boundary(sys, x).is_boundary) {
    throw InputError("expose: point '" + sys.label(x) + "' is not in the Choquet boundary");
  }
  if (sys.size() == 1) return PhiFunction{Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.dim()))};

  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j != x) others.push_back(j);
  }
  const SeparationResult sep = separate(sys, PointSet(others), x);
  if (!sep.separable || !sep.witness) {
    throw VerificationError("boundary point '" + sys.label(x) + "' could not be exposed");
  }
  const PointSet top = argmax_set(evaluate(sys, *sep.witness), kArgmaxTol);
  if (top != PointSet({x})) {
    throw VerificationError("exposing functional for '" + sys.label(x) +
                            "' has a non-singleton argmax");
  }
  return *sep.witness;
}

bool boundary_characterization(const FunctionSystem& sys, std::size_t x, std::uint64_t seed,
                               std::size_t samples) {
  sys.require_valid();
  sys.check_index(x);
  const bool boundary = is_boundary(sys, x).is_boundary;
  if (boundary) {
    const PhiFunction phi = expose(sys, x);
    return argmax_set(evaluate(sys, phi)) == PointSet({x});
  }

  // Non-boundary: no Phi-function peaks strictly at x ...
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j != x) others.push_back(j);
  }
  if (separate(sys, PointSet(others), x).separable) {
    throw VerificationError("non-boundary point '" + sys.label(x) + "' admits a strict separator");
  }

  // ... and every sampled convex-trace function maximized at x is maximized
  // somewhere else too.
  const auto d = static_cast<Eigen::Index>(sys.dim());
  const auto n = static_cast<Eigen::Index>(sys.size());
  const Eigen::VectorXd bx = sys.basis().col(static_cast<Eigen::Index>(x));
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, s));
    lp::LinearProgram prog(d, n, lp::Bounds::box(1.0));
    for (Eigen::Index j = 0; j < n; ++j) prog.constraints.row(j) = (sys.basis().col(j) - bx).transpose();
    prog.relations.assign(static_cast<std::size_t>(n), lp::Relation::LE);
    for (Eigen::Index i = 0; i < d; ++i) prog.objective(i) = rng.uniform(-1.0, 1.0);
    const lp::Outcome out = lp::solve(prog);
    if (!out.optimal()) throw ConsistencyError("peak-function LP failed");

    ConvexTraceSpec spec;
    spec.pieces.push_back({out.point, 0.0});
    const double peak = out.point.dot(bx);
    const std::size_t extra = 1 + rng.below(3);
    for (std::size_t k = 0; k < extra; ++k) {
      Eigen::VectorXd a(d);
      for (Eigen::Index i = 0; i < d; ++i) a(i) = rng.uniform(-1.0, 1.0);
      const double top = (sys.basis().transpose() * a).maxCoeff();
      spec.pieces.push_back({a, peak - top - 0.1 - rng.uniform()});
    }
    const PointSet top = argmax_set(realize_convex_trace(sys, spec));
    if (!top.contains(x)) throw ConsistencyError("sampled peak function is not maximized at x");
    if (top.size() == 1) {
      throw VerificationError("convex-trace function peaks only at non-boundary point '" +
                              sys.label(x) + "'");
    }
  }
  return false;
}

GenericityReport genericity_experiment(const FunctionSystem& sys, const ScalarField& f,
                                       std::size_t trials, double epsilon, std::uint64_t seed,
                                       double tie_tol) {
  check_field(sys, f);
  if (trials == 0) throw InputError("genericity experiment needs at least one trial");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InputError("epsilon must be positive");
  if (!(tie_tol >= 0.0)) throw InputError("tie tolerance must be nonnegative");
  const auto d = static_cast<Eigen::Index>(sys.dim());

  GenericityReport r;
  r.trials = trials;
  r.perturbation_norm = epsilon;
  r.tie_tol = tie_tol;
  r.seed = seed;
  r.argmax_sizes = parallel_map<std::size_t>(trials, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    Eigen::VectorXd c(d);
    for (Eigen::Index i = 0; i < d; ++i) c(i) = rng.uniform(-epsilon, epsilon);
    const ScalarField g{f.values + sys.basis().transpose() * c};
    return argmax_set(g, tie_tol).size();
  });
  const auto unique = std::count(r.argmax_sizes.begin(), r.argmax_sizes.end(), std::size_t{1});
  r.unique_fraction = static_cast<double>(unique) / static_cast<double>(trials);
  return r;
}

}  // namespace choquet
