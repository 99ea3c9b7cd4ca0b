#pragma once

#include <cstdint>
#include <vector>

#include "choquet/convexify.hpp"
#include "choquet/space.hpp"

namespace choquet {

inline constexpr double kArgmaxTol = 1e-9;
inline constexpr double kTieTol = 1e-9;

struct MaxReport {
  PointSet argmax;
  double max_value = 0.0;
  PointSet boundary;
  PointSet boundary_argmax;
  double boundary_max = 0.0;
  bool bauer_ok = false;
};

struct MultiMaxReport {
  std::vector<PointSet> argmaxes;
  PointSet common_argmax;
  PointSet common_boundary_argmax;
  /// The family has no common maximizer, so there is nothing to check.
  bool hypothesis_void = false;
  bool ok = false;
};

struct GenericityReport {
  std::size_t trials = 0;
  double unique_fraction = 0.0;
  double perturbation_norm = 0.0;
  double tie_tol = kTieTol;
  std::uint64_t seed = 0;
  /// Per trial: size of the argmax set of f + phi.
  std::vector<std::size_t> argmax_sizes;
};

/// { j : f_j >= max f - tol }.
PointSet argmax_set(const ScalarField& f, double tol = kArgmaxTol);

/// Realizes the spec and checks that its maximum is attained on the Choquet
/// boundary. Never throws on a failed check; inspect bauer_ok.
MaxReport bauer_verify(const FunctionSystem& sys, const ConvexTraceSpec& spec);
/// Same, with a precomputed boundary.
MaxReport bauer_verify(const FunctionSystem& sys, const ConvexTraceSpec& spec,
                       const PointSet& boundary);

MultiMaxReport multi_max_verify(const FunctionSystem& sys,
                                const std::vector<ConvexTraceSpec>& specs);
MultiMaxReport multi_max_verify(const FunctionSystem& sys,
                                const std::vector<ConvexTraceSpec>& specs,
                                const PointSet& boundary);

/// A Phi-function whose unique maximizer is x. Throws InputError if x is not
/// a boundary point and VerificationError if the LP witness fails to expose.
PhiFunction expose(const FunctionSystem& sys, std::size_t x);

/// Decides boundary membership through maximizer sets of convex-trace
/// functions: exposing functional for boundary points, a sampled family of
/// convex-trace functions peaking at x for the rest. Throws
/// VerificationError if the verdict disagrees with is_boundary().
bool boundary_characterization(const FunctionSystem& sys, std::size_t x,
                               std::uint64_t seed = 0, std::size_t samples = 16);

/// Counts how often f + phi has a unique maximizer for phi drawn uniformly
/// from the coefficient box [-epsilon, epsilon]^d.
GenericityReport genericity_experiment(const FunctionSystem& sys, const ScalarField& f,
                                       std::size_t trials, double epsilon, std::uint64_t seed,
                                       double tie_tol = kTieTol);

}  // namespace choquet
