#pragma once

#include <optional>

#include "choquet/space.hpp"

namespace choquet {

/// Smallest gap phi(x) - max_C phi, over coefficients in [-1, 1]^d, that
/// counts as a strict separation.
inline constexpr double kSeparationMargin = 1e-9;

struct SeparationResult {
  bool separable = false;
  std::optional<PhiFunction> witness;
  /// Best gap phi(x) - max_C phi over coefficients in [-1, 1]^d.
  double margin = 0.0;
};

struct KreinMilmanReport {
  PointSet hull;                // co_Phi(S)
  PointSet extreme;             // Ext_Phi(S)
  PointSet hull_of_extreme;     // co_Phi(Ext_Phi(S))
  bool holds = false;
};

/// Ambient points x (plus S itself) whose embedding lies in the convex hull
/// of the embedded S. Throws InputError for empty S.
PointSet trace_hull(const FunctionSystem& sys, const PointSet& s);

bool is_trace_convex(const FunctionSystem& sys, const PointSet& c);

/// Finds phi with phi <= 0 on C and phi(x) = 1 by maximizing the gap over
/// unit-box coefficients, then shifting and rescaling. Cross-checks the
/// answer against hull membership and throws ConsistencyError on
/// disagreement.
SeparationResult separate(const FunctionSystem& sys, const PointSet& c, std::size_t x);

/// Points of S whose embedding is an extreme point of conv(embedded S).
PointSet phi_extreme_points(const FunctionSystem& sys, const PointSet& s);

KreinMilmanReport krein_milman_verify(const FunctionSystem& sys, const PointSet& s);

/// x is in the open Ky Fan segment ]y, z[: every phi with
/// phi(x) <= min(phi(y), phi(z)) has phi(x) = phi(y) = phi(z).
bool in_kyfan_segment(const FunctionSystem& sys, std::size_t x, std::size_t y, std::size_t z);

/// Closed segment [y, z]_Phi: the endpoints plus every point of the open
/// segment.
PointSet kyfan_segment(const FunctionSystem& sys, std::size_t y, std::size_t z);

/// x in S is Ky Fan extreme if it lies in no open segment between two other
/// points of S.
PointSet kyfan_extreme_points(const FunctionSystem& sys, const PointSet& s);

}  // namespace choquet
