#pragma once

#include <optional>
#include <span>
#include <vector>

#include "choquet/space.hpp"

namespace choquet {

/// A point is classified as Choquet-boundary when the smallest mass a
/// representing measure can put on it is at least 1 - kBoundaryTol.
inline constexpr double kBoundaryTol = 1e-7;

/// [min, max] of the integral of f over the representing measures of a point.
struct KeyInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct BoundaryTest {
  bool is_boundary = false;
  /// min mu_x over mu in M_x(Phi).
  double min_self_mass = 1.0;
};

struct BoundaryEntry {
  bool is_boundary = false;
  double min_self_mass = 1.0;
  bool vertex_test = false;
};

struct BoundaryReport {
  std::vector<BoundaryEntry> points;

  PointSet boundary() const;
};

/// A probability measure mu with B mu = B e_x. With an objective, the one
/// minimizing <mu, objective>.
Measure representing_measure(const FunctionSystem& sys, std::size_t x,
                             const std::optional<ScalarField>& objective = std::nullopt);

KeyInterval key_interval(const FunctionSystem& sys, const ScalarField& f, std::size_t x);

BoundaryTest is_boundary(const FunctionSystem& sys, std::size_t x);

/// True iff column x is not a convex combination of the other columns.
bool is_vertex(const FunctionSystem& sys, std::size_t x);

/// Runs both characterizations at every point; throws ConsistencyError if
/// they disagree anywhere.
BoundaryReport choquet_boundary(const FunctionSystem& sys);

/// Is column x in the convex hull of the given columns? An empty generator
/// list is never a hull.
bool in_convex_hull(const FunctionSystem& sys, std::size_t x,
                    std::span<const std::size_t> generators);

}  // namespace choquet
