#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "choquet/space.hpp"

/// Finite surrogates of the standard example families, each with its known
/// Choquet boundary.
namespace choquet::gen {

struct GeneratedInstance {
  FunctionSystem system;
  /// Known boundary; absent for exercise configurations with no ground truth.
  std::optional<PointSet> expected_boundary;
  /// Generator name, parameters and caveats about the finite truncation.
  nlohmann::json notes;
};

/// Grid t_j = j/(n-1) on [0,1] with the affine functions span{1, t}.
GeneratedInstance interval_affine(std::size_t n_grid);

/// Same grid with Phi = all functions (identity basis).
GeneratedInstance interval_full(std::size_t n_grid);

/// Level-L Cantor surrogate: points_per_cell equispaced samples in each
/// surviving cell plus one midpoint per removed interval; the basis is the
/// piecewise-linear hat basis on the cell samples, so every function is
/// affine across each removed interval.
GeneratedInstance cantor(int level, std::size_t points_per_cell = 3);

/// Unit disk: n_circle equispaced points on |z| = 1, a center point and
/// n_interior_rings rings of radius 0.8 k / n_interior_rings (8k points on
/// ring k); basis 1, Re z^k, Im z^k for k = 1..degree.
GeneratedInstance disk(std::size_t n_circle, std::size_t n_interior_rings, std::size_t degree);

/// Harmonic-polynomial system of the given degree on arbitrary points.
FunctionSystem disk_system(const std::vector<std::complex<double>>& points,
                           const std::vector<std::string>& labels, std::size_t degree);

/// Truncation {1..n} of the naturals with Phi = span{1, b}, b_k = 1/k.
/// With alternating = true, b_k = 1 + (-1)^k / k instead (no known boundary).
GeneratedInstance naturals(std::size_t n, bool alternating = false);

/// Ones row plus d-1 rows of seeded uniform values, resampled until the
/// columns separate. The expected boundary is computed by the measures
/// module, so this is only a fuzzing substrate.
GeneratedInstance random(std::size_t n, std::size_t d, std::uint64_t seed);

/// Generator names accepted by the CLI `gen` subcommand.
const std::vector<std::string>& names();

}  // namespace choquet::gen
