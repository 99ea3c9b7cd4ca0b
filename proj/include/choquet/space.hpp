#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "choquet/errors.hpp"

namespace choquet {

/// Finite sample of the compact space: labelled points, optional plot
/// coordinates, and an optional "ambient" mask marking which points belong to
/// the dense subspace X (the rest are ideal points of the compactification).
struct FiniteSpace {
  std::vector<std::string> labels;
  std::optional<Eigen::MatrixX2d> coords;
  /// Empty means every point is ambient.
  std::vector<bool> ambient;

  std::size_t size() const { return labels.size(); }
  bool is_ambient(std::size_t j) const { return ambient.empty() || ambient[j]; }
};

/// Values of a function on the points of the space.
struct ScalarField {
  Eigen::VectorXd values;

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
  double operator[](std::size_t j) const { return values(static_cast<Eigen::Index>(j)); }
};

enum class MeasureKind { Signed, Probability };

struct Measure {
  Eigen::VectorXd weights;
  MeasureKind kind = MeasureKind::Probability;

  static Measure dirac(std::size_t n, std::size_t j);
  std::size_t size() const { return static_cast<std::size_t>(weights.size()); }
};

/// phi = sum_i coeffs[i] * phi_i for the basis of a FunctionSystem.
struct PhiFunction {
  Eigen::VectorXd coeffs;
};

/// Outcome of checking the two standing hypotheses on a function system.
struct ValidationReport {
  bool constants_ok = false;
  double constants_residual = 0.0;
  bool separation_ok = false;
  double min_separation = 0.0;
  /// Pair of columns achieving min_separation (equal when n == 1).
  std::size_t closest_a = 0;
  std::size_t closest_b = 0;

  bool passed() const { return constants_ok && separation_ok; }
};

inline constexpr double kConstantsTol = 1e-9;
inline constexpr double kSeparationTol = 1e-9;

/// The function system Phi evaluated on a finite space: basis(i, j) is the
/// i-th basis function at point j, so column j is the Dirac embedding of
/// point j. Immutable after construction.
class FunctionSystem {
 public:
  /// Throws InputError on shape mismatch, non-finite entries or duplicate
  /// labels. Does not require the system to pass validate(); analysis entry
  /// points call require_valid() for that.
  FunctionSystem(FiniteSpace space, Eigen::MatrixXd basis);

  std::size_t size() const { return space_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.rows()); }
  const FiniteSpace& space() const { return space_; }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const std::string& label(std::size_t j) const { return space_.labels.at(j); }
  /// Throws InputError for unknown labels.
  std::size_t index_of(const std::string& label) const;
  const ValidationReport& report() const { return report_; }

  /// Throws InputError naming the failed hypothesis.
  void require_valid() const;
  void check_index(std::size_t j) const;

 private:
  FiniteSpace space_;
  Eigen::MatrixXd basis_;
  std::unordered_map<std::string, std::size_t> index_;
  ValidationReport report_;
};

ValidationReport validate(const FunctionSystem& sys);

/// Column j of the basis matrix.
Eigen::VectorXd embed(const FunctionSystem& sys, std::size_t j);

ScalarField evaluate(const FunctionSystem& sys, const PhiFunction& phi);

double pair(const Measure& mu, const ScalarField& f);

/// Least-squares distance of f from the row span of the basis (sup norm of
/// the residual).
double span_residual(const FunctionSystem& sys, const ScalarField& f);

/// Shape checks shared by the analysis modules.
void check_field(const FunctionSystem& sys, const ScalarField& f);
void check_phi(const FunctionSystem& sys, const PhiFunction& phi);

/// Sorted, duplicate-free list of point indices.
struct PointSet {
  std::vector<std::size_t> indices;

  PointSet() = default;
  explicit PointSet(std::vector<std::size_t> idx);
  static PointSet all(std::size_t n);

  bool empty() const { return indices.empty(); }
  std::size_t size() const { return indices.size(); }
  bool contains(std::size_t j) const;
  bool operator==(const PointSet&) const = default;
};

bool is_subset(const PointSet& a, const PointSet& b);

}  // namespace choquet
