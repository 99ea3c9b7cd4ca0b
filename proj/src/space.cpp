#include "choquet/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace choquet {

Measure Measure::dirac(std::size_t n, std::size_t j) {
  Measure m;
  m.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  m.weights(static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

namespace {

ValidationReport compute_report(const Eigen::MatrixXd& basis) {
  ValidationReport r;
  const Eigen::Index n = basis.cols();

  // Constants: ones vector against the row space, i.e. solve B^T w = 1.
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  if (basis.rows() == 0) {
    r.constants_residual = 1.0;
  } else {
    const Eigen::MatrixXd bt = basis.transpose();
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(bt);
    const Eigen::VectorXd w = cod.solve(ones);
    r.constants_residual = (bt * w - ones).cwiseAbs().maxCoeff();
  }
  r.constants_ok = r.constants_residual <= kConstantsTol;

  r.min_separation = std::numeric_limits<double>::infinity();
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const double dist = (basis.col(a) - basis.col(b)).cwiseAbs().maxCoeff();
      if (dist < r.min_separation) {
        r.min_separation = dist;
        r.closest_a = static_cast<std::size_t>(a);
        r.closest_b = static_cast<std::size_t>(b);
      }
    }
  }
  r.separation_ok = r.min_separation > kSeparationTol;
  return r;
}

}  // namespace

FunctionSystem::FunctionSystem(FiniteSpace space, Eigen::MatrixXd basis)
    : space_(std::move(space)), basis_(std::move(basis)) {
  const std::size_t n = space_.size();
  if (n == 0) throw InputError("space must contain at least one point");
  if (static_cast<std::size_t>(basis_.cols()) != n) {
    throw InputError("basis has " + std::to_string(basis_.cols()) + " columns but space has " +
                     std::to_string(n) + " points");
  }
  if (basis_.rows() == 0) throw InputError("basis must have at least one row");
  if (!basis_.allFinite()) throw InputError("basis contains non-finite entries");
  if (space_.coords && static_cast<std::size_t>(space_.coords->rows()) != n) {
    throw InputError("coords must have one row per point");
  }
  if (space_.coords && !space_.coords->allFinite()) throw InputError("coords contain non-finite entries");
  if (!space_.ambient.empty() && space_.ambient.size() != n) {
    throw InputError("ambient mask must have one entry per point");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!index_.emplace(space_.labels[j], j).second) {
      throw InputError("duplicate point label '" + space_.labels[j] + "'");
    }
  }
  report_ = compute_report(basis_);
}

std::size_t FunctionSystem::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown point label '" + label + "'");
  return it->second;
}

void FunctionSystem::require_valid() const {
  if (!report_.constants_ok) {
    throw InputError("function system does not contain the constants (residual " +
                     std::to_string(report_.constants_residual) + ")");
  }
  if (!report_.separation_ok) {
    throw InputError("function system does not separate points '" + label(report_.closest_a) +
                     "' and '" + label(report_.closest_b) + "'");
  }
}

void FunctionSystem::check_index(std::size_t j) const {
  if (j >= size()) {
    throw InputError("point index " + std::to_string(j) + " out of range (n = " +
                     std::to_string(size()) + ")");
  }
}

ValidationReport validate(const FunctionSystem& sys) { return sys.report(); }

Eigen::VectorXd embed(const FunctionSystem& sys, std::size_t j) {
  sys.check_index(j);
  return sys.basis().col(static_cast<Eigen::Index>(j));
}

void check_field(const FunctionSystem& sys, const ScalarField& f) {
  if (f.size() != sys.size()) {
    throw InputError("field has " + std::to_string(f.size()) + " values, space has " +
                     std::to_string(sys.size()) + " points");
  }
  if (!f.values.allFinite()) throw InputError("field contains non-finite values");
}

void check_phi(const FunctionSystem& sys, const PhiFunction& phi) {
  if (static_cast<std::size_t>(phi.coeffs.size()) != sys.dim()) {
    throw InputError("Phi-function has " + std::to_string(phi.coeffs.size()) +
                     " coefficients, basis has " + std::to_string(sys.dim()));
  }
  if (!phi.coeffs.allFinite()) throw InputError("Phi-function has non-finite coefficients");
}

ScalarField evaluate(const FunctionSystem& sys, const PhiFunction& phi) {
  check_phi(sys, phi);
  return {sys.basis().transpose() * phi.coeffs};
}

double pair(const Measure& mu, const ScalarField& f) {
  if (mu.weights.size() != f.values.size()) {
    throw InputError("measure and field sizes differ");
  }
  return mu.weights.dot(f.values);
}

double span_residual(const FunctionSystem& sys, const ScalarField& f) {
  check_field(sys, f);
  const Eigen::MatrixXd bt = sys.basis().transpose();
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(bt);
  const Eigen::VectorXd w = cod.solve(f.values);
  return (bt * w - f.values).cwiseAbs().maxCoeff();
}

PointSet::PointSet(std::vector<std::size_t> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

PointSet PointSet::all(std::size_t n) {
  PointSet s;
  s.indices.resize(n);
  for (std::size_t j = 0; j < n; ++j) s.indices[j] = j;
  return s;
}

bool PointSet::contains(std::size_t j) const {
  return std::binary_search(indices.begin(), indices.end(), j);
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end());
}

}  // namespace choquet
