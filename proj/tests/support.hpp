#pragma once

#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "choquet/convexify.hpp"
#include "choquet/generators.hpp"
#include "choquet/rng.hpp"
#include "choquet/space.hpp"

namespace testing {

using namespace choquet;

inline ScalarField field(std::initializer_list<double> v) {
  ScalarField f;
  f.values = Eigen::Map<const Eigen::VectorXd>(v.begin(), static_cast<Eigen::Index>(v.size()));
  return f;
}

inline ScalarField field(const Eigen::VectorXd& v) { return ScalarField{v}; }

inline PointSet points(std::initializer_list<std::size_t> idx) { return PointSet(std::vector<std::size_t>(idx)); }

inline std::vector<std::string> labels(const FunctionSystem& sys, const PointSet& s) {
  std::vector<std::string> out;
  for (std::size_t j : s.indices) out.push_back(sys.label(j));
  return out;
}

/// The four-point naturals example: columns (1, 1/k), k = 1..4.
inline FunctionSystem naturals4() { return gen::naturals(4).system; }

inline FunctionSystem from_matrix(const Eigen::MatrixXd& basis) {
  FiniteSpace space;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) space.labels.push_back(std::to_string(j));
  return FunctionSystem(std::move(space), basis);
}

inline Eigen::VectorXd random_vector(Rng& rng, Eigen::Index n, double lo = -1.0, double hi = 1.0) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.uniform(lo, hi);
  return v;
}

/// Calls fn(subset) for every subset of {0..n-1} with 1 <= size <= max_size,
/// in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t max_size, Fn&& fn) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!cur.empty()) fn(cur);
    if (cur.size() == max_size) return;
    for (std::size_t j = start; j < n; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// Oracle by support enumeration, no LP involved: every basic feasible
/// solution of {mu >= 0, B mu = target, sum mu = 1} supported inside
/// `allowed`. Returned as dense n-vectors.
inline std::vector<Eigen::VectorXd> basic_representations(const Eigen::MatrixXd& basis,
                                                          const Eigen::VectorXd& target,
                                                          const std::vector<std::size_t>& allowed) {
  const Eigen::Index d = basis.rows();
  Eigen::MatrixXd aug(d + 1, basis.cols());
  aug.topRows(d) = basis;
  aug.row(d).setOnes();
  Eigen::VectorXd rhs(d + 1);
  rhs.head(d) = target;
  rhs(d) = 1.0;
  const auto rank = static_cast<std::size_t>(Eigen::FullPivLU<Eigen::MatrixXd>(aug).rank());
  std::vector<Eigen::VectorXd> out;
  for_each_subset(allowed.size(), rank, [&](const std::vector<std::size_t>& pick) {
    Eigen::MatrixXd sub(d + 1, static_cast<Eigen::Index>(pick.size()));
    for (std::size_t k = 0; k < pick.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = aug.col(static_cast<Eigen::Index>(allowed[pick[k]]));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
    if (static_cast<std::size_t>(qr.rank()) < pick.size()) return;
    const Eigen::VectorXd w = qr.solve(rhs);
    if ((sub * w - rhs).cwiseAbs().maxCoeff() > 1e-9) return;
    if (w.minCoeff() < -1e-12) return;
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(basis.cols());
    for (std::size_t k = 0; k < pick.size(); ++k) mu(static_cast<Eigen::Index>(allowed[pick[k]])) = std::max(0.0, w(static_cast<Eigen::Index>(k)));
    out.push_back(mu);
  });
  return out;
}

inline std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != skip) out.push_back(j);
  }
  return out;
}

inline std::vector<std::size_t> iota(std::size_t n) { return all_but(n, n); }

/// Column x is a convex combination of the columns in `from`.
inline bool oracle_in_hull(const FunctionSystem& sys, std::size_t x, const std::vector<std::size_t>& from) {
  return !basic_representations(sys.basis(), sys.basis().col(static_cast<Eigen::Index>(x)), from).empty();
}

inline bool oracle_is_vertex(const FunctionSystem& sys, std::size_t x) {
  return !oracle_in_hull(sys, x, all_but(sys.size(), x));
}

/// [min, max] of <mu, f> over representing measures of x, from the vertices
/// of M_x.
inline std::pair<double, double> oracle_key_interval(const FunctionSystem& sys, const ScalarField& f,
                                                     std::size_t x) {
  const auto reps = basic_representations(sys.basis(), sys.basis().col(static_cast<Eigen::Index>(x)), iota(sys.size()));
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& mu : reps) {
    lo = std::min(lo, mu.dot(f.values));
    hi = std::max(hi, mu.dot(f.values));
  }
  return {lo, hi};
}

/// Lower convex envelope of the points (t_j, f_j), evaluated at each t_j.
/// Monotone chain on sorted abscissae.
inline Eigen::VectorXd oracle_lower_envelope(const Eigen::VectorXd& t, const Eigen::VectorXd& f) {
  const auto n = static_cast<std::size_t>(t.size());
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t(static_cast<Eigen::Index>(a)) < t(static_cast<Eigen::Index>(b)); });
  auto px = [&](std::size_t j) { return t(static_cast<Eigen::Index>(j)); };
  auto py = [&](std::size_t j) { return f(static_cast<Eigen::Index>(j)); };
  std::vector<std::size_t> hull;
  for (std::size_t j : order) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = (px(b) - px(a)) * (py(j) - py(a)) - (py(b) - py(a)) * (px(j) - px(a));
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(j);
  }
  Eigen::VectorXd env(t.size());
  for (std::size_t j = 0; j < n; ++j) {
    const double x = px(j);
    double value = py(hull.front());
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      const std::size_t a = hull[k];
      const std::size_t b = hull[k + 1];
      if (px(a) <= x && x <= px(b)) {
        const double s = (x - px(a)) / (px(b) - px(a));
        value = (1 - s) * py(a) + s * py(b);
        break;
      }
    }
    env(static_cast<Eigen::Index>(j)) = value;
  }
  return env;
}

/// Affine pieces in the dual: Q -> a . Q + beta with random a, beta.
inline ConvexTraceSpec random_spec(Rng& rng, std::size_t dim, std::size_t pieces) {
  ConvexTraceSpec spec;
  for (std::size_t k = 0; k < pieces; ++k) {
    spec.pieces.push_back({random_vector(rng, static_cast<Eigen::Index>(dim)), rng.uniform(-1.0, 1.0)});
  }
  return spec;
}

}  // namespace testing
