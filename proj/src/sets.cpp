#include "choquet/sets.hpp"

#include <algorithm>
#include <limits>

#include "choquet/lp.hpp"
#include "choquet/measures.hpp"
#include "choquet/parallel.hpp"

namespace choquet {

namespace {

void check_set(const FunctionSystem& sys, const PointSet& s, const char* what) {
  if (s.empty()) throw InputError(std::string(what) + ": point set must be nonempty");
  for (std::size_t j : s.indices) sys.check_index(j);
}

PointSet from_flags(const std::vector<char>& flags) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < flags.size(); ++j) {
    if (flags[j]) idx.push_back(j);
  }
  return PointSet(std::move(idx));
}

}  // namespace

PointSet trace_hull(const FunctionSystem& sys, const PointSet& s) {
  sys.require_valid();
  check_set(sys, s, "trace_hull");
  const auto flags = parallel_map<char>(sys.size(), [&](std::size_t x) -> char {
    if (s.contains(x)) return 1;
    if (!sys.space().is_ambient(x)) return 0;
    return in_convex_hull(sys, x, s.indices) ? 1 : 0;
  });
  return from_flags(flags);
}

bool is_trace_convex(const FunctionSystem& sys, const PointSet& c) {
  return trace_hull(sys, c) == c;
}

SeparationResult separate(const FunctionSystem& sys, const PointSet& c, std::size_t x) {
  sys.require_valid();
  check_set(sys, c, "separate");
  sys.check_index(x);
  if (c.contains(x)) throw InputError("separate: point '" + sys.label(x) + "' belongs to the set");

  const auto d = static_cast<Eigen::Index>(sys.dim());
  const auto m = static_cast<Eigen::Index>(c.size());
  const Eigen::VectorXd bx = sys.basis().col(static_cast<Eigen::Index>(x));
  // Variables (coeffs, gap): maximize gap s.t. phi(c) + gap <= phi(x).
  lp::LinearProgram prog(d + 1, m, lp::Bounds::box(1.0));
  prog.bounds[static_cast<std::size_t>(d)] = lp::Bounds::free();
  prog.objective(d) = -1.0;
  for (Eigen::Index r = 0; r < m; ++r) {
    const auto j = static_cast<Eigen::Index>(c.indices[static_cast<std::size_t>(r)]);
    prog.constraints.row(r).head(d) = (sys.basis().col(j) - bx).transpose();
    prog.constraints(r, d) = 1.0;
    prog.relations[static_cast<std::size_t>(r)] = lp::Relation::LE;
  }

  SeparationResult result;
  const lp::Outcome out = lp::solve(prog);
  if (!out.optimal()) throw ConsistencyError("separation LP did not reach an optimum");
  const double gap = out.point(d);
  result.margin = std::max(gap, 0.0);
  result.separable = gap >= kSeparationMargin;
  if (result.separable) {
    const Eigen::VectorXd phi = out.point.head(d);
    const Eigen::VectorXd ones_coeffs = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(
                                            sys.basis().transpose())
                                            .solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(sys.size())));
    result.witness = PhiFunction{(phi - (bx.dot(phi) - gap) * ones_coeffs) / gap};
  }

  const bool inside = in_convex_hull(sys, x, c.indices);
  if (result.separable == inside) {
    throw ConsistencyError("separation and hull membership disagree at point '" + sys.label(x) +
                           "'");
  }
  return result;
}

PointSet phi_extreme_points(const FunctionSystem& sys, const PointSet& s) {
  sys.require_valid();
  check_set(sys, s, "phi_extreme_points");
  const auto flags = parallel_map<char>(s.size(), [&](std::size_t k) -> char {
    std::vector<std::size_t> others;
    others.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != k) others.push_back(s.indices[i]);
    }
    return in_convex_hull(sys, s.indices[k], others) ? 0 : 1;
  });
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (flags[k]) idx.push_back(s.indices[k]);
  }
  return PointSet(std::move(idx));
}

KreinMilmanReport krein_milman_verify(const FunctionSystem& sys, const PointSet& s) {
  KreinMilmanReport r;
  r.hull = trace_hull(sys, s);
  r.extreme = phi_extreme_points(sys, s);
  r.hull_of_extreme = trace_hull(sys, r.extreme);
  r.holds = r.hull == r.hull_of_extreme;
  return r;
}

bool in_kyfan_segment(const FunctionSystem& sys, std::size_t x, std::size_t y, std::size_t z) {
  sys.check_index(x);
  sys.check_index(y);
  sys.check_index(z);
  const auto d = static_cast<Eigen::Index>(sys.dim());
  const Eigen::VectorXd bx = sys.basis().col(static_cast<Eigen::Index>(x));
  const Eigen::VectorXd by = sys.basis().col(static_cast<Eigen::Index>(y));
  const Eigen::VectorXd bz = sys.basis().col(static_cast<Eigen::Index>(z));

  // x leaves the segment iff some phi has phi(x) <= phi(y), phi(x) <= phi(z)
  // and a positive total gap, which scales to 1.
  lp::LinearProgram prog(d, 3, lp::Bounds::free());
  prog.constraints.row(0) = (bx - by).transpose();
  prog.constraints.row(1) = (bx - bz).transpose();
  prog.constraints.row(2) = (by + bz - 2.0 * bx).transpose();
  prog.relations = {lp::Relation::LE, lp::Relation::LE, lp::Relation::GE};
  prog.rhs << 0.0, 0.0, 1.0;
  return !lp::feasible(prog).has_value();
}

PointSet kyfan_segment(const FunctionSystem& sys, std::size_t y, std::size_t z) {
  sys.require_valid();
  sys.check_index(y);
  sys.check_index(z);
  const auto flags = parallel_map<char>(sys.size(), [&](std::size_t x) -> char {
    if (x == y || x == z) return 1;
    return in_kyfan_segment(sys, x, y, z) ? 1 : 0;
  });
  return from_flags(flags);
}

PointSet kyfan_extreme_points(const FunctionSystem& sys, const PointSet& s) {
  sys.require_valid();
  check_set(sys, s, "kyfan_extreme_points");
  // Pairs with y == x or z == x, or y == z, never capture x: point
  // separation always supplies a phi with a strict gap.
  const auto flags = parallel_map<char>(s.size(), [&](std::size_t k) -> char {
    const std::size_t x = s.indices[k];
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (a == k) continue;
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (b == k) continue;
        if (in_kyfan_segment(sys, x, s.indices[a], s.indices[b])) return 0;
      }
    }
    return 1;
  });
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (flags[k]) idx.push_back(s.indices[k]);
  }
  return PointSet(std::move(idx));
}

}  // namespace choquet
