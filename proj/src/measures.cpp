#include "choquet/measures.hpp"

#include "choquet/lp.hpp"
#include "choquet/parallel.hpp"

namespace choquet {

namespace {

// mu >= 0, sum mu = 1, B mu = B e_x.
lp::LinearProgram representing_lp(const FunctionSystem& sys, std::size_t x) {
  const auto n = static_cast<Eigen::Index>(sys.size());
  const auto d = static_cast<Eigen::Index>(sys.dim());
  lp::LinearProgram prog(n, d + 1);
  prog.constraints.topRows(d) = sys.basis();
  prog.rhs.head(d) = sys.basis().col(static_cast<Eigen::Index>(x));
  prog.constraints.row(d).setOnes();
  prog.rhs(d) = 1.0;
  return prog;
}

lp::Outcome solve_representing(const FunctionSystem& sys, std::size_t x,
                               const Eigen::VectorXd& objective) {
  lp::LinearProgram prog = representing_lp(sys, x);
  prog.objective = objective;
  lp::Outcome out = lp::solve(prog);
  if (!out.optimal()) {
    // The Dirac mass is always feasible and the objective is bounded on the
    // simplex, so anything else is an engine failure.
    throw ConsistencyError(std::string("representing-measure LP returned ") +
                           lp::to_string(out.status) + " at point '" + sys.label(x) + "'");
  }
  return out;
}

}  // namespace

PointSet BoundaryReport::boundary() const {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].is_boundary) idx.push_back(j);
  }
  return PointSet(std::move(idx));
}

Measure representing_measure(const FunctionSystem& sys, std::size_t x,
                             const std::optional<ScalarField>& objective) {
  sys.require_valid();
  sys.check_index(x);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.size()));
  if (objective) {
    check_field(sys, *objective);
    c = objective->values;
  }
  const lp::Outcome out = solve_representing(sys, x, c);
  return {out.point.cwiseMax(0.0), MeasureKind::Probability};
}

KeyInterval key_interval(const FunctionSystem& sys, const ScalarField& f, std::size_t x) {
  sys.require_valid();
  sys.check_index(x);
  check_field(sys, f);
  KeyInterval k;
  k.lo = solve_representing(sys, x, f.values).value;
  k.hi = -solve_representing(sys, x, -f.values).value;
  return k;
}

BoundaryTest is_boundary(const FunctionSystem& sys, std::size_t x) {
  sys.require_valid();
  sys.check_index(x);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.size()));
  c(static_cast<Eigen::Index>(x)) = 1.0;
  const double mass = solve_representing(sys, x, c).value;
  return {mass >= 1.0 - kBoundaryTol, mass};
}

bool in_convex_hull(const FunctionSystem& sys, std::size_t x,
                    std::span<const std::size_t> generators) {
  sys.check_index(x);
  if (generators.empty()) return false;
  const auto k = static_cast<Eigen::Index>(generators.size());
  const auto d = static_cast<Eigen::Index>(sys.dim());
  lp::LinearProgram prog(k, d + 1);
  for (Eigen::Index s = 0; s < k; ++s) {
    const std::size_t g = generators[static_cast<std::size_t>(s)];
    sys.check_index(g);
    prog.constraints.col(s).head(d) = sys.basis().col(static_cast<Eigen::Index>(g));
  }
  prog.constraints.row(d).setOnes();
  prog.rhs.head(d) = sys.basis().col(static_cast<Eigen::Index>(x));
  prog.rhs(d) = 1.0;
  return lp::feasible(prog).has_value();
}

bool is_vertex(const FunctionSystem& sys, std::size_t x) {
  sys.require_valid();
  sys.check_index(x);
  std::vector<std::size_t> others;
  others.reserve(sys.size());
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j != x) others.push_back(j);
  }
  return !in_convex_hull(sys, x, others);
}

BoundaryReport choquet_boundary(const FunctionSystem& sys) {
  sys.require_valid();
  BoundaryReport report;
  report.points = parallel_map<BoundaryEntry>(sys.size(), [&](std::size_t x) {
    const BoundaryTest t = is_boundary(sys, x);
    return BoundaryEntry{t.is_boundary, t.min_self_mass, is_vertex(sys, x)};
  });
  for (std::size_t x = 0; x < sys.size(); ++x) {
    const BoundaryEntry& e = report.points[x];
    if (e.is_boundary != e.vertex_test) {
      throw ConsistencyError("boundary tests disagree at point '" + sys.label(x) +
                             "': min self-mass " + std::to_string(e.min_self_mass) +
                             ", vertex test " + (e.vertex_test ? "true" : "false"));
    }
  }
  return report;
}

}  // namespace choquet
