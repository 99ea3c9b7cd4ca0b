#include "choquet/lp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <mutex>

namespace choquet::lp {

namespace {

constexpr double kPivotTol = 1e-7;
constexpr double kCostTol = 1e-10;
constexpr double kDriveOutTol = 1e-7;
// Harris ratio-test slack on basic values.
constexpr double kHarrisTol = 1e-9;
// Pivots between refactorizations of the tableau from the original data.
constexpr std::size_t kRefactorEvery = 25;
// Degenerate pivots in a row before ties are broken by Bland's rule alone.
constexpr std::size_t kStallLimit = 50;

std::mutex dump_mutex;
std::unique_ptr<std::ofstream> dump_stream;

void maybe_dump(const LinearProgram& lp) {
  std::lock_guard<std::mutex> lock(dump_mutex);
  if (dump_stream) {
    *dump_stream << to_json(lp).dump() << '\n';
    dump_stream->flush();
  }
}

// How an original variable is expressed through nonnegative standard-form
// columns: x = shift + sign * x[pos] - x[neg].
struct VariableMap {
  double shift = 0.0;
  double sign = 1.0;
  int pos = -1;
  int neg = -1;
};

// min c.x, A x = b, x >= 0, b >= 0.
struct StandardForm {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  double offset = 0.0;
  std::vector<VariableMap> vars;
  std::vector<double> row_sign;     // +1 or -1 per standard row
  std::vector<int> initial_basis;   // slack column usable as basis, or -1
  Eigen::Index original_rows = 0;
};

StandardForm to_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  const Eigen::Index n = lp.variable_count();
  const Eigen::Index m = lp.row_count();
  sf.original_rows = m;

  int columns = 0;
  std::vector<std::pair<int, double>> upper_rows;  // (column, bound)
  sf.vars.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Bounds& bd = lp.bounds[static_cast<std::size_t>(j)];
    VariableMap& vm = sf.vars[static_cast<std::size_t>(j)];
    if (std::isfinite(bd.lower)) {
      vm.shift = bd.lower;
      vm.pos = columns++;
      if (std::isfinite(bd.upper)) upper_rows.emplace_back(vm.pos, bd.upper - bd.lower);
    } else if (std::isfinite(bd.upper)) {
      vm.shift = bd.upper;
      vm.sign = -1.0;
      vm.pos = columns++;
    } else {
      vm.pos = columns++;
      vm.neg = columns++;
    }
  }

  const Eigen::Index rows = m + static_cast<Eigen::Index>(upper_rows.size());
  int slacks = 0;
  for (Relation r : lp.relations) slacks += (r == Relation::EQ) ? 0 : 1;
  slacks += static_cast<int>(upper_rows.size());
  const int total = columns + slacks;

  sf.a = Eigen::MatrixXd::Zero(rows, total);
  sf.b = Eigen::VectorXd::Zero(rows);
  sf.c = Eigen::VectorXd::Zero(total);
  sf.row_sign.assign(static_cast<std::size_t>(rows), 1.0);
  sf.initial_basis.assign(static_cast<std::size_t>(rows), -1);

  for (Eigen::Index j = 0; j < n; ++j) {
    const VariableMap& vm = sf.vars[static_cast<std::size_t>(j)];
    const double cj = lp.objective(j);
    sf.offset += cj * vm.shift;
    sf.c(vm.pos) += cj * vm.sign;
    if (vm.neg >= 0) sf.c(vm.neg) -= cj;
  }

  int slack = columns;
  for (Eigen::Index i = 0; i < m; ++i) {
    double rhs = lp.rhs(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double aij = lp.constraints(i, j);
      if (aij == 0.0) continue;
      const VariableMap& vm = sf.vars[static_cast<std::size_t>(j)];
      rhs -= aij * vm.shift;
      sf.a(i, vm.pos) += aij * vm.sign;
      if (vm.neg >= 0) sf.a(i, vm.neg) -= aij;
    }
    int slack_col = -1;
    double slack_coef = 0.0;
    switch (lp.relations[static_cast<std::size_t>(i)]) {
      case Relation::LE: slack_col = slack++; slack_coef = 1.0; break;
      case Relation::GE: slack_col = slack++; slack_coef = -1.0; break;
      case Relation::EQ: break;
    }
    if (slack_col >= 0) sf.a(i, slack_col) = slack_coef;
    sf.b(i) = rhs;
    if (rhs < 0.0) {
      sf.a.row(i) *= -1.0;
      sf.b(i) = -rhs;
      sf.row_sign[static_cast<std::size_t>(i)] = -1.0;
      slack_coef = -slack_coef;
    }
    if (slack_col >= 0 && slack_coef > 0.0) sf.initial_basis[static_cast<std::size_t>(i)] = slack_col;
  }
  for (std::size_t k = 0; k < upper_rows.size(); ++k) {
    const Eigen::Index i = m + static_cast<Eigen::Index>(k);
    sf.a(i, upper_rows[k].first) = 1.0;
    sf.a(i, slack) = 1.0;
    sf.b(i) = upper_rows[k].second;
    sf.initial_basis[static_cast<std::size_t>(i)] = slack++;
  }
  return sf;
}

// Dense tableau over the columns of `a`; the last row holds reduced costs,
// the last column the basic values. It is rebuilt from `a`, `b` and `cost`
// through an LU of the basis every few pivots so rounding cannot accumulate.
class Tableau {
 public:
  Tableau(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd cost, std::vector<int> basis,
          std::size_t limit)
      : a_(std::move(a)),
        b_(std::move(b)),
        cost_(std::move(cost)),
        t_(a_.rows() + 1, a_.cols() + 1),
        basis_(std::move(basis)),
        limit_(limit) {
    refactor();
  }

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  const Eigen::MatrixXd& data() const { return t_; }
  const std::vector<int>& basis() const { return basis_; }
  std::size_t iterations() const { return iterations_; }
  /// cost . x for the current basic solution.
  double objective() const { return -t_(rows(), cols()); }

  void refactor() {
    const Eigen::Index m = rows();
    const Eigen::Index n = cols();
    since_refactor_ = 0;
    if (m == 0) {
      t_.setZero();
      t_.row(0).head(n) = cost_.transpose();
      return;
    }
    Eigen::MatrixXd bm(m, m);
    Eigen::VectorXd cb(m);
    for (Eigen::Index r = 0; r < m; ++r) {
      bm.col(r) = a_.col(basis_[static_cast<std::size_t>(r)]);
      cb(r) = cost_(basis_[static_cast<std::size_t>(r)]);
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(bm);
    t_.topLeftCorner(m, n) = lu.solve(a_);
    t_.col(n).head(m) = lu.solve(b_);
    const Eigen::VectorXd y = lu.transpose().solve(cb);
    t_.row(m).head(n) = (cost_ - a_.transpose() * y).transpose();
    t_(m, n) = -cb.dot(t_.col(n).head(m));
    for (Eigen::Index r = 0; r < m; ++r) {
      const int bc = basis_[static_cast<std::size_t>(r)];
      t_.col(bc).setZero();
      t_(r, bc) = 1.0;
    }
  }

  void pivot(Eigen::Index r, Eigen::Index j) {
    t_.row(r) /= t_(r, j);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, j);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    t_.col(j).setZero();
    t_(r, j) = 1.0;
    basis_[static_cast<std::size_t>(r)] = static_cast<int>(j);
    ++iterations_;
    if (++since_refactor_ >= kRefactorEvery) refactor();
  }

  // Dantzig pricing over columns [0, active_cols), switching to Bland's rule
  // for both entering and leaving choices after kStallLimit degenerate
  // pivots so the method cannot cycle. Returns false when the objective is
  // unbounded below. Conclusions are only drawn on a freshly refactored
  // tableau.
  bool optimize(Eigen::Index active_cols) {
    std::size_t stalled = 0;
    for (;;) {
      if (iterations_ >= limit_) {
        throw IterationLimitError("simplex iteration limit reached (" +
                                  std::to_string(limit_) + " pivots)");
      }
      const bool bland = stalled >= kStallLimit;
      const Eigen::Index enter = entering(active_cols, bland);
      if (enter < 0) {
        if (since_refactor_ == 0) return true;
        refactor();
        continue;
      }
      const Eigen::Index leave = ratio_test(enter, bland);
      if (leave < 0) {
        if (since_refactor_ == 0) return false;
        refactor();
        continue;
      }
      const double before = objective();
      pivot(leave, enter);
      stalled = objective() < before - kCostTol ? 0 : stalled + 1;
    }
  }

 private:
  // Most negative reduced cost, or the first negative one under Bland's rule.
  Eigen::Index entering(Eigen::Index active_cols, bool bland) const {
    const Eigen::Index m = rows();
    Eigen::Index best = -1;
    double best_cost = -kCostTol;
    for (Eigen::Index j = 0; j < active_cols; ++j) {
      if (t_(m, j) < best_cost) {
        best = j;
        if (bland) break;
        best_cost = t_(m, j);
      }
    }
    return best;
  }

  // Two-pass Harris test: among rows within kHarrisTol of the minimum ratio
  // take the largest pivot, or the smallest basic index when `bland` is set.
  Eigen::Index ratio_test(Eigen::Index enter, bool bland) const {
    const Eigen::Index m = rows();
    const Eigen::Index rhs = cols();
    double bound = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double aij = t_(i, enter);
      if (aij > kPivotTol) bound = std::min(bound, (std::max(t_(i, rhs), 0.0) + kHarrisTol) / aij);
    }
    Eigen::Index leave = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double aij = t_(i, enter);
      if (aij <= kPivotTol || std::max(t_(i, rhs), 0.0) / aij > bound) continue;
      if (leave < 0) {
        leave = i;
        continue;
      }
      const bool better = bland ? basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)]
                                : aij > t_(leave, enter);
      if (better) leave = i;
    }
    return leave;
  }

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  Eigen::VectorXd cost_;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  std::size_t limit_;
  std::size_t iterations_ = 0;
  std::size_t since_refactor_ = 0;
};

bool valid_number(double v) { return !std::isnan(v); }

}  // namespace

const char* to_string(Relation r) {
  switch (r) {
    case Relation::LE: return "LE";
    case Relation::EQ: return "EQ";
    case Relation::GE: return "GE";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "Optimal";
    case Status::Infeasible: return "Infeasible";
    case Status::Unbounded: return "Unbounded";
  }
  return "?";
}

LinearProgram::LinearProgram(Eigen::Index variables, Eigen::Index rows,
                             Bounds default_bounds)
    : objective(Eigen::VectorXd::Zero(variables)),
      constraints(Eigen::MatrixXd::Zero(rows, variables)),
      relations(static_cast<std::size_t>(rows), Relation::EQ),
      rhs(Eigen::VectorXd::Zero(rows)),
      bounds(static_cast<std::size_t>(variables), default_bounds) {}

void validate(const LinearProgram& lp) {
  const Eigen::Index n = lp.objective.size();
  const Eigen::Index m = lp.constraints.rows();
  if (m > 0 && lp.constraints.cols() != n) {
    throw ValidationError("constraint matrix has " + std::to_string(lp.constraints.cols()) +
                          " columns, objective has " + std::to_string(n));
  }
  if (lp.rhs.size() != m) {
    throw ValidationError("rhs has " + std::to_string(lp.rhs.size()) + " entries, expected " +
                          std::to_string(m));
  }
  if (static_cast<Eigen::Index>(lp.relations.size()) != m) {
    throw ValidationError("relations has " + std::to_string(lp.relations.size()) +
                          " entries, expected " + std::to_string(m));
  }
  if (static_cast<Eigen::Index>(lp.bounds.size()) != n) {
    throw ValidationError("bounds has " + std::to_string(lp.bounds.size()) +
                          " entries, expected " + std::to_string(n));
  }
  if (!lp.objective.allFinite()) throw ValidationError("objective has non-finite entries");
  if (!lp.constraints.allFinite()) throw ValidationError("constraint matrix has non-finite entries");
  if (!lp.rhs.allFinite()) throw ValidationError("rhs has non-finite entries");
  for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
    const Bounds& b = lp.bounds[j];
    if (!valid_number(b.lower) || !valid_number(b.upper) || b.lower == kInf ||
        b.upper == -kInf || b.lower > b.upper) {
      throw ValidationError("invalid bounds for variable " + std::to_string(j));
    }
  }
}

double primal_violation(const LinearProgram& lp, const Eigen::VectorXd& x) {
  double worst = 0.0;
  if (lp.row_count() > 0) {
    const Eigen::VectorXd ax = lp.constraints * x;
    for (Eigen::Index i = 0; i < lp.row_count(); ++i) {
      const double d = ax(i) - lp.rhs(i);
      switch (lp.relations[static_cast<std::size_t>(i)]) {
        case Relation::LE: worst = std::max(worst, d); break;
        case Relation::GE: worst = std::max(worst, -d); break;
        case Relation::EQ: worst = std::max(worst, std::abs(d)); break;
      }
    }
  }
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const Bounds& b = lp.bounds[static_cast<std::size_t>(j)];
    worst = std::max({worst, b.lower - x(j), x(j) - b.upper});
  }
  return worst;
}

namespace {

// Recovers primal and dual values from the final basis by a fresh LU
// factorization rather than trusting the accumulated tableau.
void extract_solution(const LinearProgram& lp, const StandardForm& sf, const Tableau& tab,
                      const std::vector<Eigen::Index>& kept_rows, const Tolerances& tol,
                      Outcome& out) {
  const Eigen::Index cols = sf.a.cols();
  const auto mk = static_cast<Eigen::Index>(kept_rows.size());
  Eigen::MatrixXd basis_matrix(mk, mk);
  Eigen::VectorXd b_kept(mk), c_basis(mk);
  for (Eigen::Index r = 0; r < mk; ++r) {
    const int bc = tab.basis()[static_cast<std::size_t>(r)];
    b_kept(r) = sf.b(kept_rows[static_cast<std::size_t>(r)]);
    c_basis(r) = sf.c(bc);
    for (Eigen::Index q = 0; q < mk; ++q) {
      basis_matrix(q, r) = sf.a(kept_rows[static_cast<std::size_t>(q)], bc);
    }
  }
  Eigen::VectorXd x_std = Eigen::VectorXd::Zero(cols);
  Eigen::VectorXd y_std = Eigen::VectorXd::Zero(sf.a.rows());
  if (mk > 0) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    Eigen::VectorXd xb = lu.solve(b_kept);
    const Eigen::VectorXd yb = lu.transpose().solve(c_basis);
    if (!xb.allFinite() || xb.minCoeff() < -tol.feasibility) xb = tab.data().col(cols).head(mk);
    for (Eigen::Index r = 0; r < mk; ++r) {
      x_std(tab.basis()[static_cast<std::size_t>(r)]) = std::max(xb(r), 0.0);
      if (yb.allFinite()) y_std(kept_rows[static_cast<std::size_t>(r)]) = yb(r);
    }
  }

  Eigen::VectorXd x(lp.variable_count());
  for (std::size_t j = 0; j < sf.vars.size(); ++j) {
    const VariableMap& vm = sf.vars[j];
    double v = vm.shift + vm.sign * x_std(vm.pos);
    if (vm.neg >= 0) v -= x_std(vm.neg);
    x(static_cast<Eigen::Index>(j)) = v;
  }
  out.status = Status::Optimal;
  out.point = x;
  out.value = lp.objective.dot(x);
  out.dual_point.resize(sf.original_rows);
  for (Eigen::Index i = 0; i < sf.original_rows; ++i) {
    out.dual_point(i) = sf.row_sign[static_cast<std::size_t>(i)] * y_std(i);
  }
  out.dual_value = sf.b.dot(y_std) + sf.offset;
  if (cols > 0) {
    const Eigen::VectorXd reduced_costs = sf.c - sf.a.transpose() * y_std;
    out.dual_residual = std::max(0.0, -reduced_costs.minCoeff());
  }
  out.primal_residual = primal_violation(lp, x);
}

}  // namespace

Outcome solve(const LinearProgram& lp, const Tolerances& tol) {
  validate(lp);
  maybe_dump(lp);

  const StandardForm sf = to_standard_form(lp);
  const Eigen::Index rows = sf.a.rows();
  const Eigen::Index cols = sf.a.cols();

  std::vector<int> basis(static_cast<std::size_t>(rows));
  std::vector<Eigen::Index> artificial_rows;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const int slack = sf.initial_basis[static_cast<std::size_t>(i)];
    if (slack >= 0) {
      basis[static_cast<std::size_t>(i)] = slack;
    } else {
      basis[static_cast<std::size_t>(i)] = static_cast<int>(cols + static_cast<Eigen::Index>(artificial_rows.size()));
      artificial_rows.push_back(i);
    }
  }

  std::vector<Eigen::Index> kept_rows(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) kept_rows[static_cast<std::size_t>(i)] = i;
  Outcome out;
  std::size_t used = 0;

  if (!artificial_rows.empty()) {
    // Phase 1: minimize the sum of artificials.
    const auto artificials = static_cast<Eigen::Index>(artificial_rows.size());
    Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(rows, cols + artificials);
    a1.leftCols(cols) = sf.a;
    for (Eigen::Index k = 0; k < artificials; ++k) a1(artificial_rows[static_cast<std::size_t>(k)], cols + k) = 1.0;
    Eigen::VectorXd c1 = Eigen::VectorXd::Zero(cols + artificials);
    c1.tail(artificials).setOnes();
    Tableau phase1(std::move(a1), sf.b, std::move(c1), basis, tol.iteration_limit);
    phase1.optimize(cols + artificials);
    used = phase1.iterations();
    out.iterations = used;
    const double scale = std::max(1.0, sf.b.cwiseAbs().maxCoeff());
    if (phase1.objective() > tol.feasibility * scale) {
      out.status = Status::Infeasible;
      return out;
    }

    // Drive artificials out of the basis; rows where no structural column
    // can replace them are linearly dependent and get dropped.
    kept_rows.clear();
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (phase1.basis()[static_cast<std::size_t>(i)] < cols) {
        kept_rows.push_back(i);
        continue;
      }
      Eigen::Index best = -1;
      double best_abs = kDriveOutTol;
      for (Eigen::Index j = 0; j < cols; ++j) {
        const double v = std::abs(phase1.data()(i, j));
        if (v > best_abs) {
          best_abs = v;
          best = j;
        }
      }
      if (best >= 0) {
        phase1.pivot(i, best);
        kept_rows.push_back(i);
      }
    }
    basis.clear();
    for (Eigen::Index i : kept_rows) basis.push_back(phase1.basis()[static_cast<std::size_t>(i)]);
    used = phase1.iterations();
  }

  // Phase 2 on the kept rows.
  const auto mk = static_cast<Eigen::Index>(kept_rows.size());
  Eigen::MatrixXd a2(mk, cols);
  Eigen::VectorXd b2(mk);
  for (Eigen::Index r = 0; r < mk; ++r) {
    a2.row(r) = sf.a.row(kept_rows[static_cast<std::size_t>(r)]);
    b2(r) = sf.b(kept_rows[static_cast<std::size_t>(r)]);
  }
  Tableau tab(std::move(a2), std::move(b2), sf.c, std::move(basis),
              tol.iteration_limit > used ? tol.iteration_limit - used : 0);
  const bool bounded = tab.optimize(cols);
  out.iterations = used + tab.iterations();
  if (!bounded) {
    out.status = Status::Unbounded;
    return out;
  }
  extract_solution(lp, sf, tab, kept_rows, tol, out);
  return out;
}

std::optional<Eigen::VectorXd> feasible(const LinearProgram& lp, const Tolerances& tol) {
  LinearProgram zero = lp;
  zero.objective.setZero();
  Outcome out = solve(zero, tol);
  if (out.status != Status::Optimal) return std::nullopt;
  return out.point;
}

namespace {

nlohmann::json bound_to_json(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

double bound_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw ValidationError("bad bound literal: " + s);
  }
  return j.get<double>();
}

}  // namespace

nlohmann::json to_json(const LinearProgram& lp) {
  nlohmann::json j;
  j["objective"] = std::vector<double>(lp.objective.data(), lp.objective.data() + lp.objective.size());
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < lp.constraints.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(lp.constraints.cols()));
    for (Eigen::Index k = 0; k < lp.constraints.cols(); ++k) row[static_cast<std::size_t>(k)] = lp.constraints(i, k);
    rows.push_back(row);
  }
  j["constraints"] = rows;
  nlohmann::json rel = nlohmann::json::array();
  for (Relation r : lp.relations) rel.push_back(to_string(r));
  j["relations"] = rel;
  j["rhs"] = std::vector<double>(lp.rhs.data(), lp.rhs.data() + lp.rhs.size());
  nlohmann::json bounds = nlohmann::json::array();
  for (const Bounds& b : lp.bounds) bounds.push_back({bound_to_json(b.lower), bound_to_json(b.upper)});
  j["bounds"] = bounds;
  return j;
}

LinearProgram lp_from_json(const nlohmann::json& j) {
  try {
    LinearProgram lp;
    const auto obj = j.at("objective").get<std::vector<double>>();
    lp.objective = Eigen::Map<const Eigen::VectorXd>(obj.data(), static_cast<Eigen::Index>(obj.size()));
    const auto& rows = j.at("constraints");
    lp.constraints.resize(static_cast<Eigen::Index>(rows.size()), lp.objective.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto row = rows[i].get<std::vector<double>>();
      if (static_cast<Eigen::Index>(row.size()) != lp.objective.size()) {
        throw ValidationError("constraint row " + std::to_string(i) + " has wrong length");
      }
      for (std::size_t k = 0; k < row.size(); ++k) {
        lp.constraints(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k];
      }
    }
    for (const auto& r : j.at("relations")) {
      const auto s = r.get<std::string>();
      if (s == "LE") lp.relations.push_back(Relation::LE);
      else if (s == "EQ") lp.relations.push_back(Relation::EQ);
      else if (s == "GE") lp.relations.push_back(Relation::GE);
      else throw ValidationError("unknown relation " + s);
    }
    const auto rhs = j.at("rhs").get<std::vector<double>>();
    lp.rhs = Eigen::Map<const Eigen::VectorXd>(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
    for (const auto& b : j.at("bounds")) {
      lp.bounds.push_back({bound_from_json(b.at(0)), bound_from_json(b.at(1))});
    }
    validate(lp);
    return lp;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed LP JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Outcome& outcome) {
  nlohmann::json j;
  j["status"] = to_string(outcome.status);
  if (outcome.optimal()) {
    j["value"] = outcome.value;
    j["point"] = std::vector<double>(outcome.point.data(), outcome.point.data() + outcome.point.size());
    j["dual_point"] = std::vector<double>(outcome.dual_point.data(),
                                          outcome.dual_point.data() + outcome.dual_point.size());
    j["dual_value"] = outcome.dual_value;
  }
  return j;
}

ScopedDump::ScopedDump(const std::string& path) {
  auto stream = std::make_unique<std::ofstream>(path, std::ios::out | std::ios::trunc);
  if (!*stream) throw InputError("cannot open LP dump file: " + path);
  std::lock_guard<std::mutex> lock(dump_mutex);
  dump_stream = std::move(stream);
}

ScopedDump::~ScopedDump() {
  std::lock_guard<std::mutex> lock(dump_mutex);
  dump_stream.reset();
}

}  // namespace choquet::lp
