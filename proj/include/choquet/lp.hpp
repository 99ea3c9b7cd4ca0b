#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "choquet/errors.hpp"

/// Dense two-phase simplex. Every computation in the library reduces to
/// small LPs (tens to a few thousand variables), so the engine favours
/// exactness and determinism over speed.
namespace choquet::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LE, EQ, GE };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Relation r);
const char* to_string(Status s);

struct Bounds {
  double lower = 0.0;
  double upper = kInf;

  static Bounds free() { return {-kInf, kInf}; }
  static Bounds box(double radius) { return {-radius, radius}; }
};

/// minimize objective . x  subject to  constraints * x (relations) rhs,
/// bounds[j].lower <= x[j] <= bounds[j].upper.
struct LinearProgram {
  Eigen::VectorXd objective;
  Eigen::MatrixXd constraints;
  std::vector<Relation> relations;
  Eigen::VectorXd rhs;
  std::vector<Bounds> bounds;

  LinearProgram() = default;
  /// n variables, m rows, all zero; relations default to EQ.
  LinearProgram(Eigen::Index variables, Eigen::Index rows,
                Bounds default_bounds = {});

  Eigen::Index variable_count() const { return objective.size(); }
  Eigen::Index row_count() const { return constraints.rows(); }
};

struct Tolerances {
  double feasibility = 1e-9;
  double gap = 1e-9;
  std::size_t iteration_limit = 100000;
};

struct Outcome {
  Status status = Status::Infeasible;
  double value = 0.0;
  Eigen::VectorXd point;
  /// Row multipliers y: objective - constraints^T y is the reduced-cost
  /// vector. Sign follows the row relation (LE rows have y <= 0 when
  /// minimizing).
  Eigen::VectorXd dual_point;
  double dual_value = 0.0;
  /// Largest violation of a row or bound by `point`.
  double primal_residual = 0.0;
  /// Largest violation of reduced-cost sign conditions by `dual_point`.
  double dual_residual = 0.0;
  std::size_t iterations = 0;

  bool optimal() const { return status == Status::Optimal; }
};

/// Dimension mismatch, NaN entries or inverted bounds.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Pivot budget exhausted (Bland's rule makes this a sign of numerical
/// trouble, not of cycling).
class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(const LinearProgram& lp);

Outcome solve(const LinearProgram& lp, const Tolerances& tol = {});

/// A feasible point, or nothing. Equivalent to solving with a zero objective.
std::optional<Eigen::VectorXd> feasible(const LinearProgram& lp,
                                        const Tolerances& tol = {});

/// Maximum violation of rows and bounds by x.
double primal_violation(const LinearProgram& lp, const Eigen::VectorXd& x);

nlohmann::json to_json(const LinearProgram& lp);
LinearProgram lp_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Outcome& outcome);

/// While alive, every call to solve() appends its instance as one JSON line
/// to the given file. Debugging aid behind the CLI's --dump-lp flag.
class ScopedDump {
 public:
  explicit ScopedDump(const std::string& path);
  ~ScopedDump();
  ScopedDump(const ScopedDump&) = delete;
  ScopedDump& operator=(const ScopedDump&) = delete;
};

}  // namespace choquet::lp
