#include "choquet/generators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "choquet/measures.hpp"
#include "choquet/rng.hpp"
#include "choquet/textutil.hpp"

namespace choquet::gen {

namespace {

std::string fraction_label(long long num, long long den) {
  const long long g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

GeneratedInstance interval_affine(std::size_t n_grid) {
  if (n_grid < 2) throw InputError("interval generator needs n_grid >= 2");
  FiniteSpace space;
  Eigen::MatrixXd basis(2, static_cast<Eigen::Index>(n_grid));
  Eigen::MatrixX2d coords(static_cast<Eigen::Index>(n_grid), 2);
  for (std::size_t j = 0; j < n_grid; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n_grid - 1);
    space.labels.push_back(format_double(t));
    basis(0, static_cast<Eigen::Index>(j)) = 1.0;
    basis(1, static_cast<Eigen::Index>(j)) = t;
    coords.row(static_cast<Eigen::Index>(j)) << t, 0.0;
  }
  space.coords = coords;
  nlohmann::json notes = {{"generator", "interval"},
                          {"params", {{"n_grid", n_grid}}},
                          {"phi", "affine functions span{1, t}"},
                          {"caveats", {"finite grid of [0,1]"}}};
  return {FunctionSystem(std::move(space), std::move(basis)), PointSet({0, n_grid - 1}),
          std::move(notes)};
}

GeneratedInstance interval_full(std::size_t n_grid) {
  if (n_grid < 2) throw InputError("interval generator needs n_grid >= 2");
  GeneratedInstance affine = interval_affine(n_grid);
  FiniteSpace space = affine.system.space();
  Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n_grid),
                                                    static_cast<Eigen::Index>(n_grid));
  nlohmann::json notes = {{"generator", "interval-full"},
                          {"params", {{"n_grid", n_grid}}},
                          {"phi", "all functions on the grid (indicator basis)"},
                          {"caveats", {"finite grid of [0,1]"}}};
  return {FunctionSystem(std::move(space), std::move(basis)), PointSet::all(n_grid),
          std::move(notes)};
}

GeneratedInstance cantor(int level, std::size_t points_per_cell) {
  if (level < 1 || level > 8) throw InputError("cantor generator needs 1 <= level <= 8");
  if (points_per_cell < 2) throw InputError("cantor generator needs points_per_cell >= 2");

  // Integer positions over a common denominator keep labels exact.
  long long pow3 = 1;
  for (int l = 0; l < level; ++l) pow3 *= 3;
  const long long per = static_cast<long long>(points_per_cell) - 1;
  const long long den = 2 * pow3 * per;
  const long long cell_len = 2 * per;

  // Surviving cells at the final level, as left endpoints in units of 1/3^L.
  std::vector<long long> cells = {0};
  long long width = pow3;
  for (int l = 0; l < level; ++l) {
    width /= 3;
    std::vector<long long> next;
    for (long long c : cells) {
      next.push_back(c);
      next.push_back(c + 2 * width);
    }
    cells = std::move(next);
  }

  struct GridPoint {
    long long pos;
    bool node;
  };
  std::vector<GridPoint> grid;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const long long left = cells[c] * cell_len;
    for (long long k = 0; k <= per; ++k) grid.push_back({left + 2 * k, true});
    if (c + 1 < cells.size()) {
      const long long gap_lo = left + cell_len;
      const long long gap_hi = cells[c + 1] * cell_len;
      grid.push_back({(gap_lo + gap_hi) / 2, false});
    }
  }

  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::Index nodes = 0;
  for (const GridPoint& g : grid) nodes += g.node ? 1 : 0;

  FiniteSpace space;
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(nodes, n);
  Eigen::MatrixX2d coords(n, 2);
  std::vector<std::size_t> expected;
  Eigen::Index node = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const GridPoint& g = grid[static_cast<std::size_t>(j)];
    space.labels.push_back(fraction_label(g.pos, den));
    coords.row(j) << static_cast<double>(g.pos) / static_cast<double>(den), 0.0;
    if (g.node) {
      basis(node++, j) = 1.0;
      expected.push_back(static_cast<std::size_t>(j));
    } else {
      // Hats are affine across the removed interval, and this is its
      // midpoint.
      basis(node - 1, j) = 0.5;
      basis(node, j) = 0.5;
    }
  }
  space.coords = coords;
  nlohmann::json notes = {
      {"generator", "cantor"},
      {"params", {{"level", level}, {"points_per_cell", points_per_cell}}},
      {"phi", "piecewise-linear hats on cell samples, affine across removed intervals"},
      {"caveats",
       {"level-L truncation of the Cantor construction",
        "one midpoint sample per removed interval"}}};
  return {FunctionSystem(std::move(space), std::move(basis)), PointSet(std::move(expected)),
          std::move(notes)};
}

FunctionSystem disk_system(const std::vector<std::complex<double>>& points,
                           const std::vector<std::string>& labels, std::size_t degree) {
  if (degree == 0) throw InputError("harmonic basis of degree 0 does not separate points");
  if (points.size() != labels.size()) throw InputError("one label per point required");
  const auto n = static_cast<Eigen::Index>(points.size());
  const auto d = static_cast<Eigen::Index>(2 * degree + 1);
  Eigen::MatrixXd basis(d, n);
  Eigen::MatrixX2d coords(n, 2);
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> z = points[static_cast<std::size_t>(j)];
    const double r = std::abs(z);
    const double theta = std::arg(z);
    basis(0, j) = 1.0;
    double rk = 1.0;
    for (std::size_t k = 1; k <= degree; ++k) {
      rk *= r;
      const double angle = static_cast<double>(k) * theta;
      basis(static_cast<Eigen::Index>(2 * k - 1), j) = rk * std::cos(angle);
      basis(static_cast<Eigen::Index>(2 * k), j) = rk * std::sin(angle);
    }
    coords.row(j) << z.real(), z.imag();
  }
  FiniteSpace space;
  space.labels = labels;
  space.coords = coords;
  return FunctionSystem(std::move(space), std::move(basis));
}

GeneratedInstance disk(std::size_t n_circle, std::size_t n_interior_rings, std::size_t degree) {
  if (degree == 0) throw InputError("disk generator needs degree >= 1");
  if (n_circle < 2 * degree + 2) {
    throw InputError("disk generator needs n_circle >= 2*degree + 2 (got n_circle = " +
                     std::to_string(n_circle) + ", degree = " + std::to_string(degree) + ")");
  }
  constexpr double kMaxInteriorRadius = 0.8;
  std::vector<std::complex<double>> points;
  std::vector<std::string> labels;
  std::vector<std::size_t> expected;
  for (std::size_t j = 0; j < n_circle; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_circle);
    expected.push_back(points.size());
    points.push_back(std::polar(1.0, theta));
    labels.push_back("c" + std::to_string(j));
  }
  points.emplace_back(0.0, 0.0);
  labels.push_back("o");
  for (std::size_t k = 1; k <= n_interior_rings; ++k) {
    const double radius = kMaxInteriorRadius * static_cast<double>(k) / static_cast<double>(n_interior_rings);
    const std::size_t count = 8 * k;
    for (std::size_t m = 0; m < count; ++m) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(count);
      points.push_back(std::polar(radius, theta));
      labels.push_back("r" + std::to_string(k) + "_" + std::to_string(m));
    }
  }
  nlohmann::json notes = {
      {"generator", "disk"},
      {"params", {{"n_circle", n_circle}, {"n_interior_rings", n_interior_rings}, {"degree", degree}}},
      {"phi", "harmonic polynomials 1, Re z^k, Im z^k up to the given degree"},
      {"caveats",
       {"finite degree approximates the harmonic class",
        "interior lattice capped at radius 0.8"}}};
  return {disk_system(points, labels, degree), PointSet(std::move(expected)), std::move(notes)};
}

GeneratedInstance naturals(std::size_t n, bool alternating) {
  if (n < 2) throw InputError("naturals generator needs n >= 2");
  FiniteSpace space;
  Eigen::MatrixXd basis(2, static_cast<Eigen::Index>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double b = alternating ? 1.0 + ((k % 2 == 0) ? 1.0 : -1.0) / kd : 1.0 / kd;
    space.labels.push_back(std::to_string(k));
    basis(0, static_cast<Eigen::Index>(k - 1)) = 1.0;
    basis(1, static_cast<Eigen::Index>(k - 1)) = b;
  }
  nlohmann::json notes = {
      {"generator", "naturals"},
      {"params", {{"n", n}, {"alternating", alternating}}},
      {"phi", alternating ? "span{1, b}, b_k = 1 + (-1)^k/k" : "span{1, b}, b_k = 1/k"},
      {"caveats",
       {"truncation {1..n}; the last point stands in for the point at infinity",
        "trace-convex sets are exactly the order intervals"}}};
  if (alternating) {
    notes["caveats"] = {"exercise configuration without a known boundary"};
    return {FunctionSystem(std::move(space), std::move(basis)), std::nullopt, std::move(notes)};
  }
  return {FunctionSystem(std::move(space), std::move(basis)), PointSet({0, n - 1}),
          std::move(notes)};
}

GeneratedInstance random(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 2 || d > n) throw InputError("random generator needs 2 <= d <= n");
  Rng rng(seed);
  const auto nn = static_cast<Eigen::Index>(n);
  const auto dd = static_cast<Eigen::Index>(d);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Eigen::MatrixXd basis(dd, nn);
    basis.row(0).setOnes();
    for (Eigen::Index i = 1; i < dd; ++i) {
      for (Eigen::Index j = 0; j < nn; ++j) basis(i, j) = rng.uniform();
    }
    if (d == n && Eigen::FullPivLU<Eigen::MatrixXd>(basis).rank() < dd) continue;
    FiniteSpace space;
    for (std::size_t j = 0; j < n; ++j) space.labels.push_back("p" + std::to_string(j));
    FunctionSystem sys(std::move(space), std::move(basis));
    if (!sys.report().passed()) continue;
    PointSet boundary = choquet_boundary(sys).boundary();
    nlohmann::json notes = {{"generator", "random"},
                            {"params", {{"n", n}, {"d", d}, {"seed", seed}}},
                            {"attempts", attempt + 1},
                            {"caveats", {"expected boundary computed by the library itself"}}};
    return {std::move(sys), std::move(boundary), std::move(notes)};
  }
  throw InputError("random generator could not produce a separating system in 100 attempts");
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"interval", "interval-full", "cantor",
                                                "disk",     "naturals",      "random"};
  return all;
}

}  // namespace choquet::gen
