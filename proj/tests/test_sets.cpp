#include "support.hpp"

#include <numbers>

#include "choquet/measures.hpp"
#include "choquet/sets.hpp"

using namespace choquet;
using namespace testing;

namespace {

bool is_order_interval(const std::vector<std::size_t>& s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] != s[k - 1] + 1) return false;
  }
  return true;
}

PointSet oracle_hull(const FunctionSystem& sys, const PointSet& s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < sys.size(); ++x) {
    if (s.contains(x) || oracle_in_hull(sys, x, s.indices)) out.push_back(x);
  }
  return PointSet(std::move(out));
}

}  // namespace

TEST_CASE("trace hull on the naturals example") {
  const FunctionSystem sys = naturals4();
  CHECK(trace_hull(sys, points({0, 3})) == PointSet::all(4));
  CHECK(trace_hull(sys, points({1, 2})) == points({1, 2}));
  CHECK(trace_hull(sys, points({2})) == points({2}));
  CHECK_THROWS_AS(trace_hull(sys, PointSet{}), InputError);
}

TEST_CASE("trace-convex subsets of the naturals example are the order intervals") {
  const FunctionSystem sys = naturals4();
  int convex = 0;
  for_each_subset(4, 4, [&](const std::vector<std::size_t>& s) {
    const bool expected = is_order_interval(s);
    CHECK(is_trace_convex(sys, PointSet(s)) == expected);
    convex += expected ? 1 : 0;
  });
  CHECK(convex == 10);
  CHECK_FALSE(is_trace_convex(sys, points({0, 2})));
  CHECK(is_trace_convex(sys, PointSet::all(4)));
}

TEST_CASE("separation on the naturals example") {
  const FunctionSystem sys = naturals4();
  const SeparationResult yes = separate(sys, points({1, 2}), 0);
  REQUIRE(yes.separable);
  REQUIRE(yes.witness);
  const ScalarField w = evaluate(sys, *yes.witness);
  CHECK(w[0] >= 1.0 - 1e-9);
  CHECK(w[1] <= 1e-9);
  CHECK(w[2] <= 1e-9);
  CHECK(yes.margin > 0.0);

  const SeparationResult no = separate(sys, points({0, 2}), 1);
  CHECK_FALSE(no.separable);
  CHECK_FALSE(no.witness);

  CHECK(separate(sys, points({0, 1, 2}), 3).separable);
}

TEST_CASE("Phi-extreme points and Krein-Milman on the naturals example") {
  const FunctionSystem sys = naturals4();
  CHECK(phi_extreme_points(sys, PointSet::all(4)) == points({0, 3}));
  CHECK(phi_extreme_points(sys, points({1, 2, 3})) == points({1, 3}));
  CHECK(phi_extreme_points(sys, points({2})) == points({2}));

  const KreinMilmanReport km = krein_milman_verify(sys, PointSet::all(4));
  CHECK(km.holds);
  CHECK(km.hull == PointSet::all(4));
  CHECK(km.hull_of_extreme == PointSet::all(4));
  CHECK(km.extreme == points({0, 3}));
  CHECK(krein_milman_verify(sys, points({1})).holds);
}

TEST_CASE("Ky Fan segments on the naturals example") {
  const FunctionSystem sys = naturals4();
  CHECK(kyfan_segment(sys, 0, 3) == PointSet::all(4));
  CHECK(kyfan_segment(sys, 1, 1).contains(1));
  CHECK(in_kyfan_segment(sys, 1, 0, 3));
  CHECK_FALSE(in_kyfan_segment(sys, 3, 0, 2));
  const PointSet ext = kyfan_extreme_points(sys, PointSet::all(4));
  CHECK(ext == points({0, 3}));
  CHECK(kyfan_extreme_points(sys, points({2})) == points({2}));
}

TEST_CASE("Ky Fan segments on a small disk are trivial") {
  const FunctionSystem sys = gen::disk(12, 1, 3).system;
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t y = rng.below(sys.size());
    const std::size_t z = rng.below(sys.size());
    const PointSet seg = kyfan_segment(sys, y, z);
    CHECK(seg == PointSet(std::vector<std::size_t>{y, z}));
  }
  CHECK(kyfan_extreme_points(sys, PointSet::all(sys.size())) == PointSet::all(sys.size()));
}

TEST_CASE("annulus containing a sampled circle cannot be separated from the center") {
  std::vector<std::complex<double>> pts;
  std::vector<std::string> names;
  const std::size_t degree = 3;
  const std::size_t samples = 2 * degree + 1;
  for (std::size_t k = 0; k < samples; ++k) {
    pts.push_back(std::polar(0.5, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples)));
    names.push_back("a" + std::to_string(k));
  }
  pts.emplace_back(0.0, 0.0);
  names.push_back("o");
  const FunctionSystem sys = gen::disk_system(pts, names, degree);
  std::vector<std::size_t> ring(samples);
  for (std::size_t k = 0; k < samples; ++k) ring[k] = k;
  CHECK_FALSE(separate(sys, PointSet(ring), samples).separable);
}

TEST_CASE("ambient mask restricts hull membership") {
  FiniteSpace space = naturals4().space();
  space.ambient = {true, true, false, true};
  const FunctionSystem sys(space, naturals4().basis());
  const PointSet hull = trace_hull(sys, points({0, 3}));
  CHECK(hull == points({0, 1, 3}));
}

TEST_CASE("set invariants on random systems") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(derive_seed(53, seed));
    const std::size_t n = 4 + rng.below(9);
    const std::size_t d = 2 + rng.below(3);
    const FunctionSystem sys = gen::random(n, d, seed).system;
    std::vector<std::size_t> pick;
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.below(2) == 0) pick.push_back(j);
    }
    if (pick.empty()) pick.push_back(rng.below(n));
    const PointSet s(pick);
    const PointSet hull = trace_hull(sys, s);
    INFO("seed " << seed);

    CHECK(hull == oracle_hull(sys, s));
    CHECK(trace_hull(sys, hull) == hull);
    std::vector<std::size_t> bigger = pick;
    bigger.push_back(rng.below(n));
    CHECK(is_subset(hull, trace_hull(sys, PointSet(bigger))));

    for (std::size_t x = 0; x < n; ++x) {
      if (s.contains(x)) continue;
      CHECK(separate(sys, s, x).separable == !hull.contains(x));
    }

    CHECK(krein_milman_verify(sys, s).holds);
    CHECK(krein_milman_verify(sys, hull).hull_of_extreme == hull);
    CHECK(phi_extreme_points(sys, PointSet::all(n)) == choquet_boundary(sys).boundary());
    if (n <= 8) CHECK(is_subset(phi_extreme_points(sys, s), kyfan_extreme_points(sys, s)));
  }
}
