#include "support.hpp"

#include "choquet/maxprinciple.hpp"
#include "choquet/measures.hpp"

using namespace choquet;
using namespace testing;

namespace {

ConvexTraceSpec tangents(std::initializer_list<double> at) {
  ConvexTraceSpec spec;
  for (double a : at) spec.pieces.push_back({Eigen::Vector2d(0.0, 2 * (a - 0.4)), -(a * a - 0.16)});
  return spec;
}

ConvexTraceSpec affine(const Eigen::VectorXd& a, double beta = 0.0) {
  ConvexTraceSpec spec;
  spec.pieces.push_back({a, beta});
  return spec;
}

}  // namespace

TEST_CASE("argmax set") {
  CHECK(argmax_set(field({1, 3, 3, 2})) == points({1, 2}));
  CHECK(argmax_set(field({1, 3, 3 - 1e-12, 2})) == points({1, 2}));
  CHECK(argmax_set(field({1, 3, 2.9, 2}), 0.2) == points({1, 2}));
  CHECK(argmax_set(field({5})) == points({0}));
}

TEST_CASE("Bauer maximum principle on the tangent example") {
  const FunctionSystem nat = naturals4();
  const MaxReport r = bauer_verify(nat, tangents({0.25, 0.5, 1.0}));
  CHECK(r.bauer_ok);
  CHECK(r.argmax == points({0}));
  CHECK(r.max_value == doctest::Approx(0.36));
  CHECK(r.boundary == points({0, 3}));
  CHECK(r.boundary_max == doctest::Approx(0.36));
  CHECK(r.boundary_argmax == points({0}));
}

TEST_CASE("Bauer maximum principle on every generator") {
  std::vector<gen::GeneratedInstance> insts;
  insts.push_back(gen::interval_affine(21));
  insts.push_back(gen::interval_full(6));
  insts.push_back(gen::cantor(1));
  insts.push_back(gen::disk(16, 1, 3));
  insts.push_back(gen::naturals(8));
  Rng rng(12);
  for (const auto& inst : insts) {
    const FunctionSystem& sys = inst.system;
    const PointSet boundary = choquet_boundary(sys).boundary();
    for (int k = 0; k < 5; ++k) {
      const auto spec = random_spec(rng, static_cast<std::size_t>(sys.dim()), 1 + rng.below(5));
      const MaxReport r = bauer_verify(sys, spec, boundary);
      CHECK(r.bauer_ok);
      CHECK(r.boundary_max == doctest::Approx(r.max_value).epsilon(1e-12));
    }
  }
}

TEST_CASE("Bauer maximum principle on random systems and specs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(derive_seed(61, seed));
    const std::size_t n = 3 + rng.below(12);
    const std::size_t d = 2 + rng.below(std::min<std::size_t>(4, n - 1));
    const FunctionSystem sys = gen::random(n, d, seed).system;
    const MaxReport r = bauer_verify(sys, random_spec(rng, d, 1 + rng.below(6)));
    INFO("seed " << seed);
    CHECK(r.bauer_ok);
    CHECK(is_subset(r.boundary_argmax, r.argmax));
    CHECK_FALSE(r.boundary_argmax.indices.empty());
  }
}

TEST_CASE("exposing functionals single out boundary points") {
  const FunctionSystem nat = naturals4();
  for (std::size_t x : {0u, 3u}) {
    const PhiFunction phi = expose(nat, x);
    CHECK(argmax_set(evaluate(nat, phi)) == points({x}));
  }
  CHECK_THROWS_AS(expose(nat, 1), InputError);

  const FunctionSystem disk = gen::disk(12, 1, 2).system;
  for (std::size_t x = 0; x < 12; ++x) {
    CHECK(argmax_set(evaluate(disk, expose(disk, x))) == points({x}));
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FunctionSystem sys = gen::random(9, 3, seed).system;
    for (std::size_t x : choquet_boundary(sys).boundary().indices) {
      INFO("seed " << seed << " point " << x);
      CHECK(argmax_set(evaluate(sys, expose(sys, x))) == points({x}));
    }
  }
}

TEST_CASE("multiple maximum principle") {
  const FunctionSystem nat = naturals4();
  const Eigen::Vector2d down(0.0, 1.0);
  const MultiMaxReport planted =
      multi_max_verify(nat, {affine(down), tangents({0.25, 0.5, 1.0}), affine(Eigen::Vector2d(1.0, 0.0))});
  CHECK_FALSE(planted.hypothesis_void);
  CHECK(planted.ok);
  CHECK(planted.common_argmax == points({0}));
  CHECK(planted.common_boundary_argmax == points({0}));

  const MultiMaxReport disjoint = multi_max_verify(nat, {affine(down), affine(-down)});
  CHECK(disjoint.hypothesis_void);
  CHECK(disjoint.ok);
  CHECK(disjoint.common_argmax.indices.empty());

  const MultiMaxReport single = multi_max_verify(nat, {tangents({0.25, 0.5, 1.0})});
  CHECK(single.ok);
  CHECK(single.common_argmax == bauer_verify(nat, tangents({0.25, 0.5, 1.0})).argmax);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(derive_seed(67, seed));
    const FunctionSystem sys = gen::random(10, 3, seed).system;
    const PointSet boundary = choquet_boundary(sys).boundary();
    const std::size_t x = boundary.indices[rng.below(boundary.indices.size())];
    const PhiFunction phi = expose(sys, x);
    const double peak = evaluate(sys, phi)[x];
    std::vector<ConvexTraceSpec> family;
    for (int k = 0; k < 3; ++k) {
      ConvexTraceSpec spec = affine(phi.coeffs, -peak);
      spec.pieces.push_back({Eigen::VectorXd::Zero(3), rng.uniform(-2.0, -0.5)});
      family.push_back(spec);
    }
    const MultiMaxReport r = multi_max_verify(sys, family, boundary);
    INFO("seed " << seed);
    CHECK(r.ok);
    CHECK(r.common_boundary_argmax.contains(x));
  }
}

TEST_CASE("genericity experiment") {
  const FunctionSystem nat = naturals4();
  const ScalarField flat = field({1, 1, 1, 1});
  const GenericityReport base = genericity_experiment(nat, flat, 200, 0.1, 7);
  CHECK(base.trials == 200);
  CHECK(base.argmax_sizes.size() == 200);
  CHECK(base.unique_fraction == doctest::Approx(1.0));
  CHECK(base.perturbation_norm == doctest::Approx(0.1));

  const GenericityReport again = genericity_experiment(nat, flat, 200, 0.1, 7);
  CHECK(again.argmax_sizes == base.argmax_sizes);

  CHECK_THROWS_AS(genericity_experiment(nat, flat, 50, 0.0, 7), InputError);

  const FunctionSystem sys = gen::random(10, 3, 2).system;
  const ScalarField f = field(Eigen::VectorXd::Zero(10));
  double prev = 2.0;
  for (double tie : {0.0, 1e-3, 1e-2, 1e-1, 1.0}) {
    const GenericityReport r = genericity_experiment(sys, f, 300, 0.1, 11, tie);
    CHECK(r.unique_fraction <= prev);
    prev = r.unique_fraction;
  }
  CHECK(prev == doctest::Approx(0.0));
}

TEST_CASE("boundary characterization through maximizer sets") {
  const FunctionSystem nat = naturals4();
  CHECK(boundary_characterization(nat, 0));
  CHECK_FALSE(boundary_characterization(nat, 1));
  CHECK_FALSE(boundary_characterization(nat, 2));
  CHECK(boundary_characterization(nat, 3));

  const FunctionSystem sys = gen::random(8, 3, 3).system;
  const BoundaryReport r = choquet_boundary(sys);
  for (std::size_t x = 0; x < sys.size(); ++x) {
    CHECK(boundary_characterization(sys, x, 5, 8) == r.points[x].is_boundary);
  }
}
