#include "support.hpp"

#include <numbers>

using namespace choquet;
using namespace testing;

TEST_CASE("naturals example passes both hypotheses") {
  const FunctionSystem sys = naturals4();
  const ValidationReport r = validate(sys);
  CHECK(r.constants_ok);
  CHECK(r.separation_ok);
  CHECK(r.passed());
  CHECK(r.min_separation == doctest::Approx(1.0 / 3 - 0.25));
  CHECK_NOTHROW(sys.require_valid());
}

TEST_CASE("duplicated columns fail separation") {
  Eigen::MatrixXd b(2, 3);
  b << 1, 1, 1, 0.5, 0.5, 1;
  const FunctionSystem sys = from_matrix(b);
  CHECK_FALSE(sys.report().separation_ok);
  CHECK(sys.report().constants_ok);
  CHECK(sys.report().closest_a == 0);
  CHECK(sys.report().closest_b == 1);
  CHECK_THROWS_AS(sys.require_valid(), InputError);
}

TEST_CASE("constants outside the span fail the constants condition") {
  Eigen::MatrixXd b(2, 2);
  b << 1, 2, 2, 4;
  const FunctionSystem sys = from_matrix(b);
  CHECK_FALSE(sys.report().constants_ok);
  CHECK(sys.report().separation_ok);
  CHECK_THROWS_AS(sys.require_valid(), InputError);
}

TEST_CASE("constants may be spanned without a literal ones row") {
  Eigen::MatrixXd b(2, 3);
  b << 0.2, 0.5, 0.9, 0.8, 0.5, 0.1;
  CHECK(from_matrix(b).report().passed());
}

TEST_CASE("construction rejects malformed input") {
  FiniteSpace space;
  space.labels = {"a", "b"};
  CHECK_THROWS_AS(FunctionSystem(space, Eigen::MatrixXd::Ones(2, 3)), InputError);
  Eigen::MatrixXd nan = Eigen::MatrixXd::Ones(1, 2);
  nan(0, 1) = std::nan("");
  CHECK_THROWS_AS(FunctionSystem(space, nan), InputError);
  space.labels = {"a", "a"};
  CHECK_THROWS_AS(FunctionSystem(space, Eigen::MatrixXd::Ones(1, 2)), InputError);
  space.labels = {"a", "b"};
  space.coords = Eigen::MatrixX2d::Zero(3, 2);
  CHECK_THROWS_AS(FunctionSystem(space, Eigen::MatrixXd::Ones(1, 2)), InputError);
}

TEST_CASE("embed returns basis columns") {
  const FunctionSystem sys = naturals4();
  const Eigen::VectorXd b2 = embed(sys, 1);
  CHECK(b2(0) == 1.0);
  CHECK(b2(1) == 0.5);
  CHECK(embed(from_matrix(Eigen::MatrixXd::Identity(3, 3)), 0) == Eigen::Vector3d(1, 0, 0));
  CHECK_THROWS_AS(embed(sys, 4), InputError);
}

TEST_CASE("embed on the disk at degree 2") {
  const double theta = 0.7;
  const FunctionSystem sys =
      gen::disk_system({std::polar(1.0, theta), {0.0, 0.0}, std::polar(0.5, 2.0)}, {"c", "o", "r"}, 2);
  const Eigen::VectorXd q = embed(sys, 0);
  REQUIRE(q.size() == 5);
  CHECK(q(0) == doctest::Approx(1.0));
  CHECK(q(1) == doctest::Approx(std::cos(theta)));
  CHECK(q(2) == doctest::Approx(std::sin(theta)));
  CHECK(q(3) == doctest::Approx(std::cos(2 * theta)));
  CHECK(q(4) == doctest::Approx(std::sin(2 * theta)));
}

TEST_CASE("evaluate and pair") {
  const FunctionSystem sys = naturals4();
  const ScalarField b = evaluate(sys, {Eigen::Vector2d(0, 1)});
  CHECK(b[0] == 1.0);
  CHECK(b[2] == doctest::Approx(1.0 / 3));
  CHECK(evaluate(sys, {Eigen::Vector2d::Zero()}).values.isZero());
  const ScalarField d = evaluate(sys, {Eigen::Vector2d(1, -1)});
  CHECK(d[0] == 0.0);
  CHECK(d[1] == doctest::Approx(0.5));
  CHECK(d[2] == doctest::Approx(2.0 / 3));
  CHECK(d[3] == doctest::Approx(0.75));
  CHECK_THROWS_AS(evaluate(sys, {Eigen::Vector3d::Zero()}), InputError);

  Measure mu;
  mu.weights = Eigen::Vector4d(1.0 / 3, 0, 0, 2.0 / 3);
  CHECK(pair(mu, b) == doctest::Approx(0.5));
  CHECK(pair(Measure::dirac(4, 2), b) == b[2]);
  mu.weights = Eigen::Vector4d::Constant(0.25);
  CHECK(pair(mu, field({1, 1, 1, 1})) == doctest::Approx(1.0));
}

TEST_CASE("Dirac pairing agrees with the embedding on random systems") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(derive_seed(3, seed));
    const std::size_t n = 3 + rng.below(8);
    const std::size_t d = 2 + rng.below(n - 2);
    const FunctionSystem sys = gen::random(n, d, seed).system;
    const PhiFunction phi{random_vector(rng, static_cast<Eigen::Index>(d))};
    const ScalarField f = evaluate(sys, phi);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(pair(Measure::dirac(n, j), f) - embed(sys, j).dot(phi.coeffs)) <= 1e-12);
    }
  }
}

TEST_CASE("span residual separates Phi-elements from other fields") {
  const FunctionSystem sys = naturals4();
  CHECK(span_residual(sys, field({2, 1.5, 4.0 / 3, 1.25})) < 1e-12);
  CHECK(span_residual(sys, field({0, 1, 1, 0})) > 0.1);
}

TEST_CASE("labels and point sets") {
  const FunctionSystem sys = naturals4();
  CHECK(sys.index_of("3") == 2);
  CHECK_THROWS_AS(sys.index_of("5"), InputError);
  const PointSet s(std::vector<std::size_t>{3, 1, 3});
  CHECK(s.indices == std::vector<std::size_t>{1, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(is_subset(s, PointSet::all(4)));
  CHECK_FALSE(is_subset(PointSet::all(4), s));
  CHECK(PointSet::all(3).indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("every generator output validates") {
  CHECK(gen::interval_affine(5).system.report().passed());
  CHECK(gen::interval_full(6).system.report().passed());
  CHECK(gen::cantor(2).system.report().passed());
  CHECK(gen::disk(16, 2, 3).system.report().passed());
  CHECK(gen::naturals(7).system.report().passed());
  CHECK(gen::naturals(7, true).system.report().passed());
  CHECK(gen::random(9, 4, 2).system.report().passed());
}
