#include "support.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "choquet/io.hpp"
#include "choquet/svg.hpp"

using namespace choquet;
using namespace testing;
using nlohmann::json;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("instance JSON round trip") {
  for (const auto& inst : {gen::naturals(4), gen::cantor(1), gen::disk(12, 1, 2), gen::random(7, 3, 1)}) {
    const json j = io::to_json(inst);
    const FunctionSystem back = io::system_from_json(j);
    CHECK(back.basis() == inst.system.basis());
    CHECK(back.space().labels == inst.system.space().labels);
    CHECK(io::to_json(back).dump() == io::to_json(inst.system).dump());
    const auto expected = io::expected_boundary_from_json(back, j);
    REQUIRE(expected);
    CHECK(*expected == *inst.expected_boundary);
  }
  const json alt = io::to_json(gen::naturals(5, true));
  CHECK(alt.at("expected").at("boundary").is_null());
  CHECK_FALSE(io::expected_boundary_from_json(io::system_from_json(alt), alt));
}

TEST_CASE("instance JSON defaults and ambient mask") {
  const json j = json::parse(R"({"basis": [[1, 1, 1], [0, 0.5, 1]], "ambient": ["0", "2"]})");
  const FunctionSystem sys = io::system_from_json(j);
  CHECK(sys.label(1) == "1");
  CHECK_FALSE(sys.space().coords);
  CHECK_FALSE(sys.space().is_ambient(1));
  CHECK(io::system_from_json(io::to_json(sys)).space().ambient == sys.space().ambient);
}

TEST_CASE("instance JSON errors") {
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"labels": ["a"]})")), InputError);
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"basis": [[1, 1], [0]]})")), InputError);
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"basis": [[1, "x"]]})")), InputError);
  CHECK_THROWS_AS(io::system_from_json(json::parse(R"({"basis": [[1, 1]], "ambient": ["q"]})")), InputError);
  std::istringstream broken("{\"basis\": [[1, 2]");
  CHECK_THROWS_AS(io::parse_json(broken, "instance"), InputError);
}

TEST_CASE("basis CSV") {
  std::istringstream with_header("a,b,c\n1,1,1\n0,0.5,1\n");
  const FunctionSystem sys = io::system_from_basis_csv(with_header);
  CHECK(sys.label(2) == "c");
  CHECK(sys.basis()(1, 1) == 0.5);

  std::istringstream plain("1,1\n0,1\n");
  CHECK(io::system_from_basis_csv(plain).label(1) == "1");

  std::istringstream nan("1,1\n0,nan\n");
  CHECK_THROWS_AS(io::system_from_basis_csv(nan), InputError);
  std::istringstream ragged("1,1,1\n0,1\n");
  CHECK_THROWS_AS(io::system_from_basis_csv(ragged), InputError);
  std::istringstream empty("");
  CHECK_THROWS_AS(io::system_from_basis_csv(empty), InputError);
}

TEST_CASE("fields, point sets, specs and Phi-functions") {
  const FunctionSystem sys = naturals4();
  const ScalarField f = field({0.5, -1, 2, 3.25});
  CHECK(io::field_from_json(io::to_json(f)).values == f.values);
  CHECK_THROWS_AS(io::field_from_json(json::parse(R"([1, "a"])")), InputError);

  const PointSet s = points({0, 2});
  CHECK(io::to_json(sys, s) == json::parse(R"(["1", "3"])"));
  CHECK(io::point_set_from_json(sys, io::to_json(sys, s)) == s);
  CHECK(io::point_set_from_json(sys, json::parse("[1, 3]")) == s);
  CHECK_THROWS_AS(io::point_set_from_json(sys, json::parse(R"(["9"])")), InputError);

  ConvexTraceSpec spec;
  spec.pieces.push_back({Eigen::Vector2d(0.0, -0.3), 0.04});
  spec.pieces.push_back({Eigen::Vector2d(1.0, 0.2), -0.5});
  const ConvexTraceSpec back = io::spec_from_json(io::to_json(spec));
  REQUIRE(back.pieces.size() == 2);
  CHECK(back.pieces[1].direction == spec.pieces[1].direction);
  CHECK(back.pieces[1].offset == spec.pieces[1].offset);
  const json list = {{"specs", {io::to_json(spec), io::to_json(spec)}}};
  CHECK(io::spec_list_from_json(list).size() == 2);
  CHECK(io::spec_list_from_json(list.at("specs")).size() == 2);
  CHECK(io::spec_from_json(json::parse(R"({"pieces": [{"a": [1]}]})")).pieces[0].offset == 0.0);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"pieces": [{"beta": 1}]})")), InputError);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"pieces": []})")), InputError);

  const PhiFunction phi{Eigen::Vector2d(1.5, -2)};
  CHECK(io::phi_from_json(io::to_json(phi)).coeffs == phi.coeffs);
}

TEST_CASE("fields from files") {
  const std::string json_path = "field_test.json";
  const std::string csv_path = "field_test.csv";
  std::ofstream(json_path) << "[1, 2, 3]";
  std::ofstream(csv_path) << "value\n1\n2.5\n-3\n";
  CHECK(io::read_field(json_path).values == Eigen::Vector3d(1, 2, 3));
  CHECK(io::read_field(csv_path).values == Eigen::Vector3d(1, 2.5, -3));
  CHECK_THROWS_AS(io::read_field("does_not_exist.json"), InputError);
  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());
}

TEST_CASE("report serializers") {
  const FunctionSystem sys = naturals4();
  const json b = io::to_json(sys, choquet_boundary(sys));
  CHECK(b.at("boundary") == json::parse(R"(["1", "4"])"));
  CHECK(b.at("points").size() == 4);
  CHECK(b.at("points")[1].at("is_boundary") == false);

  const std::string csv = io::boundary_csv(sys, choquet_boundary(sys));
  CHECK(csv.rfind("label,is_boundary,min_self_mass,vertex_test\n", 0) == 0);
  CHECK(count(csv, "\n") == 5);

  const json v = io::to_json(sys, sys.report());
  CHECK(v.at("constants").at("ok") == true);
  CHECK(v.at("separation").at("ok") == true);
  CHECK(v.at("passed") == true);

  const json sep = io::to_json(sys, separate(sys, points({0, 2}), 1));
  CHECK(sep.at("separable") == false);
  CHECK(sep.at("witness").is_null());

  GenericityReport g;
  g.trials = 3;
  g.seed = 9;
  CHECK(io::to_json(g).at("seed") == 9);
}

TEST_CASE("SVG plots are deterministic") {
  const FunctionSystem disk = gen::disk(16, 1, 2).system;
  const std::vector<Overlay> overlays = {{"boundary", PointSet(iota(16))}};
  const std::string a = plot_svg(disk, overlays);
  CHECK(a == plot_svg(disk, overlays));
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(count(a, "<circle") >= disk.size() + 16);

  PlotOptions too_many;
  too_many.axes = {1, 2, 3};
  CHECK_THROWS_AS(plot_svg(disk, {}, too_many), InputError);
  CHECK_THROWS_AS(plot_svg(disk, {{"bad", points({999})}}), InputError);
}

TEST_CASE("naturals example plots as collinear points") {
  const FunctionSystem sys = naturals4();
  const std::string svg = plot_svg(sys, {{"boundary", points({0, 3})}});
  std::vector<std::string> ys;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) {
    const std::size_t cy = svg.find("cy=\"", pos) + 4;
    ys.push_back(svg.substr(cy, svg.find('"', cy) - cy));
  }
  REQUIRE(ys.size() >= 4);
  for (const auto& y : ys) CHECK(y == ys.front());
  CHECK(count(svg, ">1<") + count(svg, ">4<") >= 2);
}
