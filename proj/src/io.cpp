#include "choquet/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "choquet/textutil.hpp"

namespace choquet::io {

namespace {

using nlohmann::json;

std::vector<double> to_vec(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::VectorXd vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a JSON array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError(what + " entry " + std::to_string(i) + " is not a number");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

json labels_of(const FunctionSystem& sys, const PointSet& s) {
  json out = json::array();
  for (std::size_t j : s.indices) out.push_back(sys.label(j));
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
  }
  return cells;
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

json to_json(const FunctionSystem& sys) {
  json j;
  j["labels"] = sys.space().labels;
  if (sys.space().coords) {
    json coords = json::array();
    for (Eigen::Index r = 0; r < sys.space().coords->rows(); ++r) {
      coords.push_back({(*sys.space().coords)(r, 0), (*sys.space().coords)(r, 1)});
    }
    j["coords"] = coords;
  } else {
    j["coords"] = nullptr;
  }
  json basis = json::array();
  for (Eigen::Index i = 0; i < sys.basis().rows(); ++i) {
    basis.push_back(to_vec(sys.basis().row(i).transpose()));
  }
  j["basis"] = basis;
  if (!sys.space().ambient.empty()) {
    json amb = json::array();
    for (std::size_t k = 0; k < sys.size(); ++k) {
      if (sys.space().ambient[k]) amb.push_back(sys.label(k));
    }
    j["ambient"] = amb;
  }
  return j;
}

json to_json(const gen::GeneratedInstance& inst) {
  json j = to_json(inst.system);
  json expected;
  expected["boundary"] = inst.expected_boundary ? labels_of(inst.system, *inst.expected_boundary)
                                                : json(nullptr);
  expected["notes"] = inst.notes;
  j["expected"] = expected;
  return j;
}

FunctionSystem system_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  if (!j.contains("basis")) throw InputError("instance is missing \"basis\"");
  const json& rows = j.at("basis");
  if (!rows.is_array() || rows.empty()) throw InputError("\"basis\" must be a nonempty array of rows");

  std::vector<Eigen::VectorXd> parsed;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    parsed.push_back(vector_from_json(rows[i], "basis row " + std::to_string(i)));
  }
  const Eigen::Index n = parsed.front().size();
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(parsed.size()), n);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (parsed[i].size() != n) throw InputError("basis rows have different lengths");
    basis.row(static_cast<Eigen::Index>(i)) = parsed[i].transpose();
  }

  FiniteSpace space;
  if (j.contains("labels") && !j.at("labels").is_null()) {
    const json& labels = j.at("labels");
    if (!labels.is_array()) throw InputError("\"labels\" must be an array of strings");
    for (const json& l : labels) {
      if (l.is_string()) space.labels.push_back(l.get<std::string>());
      else if (l.is_number()) space.labels.push_back(l.dump());
      else throw InputError("labels must be strings");
    }
  } else {
    for (Eigen::Index k = 0; k < n; ++k) space.labels.push_back(std::to_string(k));
  }
  if (j.contains("coords") && !j.at("coords").is_null()) {
    const json& c = j.at("coords");
    if (!c.is_array()) throw InputError("\"coords\" must be an array of [x, y] pairs or null");
    Eigen::MatrixX2d coords(static_cast<Eigen::Index>(c.size()), 2);
    for (std::size_t r = 0; r < c.size(); ++r) {
      const Eigen::VectorXd xy = vector_from_json(c[r], "coords entry");
      if (xy.size() != 2) throw InputError("coords entries must be [x, y] pairs");
      coords.row(static_cast<Eigen::Index>(r)) = xy.transpose();
    }
    space.coords = coords;
  }
  FunctionSystem probe(space, basis);
  if (j.contains("ambient") && !j.at("ambient").is_null()) {
    space.ambient.assign(space.labels.size(), false);
    for (const json& l : j.at("ambient")) {
      if (!l.is_string()) throw InputError("\"ambient\" must list point labels");
      space.ambient[probe.index_of(l.get<std::string>())] = true;
    }
    return FunctionSystem(std::move(space), std::move(basis));
  }
  return probe;
}

std::optional<PointSet> expected_boundary_from_json(const FunctionSystem& sys, const json& j) {
  if (!j.is_object() || !j.contains("expected")) return std::nullopt;
  const json& e = j.at("expected");
  if (!e.is_object() || !e.contains("boundary") || e.at("boundary").is_null()) return std::nullopt;
  return point_set_from_json(sys, e.at("boundary"));
}

FunctionSystem system_from_basis_csv(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv_line(line);
    std::vector<double> row;
    bool numeric = true;
    for (const auto& c : cells) {
      const auto v = parse_number(c);
      if (!v) {
        numeric = false;
        break;
      }
      row.push_back(*v);
    }
    if (!numeric) {
      if (!first) throw InputError("non-numeric cell in basis CSV: " + line);
      labels = cells;
    } else {
      rows.push_back(std::move(row));
    }
    first = false;
  }
  if (rows.empty()) throw InputError("basis CSV has no numeric rows");
  const std::size_t n = rows.front().size();
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw InputError("basis CSV rows have different lengths");
    for (std::size_t k = 0; k < n; ++k) {
      basis(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    }
  }
  FiniteSpace space;
  if (labels.empty()) {
    for (std::size_t k = 0; k < n; ++k) space.labels.push_back(std::to_string(k));
  } else {
    if (labels.size() != n) throw InputError("basis CSV header has wrong number of labels");
    space.labels = labels;
  }
  return FunctionSystem(std::move(space), std::move(basis));
}

json parse_json(std::istream& in, const std::string& what) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_json(in, path);
}

ScalarField field_from_json(const json& j) {
  ScalarField f{vector_from_json(j, "field")};
  if (!f.values.allFinite()) throw InputError("field contains non-finite values");
  return f;
}

ScalarField read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open field file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '[') {
    std::istringstream ss(text);
    return field_from_json(parse_json(ss, path));
  }
  std::vector<double> values;
  std::istringstream ss(text);
  std::string line;
  bool first = true;
  while (std::getline(ss, line)) {
    const auto cells = split_csv_line(line);
    if (cells.empty() || cells[0].empty()) continue;
    const auto v = parse_number(cells.back());
    if (!v) {
      if (first) {
        first = false;
        continue;
      }
      throw InputError("non-numeric value in field CSV " + path + ": " + line);
    }
    first = false;
    values.push_back(*v);
  }
  ScalarField f{Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()))};
  if (!f.values.allFinite()) throw InputError("field contains non-finite values");
  return f;
}

json to_json(const ScalarField& f) { return to_vec(f.values); }
json to_json(const Measure& m) { return to_vec(m.weights); }

PointSet point_set_from_json(const FunctionSystem& sys, const json& j) {
  if (!j.is_array()) throw InputError("point set must be a JSON array of labels");
  std::vector<std::size_t> idx;
  for (const json& l : j) {
    if (l.is_string()) idx.push_back(sys.index_of(l.get<std::string>()));
    else if (l.is_number_integer()) idx.push_back(sys.index_of(std::to_string(l.get<long long>())));
    else throw InputError("point set entries must be labels");
  }
  return PointSet(std::move(idx));
}

json to_json(const FunctionSystem& sys, const PointSet& s) { return labels_of(sys, s); }

ConvexTraceSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j.at("pieces").is_array()) {
    throw InputError("convex-trace spec must be {\"pieces\": [...]}");
  }
  ConvexTraceSpec spec;
  for (const json& p : j.at("pieces")) {
    if (!p.is_object() || !p.contains("a")) throw InputError("affine piece needs \"a\"");
    AffinePiece piece;
    piece.direction = vector_from_json(p.at("a"), "affine piece direction");
    if (p.contains("beta")) {
      if (!p.at("beta").is_number()) throw InputError("affine piece \"beta\" must be a number");
      piece.offset = p.at("beta").get<double>();
    }
    spec.pieces.push_back(std::move(piece));
  }
  if (spec.pieces.empty()) throw InputError("convex-trace spec has no pieces");
  return spec;
}

json to_json(const ConvexTraceSpec& spec) {
  json pieces = json::array();
  for (const AffinePiece& p : spec.pieces) pieces.push_back({{"a", to_vec(p.direction)}, {"beta", p.offset}});
  return {{"pieces", pieces}};
}

std::vector<ConvexTraceSpec> spec_list_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object() && j.contains("specs")) list = &j.at("specs");
  if (!list->is_array()) throw InputError("spec family must be an array of specs");
  std::vector<ConvexTraceSpec> out;
  for (const json& s : *list) out.push_back(spec_from_json(s));
  return out;
}

PhiFunction phi_from_json(const json& j) { return {vector_from_json(j, "Phi coefficients")}; }
json to_json(const PhiFunction& phi) { return to_vec(phi.coeffs); }

json to_json(const FunctionSystem&, const ValidationReport& r) {
  return {{"constants", {{"ok", r.constants_ok}, {"residual", r.constants_residual}}},
          {"separation", {{"ok", r.separation_ok},
                          {"min_distance", std::isfinite(r.min_separation) ? json(r.min_separation) : json(nullptr)}}},
          {"passed", r.passed()}};
}

json to_json(const FunctionSystem& sys, const BoundaryReport& r) {
  json points = json::array();
  for (std::size_t k = 0; k < r.points.size(); ++k) {
    const BoundaryEntry& e = r.points[k];
    points.push_back({{"label", sys.label(k)},
                      {"is_boundary", e.is_boundary},
                      {"min_self_mass", e.min_self_mass},
                      {"vertex_test", e.vertex_test}});
  }
  return {{"boundary", labels_of(sys, r.boundary())}, {"points", points}};
}

json to_json(const FunctionSystem& sys, const MaxReport& r) {
  return {{"argmax", labels_of(sys, r.argmax)},
          {"max_value", r.max_value},
          {"boundary", labels_of(sys, r.boundary)},
          {"boundary_argmax", labels_of(sys, r.boundary_argmax)},
          {"boundary_max", r.boundary_max},
          {"bauer_ok", r.bauer_ok}};
}

json to_json(const FunctionSystem& sys, const MultiMaxReport& r) {
  json argmaxes = json::array();
  for (const PointSet& s : r.argmaxes) argmaxes.push_back(labels_of(sys, s));
  return {{"argmaxes", argmaxes},
          {"common_argmax", labels_of(sys, r.common_argmax)},
          {"common_boundary_argmax", labels_of(sys, r.common_boundary_argmax)},
          {"hypothesis_void", r.hypothesis_void},
          {"ok", r.ok}};
}

json to_json(const FunctionSystem& sys, const KreinMilmanReport& r) {
  return {{"hull", labels_of(sys, r.hull)},
          {"extreme", labels_of(sys, r.extreme)},
          {"hull_of_extreme", labels_of(sys, r.hull_of_extreme)},
          {"holds", r.holds}};
}

json to_json(const FunctionSystem&, const SeparationResult& r) {
  json j = {{"separable", r.separable}, {"margin", r.margin}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

json to_json(const GenericityReport& r) {
  return {{"trials", r.trials},
          {"unique_fraction", r.unique_fraction},
          {"perturbation_norm", r.perturbation_norm},
          {"tie_tol", r.tie_tol},
          {"seed", r.seed}};
}

std::string boundary_csv(const FunctionSystem& sys, const BoundaryReport& r) {
  std::string out = "label,is_boundary,min_self_mass,vertex_test\n";
  for (std::size_t k = 0; k < r.points.size(); ++k) {
    const BoundaryEntry& e = r.points[k];
    out += sys.label(k) + "," + (e.is_boundary ? "1" : "0") + "," + format_double(e.min_self_mass) +
           "," + (e.vertex_test ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace choquet::io
