#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "choquet/convexify.hpp"
#include "choquet/generators.hpp"
#include "choquet/maxprinciple.hpp"
#include "choquet/measures.hpp"
#include "choquet/sets.hpp"
#include "choquet/space.hpp"

/// JSON and CSV formats. Instance files look like
///
///   {"labels": ["1", "2"], "coords": [[x, y], ...] | null,
///    "basis": [[row 0], [row 1], ...],
///    "ambient": ["1", ...],            (optional, default: every point)
///    "expected": {"boundary": [...], "notes": {...}}}   (optional)
///
/// Fields and measures are JSON arrays of numbers, point sets JSON arrays of
/// labels, convex-trace specs {"pieces": [{"a": [...], "beta": b}, ...]}.
namespace choquet::io {

nlohmann::json to_json(const FunctionSystem& sys);
nlohmann::json to_json(const gen::GeneratedInstance& inst);
FunctionSystem system_from_json(const nlohmann::json& j);
/// The "expected"."boundary" labels of an instance file, if present.
std::optional<PointSet> expected_boundary_from_json(const FunctionSystem& sys,
                                                    const nlohmann::json& j);

/// d lines of n comma-separated numbers. An optional first line of
/// non-numeric cells supplies labels; otherwise labels are "0".."n-1".
FunctionSystem system_from_basis_csv(std::istream& in);

/// Parses JSON text, mapping syntax errors to InputError.
nlohmann::json parse_json(std::istream& in, const std::string& what);
nlohmann::json parse_json_file(const std::string& path);

ScalarField field_from_json(const nlohmann::json& j);
/// A JSON array, or a CSV column (one number per line, optional header).
ScalarField read_field(const std::string& path);
nlohmann::json to_json(const ScalarField& f);
nlohmann::json to_json(const Measure& m);

PointSet point_set_from_json(const FunctionSystem& sys, const nlohmann::json& j);
nlohmann::json to_json(const FunctionSystem& sys, const PointSet& s);

ConvexTraceSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConvexTraceSpec& spec);
/// Either a JSON array of specs or {"specs": [...]}.
std::vector<ConvexTraceSpec> spec_list_from_json(const nlohmann::json& j);

PhiFunction phi_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PhiFunction& phi);

nlohmann::json to_json(const FunctionSystem& sys, const ValidationReport& r);
nlohmann::json to_json(const FunctionSystem& sys, const BoundaryReport& r);
nlohmann::json to_json(const FunctionSystem& sys, const MaxReport& r);
nlohmann::json to_json(const FunctionSystem& sys, const MultiMaxReport& r);
nlohmann::json to_json(const FunctionSystem& sys, const KreinMilmanReport& r);
nlohmann::json to_json(const FunctionSystem& sys, const SeparationResult& r);
nlohmann::json to_json(const GenericityReport& r);

/// Per-point CSV: label,is_boundary,min_self_mass,vertex_test.
std::string boundary_csv(const FunctionSystem& sys, const BoundaryReport& r);

}  // namespace choquet::io
