#include "choquet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "choquet/convexify.hpp"
#include "choquet/generators.hpp"
#include "choquet/io.hpp"
#include "choquet/lp.hpp"
#include "choquet/maxprinciple.hpp"
#include "choquet/measures.hpp"
#include "choquet/parallel.hpp"
#include "choquet/rng.hpp"
#include "choquet/sets.hpp"
#include "choquet/svg.hpp"
#include "choquet/textutil.hpp"

namespace choquet::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string instance;
  std::string basis_csv;
  std::string output;
  std::string plot;
  bool csv = false;
  bool strict = false;
  unsigned threads = 1;
  std::string dump_lp;
  std::uint64_t seed = 0;

  std::string set;
  std::string point;
  std::string y;
  std::string z;
  std::string field;
  std::string spec;
  std::string specs;
  std::optional<double> tol;
  std::optional<double> tie_tol;
  double alpha = 1.0;
  double epsilon = 0.1;
  std::size_t trials = 1000;
  std::size_t samples = 16;
  std::string method = "biconjugate";
  bool characterize = false;
  bool boundary_overlay = false;
  bool alternating = false;
  std::vector<std::size_t> axes;

  std::string gen_name;
  std::vector<std::string> gen_params;
};

struct Loaded {
  FunctionSystem sys;
  std::optional<PointSet> expected;
};

bool looks_like_json(const std::string& v) {
  const auto p = v.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (v[p] == '[' || v[p] == '{');
}

json parse_text(const std::string& text, const std::string& what) {
  std::istringstream ss(text);
  return io::parse_json(ss, what);
}

/// Inline JSON or a path to a JSON file.
json json_arg(const std::string& value, const std::string& what) {
  if (looks_like_json(value)) return parse_text(value, what);
  return io::parse_json_file(value);
}

Loaded load(const Options& o, std::istream& in) {
  if (!o.basis_csv.empty()) {
    std::ifstream f(o.basis_csv);
    if (!f) throw InputError("cannot open " + o.basis_csv);
    return {io::system_from_basis_csv(f), std::nullopt};
  }
  const json j = (o.instance.empty() || o.instance == "-") ? io::parse_json(in, "instance on stdin")
                                                           : io::parse_json_file(o.instance);
  FunctionSystem sys = io::system_from_json(j);
  auto expected = io::expected_boundary_from_json(sys, j);
  return {std::move(sys), std::move(expected)};
}

PointSet set_arg(const FunctionSystem& sys, const std::string& value) {
  if (value.empty()) return PointSet::all(sys.size());
  if (looks_like_json(value)) return io::point_set_from_json(sys, parse_text(value, "--set"));
  if (std::filesystem::exists(value)) return io::point_set_from_json(sys, io::parse_json_file(value));
  std::vector<std::size_t> idx;
  std::istringstream ss(value);
  std::string label;
  while (std::getline(ss, label, ',')) idx.push_back(sys.index_of(label));
  return PointSet(std::move(idx));
}

ScalarField field_arg(const FunctionSystem& sys, const std::string& value) {
  if (value.empty()) throw InputError("--field is required");
  ScalarField f = looks_like_json(value) ? io::field_from_json(parse_text(value, "--field"))
                                         : io::read_field(value);
  check_field(sys, f);
  return f;
}

std::size_t point_arg(const FunctionSystem& sys, const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string(flag) + " is required");
  return sys.index_of(value);
}

double tolerance(const Options& o, const std::optional<double>& given, double fallback) {
  if (o.strict) return 0.0;
  const double t = given.value_or(fallback);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InputError("tolerances must be finite and >= 0");
  return t;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.output);
  f << text;
}

void write_plot(const Options& o, const FunctionSystem& sys, const std::vector<Overlay>& overlays) {
  if (o.plot.empty()) return;
  PlotOptions po;
  po.axes = o.axes;
  const std::string svg = plot_svg(sys, overlays, po);
  std::ofstream f(o.plot, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.plot);
  f << svg;
}

std::string membership_csv(const FunctionSystem& sys,
                           const std::vector<std::pair<std::string, const PointSet*>>& cols) {
  std::string out = "label";
  for (const auto& c : cols) out += "," + c.first;
  out += "\n";
  for (std::size_t j = 0; j < sys.size(); ++j) {
    out += sys.label(j);
    for (const auto& c : cols) out += c.second->contains(j) ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

std::size_t size_param(const std::vector<std::string>& params, std::size_t i, std::size_t fallback) {
  if (i >= params.size()) return fallback;
  const std::string& s = params[i];
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s[0] == '-') {
    throw InputError("generator parameter '" + s + "' is not a nonnegative integer");
  }
  return static_cast<std::size_t>(v);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto& p = o.gen_params;
  auto too_many = [&](std::size_t max) {
    if (p.size() > max) throw InputError("too many parameters for generator " + o.gen_name);
  };
  std::optional<gen::GeneratedInstance> inst;
  if (o.gen_name == "interval") {
    too_many(1);
    inst = gen::interval_affine(size_param(p, 0, 101));
  } else if (o.gen_name == "interval-full") {
    too_many(1);
    inst = gen::interval_full(size_param(p, 0, 11));
  } else if (o.gen_name == "cantor") {
    too_many(2);
    const std::size_t level = size_param(p, 0, 1);
    if (level > 8) throw InputError("cantor generator needs 1 <= level <= 8");
    inst = gen::cantor(static_cast<int>(level), size_param(p, 1, 3));
  } else if (o.gen_name == "disk") {
    too_many(3);
    inst = gen::disk(size_param(p, 0, 64), size_param(p, 1, 3), size_param(p, 2, 8));
  } else if (o.gen_name == "naturals") {
    too_many(1);
    inst = gen::naturals(size_param(p, 0, 4), o.alternating);
  } else if (o.gen_name == "random") {
    too_many(2);
    inst = gen::random(size_param(p, 0, 6), size_param(p, 1, 3), o.seed);
  } else {
    std::string known;
    for (const auto& n : gen::names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown generator '" + o.gen_name + "' (known: " + known + ")");
  }
  emit(o, out, dump(io::to_json(*inst)));
  return kOk;
}

int cmd_boundary(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const BoundaryReport rep = choquet_boundary(sys);
  json j = io::to_json(sys, rep);
  j["validation"] = io::to_json(sys, sys.report());
  int code = kOk;
  if (l.expected) {
    const bool match = rep.boundary() == *l.expected;
    j["expected_boundary"] = io::to_json(sys, *l.expected);
    j["matches_expected"] = match;
    if (!match) code = kVerificationFailed;
  }
  if (o.characterize) {
    const auto verdicts = parallel_map<char>(sys.size(), [&](std::size_t x) {
      return static_cast<char>(boundary_characterization(sys, x, derive_seed(o.seed, x), o.samples));
    });
    PointSet characterized;
    for (std::size_t x = 0; x < sys.size(); ++x) {
      if (verdicts[x]) characterized.indices.push_back(x);
    }
    j["characterization"] = {{"boundary", io::to_json(sys, characterized)},
                             {"agrees", characterized == rep.boundary()},
                             {"seed", o.seed}};
  }
  write_plot(o, sys, {{"boundary", rep.boundary()}});
  emit(o, out, o.csv ? io::boundary_csv(sys, rep) : dump(j));
  return code;
}

int cmd_hull(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const PointSet s = set_arg(sys, o.set);
  const PointSet hull = trace_hull(sys, s);
  write_plot(o, sys, {{"set", s}, {"hull", hull}});
  if (o.csv) {
    emit(o, out, membership_csv(sys, {{"set", &s}, {"hull", &hull}}));
  } else {
    emit(o, out, dump({{"set", io::to_json(sys, s)},
                       {"hull", io::to_json(sys, hull)},
                       {"trace_convex", hull == s}}));
  }
  return kOk;
}

int cmd_separate(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const PointSet c = set_arg(sys, o.set);
  const std::size_t x = point_arg(sys, o.point, "--point");
  const SeparationResult r = separate(sys, c, x);
  json j = io::to_json(sys, r);
  j["set"] = io::to_json(sys, c);
  j["point"] = sys.label(x);
  if (r.witness) j["witness_values"] = io::to_json(evaluate(sys, *r.witness));
  emit(o, out, dump(j));
  return kOk;
}

int cmd_extreme(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const PointSet s = set_arg(sys, o.set);
  const KreinMilmanReport r = krein_milman_verify(sys, s);
  write_plot(o, sys, {{"hull", r.hull}, {"extreme", r.extreme}});
  if (o.csv) {
    emit(o, out, membership_csv(sys, {{"hull", &r.hull}, {"extreme", &r.extreme},
                                      {"hull_of_extreme", &r.hull_of_extreme}}));
  } else {
    json j = io::to_json(sys, r);
    j["set"] = io::to_json(sys, s);
    emit(o, out, dump(j));
  }
  return r.holds ? kOk : kVerificationFailed;
}

int cmd_kyfan(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  if (!o.y.empty() || !o.z.empty()) {
    const std::size_t y = point_arg(sys, o.y, "--y");
    const std::size_t z = point_arg(sys, o.z, "--z");
    const PointSet seg = kyfan_segment(sys, y, z);
    write_plot(o, sys, {{"segment", seg}});
    if (o.csv) {
      emit(o, out, membership_csv(sys, {{"segment", &seg}}));
    } else {
      emit(o, out, dump({{"y", sys.label(y)}, {"z", sys.label(z)}, {"segment", io::to_json(sys, seg)}}));
    }
    return kOk;
  }
  const PointSet s = set_arg(sys, o.set);
  const PointSet phi_ext = phi_extreme_points(sys, s);
  const PointSet ky_ext = kyfan_extreme_points(sys, s);
  const bool ok = is_subset(phi_ext, ky_ext);
  write_plot(o, sys, {{"phi_extreme", phi_ext}, {"kyfan_extreme", ky_ext}});
  if (o.csv) {
    emit(o, out, membership_csv(sys, {{"phi_extreme", &phi_ext}, {"kyfan_extreme", &ky_ext}}));
  } else {
    emit(o, out, dump({{"set", io::to_json(sys, s)},
                       {"phi_extreme", io::to_json(sys, phi_ext)},
                       {"kyfan_extreme", io::to_json(sys, ky_ext)},
                       {"phi_subset_kyfan", ok}}));
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_convexify(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const ScalarField f = field_arg(sys, o.field);
  const bool all = o.method == "all";
  const double tol = tolerance(o, o.tol, kConvexTol);
  std::vector<std::pair<std::string, ScalarField>> cols;
  if (all || o.method == "biconjugate") cols.emplace_back("biconjugate", biconjugate(sys, f));
  if (all || o.method == "positive") cols.emplace_back("hat_positive", hat_positive(sys, f));
  if (all || o.method == "signed") {
    if (!(o.alpha > 0.0) || !std::isfinite(o.alpha)) throw InputError("--alpha must be finite and > 0");
    cols.emplace_back("hat_signed", hat_signed(sys, f, o.alpha));
  }
  if (cols.empty()) {
    throw InputError("unknown --method '" + o.method + "' (biconjugate, positive, signed, all)");
  }
  int code = kOk;
  json j = {{"f", io::to_json(f)}};
  for (const auto& [name, g] : cols) j[name] = io::to_json(g);
  if (all) {
    const ScalarField& bic = cols[0].second;
    const ScalarField& pos = cols[1].second;
    const ScalarField& sgn = cols[2].second;
    const bool ordered = ((sgn.values - pos.values).maxCoeff() <= tol) &&
                         ((pos.values - bic.values).cwiseAbs().maxCoeff() <= tol) &&
                         ((bic.values - f.values).maxCoeff() <= tol);
    j["order_ok"] = ordered;
    if (!ordered) code = kVerificationFailed;
  }
  if (o.csv) {
    std::string text = "label,f";
    for (const auto& c : cols) text += "," + c.first;
    text += "\n";
    for (std::size_t x = 0; x < sys.size(); ++x) {
      text += sys.label(x) + "," + format_double(f[x]);
      for (const auto& c : cols) text += "," + format_double(c.second[x]);
      text += "\n";
    }
    emit(o, out, text);
  } else {
    emit(o, out, dump(j));
  }
  return code;
}

int cmd_check_convex(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const ScalarField f = field_arg(sys, o.field);
  const double tol = tolerance(o, o.tol, kConvexTol);
  const ScalarField bic = biconjugate(sys, f);
  const double gap = (f.values - bic.values).cwiseAbs().maxCoeff();
  if (o.csv) {
    std::string text = "label,f,biconjugate,gap\n";
    for (std::size_t x = 0; x < sys.size(); ++x) {
      text += sys.label(x) + "," + format_double(f[x]) + "," + format_double(bic[x]) + "," +
              format_double(f[x] - bic[x]) + "\n";
    }
    emit(o, out, text);
  } else {
    emit(o, out, dump({{"choquet_convex", gap <= tol},
                       {"max_gap", gap},
                       {"tol", tol},
                       {"biconjugate", io::to_json(bic)}}));
  }
  return kOk;
}

int cmd_keyinterval(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const ScalarField f = field_arg(sys, o.field);
  std::vector<std::size_t> points;
  if (o.point.empty()) {
    points = PointSet::all(sys.size()).indices;
  } else {
    points.push_back(sys.index_of(o.point));
  }
  const auto intervals = parallel_map<KeyInterval>(
      points.size(), [&](std::size_t k) { return key_interval(sys, f, points[k]); });
  if (o.csv) {
    std::string text = "label,lo,hi\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
      text += sys.label(points[k]) + "," + format_double(intervals[k].lo) + "," +
              format_double(intervals[k].hi) + "\n";
    }
    emit(o, out, text);
    return kOk;
  }
  json arr = json::array();
  for (std::size_t k = 0; k < points.size(); ++k) {
    arr.push_back({{"label", sys.label(points[k])}, {"lo", intervals[k].lo}, {"hi", intervals[k].hi}});
  }
  emit(o, out, dump({{"points", arr}}));
  return kOk;
}

int cmd_bauer(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  if (o.spec.empty()) throw InputError("--spec is required");
  const ConvexTraceSpec spec = io::spec_from_json(json_arg(o.spec, "--spec"));
  const MaxReport r = bauer_verify(sys, spec);
  json j = io::to_json(sys, r);
  j["field"] = io::to_json(realize_convex_trace(sys, spec));
  write_plot(o, sys, {{"boundary", r.boundary}, {"argmax", r.argmax}});
  emit(o, out, dump(j));
  return r.bauer_ok ? kOk : kVerificationFailed;
}

int cmd_multimax(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  if (o.specs.empty()) throw InputError("--specs is required");
  const auto specs = io::spec_list_from_json(json_arg(o.specs, "--specs"));
  const MultiMaxReport r = multi_max_verify(sys, specs);
  emit(o, out, dump(io::to_json(sys, r)));
  return r.ok ? kOk : kVerificationFailed;
}

int cmd_expose(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const std::size_t x = point_arg(sys, o.point, "--point");
  const PhiFunction phi = expose(sys, x);
  const ScalarField values = evaluate(sys, phi);
  emit(o, out, dump({{"point", sys.label(x)},
                     {"phi", io::to_json(phi)},
                     {"field", io::to_json(values)},
                     {"argmax", io::to_json(sys, argmax_set(values))}}));
  return kOk;
}

int cmd_generic(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  const ScalarField f = o.field.empty()
                            ? ScalarField{Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.size()))}
                            : field_arg(sys, o.field);
  if (o.trials == 0) throw InputError("--trials must be positive");
  if (!(o.epsilon > 0.0) || !std::isfinite(o.epsilon)) throw InputError("--epsilon must be finite and > 0");
  const double tie = tolerance(o, o.tie_tol, kTieTol);
  const GenericityReport r = genericity_experiment(sys, f, o.trials, o.epsilon, o.seed, tie);
  if (o.csv) {
    std::string text = "trial,argmax_size\n";
    for (std::size_t t = 0; t < r.argmax_sizes.size(); ++t) {
      text += std::to_string(t) + "," + std::to_string(r.argmax_sizes[t]) + "\n";
    }
    emit(o, out, text);
  } else {
    emit(o, out, dump(io::to_json(r)));
  }
  return kOk;
}

int cmd_plot(const Options& o, const Loaded& l, std::ostream& out) {
  const FunctionSystem& sys = l.sys;
  std::vector<Overlay> overlays;
  if (o.boundary_overlay) overlays.push_back({"boundary", choquet_boundary(sys).boundary()});
  if (!o.set.empty()) {
    const PointSet s = set_arg(sys, o.set);
    overlays.push_back({"set", s});
    overlays.push_back({"hull", trace_hull(sys, s)});
  }
  PlotOptions po;
  po.axes = o.axes;
  emit(o, out, plot_svg(sys, overlays, po));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Choquet boundaries, convexifications and maximum principles on finite function systems",
               "choquet"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool takes_instance) {
    if (takes_instance) {
      sub->add_option("instance", o.instance, "Instance JSON (default: stdin)");
      sub->add_option("--basis-csv", o.basis_csv, "Read the basis matrix from CSV instead");
    }
    sub->add_option("-o,--output", o.output, "Write the report here (default: stdout)");
    sub->add_flag("--csv", o.csv, "CSV instead of JSON where supported");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--dump-lp", o.dump_lp, "Append every LP solved to this JSON-lines file");
    sub->add_option("--seed", o.seed, "Random seed")->envname("CHOQUET_SEED");
    sub->add_flag("--strict", o.strict, "Zero all tolerances");
  };

  auto* gen = app.add_subcommand("gen", "Generate an example instance");
  common(gen, false);
  gen->add_option("name", o.gen_name, "interval, interval-full, cantor, disk, naturals, random")->required();
  gen->add_option("params", o.gen_params, "Generator parameters");
  gen->add_flag("--alternating", o.alternating, "naturals: b_k = 1 + (-1)^k/k");

  auto* boundary = app.add_subcommand("boundary", "Choquet boundary by both characterizations");
  common(boundary, true);
  boundary->add_option("--plot", o.plot, "Write an SVG here");
  boundary->add_flag("--characterize", o.characterize, "Also decide via maximizer sets");
  boundary->add_option("--samples", o.samples, "Sampled functions per non-boundary point");

  auto* hull = app.add_subcommand("hull", "Trace-convex hull of a set");
  common(hull, true);
  hull->add_option("--set", o.set, "Labels: JSON array, file, or comma list")->required();
  hull->add_option("--plot", o.plot, "Write an SVG here");

  auto* sep = app.add_subcommand("separate", "Separate a point from a set by a Phi-function");
  common(sep, true);
  sep->add_option("--set", o.set, "Labels: JSON array, file, or comma list")->required();
  sep->add_option("--point", o.point, "Point label")->required();

  auto* ext = app.add_subcommand("extreme", "Phi-extreme points and Krein-Milman check");
  common(ext, true);
  ext->add_option("--set", o.set, "Labels (default: all points)");
  ext->add_option("--plot", o.plot, "Write an SVG here");

  auto* ky = app.add_subcommand("kyfan", "Ky Fan segments and extreme points");
  common(ky, true);
  ky->add_option("--set", o.set, "Labels (default: all points)");
  ky->add_option("--y", o.y, "Segment endpoint");
  ky->add_option("--z", o.z, "Segment endpoint");
  ky->add_option("--plot", o.plot, "Write an SVG here");

  auto* cvx = app.add_subcommand("convexify", "Biconjugate and trace-convexifications of a field");
  common(cvx, true);
  cvx->add_option("--field", o.field, "Field: JSON array, JSON file or CSV column")->required();
  cvx->add_option("--method", o.method, "biconjugate, positive, signed or all");
  cvx->add_option("--alpha", o.alpha, "Strip width for the signed hat");
  cvx->add_option("--tol", o.tol, "Tolerance for the order check");

  auto* chk = app.add_subcommand("check-convex", "Is the field Choquet convex?");
  common(chk, true);
  chk->add_option("--field", o.field, "Field: JSON array, JSON file or CSV column")->required();
  chk->add_option("--tol", o.tol, "Tolerance on |f - f^xx|");

  auto* key = app.add_subcommand("keyinterval", "Range of the integral of f over representing measures");
  common(key, true);
  key->add_option("--field", o.field, "Field: JSON array, JSON file or CSV column")->required();
  key->add_option("--point", o.point, "Point label (default: all points)");

  auto* bauer = app.add_subcommand("bauer", "Maximum of a convex-trace function on the boundary");
  common(bauer, true);
  bauer->add_option("--spec", o.spec, "Max-of-affine spec: JSON or file")->required();
  bauer->add_option("--plot", o.plot, "Write an SVG here");

  auto* multi = app.add_subcommand("multimax", "Common boundary maximizer of a family");
  common(multi, true);
  multi->add_option("--specs", o.specs, "Array of specs: JSON or file")->required();

  auto* exp = app.add_subcommand("expose", "Phi-function peaking only at a boundary point");
  common(exp, true);
  exp->add_option("--point", o.point, "Point label")->required();

  auto* generic = app.add_subcommand("generic", "Unique-maximizer frequency under random perturbation");
  common(generic, true);
  generic->add_option("--field", o.field, "Base field (default: zero)");
  generic->add_option("--trials", o.trials, "Number of trials");
  generic->add_option("--epsilon", o.epsilon, "Coefficient box half-width");
  generic->add_option("--tie-tol", o.tie_tol, "Tie tolerance for the maximizer");

  auto* plot = app.add_subcommand("plot", "SVG of the embedded points");
  common(plot, true);
  plot->add_flag("--boundary", o.boundary_overlay, "Highlight the Choquet boundary");
  plot->add_option("--set", o.set, "Highlight a set and its hull");
  plot->add_option("--axes", o.axes, "Basis rows to project on (at most 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    set_thread_count(o.threads);
    std::unique_ptr<lp::ScopedDump> dump_guard;
    if (!o.dump_lp.empty()) dump_guard = std::make_unique<lp::ScopedDump>(o.dump_lp);

    if (app.got_subcommand(gen)) return cmd_gen(o, out);
    const Loaded loaded = load(o, in);
    if (app.got_subcommand(boundary)) return cmd_boundary(o, loaded, out);
    if (app.got_subcommand(hull)) return cmd_hull(o, loaded, out);
    if (app.got_subcommand(sep)) return cmd_separate(o, loaded, out);
    if (app.got_subcommand(ext)) return cmd_extreme(o, loaded, out);
    if (app.got_subcommand(ky)) return cmd_kyfan(o, loaded, out);
    if (app.got_subcommand(cvx)) return cmd_convexify(o, loaded, out);
    if (app.got_subcommand(chk)) return cmd_check_convex(o, loaded, out);
    if (app.got_subcommand(key)) return cmd_keyinterval(o, loaded, out);
    if (app.got_subcommand(bauer)) return cmd_bauer(o, loaded, out);
    if (app.got_subcommand(multi)) return cmd_multimax(o, loaded, out);
    if (app.got_subcommand(exp)) return cmd_expose(o, loaded, out);
    if (app.got_subcommand(generic)) return cmd_generic(o, loaded, out);
    if (app.got_subcommand(plot)) return cmd_plot(o, loaded, out);
    err << "error: no subcommand\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: malformed JSON: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace choquet::cli
