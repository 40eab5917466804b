// toricdef: command-line front end.
//
// Exit codes: 0 success, 1 invalid fan, 2 I/O, parse or usage error,
// 3 unsupported case (nontrivial tail).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toricdef/deformation.hpp"
#include "toricdef/fan_io.hpp"
#include "toricdef/reports.hpp"
#include "toricdef/svg.hpp"
#include "toricdef/tangent.hpp"

using namespace toricdef;

namespace {

constexpr int kOk = 0, kInvalidFan = 1, kUsage = 2, kUnsupported = 3;

struct InvalidFan {
  ValidationReport report;
};

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw ParseError("expected comma-separated integers, got \"" + text + "\"");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Weight parse_weight(const std::string& text, std::size_t dim) {
  const auto coords = parse_longs(text);
  if (coords.size() != dim) throw ParseError("weight \"" + text + "\" must have " + std::to_string(dim) + " entries");
  return weight(coords);
}

struct Loaded {
  std::string digest;
  Fan fan;
};

Loaded load(const std::string& path) {
  const std::string bytes = read_file(path);
  FanFile file = parse_fan_json(bytes);
  ValidationReport report = file.validate();
  if (!report.ok()) throw InvalidFan{std::move(report)};
  return {input_digest(bytes), std::move(*report.fan)};
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

void emit_error(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

struct Options {
  std::vector<std::string> args;
  unsigned jobs = 1;
  std::string path;
  std::string degree;
  bool all = false;
  std::optional<long> box;
  std::string method = "graph";
  bool recheck = false;
  bool list = false, basis = false, fiber = false;
  std::string tuple;
  long lambda0 = 0;
  std::string slice;
  std::string out;
};

int cmd_validate(const Options& o) {
  const std::string bytes = read_file(o.path);
  const ValidationReport report = parse_fan_json(bytes).validate();
  emit(make_report("validate", o.args, input_digest(bytes), to_json(report)));
  return report.ok() ? kOk : kInvalidFan;
}

T1Method parse_method(const std::string& name) {
  if (name == "graph") return T1Method::Graph;
  if (name == "cech") return T1Method::Cech;
  if (name == "surface") return T1Method::Surface;
  throw ParseError("unknown method " + name);
}

int cmd_t1(const Options& o) {
  const Loaded in = load(o.path);
  const T1Method method = parse_method(o.method);
  std::vector<std::string> warnings;
  Json result;
  if (!o.degree.empty()) {
    result["entry"] = to_json(t1_dim_degree(in.fan, parse_weight(o.degree, in.fan.dim()), method));
  } else {
    if (in.fan.dim() == 2 && o.box) warnings.push_back("box ignored: the surface enumeration is exact");
    const auto box = in.fan.dim() == 2 ? std::nullopt : o.box;
    const T1Report report = t1_total(in.fan, box, method, o.jobs);
    if (report.box_radius) {
      warnings.push_back("BOX mode: support is complete only inside radius " + std::to_string(*report.box_radius));
    }
    result = to_json(report);
  }
  emit(make_report("t1", o.args, in.digest, result, warnings));
  return kOk;
}

int cmd_rigidity(const Options& o) {
  const Loaded in = load(o.path);
  const RigidityResult r = is_rigid(in.fan, o.box, o.jobs, o.recheck);
  std::vector<std::string> warnings;
  if (r.verdict == Rigidity::InconclusiveRigidInBox) {
    warnings.push_back("BOX mode: no nonzero T1 degree inside radius " + std::to_string(*r.box_radius));
  }
  if (r.doubled_box_agrees && !*r.doubled_box_agrees) warnings.push_back("doubled box disagrees");
  emit(make_report("rigidity", o.args, in.digest, to_json(r), warnings));
  return kOk;
}

int cmd_deform(const Options& o) {
  const Loaded in = load(o.path);
  if (in.fan.dim() != 2) throw Error(ErrorCode::NotDim2, "deformations are constructed for surfaces only");
  const Weight R = parse_weight(o.degree, 2);
  const SurfaceFan surface = order_surface(in.fan);
  const Slice slice = compute_slice(surface, R);
  auto describe = [&](const Decomposition& d) {
    Json j;
    j["decomposition"] = to_json(slice, d);
    j["cocycle"] = to_json(slice, ks_cocycle(slice, d));
    if (o.fiber) j["fiber"] = to_json(general_fiber(slice, d));
    return j;
  };
  Json result;
  result["slice"] = to_json(slice);
  if (o.basis) {
    const KSBasis b = ks_basis(surface, R);
    Json elements = Json::array();
    for (const auto& e : b.elements) {
      Json j = describe(e.decomposition);
      j["i"] = e.i;
      elements.push_back(j);
    }
    result["basis"] = elements;
    result["rank"] = b.rank;
    result["t1_dim"] = b.t1_dim;
    result["certified"] = b.certified();
  } else if (!o.tuple.empty()) {
    std::vector<int> a;
    for (long s : parse_longs(o.tuple)) a.push_back(static_cast<int>(s));
    const Decomposition d = realize(slice, a, Integer(o.lambda0));
    Json j = describe(d);
    j["charts"] = to_json(chart_generators(slice, d));
    result["realized"] = j;
  } else {
    Json list = Json::array();
    for (const auto& d : enumerate_decompositions(slice)) list.push_back(describe(d));
    result["decompositions"] = list;
    result["count"] = list.size();
  }
  emit(make_report("deform", o.args, in.digest, result));
  return kOk;
}

int cmd_plot(const Options& o) {
  const Loaded in = load(o.path);
  if (in.fan.dim() != 2) throw Error(ErrorCode::NotDim2, "only surface fans can be plotted");
  std::string svg;
  if (!o.slice.empty()) {
    const Weight R = parse_weight(o.slice, 2);
    const SurfaceFan surface = order_surface(in.fan);
    const Slice slice = compute_slice(surface, R);
    std::optional<Decomposition> d;
    if (!o.tuple.empty()) {
      std::vector<int> a;
      for (long s : parse_longs(o.tuple)) a.push_back(static_cast<int>(s));
      d = realize(slice, a, Integer(o.lambda0));
    } else {
      const KSBasis b = ks_basis(surface, R);
      d = b.elements.empty() ? realize(slice, std::vector<int>(slice.m + 2, 1)) : b.elements.front().decomposition;
    }
    svg = slice_svg(slice, d);
  } else {
    std::optional<Weight> u;
    if (!o.degree.empty()) u = parse_weight(o.degree, 2);
    svg = fan_svg(in.fan, u);
  }
  write_file(o.out, svg);
  emit(make_report("plot", o.args, in.digest, Json{{"out", o.out}, {"bytes", svg.size()}}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded deformations of smooth complete toric varieties"};
  app.require_subcommand(1);
  Options o;
  for (int k = 1; k < argc; ++k) o.args.emplace_back(argv[k]);
  app.add_option("--jobs", o.jobs, "worker threads for box searches")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", kVersion);
  app.fallthrough();

  auto* validate = app.add_subcommand("validate", "check a fan file");
  validate->add_option("fan", o.path, "fan JSON file")->required();

  auto* t1 = app.add_subcommand("t1", "graded T^1");
  t1->add_option("fan", o.path, "fan JSON file")->required();
  auto* t1_degree = t1->add_option("--degree", o.degree, "single degree, e.g. --degree=0,-1");
  auto* t1_all = t1->add_flag("--all", o.all, "every degree with nonzero T^1");
  t1_degree->excludes(t1_all);
  t1->add_option("--box", o.box, "search radius for dim >= 3")->check(CLI::NonNegativeNumber);
  t1->add_option("--method", o.method, "graph, cech or surface")->check(CLI::IsMember({"graph", "cech", "surface"}));

  auto* rigidity = app.add_subcommand("rigidity", "rigidity verdict with evidence");
  rigidity->add_option("fan", o.path, "fan JSON file")->required();
  rigidity->add_option("--box", o.box, "search radius for dim >= 3")->check(CLI::NonNegativeNumber);
  rigidity->add_flag("--recheck", o.recheck, "repeat a box search at twice the radius");

  auto* deform = app.add_subcommand("deform", "decompositions and Kodaira-Spencer classes of a surface");
  deform->add_option("fan", o.path, "fan JSON file")->required();
  deform->add_option("--degree", o.degree, "primitive R, e.g. --degree=0,1")->required();
  auto* list = deform->add_flag("--list", o.list, "all admissible decompositions");
  auto* basis = deform->add_flag("--basis", o.basis, "the pi(i) basis of T^1(-R)");
  auto* tuple = deform->add_option("--tuple", o.tuple, "sign tuple, e.g. --tuple=1,-1,-1,1,1");
  list->excludes(basis)->excludes(tuple);
  basis->excludes(tuple);
  deform->add_option("--lambda0", o.lambda0, "shift for --tuple");
  deform->add_flag("--fiber", o.fiber, "append the general fiber");

  auto* plot = app.add_subcommand("plot", "SVG figure of a surface fan or slice");
  plot->add_option("fan", o.path, "fan JSON file")->required();
  auto* plot_degree = plot->add_option("--degree", o.degree, "draw <v,u> = -1");
  auto* plot_slice = plot->add_option("--slice", o.slice, "draw the slice at height one for R");
  plot_degree->excludes(plot_slice);
  plot->add_option("--tuple", o.tuple, "decomposition for --slice");
  plot->add_option("--lambda0", o.lambda0, "shift for --tuple");
  plot->add_option("--out", o.out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*t1) {
      if (o.degree.empty() && !o.all) throw ParseError("t1 needs --degree or --all");
      return cmd_t1(o);
    }
    if (*rigidity) return cmd_rigidity(o);
    if (*deform) return cmd_deform(o);
    if (*plot) return cmd_plot(o);
  } catch (const InvalidFan& e) {
    emit(make_report(app.get_subcommands().front()->get_name(), o.args, "", to_json(e.report)));
    emit_error(e.report.issues.empty() ? "INVALID_FAN" : to_string(e.report.issues.front().code), e.report.summary());
    return kInvalidFan;
  } catch (const IoError& e) {
    emit_error("IO_ERROR", e.what());
    return kUsage;
  } catch (const ParseError& e) {
    emit_error("PARSE_ERROR", e.what());
    return kUsage;
  } catch (const Error& e) {
    emit_error(to_string(e.code()), e.what());
    return e.code() == ErrorCode::NontrivialTail ? kUnsupported : kUsage;
  }
  return kUsage;
}
