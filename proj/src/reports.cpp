#include "toricdef/reports.hpp"

#include <cinttypes>
#include <cstdio>

#include "toricdef/fan_io.hpp"

namespace toricdef {

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, h);
  return buf;
}

namespace {

Json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return z.convert_to<long long>();
  return to_string(z);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected an integer");
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw ParseError("malformed rational \"" + j.get<std::string>() + "\"");
  }
}

template <typename V>
Json vector_json(const V& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(integer_json(v(k)));
  return out;
}

}  // namespace

Json to_json(const LatticeVector& v) { return vector_json(v); }
Json to_json(const Weight& u) { return vector_json(u); }

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  Weight u(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) u(static_cast<Eigen::Index>(k)) = integer_from_json(j[k]);
  return u;
}

Json to_json(const ValidationReport& report) {
  Json out;
  out["valid"] = report.ok();
  Json issues = Json::array();
  for (const auto& issue : report.issues) {
    Json indices = Json::array();
    for (auto i : issue.indices) indices.push_back(i + 1);
    issues.push_back({{"code", to_string(issue.code)}, {"indices", indices}, {"detail", issue.detail}});
  }
  out["issues"] = issues;
  if (report.fan) {
    const Fan& fan = *report.fan;
    out["dim"] = fan.dim();
    out["num_rays"] = fan.num_rays();
    out["num_cones"] = fan.max_cones().size();
    out["fano_status"] = to_string(fano_status(fan));
    if (fan.dim() == 2) out["iso_class"] = to_json(iso_class(order_surface(fan)));
  }
  return out;
}

Json to_json(const IsoClass& iso) {
  Json out = Json::array();
  for (const auto& a : iso.cycle) out.push_back(integer_json(a));
  return out;
}

Json to_json(const T1Entry& entry) {
  Json per_ray = Json::array();
  for (const auto& [ray, dim] : entry.per_ray) per_ray.push_back({{"ray", ray + 1}, {"dim", dim}});
  return {{"degree", to_json(entry.degree)}, {"dim", entry.dim}, {"per_ray", per_ray}};
}

Json to_json(const T1Report& report) {
  Json out;
  out["method"] = to_string(report.method);
  out["mode"] = report.box_radius ? "box" : "exact";
  out["box_radius"] = report.box_radius ? Json(*report.box_radius) : Json(nullptr);
  out["total"] = report.total;
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(to_json(e));
  out["entries"] = entries;
  return out;
}

T1Report t1_report_from_json(const Json& j) {
  T1Report report;
  try {
    const std::string method = j.at("method").get<std::string>();
    if (method == "graph") report.method = T1Method::Graph;
    else if (method == "cech") report.method = T1Method::Cech;
    else if (method == "surface") report.method = T1Method::Surface;
    else throw ParseError("unknown method " + method);
    if (!j.at("box_radius").is_null()) report.box_radius = j.at("box_radius").get<long>();
    report.total = j.at("total").get<std::size_t>();
    for (const auto& e : j.at("entries")) {
      T1Entry entry{weight_from_json(e.at("degree")), e.at("dim").get<std::size_t>(), {}};
      for (const auto& r : e.at("per_ray")) entry.per_ray[r.at("ray").get<std::size_t>() - 1] = r.at("dim").get<std::size_t>();
      report.entries.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed T1 report: ") + e.what());
  }
  return report;
}

Json to_json(const RigidityResult& result) {
  Json out;
  out["verdict"] = to_string(result.verdict);
  out["fano_status"] = to_string(result.fano);
  Json cylinders = Json::array();
  for (const auto& w : result.cylinders) cylinders.push_back({w.i + 1, w.j + 1, w.k + 1});
  out["cylinders"] = cylinders;
  out["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
  out["box_radius"] = result.box_radius ? Json(*result.box_radius) : Json(nullptr);
  out["reason"] = result.reason;
  if (result.doubled_box_agrees) out["doubled_box_agrees"] = *result.doubled_box_agrees;
  return out;
}

Json to_json(const Interval& interval) {
  return {{"lo", interval.lo ? Json(to_string(*interval.lo)) : Json(nullptr)},
          {"hi", interval.hi ? Json(to_string(*interval.hi)) : Json(nullptr)}};
}

Interval interval_from_json(const Json& j) {
  Interval out;
  if (!j.at("lo").is_null()) out.lo = rational_from_json(j.at("lo"));
  if (!j.at("hi").is_null()) out.hi = rational_from_json(j.at("hi"));
  return out;
}

namespace {

Json breakpoints_json(const Slice& slice) {
  Json out = Json::array();
  for (const auto& b : slice.breakpoints) out.push_back(to_string(b));
  return out;
}

Json intervals_json(const std::vector<Interval>& family) {
  Json out = Json::array();
  for (const auto& piece : family) out.push_back(to_json(piece));
  return out;
}

std::size_t fan_ray(const Slice& slice, long i) { return slice.surface.source_index(slice.surface_index(i)) + 1; }

}  // namespace

Json to_json(const Slice& slice) {
  Json out;
  out["R"] = to_json(slice.R);
  out["m"] = slice.m;
  out["breakpoints"] = breakpoints_json(slice);
  Json crossing = Json::array();
  for (std::size_t j = 1; j <= slice.m + 1; ++j) crossing.push_back(fan_ray(slice, static_cast<long>(j)));
  out["crossing_rays"] = crossing;
  Json adapted = Json::array();
  for (std::size_t i = 1; i <= slice.size(); ++i) adapted.push_back(to_json(slice.adapted_ray(static_cast<long>(i))));
  out["adapted_rays"] = adapted;
  out["segments"] = intervals_json(slice.segments);
  return out;
}

Json to_json(const Slice& slice, const Decomposition& d) {
  Json out;
  out["R"] = to_json(d.R);
  out["a"] = d.a;
  out["lambda0"] = integer_json(d.lambda0);
  Json lambda = Json::array();
  for (const auto& x : d.lambda) lambda.push_back(integer_json(x));
  out["lambda"] = lambda;
  out["breakpoints"] = breakpoints_json(slice);
  out["covering"] = d.covering;
  out["summands"] = {{"tilde0", intervals_json(d.tilde0)}, {"tildet", intervals_json(d.tildet)}};
  return out;
}

Decomposition decomposition_from_json(const Slice& slice, const Json& j) {
  try {
    if (!(weight_from_json(j.at("R")) == slice.R)) throw ParseError("decomposition is for a different degree");
    const auto a = j.at("a").get<std::vector<int>>();
    Decomposition d = realize(slice, a, integer_from_json(j.at("lambda0")));
    for (std::size_t i = 0; i < d.lambda.size(); ++i) {
      if (integer_from_json(j.at("lambda").at(i)) != d.lambda[i]) throw ParseError("lambda does not match the tuple");
    }
    const Json& summands = j.at("summands");
    for (std::size_t i = 0; i < d.tilde0.size(); ++i) {
      if (!(interval_from_json(summands.at("tilde0").at(i)) == d.tilde0[i]) ||
          !(interval_from_json(summands.at("tildet").at(i)) == d.tildet[i]))
        throw ParseError("summands do not match the tuple");
    }
    return d;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed decomposition: ") + e.what());
  }
}

Json to_json(const Slice& slice, const KSCocycle& ks) {
  Json tangent = Json::array();
  for (std::size_t i = 1; i <= ks.tangent.size(); ++i) {
    const TangentTerm& t = ks.tangent[i - 1];
    if (t.cx == 0 && t.cy == 0) continue;
    tangent.push_back({{"i", i}, {"ray", fan_ray(slice, static_cast<long>(i))}, {"cx", to_string(t.cx)},
                       {"cy", to_string(t.cy)}});
  }
  auto bundle_json = [&](const std::vector<RatVector>& transitions) {
    Json out = Json::array();
    for (std::size_t i = 1; i <= transitions.size(); ++i) {
      Json coefficients = Json::array();
      const RatVector& c = transitions[i - 1];
      for (Eigen::Index k = 0; k < c.size(); ++k) {
        if (c(k) == 0) continue;
        coefficients.push_back({{"divisor", slice.surface.source_index(static_cast<std::size_t>(k)) + 1},
                                {"coefficient", to_string(c(k))}});
      }
      if (!coefficients.empty()) out.push_back({{"i", i}, {"terms", coefficients}});
    }
    return out;
  };
  Json out;
  out["degree"] = to_json(Weight(-slice.R));
  out["tangent"] = tangent;
  out["bundle"] = bundle_json(ks.bundle);
  out["compatible_bundle"] = bundle_json(compatible_transitions(slice, ks));
  return out;
}

Json to_json(const ChartData& chart) {
  auto monomial = [](const Monomial& z) { return Json::array({integer_json(z[0]), integer_json(z[1]), integer_json(z[2])}); };
  Json out = Json::array();
  for (const auto& c : chart.cones) {
    out.push_back({{"i", c.index}, {"w1", to_json(c.w1)}, {"w2", to_json(c.w2)}, {"z1", monomial(c.z1)},
                   {"z2", monomial(c.z2)}});
  }
  return out;
}

Json to_json(const GeneralFiber& fiber) {
  Json rays = Json::array();
  for (std::size_t k = 0; k < fiber.surface.size(); ++k) rays.push_back(to_json(fiber.surface.ray(static_cast<long>(k))));
  return {{"rays", rays}, {"iso_class", to_json(fiber.iso)}};
}

Json make_report(const std::string& command, const std::vector<std::string>& args, const std::string& digest,
                 Json result, const std::vector<std::string>& warnings) {
  Json out;
  out["tool"] = "toricdef";
  out["version"] = kVersion;
  out["command"] = command;
  out["args"] = args;
  out["input_digest"] = digest;
  out["result"] = std::move(result);
  out["warnings"] = warnings;
  return out;
}

}  // namespace toricdef
