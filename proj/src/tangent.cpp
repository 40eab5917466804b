#include "toricdef/tangent.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <random>
#include <set>

namespace toricdef {

const char* to_string(T1Method method) {
  switch (method) {
    case T1Method::Graph: return "graph";
    case T1Method::Cech: return "cech";
    case T1Method::Surface: return "surface";
  }
  return "unknown";
}

const char* to_string(Rigidity verdict) {
  switch (verdict) {
    case Rigidity::Rigid: return "RIGID";
    case Rigidity::NonRigid: return "NON_RIGID";
    case Rigidity::InconclusiveRigidInBox: return "INCONCLUSIVE_RIGID_IN_BOX";
  }
  return "UNKNOWN";
}

namespace {

T1Entry surface_entry(const SurfaceFan& surface, const Weight& u) {
  T1Entry entry{u, 0, {}};
  const long l = static_cast<long>(surface.size());
  for (long i = 0; i < l; ++i) {
    if (pairing(surface.ray(i), u) == -1 && pairing(surface.ray(i - 1), u) < 0 &&
        pairing(surface.ray(i + 1), u) < 0) {
      entry.per_ray[surface.source_index(static_cast<std::size_t>(i))] = 1;
      ++entry.dim;
    }
  }
  return entry;
}

}  // namespace

T1Entry t1_dim_degree(const Fan& fan, const Weight& u, T1Method method) {
  if (static_cast<std::size_t>(u.size()) != fan.dim()) throw Error(ErrorCode::InvalidArgument, "degree has wrong length");
  if (method == T1Method::Surface) {
    T1Entry entry = surface_entry(order_surface(fan), u);
#ifndef NDEBUG
    assert(entry.dim == t1_dim_degree(fan, u, T1Method::Graph).dim);
#endif
    return entry;
  }
  T1Entry entry{u, 0, {}};
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    const std::size_t c = method == T1Method::Graph ? h1_dim_graph(fan, i, u) : cech_h_dim(fan, i, u, 1);
    if (c > 0) {
      entry.per_ray[i] = c;
      entry.dim += c;
    }
  }
  return entry;
}

long default_box_radius(const Fan& fan) {
  Integer largest = 0;
  for (const auto& v : fan.rays())
    for (Eigen::Index k = 0; k < v.size(); ++k) largest = std::max(largest, Integer(abs(v(k))));
  return largest.convert_to<long>() * static_cast<long>(fan.dim());
}

std::vector<Weight> surface_candidates(const SurfaceFan& surface, long margin) {
  std::set<Weight, LexLess> out;
  const long l = static_cast<long>(surface.size());
  for (long i = 0; i < l; ++i) {
    const LatticeVector& v = surface.ray(i);
    auto [g, s, t] = extended_gcd(v(0), v(1));
    Weight base(2);
    base << -s, -t;  // <v, base> = -1
    Weight step(2);
    step << -v(1), v(0);  // <v, step> = 0, <next, step> = +1, <prev, step> = -1
    // <next, base + k step> <= -1  and  <prev, base + k step> <= -1
    const Integer upper = Integer(-1) - pairing(surface.ray(i + 1), base);
    const Integer lower = Integer(1) + pairing(surface.ray(i - 1), base);
    for (Integer k = lower - margin; k <= upper + margin; ++k) {
      Weight u = base + step * k;
      out.insert(u);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

std::vector<Weight> box_hyperplane_degrees(const Fan& fan, long radius, unsigned jobs) {
  const std::size_t n = fan.dim();
  const long side = 2 * radius + 1;
  long count = 1;
  for (std::size_t k = 0; k < n; ++k) count *= side;
  auto scan = [&](long begin, long end) {
    std::vector<Weight> found;
    for (long code = begin; code < end; ++code) {
      Weight u(static_cast<Eigen::Index>(n));
      long rest = code;
      for (std::size_t k = 0; k < n; ++k) {
        u(static_cast<Eigen::Index>(k)) = rest % side - radius;
        rest /= side;
      }
      bool on_hyperplane = false;
      for (const auto& v : fan.rays()) on_hyperplane = on_hyperplane || pairing(v, u) == -1;
      if (on_hyperplane && t1_dim_degree(fan, u).dim > 0) found.push_back(u);
    }
    return found;
  };
  jobs = std::max(1u, jobs);
  std::vector<std::future<std::vector<Weight>>> parts;
  const long chunk = (count + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const long begin = std::min(count, chunk * j);
    const long end = std::min(count, chunk * (j + 1));
    parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, scan, begin, end));
  }
  std::vector<Weight> out;
  for (auto& part : parts) {
    auto found = part.get();
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace

SupportRegion t1_support(const Fan& fan, std::optional<long> box, unsigned jobs) {
  SupportRegion region;
  if (fan.dim() == 2) {
    region.mode = SupportRegion::Mode::Exact;
    const SurfaceFan surface = order_surface(fan);
    for (const auto& u : surface_candidates(surface)) {
      if (surface_entry(surface, u).dim > 0) region.degrees.push_back(u);
    }
    return region;
  }
  if (!box) throw Error(ErrorCode::BoxRequired, "a box radius is required for fans of dimension >= 3");
  if (*box < 0) throw Error(ErrorCode::InvalidArgument, "box radius must be non-negative");
  region.mode = SupportRegion::Mode::Box;
  region.radius = box;
  region.degrees = box_hyperplane_degrees(fan, *box, jobs);
  return region;
}

T1Report t1_total(const Fan& fan, std::optional<long> box, T1Method method, unsigned jobs) {
  const SupportRegion region = t1_support(fan, box, jobs);
  T1Report report;
  report.method = method;
  report.box_radius = region.radius;
  for (const auto& u : region.degrees) {
    T1Entry entry = t1_dim_degree(fan, u, method);
    if (entry.dim == 0) continue;
    report.total += entry.dim;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool t2_surface_check(const Fan& fan, const std::vector<Weight>& sample) {
  if (fan.dim() != 2) throw Error(ErrorCode::NotDim2, "T^2 vanishing check is for surfaces");
  std::vector<Weight> degrees = t1_support(fan).degrees;
  degrees.insert(degrees.end(), sample.begin(), sample.end());
  for (const auto& u : degrees) {
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
      if (cech_h_dim(fan, i, u, 2) != 0) return false;
    }
  }
  return true;
}

std::vector<Weight> random_degrees(std::size_t dim, long radius, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coord(-radius, radius);
  std::vector<Weight> out;
  for (std::size_t k = 0; k < count; ++k) {
    Weight u(static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) u(static_cast<Eigen::Index>(j)) = coord(rng);
    out.push_back(u);
  }
  return out;
}

RigidityResult is_rigid(const Fan& fan, std::optional<long> box, unsigned jobs, bool doubling_recheck) {
  RigidityResult result;
  result.fano = fano_status(fan);
  result.cylinders = detect_a1_cylinder(fan);
  if (fan.dim() == 2) {
    const T1Report report = t1_total(fan);
    if (report.total == 0) {
      result.verdict = Rigidity::Rigid;
      result.reason = "exact surface enumeration: T1 = 0";
    } else {
      result.verdict = Rigidity::NonRigid;
      result.witness = report.entries.front().degree;
      result.reason = "exact surface enumeration: dim T1 = " + std::to_string(report.total);
    }
    return result;
  }
  if (result.fano != FanoStatus::Neither && result.cylinders.empty()) {
    result.verdict = Rigidity::Rigid;
    result.reason = std::string(to_string(result.fano)) + " without A1-cylinder witnesses";
    return result;
  }
  const long radius = box.value_or(default_box_radius(fan));
  result.box_radius = radius;
  auto search = [&](long r) { return t1_support(fan, r, jobs).degrees; };
  const auto found = search(radius);
  if (!found.empty()) {
    result.verdict = Rigidity::NonRigid;
    result.witness = found.front();
    result.reason = "nonzero T1 degree found in box";
  } else {
    result.verdict = Rigidity::InconclusiveRigidInBox;
    result.reason = "no nonzero T1 degree in box";
  }
  if (doubling_recheck) {
    const bool rigid_small = found.empty();
    result.doubled_box_agrees = rigid_small == search(2 * radius).empty();
  }
  return result;
}

}  // namespace toricdef
