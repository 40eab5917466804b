#include "toricdef/lattice_fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace toricdef {

bool Cone::contains(std::size_t ray) const {
  return std::binary_search(ray_indices.begin(), ray_indices.end(), ray);
}

bool ValidationReport::has(ErrorCode code) const {
  return std::any_of(issues.begin(), issues.end(),
                     [code](const ValidationIssue& issue) { return issue.code == code; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << to_string(issue.code) << " [";
    for (std::size_t k = 0; k < issue.indices.size(); ++k) {
      out << (k ? "," : "") << issue.indices[k];
    }
    out << "] " << issue.detail << "\n";
  }
  return out.str();
}

namespace {

// Upper half-plane (including the positive first axis) comes first.
int half_plane(const LatticeVector& v) {
  return (v(1) > 0 || (v(1) == 0 && v(0) > 0)) ? 0 : 1;
}

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a(0) * b(1) - a(1) * b(0); }

bool angle_less(const LatticeVector& a, const LatticeVector& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

std::vector<std::size_t> angular_order(const std::vector<LatticeVector>& rays) {
  std::vector<std::size_t> order(rays.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_less(rays[a], rays[b]); });
  return order;
}

IntMatrix columns(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx,
                  std::size_t dim) {
  IntMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = rays[idx[c]];
  return m;
}

}  // namespace

ValidationReport validate_fan(std::size_t dim, const std::vector<LatticeVector>& rays,
                              const std::optional<std::vector<std::vector<std::size_t>>>& cones_in) {
  ValidationReport report;
  auto issue = [&](ErrorCode code, std::vector<std::size_t> idx, std::string detail) {
    report.issues.push_back({code, std::move(idx), std::move(detail)});
  };

  if (dim == 0) {
    issue(ErrorCode::NotAFan, {}, "dimension must be positive");
    return report;
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (static_cast<std::size_t>(rays[i].size()) != dim) {
      issue(ErrorCode::NotAFan, {i}, "ray has wrong length");
      return report;
    }
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!is_primitive(rays[i])) issue(ErrorCode::NonPrimitiveRay, {i}, "ray is zero or not primitive");
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (rays[i] == rays[j]) issue(ErrorCode::NotAFan, {i, j}, "duplicate ray");
    }
  }

  std::vector<std::vector<std::size_t>> raw;
  if (cones_in) {
    raw = *cones_in;
  } else if (dim == 2) {
    // Consecutive rays in angular order; a gap of angle >= pi is a hole.
    const auto order = angular_order(rays);
    const std::size_t l = order.size();
    for (std::size_t k = 0; k < l && l >= 2; ++k) {
      const std::size_t a = order[k];
      const std::size_t b = order[(k + 1) % l];
      if (det2(rays[a], rays[b]) <= 0) {
        issue(ErrorCode::NotComplete, {a, b}, "angular gap of at least pi between consecutive rays");
      } else {
        raw.push_back({a, b});
      }
    }
  } else {
    issue(ErrorCode::NotAFan, {}, "cones are required when dim != 2");
    return report;
  }

  std::vector<Cone> cones;
  for (std::size_t c = 0; c < raw.size(); ++c) {
    auto idx = raw[c];
    std::sort(idx.begin(), idx.end());
    const bool distinct = std::adjacent_find(idx.begin(), idx.end()) == idx.end();
    const bool in_range = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return i < rays.size(); });
    if (idx.size() != dim || !distinct || !in_range) {
      issue(ErrorCode::NotAFan, {c}, "maximal cone must have dim distinct in-range rays");
      continue;
    }
    cones.push_back({idx});
  }
  if (!report.ok() && report.has(ErrorCode::NotAFan)) return report;
  if (cones.empty()) {
    issue(ErrorCode::NotComplete, {}, "fan has no maximal cones");
    return report;
  }
  for (std::size_t c = 0; c < cones.size(); ++c) {
    for (std::size_t d = c + 1; d < cones.size(); ++d) {
      if (cones[c] == cones[d]) issue(ErrorCode::NotAFan, {c, d}, "duplicate cone");
    }
  }
  std::vector<bool> used(rays.size(), false);
  for (const auto& cone : cones)
    for (auto i : cone.ray_indices) used[i] = true;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!used[i]) issue(ErrorCode::NotAFan, {i}, "ray lies in no maximal cone");
  }

  bool smooth = true;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const Integer det = determinant<Integer>(columns(rays, cones[c].ray_indices, dim));
    if (abs(det) != 1) {
      smooth = false;
      issue(ErrorCode::NotSmooth, cones[c].ray_indices, "|det| = " + abs(det).str());
    }
  }

  // Walls: every (dim-1)-face must be shared by exactly two maximal cones
  // whose remaining generators lie strictly on opposite sides.
  struct Side {
    std::size_t cone;
    std::size_t opposite;
  };
  std::map<std::vector<std::size_t>, std::vector<Side>> walls;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto& idx = cones[c].ray_indices;
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<std::size_t> wall;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != drop) wall.push_back(idx[k]);
      walls[wall].push_back({c, idx[drop]});
    }
  }
  bool walls_ok = true;
  for (const auto& [wall, sides] : walls) {
    if (sides.size() == 1) {
      walls_ok = false;
      issue(ErrorCode::NotComplete, wall, "wall lies in only one maximal cone");
    } else if (sides.size() > 2) {
      walls_ok = false;
      issue(ErrorCode::NotAFan, wall, "wall lies in more than two maximal cones");
    } else if (smooth) {
      auto side_sign = [&](std::size_t opposite) {
        std::vector<std::size_t> idx{opposite};
        idx.insert(idx.end(), wall.begin(), wall.end());
        return determinant<Integer>(columns(rays, idx, dim)).sign();
      };
      if (side_sign(sides[0].opposite) == side_sign(sides[1].opposite)) {
        walls_ok = false;
        issue(ErrorCode::NotAFan, wall, "cones on both sides of the wall overlap");
      }
    }
  }

  if (smooth && walls_ok) {
    // With consistent wall crossings the cones cover N_Q with constant
    // multiplicity; the interior point of each cone must lie in no other.
    std::vector<IntMatrix> inverses;
    for (const auto& cone : cones) inverses.push_back(unimodular_inverse(columns(rays, cone.ray_indices, dim)));
    for (std::size_t c = 0; c < cones.size(); ++c) {
      LatticeVector inner = LatticeVector::Zero(static_cast<Eigen::Index>(dim));
      for (auto i : cones[c].ray_indices) inner += rays[i];
      for (std::size_t d = 0; d < cones.size(); ++d) {
        if (d == c) continue;
        const LatticeVector coeff = inverses[d] * inner;
        bool inside = true;
        for (Eigen::Index k = 0; k < coeff.size(); ++k) inside = inside && coeff(k) >= 0;
        if (inside) {
          issue(ErrorCode::NotAFan, {c, d}, "cone interiors overlap");
        }
      }
    }
    if (dim == 2 && report.ok()) {
      // Full-turn check: consecutive rays in angular order bound a cone.
      const auto order = angular_order(rays);
      std::set<std::vector<std::size_t>> present;
      for (const auto& cone : cones) present.insert(cone.ray_indices);
      for (std::size_t k = 0; k < order.size(); ++k) {
        std::vector<std::size_t> pair{order[k], order[(k + 1) % order.size()]};
        std::sort(pair.begin(), pair.end());
        if (!present.count(pair) || det2(rays[order[k]], rays[order[(k + 1) % order.size()]]) <= 0) {
          issue(ErrorCode::NotComplete, pair, "rays do not wind exactly once");
          break;
        }
      }
    }
  }

  if (report.ok()) report.fan = Fan(dim, rays, std::move(cones));
  return report;
}

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)), adjacent_(rays_.size() * rays_.size(), false) {
  const std::size_t l = rays_.size();
  for (const auto& cone : cones_) {
    for (auto j : cone.ray_indices)
      for (auto k : cone.ray_indices)
        if (j != k) adjacent_[j * l + k] = true;
  }
}

Fan Fan::create(std::size_t dim, const std::vector<LatticeVector>& rays,
                const std::optional<std::vector<std::vector<std::size_t>>>& cones) {
  auto report = validate_fan(dim, rays, cones);
  if (!report.ok()) throw Error(report.issues.front().code, report.summary());
  return std::move(*report.fan);
}

IntMatrix Fan::generator_matrix(std::size_t cone) const {
  return columns(rays_, cones_.at(cone).ray_indices, dim_);
}

std::size_t SurfaceFan::wrap(long i) const {
  const long l = static_cast<long>(size());
  return static_cast<std::size_t>(((i % l) + l) % l);
}

SurfaceFan order_surface(const Fan& fan) {
  if (fan.dim() != 2) throw Error(ErrorCode::NotDim2, "surface ordering needs a two-dimensional fan");
  const auto order = angular_order(fan.rays());
  std::vector<LatticeVector> rays;
  for (auto i : order) rays.push_back(fan.ray(i));
  const std::size_t l = rays.size();
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t k = 0; k < l; ++k) {
    if (det2(rays[k], rays[(k + 1) % l]) != 1) {
      throw Error(ErrorCode::NotComplete, "consecutive rays do not form a unimodular cone");
    }
    cones.push_back({k, (k + 1) % l});
  }
  if (l < 3) throw Error(ErrorCode::NotComplete, "a complete surface fan needs at least three rays");
  return SurfaceFan(Fan::create(2, rays, cones), order);
}

LatticeVector AdaptedBasis::from_adapted(const LatticeVector& v) const { return unimodular_inverse(on_n) * v; }

Weight AdaptedBasis::from_adapted(const Weight& u) const {
  return (unimodular_inverse(on_m) * u.transpose()).transpose();
}

AdaptedBasis adapted_basis(const Weight& degree) {
  if (degree.size() != 2) throw Error(ErrorCode::NotDim2, "adapted bases are only defined in rank two");
  if (!is_primitive(degree)) throw Error(ErrorCode::NotPrimitive, "degree must be primitive");
  const Integer p = degree(0);
  const Integer q = degree(1);
  // Second row of on_n is R itself, so the second adapted coordinate of v
  // is <v, R>; the first row (x, y) solves x q - y p = 1.
  auto [g, s, t] = extended_gcd(q, p);
  IntMatrix on_n(2, 2);
  on_n << s, -t, p, q;
  AdaptedBasis basis;
  basis.on_n = on_n;
  basis.on_m = unimodular_inverse(on_n).transpose();
  return basis;
}

const char* to_string(FanoStatus status) {
  switch (status) {
    case FanoStatus::Fano: return "FANO";
    case FanoStatus::WeaklyFano: return "WEAKLY_FANO";
    case FanoStatus::Neither: return "NEITHER";
  }
  return "UNKNOWN";
}

FanoStatus fano_status(const Fan& fan) {
  bool strict = true;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    // u_sigma = (1,...,1) B^{-1} takes the value 1 on every generator.
    const IntMatrix inv = unimodular_inverse(fan.generator_matrix(c));
    const Weight u = Weight::Ones(static_cast<Eigen::Index>(fan.dim())) * inv;
    for (std::size_t j = 0; j < fan.num_rays(); ++j) {
      if (fan.max_cones()[c].contains(j)) continue;
      const Integer value = pairing(fan.ray(j), u);
      if (value > 1) return FanoStatus::Neither;
      if (value == 1) strict = false;
    }
  }
  return strict ? FanoStatus::Fano : FanoStatus::WeaklyFano;
}

std::vector<CylinderWitness> detect_a1_cylinder(const Fan& fan) {
  std::vector<CylinderWitness> out;
  const std::size_t l = fan.num_rays();
  for (std::size_t i = 0; i < l; ++i) {
    const LatticeVector twice = fan.ray(i) * Integer(2);
    for (std::size_t j = 0; j < l; ++j) {
      if (j == i || !fan.share_cone(i, j)) continue;
      for (std::size_t k = j + 1; k < l; ++k) {
        if (k == i || !fan.share_cone(i, k)) continue;
        if (fan.ray(j) + fan.ray(k) == twice) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

std::string IsoClass::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < cycle.size(); ++k) out << (k ? "," : "") << cycle[k];
  out << ")";
  return out.str();
}

std::vector<Integer> self_intersection_cycle(const SurfaceFan& surface) {
  std::vector<Integer> out;
  const long l = static_cast<long>(surface.size());
  for (long i = 0; i < l; ++i) {
    const LatticeVector sum = surface.ray(i - 1) + surface.ray(i + 1);
    const LatticeVector& v = surface.ray(i);
    // sum is a multiple of v because det(rho_{i-1}, rho_i) = det(rho_i, rho_{i+1}) = 1.
    const Eigen::Index k = v(0) != 0 ? 0 : 1;
    out.push_back(sum(k) / v(k));
  }
  return out;
}

IsoClass canonical_cycle(const std::vector<Integer>& cycle) {
  std::vector<Integer> best;
  const std::size_t l = cycle.size();
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t start = 0; start < l; ++start) {
      std::vector<Integer> candidate(l);
      for (std::size_t k = 0; k < l; ++k) {
        candidate[k] = reflect ? cycle[(start + l - k) % l] : cycle[(start + k) % l];
      }
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return {best};
}

IsoClass iso_class(const SurfaceFan& surface) { return canonical_cycle(self_intersection_cycle(surface)); }

Fan projective_plane() {
  return Fan::create(2, {lattice_vector({1, 0}), lattice_vector({0, 1}), lattice_vector({-1, -1})});
}

Fan product_of_lines() {
  return Fan::create(2, {lattice_vector({1, 0}), lattice_vector({0, 1}), lattice_vector({-1, 0}),
                         lattice_vector({0, -1})});
}

Fan hirzebruch(long r) {
  return Fan::create(2, {lattice_vector({1, 0}), lattice_vector({0, 1}), lattice_vector({-1, r}),
                         lattice_vector({0, -1})});
}

Fan transform(const Fan& fan, const IntMatrix& m) {
  std::vector<LatticeVector> rays;
  for (const auto& v : fan.rays()) rays.push_back(m * v);
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& cone : fan.max_cones()) cones.push_back(cone.ray_indices);
  return Fan::create(fan.dim(), rays, cones);
}

Fan star_subdivide(const Fan& fan, const std::vector<std::size_t>& face_in) {
  auto face = face_in;
  std::sort(face.begin(), face.end());
  if (face.size() < 2) throw Error(ErrorCode::InvalidArgument, "star subdivision needs a face of dimension >= 2");
  LatticeVector w = LatticeVector::Zero(static_cast<Eigen::Index>(fan.dim()));
  for (auto i : face) w += fan.ray(i);
  std::vector<LatticeVector> rays = fan.rays();
  const std::size_t new_index = rays.size();
  rays.push_back(w);
  std::vector<std::vector<std::size_t>> cones;
  bool found = false;
  for (const auto& cone : fan.max_cones()) {
    const bool has_face = std::includes(cone.ray_indices.begin(), cone.ray_indices.end(), face.begin(), face.end());
    if (!has_face) {
      cones.push_back(cone.ray_indices);
      continue;
    }
    found = true;
    for (auto f : face) {
      std::vector<std::size_t> replaced;
      for (auto i : cone.ray_indices)
        if (i != f) replaced.push_back(i);
      replaced.push_back(new_index);
      cones.push_back(replaced);
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "face is not a cone of the fan");
  return Fan::create(fan.dim(), rays, cones);
}

std::vector<SurfaceFan> surface_corpus(std::size_t max_rays, long max_hirzebruch) {
  std::vector<SurfaceFan> out;
  std::set<IsoClass> seen;
  std::deque<SurfaceFan> queue;
  auto offer = [&](const Fan& fan) {
    auto surface = order_surface(fan);
    if (surface.size() > max_rays) return;
    if (seen.insert(iso_class(surface)).second) queue.push_back(surface);
  };
  offer(projective_plane());
  offer(product_of_lines());
  for (long r = 1; r <= max_hirzebruch; ++r) offer(hirzebruch(r));
  while (!queue.empty()) {
    SurfaceFan surface = queue.front();
    queue.pop_front();
    const std::size_t l = surface.size();
    if (l < max_rays) {
      for (std::size_t k = 0; k < l; ++k) offer(star_subdivide(surface.fan(), {k, (k + 1) % l}));
    }
    out.push_back(std::move(surface));
  }
  return out;
}

}  // namespace toricdef
