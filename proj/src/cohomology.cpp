#include "toricdef/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <boost/pending/disjoint_sets.hpp>

namespace toricdef {

DegreeGraph gamma_graph(const Fan& fan, std::size_t i, const Weight& u, GraphFlavor flavor) {
  if (i >= fan.num_rays()) throw Error(ErrorCode::InvalidArgument, "ray index out of range");
  DegreeGraph graph{i, u, flavor, {}, {}, 0};
  for (std::size_t j = 0; j < fan.num_rays(); ++j) {
    if (j == i || pairing(fan.ray(j), u) >= 0) continue;
    if (flavor == GraphFlavor::Restricted && !fan.share_cone(i, j)) continue;
    graph.vertices.push_back(j);
  }
  const std::size_t n = graph.vertices.size();
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (std::size_t a = 0; a < n; ++a) sets.make_set(a);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (fan.share_cone(graph.vertices[a], graph.vertices[b])) {
        graph.edges.emplace_back(graph.vertices[a], graph.vertices[b]);
        sets.union_set(a, b);
      }
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t a = 0; a < n; ++a) roots.insert(sets.find_set(a));
  graph.components = roots.size();
  return graph;
}

std::size_t h1_dim_graph(const Fan& fan, std::size_t i, const Weight& u, GraphFlavor flavor) {
  if (pairing(fan.ray(i), u) != -1) return 0;
  const std::size_t components = gamma_graph(fan, i, u, flavor).components;
  return components > 0 ? components - 1 : 0;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    f(idx);
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t m = j; m < k; ++m) idx[m] = idx[m - 1] + 1;
  }
}

}  // namespace

CechSlice::CechSlice(const Fan& fan, const Weight& u, std::optional<std::size_t> divisor, std::size_t top_level,
                     CechOptions options)
    : degree_(u), divisor_(divisor) {
  if (fan.dim() > options.max_dim) {
    throw Error(ErrorCode::DimensionLimit, "Cech complex limited to fans of dimension <= " +
                                               std::to_string(options.max_dim));
  }
  if (divisor && *divisor >= fan.num_rays()) throw Error(ErrorCode::InvalidArgument, "divisor index out of range");
  // Per-ray test: chi^u is a section near ray j iff <v_j, u> >= -[j = i].
  std::vector<bool> ray_ok(fan.num_rays());
  for (std::size_t j = 0; j < fan.num_rays(); ++j) {
    const Integer bound = (divisor && *divisor == j) ? -1 : 0;
    ray_ok[j] = pairing(fan.ray(j), u) >= bound;
  }
  const auto& cones = fan.max_cones();
  levels_.resize(top_level + 1);
  for (std::size_t p = 0; p <= top_level; ++p) {
    for_each_subset(cones.size(), p + 1, [&](const std::vector<std::size_t>& subset) {
      std::vector<std::size_t> common = cones[subset[0]].ray_indices;
      for (std::size_t k = 1; k < subset.size() && !common.empty(); ++k) {
        std::vector<std::size_t> next;
        const auto& other = cones[subset[k]].ray_indices;
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(next));
        common.swap(next);
      }
      const bool active = std::all_of(common.begin(), common.end(), [&](std::size_t j) { return ray_ok[j]; });
      if (active) {
        index_[subset] = levels_[p].size();
        levels_[p].push_back(subset);
      }
    });
  }
}

std::optional<std::size_t> CechSlice::index(const std::vector<std::size_t>& cones) const {
  auto it = index_.find(cones);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RatMatrix CechSlice::boundary(std::size_t p) const {
  if (p >= top_level()) throw Error(ErrorCode::InvalidArgument, "boundary beyond the built levels");
  RatMatrix d = RatMatrix::Zero(static_cast<Eigen::Index>(dim(p + 1)), static_cast<Eigen::Index>(dim(p)));
  for (std::size_t row = 0; row < dim(p + 1); ++row) {
    const auto& simplex = levels_[p + 1][row];
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      std::vector<std::size_t> face;
      for (std::size_t m = 0; m < simplex.size(); ++m)
        if (m != k) face.push_back(simplex[m]);
      if (auto col = index(face)) {
        d(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(*col)) = (k % 2 == 0) ? 1 : -1;
      }
    }
  }
  return d;
}

std::size_t CechSlice::cohomology(std::size_t p) const {
  const std::size_t kernel = dim(p) - (dim(p) == 0 ? 0 : rank<Rational>(boundary(p)));
  const std::size_t image = (p == 0 || dim(p - 1) == 0) ? 0 : rank<Rational>(boundary(p - 1));
  return kernel - image;
}

std::size_t cech_h_dim(const Fan& fan, std::size_t i, const Weight& u, std::size_t p, CechOptions options) {
  if (p > 2) throw Error(ErrorCode::InvalidArgument, "cech_h_dim supports p in {0, 1, 2}");
  return CechSlice(fan, u, i, p + 1, options).cohomology(p);
}

RatVector BundleCochain::at(std::size_t a, std::size_t b, std::size_t num_divisors) const {
  auto it = values.find({a, b});
  if (it == values.end()) return RatVector::Zero(static_cast<Eigen::Index>(num_divisors));
  return it->second;
}

BundleCochain from_overlaps(const SurfaceFan& surface, const Weight& u, const std::vector<RatVector>& transitions) {
  const std::size_t l = surface.size();
  if (transitions.size() != l) throw Error(ErrorCode::InvalidArgument, "one transition per ray expected");
  RatVector total = RatVector::Zero(static_cast<Eigen::Index>(l));
  for (const auto& t : transitions) total += t;
  if (!is_zero(total)) throw Error(ErrorCode::NotACocycle, "transitions around the fan do not sum to zero");
  BundleCochain cochain{u, {}};
  for (std::size_t a = 0; a < l; ++a) {
    RatVector running = RatVector::Zero(static_cast<Eigen::Index>(l));
    for (std::size_t b = a + 1; b < l; ++b) {
      running += transitions[b];
      if (!is_zero(running)) cochain.values[{a, b}] = running;
    }
  }
  return cochain;
}

namespace {

// The cochain's block for divisor i, in the coordinates of C^1.
RatVector block_vector(const CechSlice& slice, const BundleCochain& cochain, std::size_t i) {
  RatVector c = RatVector::Zero(static_cast<Eigen::Index>(slice.dim(1)));
  for (const auto& [pair, value] : cochain.values) {
    if (value(static_cast<Eigen::Index>(i)) == 0) continue;
    auto idx = slice.index({pair.first, pair.second});
    if (!idx) {
      throw Error(ErrorCode::NotACocycle, "entry on cones (" + std::to_string(pair.first) + "," +
                                              std::to_string(pair.second) + ") for divisor " + std::to_string(i) +
                                              " is not a section");
    }
    c(static_cast<Eigen::Index>(*idx)) = value(static_cast<Eigen::Index>(i));
  }
  return c;
}

void check_keys(const Fan& fan, const BundleCochain& cochain) {
  for (const auto& [pair, value] : cochain.values) {
    if (pair.first >= pair.second || pair.second >= fan.max_cones().size()) {
      throw Error(ErrorCode::InvalidArgument, "cochain keys must be cone pairs a < b");
    }
    if (static_cast<std::size_t>(value.size()) != fan.num_rays()) {
      throw Error(ErrorCode::InvalidArgument, "cochain values need one coefficient per divisor");
    }
  }
}

}  // namespace

CoboundaryCertificate is_coboundary(const Fan& fan, const BundleCochain& cochain, CechOptions options) {
  check_keys(fan, cochain);
  const std::size_t l = fan.num_rays();
  const std::size_t cones = fan.max_cones().size();
  CoboundaryCertificate cert;
  cert.coboundary = true;
  cert.preimage.assign(cones, RatVector::Zero(static_cast<Eigen::Index>(l)));
  for (std::size_t i = 0; i < l; ++i) {
    const CechSlice slice(fan, cochain.degree, i, 2, options);
    const RatVector c = block_vector(slice, cochain, i);
    if (is_zero(c)) continue;
    if (!is_zero(RatVector(slice.boundary(1) * c))) {
      throw Error(ErrorCode::NotACocycle, "Cech differential is nonzero in divisor " + std::to_string(i));
    }
    const RatMatrix d0 = slice.boundary(0);
    if (auto x = solve(d0, c)) {
      for (std::size_t k = 0; k < slice.dim(0); ++k) {
        cert.preimage[slice.basis(0)[k][0]](static_cast<Eigen::Index>(i)) = (*x)(static_cast<Eigen::Index>(k));
      }
      continue;
    }
    auto phi = separating_functional(d0, c);
    cert.coboundary = false;
    cert.preimage.clear();
    cert.divisor = i;
    for (std::size_t k = 0; k < slice.dim(1); ++k) {
      const Rational& value = (*phi)(static_cast<Eigen::Index>(k));
      if (value != 0) cert.functional[{slice.basis(1)[k][0], slice.basis(1)[k][1]}] = value;
    }
    return cert;
  }
  return cert;
}

BundleCochain coboundary_of(const Fan& fan, const Weight& u, const std::vector<RatVector>& zero_cochain) {
  const std::size_t cones = fan.max_cones().size();
  if (zero_cochain.size() != cones) throw Error(ErrorCode::InvalidArgument, "one value per maximal cone expected");
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    const CechSlice slice(fan, u, i, 0, CechOptions{fan.dim()});
    for (std::size_t c = 0; c < cones; ++c) {
      if (zero_cochain[c](static_cast<Eigen::Index>(i)) != 0 && !slice.index({c})) {
        throw Error(ErrorCode::InvalidArgument, "0-cochain entry is not a section on its cone");
      }
    }
  }
  BundleCochain out{u, {}};
  for (std::size_t a = 0; a < cones; ++a) {
    for (std::size_t b = a + 1; b < cones; ++b) {
      RatVector diff = zero_cochain[b] - zero_cochain[a];
      if (!is_zero(diff)) out.values[{a, b}] = diff;
    }
  }
  return out;
}

std::size_t class_rank(const Fan& fan, const Weight& u, const std::vector<BundleCochain>& cocycles,
                       CechOptions options) {
  const std::size_t l = fan.num_rays();
  std::vector<CechSlice> slices;
  std::size_t rows = 0, d0_cols = 0;
  for (std::size_t i = 0; i < l; ++i) {
    slices.emplace_back(fan, u, i, 1, options);
    rows += slices.back().dim(1);
    d0_cols += slices.back().dim(0);
  }
  RatMatrix all = RatMatrix::Zero(static_cast<Eigen::Index>(rows),
                                  static_cast<Eigen::Index>(d0_cols + cocycles.size()));
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const auto& slice = slices[i];
    if (slice.dim(1) > 0 && slice.dim(0) > 0) {
      all.block(static_cast<Eigen::Index>(r0), static_cast<Eigen::Index>(c0), static_cast<Eigen::Index>(slice.dim(1)),
                static_cast<Eigen::Index>(slice.dim(0))) = slice.boundary(0);
    }
    for (std::size_t k = 0; k < cocycles.size(); ++k) {
      check_keys(fan, cocycles[k]);
      const RatVector c = block_vector(slice, cocycles[k], i);
      if (c.size() > 0) {
        all.block(static_cast<Eigen::Index>(r0), static_cast<Eigen::Index>(d0_cols + k), c.size(), 1) = c;
      }
    }
    r0 += slice.dim(1);
    c0 += slice.dim(0);
  }
  if (rows == 0) return 0;
  const std::size_t with = rank<Rational>(all);
  const std::size_t without = d0_cols == 0 ? 0 : rank<Rational>(RatMatrix(all.leftCols(static_cast<Eigen::Index>(d0_cols))));
  return with - without;
}

}  // namespace toricdef
