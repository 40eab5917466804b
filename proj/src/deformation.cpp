#include "toricdef/deformation.hpp"

#include <set>
#include <stdexcept>

#include "toricdef/tangent.hpp"

namespace toricdef {

Interval Interval::shifted(const Rational& c) const {
  Interval out = *this;
  if (out.lo) *out.lo += c;
  if (out.hi) *out.hi += c;
  return out;
}

Interval minkowski_sum(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo && b.lo) out.lo = *a.lo + *b.lo;
  if (a.hi && b.hi) out.hi = *a.hi + *b.hi;
  return out;
}

bool weakly_above(const Interval& a, const Interval& b) { return a.lo && b.hi && *a.lo >= *b.hi; }

std::string to_string(const Interval& interval) {
  std::string lo = interval.lo ? to_string(*interval.lo) : "-inf";
  std::string hi = interval.hi ? to_string(*interval.hi) : "inf";
  return "[" + lo + ", " + hi + "]";
}

namespace {

std::size_t mod(long i, std::size_t l) {
  const long n = static_cast<long>(l);
  return static_cast<std::size_t>(((i % n) + n) % n);
}

}  // namespace

std::size_t Slice::surface_index(long i) const { return mod(static_cast<long>(start) + i - 1, size()); }

const Integer& Slice::height(long i) const { return heights[mod(i - 1, size())]; }

LatticeVector Slice::adapted_ray(long i) const { return basis.to_adapted(surface.ray(static_cast<long>(surface_index(i)))); }

Slice compute_slice(const SurfaceFan& surface, const Weight& R) {
  if (R.size() != 2 || !is_primitive(R)) throw Error(ErrorCode::NotPrimitive, "degree must be a primitive weight of length 2");
  const std::size_t l = surface.size();
  std::vector<Integer> h(l);
  for (std::size_t k = 0; k < l; ++k) h[k] = pairing(surface.ray(static_cast<long>(k)), R);
  std::size_t start = l;
  for (std::size_t k = 0; k < l; ++k) {
    if (h[k] > 0 && h[mod(static_cast<long>(k) - 1, l)] <= 0) start = k;
  }
  if (start == l) throw Error(ErrorCode::NotComplete, "no ray of positive height");
  Slice slice{surface, R, adapted_basis(R), start, 0, {}, {}, {}};
  for (std::size_t i = 1; i <= l; ++i) slice.heights.push_back(h[slice.surface_index(static_cast<long>(i))]);
  std::size_t positive = 0;
  while (positive < l && slice.heights[positive] > 0) ++positive;
  slice.m = positive - 1;
  for (std::size_t j = 1; j <= positive; ++j) {
    const LatticeVector v = slice.adapted_ray(static_cast<long>(j));
    slice.breakpoints.push_back(Rational(v(0), v(1)));
  }
  slice.segments.push_back({slice.breakpoints.front(), std::nullopt});
  for (std::size_t i = 1; i <= slice.m; ++i) slice.segments.push_back({slice.breakpoints[i], slice.breakpoints[i - 1]});
  slice.segments.push_back({std::nullopt, slice.breakpoints.back()});
  return slice;
}

int Decomposition::a_at(long i, std::size_t l) const {
  const std::size_t k = mod(i, l);
  return k < a.size() ? a[k] : 1;
}

Integer Decomposition::lambda_at(long i, std::size_t l) const {
  const std::size_t k = mod(i, l);
  return k < lambda.size() ? lambda[k] : Integer(0);
}

namespace {

// Index of the first sign change over a non-lattice breakpoint, if any.
std::optional<std::size_t> inadmissible_at(const Slice& slice, const std::vector<int>& a) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] != a[i + 1] && !slice.lattice_breakpoint(i + 1)) return i + 1;
  }
  return std::nullopt;
}

}  // namespace

Decomposition realize(const Slice& slice, const std::vector<int>& a, const Integer& lambda0) {
  const std::size_t n = slice.m + 2;
  if (a.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "sign tuple must have length " + std::to_string(n));
  }
  for (int s : a) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
  }
  if (auto j = inadmissible_at(slice, a)) {
    throw Error(ErrorCode::NotAdmissible, "sign change between a_" + std::to_string(*j - 1) + " and a_" +
                                              std::to_string(*j) + " at non-lattice breakpoint " +
                                              to_string(slice.breakpoints[*j - 1]));
  }
  Decomposition d;
  d.R = slice.R;
  d.a = a;
  d.lambda0 = lambda0;
  d.lambda.push_back(lambda0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (a[i] == a[i + 1]) {
      d.lambda.push_back(d.lambda[i]);
    } else {
      // the breakpoint is a lattice point here
      d.lambda.push_back(numerator(slice.breakpoints[i]) - d.lambda[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational lam(d.lambda[i]);
    const Interval& seg = slice.segments[i];
    Interval point = Interval::point(lam);
    // the unbounded ends keep their tail
    if (i == 0) point.hi.reset();
    if (i + 1 == n) point.lo.reset();
    const Interval moved = seg.shifted(-lam);
    d.tilde0.push_back(a[i] == 1 ? moved : point);
    d.tildet.push_back(a[i] == 1 ? point : moved);
  }
  d.covering = a.front() == 1 && a.back() == 1;
  if (!check_decomposition(slice, d)) throw std::logic_error("realized decomposition violates its invariants");
  return d;
}

bool check_decomposition(const Slice& slice, const Decomposition& d) {
  const std::size_t n = slice.m + 2;
  if (d.tilde0.size() != n || d.tildet.size() != n || d.lambda.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(minkowski_sum(d.tilde0[i], d.tildet[i]) == slice.segments[i])) return false;
    if (i + 1 < n && !(weakly_above(d.tilde0[i], d.tilde0[i + 1]) && weakly_above(d.tildet[i], d.tildet[i + 1])))
      return false;
    if (i >= 1 && i <= slice.m && !d.tilde0[i].is_lattice_point() && !d.tildet[i].is_lattice_point()) return false;
  }
  return true;
}

std::vector<Decomposition> enumerate_decompositions(const Slice& slice) {
  std::vector<Decomposition> out;
  const std::size_t m = slice.m;
  for (unsigned long code = 0; code < (1ul << m); ++code) {
    std::vector<int> a(m + 2, 1);
    for (std::size_t j = 0; j < m; ++j) a[j + 1] = (code >> (m - 1 - j)) & 1 ? 1 : -1;
    if (inadmissible_at(slice, a)) continue;
    out.push_back(realize(slice, a));
  }
  return out;
}

namespace {

Monomial chart_monomial(const Weight& w, int a, const Integer& lambda) {
  const Integer r = w(0), s = w(1);
  if (a == 1) return {r, s + lambda * r, -lambda * r};
  return {r, -lambda * r, s + lambda * r};
}

}  // namespace

ChartData chart_generators(const Slice& slice, const Decomposition& d) {
  const std::size_t l = slice.size();
  ChartData chart;
  for (std::size_t i = 0; i < l; ++i) {
    IntMatrix b(2, 2);
    b.col(0) = slice.adapted_ray(static_cast<long>(i));
    b.col(1) = slice.adapted_ray(static_cast<long>(i) + 1);
    const IntMatrix dual = unimodular_inverse(b);
    ChartCone cone{i, dual.row(0), dual.row(1), {}, {}};
    const int a = d.a_at(static_cast<long>(i), l);
    const Integer lambda = d.lambda_at(static_cast<long>(i), l);
    cone.z1 = chart_monomial(cone.w1, a, lambda);
    cone.z2 = chart_monomial(cone.w2, a, lambda);
    chart.cones.push_back(std::move(cone));
  }
  if (!gluing_failures(slice, chart).empty()) throw std::logic_error("chart generators do not glue");
  return chart;
}

std::vector<std::size_t> gluing_failures(const Slice& slice, const ChartData& chart) {
  std::vector<std::size_t> failures;
  const std::size_t l = slice.size();
  for (std::size_t i = 1; i < l; ++i) {
    if (i == slice.m + 2) continue;
    const Monomial& left = chart.cones[i - 1].z1;
    const Monomial& right = chart.cones[i].z2;
    if (left[0] != -right[0] || left[1] != -right[1] || left[2] != -right[2]) failures.push_back(i);
  }
  return failures;
}

TangentTerm euler_image(const Slice& slice, const RatVector& transition) {
  RatVector v = RatVector::Zero(2);
  for (std::size_t k = 0; k < slice.size(); ++k) {
    const Rational& c = transition(static_cast<Eigen::Index>(k));
    if (c != 0) v += to_rational(slice.surface.ray(static_cast<long>(k))) * c;
  }
  const RatVector w = to_rational(slice.basis.on_n) * v;
  return {w(0), w(1)};
}

KSCocycle ks_cocycle(const Slice& slice, const Decomposition& d) {
  const std::size_t l = slice.size();
  const auto zero = [&] { return RatVector::Zero(static_cast<Eigen::Index>(l)).eval(); };
  KSCocycle ks;
  for (std::size_t i = 1; i <= l; ++i) {
    const long k = static_cast<long>(i);
    const int prev = d.a_at(k - 1, l), next = d.a_at(k, l);
    TangentTerm term;
    term.cy = Rational(prev - next, 2);
    term.cx = Rational(prev * d.lambda_at(k - 1, l) - next * d.lambda_at(k, l));
    ks.tangent.push_back(term);
  }

  ks.bundle.assign(l, zero());
  RatVector sum = zero();
  for (std::size_t j = 1; j <= slice.m + 1; ++j) {
    if (d.a[j - 1] == d.a[j]) continue;
    const auto div = static_cast<Eigen::Index>(slice.surface_index(static_cast<long>(j)));
    ks.bundle[j - 1](div) += d.a[j - 1];
    sum(div) += d.a[j - 1];
  }
  ks.bundle[mod(static_cast<long>(slice.m) + 1, l)] -= sum;

  ks.correction.assign(l, zero());
  if (l > slice.m + 2) {
    // F = alpha_1 e_{m+2} + alpha_2 e_{m+3} with Euler image -d_{l-1,l},
    // placed on sigma_{m+2} .. sigma_{l-1}.
    const long first = static_cast<long>(slice.m) + 2;
    IntMatrix b(2, 2);
    b.col(0) = slice.adapted_ray(first);
    b.col(1) = slice.adapted_ray(first + 1);
    RatVector target(2);
    target << -ks.tangent[l - 1].cx, -ks.tangent[l - 1].cy;
    const RatVector alpha = to_rational(unimodular_inverse(b)) * target;
    RatVector f = zero();
    f(static_cast<Eigen::Index>(slice.surface_index(first))) += alpha(0);
    f(static_cast<Eigen::Index>(slice.surface_index(first + 1))) += alpha(1);
    for (std::size_t c = slice.m + 2; c < l; ++c) ks.correction[c] = f;
  }

  const std::vector<RatVector> compatible = compatible_transitions(slice, ks);
  std::vector<RatVector> by_surface(l);
  for (std::size_t i = 1; i <= l; ++i) by_surface[slice.surface_index(static_cast<long>(i))] = compatible[i - 1];
  ks.cochain = from_overlaps(slice.surface, -slice.R, by_surface);
  return ks;
}

std::vector<RatVector> compatible_transitions(const Slice& slice, const KSCocycle& ks) {
  const std::size_t l = slice.size();
  std::vector<RatVector> out;
  for (std::size_t i = 1; i <= l; ++i) {
    out.push_back(ks.bundle[i - 1] + ks.correction[mod(static_cast<long>(i), l)] - ks.correction[i - 1]);
  }
  return out;
}

std::vector<int> pi_tuple(const Slice& slice, std::size_t i) {
  std::vector<int> a(slice.m + 2, 1);
  for (std::size_t j = i; j < a.size(); ++j) a[j] = -1;
  return a;
}

KSBasis ks_basis(const SurfaceFan& surface, const Weight& R) {
  const Slice slice = compute_slice(surface, R);
  KSBasis basis;
  std::vector<BundleCochain> cochains;
  basis.all_nontrivial = true;
  for (std::size_t i = 2; i <= slice.m; ++i) {
    if (slice.height(static_cast<long>(i)) != 1) continue;
    Decomposition d = realize(slice, pi_tuple(slice, i));
    KSCocycle ks = ks_cocycle(slice, d);
    if (is_coboundary(surface.fan(), ks.cochain).coboundary) basis.all_nontrivial = false;
    cochains.push_back(ks.cochain);
    basis.elements.push_back({i, std::move(d), std::move(ks)});
  }
  basis.rank = class_rank(surface.fan(), -R, cochains);
  basis.t1_dim = t1_dim_degree(surface.fan(), -R).dim;
  return basis;
}

namespace {

std::set<Rational> finite_endpoints(const std::vector<Interval>& family) {
  std::set<Rational> out;
  for (const auto& piece : family) {
    if (piece.lo) out.insert(*piece.lo);
    if (piece.hi) out.insert(*piece.hi);
  }
  return out;
}

}  // namespace

GeneralFiber general_fiber(const Slice& slice, const Decomposition& d) {
  const std::size_t l = slice.size();
  std::optional<Rational> tail;
  std::size_t negative = 0;
  std::vector<LatticeVector> rays;
  for (std::size_t i = 1; i <= l; ++i) {
    const Integer& h = slice.height(static_cast<long>(i));
    const LatticeVector v = slice.adapted_ray(static_cast<long>(i));
    if (h == 0) rays.push_back(v);
    if (h < 0) {
      ++negative;
      if (h == -1) tail = Rational(v(0));
    }
  }
  if (negative != 1 || !tail) {
    throw Error(ErrorCode::NontrivialTail, "the slice at height -1 is not a single lattice point");
  }
  auto add = [&](const Rational& x, long y) {
    RatVector p(2);
    p << x, Rational(y);
    rays.push_back(primitive_on_ray(p));
  };
  for (const auto& b : finite_endpoints(d.tilde0)) add(b, 1);
  for (const auto& b : finite_endpoints(d.tildet)) add(b + *tail, -1);
  std::set<LatticeVector, LexLess> unique(rays.begin(), rays.end());
  const Fan fan = Fan::create(2, {unique.begin(), unique.end()});
  SurfaceFan surface = order_surface(fan);
  IsoClass iso = iso_class(surface);
  return {std::move(surface), std::move(iso)};
}

}  // namespace toricdef
