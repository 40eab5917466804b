// One-parameter deformations of toric surfaces from subdivision
// decompositions of the height-one slice, their Kodaira-Spencer classes and
// general fibers.
//
// Indexing follows the slice: rays are numbered 1..l starting at the first
// ray of positive height in counterclockwise order, index 0 is identified
// with l, and sigma_i is the cone spanned by rho_i and rho_{i+1}.

#ifndef TORICDEF_DEFORMATION_HPP
#define TORICDEF_DEFORMATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/cohomology.hpp"
#include "toricdef/lattice_fan.hpp"

namespace toricdef {

/// A closed rational interval; an empty end is infinite.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Interval point(const Rational& p) { return {p, p}; }
  bool is_point() const { return lo && hi && *lo == *hi; }
  bool is_lattice_point() const { return is_point() && is_integer(*lo); }
  Interval shifted(const Rational& c) const;
  bool operator==(const Interval&) const = default;
};

Interval minkowski_sum(const Interval& a, const Interval& b);
/// Every point of `a` is >= every point of `b`.
bool weakly_above(const Interval& a, const Interval& b);
std::string to_string(const Interval& interval);

struct Slice {
  SurfaceFan surface;
  Weight R;
  AdaptedBasis basis;
  std::size_t start = 0;  // surface index of rho_1
  std::size_t m = 0;      // m + 1 rays have positive height
  std::vector<Rational> breakpoints;  // b_1 > ... > b_{m+1}, b_j belongs to rho_j
  std::vector<Interval> segments;     // Delta^0 .. Delta^{m+1}
  std::vector<Integer> heights;       // <rho_i, R> for i = 1..l, stored at i - 1

  std::size_t size() const { return surface.size(); }
  /// Surface index of rho_i, i taken mod l.
  std::size_t surface_index(long i) const;
  /// <rho_i, R>, i taken mod l.
  const Integer& height(long i) const;
  /// rho_i in the adapted basis.
  LatticeVector adapted_ray(long i) const;
  /// True iff the breakpoint between Delta^{i-1} and Delta^i is a lattice point.
  bool lattice_breakpoint(std::size_t i) const { return height(static_cast<long>(i)) == 1; }
};

Slice compute_slice(const SurfaceFan& surface, const Weight& R);

struct Decomposition {
  Weight R;
  std::vector<int> a;            // a_0 .. a_{m+1}
  Integer lambda0 = 0;
  std::vector<Integer> lambda;   // lambda_0 .. lambda_{m+1}
  std::vector<Interval> tilde0;  // summands at 0
  std::vector<Interval> tildet;  // summands at t
  /// a_0 = a_{m+1} = +1, so that both families cover the line.
  bool covering = true;

  /// Convention outside 0..m+1: a_i = 1, lambda_i = 0; index l reads index 0.
  int a_at(long i, std::size_t l) const;
  Integer lambda_at(long i, std::size_t l) const;
};

/// Builds the decomposition for a sign tuple of length m + 2. Throws
/// NOT_ADMISSIBLE at a sign change over a non-lattice breakpoint.
Decomposition realize(const Slice& slice, const std::vector<int>& a, const Integer& lambda0 = 0);

/// Minkowski property, weak monotonicity and lattice summands.
bool check_decomposition(const Slice& slice, const Decomposition& d);

/// All admissible tuples with a_0 = a_{m+1} = +1 and lambda_0 = 0, in
/// lexicographic order of a.
std::vector<Decomposition> enumerate_decompositions(const Slice& slice);

/// x^r y^s (y - t)^q as (r, s, q).
using Monomial = std::array<Integer, 3>;

struct ChartCone {
  std::size_t index;  // i for sigma_i, 0..l-1
  Weight w1, w2;      // dual generators in the adapted basis
  Monomial z1, z2;
};

struct ChartData {
  std::vector<ChartCone> cones;
};

ChartData chart_generators(const Slice& slice, const Decomposition& d);
/// Ray indices i in 1..l-1 where Z_{i-1,1} = Z_{i,2}^{-1} fails.
std::vector<std::size_t> gluing_failures(const Slice& slice, const ChartData& chart);

/// c_x x y^{-1} d/dx + c_y d/dy in adapted coordinates.
struct TangentTerm {
  Rational cx = 0;
  Rational cy = 0;
  bool operator==(const TangentTerm&) const = default;
};

struct KSCocycle {
  /// d_{i-1,i} for i = 1..l, stored at i - 1.
  std::vector<TangentTerm> tangent;
  /// Transitions of the bundle form across rho_i (coefficients of
  /// chi^{-R} e_{D_k}, indexed by surface ray), stored at i - 1.
  std::vector<RatVector> bundle;
  /// 0-cochain on the cones sigma_i making bundle + its coboundary map to
  /// the tangent form exactly under the Euler map; stored at i.
  std::vector<RatVector> correction;
  /// The compatible bundle form as a Cech cochain on surface.fan().
  BundleCochain cochain;
};

KSCocycle ks_cocycle(const Slice& slice, const Decomposition& d);

/// Euler map of a transition vector: the adapted coordinates of
/// sum_k c_k rho_k.
TangentTerm euler_image(const Slice& slice, const RatVector& transition);
/// Transitions of the compatible bundle form, indexed like KSCocycle::bundle.
std::vector<RatVector> compatible_transitions(const Slice& slice, const KSCocycle& ks);

struct BasisElement {
  std::size_t i;
  Decomposition decomposition;
  KSCocycle cocycle;
};

struct KSBasis {
  std::vector<BasisElement> elements;
  std::size_t rank = 0;         // rank of the classes in the Cech H^1
  std::size_t t1_dim = 0;       // dim T^1(-R)
  bool all_nontrivial = false;  // no element is a coboundary
  bool certified() const { return all_nontrivial && rank == elements.size() && rank == t1_dim; }
};

/// pi(i) for 2 <= i <= m with <rho_i, R> = 1: lambda_0 = 0, a_j = 1 for j < i
/// and a_j = -1 for j >= i.
std::vector<int> pi_tuple(const Slice& slice, std::size_t i);
KSBasis ks_basis(const SurfaceFan& surface, const Weight& R);

struct GeneralFiber {
  SurfaceFan surface;  // rays in the adapted basis
  IsoClass iso;
};

/// Throws NONTRIVIAL_TAIL unless exactly one ray has negative height and
/// that height is -1.
GeneralFiber general_fiber(const Slice& slice, const Decomposition& d);

}  // namespace toricdef

#endif  // TORICDEF_DEFORMATION_HPP
