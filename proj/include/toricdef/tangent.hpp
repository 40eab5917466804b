// Graded first-order deformations T^1 = H^1(Y, T_Y) of a smooth complete
// toric variety, assembled degree by degree from the boundary divisors, and
// the rigidity decisions built on top of it.

#ifndef TORICDEF_TANGENT_HPP
#define TORICDEF_TANGENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/cohomology.hpp"
#include "toricdef/lattice_fan.hpp"

namespace toricdef {

enum class T1Method { Graph, Cech, Surface };
const char* to_string(T1Method method);

struct T1Entry {
  Weight degree;
  std::size_t dim = 0;
  /// Ray index -> contribution; only nonzero contributions are stored.
  std::map<std::size_t, std::size_t> per_ray;
};

struct T1Report {
  std::vector<T1Entry> entries;  // sorted lexicographically by degree
  std::size_t total = 0;
  T1Method method = T1Method::Graph;
  std::optional<long> box_radius;  // empty for the exact surface enumeration
};

/// dim T^1(u) with its per-ray breakdown. The Surface method uses the
/// neighbour criterion and requires dim 2.
T1Entry t1_dim_degree(const Fan& fan, const Weight& u, T1Method method = T1Method::Graph);

struct SupportRegion {
  enum class Mode { Exact, Box };
  Mode mode = Mode::Exact;
  std::optional<long> radius;
  std::vector<Weight> degrees;  // sorted, each with nonzero T^1
};

/// max |ray coordinate| * dim.
long default_box_radius(const Fan& fan);

/// Candidate degrees on the lines <v_i, u> = -1 of a surface, each line
/// restricted to the integer interval cut out by the neighbour conditions,
/// widened by `margin` on both sides.
std::vector<Weight> surface_candidates(const SurfaceFan& surface, long margin = 0);

/// Nonzero degrees of T^1. Exact for dim 2 (the box is ignored); for dim >= 3
/// a box radius is required and the result is complete inside the box.
SupportRegion t1_support(const Fan& fan, std::optional<long> box = std::nullopt, unsigned jobs = 1);

T1Report t1_total(const Fan& fan, std::optional<long> box = std::nullopt, T1Method method = T1Method::Graph,
                  unsigned jobs = 1);

/// True iff H^2(O(D_i))(u) = 0 for every ray and every degree in the support
/// together with `sample` (Cech computation).
bool t2_surface_check(const Fan& fan, const std::vector<Weight>& sample);

/// Deterministic uniform sample of degrees in [-radius, radius]^dim.
std::vector<Weight> random_degrees(std::size_t dim, long radius, std::size_t count, unsigned seed);

enum class Rigidity { Rigid, NonRigid, InconclusiveRigidInBox };
const char* to_string(Rigidity verdict);

struct RigidityResult {
  Rigidity verdict = Rigidity::Rigid;
  FanoStatus fano = FanoStatus::Neither;
  std::vector<CylinderWitness> cylinders;
  std::optional<Weight> witness;
  std::optional<long> box_radius;
  std::string reason;
  /// Set when a doubling re-check was requested for a box-bounded verdict.
  std::optional<bool> doubled_box_agrees;
};

/// Surfaces: decided exactly. Higher dimensions: RIGID when weakly Fano
/// without A1-cylinder witnesses, otherwise box-bounded evidence.
RigidityResult is_rigid(const Fan& fan, std::optional<long> box = std::nullopt, unsigned jobs = 1,
                        bool doubling_recheck = false);

}  // namespace toricdef

#endif  // TORICDEF_TANGENT_HPP
