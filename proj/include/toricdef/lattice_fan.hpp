// Smooth complete fans: validation, counterclockwise ordering of surface
// fans, adapted bases for a degree, Fano classification, A1-cylinder
// witnesses and the self-intersection cycle that classifies surfaces.

#ifndef TORICDEF_LATTICE_FAN_HPP
#define TORICDEF_LATTICE_FAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/numeric.hpp"

namespace toricdef {

/// A maximal cone, stored as sorted indices into the parent fan's rays.
struct Cone {
  std::vector<std::size_t> ray_indices;

  bool contains(std::size_t ray) const;
  bool operator==(const Cone&) const = default;
};

struct ValidationIssue {
  ErrorCode code;
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ValidationReport;

/// A complete smooth fan. Only obtainable through validate_fan (or the
/// throwing wrapper Fan::create), so every instance satisfies the invariants.
class Fan {
 public:
  static Fan create(std::size_t dim, const std::vector<LatticeVector>& rays,
                    const std::optional<std::vector<std::vector<std::size_t>>>& cones = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& max_cones() const { return cones_; }

  /// True iff rays j and k (j != k) lie in a common cone.
  bool share_cone(std::size_t j, std::size_t k) const { return adjacent_[j * rays_.size() + k]; }

  /// Generators of a maximal cone as the columns of a unimodular matrix.
  IntMatrix generator_matrix(std::size_t cone) const;

 private:
  friend ValidationReport validate_fan(std::size_t, const std::vector<LatticeVector>&,
                                       const std::optional<std::vector<std::vector<std::size_t>>>&);
  Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> cones);

  std::size_t dim_;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
  std::vector<bool> adjacent_;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::optional<Fan> fan;

  bool ok() const { return issues.empty(); }
  bool has(ErrorCode code) const;
  std::string summary() const;
};

/// Checks primitivity, smoothness, the wall condition and the fan condition.
/// For dim 2 the cones may be omitted; they are then derived from the
/// counterclockwise order of the rays.
ValidationReport validate_fan(std::size_t dim, const std::vector<LatticeVector>& rays,
                              const std::optional<std::vector<std::vector<std::size_t>>>& cones);

/// A two-dimensional fan with rays in counterclockwise order starting at the
/// smallest angle measured from the positive first axis. Cone k is spanned
/// by rays k and k+1 (mod l), and det(ray k, ray k+1) = +1.
class SurfaceFan {
 public:
  const Fan& fan() const { return fan_; }
  std::size_t size() const { return fan_.num_rays(); }

  /// Cyclic access; any integer index is reduced mod l.
  const LatticeVector& ray(long i) const { return fan_.ray(wrap(i)); }
  std::size_t wrap(long i) const;

  /// Index of ray k in the fan this surface was ordered from.
  std::size_t source_index(std::size_t k) const { return source_index_.at(k); }

 private:
  friend SurfaceFan order_surface(const Fan& fan);
  SurfaceFan(Fan fan, std::vector<std::size_t> source_index)
      : fan_(std::move(fan)), source_index_(std::move(source_index)) {}

  Fan fan_;
  std::vector<std::size_t> source_index_;
};

SurfaceFan order_surface(const Fan& fan);

/// Change of basis adapted to a primitive degree R in rank two:
/// `on_n` acts on N, `on_m` on M (as column vectors), on_m * R^T = e_2,
/// det(on_n) = +1 and the pairing is preserved.
struct AdaptedBasis {
  IntMatrix on_n;
  IntMatrix on_m;

  LatticeVector to_adapted(const LatticeVector& v) const { return on_n * v; }
  LatticeVector from_adapted(const LatticeVector& v) const;
  Weight to_adapted(const Weight& u) const { return (on_m * u.transpose()).transpose(); }
  Weight from_adapted(const Weight& u) const;
};

AdaptedBasis adapted_basis(const Weight& degree);

enum class FanoStatus { Fano, WeaklyFano, Neither };
const char* to_string(FanoStatus status);

FanoStatus fano_status(const Fan& fan);

/// rho_j + rho_k = 2 rho_i with {i, j} and {i, k} both two-dimensional cones.
struct CylinderWitness {
  std::size_t i, j, k;
  bool operator==(const CylinderWitness&) const = default;
};

std::vector<CylinderWitness> detect_a1_cylinder(const Fan& fan);

/// Cyclic sequence a_i with rho_{i-1} + rho_{i+1} = a_i rho_i, in the
/// lexicographically smallest rotation/reflection.
struct IsoClass {
  std::vector<Integer> cycle;

  bool operator==(const IsoClass&) const = default;
  bool operator<(const IsoClass& other) const { return cycle < other.cycle; }
  std::string str() const;
};

/// Uncanonicalized cycle, aligned with the surface's ray order.
std::vector<Integer> self_intersection_cycle(const SurfaceFan& surface);
IsoClass canonical_cycle(const std::vector<Integer>& cycle);
IsoClass iso_class(const SurfaceFan& surface);

// ---------------------------------------------------------------------------
// Standard fans and constructions

Fan projective_plane();
Fan product_of_lines();
/// F_r with rays (1,0), (0,1), (-1,r), (0,-1).
Fan hirzebruch(long r);

/// Applies v -> m v to every ray; m must be unimodular.
Fan transform(const Fan& fan, const IntMatrix& m);

/// Star subdivision at the cone spanned by `face` (blow-up of the orbit
/// closure): adds the sum of the face generators as a new ray.
Fan star_subdivide(const Fan& fan, const std::vector<std::size_t>& face);

/// Surfaces obtained from P^2, P^1 x P^1 and F_r (r <= max_hirzebruch) by
/// iterated star subdivision, with at most `max_rays` rays, one per
/// isomorphism class, in breadth-first order.
std::vector<SurfaceFan> surface_corpus(std::size_t max_rays, long max_hirzebruch = 4);

}  // namespace toricdef

#endif  // TORICDEF_LATTICE_FAN_HPP
