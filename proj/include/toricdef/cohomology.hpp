// Graded cohomology of the boundary line bundles O(D_i).
//
// Two independent routes: the connected-component count of the degree graph
// Gamma_i(u), and a brute-force Cech complex over the cover by maximal cones.
// The second route also decides whether a 1-cocycle of (+)_i O(D_i) is a
// coboundary, with an explicit certificate either way.

#ifndef TORICDEF_COHOMOLOGY_HPP
#define TORICDEF_COHOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toricdef/lattice_fan.hpp"
#include "toricdef/numeric.hpp"

namespace toricdef {

enum class GraphFlavor { Full, Restricted };

/// Gamma_i(u) (Full) or its subgraph on rays adjacent to ray i (Restricted).
struct DegreeGraph {
  std::size_t anchor;
  Weight degree;
  GraphFlavor flavor;
  std::vector<std::size_t> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t components;
};

DegreeGraph gamma_graph(const Fan& fan, std::size_t i, const Weight& u, GraphFlavor flavor);

/// dim H^1(Y, O(D_i))(u) by counting components of the degree graph.
std::size_t h1_dim_graph(const Fan& fan, std::size_t i, const Weight& u,
                         GraphFlavor flavor = GraphFlavor::Full);

struct CechOptions {
  /// Largest fan dimension for which the complex is built.
  std::size_t max_dim = 3;
};

/// The degree-u part of the Cech complex of O(D_i) (or O_Y when `divisor`
/// is empty) for the cover by maximal cones. Level p holds the
/// (p+1)-element subsets of cones whose intersection carries chi^u.
class CechSlice {
 public:
  CechSlice(const Fan& fan, const Weight& u, std::optional<std::size_t> divisor, std::size_t top_level,
            CechOptions options = {});

  const Weight& degree() const { return degree_; }
  std::optional<std::size_t> divisor() const { return divisor_; }
  std::size_t top_level() const { return levels_.size() - 1; }

  /// Dimension of C^p.
  std::size_t dim(std::size_t p) const { return levels_.at(p).size(); }
  /// The cone subsets spanning C^p, in lexicographic order.
  const std::vector<std::vector<std::size_t>>& basis(std::size_t p) const { return levels_.at(p); }
  /// Position of a cone subset in basis(p), if it carries a section.
  std::optional<std::size_t> index(const std::vector<std::size_t>& cones) const;

  /// d^p : C^p -> C^{p+1}; requires p < top_level().
  RatMatrix boundary(std::size_t p) const;

  /// dim H^p; requires p < top_level().
  std::size_t cohomology(std::size_t p) const;

 private:
  Weight degree_;
  std::optional<std::size_t> divisor_;
  std::vector<std::vector<std::vector<std::size_t>>> levels_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// dim H^p(Y, O(D_i))(u) via the Cech complex, p in {0, 1, 2}.
std::size_t cech_h_dim(const Fan& fan, std::size_t i, const Weight& u, std::size_t p,
                       CechOptions options = {});

/// A homogeneous 1-cochain of (+)_i O(D_i): for each pair of cone indices
/// a < b a coefficient vector over all divisors (missing pairs are zero).
/// The entry for (a, b) is the transition from cone a to cone b.
struct BundleCochain {
  Weight degree;
  std::map<std::pair<std::size_t, std::size_t>, RatVector> values;

  RatVector at(std::size_t a, std::size_t b, std::size_t num_divisors) const;
};

/// Expands transition values on the rays of a surface fan (value k is the
/// transition from cone k-1 to cone k across ray k) to a full 1-cochain.
/// The values must sum to zero.
BundleCochain from_overlaps(const SurfaceFan& surface, const Weight& u, const std::vector<RatVector>& transitions);

struct CoboundaryCertificate {
  bool coboundary = false;
  /// When a coboundary: one coefficient vector over divisors per maximal cone.
  std::vector<RatVector> preimage;
  /// Otherwise: a divisor block and a functional on its C^1 that vanishes on
  /// the image of d^0 but not on the cochain, keyed by cone pair.
  std::size_t divisor = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> functional;
};

/// Throws NOT_A_COCYCLE if the cochain has an entry where no section exists
/// or if its Cech differential is nonzero.
CoboundaryCertificate is_coboundary(const Fan& fan, const BundleCochain& cochain, CechOptions options = {});

/// (d^0 f) as a bundle cochain, for a 0-cochain given per maximal cone.
BundleCochain coboundary_of(const Fan& fan, const Weight& u, const std::vector<RatVector>& zero_cochain);

/// Dimension of the span of the given cocycles' classes in H^1.
std::size_t class_rank(const Fan& fan, const Weight& u, const std::vector<BundleCochain>& cocycles,
                       CechOptions options = {});

}  // namespace toricdef

#endif  // TORICDEF_COHOMOLOGY_HPP
