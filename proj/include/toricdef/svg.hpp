// Static SVG figures: a surface fan with an optional degree line, and the
// height-one slice with the two summand families of a decomposition.

#ifndef TORICDEF_SVG_HPP
#define TORICDEF_SVG_HPP

#include <optional>
#include <string>

#include "toricdef/deformation.hpp"
#include "toricdef/lattice_fan.hpp"

namespace toricdef {

/// Rays as arrows over the lattice; with a degree u, the dashed line
/// <v, u> = -1. The viewBox is the ray hull plus a 10% margin.
std::string fan_svg(const Fan& fan, const std::optional<Weight>& degree = std::nullopt);

/// The slice as one row; with a decomposition, two more rows for the
/// summands at 0 and at t.
std::string slice_svg(const Slice& slice, const std::optional<Decomposition>& d = std::nullopt);

}  // namespace toricdef

#endif  // TORICDEF_SVG_HPP
