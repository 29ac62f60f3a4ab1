#pragma once

#include "vpoly/geometry.hpp"
#include "vpoly/nerve.hpp"
#include "vpoly/winding.hpp"

#include <span>
#include <string>

namespace vpoly::svg {

/// Regions filled by winding weight (warm positive, cool negative), with the
/// cycle drawn on top when given.
std::string winding_chain(const WindingChain& chain, const PLCycle* cycle = nullptr);

/// Lines of a planar arrangement, clipped to a box around all crossings.
/// Throws Error(InvalidInput) unless every member is a line in R^2.
std::string arrangement(const SubspaceArrangement& x);

/// Outlines of planar polytopes (points and segments included).
std::string polygons(std::span<const ConvexPolytope> polys);

}  // namespace vpoly::svg
