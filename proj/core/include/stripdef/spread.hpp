#pragma once

// Spread subsets of a decorated surface.
//
// A spread subset P is a nonempty, proper, closed subset whose connected
// components are simple closed geodesics (the core loop), horoball
// connections, or positive-area subsurfaces with geodesic boundary (with all
// enclosed spikes decorated), such that every component of the complement
// meets the boundary of the surface. The boundary consists of the sides
// (geodesics between consecutive spikes) and, for crowns, the core geodesic;
// the cusp of a punctured polygon and the one-sided core of a Moebius strip
// are interior.
//
// P is represented by its SUPPORT: the set of simple connections (and the
// loop) contained in it. The support determines P: solid pieces are the
// filled-in regions spanned by their boundary/interior connections.
//
// filled_subsurface computes the saturation of a connection set: crossing
// components merge, solid pieces complete to every simple connection they
// contain, and complement regions that fail to meet the boundary are
// absorbed. The result is either the support of a spread subset or "full"
// (the saturation swallowed the whole surface, which is excluded since P
// must be proper).

#include <vector>

#include "stripdef/surface.hpp"

namespace stripdef {

/// Sorted set of simple connections / loop contained in a spread subset.
using Support = std::vector<Beta>;

struct FilledSet {
  bool full = false;  // saturation reached the whole surface
  Support support;    // meaningful only when !full

  bool operator==(const FilledSet&) const = default;
};

/// Saturation of `betas`: the smallest filled set containing them.
/// Accepts simple connections, the loop, and wrapped connections (a wrapped
/// connection fills the whole collar between its endpoint spikes).
FilledSet filled_subsurface(const SurfaceSpec& s, const std::vector<Beta>& betas);

/// True iff `support` is exactly the support of a spread subset (nonempty,
/// closed under saturation, not full).
bool is_spread(const SurfaceSpec& s, const Support& support);

/// Supports of all spread subsets, sorted. (Saturations of all nonempty sets
/// of simple connections, with full sets discarded.)
std::vector<Support> enumerate_spread_subsets(const SurfaceSpec& s);

// ---------------------------------------------------------------------------
// Cutting
// ---------------------------------------------------------------------------

struct CutPiece {
  SurfaceSpec piece;
  int marked = 0;  // number of cut copies of the connection on this piece

  bool operator==(const CutPiece&) const = default;
};

/// Pieces obtained by cutting the surface along one simple connection or the
/// core loop. Spike counts follow the cut bookkeeping: a separating
/// connection yields two pieces sharing its two endpoint copies; a monogon
/// splits off the one-spiked piece of the same family; a Moebius crosscore
/// yields a single polygon carrying two marked copies; cutting a crown or
/// Moebius strip along the loop yields the punctured polygon whose arcs
/// mirror the loop-marked arc system. Throws WrapUnsupported on wrapped
/// connections and InvalidTopology when the cut is along a boundary side.
std::vector<CutPiece> cut_along(const SurfaceSpec& s, const Beta& b);

}  // namespace stripdef
