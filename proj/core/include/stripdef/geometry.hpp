#pragma once

// Exact-rational realization of decorated metrics for the three orientable
// families, horoball-connection lengths, their differentials, and
// strip-deformation tangent vectors.
//
// Chart conventions (upper half-plane, boundary R u {oo}):
//
//   Polygon            spikes at pos[0] = 0 < pos[1] = 1 < pos[2] < ... <
//                      pos[n-2], last spike at infinity.  Free position
//                      coordinates: pos[2..n-2].
//   PuncturedPolygon   puncture at infinity with holonomy z -> z + 1,
//                      spikes at 0 = pos[0] < pos[1] < ... < pos[n-1] < 1.
//                      Free positions: pos[1..n-1].
//   Crown              core geodesic on the axis (0, oo), holonomy z -> q z
//                      with q = e^t > 1, spikes at 1 = pos[0] < pos[1] <
//                      ... < pos[n-1] < q.  Free coordinates: t and
//                      pos[1..n-1].
//
// Each decorated spike carries a horoball stored by its boundary size
// h = e^u: the Euclidean diameter for a finite spike, 1/height for the
// spike at infinity (horoball {y >= 1/h}).  Tangent coordinates are
// [dt,] dx(free positions), du(decorated spikes), in that order, so
// length functionals and strip vectors have exact rational entries;
// logarithms appear only in length VALUES, never in functionals.

#include "stripdef/linalg.hpp"
#include "stripdef/rational.hpp"
#include "stripdef/surface.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stripdef {

struct UndecoratedEndpoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotASimplex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Decorated boundary points and the rational Moebius action
// ---------------------------------------------------------------------------

/// A point of the boundary circle R u {oo} carrying a horoball of size h:
/// Euclidean diameter at a finite point, 1/height for the horoball at oo.
struct DecoratedPoint {
  bool infinite = false;
  Q x = 0;  // ignored when infinite
  Q h = 1;  // horoball size e^u, > 0
};

/// z -> (a z + b) / (c z + d), with det = ad - bc > 0 (orientation preserving).
struct MoebiusMap {
  Q a = 1, b = 0, c = 0, d = 1;
  Q det() const { return a * d - b * c; }
};

/// exp of the signed distance between the two horoballs, an exact rational:
/// (x1 - x2)^2 / (h1 h2) for finite points, 1 / (h_fin h_oo) with one point
/// at infinity.  Invariant under moebius_apply.  Throws std::invalid_argument
/// on equal base points.
Q lambda_exp(const DecoratedPoint& p1, const DecoratedPoint& p2);

DecoratedPoint moebius_apply(const MoebiusMap& g, const DecoratedPoint& p);

// ---------------------------------------------------------------------------
// Decorated metrics
// ---------------------------------------------------------------------------

struct DecoratedMetric {
  SurfaceSpec surface;
  std::vector<Q> pos;  // size n; Polygon: pos[n-1] unused (spike at infinity)
  std::vector<Q> h;    // size n; meaningful at decorated spikes, > 0 there
  Q q = 0;             // Crown only: holonomy multiplier e^t > 1

  /// True exactly for the last Polygon spike.
  bool spike_at_infinity(int spike) const;

  /// Number of tangent-chart coordinates; equals surface.dim().
  int coord_count() const;
  /// Coordinate index of dt (Crown), or -1.
  int t_index() const;
  /// Coordinate index of d pos[spike], or -1 when gauge-fixed.
  int pos_index(int spike) const;
  /// Coordinate index of du at a decorated spike, or -1 when undecorated.
  int u_index(int spike) const;
  /// Human-readable labels, 1-based spike numbering: "dt", "dx2", "du1", ...
  std::vector<std::string> coordinate_names() const;

  /// Checks family support, sizes, strict ordering, positivity.
  /// Throws UnsupportedFamily (Moebius) or std::invalid_argument.
  void validate() const;
};

/// Reproducible random chart point with rational coordinates.
/// Throws UnsupportedFamily for Moebius.
DecoratedMetric random_metric(const SurfaceSpec& s, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Lengths and their differentials
// ---------------------------------------------------------------------------

/// exp of the connection length, exact: for endpoints i, j with the j-end
/// translated by the wrap power of the holonomy,
///   PuncturedPolygon:  (pos[j] + w - pos[i])^2 / (h_i h_j)
///   Crown:             (pos[j] q^w - pos[i])^2 / (h_i h_j q^w)
/// (the translated horoball's size scales with the holonomy derivative).
/// The loop returns q.  Throws UndecoratedEndpoint / UnsupportedFamily.
Q length_exp(const DecoratedMetric& m, const Beta& beta);

/// log of length_exp: the hyperbolic length of the geodesic segment
/// subtended by the two horoballs (negative when they overlap); the loop
/// returns the core translation length t.
double horoconnection_length(const DecoratedMetric& m, const Beta& beta);

struct LengthFunctional {
  Beta beta;
  QVec row;  // exact differential in chart coordinates, length coord_count()
};

/// Exact differential of the connection length in chart coordinates.
/// du entries are -1 per incidence of the spike (-2 for a monogon).
LengthFunctional length_differential(const DecoratedMetric& m, const Beta& beta);

// ---------------------------------------------------------------------------
// Strip deformations
// ---------------------------------------------------------------------------

/// Tangent vector of the infinitesimal strip insertion along the arc:
/// every lift of the arc separates the universal cover; crossing a lift
/// adds the lift's unit generator (hyperbolic translation along the
/// perpendicular at the waist for a compact arc, unit-width parabolic
/// fixing the spike for a ray), signed so crossed lengths increase; the
/// result is re-gauge-fixed into the chart.  `waist` in (0,1) places the
/// perpendicular's inner foot at the affine parameter between the ideal
/// feet of a compact chord (1/2 = perpendicular through the apex);
/// ray and to-core arcs use their canonical normalization.
/// Throws UnsupportedFamily (Moebius), std::invalid_argument (waist).
QVec strip_vector(const DecoratedMetric& m, const Arc& arc,
                  const Q& waist = Q(1) / 2);

/// Nonnegative combination of strip vectors over a simplex of pairwise
/// disjoint arcs, scaled to the primitive integer direction; verifies the
/// result is
/// weakly admissible (all simple-connection and loop differentials >= 0).
/// Throws NotASimplex on crossing/duplicate support, negative weights,
/// zero combination, or size mismatch.
QVec strip_map(const DecoratedMetric& m, const std::vector<Arc>& arcs,
               const std::vector<Q>& weights);

/// Sign of d l_beta (strip_vector(arc)): 0 when disjoint, +1 when the arc
/// crosses the connection (the geometric crossing oracle).
int geometric_crossing_sign(const DecoratedMetric& m, const Arc& arc,
                            const Beta& beta);

}  // namespace stripdef
