#pragma once

// Exact-rational polyhedral cones C = {v : l_i(v) >= 0} built from length
// functionals: H-representation with label-preserving row deduplication,
// extreme rays, facets, the full face lattice, and redundancy analysis for
// wrapped-connection constraints.
//
// Cones with undecorated spikes contain the lineality space L = the common
// kernel of all rows. Computations quotient by L first (the quotient cone is
// pointed), then report faces with ambient dimensions; a face of the quotient
// corresponds to face + L upstairs. Extreme-ray representatives are ambient
// vectors, exact only modulo L (exact on the nose when L = 0).
//
// Every feasibility decision is exact rational; floating point appears only
// in SVG layout.

#include "stripdef/geometry.hpp"
#include "stripdef/linalg.hpp"
#include "stripdef/surface.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stripdef {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One half-space row: a primitive functional plus every connection that
/// induced it (distinct connections can cut the same half-space).
struct ConeRow {
  QVec coeffs;
  std::vector<Beta> labels;
};

/// H-representation {v : coeffs_i . v >= 0 for all rows i}.
struct ConeHRep {
  int dim = 0;
  std::vector<ConeRow> rows;
};

/// Assemble an H-representation: zero functionals are dropped (vacuous),
/// positively proportional functionals merged into one row with all labels.
/// Throws DimensionMismatch when a functional has the wrong arity.
ConeHRep build_cone(int dim, const std::vector<LengthFunctional>& functionals);

/// The admissible-cone H-representation of a metric: one row per simple
/// connection class (empty when the surface has no connections).
ConeHRep admissible_cone(const DecoratedMetric& m);

/// Length functionals of the non-simple connection classes up to |wrap| <=
/// k_max, for redundancy analysis against the simple rows.
std::vector<LengthFunctional> wrapped_functionals(const DecoratedMetric& m,
                                                  int k_max);

struct ConeFace {
  std::vector<int> tight;  // rows vanishing identically on the face
  std::vector<int> verts;  // extreme rays contained in the face
  int dim = 0;             // dimension as a cone (lineality included)
};

struct ConeLattice {
  int ambient_dim = 0;
  int lineality_dim = 0;
  int cone_dim = 0;              // dimension of the cone as a convex set
  bool properly_convex = false;  // closure contains no line
  std::vector<ConeRow> rows;     // the defining rows (copied from the input)
  std::vector<QVec> lineality_basis;
  std::vector<QVec> rays;        // primitive ambient ray representatives, sorted
  std::vector<ConeFace> faces;   // every face, sorted by (dim, verts)
  std::vector<int> facets;       // indices into faces with dim == cone_dim - 1

  /// Face counts by cone dimension 0 .. cone_dim.
  std::vector<int> cone_f_vector() const;
  /// Proper-face counts of the projectivized (lineality-quotiented) polytope
  /// by polytope dimension; (6, 9, 5) for a triangular prism.
  std::vector<int> polytope_f_vector() const;
};

inline constexpr std::size_t kConeWorkCap = 4'000'000;

/// Extreme rays by (quotient-dim - 1)-subset kernel enumeration, faces by
/// intersection closure of the facet vertex sets. Throws TooLarge when the
/// subset count exceeds work_cap.
ConeLattice face_lattice(const ConeHRep& h, std::size_t work_cap = kConeWorkCap);

/// Independent cross-check: rays and faces enumerated over ALL row subsets
/// (exponential; dim <= 5 and <= 16 rows, else TooLarge).
ConeLattice brute_force_oracle(const ConeHRep& h);

/// Canonical-form equality: same graded face poset, same ray representatives.
/// (Both enumerators canonicalize identically, so this certifies isomorphism.)
bool lattices_isomorphic(const ConeLattice& a, const ConeLattice& b);

enum class DominanceVerdict {
  Redundant,         // strictly positive on every extreme ray
  CoincidesWithRow,  // positively proportional to an existing row
  TightOnFace,       // implied; vanishes exactly on a proper face
  Violates,          // negative somewhere on the cone: NOT implied
};

struct DominanceEntry {
  Beta beta;
  DominanceVerdict verdict = DominanceVerdict::Redundant;
  int row = -1;      // coinciding row (CoincidesWithRow), else -1
  std::string note;
};

struct DominanceReport {
  std::vector<DominanceEntry> entries;
  bool all_implied = true;  // no entry with verdict Violates
};

/// Check that each extra constraint is implied by (or coincides with) the
/// rows of h on the cone itself. Report-based: never throws on violations.
DominanceReport dominance_check(const ConeHRep& h,
                                const std::vector<LengthFunctional>& extra,
                                std::size_t work_cap = kConeWorkCap);

/// Schlegel-style SVG of the projectivized polytope (properly convex,
/// polytope dimension <= 3). ray_labels may be empty (indices used) or give
/// one label per extreme ray.
std::string polytope_svg(const ConeLattice& lat,
                         const std::vector<std::string>& ray_labels = {});

}  // namespace stripdef
