#pragma once

// Finite abstract simplicial complexes with exact invariants:
//   - construction from maximal faces or as clique complexes,
//   - joins, links, vertex deletions,
//   - integral homology (Betti numbers and torsion via Smith normal form),
//   - strong collapses (dominated-vertex removal) and elementary collapses
//     with a budgeted backtracking search for collapsibility,
//   - a certifier classifying a complex as empty / combinatorial sphere /
//     combinatorial ball (or "other"/inconclusive),
//   - arc complexes of the decorated surfaces and the two-colored point
//     models (disk / punctured disk / crown) used by the collapsibility
//     arguments.

#include <set>
#include <string>
#include <vector>

#include "stripdef/rational.hpp"
#include "stripdef/surface.hpp"

namespace stripdef {

using Face = std::vector<int>;  // strictly increasing vertex ids

class Complex {
 public:
  Complex() = default;

  /// Builds from a list of faces; keeps the inclusion-maximal ones.
  static Complex from_maximal(std::vector<Face> faces);

  /// Clique complex of a symmetric compatibility relation.
  static Complex clique(int num_vertices, const std::vector<std::vector<bool>>& compatible);

  const std::vector<Face>& maximal_faces() const { return maximal_; }
  bool empty() const { return maximal_.empty(); }
  int dim() const;  // -1 when empty
  bool pure() const;
  std::vector<int> vertices() const;
  bool contains(const Face& f) const;

  /// All nonempty faces, grouped by dimension (index = dimension).
  std::vector<std::vector<Face>> faces_by_dim() const;
  long face_count() const;

  Complex link(const Face& f) const;
  Complex without_vertex(int v) const;

  bool operator==(const Complex&) const = default;

 private:
  std::vector<Face> maximal_;  // sorted antichain
};

/// Join: every face of a unioned with every face of b; b's vertex ids are
/// shifted by `offset_b` (default: past a's largest id). Join with the empty
/// complex returns the other complex.
Complex join(const Complex& a, const Complex& b);

struct Homology {
  std::vector<long> betti;             // unreduced b_0..b_dim
  std::vector<std::vector<Z>> torsion; // torsion coefficients of H_k
};

Homology homology(const Complex& c);

/// Unreduced homology of the d-sphere: b_0 = 1 (= 2 when d = 0), b_d = 1,
/// no torsion.
bool has_sphere_homology(const Complex& c, int d);

/// Removes dominated vertices until none remain (the "strong collapse" core).
Complex strong_collapse(const Complex& c);
/// Same, but only vertices in `removable` may be removed.
Complex strong_collapse_among(const Complex& c, const std::set<int>& removable);

struct CollapseSearch {
  bool collapsible = false;
  bool budget_exhausted = false;
  long nodes = 0;
};

/// Decides whether the complex collapses to a point by elementary collapses,
/// using greedy collapsing plus backtracking, visiting at most `budget`
/// search nodes.
CollapseSearch collapses_to_point(const Complex& c, long budget);

enum class CertType { Empty, Sphere, Ball, Other };

struct Certificate {
  CertType type = CertType::Other;
  int dim = -1;
  bool inconclusive = false;  // true when only the budget stopped the search
  std::string detail;
};

std::string cert_to_string(const Certificate& c);

/// Classifies: Empty; Sphere(d) = connected combinatorial manifold without
/// boundary whose vertex links certify recursively and whose integral
/// homology is that of S^d; Ball(d) = combinatorial manifold with boundary
/// that collapses to a point. Anything else is Other, with `inconclusive`
/// set when a collapsibility search ran out of budget.
Certificate certify_type(const Complex& c, long budget = 1'000'000);

// ---------------------------------------------------------------------------
// Arc complexes and two-colored point models
// ---------------------------------------------------------------------------

/// Arc complex of the surface restricted to the arcs disjoint from every
/// connection in `avoid`: vertices are those arcs (in enumerate_arcs order,
/// compacted), faces are pairwise disjoint systems.
struct ArcComplex {
  Complex complex;
  std::vector<Arc> arcs;  // vertex id -> arc
};
ArcComplex arc_complex(const SurfaceSpec& s, const std::vector<Beta>& avoid = {});

/// Two-colored models: m marked points around a disk / punctured disk /
/// crown, colored red (true) or blue. Vertices are the chords with at least
/// one blue endpoint (line-model spans 2..m for the periodic families, with
/// span-m loop chords at blue points only); the crown model adds one
/// core-bound arc at every marked point. Faces are non-crossing systems.
struct ColoredModel {
  Complex complex;
  // chords (a, b) as in the line/disk model; core arcs encoded as (a, -1)
  std::vector<std::pair<int, int>> chords;
  std::vector<int> core_arc_vertices;  // vertex ids of core-bound arcs
};
ColoredModel colored_disk_model(const std::vector<bool>& red);
ColoredModel colored_punctured_model(const std::vector<bool>& red);
ColoredModel colored_crown_model(const std::vector<bool>& red);

}  // namespace stripdef
