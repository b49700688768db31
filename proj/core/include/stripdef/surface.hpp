#pragma once

// Combinatorial model of the four decorated-surface families:
//
//   Polygon            ideal n-gon, spikes on a disk boundary
//   PuncturedPolygon   ideal n-gon with one interior puncture
//   Crown              annulus: n spikes on one boundary, closed geodesic core
//   Moebius            Moebius strip with n boundary spikes, core geodesic
//
// Every surface carries n >= 1 spikes (ideal vertices), r of which are
// decorated with horoballs. Arcs and horoball connections are encoded as
// chords on an "anchor" sequence: each decorated spike contributes one
// anchor, each boundary side contributes one anchor, in cyclic order
//   [spike 0]? side 0 [spike 1]? side 1 ... (undecorated spikes absent).
// Chords between two spike anchors are horoball connections ("betas");
// all other chords are arcs. The disk families use plain cyclic chords;
// the punctured/crown/Moebius families use chords on the integer line with
// period m = (#anchors), which distinguishes the two windings around the
// puncture / hole and supports loop chords (a, a+m). The Moebius strip is
// handled on its orientation double cover (an annulus with two boundary
// lines); core-crossing chords connect the two lines.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stripdef {

enum class Family { Polygon, PuncturedPolygon, Crown, Moebius };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct InvalidTopology : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotDisjoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrapUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnchorInfo {
  bool is_spike = false;
  int index = 0;  // spike index or side index, 0-based
};

struct SurfaceSpec {
  Family family = Family::Polygon;
  int n = 0;
  std::vector<bool> decorations;

  int r() const;
  /// Deformation dimension: Polygon n+r-3, PuncturedPolygon n+r-1,
  /// Crown and Moebius n+r.
  int dim() const;
  /// Anchor count m = n + r.
  int m() const { return n + r(); }

  bool decorated(int spike) const { return decorations.at(spike); }

  /// Anchors in cyclic order; see file comment.
  std::vector<AnchorInfo> anchors() const;
  /// Anchor position of decorated spike i (throws if undecorated).
  int spike_anchor(int spike) const;
  /// Anchor position of side i (side i joins spike i to spike i+1 mod n).
  int side_anchor(int side) const;

  bool operator==(const SurfaceSpec&) const = default;
};

SurfaceSpec make_surface(Family family, int n, std::vector<bool> decorations);

// ---------------------------------------------------------------------------
// Arcs
// ---------------------------------------------------------------------------

enum class ArcKind : std::uint8_t {
  Chord,      // chord between two boundary anchors
  ToCore,     // crown only: from a boundary anchor to the core boundary
  CrossCore,  // moebius only: crosses the core (one-sided) geodesic
};

enum class ArcClass : std::uint8_t { Plain, WindA, WindB, CoreCrossing };

struct Arc {
  ArcKind kind = ArcKind::Chord;
  // Chord: anchor positions; Polygon: 0 <= a < b < m, non-adjacent cyclically.
  //   Line families: 0 <= a < m, a < b <= a+m, span b-a >= 2 (b-a == m is the
  //   loop chord around the puncture/hole based at anchor a).
  // ToCore: a = anchor position, b = -1.
  // CrossCore: unordered anchor pair stored with a >= b.
  int a = 0;
  int b = 0;

  auto operator<=>(const Arc&) const = default;
};

/// All permitted arcs, one canonical encoding per isotopy class.
std::vector<Arc> enumerate_arcs(const SurfaceSpec& s);

/// Isotopy-class tag used in serialization: WindA/WindB distinguish the two
/// windings between the same anchor pair (line families); Plain marks the
/// unique class; CoreCrossing marks Moebius core-crossing arcs.
ArcClass arc_class(const SurfaceSpec& s, const Arc& a);

std::string arc_to_string(const SurfaceSpec& s, const Arc& a);
Arc arc_from_string(const SurfaceSpec& s, const std::string& text);

// ---------------------------------------------------------------------------
// Horoball connections and loops ("betas")
// ---------------------------------------------------------------------------

enum class BetaKind : std::uint8_t { Connection, Loop };

struct Beta {
  BetaKind kind = BetaKind::Connection;
  bool crosscore = false;  // moebius: connection through the core
  // Connection endpoints: spike indices, canonical i <= j.
  // wrap: the connecting chord runs from spike i to the copy of spike j
  // shifted by `wrap` periods in the line model. Simple classes: i < j with
  // wrap in {0, -1} (the two windings), i == j with wrap == 1 (monogon).
  // Polygon connections always have wrap 0. Crosscore connections: wrap 0.
  int i = -1;
  int j = -1;
  int wrap = 0;

  auto operator<=>(const Beta&) const = default;
};

inline Beta make_loop() { return Beta{BetaKind::Loop, false, -1, -1, 0}; }

/// All simple horoball connections plus the loop (Crown/Moebius).
/// Counts: r(r-1)/2, r^2, r^2+1, r(r+1)/2 + r^2 + 1 per family.
std::vector<Beta> enumerate_simple_betas(const SurfaceSpec& s);

/// Simple connections isotopic to a boundary side (both flanking spikes
/// decorated); these are the connections eligible for marking.
std::vector<Beta> enumerate_boundary_betas(const SurfaceSpec& s);

/// Non-simple connections with |effective wrap| up to k_max (line families).
std::vector<Beta> enumerate_wrapped_betas(const SurfaceSpec& s, int k_max);

/// True for connections that split off a minimal one-spiked piece
/// (punctured monogon / one-spiked Moebius piece).
bool beta_is_maximal(const SurfaceSpec& s, const Beta& b);

/// True if the connection disconnects the surface (all Polygon/Punctured/
/// Crown connections; Moebius non-crosscore). Loops are not connections.
bool beta_is_separating(const SurfaceSpec& s, const Beta& b);

std::string beta_to_string(const SurfaceSpec& s, const Beta& b);
Beta beta_from_string(const SurfaceSpec& s, const std::string& text);

// ---------------------------------------------------------------------------
// Disjointness
// ---------------------------------------------------------------------------

/// True iff the two isotopy classes admit disjoint representatives.
/// Classes sharing only boundary anchors or spikes count as disjoint.
/// A class is NOT disjoint from itself (simplex distinctness is the
/// caller's concern; crossing(a,a) is false but arcs_disjoint(a,a) is
/// also false by convention).
bool arcs_disjoint(const Arc& a, const Arc& b, const SurfaceSpec& s);
bool arc_beta_disjoint(const Arc& a, const Beta& b, const SurfaceSpec& s);
bool betas_disjoint(const Beta& a, const Beta& b, const SurfaceSpec& s);

/// Strict crossing (shared endpoints do not count as crossing).
bool arcs_cross(const SurfaceSpec& s, const Arc& a, const Arc& b);
bool arc_beta_cross(const SurfaceSpec& s, const Arc& a, const Beta& b);
bool betas_cross(const SurfaceSpec& s, const Beta& a, const Beta& b);

// ---------------------------------------------------------------------------
// Low-level chord crossing tests (also used by the two-colored point models)
// ---------------------------------------------------------------------------

/// Chords on a circle: strict interleaving of endpoint pairs.
bool chords_cross_disk(int a1, int b1, int a2, int b2);
/// Chords on the integer line modulo `period` translates.
bool chords_cross_periodic(long a1, long b1, long a2, long b2, long period);
/// Arc descending from boundary position p to the core versus a chord (a,b).
bool core_arc_crosses_chord(long p, long a, long b, long period);

// ---------------------------------------------------------------------------
// Chord positions (shared by the spread machinery and the geometry oracle)
// ---------------------------------------------------------------------------

/// Connection as a chord in the anchor model: endpoints (first, second) with
/// first in [0, m). For the Moebius crosscore case the pair is the base
/// anchor positions (first >= second). Loop has no chord.
std::pair<int, int> beta_chord(const SurfaceSpec& s, const Beta& b);

/// Inverse of beta_chord for connections: classify a spike-to-spike chord.
Beta beta_from_chord(const SurfaceSpec& s, int a, int b);

}  // namespace stripdef
