#include "stripdef/surface.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace stripdef {

std::string family_name(Family f) {
  switch (f) {
    case Family::Polygon: return "polygon";
    case Family::PuncturedPolygon: return "punctured";
    case Family::Crown: return "crown";
    case Family::Moebius: return "moebius";
  }
  throw std::logic_error("unreachable");
}

Family family_from_name(const std::string& s) {
  if (s == "polygon") return Family::Polygon;
  if (s == "punctured") return Family::PuncturedPolygon;
  if (s == "crown") return Family::Crown;
  if (s == "moebius") return Family::Moebius;
  throw std::invalid_argument("unknown family '" + s + "'");
}

int SurfaceSpec::r() const {
  return static_cast<int>(std::count(decorations.begin(), decorations.end(), true));
}

int SurfaceSpec::dim() const {
  switch (family) {
    case Family::Polygon: return n + r() - 3;
    case Family::PuncturedPolygon: return n + r() - 1;
    case Family::Crown:
    case Family::Moebius: return n + r();
  }
  throw std::logic_error("unreachable");
}

std::vector<AnchorInfo> SurfaceSpec::anchors() const {
  std::vector<AnchorInfo> out;
  out.reserve(static_cast<std::size_t>(m()));
  for (int i = 0; i < n; ++i) {
    if (decorations[static_cast<std::size_t>(i)]) out.push_back({true, i});
    out.push_back({false, i});
  }
  return out;
}

int SurfaceSpec::spike_anchor(int spike) const {
  if (!decorations.at(static_cast<std::size_t>(spike)))
    throw std::logic_error("spike_anchor: spike is undecorated");
  int pos = 0;
  for (int i = 0; i < spike; ++i) pos += decorations[static_cast<std::size_t>(i)] ? 2 : 1;
  return pos;
}

int SurfaceSpec::side_anchor(int side) const {
  int pos = 0;
  for (int i = 0; i < side; ++i) pos += decorations[static_cast<std::size_t>(i)] ? 2 : 1;
  return pos + (decorations.at(static_cast<std::size_t>(side)) ? 1 : 0);
}

SurfaceSpec make_surface(Family family, int n, std::vector<bool> decorations) {
  const int min_n = family == Family::Polygon ? 3 : 1;
  if (n < min_n)
    throw InvalidTopology(family_name(family) + " requires n >= " + std::to_string(min_n) +
                          ", got n = " + std::to_string(n));
  if (static_cast<int>(decorations.size()) != n)
    throw InvalidTopology("decoration vector has size " +
                          std::to_string(decorations.size()) + ", expected " +
                          std::to_string(n));
  SurfaceSpec s{family, n, std::move(decorations)};
  if (s.dim() < 0)
    throw InvalidTopology("deformation dimension would be negative");
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

bool uses_line_model(Family f) {
  return f == Family::PuncturedPolygon || f == Family::Crown || f == Family::Moebius;
}

}  // namespace

std::vector<Arc> enumerate_arcs(const SurfaceSpec& s) {
  const int m = s.m();
  const auto anch = s.anchors();
  const auto red = [&](int pos) { return anch[static_cast<std::size_t>(((pos % m) + m) % m)].is_spike; };

  std::vector<Arc> out;
  if (s.family == Family::Polygon) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 2; b < m; ++b) {
        if (a == 0 && b == m - 1) continue;  // cyclically adjacent
        if (red(a) && red(b)) continue;
        out.push_back({ArcKind::Chord, a, b});
      }
    return out;
  }
  // Line families: chords (a, b) with a in [0,m), span 2..m.
  for (int a = 0; a < m; ++a)
    for (int span = 2; span <= m; ++span) {
      const int b = a + span;
      if (span == m && red(a)) continue;  // loop chord at a spike = monogon beta
      if (span < m && red(a) && red(b)) continue;
      out.push_back({ArcKind::Chord, a, b});
    }
  if (s.family == Family::Crown)
    for (int a = 0; a < m; ++a) out.push_back({ArcKind::ToCore, a, -1});
  if (s.family == Family::Moebius)
    for (int p = 0; p < m; ++p)
      for (int q = 0; q <= p; ++q) {
        if (red(p) && red(q)) continue;
        out.push_back({ArcKind::CrossCore, p, q});
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Beta> enumerate_simple_betas(const SurfaceSpec& s) {
  std::vector<Beta> out;
  std::vector<int> dec;
  for (int i = 0; i < s.n; ++i)
    if (s.decorated(i)) dec.push_back(i);

  if (s.family == Family::Polygon) {
    for (std::size_t x = 0; x < dec.size(); ++x)
      for (std::size_t y = x + 1; y < dec.size(); ++y)
        out.push_back({BetaKind::Connection, false, dec[x], dec[y], 0});
    return out;
  }
  for (std::size_t x = 0; x < dec.size(); ++x) {
    out.push_back({BetaKind::Connection, false, dec[x], dec[x], 1});  // monogon
    for (std::size_t y = x + 1; y < dec.size(); ++y) {
      out.push_back({BetaKind::Connection, false, dec[x], dec[y], 0});
      out.push_back({BetaKind::Connection, false, dec[x], dec[y], -1});
    }
  }
  if (s.family == Family::Moebius)
    for (std::size_t x = 0; x < dec.size(); ++x)
      for (std::size_t y = x; y < dec.size(); ++y)
        out.push_back({BetaKind::Connection, true, dec[x], dec[y], 0});
  if (s.family == Family::Crown || s.family == Family::Moebius)
    out.push_back(make_loop());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Beta> enumerate_boundary_betas(const SurfaceSpec& s) {
  std::vector<Beta> out;
  for (int i = 0; i < s.n; ++i) {
    const int j = (i + 1) % s.n;
    if (!s.decorated(i) || !s.decorated(j)) continue;
    if (s.family == Family::Polygon) {
      if (i < j) out.push_back({BetaKind::Connection, false, i, j, 0});
      // side n-1 joins spike n-1 to spike 0: the unique class
      else out.push_back({BetaKind::Connection, false, j, i, 0});
      continue;
    }
    if (s.n == 1) {
      // one spike: the boundary side closes up into the monogon connection
      out.push_back({BetaKind::Connection, false, 0, 0, 1});
    } else if (i < j) {
      // direct chord (pos_i, pos_j): its bounded tile is exactly side i
      out.push_back({BetaKind::Connection, false, i, j, 0});
    } else {
      // wrap-around side: chord (pos_j=pos_0 shifted) — the class (0, n-1, -1)
      out.push_back({BetaKind::Connection, false, j, i, -1});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Beta> enumerate_wrapped_betas(const SurfaceSpec& s, int k_max) {
  std::vector<Beta> out;
  if (!uses_line_model(s.family) || s.family == Family::Moebius) return out;
  std::vector<int> dec;
  for (int i = 0; i < s.n; ++i)
    if (s.decorated(i)) dec.push_back(i);
  for (std::size_t x = 0; x < dec.size(); ++x) {
    for (int k = 2; k <= k_max + 1; ++k)
      out.push_back({BetaKind::Connection, false, dec[x], dec[x], k});
    for (std::size_t y = x + 1; y < dec.size(); ++y)
      for (int k = 1; k <= k_max; ++k) {
        out.push_back({BetaKind::Connection, false, dec[x], dec[y], k});
        out.push_back({BetaKind::Connection, false, dec[x], dec[y], -k - 1});
      }
  }
  return out;
}

bool beta_is_maximal(const SurfaceSpec& s, const Beta& b) {
  if (b.kind != BetaKind::Connection || b.crosscore) return false;
  if (s.family == Family::Polygon) return false;
  // Loop-shaped connection at one spike: splits off a minimal piece carrying
  // a single spike (once-punctured monogon / one-spiked crown or Moebius).
  return b.i == b.j && b.wrap == 1;
}

bool beta_is_separating(const SurfaceSpec& s, const Beta& b) {
  if (b.kind == BetaKind::Loop) return s.family == Family::Crown;
  return !b.crosscore;
}

// ---------------------------------------------------------------------------
// Chord coordinates
// ---------------------------------------------------------------------------

std::pair<int, int> beta_chord(const SurfaceSpec& s, const Beta& b) {
  if (b.kind == BetaKind::Loop) throw std::logic_error("beta_chord: loop has no chord");
  if (b.crosscore) return {std::max(s.spike_anchor(b.i), s.spike_anchor(b.j)),
                           std::min(s.spike_anchor(b.i), s.spike_anchor(b.j))};
  const int m = s.m();
  int x = s.spike_anchor(b.i);
  int y = s.spike_anchor(b.j) + b.wrap * m;
  if (s.family == Family::Polygon) {
    if (x > y) std::swap(x, y);
    return {x, y};
  }
  if (x > y) std::swap(x, y);
  // normalize first endpoint into [0, m)
  const int shift = ((x % m) + m) % m - x;
  return {x + shift, y + shift};
}

Beta beta_from_chord(const SurfaceSpec& s, int a, int b) {
  const int m = s.m();
  const auto anch = s.anchors();
  const int am = ((a % m) + m) % m;
  const int bm = ((b % m) + m) % m;
  if (!anch[static_cast<std::size_t>(am)].is_spike || !anch[static_cast<std::size_t>(bm)].is_spike)
    throw std::logic_error("beta_from_chord: endpoints must be spike anchors");
  const int si = anch[static_cast<std::size_t>(am)].index;
  const int sj = anch[static_cast<std::size_t>(bm)].index;
  if (s.family == Family::Polygon)
    return {BetaKind::Connection, false, std::min(si, sj), std::max(si, sj), 0};
  // Line model: wrap counts periods from the smaller spike index's anchor.
  int i = si, j = sj, xa = a, xb = b;
  if (i > j) { std::swap(i, j); std::swap(xa, xb); }
  const int wrap = ((xb - xa) - (s.spike_anchor(j) - s.spike_anchor(i))) / m;
  return {BetaKind::Connection, false, i, j, wrap};
}

// ---------------------------------------------------------------------------
// Crossing predicates
// ---------------------------------------------------------------------------

namespace {

// Strict linear interleaving of intervals (x1,y1), (x2,y2), each sorted.
bool interleave(long x1, long y1, long x2, long y2) {
  if (x1 > y1) std::swap(x1, y1);
  if (x2 > y2) std::swap(x2, y2);
  return (x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1);
}

// Disk chords on a circle of m anchors.
bool polygon_cross(int a1, int b1, int a2, int b2) {
  return interleave(a1, b1, a2, b2);
}

// Chords on the integer line with period T, all translates.
bool line_cross(long a1, long b1, long a2, long b2, long T) {
  const long window = (std::abs(b1 - a1) + std::abs(b2 - a2)) / T + 2;
  for (long t = -window; t <= window; ++t)
    if (interleave(a1, b1, a2 + t * T, b2 + t * T)) return true;
  return false;
}

// Crown anchor-to-core arc at position p versus a chord (a,b).
bool tocore_cross(long p, long a, long b, long T) {
  const long window = std::abs(b - a) / T + 2;
  for (long t = -window; t <= window; ++t) {
    const long x = p + t * T;
    if (a < x && x < b) return true;
  }
  return false;
}

// --- Moebius strip on the orientation double cover -------------------------
// Universal cover of the annulus double cover: two boundary lines. Points:
// (line, x). Anchor k lifts to (bot, 2k + 2mt) and (top, 2k + m + 2mt).
// The boundary circle order is: bottom line ascending, then top line
// descending; since infinity is never an endpoint this is a total order.
struct SPt {
  int line;  // 0 = bottom, 1 = top
  long x;
};

long strip_key_hi = 1L << 40;
long strip_order(const SPt& p) {
  return p.line == 0 ? p.x : strip_key_hi - p.x;
}

bool strip_interleave(const SPt& p1, const SPt& q1, const SPt& p2, const SPt& q2) {
  return interleave(strip_order(p1), strip_order(q1), strip_order(p2), strip_order(q2));
}

struct MobLift {
  SPt u, v;
};

// The (at most two) lifts of a Moebius object to the double cover, in base
// coordinates scaled by 2 (circumference 2m per boundary line).
std::vector<MobLift> mob_lifts(const SurfaceSpec& s, ArcKind kind, int a, int b) {
  const long m = s.m();
  if (kind == ArcKind::Chord) {
    return {{{0, 2L * a}, {0, 2L * b}}, {{1, 2L * a + m}, {1, 2L * b + m}}};
  }
  // CrossCore {a >= b}: canonical lift bottom(2a) -> top(2b+m); its glide
  // image is bottom(2b+2m) -> top(2a+m).
  return {{{0, 2L * a}, {1, 2L * b + m}}, {{0, 2L * b + 2 * m}, {1, 2L * a + m}}};
}

bool mob_cross(const SurfaceSpec& s, ArcKind k1, int a1, int b1, ArcKind k2, int a2,
               int b2) {
  const long period = 2L * s.m();
  const auto L1 = mob_lifts(s, k1, a1, b1);
  const auto L2 = mob_lifts(s, k2, a2, b2);
  for (const auto& l1 : L1)
    for (const auto& l2 : L2)
      for (long t = -3; t <= 3; ++t) {
        const MobLift sh{{l2.u.line, l2.u.x + t * period}, {l2.v.line, l2.v.x + t * period}};
        if (strip_interleave(l1.u, l1.v, sh.u, sh.v)) return true;
      }
  return false;
}

// Generic object: an arc or the chord form of a connection, as (kind, a, b).
struct Obj {
  ArcKind kind;
  int a, b;
  bool is_core_loop = false;
};

Obj obj_of_arc(const Arc& a) { return {a.kind, a.a, a.b, false}; }

Obj obj_of_beta(const SurfaceSpec& s, const Beta& b) {
  if (b.kind == BetaKind::Loop) return {ArcKind::Chord, 0, 0, true};
  if (b.crosscore) {
    const auto [p, q] = beta_chord(s, b);
    return {ArcKind::CrossCore, p, q, false};
  }
  const auto [x, y] = beta_chord(s, b);
  return {ArcKind::Chord, x, y, false};
}

bool objects_cross(const SurfaceSpec& s, const Obj& o1, const Obj& o2) {
  // Core loop: crossed exactly by objects that meet the core.
  if (o1.is_core_loop || o2.is_core_loop) {
    const Obj& other = o1.is_core_loop ? o2 : o1;
    if (o1.is_core_loop && o2.is_core_loop) return false;
    return other.kind == ArcKind::ToCore || other.kind == ArcKind::CrossCore;
  }
  if (s.family == Family::Polygon)
    return polygon_cross(o1.a, o1.b, o2.a, o2.b);
  if (s.family == Family::Moebius)
    return mob_cross(s, o1.kind, o1.a, o1.b, o2.kind, o2.a, o2.b);

  const long T = s.m();
  const bool c1 = o1.kind == ArcKind::ToCore;
  const bool c2 = o2.kind == ArcKind::ToCore;
  if (c1 && c2) return false;  // anchor-to-core arcs are pairwise disjoint
  if (c1) return tocore_cross(o1.a, o2.a, o2.b, T);
  if (c2) return tocore_cross(o2.a, o1.a, o1.b, T);
  return line_cross(o1.a, o1.b, o2.a, o2.b, T);
}

}  // namespace

bool chords_cross_disk(int a1, int b1, int a2, int b2) {
  return polygon_cross(a1, b1, a2, b2);
}

bool chords_cross_periodic(long a1, long b1, long a2, long b2, long period) {
  return line_cross(a1, b1, a2, b2, period);
}

bool core_arc_crosses_chord(long p, long a, long b, long period) {
  return tocore_cross(p, a, b, period);
}

bool arcs_cross(const SurfaceSpec& s, const Arc& a, const Arc& b) {
  return objects_cross(s, obj_of_arc(a), obj_of_arc(b));
}

bool arc_beta_cross(const SurfaceSpec& s, const Arc& a, const Beta& b) {
  return objects_cross(s, obj_of_arc(a), obj_of_beta(s, b));
}

bool betas_cross(const SurfaceSpec& s, const Beta& a, const Beta& b) {
  return objects_cross(s, obj_of_beta(s, a), obj_of_beta(s, b));
}

bool arcs_disjoint(const Arc& a, const Arc& b, const SurfaceSpec& s) {
  if (a == b) return false;  // convention: distinctness required
  return !arcs_cross(s, a, b);
}

bool arc_beta_disjoint(const Arc& a, const Beta& b, const SurfaceSpec& s) {
  return !arc_beta_cross(s, a, b);
}

bool betas_disjoint(const Beta& a, const Beta& b, const SurfaceSpec& s) {
  if (a == b) return false;
  return !betas_cross(s, a, b);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::string anchor_token(const SurfaceSpec& s, int pos) {
  const int m = s.m();
  const auto anch = s.anchors();
  const auto& a = anch[static_cast<std::size_t>(((pos % m) + m) % m)];
  return (a.is_spike ? "s" : "e") + std::to_string(a.index + 1);
}

int anchor_from_token(const SurfaceSpec& s, const std::string& tok) {
  if (tok.size() < 2) throw std::invalid_argument("bad anchor token '" + tok + "'");
  const int idx = std::stoi(tok.substr(1)) - 1;
  if (tok[0] == 's') return s.spike_anchor(idx);
  if (tok[0] == 'e') return s.side_anchor(idx);
  throw std::invalid_argument("bad anchor token '" + tok + "'");
}

std::string class_token(ArcClass c) {
  switch (c) {
    case ArcClass::Plain: return "plain";
    case ArcClass::WindA: return "windA";
    case ArcClass::WindB: return "windB";
    case ArcClass::CoreCrossing: return "coreCrossing";
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ArcClass arc_class(const SurfaceSpec& s, const Arc& a) {
  if (a.kind == ArcKind::ToCore) return ArcClass::Plain;
  if (a.kind == ArcKind::CrossCore) return ArcClass::CoreCrossing;
  if (s.family == Family::Polygon) return ArcClass::Plain;
  const int m = s.m();
  const int span = a.b - a.a;
  if (span == m) return ArcClass::Plain;  // loop chord: unique class
  // The partner class between the same anchor pair:
  const int other_span = m - span;
  if (other_span < 2) return ArcClass::Plain;  // partner would be a boundary edge
  // Tile rule: the winding whose bounded tile (anchors strictly inside the
  // chord) contains the smallest non-endpoint anchor position is WindA.
  const int lo = a.a % m, hi = a.b % m;
  int min_other = -1;
  for (int c = 0; c < m; ++c)
    if (c != lo && c != hi) { min_other = c; break; }
  for (long t = -1; t <= 1; ++t) {
    const long x = min_other + t * static_cast<long>(m);
    if (a.a < x && x < a.b) return ArcClass::WindA;
  }
  return ArcClass::WindB;
}

std::string arc_to_string(const SurfaceSpec& s, const Arc& a) {
  if (a.kind == ArcKind::ToCore)
    return "A:" + anchor_token(s, a.a) + "-core:plain";
  const std::string cls = class_token(arc_class(s, a));
  if (a.kind == ArcKind::CrossCore)
    return "A:" + anchor_token(s, a.a) + "-" + anchor_token(s, a.b) + ":" + cls;
  return "A:" + anchor_token(s, a.a) + "-" + anchor_token(s, a.b % s.m()) + ":" + cls;
}

Arc arc_from_string(const SurfaceSpec& s, const std::string& text) {
  for (const auto& a : enumerate_arcs(s))
    if (arc_to_string(s, a) == text) return a;
  throw std::invalid_argument("no arc of this surface matches '" + text + "'");
}

std::string beta_to_string(const SurfaceSpec& s, const Beta& b) {
  if (b.kind == BetaKind::Loop) return "B:loop";
  if (b.crosscore)
    return "B:" + std::to_string(std::min(b.i, b.j) + 1) + ">" +
           std::to_string(std::max(b.i, b.j) + 1) + ":cross";
  int from = b.i, to = b.j, w = b.wrap;
  if (b.i != b.j && b.wrap < 0) {
    from = b.j; to = b.i; w = -b.wrap - 1;
  }
  return "B:" + std::to_string(from + 1) + ">" + std::to_string(to + 1) + ":w" +
         std::to_string(w);
}

Beta beta_from_string(const SurfaceSpec& s, const std::string& text) {
  if (text == "B:loop") {
    if (s.family != Family::Crown && s.family != Family::Moebius)
      throw std::invalid_argument("this surface has no loop");
    return make_loop();
  }
  std::istringstream in(text);
  std::string head, mid, tail;
  if (!std::getline(in, head, ':') || !std::getline(in, mid, ':') ||
      !std::getline(in, tail) || head != "B")
    throw std::invalid_argument("bad connection literal '" + text + "'");
  const auto gt = mid.find('>');
  if (gt == std::string::npos)
    throw std::invalid_argument("bad connection literal '" + text + "'");
  const int from = std::stoi(mid.substr(0, gt)) - 1;
  const int to = std::stoi(mid.substr(gt + 1)) - 1;
  if (from < 0 || from >= s.n || to < 0 || to >= s.n ||
      !s.decorated(from) || !s.decorated(to))
    throw std::invalid_argument("connection endpoints must be decorated spikes");
  if (tail == "cross") {
    if (s.family != Family::Moebius)
      throw std::invalid_argument("core-crossing connections require a Moebius strip");
    return {BetaKind::Connection, true, std::min(from, to), std::max(from, to), 0};
  }
  if (tail.empty() || tail[0] != 'w')
    throw std::invalid_argument("bad connection literal '" + text + "'");
  const int w = std::stoi(tail.substr(1));
  if (s.family == Family::Polygon) {
    if (w != 0) throw std::invalid_argument("disk connections cannot wrap");
    return {BetaKind::Connection, false, std::min(from, to), std::max(from, to), 0};
  }
  if (from == to) {
    if (w < 1) throw std::invalid_argument("self-connection needs wrap >= 1");
    return {BetaKind::Connection, false, from, to, w};
  }
  if (from < to) return {BetaKind::Connection, false, from, to, w};
  return {BetaKind::Connection, false, to, from, -w - 1};
}

}  // namespace stripdef
