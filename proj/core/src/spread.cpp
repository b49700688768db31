#include "stripdef/spread.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace stripdef {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

Beta mk_sep(int i, int j, int wrap) { return Beta{BetaKind::Connection, false, i, j, wrap}; }
Beta mk_mono(int i) { return Beta{BetaKind::Connection, false, i, i, 1}; }
Beta mk_cc(int i, int j) {
  return Beta{BetaKind::Connection, true, std::min(i, j), std::max(i, j), 0};
}

// ===========================================================================
// Walk geometry
//
// Saturation traces the complement regions of the chord arrangement spanned
// by the current connection set. The polygon lives on a disk (plain cyclic
// positions). The punctured polygon and crown live on a line with one deck
// translation per period. The Moebius strip lives on the two boundary lines
// of its orientation double cover, in doubled coordinates; the deck map
// sigma swaps the lines and shifts by m, sigma^2 shifts by 2m along a line.
// Since sigma is a glide (orientation-reversing in the plane), face traces
// close only at even powers of sigma.
// ===========================================================================

struct Pt {
  int line = 0;
  long x = 0;
  auto operator<=>(const Pt&) const = default;
};

constexpr long kOrderHi = 1L << 40;

struct Geom {
  Family family = Family::Polygon;
  int m = 0;
  bool disk = false;
  bool twoline = false;
  long span = 0;  // one deck period along a line (doubled units on Moebius)
  std::vector<long> anchor_pos;
  std::vector<char> anchor_spike;

  explicit Geom(const SurfaceSpec& s) {
    family = s.family;
    m = s.m();
    disk = family == Family::Polygon;
    twoline = family == Family::Moebius;
    span = twoline ? 2L * m : m;
    const auto info = s.anchors();
    for (int k = 0; k < m; ++k) {
      anchor_pos.push_back(twoline ? 2L * k : k);
      anchor_spike.push_back(info[static_cast<std::size_t>(k)].is_spike ? 1 : 0);
    }
  }

  Pt sigma(Pt p, long k) const {
    if (disk || k == 0) return p;
    if (!twoline) return {0, p.x + k * span};
    return {static_cast<int>(((p.line + k) % 2 + 2) % 2), p.x + k * (span / 2)};
  }

  bool solve_sigma(Pt c, Pt v, long& k) const {
    if (disk) {
      k = 0;
      return c == v;
    }
    const long step = twoline ? span / 2 : span;
    if ((v.x - c.x) % step != 0) return false;
    k = (v.x - c.x) / step;
    if (twoline && ((c.line + k) % 2 + 2) % 2 != v.line) return false;
    return true;
  }
};

std::pair<Pt, Pt> chord_of(const SurfaceSpec& s, const Geom& g, const Beta& b) {
  const auto [x, y] = beta_chord(s, b);
  if (!g.twoline) return {Pt{0, static_cast<long>(x)}, Pt{0, static_cast<long>(y)}};
  if (b.crosscore)  // beta_chord gives (max, min) base anchors
    return {Pt{0, 2L * x}, Pt{1, 2L * y + g.m}};
  return {Pt{0, 2L * x}, Pt{0, 2L * y}};
}

long okey(const Pt& p) { return p.line == 0 ? p.x : kOrderHi - p.x; }

bool lifts_interleave(Pt a1, Pt b1, Pt a2, Pt b2) {
  long x1 = okey(a1), y1 = okey(b1), x2 = okey(a2), y2 = okey(b2);
  if (x1 > y1) std::swap(x1, y1);
  if (x2 > y2) std::swap(x2, y2);
  return (x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1);
}

// Deck offsets k at which chord(b1) crosses sigma^k(chord(b2)).
std::vector<long> cross_offsets(const SurfaceSpec& s, const Geom& g, const Beta& b1,
                                const Beta& b2) {
  const auto c1 = chord_of(s, g, b1);
  const auto c2 = chord_of(s, g, b2);
  std::vector<long> out;
  if (g.disk) {
    if (chords_cross_disk(static_cast<int>(c1.first.x), static_cast<int>(c1.second.x),
                          static_cast<int>(c2.first.x), static_cast<int>(c2.second.x)))
      out.push_back(0);
    return out;
  }
  for (long k = -8; k <= 8; ++k)
    if (lifts_interleave(c1.first, c1.second, g.sigma(c2.first, k), g.sigma(c2.second, k)))
      out.push_back(k);
  return out;
}

// Classify a completion point pair as a connection.
Beta pair_to_beta(const SurfaceSpec& s, const Geom& g, Pt P, Pt Q) {
  if (g.twoline) {
    if (P.line == 1 && Q.line == 1) {
      P = {0, P.x - g.m};
      Q = {0, Q.x - g.m};
    }
    if (P.line == 1) std::swap(P, Q);
    if (P.line != Q.line) {
      const auto anch = s.anchors();
      auto spike_at = [&](long plain) {
        const long r = ((plain % g.m) + g.m) % g.m;
        const auto& a = anch[static_cast<std::size_t>(r)];
        if (!a.is_spike) throw std::logic_error("completion endpoint is not a spike");
        return a.index;
      };
      return mk_cc(spike_at(P.x / 2), spike_at((Q.x - g.m) / 2));
    }
    if (P.x > Q.x) std::swap(P, Q);
    const long t = floor_div(P.x, g.span);
    const long a = (P.x - t * g.span) / 2, b = (Q.x - t * g.span) / 2;
    if (b - a > g.m) throw std::logic_error("completion pair exceeds one period");
    return beta_from_chord(s, static_cast<int>(a), static_cast<int>(b));
  }
  if (P.x > Q.x) std::swap(P, Q);
  if (g.disk) return beta_from_chord(s, static_cast<int>(P.x), static_cast<int>(Q.x));
  const long t = floor_div(P.x, g.span);
  const long a = P.x - t * g.span, b = Q.x - t * g.span;
  if (b - a > g.span) throw std::logic_error("completion pair exceeds one period");
  return beta_from_chord(s, static_cast<int>(a), static_cast<int>(b));
}

// Deck power placing the canonical chord of `nb` onto the point pair (P,Q).
long chord_offset(const SurfaceSpec& s, const Geom& g, const Beta& nb, const Pt& P,
                  const Pt& Q) {
  const auto [A, B] = chord_of(s, g, nb);
  long k = 0;
  if (g.solve_sigma(A, P, k) && g.sigma(B, k) == Q) return k;
  if (g.solve_sigma(A, Q, k) && g.sigma(B, k) == P) return k;
  throw std::logic_error("completion chord placement not found");
}

// ---------------------------------------------------------------------------
// Face walk
// ---------------------------------------------------------------------------

struct WEdge {
  bool gap = false;
  Pt a, b;
  int chord = -1;  // index into the chord table
};

struct DartRef {
  int edge = -1;
  bool fwd = true;
  long k = 0;
};

struct FaceRec {
  std::vector<DartRef> darts;
  long delta = 0;  // net deck power around the face
};

struct Walker {
  const Geom& g;
  const std::vector<WEdge>& edges;

  Pt tail(const DartRef& d) const {
    const auto& e = edges[static_cast<std::size_t>(d.edge)];
    return g.sigma(d.fwd ? e.a : e.b, d.k);
  }
  Pt head(const DartRef& d) const {
    const auto& e = edges[static_cast<std::size_t>(d.edge)];
    return g.sigma(d.fwd ? e.b : e.a, d.k);
  }

  std::vector<DartRef> incident(const Pt& v) const {
    std::vector<DartRef> out;
    for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
      const auto& e = edges[static_cast<std::size_t>(ei)];
      long k = 0;
      if (g.solve_sigma(e.a, v, k)) out.push_back({ei, true, k});
      if (g.solve_sigma(e.b, v, k)) out.push_back({ei, false, k});
    }
    return out;
  }

  // Counterclockwise rotation bucket at vertex v for a dart leaving v.
  std::pair<int, long> rot_key(const Pt& v, const DartRef& d) const {
    const Pt w = head(d);
    if (g.disk) return {0, ((w.x - v.x) % g.m + g.m) % g.m};
    if (!g.twoline) return {w.x > v.x ? 0 : 1, w.x};
    if (v.line == 0) {
      if (w.line == 0 && w.x > v.x) return {0, w.x};
      if (w.line == 1) return {1, -w.x};
      return {2, w.x};
    }
    // Top-line vertex: the surface lies below the line.
    if (edges[static_cast<std::size_t>(d.edge)].gap) return {w.x > v.x ? 0 : 1, 0};
    if (w.line == 1 && w.x < v.x) return {2, -w.x};
    if (w.line == 0) return {3, w.x};
    return {4, -w.x};
  }

  FaceRec trace(const DartRef& start, std::set<std::pair<int, bool>>& visited) const {
    FaceRec f;
    DartRef cur = start;
    const int cap = 32 * static_cast<int>(edges.size()) + 64;
    for (int step = 0;; ++step) {
      if (step > cap) throw std::logic_error("face trace failed to close");
      f.darts.push_back(cur);
      visited.insert({cur.edge, cur.fwd});
      const Pt v = head(cur);
      auto inc = incident(v);
      std::sort(inc.begin(), inc.end(), [&](const DartRef& p, const DartRef& q) {
        const auto kp = rot_key(v, p), kq = rot_key(v, q);
        if (kp != kq) return kp < kq;
        return std::tie(p.edge, p.fwd, p.k) < std::tie(q.edge, q.fwd, q.k);
      });
      int idx = -1;
      for (int i = 0; i < static_cast<int>(inc.size()); ++i)
        if (inc[static_cast<std::size_t>(i)].edge == cur.edge &&
            inc[static_cast<std::size_t>(i)].fwd == !cur.fwd &&
            inc[static_cast<std::size_t>(i)].k == cur.k) {
          idx = i;
          break;
        }
      if (idx < 0) throw std::logic_error("reverse dart not incident to head vertex");
      const DartRef next =
          inc[static_cast<std::size_t>((idx + 1) % static_cast<int>(inc.size()))];
      if (next.edge == start.edge && next.fwd == start.fwd) {
        const long j = next.k - start.k;
        if (!g.twoline || j % 2 == 0) {
          f.delta = j;
          return f;
        }
      }
      cur = next;
    }
  }
};

// ---------------------------------------------------------------------------
// Saturation driver
// ---------------------------------------------------------------------------

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x)
      x = p[static_cast<std::size_t>(x)] =
          p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<std::size_t>(b)] = a;
  }
};

FilledSet saturate(const SurfaceSpec& s, std::set<Beta> P, std::set<Beta> wound_seeds) {
  const Geom g(s);
  const Beta LOOP = make_loop();
  const auto bb = enumerate_boundary_betas(s);
  const std::set<Beta> boundary(bb.begin(), bb.end());

  // Persistent relative placements (deck powers) and forced-wound links
  // discovered by absorbing complement regions.
  std::set<std::tuple<Beta, Beta, long>> aligns;
  std::set<std::pair<Beta, Beta>> wound_links;

  for (int outer = 0; outer < 400; ++outer) {
    const std::vector<Beta> list(P.begin(), P.end());
    const int nb = static_cast<int>(list.size());
    std::map<Beta, int> idx;
    for (int i = 0; i < nb; ++i) idx[list[static_cast<std::size_t>(i)]] = i;

    DSU dsu(nb);
    std::vector<char> marked(static_cast<std::size_t>(nb), 0);
    for (int i = 0; i < nb; ++i)
      if (wound_seeds.count(list[static_cast<std::size_t>(i)]))
        marked[static_cast<std::size_t>(i)] = 1;

    // Crossings merge components; a pair crossing at two distinct deck
    // offsets wraps around the core/cusp.
    std::vector<std::vector<std::pair<int, long>>> adj(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) {
        const Beta& b1 = list[static_cast<std::size_t>(i)];
        const Beta& b2 = list[static_cast<std::size_t>(j)];
        if (b1.kind == BetaKind::Loop || b2.kind == BetaKind::Loop) {
          const Beta& other = b1.kind == BetaKind::Loop ? b2 : b1;
          if (other.crosscore) dsu.unite(i, j);
          continue;
        }
        const auto ks = cross_offsets(s, g, b1, b2);
        if (ks.empty()) continue;
        dsu.unite(i, j);
        if (ks.size() >= 2) marked[static_cast<std::size_t>(i)] = 1;
        adj[static_cast<std::size_t>(i)].push_back({j, ks[0]});
        adj[static_cast<std::size_t>(j)].push_back({i, -ks[0]});
      }
    for (const auto& [a, b, k] : aligns) {
      const auto ia = idx.find(a), ib = idx.find(b);
      if (ia == idx.end() || ib == idx.end()) continue;
      dsu.unite(ia->second, ib->second);
      adj[static_cast<std::size_t>(ia->second)].push_back({ib->second, k});
      adj[static_cast<std::size_t>(ib->second)].push_back({ia->second, -k});
    }
    for (const auto& [a, b] : wound_links) {
      const auto ia = idx.find(a), ib = idx.find(b);
      if (ia == idx.end() || ib == idx.end()) continue;
      dsu.unite(ia->second, ib->second);
      marked[static_cast<std::size_t>(ia->second)] = 1;
    }

    std::map<int, std::vector<int>> members;
    for (int i = 0; i < nb; ++i) members[dsu.find(i)].push_back(i);

    std::map<int, char> rwound;
    for (const auto& [r, mem] : members) {
      char w = 0;
      bool has_loop = false;
      for (int i : mem) {
        if (marked[static_cast<std::size_t>(i)]) w = 1;
        if (list[static_cast<std::size_t>(i)].kind == BetaKind::Loop) has_loop = true;
      }
      if (has_loop && mem.size() > 1) w = 1;
      rwound[r] = w;
    }

    // Rigid placement of contractible components; any inconsistency means
    // the component wraps.
    std::map<int, std::map<int, long>> place;
    for (const auto& [r, mem] : members) {
      if (rwound[r]) continue;
      std::map<int, long> off;
      off[mem[0]] = 0;
      std::vector<int> stack{mem[0]};
      bool conflict = false;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& [v, k] : adj[static_cast<std::size_t>(u)]) {
          const long want = off[u] + k;
          const auto it = off.find(v);
          if (it == off.end()) {
            off[v] = want;
            stack.push_back(v);
          } else if (it->second != want) {
            conflict = true;
          }
        }
      }
      if (off.size() != mem.size()) conflict = true;
      if (conflict)
        rwound[r] = 1;
      else
        place[r] = std::move(off);
    }

    // Completion: wound pieces carry every simple connection over their
    // spikes (plus the loop); solid hulls carry every chord between their
    // placed endpoints.
    bool changed = false;
    auto add_beta = [&](const Beta& b) {
      if (P.insert(b).second) changed = true;
    };
    auto add_align = [&](const Beta& a, const Beta& b, long k) {
      if (a == b) return;
      if (aligns.insert({a, b, k}).second) changed = true;
    };
    for (const auto& [r, mem] : members) {
      if (rwound[r]) {
        std::set<int> V;
        for (int i : mem) {
          const Beta& b = list[static_cast<std::size_t>(i)];
          if (b.kind == BetaKind::Connection) {
            V.insert(b.i);
            V.insert(b.j);
          }
        }
        if (V.empty()) continue;
        const Beta rep = list[static_cast<std::size_t>(mem[0])];
        auto add_wound = [&](const Beta& b) {
          add_beta(b);
          if (wound_links.insert({rep, b}).second) changed = true;
        };
        for (int i : V)
          for (int j : V) {
            if (i > j) continue;
            if (i == j)
              add_wound(mk_mono(i));
            else {
              add_wound(mk_sep(i, j, 0));
              add_wound(mk_sep(i, j, -1));
            }
            if (s.family == Family::Moebius) add_wound(mk_cc(i, j));
          }
        if (s.family == Family::Crown || s.family == Family::Moebius) add_wound(LOOP);
        continue;
      }
      if (mem.size() < 2) continue;
      // Solid hull: all chords between placed endpoints.
      std::set<Pt> pts;
      const auto& off = place[r];
      for (const auto& [i, o] : off) {
        const auto [A, B] = chord_of(s, g, list[static_cast<std::size_t>(i)]);
        pts.insert(g.sigma(A, o));
        pts.insert(g.sigma(B, o));
      }
      const Beta ref = list[static_cast<std::size_t>(mem[0])];
      const long refoff = off.at(mem[0]);
      for (auto it1 = pts.begin(); it1 != pts.end(); ++it1)
        for (auto it2 = std::next(it1); it2 != pts.end(); ++it2) {
          const Beta c = pair_to_beta(s, g, *it1, *it2);
          add_beta(c);
          add_align(ref, c, chord_offset(s, g, c, *it1, *it2) - refoff);
        }
    }
    if (changed) continue;

    // Build the chord arrangement and classify complement regions.
    std::vector<WEdge> edges;
    struct ChordRec {
      Beta beta;
      bool sliver;
      int member;
    };
    std::vector<ChordRec> chords;
    const int acount = g.m;
    for (int i = 0; i < acount; ++i) {
      const Pt a{0, g.anchor_pos[static_cast<std::size_t>(i)]};
      Pt b;
      if (i + 1 < acount)
        b = Pt{0, g.anchor_pos[static_cast<std::size_t>(i + 1)]};
      else if (g.disk)
        b = Pt{0, g.anchor_pos[0]};
      else
        b = Pt{0, g.anchor_pos[0] + g.span};
      edges.push_back({true, a, b, -1});
    }
    for (int i = 0; i < nb; ++i) {
      const Beta& b = list[static_cast<std::size_t>(i)];
      if (b.kind != BetaKind::Connection) continue;
      const auto [A, B] = chord_of(s, g, b);
      chords.push_back({b, boundary.count(b) > 0, i});
      edges.push_back({false, A, B, static_cast<int>(chords.size()) - 1});
    }

    if (chords.empty()) {
      // Only the loop: complement is the surface off the core, which meets
      // the boundary sides (or is the whole strip).
      return {false, Support(P.begin(), P.end())};
    }

    // Gap edges fully underneath a side-parallel connection are degenerate
    // tiles between the connection and the side itself.
    std::vector<char> gsliver(static_cast<std::size_t>(acount), 0);
    for (const auto& c : chords) {
      if (!c.sliver) continue;
      const auto [A, B] = chord_of(s, g, c.beta);
      if (g.disk) {
        const int a = static_cast<int>(A.x), b = static_cast<int>(B.x);
        if ((b - a + g.m) % g.m == 2) {
          gsliver[static_cast<std::size_t>(a)] = 1;
          gsliver[static_cast<std::size_t>((a + 1) % g.m)] = 1;
        } else {  // wrap-around side
          gsliver[static_cast<std::size_t>(b)] = 1;
          gsliver[static_cast<std::size_t>((b + 1) % g.m)] = 1;
        }
        continue;
      }
      for (int gi = 0; gi < acount; ++gi) {
        const long a0 = edges[static_cast<std::size_t>(gi)].a.x;
        const long b0 = edges[static_cast<std::size_t>(gi)].b.x;
        for (long t = -1; t <= 1; ++t)
          if (A.x + t * g.span <= a0 && b0 <= B.x + t * g.span)
            gsliver[static_cast<std::size_t>(gi)] = 1;
      }
    }

    const Walker wk{g, edges};
    std::set<std::pair<int, bool>> visited;
    const bool loop_in_P = P.count(LOOP) > 0;
    int pass = 0;
    bool absorbed = false;

    for (int ei = 0; ei < static_cast<int>(edges.size()) && !absorbed; ++ei)
      for (int dir = 0; dir < 2 && !absorbed; ++dir) {
        if (visited.count({ei, dir == 0})) continue;
        const FaceRec f = wk.trace({ei, dir == 0, 0}, visited);
        int nonsliver_gaps = 0, sliver_gaps = 0;
        std::set<int> cids;
        std::vector<std::pair<int, long>> cdarts;  // (chord id, deck power)
        for (const auto& d : f.darts) {
          const auto& e = edges[static_cast<std::size_t>(d.edge)];
          if (e.gap) {
            if (gsliver[static_cast<std::size_t>(d.edge)])
              ++sliver_gaps;
            else
              ++nonsliver_gaps;
          } else {
            cids.insert(e.chord);
            cdarts.push_back({e.chord, d.k});
          }
        }
        if (cdarts.empty()) continue;  // region outside the surface
        if (cids.size() == 1 && chords[static_cast<std::size_t>(*cids.begin())].sliver &&
            nonsliver_gaps == 0 && sliver_gaps > 0)
          continue;  // degenerate tile between a connection and its side
        if (nonsliver_gaps > 0) {
          ++pass;
          continue;
        }
        if (s.family == Family::Crown && f.delta != 0 && !loop_in_P) {
          ++pass;  // region against the core geodesic, itself boundary
          continue;
        }
        // The region misses the boundary: absorb it.
        std::set<int> roots;
        for (int c : cids)
          roots.insert(dsu.find(chords[static_cast<std::size_t>(c)].member));
        if (roots.size() == 1) {
          const int r = *roots.begin();
          if (rwound[r]) continue;  // interior of a wound piece
          const Beta b0 = chords[static_cast<std::size_t>(cdarts[0].first)].beta;
          if (f.delta != 0) {
            if (wound_seeds.insert(b0).second) absorbed = true;
            continue;
          }
          const auto& off = place[r];
          const long shift =
              cdarts[0].second -
              off.at(chords[static_cast<std::size_t>(cdarts[0].first)].member);
          bool consistent = true;
          for (const auto& [cid, k] : cdarts)
            if (k - off.at(chords[static_cast<std::size_t>(cid)].member) != shift)
              consistent = false;
          if (consistent) continue;  // interior cell of a solid hull
          if (wound_seeds.insert(b0).second) absorbed = true;
          continue;
        }
        bool any_wound = f.delta != 0;
        for (int r : roots)
          if (rwound[r]) any_wound = true;
        const Beta b0 = chords[static_cast<std::size_t>(cdarts[0].first)].beta;
        const long k0 = cdarts[0].second;
        for (const auto& [cid, k] : cdarts) {
          const Beta& b = chords[static_cast<std::size_t>(cid)].beta;
          if (any_wound) {
            if (wound_links.insert({b0, b}).second) absorbed = true;
          } else {
            if (b == b0) {
              if (k != k0) {  // touches two translates of one connection
                if (wound_seeds.insert(b0).second) absorbed = true;
              }
              continue;
            }
            if (aligns.insert({b0, b, k - k0}).second) absorbed = true;
          }
        }
        if (!absorbed && any_wound && roots.size() > 1)
          throw std::logic_error("absorption made no progress");
      }
    if (absorbed) continue;

    if (pass == 0) return {true, Support(P.begin(), P.end())};
    return {false, Support(P.begin(), P.end())};
  }
  throw std::runtime_error("saturation failed to stabilize");
}

}  // namespace

FilledSet filled_subsurface(const SurfaceSpec& s, const std::vector<Beta>& betas) {
  if (betas.empty()) throw std::invalid_argument("filled_subsurface: empty connection set");
  const bool has_loop_family =
      s.family == Family::Crown || s.family == Family::Moebius;
  std::set<Beta> P;
  std::set<Beta> seeds;
  for (Beta b : betas) {
    if (b.kind == BetaKind::Loop) {
      if (!has_loop_family) throw InvalidTopology("this family has no core loop");
      P.insert(make_loop());
      continue;
    }
    if (b.i > b.j) {
      std::swap(b.i, b.j);
      if (!b.crosscore) b.wrap = -b.wrap;
    }
    if (b.i < 0 || b.j >= s.n || !s.decorated(b.i) || !s.decorated(b.j))
      throw InvalidTopology("connection endpoints must be decorated spikes");
    if (b.crosscore) {
      if (s.family != Family::Moebius)
        throw InvalidTopology("crosscore connections require a Moebius strip");
      P.insert(mk_cc(b.i, b.j));
      continue;
    }
    if (s.family == Family::Polygon) {
      if (b.i == b.j || b.wrap != 0)
        throw InvalidTopology("polygon connections join distinct spikes directly");
      P.insert(b);
      continue;
    }
    const bool simple =
        (b.i < b.j && (b.wrap == 0 || b.wrap == -1)) || (b.i == b.j && b.wrap == 1);
    if (simple) {
      P.insert(b);
      continue;
    }
    if (b.i == b.j && b.wrap <= 0) throw InvalidTopology("trivial connection");
    // Wrapped connection: it fills the whole collar between its endpoint
    // spikes around the core/cusp.
    P.insert(mk_mono(b.i));
    P.insert(mk_mono(b.j));
    seeds.insert(mk_mono(b.i));
    if (b.i != b.j) {
      P.insert(mk_sep(b.i, b.j, 0));
      P.insert(mk_sep(b.i, b.j, -1));
    }
    if (s.family == Family::Moebius) {
      P.insert(mk_cc(b.i, b.i));
      P.insert(mk_cc(b.i, b.j));
      P.insert(mk_cc(b.j, b.j));
    }
    if (has_loop_family) P.insert(make_loop());
  }
  return saturate(s, std::move(P), std::move(seeds));
}

bool is_spread(const SurfaceSpec& s, const Support& support) {
  if (support.empty()) return false;
  const auto simple = enumerate_simple_betas(s);
  const std::set<Beta> allowed(simple.begin(), simple.end());
  for (const Beta& b : support)
    if (!allowed.count(b)) return false;
  Support sorted_sup = support;
  std::sort(sorted_sup.begin(), sorted_sup.end());
  if (std::adjacent_find(sorted_sup.begin(), sorted_sup.end()) != sorted_sup.end())
    return false;
  const auto cl = filled_subsurface(s, sorted_sup);
  return !cl.full && cl.support == sorted_sup;
}

std::vector<Support> enumerate_spread_subsets(const SurfaceSpec& s) {
  const auto betas = enumerate_simple_betas(s);
  const int B = static_cast<int>(betas.size());
  if (B > 18)
    throw std::invalid_argument("enumerate_spread_subsets: too many connections");
  std::set<Support> out;
  for (unsigned mask = 1; mask < (1u << B); ++mask) {
    std::vector<Beta> sub;
    for (int i = 0; i < B; ++i)
      if (mask & (1u << i)) sub.push_back(betas[static_cast<std::size_t>(i)]);
    const auto cl = filled_subsurface(s, sub);
    if (!cl.full) out.insert(cl.support);
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Cutting
// ---------------------------------------------------------------------------

std::vector<CutPiece> cut_along(const SurfaceSpec& s, const Beta& b_in) {
  Beta b = b_in;
  if (b.kind == BetaKind::Loop) {
    if (s.family != Family::Crown && s.family != Family::Moebius)
      throw InvalidTopology("this family has no core loop to cut");
    return {{make_surface(Family::PuncturedPolygon, s.n, s.decorations), 0}};
  }
  if (b.i > b.j) {
    std::swap(b.i, b.j);
    if (!b.crosscore) b.wrap = -b.wrap;
  }
  if (b.i < 0 || b.j >= s.n || !s.decorated(b.i) || !s.decorated(b.j))
    throw InvalidTopology("connection endpoints must be decorated spikes");

  auto segment = [&](int from, int count) {
    std::vector<bool> d;
    for (int t = 0; t < count; ++t)
      d.push_back(s.decorations[static_cast<std::size_t>((from + t) % s.n)]);
    return d;
  };

  if (b.crosscore) {
    if (s.family != Family::Moebius)
      throw InvalidTopology("crosscore connections require a Moebius strip");
    if (b.wrap != 0) throw WrapUnsupported("wrapped crosscore connection");
    auto dec = segment(b.i, b.j - b.i + 1);
    const auto tail = segment(b.j, s.n - (b.j - b.i) + 1);
    dec.insert(dec.end(), tail.begin(), tail.end());
    return {{make_surface(Family::Polygon, s.n + 2, dec), 2}};
  }

  if (s.family == Family::Polygon) {
    if (b.i == b.j || b.wrap != 0)
      throw InvalidTopology("polygon connections join distinct spikes directly");
  } else {
    const bool simple =
        (b.i < b.j && (b.wrap == 0 || b.wrap == -1)) || (b.i == b.j && b.wrap == 1);
    if (!simple) throw WrapUnsupported("cutting along a wrapped connection");
  }
  const auto bbs = enumerate_boundary_betas(s);
  if (std::find(bbs.begin(), bbs.end(), b) != bbs.end())
    throw InvalidTopology("connection is parallel to a boundary side");

  if (s.family == Family::Polygon) {
    const int n1 = b.j - b.i + 1, n2 = s.n - b.j + b.i + 1;
    return {{make_surface(Family::Polygon, n1, segment(b.i, n1)), 1},
            {make_surface(Family::Polygon, n2, segment(b.j, n2)), 1}};
  }

  if (b.i == b.j) {  // monogon: minimal piece of the same family plus polygon
    const auto inner = make_surface(s.family, 1, {true});
    const int n2 = s.n + 1;
    return {{inner, 1}, {make_surface(Family::Polygon, n2, segment(b.i, n2)), 1}};
  }

  const int direct = b.j - b.i + 1;          // spikes i..j
  const int around = s.n - b.j + b.i + 1;    // spikes j..i around the period
  if (b.wrap == 0)
    return {{make_surface(Family::Polygon, direct, segment(b.i, direct)), 1},
            {make_surface(s.family, around, segment(b.j, around)), 1}};
  return {{make_surface(Family::Polygon, around, segment(b.j, around)), 1},
          {make_surface(s.family, direct, segment(b.i, direct)), 1}};
}

}  // namespace stripdef
