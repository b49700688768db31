#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "stripdef/simplicial.hpp"
#include "stripdef/spread.hpp"
#include "stripdef/surface.hpp"

using namespace stripdef;

namespace {

SurfaceSpec mk(Family f, int n) { return make_surface(f, n, std::vector<bool>(n, true)); }

Beta sep(int i, int j, int wrap = 0) { return Beta{BetaKind::Connection, false, i, j, wrap}; }
Beta mono(int i) { return Beta{BetaKind::Connection, false, i, i, 1}; }
Beta cc(int i, int j) { return Beta{BetaKind::Connection, true, std::min(i, j), std::max(i, j), 0}; }

Support sorted(std::vector<Beta> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool contains(const std::vector<Support>& all, const Support& s) {
  return std::find(all.begin(), all.end(), s) != all.end();
}

}  // namespace

TEST_CASE("triangle: three connections, six spread subsets") {
  const auto s = mk(Family::Polygon, 3);
  const auto all = enumerate_spread_subsets(s);
  CHECK(all.size() == 6);
  // Singletons and disjoint pairs; the full triple saturates to the whole
  // surface (solid triangle on all spikes, complement only side tiles).
  for (const Beta& b : enumerate_simple_betas(s)) CHECK(contains(all, {b}));
  CHECK(contains(all, sorted({sep(0, 1), sep(0, 2)})));
  CHECK(contains(all, sorted({sep(0, 1), sep(1, 2)})));
  CHECK(contains(all, sorted({sep(0, 2), sep(1, 2)})));
  CHECK(filled_subsurface(s, {sep(0, 1), sep(0, 2), sep(1, 2)}).full);

  const auto one = filled_subsurface(s, {sep(0, 1)});
  CHECK_FALSE(one.full);
  CHECK(one.support == Support{sep(0, 1)});
  CHECK(is_spread(s, {sep(0, 1)}));
  CHECK_FALSE(is_spread(s, {}));
}

TEST_CASE("square: saturation of diagonals, triangles, boundary chain") {
  const auto s = mk(Family::Polygon, 4);

  // Crossing diagonals merge into the solid on all four spikes: full.
  CHECK(filled_subsurface(s, {sep(0, 2), sep(1, 3)}).full);

  // A triangle of connections saturates to the solid piece with the same
  // support (three pairwise-touching connections bound a gapless region).
  const auto tri = filled_subsurface(s, {sep(0, 1), sep(1, 2), sep(0, 2)});
  CHECK_FALSE(tri.full);
  CHECK(tri.support == sorted({sep(0, 1), sep(1, 2), sep(0, 2)}));
  CHECK(is_spread(s, tri.support));

  // All four boundary connections bound the whole square: full.
  CHECK(filled_subsurface(s, {sep(0, 1), sep(1, 2), sep(2, 3), sep(0, 3)}).full);

  // Solid triangle plus a crossing diagonal: full. Plus a disjoint
  // connection: proper.
  CHECK(filled_subsurface(s, {sep(0, 1), sep(1, 2), sep(0, 2), sep(1, 3)}).full);
  const auto tp = filled_subsurface(s, {sep(0, 1), sep(1, 2), sep(0, 2), sep(2, 3)});
  CHECK_FALSE(tp.full);
  CHECK(tp.support == sorted({sep(0, 1), sep(1, 2), sep(0, 2), sep(2, 3)}));

  // Census: 6 singletons + 14 disjoint pairs + 4 solid triangles +
  // 12 disjoint triples + 8 size-4 supports = 44. Matches the face count
  // of a 4-dimensional polytope with f-vector (8, 16, 14, 6).
  const auto all = enumerate_spread_subsets(s);
  CHECK(all.size() == 44);
  int by_size[7] = {0, 0, 0, 0, 0, 0, 0};
  for (const auto& sup : all) by_size[sup.size()]++;
  CHECK(by_size[1] == 6);
  CHECK(by_size[2] == 14);
  CHECK(by_size[3] == 16);
  CHECK(by_size[4] == 8);
  CHECK(by_size[5] == 0);
}

TEST_CASE("punctured monogon: no spread subsets at all") {
  const auto s = mk(Family::PuncturedPolygon, 1);
  // The single connection is the boundary side; saturating it wraps the
  // cusp and swallows the surface.
  CHECK(filled_subsurface(s, {mono(0)}).full);
  CHECK(enumerate_spread_subsets(s).empty());
}

TEST_CASE("punctured bigon: quadrilateral census") {
  const auto s = mk(Family::PuncturedPolygon, 2);
  const auto all = enumerate_spread_subsets(s);
  CHECK(all.size() == 8);
  // Singletons: the two sides and the two monogons.
  CHECK(contains(all, {sep(0, 1, 0)}));
  CHECK(contains(all, {sep(0, 1, -1)}));
  CHECK(contains(all, {mono(0)}));
  CHECK(contains(all, {mono(1)}));
  // Pairs: side + monogon in all four combinations.
  CHECK(contains(all, sorted({sep(0, 1, 0), mono(0)})));
  CHECK(contains(all, sorted({sep(0, 1, 0), mono(1)})));
  CHECK(contains(all, sorted({sep(0, 1, -1), mono(0)})));
  CHECK(contains(all, sorted({sep(0, 1, -1), mono(1)})));
  // Both sides enclose the cusp; crossing monogons wrap it.
  CHECK(filled_subsurface(s, {sep(0, 1, 0), sep(0, 1, -1)}).full);
  CHECK(filled_subsurface(s, {mono(0), mono(1)}).full);

  // A monogon saturates to itself: the collar it bounds around the cusp is
  // one-sided towards the spike, so the support stays the monogon alone.
  const auto m0 = filled_subsurface(s, {mono(0)});
  CHECK_FALSE(m0.full);
  CHECK(m0.support == Support{mono(0)});
}

TEST_CASE("punctured triangle: wound pairs and a solid not containing the cusp") {
  const auto s = mk(Family::PuncturedPolygon, 3);

  // Two crossing monogons wrap the cusp; the wound piece spans spikes 0,1
  // and completes to every connection on them.
  const auto w = filled_subsurface(s, {mono(0), mono(1)});
  CHECK_FALSE(w.full);
  CHECK(w.support == sorted({sep(0, 1, 0), sep(0, 1, -1), mono(0), mono(1)}));
  CHECK(is_spread(s, w.support));

  // Triangle of direct connections: a solid disk missing the cusp.
  const auto tri = filled_subsurface(s, {sep(0, 1, 0), sep(1, 2, 0), sep(0, 2, 0)});
  CHECK_FALSE(tri.full);
  CHECK(tri.support == sorted({sep(0, 1, 0), sep(1, 2, 0), sep(0, 2, 0)}));

  // All three monogons: full.
  CHECK(filled_subsurface(s, {mono(0), mono(1), mono(2)}).full);
}

TEST_CASE("crown without decorations: only the core loop") {
  for (int n : {1, 2}) {
    const auto s = make_surface(Family::Crown, n, std::vector<bool>(n, false));
    const auto all = enumerate_spread_subsets(s);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == Support{make_loop()});
  }
}

TEST_CASE("one-spiked crown: side and loop") {
  const auto s = mk(Family::Crown, 1);
  const auto all = enumerate_spread_subsets(s);
  CHECK(all.size() == 2);
  CHECK(contains(all, {mono(0)}));
  CHECK(contains(all, {make_loop()}));
  CHECK(filled_subsurface(s, {mono(0), make_loop()}).full);

  // Vertex complexes: one arc survives each spread subset.
  const auto a_side = arc_complex(s, {mono(0)});
  REQUIRE(a_side.arcs.size() == 1);
  CHECK(a_side.arcs[0] == Arc{ArcKind::ToCore, 0, -1});
  const auto a_loop = arc_complex(s, {make_loop()});
  REQUIRE(a_loop.arcs.size() == 1);
  CHECK(a_loop.arcs[0] == Arc{ArcKind::Chord, 1, 3});
}

TEST_CASE("two-spiked crown: the frozen twenty") {
  const auto s = mk(Family::Crown, 2);
  const Beta b = sep(0, 1, 0);    // chord (0,2)
  const Beta bp = sep(0, 1, -1);  // chord (2,4)
  const Beta L = make_loop();

  const auto all = enumerate_spread_subsets(s);
  CHECK(all.size() == 20);
  int by_size[4] = {0, 0, 0, 0};
  for (const auto& sup : all) by_size[sup.size()]++;
  CHECK(by_size[1] == 5);
  CHECK(by_size[2] == 9);
  CHECK(by_size[3] == 6);

  // The six size-3 supports (vertices of the cone, projectively).
  const std::vector<Support> vertices = {
      sorted({mono(0), b, bp}), sorted({mono(1), b, bp}), sorted({mono(0), b, L}),
      sorted({mono(0), bp, L}), sorted({mono(1), b, L}),  sorted({mono(1), bp, L}),
  };
  for (const auto& v : vertices) CHECK(contains(all, v));

  // Saturations that swallow the crown.
  CHECK(filled_subsurface(s, {mono(0), mono(1)}).full);
  CHECK(filled_subsurface(s, {b, bp, L}).full);
  CHECK(filled_subsurface(s, {mono(0), mono(1), b, bp, L}).full);

  // Wound collar: monogon plus loop completes to exactly that pair.
  const auto collar = filled_subsurface(s, {mono(0), L});
  CHECK_FALSE(collar.full);
  CHECK(collar.support == sorted({mono(0), L}));

  // Arc complexes at the six vertices are single points, all distinct.
  const std::vector<std::pair<Support, Arc>> vertex_arcs = {
      {sorted({mono(0), b, bp}), Arc{ArcKind::ToCore, 0, -1}},
      {sorted({mono(1), b, bp}), Arc{ArcKind::ToCore, 2, -1}},
      {sorted({mono(0), b, L}), Arc{ArcKind::Chord, 0, 3}},
      {sorted({mono(0), bp, L}), Arc{ArcKind::Chord, 1, 4}},
      {sorted({mono(1), b, L}), Arc{ArcKind::Chord, 3, 6}},
      {sorted({mono(1), bp, L}), Arc{ArcKind::Chord, 2, 5}},
  };
  for (const auto& [sup, arc] : vertex_arcs) {
    const auto a = arc_complex(s, sup);
    REQUIRE(a.arcs.size() == 1);
    CHECK(a.arcs[0] == arc);
  }

  // Facet complexes: a side-parallel connection leaves a 2-ball, a monogon
  // leaves the 2-ball spanned by the four arcs missing its chord.
  auto cert = certify_type(arc_complex(s, {b}).complex);
  CHECK(cert.type == CertType::Ball);
  CHECK(cert.dim == 2);
  cert = certify_type(arc_complex(s, {mono(0)}).complex);
  CHECK(cert.type == CertType::Ball);
  CHECK(cert.dim == 2);
  // Edge of the prism: wound collar supports a 1-ball.
  cert = certify_type(arc_complex(s, sorted({mono(0), L})).complex);
  CHECK(cert.type == CertType::Ball);
  CHECK(cert.dim == 1);
}

TEST_CASE("one-spiked Moebius strip: crosscore and loop only") {
  const auto s = mk(Family::Moebius, 1);
  const auto all = enumerate_spread_subsets(s);
  CHECK(all.size() == 2);
  CHECK(contains(all, {cc(0, 0)}));
  CHECK(contains(all, {make_loop()}));
  // The side-connection saturates around the crosscap: full.
  CHECK(filled_subsurface(s, {mono(0)}).full);
  CHECK(filled_subsurface(s, {cc(0, 0), make_loop()}).full);

  const auto a_cc = arc_complex(s, {cc(0, 0)});
  REQUIRE(a_cc.arcs.size() == 1);
  CHECK(a_cc.arcs[0] == Arc{ArcKind::CrossCore, 1, 0});
  const auto a_loop = arc_complex(s, {make_loop()});
  REQUIRE(a_loop.arcs.size() == 1);
  CHECK(a_loop.arcs[0] == Arc{ArcKind::Chord, 1, 3});
}

TEST_CASE("two-spiked Moebius strip: wound and solid saturations") {
  const auto s = mk(Family::Moebius, 2);

  // A monogon wraps the crosscap side: its piece carries the crosscore at
  // its spike and the core loop.
  const auto m0 = filled_subsurface(s, {mono(0)});
  CHECK_FALSE(m0.full);
  CHECK(m0.support == sorted({mono(0), cc(0, 0), make_loop()}));
  CHECK(is_spread(s, m0.support));

  // Single crosscore connections are one-dimensional spread subsets.
  CHECK(is_spread(s, {cc(0, 0)}));
  CHECK(is_spread(s, {cc(0, 1)}));
  CHECK(is_spread(s, {make_loop()}));

  // Two crosscore connections at different spikes cross and fill the strip.
  CHECK(filled_subsurface(s, {cc(0, 0), cc(1, 1)}).full);

  // Loop with a crosscore: the merged piece wraps, completing over its
  // spike, and the complement of the resulting piece is only side tiles at
  // the remaining spike: proper.
  const auto cl = filled_subsurface(s, {cc(0, 0), make_loop()});
  CHECK_FALSE(cl.full);
  CHECK(cl.support == sorted({mono(0), cc(0, 0), make_loop()}));
}

TEST_CASE("saturation is extensive, idempotent and monotone") {
  std::mt19937 rng(20240817u);
  const std::vector<SurfaceSpec> specs = {
      mk(Family::Polygon, 4),
      mk(Family::Polygon, 5),
      mk(Family::PuncturedPolygon, 3),
      mk(Family::Crown, 2),
      mk(Family::Moebius, 2),
  };
  for (const auto& s : specs) {
    const auto betas = enumerate_simple_betas(s);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Beta> sub;
      for (const Beta& b : betas)
        if (rng() % 3 == 0) sub.push_back(b);
      if (sub.empty()) continue;
      const auto cl = filled_subsurface(s, sub);
      if (cl.full) {
        // Monotone: any superset is full too.
        auto sup = sub;
        sup.push_back(betas[rng() % betas.size()]);
        CHECK(filled_subsurface(s, sup).full);
        continue;
      }
      // Extensive.
      for (const Beta& b : sub)
        CHECK(std::binary_search(cl.support.begin(), cl.support.end(), b));
      // Idempotent.
      const auto cl2 = filled_subsurface(s, cl.support);
      CHECK_FALSE(cl2.full);
      CHECK(cl2.support == cl.support);
      CHECK(is_spread(s, cl.support));
      // Monotone under adding one connection.
      auto sup = sub;
      sup.push_back(betas[rng() % betas.size()]);
      const auto cl3 = filled_subsurface(s, sup);
      if (!cl3.full)
        CHECK(std::includes(cl3.support.begin(), cl3.support.end(), cl.support.begin(),
                            cl.support.end()));
    }
  }
}

TEST_CASE("enumerated supports are distinct spread subsets") {
  const auto s = mk(Family::PuncturedPolygon, 3);
  const auto all = enumerate_spread_subsets(s);
  std::set<Support> uniq(all.begin(), all.end());
  CHECK(uniq.size() == all.size());
  for (const auto& sup : all) CHECK(is_spread(s, sup));
  CHECK(all.size() >= 9);  // at least the singletons
}

TEST_CASE("cutting: polygon separations") {
  const auto s = mk(Family::Polygon, 5);
  const auto pieces = cut_along(s, sep(1, 3));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].piece == mk(Family::Polygon, 3));
  CHECK(pieces[0].marked == 1);
  CHECK(pieces[1].piece == mk(Family::Polygon, 4));
  CHECK(pieces[1].marked == 1);
  // Boundary sides cut off nothing.
  CHECK_THROWS_AS(cut_along(s, sep(0, 1)), InvalidTopology);
}

TEST_CASE("cutting: punctured polygon, crown, Moebius strip") {
  const auto px = mk(Family::PuncturedPolygon, 3);
  // Monogon: inner punctured piece plus outer polygon with doubled spike.
  auto pieces = cut_along(px, mono(0));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].piece == mk(Family::PuncturedPolygon, 1));
  CHECK(pieces[0].marked == 1);
  CHECK(pieces[1].piece == mk(Family::Polygon, 4));
  CHECK(pieces[1].marked == 1);
  // Direct separation (0,2): polygon piece with spikes 0,1,2 away from the
  // cusp, punctured piece with spikes 2,0 around it.
  pieces = cut_along(px, sep(0, 2, 0));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].piece == mk(Family::Polygon, 3));
  CHECK(pieces[0].marked == 1);
  CHECK(pieces[1].piece == mk(Family::PuncturedPolygon, 2));
  CHECK(pieces[1].marked == 1);
  // Connections parallel to a side are not cuttable.
  CHECK_THROWS_AS(cut_along(px, sep(0, 1, 0)), InvalidTopology);

  const auto cr = mk(Family::Crown, 2);
  pieces = cut_along(cr, make_loop());
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].piece == mk(Family::PuncturedPolygon, 2));
  CHECK(pieces[0].marked == 0);
  pieces = cut_along(cr, mono(1));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].piece == mk(Family::Crown, 1));
  CHECK(pieces[0].marked == 1);
  CHECK(pieces[1].piece == mk(Family::Polygon, 3));
  CHECK(pieces[1].marked == 1);

  const auto mo = mk(Family::Moebius, 2);
  pieces = cut_along(mo, cc(0, 1));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].piece == mk(Family::Polygon, 4));
  CHECK(pieces[0].marked == 2);
  pieces = cut_along(mo, cc(0, 0));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].piece == mk(Family::Polygon, 4));
  CHECK(pieces[0].marked == 2);
  pieces = cut_along(mo, mono(0));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].piece == mk(Family::Moebius, 1));
  CHECK(pieces[0].marked == 1);
  CHECK(pieces[1].piece == mk(Family::Polygon, 3));
  CHECK(pieces[1].marked == 1);
  pieces = cut_along(mo, make_loop());
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].piece == mk(Family::PuncturedPolygon, 2));

  // Wrapped connections are not supported.
  CHECK_THROWS_AS(cut_along(px, Beta{BetaKind::Connection, false, 0, 1, 2}),
                  WrapUnsupported);
}
