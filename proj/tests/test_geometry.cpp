#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "stripdef/geometry.hpp"
#include "stripdef/linalg.hpp"
#include "stripdef/surface.hpp"

using namespace stripdef;

namespace {

SurfaceSpec make(Family f, int n, const std::string& pattern) {
  std::vector<bool> dec;
  for (char c : pattern) dec.push_back(c == '1');
  return make_surface(f, n, dec);
}

SurfaceSpec make_all(Family f, int n) {
  return make_surface(f, n, std::vector<bool>(n, true));
}

DecoratedPoint fin(const Q& x, const Q& h) { return {false, x, h}; }
DecoratedPoint inf_pt(const Q& h) { return {true, 0, h}; }

double to_d(const Q& x) { return static_cast<double>(x); }

// Central finite difference of horoconnection_length along chart coordinate k.
// Extended precision keeps the difference quotient's roundoff well below the
// truncation error at this step size.
double fd_length(const DecoratedMetric& m, const Beta& beta, int k, long double step) {
  const int n = m.surface.n;
  const auto to_ld = [](const Q& x) { return static_cast<long double>(x); };
  auto eval = [&](long double eps) {
    DecoratedMetric mm = m;
    // Perturb multiplicatively where the coordinate is a logarithm (t, u);
    // additively for positions.
    long double t = mm.surface.family == Family::Crown ? std::log(to_ld(mm.q)) : 0.0L;
    std::vector<long double> xs(n), us(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = to_ld(mm.pos[i]);
      us[i] = std::log(to_ld(mm.h[i]));
    }
    if (k == m.t_index()) t += eps;
    for (int i = 0; i < n; ++i) {
      if (k == m.pos_index(i)) xs[i] += eps;
      if (k == m.u_index(i)) us[i] += eps;
    }
    if (beta.kind == BetaKind::Loop) return t;
    const int i = beta.i, j = beta.j;
    if (m.surface.family == Family::Polygon && (m.spike_at_infinity(i) || m.spike_at_infinity(j))) {
      return -us[i] - us[j];  // distinct spikes, one at infinity
    }
    long double dx = 0.0L, extra = 0.0L;
    switch (m.surface.family) {
      case Family::Polygon: dx = xs[j] - xs[i]; break;
      case Family::PuncturedPolygon: dx = xs[j] + beta.wrap - xs[i]; break;
      case Family::Crown: {
        const long double qw = std::exp(t * beta.wrap);
        dx = xs[j] * qw - xs[i];
        extra = -beta.wrap * t;
        break;
      }
      default: return 0.0L;
    }
    return 2.0L * std::log(std::abs(dx)) - us[i] - us[j] + extra;
  };
  return static_cast<double>((eval(step) - eval(-step)) / (2.0L * step));
}

// All betas used in differential tests: simple ones plus small wraps.
std::vector<Beta> test_betas(const SurfaceSpec& s, int kmax) {
  auto out = enumerate_simple_betas(s);
  for (const auto& b : enumerate_wrapped_betas(s, kmax)) out.push_back(b);
  return out;
}

// Maximal simplices of the arc complex by direct backtracking (test-local;
// the sizes involved here are tiny).
void extend_cliques(const SurfaceSpec& s, const std::vector<Arc>& arcs,
                    std::vector<int>& cur, std::size_t from,
                    std::vector<std::vector<int>>& out) {
  bool extended = false;
  for (std::size_t k = from; k < arcs.size(); ++k) {
    bool ok = true;
    for (int i : cur)
      if (!arcs_disjoint(arcs[static_cast<std::size_t>(i)], arcs[k], s)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    extended = true;
    cur.push_back(static_cast<int>(k));
    extend_cliques(s, arcs, cur, k + 1, out);
    cur.pop_back();
  }
  if (!extended) {
    // Maximal w.r.t. later vertices; verify global maximality.
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      bool ok = true;
      for (int i : cur) {
        if (i == static_cast<int>(k) ||
            !arcs_disjoint(arcs[static_cast<std::size_t>(i)], arcs[k], s)) {
          ok = false;
          break;
        }
      }
      if (ok) return;  // extendable by an earlier vertex: not maximal
    }
    out.push_back(cur);
  }
}

std::vector<std::vector<int>> maximal_simplices(const SurfaceSpec& s,
                                                const std::vector<Arc>& arcs) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  extend_cliques(s, arcs, cur, 0, out);
  return out;
}

}  // namespace

TEST_CASE("lambda_exp basics and spec examples") {
  // Tangent horoballs at distance 1 with unit diameters: length 0.
  CHECK(lambda_exp(fin(0, 1), fin(1, 1)) == Q(1));
  // x = (0,3), diameters (1,1): e^l = 9, l = 2 ln 3.
  CHECK(lambda_exp(fin(0, 1), fin(3, 1)) == Q(9));
  CHECK(std::abs(std::log(9.0) - 2 * std::log(3.0)) < 1e-15);
  // Symmetry and sign-of-difference irrelevance.
  CHECK(lambda_exp(fin(3, 1), fin(0, 1)) == Q(9));
  CHECK(lambda_exp(fin(-2, Q(1) / 2), fin(1, 3)) == Q(9) * 2 / 3);
  // One endpoint at infinity: horoball {y >= 2} has h = 1/2; diameter-4 ball
  // at 0 overlaps it: e^l = 1/(4 * 1/2) = 1/2 (negative length).
  CHECK(lambda_exp(fin(0, 4), inf_pt(Q(1) / 2)) == Q(1) / 2);
  CHECK(lambda_exp(inf_pt(Q(1) / 2), fin(0, 4)) == Q(1) / 2);
  CHECK_THROWS_AS((void)lambda_exp(fin(1, 1), fin(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS((void)lambda_exp(inf_pt(1), inf_pt(2)), std::invalid_argument);
}

TEST_CASE("lambda_exp is invariant under rational Moebius maps") {
  const std::vector<DecoratedPoint> pts = {
      fin(0, 1), fin(1, Q(1) / 3), fin(Q(7) / 2, 4), fin(-3, Q(2) / 5), inf_pt(Q(5) / 2)};
  const std::vector<MoebiusMap> maps = {
      {2, 1, 1, 1},    // det 1
      {0, -1, 1, 0},   // inversion, swaps 0 <-> oo
      {3, 1, 5, 2},    // det 1
      {2, 0, 0, 1},    // det 2: scaling
      {1, -7, 0, 2},   // det 2: affine
      {5, 3, 7, 9},    // det 24
  };
  for (const auto& g : maps) {
    REQUIRE(g.det() > 0);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const auto gi = moebius_apply(g, pts[i]);
        const auto gj = moebius_apply(g, pts[j]);
        CHECK(lambda_exp(gi, gj) == lambda_exp(pts[i], pts[j]));
      }
  }
  // Round trip through the inversion.
  const MoebiusMap inv{0, -1, 1, 0};
  const auto back = moebius_apply(inv, moebius_apply(inv, fin(2, Q(3) / 7)));
  CHECK(!back.infinite);
  CHECK(back.x == Q(2));
  CHECK(back.h == Q(3) / 7);
}

TEST_CASE("length_exp: polygon chart and infinity endpoint") {
  const auto s = make_all(Family::Polygon, 3);
  DecoratedMetric m{s, {0, 1, 0}, {1, 1, 1}, 0};
  m.validate();
  CHECK(length_exp(m, Beta{BetaKind::Connection, false, 0, 1, 0}) == Q(1));
  CHECK(length_exp(m, Beta{BetaKind::Connection, false, 0, 2, 0}) == Q(1));
  CHECK(length_exp(m, Beta{BetaKind::Connection, false, 1, 2, 0}) == Q(1));
  CHECK(horoconnection_length(m, Beta{BetaKind::Connection, false, 0, 1, 0}) ==
        doctest::Approx(0.0).epsilon(1e-14));

  DecoratedMetric m2{s, {0, 1, 0}, {Q(1) / 4, 1, Q(1) / 2}, 0};
  // h_oo = 1/2 means horoball {y >= 2}; e^l(0, oo) = 1/(h0 * hoo) = 8.
  CHECK(length_exp(m2, Beta{BetaKind::Connection, false, 0, 2, 0}) == Q(8));
}

TEST_CASE("length_exp: undecorated endpoints and unsupported family") {
  const auto s = make(Family::Polygon, 4, "1011");
  DecoratedMetric m{s, {0, 1, 2, 0}, {1, 1, 1, 1}, 0};
  CHECK_THROWS_AS((void)length_exp(m, Beta{BetaKind::Connection, false, 0, 1, 0}),
                  UndecoratedEndpoint);
  CHECK_THROWS_AS((void)random_metric(make_all(Family::Moebius, 2), 1), UnsupportedFamily);
  DecoratedMetric mm{make_all(Family::Moebius, 1), {1}, {1}, Q(2)};
  CHECK_THROWS_AS((void)length_exp(mm, make_loop()), UnsupportedFamily);
  CHECK_THROWS_AS(mm.validate(), UnsupportedFamily);
}

TEST_CASE("length_exp: punctured and crown wrapped connections, loop") {
  const auto sp = make_all(Family::PuncturedPolygon, 2);
  DecoratedMetric mp{sp, {0, Q(1) / 2}, {Q(1) / 3, Q(1) / 5}, 0};
  mp.validate();
  // (i=0, j=1, wrap 0): (1/2)^2 / (1/15) = 15/4.
  CHECK(length_exp(mp, Beta{BetaKind::Connection, false, 0, 1, 0}) == Q(15) / 4);
  // wrap -1: (1/2 - 1)^2 * 15 = 15/4 too (symmetric here).
  CHECK(length_exp(mp, Beta{BetaKind::Connection, false, 0, 1, -1}) == Q(15) / 4);
  // Monogon at 0 (wrap 1): 1 / h0^2 = 9.
  CHECK(length_exp(mp, Beta{BetaKind::Connection, false, 0, 0, 1}) == Q(9));

  const auto sc = make_all(Family::Crown, 1);
  DecoratedMetric mc{sc, {1}, {1}, Q(4)};
  mc.validate();
  CHECK(length_exp(mc, make_loop()) == Q(4));
  CHECK(horoconnection_length(mc, make_loop()) == doctest::Approx(std::log(4.0)));
  // Crown monogon (wrap 1): (q-1)^2 / q = 9/4; the translated horoball's
  // size scales by q.
  CHECK(length_exp(mc, Beta{BetaKind::Connection, false, 0, 0, 1}) == Q(9) / 4);
  // wrap 2: (q^2-1)^2 / q^2 = 225/16.
  CHECK(length_exp(mc, Beta{BetaKind::Connection, false, 0, 0, 2}) == Q(225) / 16);
}

TEST_CASE("horoball scaling law: h_i -> F h_i shifts lengths by -log F per incidence") {
  for (auto fam : {Family::Polygon, Family::PuncturedPolygon, Family::Crown}) {
    const int n = fam == Family::Polygon ? 4 : 2;
    const auto s = make_all(fam, n);
    const auto m = random_metric(s, 42);
    const Q F = Q(7) / 3;
    for (int spike = 0; spike < n; ++spike) {
      DecoratedMetric m2 = m;
      m2.h[static_cast<std::size_t>(spike)] *= F;
      for (const auto& b : test_betas(s, 2)) {
        if (b.kind == BetaKind::Loop) {
          CHECK(length_exp(m2, b) == length_exp(m, b));
          continue;
        }
        int inc = (b.i == spike ? 1 : 0) + (b.j == spike ? 1 : 0);
        Q expect = length_exp(m, b);
        for (int c = 0; c < inc; ++c) expect /= F;
        CHECK(length_exp(m2, b) == expect);
      }
    }
  }
}

TEST_CASE("random_metric: reproducible, valid, correct dimension") {
  const auto s5 = make_all(Family::Polygon, 5);
  const auto a = random_metric(s5, 7);
  const auto b = random_metric(s5, 7);
  const auto c = random_metric(s5, 8);
  CHECK(a.pos == b.pos);
  CHECK(a.h == b.h);
  CHECK(a.pos != c.pos);
  a.validate();
  c.validate();
  // Polygon(5, r=5): 2 free positions + 5 log-diameters.
  CHECK(a.coord_count() == 7);
  CHECK(a.coordinate_names() ==
        std::vector<std::string>{"dx3", "dx4", "du1", "du2", "du3", "du4", "du5"});

  const auto crown2 = random_metric(make_all(Family::Crown, 2), 3);
  crown2.validate();
  CHECK(crown2.coord_count() == 4);
  CHECK(crown2.coordinate_names() == std::vector<std::string>{"dt", "dx2", "du1", "du2"});
  CHECK(crown2.q > 1);
  CHECK(crown2.pos[0] == 1);
  CHECK(crown2.pos[1] > 1);
  CHECK(crown2.pos[1] < crown2.q);

  const auto punc = random_metric(make(Family::PuncturedPolygon, 3, "101"), 11);
  punc.validate();
  CHECK(punc.coord_count() == 3 - 1 + 2);
  for (int i = 0; i + 1 < 3; ++i) CHECK(punc.pos[static_cast<std::size_t>(i)] <
                                        punc.pos[static_cast<std::size_t>(i) + 1]);
  CHECK(punc.pos[0] == 0);
  CHECK(punc.pos[2] < 1);
}

TEST_CASE("length_differential: du entries, locality, loop row") {
  const auto s = make_all(Family::Polygon, 5);
  const auto m = random_metric(s, 5);
  for (const auto& b : enumerate_simple_betas(s)) {
    const auto f = length_differential(m, b);
    REQUIRE(static_cast<int>(f.row.size()) == m.coord_count());
    for (int spike = 0; spike < 5; ++spike) {
      const int ui = m.u_index(spike);
      const int inc = (b.i == spike ? 1 : 0) + (b.j == spike ? 1 : 0);
      CHECK(f.row[static_cast<std::size_t>(ui)] == Q(-inc));
      // Positions of spikes not touching the connection do not appear.
      const int xi = m.pos_index(spike);
      if (xi >= 0 && inc == 0) CHECK(f.row[static_cast<std::size_t>(xi)] == Q(0));
    }
  }
  const auto mc = random_metric(make_all(Family::Crown, 2), 9);
  const auto loop_row = length_differential(mc, make_loop());
  QVec expect(static_cast<std::size_t>(mc.coord_count()), Q(0));
  expect[0] = 1;
  CHECK(loop_row.row == expect);
  // Crown monogon at spike 0, wrap 1: dt entry is (q+1)/(q-1).
  const auto mono = length_differential(mc, Beta{BetaKind::Connection, false, 0, 0, 1});
  CHECK(mono.row[0] == (mc.q + 1) / (mc.q - 1));
  CHECK(mono.row[static_cast<std::size_t>(mc.u_index(0))] == Q(-2));
}

TEST_CASE("length_differential matches central finite differences") {
  const std::vector<SurfaceSpec> specs = {
      make_all(Family::Polygon, 4),
      make(Family::Polygon, 5, "11011"),
      make_all(Family::PuncturedPolygon, 3),
      make(Family::PuncturedPolygon, 4, "0110"),
      make_all(Family::Crown, 2),
      make(Family::Crown, 3, "110"),
  };
  const long double step = 1e-6L;
  for (const auto& s : specs) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto m = random_metric(s, seed);
      for (const auto& b : test_betas(s, 2)) {
        const auto f = length_differential(m, b);
        for (int k = 0; k < m.coord_count(); ++k) {
          const double analytic = to_d(f.row[static_cast<std::size_t>(k)]);
          const double numeric = fd_length(m, b, k, step);
          const double scale = std::max({std::abs(analytic), std::abs(numeric), 1.0});
          CHECK(std::abs(analytic - numeric) / scale < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("strip_vector: frozen triangle oracles (all spikes decorated)") {
  const auto s = make_all(Family::Polygon, 3);
  DecoratedMetric m{s, {0, 1, 0}, {1, 1, 1}, 0};
  // Anchors: [s1 e1 s2 e2 s3 e3] at positions 0..5.
  // Ray from spike 1 to side 2 (anchor chord (0,3)):
  CHECK(strip_vector(m, Arc{ArcKind::Chord, 0, 3}) == QVec{1, -1, -1});
  // Compact arc side 1 - side 2 (chord (1,3)):
  CHECK(strip_vector(m, Arc{ArcKind::Chord, 1, 3}) ==
        QVec{Q(-1) / 4, Q(-5) / 4, Q(1) / 4});
  // Compact arc side 2 - side 3 (chord (3,5)):
  CHECK(strip_vector(m, Arc{ArcKind::Chord, 3, 5}) == QVec{0, 0, -1});

  // Maximal simplex {(0,3), (1,3), (3,5)}: exact determinant 3/2.
  QMatrix mat;
  mat.push_row(strip_vector(m, Arc{ArcKind::Chord, 0, 3}));
  mat.push_row(strip_vector(m, Arc{ArcKind::Chord, 1, 3}));
  mat.push_row(strip_vector(m, Arc{ArcKind::Chord, 3, 5}));
  CHECK(det(mat) == Q(3) / 2);

  // Parabolic width scales with the decorating horoball: h0 = 2 halves the
  // ray's vector, leaves the side-side arcs unchanged.
  DecoratedMetric m2{s, {0, 1, 0}, {2, 1, 1}, 0};
  CHECK(strip_vector(m2, Arc{ArcKind::Chord, 0, 3}) ==
        QVec{Q(1) / 2, Q(-1) / 2, Q(-1) / 2});
  CHECK(strip_vector(m2, Arc{ArcKind::Chord, 1, 3}) ==
        QVec{Q(-1) / 4, Q(-5) / 4, Q(1) / 4});
}

TEST_CASE("strip_vector: frozen punctured monogon oracle") {
  const auto s = make_all(Family::PuncturedPolygon, 1);
  DecoratedMetric m{s, {0}, {1}, 0};
  // Single arc: full wrap at the side anchor, chord (1,3) in the 2-anchor
  // line model.
  const auto arcs = enumerate_arcs(s);
  REQUIRE(arcs.size() == 1);
  CHECK(arcs[0] == Arc{ArcKind::Chord, 1, 3});
  CHECK(strip_vector(m, arcs[0]) == QVec{-1});
  const auto mono = length_differential(m, Beta{BetaKind::Connection, false, 0, 0, 1});
  CHECK(dot(mono.row, strip_vector(m, arcs[0])) == Q(2));
}

TEST_CASE("strip_vector: frozen crown oracles (n=1, q=4)") {
  const auto s = make_all(Family::Crown, 1);
  DecoratedMetric m{s, {1}, {1}, 4};
  m.validate();
  const Arc ray_tocore{ArcKind::ToCore, 0, -1};   // from the spike
  const Arc side_tocore{ArcKind::ToCore, 1, -1};  // from the side
  const Arc wrap_arc{ArcKind::Chord, 1, 3};       // side anchor, full wrap

  CHECK(strip_vector(m, ray_tocore) == QVec{2, Q(5) / 3});
  CHECK(strip_vector(m, side_tocore) == QVec{1, 0});
  CHECK(strip_vector(m, wrap_arc) == QVec{0, Q(-25) / 16});

  const Beta mono{BetaKind::Connection, false, 0, 0, 1};
  const auto dmono = length_differential(m, mono);
  const auto dloop = length_differential(m, make_loop());
  CHECK(dmono.row == QVec{Q(5) / 3, -2});

  // Sign table: the ray shares the spike with the monogon (disjoint), both
  // to-core arcs cross the loop, the wrapped side arc crosses the monogon
  // but not the loop.
  CHECK(dot(dmono.row, strip_vector(m, ray_tocore)) == Q(0));
  CHECK(dot(dloop.row, strip_vector(m, ray_tocore)) == Q(2));
  CHECK(dot(dmono.row, strip_vector(m, side_tocore)) == Q(5) / 3);
  CHECK(dot(dloop.row, strip_vector(m, side_tocore)) == Q(1));
  CHECK(dot(dmono.row, strip_vector(m, wrap_arc)) == Q(25) / 8);
  CHECK(dot(dloop.row, strip_vector(m, wrap_arc)) == Q(0));

  // Both maximal simplices give nonzero determinants.
  QMatrix m1;
  m1.push_row(strip_vector(m, ray_tocore));
  m1.push_row(strip_vector(m, side_tocore));
  CHECK(det(m1) == Q(-5) / 3);
  QMatrix m2;
  m2.push_row(strip_vector(m, wrap_arc));
  m2.push_row(strip_vector(m, side_tocore));
  CHECK(det(m2) == Q(25) / 16);
}

TEST_CASE("strip_vector sign table equals the combinatorial crossing oracle") {
  const std::vector<SurfaceSpec> specs = {
      make_all(Family::Polygon, 4),
      make_all(Family::Polygon, 5),
      make(Family::Polygon, 5, "10110"),
      make_all(Family::PuncturedPolygon, 2),
      make(Family::PuncturedPolygon, 3, "011"),
      make_all(Family::Crown, 2),
      make(Family::Crown, 2, "10"),
      make_all(Family::Crown, 3),
  };
  for (const auto& s : specs) {
    for (std::uint64_t seed : {1u, 2u}) {
      const auto m = random_metric(s, seed);
      for (const auto& a : enumerate_arcs(s)) {
        for (const auto& b : enumerate_simple_betas(s)) {
          const int sign = geometric_crossing_sign(m, a, b);
          const bool crosses = !arc_beta_disjoint(a, b, s);
          CAPTURE(family_name(s.family));
          CAPTURE(arc_to_string(s, a));
          CAPTURE(beta_to_string(s, b));
          CHECK(sign == (crosses ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("strip_vector: waist choice moves the vector but not the sign table") {
  const auto s = make_all(Family::Polygon, 4);
  const auto m = random_metric(s, 17);
  const std::vector<Q> waists = {Q(1) / 2, Q(1) / 3, Q(7) / 8};
  for (const auto& a : enumerate_arcs(s)) {
    for (const auto& b : enumerate_simple_betas(s)) {
      const bool crosses = !arc_beta_disjoint(a, b, s);
      const auto row = length_differential(m, b).row;
      for (const auto& w : waists) {
        const Q pairing = dot(row, strip_vector(m, a, w));
        CHECK(sgn(pairing) == (crosses ? 1 : 0));
      }
    }
  }
  CHECK_THROWS_AS((void)strip_vector(m, enumerate_arcs(s)[0], Q(0)), std::invalid_argument);
  CHECK_THROWS_AS((void)strip_vector(m, enumerate_arcs(s)[0], Q(3) / 2), std::invalid_argument);
}

TEST_CASE("strip vectors over every maximal simplex form a basis") {
  const std::vector<SurfaceSpec> specs = {
      make_all(Family::Polygon, 4),
      make_all(Family::Polygon, 5),
      make(Family::Polygon, 6, "101101"),
      make_all(Family::PuncturedPolygon, 2),
      make(Family::PuncturedPolygon, 3, "110"),
      make_all(Family::Crown, 2),
      make(Family::Crown, 3, "100"),
  };
  for (const auto& s : specs) {
    const auto arcs = enumerate_arcs(s);
    const auto maxes = maximal_simplices(s, arcs);
    REQUIRE(!maxes.empty());
    for (std::uint64_t seed : {1u, 5u}) {
      const auto m = random_metric(s, seed);
      for (const auto& simplex : maxes) {
        REQUIRE(static_cast<int>(simplex.size()) == s.dim());
        QMatrix mat;
        for (int idx : simplex)
          mat.push_row(strip_vector(m, arcs[static_cast<std::size_t>(idx)]));
        CHECK(det(mat) != 0);
      }
    }
  }
}

TEST_CASE("strip_map: rays, interior points, boundary points, errors") {
  const auto s = make_all(Family::Polygon, 4);
  const auto m = random_metric(s, 23);
  const auto arcs = enumerate_arcs(s);
  const auto maxes = maximal_simplices(s, arcs);
  REQUIRE(!maxes.empty());

  // Single-arc support: the projectivized strip vector.
  const Arc a0 = arcs[0];
  CHECK(strip_map(m, {a0}, {Q(3)}) == primitive_direction(strip_vector(m, a0)));

  // Barycenter of a maximal simplex: strictly admissible (interior).
  const auto& mx = maxes.front();
  std::vector<Arc> simplex_arcs;
  for (int i : mx) simplex_arcs.push_back(arcs[static_cast<std::size_t>(i)]);
  const auto v =
      strip_map(m, simplex_arcs, std::vector<Q>(simplex_arcs.size(), Q(1)));
  for (const auto& b : enumerate_simple_betas(s))
    CHECK(dot(length_differential(m, b).row, v) > 0);

  // A single arc is a non-filling simplex here: some functional vanishes.
  const auto v0 = strip_map(m, {a0}, {Q(1)});
  bool some_zero = false;
  for (const auto& b : enumerate_simple_betas(s))
    if (dot(length_differential(m, b).row, v0) == 0) some_zero = true;
  CHECK(some_zero);

  // Errors: crossing support, duplicate arc, negative weight, zero point,
  // size mismatch.
  Arc crossing_a, crossing_b;
  bool found = false;
  for (const auto& x : arcs) {
    for (const auto& y : arcs)
      if (arcs_cross(s, x, y)) {
        crossing_a = x;
        crossing_b = y;
        found = true;
        break;
      }
    if (found) break;
  }
  REQUIRE(found);
  CHECK_THROWS_AS((void)strip_map(m, {crossing_a, crossing_b}, {Q(1), Q(1)}), NotASimplex);
  CHECK_THROWS_AS((void)strip_map(m, {a0, a0}, {Q(1), Q(1)}), NotASimplex);
  CHECK_THROWS_AS((void)strip_map(m, {a0}, {Q(-1)}), NotASimplex);
  CHECK_THROWS_AS((void)strip_map(m, {a0}, {Q(0)}), NotASimplex);
  CHECK_THROWS_AS((void)strip_map(m, {a0}, {Q(1), Q(1)}), NotASimplex);
  // Zero-weight crossing arcs are outside the support and harmless.
  CHECK(strip_map(m, {crossing_a, crossing_b}, {Q(1), Q(0)}) ==
        primitive_direction(strip_vector(m, crossing_a)));
}

TEST_CASE("strip_map is weakly admissible on every simplex (spot check)") {
  const std::vector<SurfaceSpec> specs = {
      make_all(Family::Polygon, 5),
      make_all(Family::PuncturedPolygon, 2),
      make_all(Family::Crown, 2),
  };
  for (const auto& s : specs) {
    const auto m = random_metric(s, 31);
    const auto arcs = enumerate_arcs(s);
    // Every disjoint pair with a couple of weight choices.
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (!arcs_disjoint(arcs[i], arcs[j], s)) continue;
        for (const auto& w : {std::vector<Q>{1, 1}, std::vector<Q>{Q(1) / 3, Q(5)}}) {
          const auto v = strip_map(m, {arcs[i], arcs[j]}, w);
          for (const auto& b : enumerate_simple_betas(s))
            CHECK(dot(length_differential(m, b).row, v) >= 0);
        }
      }
  }
}
