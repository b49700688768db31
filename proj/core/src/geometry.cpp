#include "stripdef/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stripdef {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require_orientable(const SurfaceSpec& s) {
  if (s.family == Family::Moebius)
    throw UnsupportedFamily(
        "Moebius strips carry no rational half-plane chart here; their "
        "predictions are checked combinatorially");
}

Q pow_q(const Q& q, int k) {
  Q r(1);
  for (int i = 0, e = k < 0 ? -k : k; i < e; ++i) r *= q;
  return k >= 0 ? r : Q(1) / r;
}

// ---------------------------------------------------------------------------
// Killing fields: K = [[a, b], [c, -a]], boundary flow phi(x) = b + 2ax - cx^2,
// horoball-size derivative at a fixed finite base point phi'(x) = 2a - 2cx
// (and -2a at the fixed point infinity, which requires c = 0).
// ---------------------------------------------------------------------------

struct Kill {
  Q a = 0, b = 0, c = 0;
};

Kill operator+(const Kill& l, const Kill& r) {
  return {l.a + r.a, l.b + r.b, l.c + r.c};
}

Q phi(const Kill& k, const Q& x) { return k.b + 2 * k.a * x - k.c * x * x; }
Q dphi(const Kill& k, const Q& x) { return 2 * k.a - 2 * k.c * x; }

/// Unit-speed hyperbolic translation along the axis from the repelling to the
/// attracting ideal point.
Kill translate_unit(bool rep_inf, const Q& rep, bool att_inf, const Q& att) {
  if (rep_inf) return {Q(-1) / 2, att, 0};
  if (att_inf) return {Q(1) / 2, -rep, 0};
  const Q den = att - rep;
  return {(rep + att) / 2 / den, -rep * att / den, Q(1) / den};
}

/// phi(z) = C (z - x)^2: parabolic fixing x; |C| = 1/h is unit horocyclic
/// width measured on the horoball of size h at x.
Kill parabolic_at(const Q& x, const Q& C) { return {-C * x, C * x * x, -C}; }

/// Transport by z -> z + k (PuncturedPolygon holonomy powers).
Kill shift(const Kill& K, const Q& k) {
  return {K.a + K.c * k, K.b - 2 * K.a * k - K.c * k * k, K.c};
}

/// Transport by z -> lam z (Crown holonomy powers).
Kill scale(const Kill& K, const Q& lam) { return {K.a, K.b * lam, K.c / lam}; }

/// Generator of the strip along a compact chord with ideal feet fa < fb:
/// unit translation along the perpendicular whose inner foot sits at the
/// affine parameter `waist` between the feet, attracting that inner foot
/// (every lift's far side is its interval side; the base region sits outside).
Kill chord_generator(const Q& fa, const Q& fb, const Q& waist) {
  const Q p = fa + waist * (fb - fa);
  const Q c = (fa + fb) / 2;
  if (p == c) return translate_unit(true, 0, false, p);
  const Q rho2 = (fb - fa) * (fb - fa) / 4;
  return translate_unit(false, c + rho2 / (p - c), false, p);
}

/// Generator of the strip along a ray landing at the spike lift xs whose
/// horoball has size hs, the other ideal foot at `other`: unit-width
/// parabolic, signed to push the interval side away from the ray.
Kill ray_generator(const Q& xs, const Q& hs, const Q& other) {
  const Q C = (xs < other ? Q(-1) : Q(1)) / hs;
  return parabolic_at(xs, C);
}

// ---------------------------------------------------------------------------
// Arc feet in the chart
// ---------------------------------------------------------------------------

struct Foot {
  bool inf = false;   // Polygon spike at infinity only
  Q x = 0;
  int spike = -1;     // >= 0 when the foot is a spike lift (ray end)
  Q hlift = 0;        // size of the horoball at that spike lift
};

/// Canonical rational point inside the ideal interval of a boundary side.
Q side_foot(const DecoratedMetric& m, int side) {
  const int n = m.surface.n;
  const auto& pos = m.pos;
  switch (m.surface.family) {
    case Family::Polygon:
      if (side == n - 2) return pos[static_cast<std::size_t>(n - 2)] + 1;
      if (side == n - 1) return Q(-1);
      return (pos[static_cast<std::size_t>(side)] + pos[static_cast<std::size_t>(side + 1)]) / 2;
    case Family::PuncturedPolygon: {
      const Q next = side + 1 == n ? pos[0] + 1 : pos[static_cast<std::size_t>(side + 1)];
      return (pos[static_cast<std::size_t>(side)] + next) / 2;
    }
    case Family::Crown: {
      const Q next = side + 1 == n ? m.q * pos[0] : pos[static_cast<std::size_t>(side + 1)];
      return (pos[static_cast<std::size_t>(side)] + next) / 2;
    }
    default:
      throw UnsupportedFamily("no chart for this family");
  }
}

/// Foot of an anchor slot (slot = anchor position plus holonomy wraps).
Foot anchor_foot(const DecoratedMetric& m, int slot) {
  const int period = m.surface.m();
  if (slot < 0) bad("negative anchor slot");
  const int w = slot / period;
  const auto anchors = m.surface.anchors();
  const auto& info = anchors[static_cast<std::size_t>(slot % period)];
  Foot f;
  if (info.is_spike) {
    f.spike = info.index;
    f.hlift = m.h[static_cast<std::size_t>(info.index)];
    if (m.spike_at_infinity(info.index)) {
      f.inf = true;
      return f;
    }
    f.x = m.pos[static_cast<std::size_t>(info.index)];
  } else {
    f.x = side_foot(m, info.index);
  }
  if (w != 0) {
    switch (m.surface.family) {
      case Family::PuncturedPolygon:
        f.x += w;
        break;
      case Family::Crown: {
        const Q lam = pow_q(m.q, w);
        f.x *= lam;
        f.hlift *= lam;
        break;
      }
      default:
        bad("wrapped anchor slot on a disk family");
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Shared connection checks
// ---------------------------------------------------------------------------

void check_beta(const DecoratedMetric& m, const Beta& b) {
  require_orientable(m.surface);
  if (b.kind == BetaKind::Loop) {
    if (m.surface.family != Family::Crown) bad("only the crown carries the loop");
    return;
  }
  if (b.crosscore) bad("core-crossing connections live on the Moebius strip");
  const int n = m.surface.n;
  if (b.i < 0 || b.j < 0 || b.i >= n || b.j >= n) bad("connection spike out of range");
  if (!m.surface.decorated(b.i) || !m.surface.decorated(b.j))
    throw UndecoratedEndpoint("connection endpoint at an undecorated spike");
  if (m.surface.family == Family::Polygon) {
    if (b.wrap != 0) bad("polygon connections cannot wrap");
    if (b.i == b.j) bad("degenerate connection");
  } else if (b.i == b.j && b.wrap == 0) {
    bad("degenerate connection");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Decorated points and the Moebius action
// ---------------------------------------------------------------------------

Q lambda_exp(const DecoratedPoint& p1, const DecoratedPoint& p2) {
  if (!(p1.h > 0) || !(p2.h > 0)) bad("horoball sizes must be positive");
  if (p1.infinite && p2.infinite) bad("two horoballs at infinity never connect");
  if (p1.infinite || p2.infinite) return Q(1) / (p1.h * p2.h);
  if (p1.x == p2.x) bad("coincident ideal points");
  const Q d = p1.x - p2.x;
  return d * d / (p1.h * p2.h);
}

DecoratedPoint moebius_apply(const MoebiusMap& g, const DecoratedPoint& p) {
  const Q det = g.det();
  if (!(det > 0)) bad("Moebius map must be orientation preserving");
  if (p.infinite) {
    if (g.c == 0) return {true, 0, p.h * g.d * g.d / det};
    return {false, g.a / g.c, p.h * det / (g.c * g.c)};
  }
  const Q den = g.c * p.x + g.d;
  if (den == 0) return {true, 0, p.h * g.c * g.c / det};
  return {false, (g.a * p.x + g.b) / den, p.h * det / (den * den)};
}

// ---------------------------------------------------------------------------
// DecoratedMetric
// ---------------------------------------------------------------------------

bool DecoratedMetric::spike_at_infinity(int spike) const {
  return surface.family == Family::Polygon && spike == surface.n - 1;
}

int DecoratedMetric::coord_count() const { return surface.dim(); }

int DecoratedMetric::t_index() const {
  return surface.family == Family::Crown ? 0 : -1;
}

int DecoratedMetric::pos_index(int spike) const {
  switch (surface.family) {
    case Family::Polygon:
      return spike >= 2 && spike <= surface.n - 2 ? spike - 2 : -1;
    case Family::PuncturedPolygon:
      return spike >= 1 ? spike - 1 : -1;
    case Family::Crown:
      return spike >= 1 ? spike : -1;  // slot 0 is dt
    default:
      return -1;
  }
}

int DecoratedMetric::u_index(int spike) const {
  if (spike < 0 || spike >= surface.n || !surface.decorated(spike)) return -1;
  int base = 0;
  switch (surface.family) {
    case Family::Polygon: base = surface.n - 3; break;
    case Family::PuncturedPolygon: base = surface.n - 1; break;
    case Family::Crown: base = surface.n; break;  // dt plus n-1 positions
    default: return -1;
  }
  int rank = 0;
  for (int k = 0; k < spike; ++k)
    if (surface.decorated(k)) ++rank;
  return base + rank;
}

std::vector<std::string> DecoratedMetric::coordinate_names() const {
  std::vector<std::string> names;
  if (t_index() >= 0) names.push_back("dt");
  for (int k = 0; k < surface.n; ++k)
    if (pos_index(k) >= 0) names.push_back("dx" + std::to_string(k + 1));
  for (int k = 0; k < surface.n; ++k)
    if (u_index(k) >= 0) names.push_back("du" + std::to_string(k + 1));
  return names;
}

void DecoratedMetric::validate() const {
  require_orientable(surface);
  const int n = surface.n;
  if (static_cast<int>(pos.size()) != n || static_cast<int>(h.size()) != n)
    bad("one position and one horoball size per spike required");
  for (int i = 0; i < n; ++i)
    if (surface.decorated(i) && !(h[static_cast<std::size_t>(i)] > 0))
      bad("decorated spikes need positive horoball size");
  switch (surface.family) {
    case Family::Polygon:
      if (pos[0] != 0 || pos[1] != 1) bad("polygon chart fixes x1 = 0, x2 = 1");
      for (int k = 1; k + 1 <= n - 2; ++k)
        if (!(pos[static_cast<std::size_t>(k)] < pos[static_cast<std::size_t>(k + 1)]))
          bad("polygon positions must increase");
      break;
    case Family::PuncturedPolygon:
      if (pos[0] != 0) bad("punctured chart fixes x1 = 0");
      for (int k = 0; k + 1 < n; ++k)
        if (!(pos[static_cast<std::size_t>(k)] < pos[static_cast<std::size_t>(k + 1)]))
          bad("punctured positions must increase");
      if (!(pos[static_cast<std::size_t>(n - 1)] < 1)) bad("punctured positions lie below 1");
      break;
    case Family::Crown:
      if (!(q > 1)) bad("crown needs holonomy multiplier q > 1");
      if (pos[0] != 1) bad("crown chart fixes x1 = 1");
      for (int k = 0; k + 1 < n; ++k)
        if (!(pos[static_cast<std::size_t>(k)] < pos[static_cast<std::size_t>(k + 1)]))
          bad("crown positions must increase");
      if (!(pos[static_cast<std::size_t>(n - 1)] < q)) bad("crown positions lie below q");
      break;
    default:
      break;
  }
  const int names = static_cast<int>(coordinate_names().size());
  if (names != coord_count()) throw std::logic_error("chart coordinate count drifted");
}

DecoratedMetric random_metric(const SurfaceSpec& s, std::uint64_t seed) {
  require_orientable(s);
  std::seed_seq sq{static_cast<unsigned>(seed & 0xFFFFFFFFu),
                   static_cast<unsigned>(seed >> 32),
                   static_cast<unsigned>(s.family),
                   static_cast<unsigned>(s.n),
                   static_cast<unsigned>(s.r())};
  std::mt19937_64 rng(sq);
  const auto rint = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int n = s.n;
  DecoratedMetric m{s, std::vector<Q>(static_cast<std::size_t>(n), Q(0)),
                    std::vector<Q>(static_cast<std::size_t>(n), Q(1)), Q(0)};
  switch (s.family) {
    case Family::Polygon:
      m.pos[0] = 0;
      if (n > 1) m.pos[1] = 1;
      for (int k = 2; k <= n - 2; ++k)
        m.pos[static_cast<std::size_t>(k)] =
            m.pos[static_cast<std::size_t>(k - 1)] + Q(rint(1, 12)) / rint(1, 8);
      break;
    case Family::PuncturedPolygon:
    case Family::Crown: {
      // Subdivide the fundamental interval by random positive integer steps.
      std::vector<long> partial(static_cast<std::size_t>(n), 0);
      long total = 0;
      for (int k = 0; k < n; ++k) {
        total += rint(1, 9);
        partial[static_cast<std::size_t>(k)] = total;
      }
      total += rint(1, 9);
      if (s.family == Family::PuncturedPolygon) {
        m.pos[0] = 0;
        for (int k = 1; k < n; ++k)
          m.pos[static_cast<std::size_t>(k)] = Q(partial[static_cast<std::size_t>(k - 1)]) / total;
      } else {
        m.q = 1 + Q(rint(1, 12)) / rint(1, 4);
        m.pos[0] = 1;
        for (int k = 1; k < n; ++k)
          m.pos[static_cast<std::size_t>(k)] =
              1 + (m.q - 1) * partial[static_cast<std::size_t>(k - 1)] / total;
      }
      break;
    }
    default:
      break;
  }
  for (int i = 0; i < n; ++i)
    m.h[static_cast<std::size_t>(i)] = Q(rint(1, 12)) / rint(1, 8);
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Lengths
// ---------------------------------------------------------------------------

Q length_exp(const DecoratedMetric& m, const Beta& beta) {
  check_beta(m, beta);
  if (beta.kind == BetaKind::Loop) return m.q;
  const auto hi = m.h[static_cast<std::size_t>(beta.i)];
  const auto hj = m.h[static_cast<std::size_t>(beta.j)];
  switch (m.surface.family) {
    case Family::Polygon: {
      if (m.spike_at_infinity(beta.i) || m.spike_at_infinity(beta.j))
        return Q(1) / (hi * hj);
      const Q d = m.pos[static_cast<std::size_t>(beta.j)] - m.pos[static_cast<std::size_t>(beta.i)];
      return d * d / (hi * hj);
    }
    case Family::PuncturedPolygon: {
      const Q d = m.pos[static_cast<std::size_t>(beta.j)] + beta.wrap -
                  m.pos[static_cast<std::size_t>(beta.i)];
      return d * d / (hi * hj);
    }
    case Family::Crown: {
      // The wrapped endpoint's horoball size scales with the holonomy power.
      const Q qw = pow_q(m.q, beta.wrap);
      const Q d = m.pos[static_cast<std::size_t>(beta.j)] * qw -
                  m.pos[static_cast<std::size_t>(beta.i)];
      return d * d / (hi * hj * qw);
    }
    default:
      throw UnsupportedFamily("no chart for this family");
  }
}

double horoconnection_length(const DecoratedMetric& m, const Beta& beta) {
  return std::log(static_cast<double>(length_exp(m, beta)));
}

LengthFunctional length_differential(const DecoratedMetric& m, const Beta& beta) {
  check_beta(m, beta);
  LengthFunctional f{beta, QVec(static_cast<std::size_t>(m.coord_count()), Q(0))};
  if (beta.kind == BetaKind::Loop) {
    f.row[static_cast<std::size_t>(m.t_index())] = 1;
    return f;
  }
  const int i = beta.i, j = beta.j;
  const auto at = [&](int idx) -> Q& { return f.row[static_cast<std::size_t>(idx)]; };
  if (m.u_index(i) >= 0) at(m.u_index(i)) -= 1;
  if (m.u_index(j) >= 0) at(m.u_index(j)) -= 1;
  if (m.surface.family == Family::Polygon &&
      (m.spike_at_infinity(i) || m.spike_at_infinity(j)))
    return f;  // l = -u_i - u_j: no position dependence

  Q delta, tau;
  switch (m.surface.family) {
    case Family::Polygon:
      delta = m.pos[static_cast<std::size_t>(j)] - m.pos[static_cast<std::size_t>(i)];
      tau = 1;
      break;
    case Family::PuncturedPolygon:
      delta = m.pos[static_cast<std::size_t>(j)] + beta.wrap - m.pos[static_cast<std::size_t>(i)];
      tau = 1;
      break;
    case Family::Crown: {
      const Q qw = pow_q(m.q, beta.wrap);
      delta = m.pos[static_cast<std::size_t>(j)] * qw - m.pos[static_cast<std::size_t>(i)];
      tau = qw;
      at(m.t_index()) += 2 * beta.wrap * m.pos[static_cast<std::size_t>(j)] * qw / delta -
                         beta.wrap;
      break;
    }
    default:
      throw UnsupportedFamily("no chart for this family");
  }
  if (m.pos_index(i) >= 0) at(m.pos_index(i)) += -2 / delta;
  if (m.pos_index(j) >= 0) at(m.pos_index(j)) += 2 * tau / delta;
  return f;
}

// ---------------------------------------------------------------------------
// Strip deformations
// ---------------------------------------------------------------------------

QVec strip_vector(const DecoratedMetric& m, const Arc& arc, const Q& waist) {
  m.validate();
  if (!(waist > 0) || !(waist < 1)) bad("waist parameter must lie strictly in (0,1)");
  const SurfaceSpec& s = m.surface;
  const int n = s.n;
  std::vector<Kill> field(static_cast<std::size_t>(n));
  Kill hol;   // crown holonomy derivative H
  Kill gauge;

  if (arc.kind == ArcKind::CrossCore)
    throw UnsupportedFamily("core-crossing arcs live on the Moebius strip");

  if (arc.kind == ArcKind::ToCore) {
    if (s.family != Family::Crown) bad("to-core arcs require a crown");
    const auto anchors = s.anchors();
    const auto& info = anchors.at(static_cast<std::size_t>(arc.a));
    Kill K0;
    Q xi;
    if (info.is_spike) {
      // Ray from the core to the spike: unit-width parabolic; the lift circle
      // through the spike separates exactly the spikes beyond it, and the
      // pushed (outer) side makes it the lift's right foot with far = outer.
      xi = m.pos[static_cast<std::size_t>(info.index)];
      K0 = parabolic_at(xi, Q(-1) / m.h[static_cast<std::size_t>(info.index)]);
    } else {
      // Compact arc meeting the core orthogonally: the canonical waist is the
      // core crossing, whose perpendicular is the core axis itself.
      xi = side_foot(m, info.index);
      K0 = Kill{Q(1) / 2, 0, 0};
    }
    for (int t = 0; t < n; ++t)
      if (m.pos[static_cast<std::size_t>(t)] > xi)
        field[static_cast<std::size_t>(t)] = field[static_cast<std::size_t>(t)] + K0;
    hol = K0;
  } else {
    const Foot A = anchor_foot(m, arc.a);
    const Foot B = anchor_foot(m, arc.b);
    if (A.spike >= 0 && B.spike >= 0) bad("arcs never join two spikes");
    const bool vertical = A.inf || B.inf;
    Kill K0;
    Q fa = 0, fb = 0, va = 0;
    if (vertical) {
      // Polygon ray to the spike at infinity: push the right half-plane.
      va = A.inf ? B.x : A.x;
      K0 = Kill{0, Q(1) / (A.inf ? A.hlift : B.hlift), 0};
    } else {
      fa = std::min(A.x, B.x);
      fb = std::max(A.x, B.x);
      if (A.spike >= 0 || B.spike >= 0) {
        const Foot& sp = A.spike >= 0 ? A : B;
        const Foot& ot = A.spike >= 0 ? B : A;
        K0 = ray_generator(sp.x, sp.hlift, ot.x);
      } else {
        K0 = chord_generator(fa, fb, waist);
      }
    }
    switch (s.family) {
      case Family::Polygon:
        for (int t = 0; t < n - 1; ++t) {
          const Q& x = m.pos[static_cast<std::size_t>(t)];
          if (vertical ? x > va : (fa < x && x < fb))
            field[static_cast<std::size_t>(t)] = field[static_cast<std::size_t>(t)] + K0;
        }
        break;
      case Family::PuncturedPolygon:
        for (int t = 0; t < n; ++t) {
          const Q& x = m.pos[static_cast<std::size_t>(t)];
          for (int k = -3; k <= 3; ++k)
            if (fa + k < x && x < fb + k)
              field[static_cast<std::size_t>(t)] =
                  field[static_cast<std::size_t>(t)] + shift(K0, Q(k));
        }
        break;
      case Family::Crown:
        for (int t = 0; t < n; ++t) {
          const Q& x = m.pos[static_cast<std::size_t>(t)];
          for (int k = -5; k <= 5; ++k) {
            const Q lam = pow_q(m.q, k);
            if (fa * lam < x && x < fb * lam)
              field[static_cast<std::size_t>(t)] =
                  field[static_cast<std::size_t>(t)] + scale(K0, lam);
          }
        }
        break;
      default:
        throw UnsupportedFamily("no chart for this family");
    }
  }

  // Re-gauge-fix: add the global Killing field restoring the chart slice.
  switch (s.family) {
    case Family::Polygon: {
      gauge.b = -phi(field[0], m.pos[0]);
      gauge.c = -field[static_cast<std::size_t>(n - 1)].c;
      gauge.a = (-phi(field[1], m.pos[1]) - gauge.b + gauge.c) / 2;
      break;
    }
    case Family::PuncturedPolygon: {
      // The holonomy z -> z+1 is preserved exactly; only translations remain.
      gauge.b = -phi(field[0], m.pos[0]);
      break;
    }
    case Family::Crown: {
      // Keep the deformed holonomy diagonal (axis fixed), then pin x1 = 1.
      gauge.b = hol.b / (m.q - 1);
      gauge.c = -hol.c * m.q / (m.q - 1);
      gauge.a = (-phi(field[0], m.pos[0]) - gauge.b + gauge.c) / 2;
      break;
    }
    default:
      throw UnsupportedFamily("no chart for this family");
  }

  QVec out(static_cast<std::size_t>(m.coord_count()), Q(0));
  if (s.family == Family::Crown) out[static_cast<std::size_t>(m.t_index())] = 2 * hol.a;
  for (int t = 0; t < n; ++t) {
    const Kill tot = field[static_cast<std::size_t>(t)] + gauge;
    const int pi = m.pos_index(t);
    const int ui = m.u_index(t);
    if (m.spike_at_infinity(t)) {
      if (tot.c != 0) throw std::logic_error("gauge failed to fix infinity");
      if (ui >= 0) out[static_cast<std::size_t>(ui)] = -2 * tot.a;
      continue;
    }
    const Q& x = m.pos[static_cast<std::size_t>(t)];
    if (pi >= 0) out[static_cast<std::size_t>(pi)] = phi(tot, x);
    if (ui >= 0) out[static_cast<std::size_t>(ui)] = dphi(tot, x);
  }
  return out;
}

QVec strip_map(const DecoratedMetric& m, const std::vector<Arc>& arcs,
               const std::vector<Q>& weights) {
  m.validate();
  if (arcs.size() != weights.size())
    throw NotASimplex("one weight per arc required");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (weights[i] < 0) throw NotASimplex("weights must be nonnegative");
    if (weights[i] > 0) support.push_back(i);
  }
  if (support.empty()) throw NotASimplex("the zero point has no direction");
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (!arcs_disjoint(arcs[support[a]], arcs[support[b]], m.surface))
        throw NotASimplex("support arcs must be distinct and pairwise disjoint");

  QVec v(static_cast<std::size_t>(m.coord_count()), Q(0));
  for (std::size_t i : support) {
    const QVec f = strip_vector(m, arcs[i]);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += weights[i] * f[k];
  }
  v = primitive_direction(v);
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || x != 0;
  if (!nonzero) throw std::logic_error("strip map produced the zero direction");
  for (const auto& b : enumerate_simple_betas(m.surface))
    if (dot(length_differential(m, b).row, v) < 0)
      throw std::logic_error("strip map left the weakly admissible cone");
  return v;
}

int geometric_crossing_sign(const DecoratedMetric& m, const Arc& arc,
                            const Beta& beta) {
  return sgn(dot(length_differential(m, beta).row, strip_vector(m, arc)));
}

}  // namespace stripdef
