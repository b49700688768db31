#include "stripdef/cone.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace stripdef {

namespace {

// ---------------------------------------------------------------------------
// Quotient by the lineality space L = common kernel of the rows. The cone
// {v : rows >= 0} equals preimage of a POINTED cone in R^d, d = rank(rows):
// coordinates y = (g_1.v, ..., g_d.v) for chosen independent rows g_k, with a
// section W (columns w_k, G W = I) lifting y back to an ambient representative.
// ---------------------------------------------------------------------------

struct Quotient {
  int d = 0;                      // rank of the rows
  std::vector<QVec> lin_basis;    // basis of L (ambient)
  std::vector<QVec> sections;     // w_1..w_d with g_i . w_k = delta_ik
  std::vector<QVec> qrows;        // rows expressed in quotient coordinates
};

Quotient make_quotient(const ConeHRep& h) {
  Quotient qt;
  QMatrix G(0, static_cast<std::size_t>(h.dim));
  for (const auto& r : h.rows) {
    QMatrix trial = G;
    trial.push_row(r.coeffs);
    if (rank(trial) == trial.rows) G = std::move(trial);
  }
  qt.d = static_cast<int>(G.rows);
  qt.lin_basis = kernel_basis(G);
  if (qt.d > 0) {
    // Solve G W = I via one reduction of the augmented system [G | I].
    QMatrix aug(G.rows, G.cols + G.rows);
    for (std::size_t i = 0; i < G.rows; ++i) {
      for (std::size_t j = 0; j < G.cols; ++j) aug.at(i, j) = G.at(i, j);
      aug.at(i, G.cols + i) = 1;
    }
    const auto pivots = row_reduce(aug);
    for (std::size_t k = 0; k < G.rows; ++k) {
      QVec w(static_cast<std::size_t>(h.dim), Q(0));
      for (std::size_t r = 0; r < pivots.size(); ++r)
        w[pivots[r]] = aug.at(r, G.cols + k);
      qt.sections.push_back(std::move(w));
    }
    for (const auto& r : h.rows) {
      QVec qr(static_cast<std::size_t>(qt.d));
      for (int k = 0; k < qt.d; ++k)
        qr[static_cast<std::size_t>(k)] = dot(r.coeffs, qt.sections[static_cast<std::size_t>(k)]);
      qt.qrows.push_back(std::move(qr));
    }
  }
  return qt;
}

QVec lift(const Quotient& qt, const QVec& y, int ambient) {
  QVec v(static_cast<std::size_t>(ambient), Q(0));
  for (int k = 0; k < qt.d; ++k)
    for (int i = 0; i < ambient; ++i)
      v[static_cast<std::size_t>(i)] +=
          y[static_cast<std::size_t>(k)] * qt.sections[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  return v;
}

bool feasible(const Quotient& qt, const QVec& y) {
  for (const auto& qr : qt.qrows)
    if (dot(qr, y) < 0) return false;
  return true;
}

/// Candidate extreme ray from a row subset: accepted when the subset's
/// common kernel is a line with a feasible orientation.
void try_candidate(const Quotient& qt, const std::vector<int>& subset, int ambient,
                   std::set<QVec>& out) {
  QMatrix M(0, static_cast<std::size_t>(qt.d));
  for (int i : subset) M.push_row(qt.qrows[static_cast<std::size_t>(i)]);
  const auto kb = kernel_basis(M);
  if (kb.size() != 1) return;
  QVec y = kb[0];
  if (!feasible(qt, y)) {
    for (auto& x : y) x = -x;
    if (!feasible(qt, y)) return;
  }
  out.insert(primitive_direction(lift(qt, y, ambient)));
}

int rank_of_rays(const std::vector<QVec>& rays, const std::vector<int>& which,
                 int ambient) {
  if (which.empty()) return 0;
  QMatrix M(0, static_cast<std::size_t>(ambient));
  for (int r : which) M.push_row(rays[static_cast<std::size_t>(r)]);
  return static_cast<int>(rank(M));
}

/// Shared back end: grade the given ray sets into the face list.
ConeLattice assemble(const ConeHRep& h, const Quotient& qt,
                     std::vector<QVec> rays,
                     const std::set<std::vector<int>>& raysets) {
  ConeLattice lat;
  lat.ambient_dim = h.dim;
  lat.rows = h.rows;
  lat.lineality_dim = static_cast<int>(qt.lin_basis.size());
  lat.lineality_basis = qt.lin_basis;
  lat.properly_convex = lat.lineality_dim == 0;
  lat.rays = std::move(rays);
  std::vector<int> all(lat.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  lat.cone_dim = rank_of_rays(lat.rays, all, lat.ambient_dim) + lat.lineality_dim;
  for (const auto& vs : raysets) {
    ConeFace f;
    f.verts = vs;
    f.dim = rank_of_rays(lat.rays, vs, lat.ambient_dim) + lat.lineality_dim;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
      bool tight = true;
      for (int r : vs)
        if (dot(h.rows[i].coeffs, lat.rays[static_cast<std::size_t>(r)]) != 0) {
          tight = false;
          break;
        }
      if (tight) f.tight.push_back(static_cast<int>(i));
    }
    lat.faces.push_back(std::move(f));
  }
  std::sort(lat.faces.begin(), lat.faces.end(),
            [](const ConeFace& a, const ConeFace& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.verts < b.verts;
            });
  for (std::size_t i = 0; i < lat.faces.size(); ++i)
    if (lat.faces[i].dim == lat.cone_dim - 1) lat.facets.push_back(static_cast<int>(i));
  return lat;
}

std::set<std::vector<int>> closure_of_row_faces(const ConeHRep& h,
                                                const std::vector<QVec>& rays) {
  // Tight-ray sets per row; every face is an intersection of these with the
  // full set, so the meet closure is exactly the face family.
  std::vector<std::vector<int>> per_row(h.rows.size());
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (dot(h.rows[i].coeffs, rays[r]) == 0)
        per_row[i].push_back(static_cast<int>(r));
  std::vector<int> top(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) top[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{top};
  std::vector<std::vector<int>> frontier{top};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& cur : frontier)
      for (const auto& s : per_row) {
        std::vector<int> meet;
        std::set_intersection(cur.begin(), cur.end(), s.begin(), s.end(),
                              std::back_inserter(meet));
        if (seen.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  return seen;
}

Q binomial_capped(int n, int k, std::size_t cap) {
  if (k < 0 || k > n) return 0;
  Q c(1);
  for (int i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > Q(static_cast<long>(cap)) * 2) return Q(static_cast<long>(cap)) * 2;
  }
  return c;
}

}  // namespace

ConeHRep build_cone(int dim, const std::vector<LengthFunctional>& functionals) {
  ConeHRep h;
  h.dim = dim;
  for (const auto& f : functionals) {
    if (static_cast<int>(f.row.size()) != dim)
      throw DimensionMismatch("functional arity does not match the ambient dimension");
    QVec prim = primitive_direction(f.row);
    bool zero = true;
    for (const auto& x : prim) zero = zero && x == 0;
    if (zero) continue;  // vacuous constraint
    bool merged = false;
    for (auto& row : h.rows)
      if (row.coeffs == prim) {
        row.labels.push_back(f.beta);
        merged = true;
        break;
      }
    if (!merged) h.rows.push_back(ConeRow{std::move(prim), {f.beta}});
  }
  return h;
}

ConeHRep admissible_cone(const DecoratedMetric& m) {
  std::vector<LengthFunctional> fns;
  for (const auto& b : enumerate_simple_betas(m.surface))
    fns.push_back(length_differential(m, b));
  return build_cone(m.coord_count(), fns);
}

std::vector<LengthFunctional> wrapped_functionals(const DecoratedMetric& m,
                                                  int k_max) {
  std::vector<LengthFunctional> fns;
  for (const auto& b : enumerate_wrapped_betas(m.surface, k_max))
    fns.push_back(length_differential(m, b));
  return fns;
}

std::vector<int> ConeLattice::cone_f_vector() const {
  std::vector<int> f(static_cast<std::size_t>(cone_dim + 1), 0);
  for (const auto& face : faces) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

std::vector<int> ConeLattice::polytope_f_vector() const {
  const int top = cone_dim - lineality_dim - 1;  // polytope dimension
  if (top < 0) return {};
  std::vector<int> f(static_cast<std::size_t>(top), 0);
  for (const auto& face : faces) {
    const int p = face.dim - lineality_dim - 1;
    if (p >= 0 && p < top) ++f[static_cast<std::size_t>(p)];
  }
  return f;
}

ConeLattice face_lattice(const ConeHRep& h, std::size_t work_cap) {
  const Quotient qt = make_quotient(h);
  const int F = static_cast<int>(h.rows.size());
  std::set<QVec> ray_set;
  if (qt.d >= 1) {
    const int k = qt.d - 1;
    if (binomial_capped(F, k, work_cap) > Q(static_cast<long>(work_cap)))
      throw TooLarge("extreme-ray enumeration exceeds the work cap");
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    if (k == 0) {
      try_candidate(qt, subset, h.dim, ray_set);
    } else if (k <= F) {
      while (true) {
        try_candidate(qt, subset, h.dim, ray_set);
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == F - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  std::vector<QVec> rays(ray_set.begin(), ray_set.end());
  return assemble(h, qt, rays, closure_of_row_faces(h, rays));
}

ConeLattice brute_force_oracle(const ConeHRep& h) {
  if (h.dim > 5) throw TooLarge("brute-force oracle runs in dimension <= 5");
  if (h.rows.size() > 16) throw TooLarge("brute-force oracle takes at most 16 rows");
  const Quotient qt = make_quotient(h);
  const int F = static_cast<int>(h.rows.size());
  std::set<QVec> ray_set;
  for (std::uint32_t mask = 0; mask < (1u << F); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < F; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (qt.d >= 1) try_candidate(qt, subset, h.dim, ray_set);
  }
  std::vector<QVec> rays(ray_set.begin(), ray_set.end());
  // Exhaustive sign-vector classification: the tight-ray set of every row
  // subset is a face, and every face arises this way.
  std::set<std::vector<int>> raysets;
  for (std::uint32_t mask = 0; mask < (1u << F); ++mask) {
    std::vector<int> vs;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      bool tight_on_all = true;
      for (int i = 0; i < F && tight_on_all; ++i)
        if (mask & (1u << i))
          tight_on_all = dot(h.rows[static_cast<std::size_t>(i)].coeffs, rays[r]) == 0;
      if (tight_on_all) vs.push_back(static_cast<int>(r));
    }
    raysets.insert(std::move(vs));
  }
  return assemble(h, qt, rays, raysets);
}

bool lattices_isomorphic(const ConeLattice& a, const ConeLattice& b) {
  if (a.ambient_dim != b.ambient_dim || a.lineality_dim != b.lineality_dim ||
      a.cone_dim != b.cone_dim || a.properly_convex != b.properly_convex ||
      a.rays != b.rays || a.facets != b.facets ||
      a.faces.size() != b.faces.size())
    return false;
  for (std::size_t i = 0; i < a.faces.size(); ++i) {
    if (a.faces[i].dim != b.faces[i].dim || a.faces[i].verts != b.faces[i].verts ||
        a.faces[i].tight != b.faces[i].tight)
      return false;
  }
  return true;
}

DominanceReport dominance_check(const ConeHRep& h,
                                const std::vector<LengthFunctional>& extra,
                                std::size_t work_cap) {
  const ConeLattice lat = face_lattice(h, work_cap);
  DominanceReport rep;
  for (const auto& g : extra) {
    if (static_cast<int>(g.row.size()) != h.dim)
      throw DimensionMismatch("extra functional arity does not match the cone");
    DominanceEntry e;
    e.beta = g.beta;
    const QVec prim = primitive_direction(g.row);
    bool zero = true;
    for (const auto& x : prim) zero = zero && x == 0;
    if (zero) {
      e.verdict = DominanceVerdict::Redundant;
      e.note = "zero functional";
      rep.entries.push_back(std::move(e));
      continue;
    }
    bool on_lineality = true;
    for (const auto& b : lat.lineality_basis)
      if (dot(prim, b) != 0) on_lineality = false;
    if (!on_lineality) {
      e.verdict = DominanceVerdict::Violates;
      e.note = "nonzero on the lineality space";
      rep.all_implied = false;
      rep.entries.push_back(std::move(e));
      continue;
    }
    int coincide = -1;
    for (std::size_t i = 0; i < h.rows.size(); ++i)
      if (h.rows[i].coeffs == prim) coincide = static_cast<int>(i);
    if (coincide >= 0) {
      e.verdict = DominanceVerdict::CoincidesWithRow;
      e.row = coincide;
      e.note = "same half-space as row " + std::to_string(coincide);
      rep.entries.push_back(std::move(e));
      continue;
    }
    bool negative = false;
    int tight_count = 0;
    for (const auto& r : lat.rays) {
      const Q v = dot(prim, r);
      if (v < 0) negative = true;
      if (v == 0) ++tight_count;
    }
    if (negative) {
      e.verdict = DominanceVerdict::Violates;
      e.note = "negative on an extreme ray";
      rep.all_implied = false;
    } else if (tight_count > 0) {
      e.verdict = DominanceVerdict::TightOnFace;
      e.note = "vanishes on " + std::to_string(tight_count) + " extreme ray(s)";
    } else {
      e.verdict = DominanceVerdict::Redundant;
      e.note = "strictly positive on all extreme rays";
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// SVG emission (presentational; doubles are fine here)
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<double>> chart_points(const ConeLattice& lat) {
  QVec chart(static_cast<std::size_t>(lat.ambient_dim), Q(0));
  for (const auto& row : lat.rows)
    for (std::size_t i = 0; i < chart.size(); ++i) chart[i] += row.coeffs[i];
  std::vector<std::vector<double>> pts;
  for (const auto& ray : lat.rays) {
    const Q s = dot(chart, ray);
    std::vector<double> p;
    for (const auto& x : ray) p.push_back(static_cast<double>(x / s));
    pts.push_back(std::move(p));
  }
  return pts;
}

double vdot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Orthonormal basis of the affine hull of pts (Gram-Schmidt), then
/// coordinates of every point in that basis.
std::vector<std::vector<double>> affine_coords(
    const std::vector<std::vector<double>>& pts, int target_dim) {
  std::vector<std::vector<double>> basis;
  const auto& base = pts.front();
  for (const auto& p : pts) {
    if (static_cast<int>(basis.size()) >= target_dim) break;
    std::vector<double> d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - base[i];
    for (const auto& b : basis) {
      const double c = vdot(d, b);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= c * b[i];
    }
    const double n2 = vdot(d, d);
    if (n2 > 1e-18) {
      const double inv = 1.0 / std::sqrt(n2);
      for (auto& x : d) x *= inv;
      basis.push_back(std::move(d));
    }
  }
  std::vector<std::vector<double>> out;
  for (const auto& p : pts) {
    std::vector<double> c(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<double> d(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - base[i];
      c[k] = vdot(d, basis[k]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::array<double, 3> cross3(const std::array<double, 3>& a,
                             const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::string polytope_svg(const ConeLattice& lat,
                         const std::vector<std::string>& ray_labels) {
  if (!lat.properly_convex)
    throw std::invalid_argument("SVG needs a properly convex cone");
  const int P = lat.cone_dim - 1;
  if (P < 0 || P > 3)
    throw std::invalid_argument("SVG drawn only for polytope dimension 0..3");
  if (!ray_labels.empty() && ray_labels.size() != lat.rays.size())
    throw std::invalid_argument("one label per extreme ray expected");

  const auto pts = chart_points(lat);
  std::vector<std::array<double, 2>> xy(pts.size(), {0.0, 0.0});
  if (P >= 1 && !pts.empty()) {
    auto coords = affine_coords(pts, P);
    if (P <= 2) {
      for (std::size_t i = 0; i < coords.size(); ++i) {
        xy[i][0] = coords[i].size() > 0 ? coords[i][0] : 0.0;
        xy[i][1] = coords[i].size() > 1 ? coords[i][1] : 0.0;
      }
    } else {
      // Schlegel projection through a window facet (the one with most
      // vertices), viewed from slightly beyond its barycenter.
      int window = lat.facets.front();
      for (int f : lat.facets)
        if (lat.faces[static_cast<std::size_t>(f)].verts.size() >
            lat.faces[static_cast<std::size_t>(window)].verts.size())
          window = f;
      const auto& wv = lat.faces[static_cast<std::size_t>(window)].verts;
      auto at3 = [&](int v) {
        const auto& c = coords[static_cast<std::size_t>(v)];
        return std::array<double, 3>{c.size() > 0 ? c[0] : 0.0,
                                     c.size() > 1 ? c[1] : 0.0,
                                     c.size() > 2 ? c[2] : 0.0};
      };
      std::array<double, 3> wbar{0, 0, 0}, cbar{0, 0, 0};
      for (int v : wv)
        for (int k = 0; k < 3; ++k) wbar[k] += at3(v)[k] / wv.size();
      for (std::size_t v = 0; v < coords.size(); ++v)
        for (int k = 0; k < 3; ++k) cbar[k] += at3(static_cast<int>(v))[k] / coords.size();
      // Normal of the window plane from two independent edge vectors.
      std::array<double, 3> e1{}, e2{};
      for (int k = 0; k < 3; ++k) e1[k] = at3(wv[1])[k] - at3(wv[0])[k];
      std::array<double, 3> n{0, 0, 0};
      for (std::size_t j = 2; j < wv.size(); ++j) {
        for (int k = 0; k < 3; ++k) e2[k] = at3(wv[j])[k] - at3(wv[0])[k];
        n = cross3(e1, e2);
        if (vdot({n[0], n[1], n[2]}, {n[0], n[1], n[2]}) > 1e-18) break;
      }
      double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
      for (auto& x : n) x /= nn;
      // Point n away from the body, place the eye beyond the window.
      double side = (cbar[0] - wbar[0]) * n[0] + (cbar[1] - wbar[1]) * n[1] +
                    (cbar[2] - wbar[2]) * n[2];
      if (side > 0)
        for (auto& x : n) x = -x;
      double diam = 0;
      for (std::size_t a = 0; a < coords.size(); ++a)
        for (std::size_t b = a + 1; b < coords.size(); ++b) {
          double d2 = 0;
          for (int k = 0; k < 3; ++k) {
            const double dk = at3(static_cast<int>(a))[k] - at3(static_cast<int>(b))[k];
            d2 += dk * dk;
          }
          diam = std::max(diam, std::sqrt(d2));
        }
      std::array<double, 3> eye{};
      for (int k = 0; k < 3; ++k) eye[k] = wbar[k] + n[k] * diam;
      // In-plane orthonormal frame.
      std::array<double, 3> u1{}, u2{};
      const double e1n = std::sqrt(vdot({e1[0], e1[1], e1[2]}, {e1[0], e1[1], e1[2]}));
      for (int k = 0; k < 3; ++k) u1[k] = e1[k] / e1n;
      u2 = cross3(n, u1);
      for (std::size_t v = 0; v < coords.size(); ++v) {
        const auto p = at3(static_cast<int>(v));
        std::array<double, 3> dir{};
        for (int k = 0; k < 3; ++k) dir[k] = p[k] - eye[k];
        const double denom = dir[0] * n[0] + dir[1] * n[1] + dir[2] * n[2];
        const double t = ((wbar[0] - eye[0]) * n[0] + (wbar[1] - eye[1]) * n[1] +
                          (wbar[2] - eye[2]) * n[2]) /
                         denom;
        std::array<double, 3> q{};
        for (int k = 0; k < 3; ++k) q[k] = eye[k] + t * dir[k] - wbar[k];
        xy[v][0] = q[0] * u1[0] + q[1] * u1[1] + q[2] * u1[2];
        xy[v][1] = q[0] * u2[0] + q[1] * u2[1] + q[2] * u2[2];
      }
    }
  }

  // Fit into a 640x640 view box.
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!xy.empty()) {
    xmin = xmax = xy[0][0];
    ymin = ymax = xy[0][1];
    for (const auto& p : xy) {
      xmin = std::min(xmin, p[0]);
      xmax = std::max(xmax, p[0]);
      ymin = std::min(ymin, p[1]);
      ymax = std::max(ymax, p[1]);
    }
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double scale = 560.0 / span;
  auto sx = [&](double x) { return 40.0 + (x - xmin) * scale; };
  auto sy = [&](double y) { return 40.0 + (ymax - y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  svg << "  <!-- projectivized polytope, dimension " << P << " -->\n";
  for (const auto& f : lat.faces)
    if (f.dim == lat.lineality_dim + 2 && f.verts.size() == 2) {
      const auto& a = xy[static_cast<std::size_t>(f.verts[0])];
      const auto& b = xy[static_cast<std::size_t>(f.verts[1])];
      svg << "  <line x1=\"" << sx(a[0]) << "\" y1=\"" << sy(a[1]) << "\" x2=\""
          << sx(b[0]) << "\" y2=\"" << sy(b[1])
          << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
    }
  for (std::size_t v = 0; v < xy.size(); ++v) {
    svg << "  <circle cx=\"" << sx(xy[v][0]) << "\" cy=\"" << sy(xy[v][1])
        << "\" r=\"5\" fill=\"#c62828\"/>\n";
    const std::string label =
        ray_labels.empty() ? "v" + std::to_string(v) : ray_labels[v];
    svg << "  <text x=\"" << sx(xy[v][0]) + 8 << "\" y=\"" << sy(xy[v][1]) - 8
        << "\" font-family=\"monospace\" font-size=\"14\">" << label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace stripdef
