#include "stripdef/simplicial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "stripdef/linalg.hpp"

namespace stripdef {

namespace {

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Face> prune_to_maximal(std::vector<Face> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  faces.erase(
      std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return f.empty(); }),
      faces.end());
  std::stable_sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    return x.size() > y.size();
  });
  std::vector<Face> keep;
  for (const auto& f : faces) {
    bool covered = false;
    for (const auto& g : keep)
      if (face_subset(f, g)) {
        covered = true;
        break;
      }
    if (!covered) keep.push_back(f);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

Complex Complex::from_maximal(std::vector<Face> faces) {
  Complex c;
  c.maximal_ = prune_to_maximal(std::move(faces));
  return c;
}

Complex Complex::clique(int num_vertices,
                        const std::vector<std::vector<bool>>& compatible) {
  if (num_vertices > 64)
    throw std::invalid_argument("clique: more than 64 vertices not supported");
  using Mask = unsigned long long;
  std::vector<Mask> adj(static_cast<std::size_t>(std::max(num_vertices, 1)), 0);
  for (int i = 0; i < num_vertices; ++i)
    for (int j = 0; j < num_vertices; ++j)
      if (i != j && compatible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        adj[static_cast<std::size_t>(i)] |= Mask{1} << j;

  std::vector<Face> out;
  auto report = [&](Mask r) {
    Face f;
    for (int v = 0; v < num_vertices; ++v)
      if (r & (Mask{1} << v)) f.push_back(v);
    if (!f.empty()) out.push_back(f);
  };
  // Bron-Kerbosch with pivoting.
  auto rec = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (!p && !x) {
      report(r);
      return;
    }
    Mask px = p | x;
    int pivot = -1, best = -1;
    for (int u = 0; u < num_vertices; ++u)
      if (px & (Mask{1} << u)) {
        const int deg = __builtin_popcountll(p & adj[static_cast<std::size_t>(u)]);
        if (deg > best) {
          best = deg;
          pivot = u;
        }
      }
    Mask cand = p & ~adj[static_cast<std::size_t>(pivot)];
    for (int v = 0; v < num_vertices; ++v) {
      const Mask bit = Mask{1} << v;
      if (!(cand & bit)) continue;
      self(self, r | bit, p & adj[static_cast<std::size_t>(v)],
           x & adj[static_cast<std::size_t>(v)]);
      p &= ~bit;
      x |= bit;
    }
  };
  if (num_vertices > 0) {
    Mask all = num_vertices == 64 ? ~Mask{0} : (Mask{1} << num_vertices) - 1;
    rec(rec, 0, all, 0);
  }
  std::sort(out.begin(), out.end());
  Complex c;
  c.maximal_ = std::move(out);
  return c;
}

int Complex::dim() const {
  int d = -1;
  for (const auto& f : maximal_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool Complex::pure() const {
  const int d = dim();
  for (const auto& f : maximal_)
    if (static_cast<int>(f.size()) - 1 != d) return false;
  return true;
}

std::vector<int> Complex::vertices() const {
  std::set<int> vs;
  for (const auto& f : maximal_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

bool Complex::contains(const Face& f) const {
  Face g = f;
  std::sort(g.begin(), g.end());
  for (const auto& m : maximal_)
    if (face_subset(g, m)) return true;
  return false;
}

std::vector<std::vector<Face>> Complex::faces_by_dim() const {
  const int d = dim();
  if (d < 0) return {};
  std::vector<std::set<Face>> per(static_cast<std::size_t>(d) + 1);
  for (const auto& f : maximal_) per[f.size() - 1].insert(f);
  for (int k = d; k >= 1; --k)
    for (const auto& f : per[static_cast<std::size_t>(k)])
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<long>(i));
        per[static_cast<std::size_t>(k) - 1].insert(sub);
      }
  std::vector<std::vector<Face>> out;
  for (auto& s : per) out.emplace_back(s.begin(), s.end());
  return out;
}

long Complex::face_count() const {
  long total = 0;
  for (const auto& lvl : faces_by_dim()) total += static_cast<long>(lvl.size());
  return total;
}

Complex Complex::link(const Face& f) const {
  Face g = f;
  std::sort(g.begin(), g.end());
  std::vector<Face> out;
  for (const auto& m : maximal_)
    if (face_subset(g, m)) {
      Face rest;
      std::set_difference(m.begin(), m.end(), g.begin(), g.end(),
                          std::back_inserter(rest));
      out.push_back(rest);
    }
  return from_maximal(std::move(out));
}

Complex Complex::without_vertex(int v) const {
  std::vector<Face> out = maximal_;
  for (auto& f : out) f.erase(std::remove(f.begin(), f.end(), v), f.end());
  return from_maximal(std::move(out));
}

Complex join(const Complex& a, const Complex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const auto va = a.vertices();
  const int off = va.back() + 1;
  std::vector<Face> out;
  for (const auto& fa : a.maximal_faces())
    for (const auto& fb : b.maximal_faces()) {
      Face f = fa;
      for (int v : fb) f.push_back(v + off);
      out.push_back(std::move(f));
    }
  return Complex::from_maximal(std::move(out));
}

// ---------------------------------------------------------------------------
// Collapsing
// ---------------------------------------------------------------------------

namespace {

using FaceSet = std::set<Face>;

FaceSet all_faces(const Complex& c) {
  FaceSet out;
  for (const auto& lvl : c.faces_by_dim()) out.insert(lvl.begin(), lvl.end());
  return out;
}

// Incremental free-face bookkeeping over a mutable face set. A face is free
// when it has exactly one proper coface, which is then one dimension higher
// and maximal (closure forces both).
struct CollapseArena {
  FaceSet faces;
  std::map<Face, int> coface_count;
  std::vector<int> universe;

  explicit CollapseArena(const Complex& c) : faces(all_faces(c)) {
    for (const auto& f : faces)
      if (f.size() >= 2)
        for (std::size_t i = 0; i < f.size(); ++i) {
          Face sub = f;
          sub.erase(sub.begin() + static_cast<long>(i));
          ++coface_count[sub];
        }
    universe = c.vertices();
  }

  int count(const Face& f) const {
    auto it = coface_count.find(f);
    return it == coface_count.end() ? 0 : it->second;
  }

  bool is_point() const { return faces.size() == 1 && faces.begin()->size() == 1; }

  Face unique_coface(const Face& s) const {
    for (int v : universe) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Face t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), v), v);
      if (faces.count(t)) return t;
    }
    throw std::logic_error("unique_coface: none found");
  }

  std::vector<Face> free_faces() const {
    std::vector<Face> out;
    for (const auto& f : faces)
      if (count(f) == 1) out.push_back(f);
    // Deterministic order, top-dimensional first.
    std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
      if (x.size() != y.size()) return x.size() > y.size();
      return x < y;
    });
    return out;
  }

  // Applies the elementary collapse (s, t); records what changed.
  struct Undo {
    Face s, t;
  };

  Undo apply(const Face& s, const Face& t) {
    faces.erase(s);
    faces.erase(t);
    adjust(t, -1);
    adjust(s, -1);
    return {s, t};
  }

  void undo(const Undo& u) {
    adjust(u.s, +1);
    adjust(u.t, +1);
    faces.insert(u.s);
    faces.insert(u.t);
  }

 private:
  void adjust(const Face& f, int delta) {
    if (f.size() < 2) return;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<long>(i));
      coface_count[sub] += delta;
    }
  }
};

// Plain greedy collapse used to shrink complexes before homology.
void greedy_collapse(CollapseArena& arena) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& s : arena.free_faces()) {
      if (!arena.faces.count(s) || arena.count(s) != 1) continue;
      arena.apply(s, arena.unique_coface(s));
      progress = true;
    }
  }
}

}  // namespace

namespace {

// Mask-based strong collapse, valid whenever the complex has at most 64
// vertices (true for every instance this project builds).
Complex strong_collapse_masks(const Complex& c, const std::set<int>& removable) {
  using Mask = unsigned long long;
  const auto ids = c.vertices();
  std::map<int, int> bit;
  for (std::size_t i = 0; i < ids.size(); ++i) bit.emplace(ids[i], static_cast<int>(i));
  std::vector<Mask> facets;
  for (const auto& f : c.maximal_faces()) {
    Mask m = 0;
    for (int v : f) m |= Mask{1} << bit.at(v);
    facets.push_back(m);
  }
  Mask eligible = 0;
  for (int v : removable)
    if (bit.count(v)) eligible |= Mask{1} << bit.at(v);

  auto prune = [&]() {
    std::sort(facets.begin(), facets.end(), [](Mask a, Mask b) {
      return __builtin_popcountll(a) > __builtin_popcountll(b);
    });
    std::vector<Mask> keep;
    for (Mask f : facets) {
      bool covered = false;
      for (Mask g : keep)
        if ((f & g) == f) {
          covered = true;
          break;
        }
      if (!covered) keep.push_back(f);
    }
    facets = std::move(keep);
  };

  bool progress = true;
  while (progress) {
    progress = false;
    Mask present = 0;
    for (Mask f : facets) present |= f;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
      const Mask vbit = Mask{1} << i;
      if (!(present & vbit) || !(eligible & vbit)) continue;
      Mask common = ~Mask{0};
      for (Mask f : facets)
        if (f & vbit) common &= f;
      if (!(common & ~vbit)) continue;  // not dominated
      for (Mask& f : facets) f &= ~vbit;
      prune();
      progress = true;
      break;
    }
  }

  std::vector<Face> out;
  for (Mask f : facets) {
    Face face;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (f & (Mask{1} << i)) face.push_back(ids[i]);
    if (!face.empty()) out.push_back(face);
  }
  return Complex::from_maximal(std::move(out));
}

}  // namespace

Complex strong_collapse_among(const Complex& c, const std::set<int>& removable) {
  if (c.vertices().size() <= 64) return strong_collapse_masks(c, removable);
  std::vector<Face> facets = c.maximal_faces();
  bool progress = true;
  while (progress) {
    progress = false;
    std::set<int> vs;
    for (const auto& f : facets) vs.insert(f.begin(), f.end());
    for (int v : vs) {
      if (!removable.count(v)) continue;
      Face common;
      bool first = true;
      for (const auto& f : facets) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        if (first) {
          common = f;
          first = false;
        } else {
          Face next;
          std::set_intersection(common.begin(), common.end(), f.begin(), f.end(),
                                std::back_inserter(next));
          common = std::move(next);
        }
      }
      if (first) continue;  // vertex already gone
      common.erase(std::remove(common.begin(), common.end(), v), common.end());
      if (common.empty()) continue;  // not dominated
      for (auto& f : facets) f.erase(std::remove(f.begin(), f.end(), v), f.end());
      facets = prune_to_maximal(std::move(facets));
      progress = true;
      break;
    }
  }
  return Complex::from_maximal(std::move(facets));
}

Complex strong_collapse(const Complex& c) {
  const auto vs = c.vertices();
  return strong_collapse_among(c, std::set<int>(vs.begin(), vs.end()));
}

CollapseSearch collapses_to_point(const Complex& c, long budget) {
  CollapseSearch result;
  if (c.empty()) return result;
  if (c.maximal_faces().size() == 1 && c.maximal_faces()[0].size() == 1) {
    result.collapsible = true;
    return result;
  }
  // Fast path: strong collapse is a composition of elementary collapses.
  {
    auto core = strong_collapse(c);
    if (core.maximal_faces().size() == 1 && core.maximal_faces()[0].size() == 1) {
      result.collapsible = true;
      return result;
    }
  }
  // Exhaustive backtracking over free-face choices, budgeted.
  CollapseArena arena(c);
  bool exhausted = false;
  auto dfs = [&](auto&& self) -> bool {
    if (++result.nodes > budget) {
      exhausted = true;
      return false;
    }
    if (arena.is_point()) return true;
    const auto frees = arena.free_faces();
    if (frees.empty()) return false;
    for (const auto& s : frees) {
      if (!arena.faces.count(s) || arena.count(s) != 1) continue;
      auto u = arena.apply(s, arena.unique_coface(s));
      const bool ok = self(self);
      if (ok) return true;
      arena.undo(u);
      if (exhausted) return false;
    }
    return false;
  };
  result.collapsible = dfs(dfs);
  result.budget_exhausted = exhausted;
  return result;
}

// ---------------------------------------------------------------------------
// Homology
// ---------------------------------------------------------------------------

namespace {

struct SmithSummary {
  long rank = 0;
  std::vector<Z> torsion;
};

// Smith normal form data of a sparse integer matrix: unit-pivot elimination
// first (boundary matrices are riddled with +-1 entries), dense SNF on the
// small residue.
SmithSummary smith_sparse(int nrows, std::vector<std::map<int, Z>> cols) {
  SmithSummary out;
  const int ncols = static_cast<int>(cols.size());
  std::vector<std::set<int>> rows_of(static_cast<std::size_t>(std::max(nrows, 1)));
  for (int j = 0; j < ncols; ++j)
    for (const auto& [r, v] : cols[static_cast<std::size_t>(j)])
      rows_of[static_cast<std::size_t>(r)].insert(j);

  std::set<int> alive;
  for (int j = 0; j < ncols; ++j)
    if (!cols[static_cast<std::size_t>(j)].empty()) alive.insert(j);

  while (true) {
    // Pick a +-1 pivot in a thinnest column.
    int pc = -1, pr = -1;
    std::size_t best = ~std::size_t{0};
    for (int j : alive) {
      const auto& col = cols[static_cast<std::size_t>(j)];
      if (col.size() >= best) continue;
      for (const auto& [r, v] : col)
        if (v == 1 || v == -1) {
          pc = j;
          pr = r;
          best = col.size();
          break;
        }
    }
    if (pc < 0) break;
    const Z pv = cols[static_cast<std::size_t>(pc)].at(pr);
    // Column ops: clear the pivot row from every other column.
    const auto pivot_col = cols[static_cast<std::size_t>(pc)];
    const auto sharing = rows_of[static_cast<std::size_t>(pr)];
    for (int j : sharing) {
      if (j == pc) continue;
      auto& col = cols[static_cast<std::size_t>(j)];
      const Z factor = col.at(pr) * pv;  // pv * pv == 1
      for (const auto& [r, v] : pivot_col) {
        auto it = col.find(r);
        if (it == col.end()) {
          col.emplace(r, -factor * v);
          rows_of[static_cast<std::size_t>(r)].insert(j);
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            col.erase(it);
            rows_of[static_cast<std::size_t>(r)].erase(j);
          }
        }
      }
      if (col.empty()) alive.erase(j);
    }
    // Row ops would now clear the pivot column without any other effect.
    for (const auto& [r, v] : pivot_col) rows_of[static_cast<std::size_t>(r)].erase(pc);
    cols[static_cast<std::size_t>(pc)].clear();
    alive.erase(pc);
    ++out.rank;
  }

  if (!alive.empty()) {
    // Dense residue.
    std::set<int> used_rows;
    for (int j : alive)
      for (const auto& [r, v] : cols[static_cast<std::size_t>(j)]) used_rows.insert(r);
    std::map<int, std::size_t> row_index;
    for (int r : used_rows) row_index.emplace(r, row_index.size());
    std::vector<std::vector<Z>> dense(used_rows.size(),
                                      std::vector<Z>(alive.size(), Z(0)));
    std::size_t jj = 0;
    for (int j : alive) {
      for (const auto& [r, v] : cols[static_cast<std::size_t>(j)])
        dense[row_index.at(r)][jj] = v;
      ++jj;
    }
    for (const Z& d : smith_diagonal(dense)) {
      if (d == 0) continue;
      ++out.rank;
      Z a = d < 0 ? Z(-d) : d;
      if (a > 1) out.torsion.push_back(a);
    }
  }
  return out;
}

}  // namespace

Homology homology(const Complex& c) {
  Homology h;
  if (c.empty()) return h;
  const int orig_dim = c.dim();
  h.betti.assign(static_cast<std::size_t>(orig_dim) + 1, 0);
  h.torsion.assign(static_cast<std::size_t>(orig_dim) + 1, {});

  CollapseArena arena(c);
  greedy_collapse(arena);

  int d = 0;
  for (const auto& f : arena.faces) d = std::max(d, static_cast<int>(f.size()) - 1);
  std::vector<std::vector<Face>> by(static_cast<std::size_t>(d) + 1);
  for (const auto& f : arena.faces) by[f.size() - 1].push_back(f);
  std::vector<std::map<Face, int>> index(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    int i = 0;
    for (const auto& f : by[static_cast<std::size_t>(k)])
      index[static_cast<std::size_t>(k)].emplace(f, i++);
  }

  std::vector<long> rank(static_cast<std::size_t>(d) + 2, 0);
  std::vector<std::vector<Z>> tors(static_cast<std::size_t>(d) + 2);
  for (int k = 1; k <= d; ++k) {
    std::vector<std::map<int, Z>> cols(by[static_cast<std::size_t>(k)].size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Face& f = by[static_cast<std::size_t>(k)][j];
      int sign = 1;
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<long>(i));
        cols[j].emplace(index[static_cast<std::size_t>(k) - 1].at(sub), Z(sign));
        sign = -sign;
      }
    }
    auto s = smith_sparse(static_cast<int>(by[static_cast<std::size_t>(k) - 1].size()),
                          std::move(cols));
    rank[static_cast<std::size_t>(k)] = s.rank;
    tors[static_cast<std::size_t>(k)] = std::move(s.torsion);
  }

  for (int k = 0; k <= orig_dim; ++k) {
    const long nk =
        k <= d ? static_cast<long>(by[static_cast<std::size_t>(k)].size()) : 0;
    const long rk = k <= d ? rank[static_cast<std::size_t>(k)] : 0;
    const long rk1 = k + 1 <= d ? rank[static_cast<std::size_t>(k) + 1] : 0;
    h.betti[static_cast<std::size_t>(k)] = nk - (k >= 1 ? rk : 0) - rk1;
    if (k + 1 <= d) h.torsion[static_cast<std::size_t>(k)] = tors[static_cast<std::size_t>(k) + 1];
  }
  return h;
}

bool has_sphere_homology(const Complex& c, int d) {
  if (d < 0) return c.empty();
  if (c.empty()) return false;
  const auto h = homology(c);
  if (static_cast<int>(h.betti.size()) != d + 1) return false;
  for (const auto& t : h.torsion)
    if (!t.empty()) return false;
  for (int k = 0; k <= d; ++k) {
    const long expect = (d == 0 && k == 0) ? 2 : (k == 0 || k == d) ? 1 : 0;
    if (h.betti[static_cast<std::size_t>(k)] != expect) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

std::string cert_to_string(const Certificate& c) {
  std::string out;
  switch (c.type) {
    case CertType::Empty: out = "empty"; break;
    case CertType::Sphere: out = "sphere(" + std::to_string(c.dim) + ")"; break;
    case CertType::Ball: out = "ball(" + std::to_string(c.dim) + ")"; break;
    case CertType::Other: out = "other"; break;
  }
  if (!c.detail.empty()) out += " [" + c.detail + "]";
  if (c.inconclusive) out += " [inconclusive]";
  return out;
}

namespace {

bool complex_connected(const Complex& c) {
  const auto vs = c.vertices();
  if (vs.empty()) return true;
  std::map<int, int> parent;
  for (int v : vs) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& f : c.maximal_faces())
    for (std::size_t i = 1; i < f.size(); ++i) parent[find(f[0])] = find(f[i]);
  int root = find(vs[0]);
  for (int v : vs)
    if (find(v) != root) return false;
  return true;
}

struct Certifier {
  const Complex& top;
  long budget;
  std::map<Face, Certificate> cache;

  Certificate certify(const Face& at) {
    auto it = cache.find(at);
    if (it != cache.end()) return it->second;
    Certificate cert = compute(at);
    cache.emplace(at, cert);
    return cert;
  }

  Certificate compute(const Face& at) {
    const Complex c = at.empty() ? top : top.link(at);
    Certificate cert;
    if (c.empty()) {
      cert.type = CertType::Empty;
      cert.dim = -1;
      return cert;
    }
    const int d = c.dim();
    cert.dim = d;

    if (d == 0) {
      const auto n = c.maximal_faces().size();
      if (n == 1) cert.type = CertType::Ball;
      else if (n == 2) cert.type = CertType::Sphere;
      else {
        cert.type = CertType::Other;
        cert.detail = std::to_string(n) + " isolated points";
      }
      return cert;
    }

    if (!c.pure()) {
      cert.type = CertType::Other;
      cert.detail = "not pure";
      return cert;
    }
    if (!complex_connected(c)) {
      cert.type = CertType::Other;
      cert.detail = "disconnected";
      return cert;
    }

    // Ridge degrees: every (d-1)-face may lie in at most two facets.
    std::map<Face, int> ridge;
    for (const auto& f : c.maximal_faces())
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<long>(i));
        ++ridge[sub];
      }
    long boundary_ridges = 0;
    for (const auto& [f, k] : ridge) {
      if (k > 2) {
        cert.type = CertType::Other;
        cert.detail = "a ridge lies in " + std::to_string(k) + " facets";
        return cert;
      }
      if (k == 1) ++boundary_ridges;
    }

    if (d == 1) {
      if (boundary_ridges == 0) cert.type = CertType::Sphere;       // one cycle
      else if (boundary_ridges == 2) cert.type = CertType::Ball;    // one path
      else {
        cert.type = CertType::Other;
        cert.detail = "stray endpoint";
      }
      return cert;
    }

    // Vertex links must be (d-1)-balls or (d-1)-spheres.
    for (int v : c.vertices()) {
      Face key = at;
      key.insert(std::upper_bound(key.begin(), key.end(), v), v);
      const Certificate lc = certify(key);
      const bool ok = lc.dim == d - 1 &&
                      (lc.type == CertType::Sphere || lc.type == CertType::Ball);
      if (!ok) {
        cert.type = CertType::Other;
        cert.inconclusive = lc.inconclusive;
        cert.detail = "link of a vertex: " + cert_to_string(lc);
        return cert;
      }
    }

    if (boundary_ridges == 0) {
      if (has_sphere_homology(c, d)) {
        cert.type = CertType::Sphere;
      } else {
        cert.type = CertType::Other;
        cert.detail = "closed manifold without sphere homology";
      }
      return cert;
    }

    const auto search = collapses_to_point(c, budget);
    budget -= search.nodes;
    if (search.collapsible) {
      cert.type = CertType::Ball;
    } else if (search.budget_exhausted) {
      cert.type = CertType::Other;
      cert.inconclusive = true;
      cert.detail = "collapsibility search budget exhausted";
    } else {
      cert.type = CertType::Other;
      cert.detail = "manifold with boundary but not collapsible";
    }
    return cert;
  }
};

}  // namespace

Certificate certify_type(const Complex& c, long budget) {
  Certifier worker{c, budget, {}};
  return worker.certify({});
}

// ---------------------------------------------------------------------------
// Arc complexes and colored point models
// ---------------------------------------------------------------------------

ArcComplex arc_complex(const SurfaceSpec& s, const std::vector<Beta>& avoid) {
  ArcComplex out;
  for (const auto& a : enumerate_arcs(s)) {
    bool ok = true;
    for (const auto& b : avoid)
      if (!arc_beta_disjoint(a, b, s)) {
        ok = false;
        break;
      }
    if (ok) out.arcs.push_back(a);
  }
  const int n = static_cast<int>(out.arcs.size());
  std::vector<std::vector<bool>> compat(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          i != j && arcs_disjoint(out.arcs[static_cast<std::size_t>(i)],
                                  out.arcs[static_cast<std::size_t>(j)], s);
  out.complex = Complex::clique(n, compat);
  return out;
}

namespace {

ColoredModel colored_line_model(const std::vector<bool>& red, bool with_core) {
  const int m = static_cast<int>(red.size());
  ColoredModel out;
  for (int a = 0; a < m; ++a)
    for (int span = 2; span <= m; ++span) {
      const int b = a + span;
      if (span == m) {
        if (red[static_cast<std::size_t>(a)]) continue;  // loop needs a blue point
      } else if (red[static_cast<std::size_t>(a)] && red[static_cast<std::size_t>(b % m)]) {
        continue;
      }
      out.chords.emplace_back(a, b);
    }
  if (with_core)
    for (int a = 0; a < m; ++a) {
      out.core_arc_vertices.push_back(static_cast<int>(out.chords.size()));
      out.chords.emplace_back(a, -1);
    }
  const int n = static_cast<int>(out.chords.size());
  auto cross = [&](int i, int j) {
    const auto& [a1, b1] = out.chords[static_cast<std::size_t>(i)];
    const auto& [a2, b2] = out.chords[static_cast<std::size_t>(j)];
    const bool c1 = b1 < 0, c2 = b2 < 0;
    if (c1 && c2) return false;
    if (c1) return core_arc_crosses_chord(a1, a2, b2, m);
    if (c2) return core_arc_crosses_chord(a2, a1, b1, m);
    return chords_cross_periodic(a1, b1, a2, b2, m);
  };
  std::vector<std::vector<bool>> compat(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          i != j && !cross(i, j);
  out.complex = Complex::clique(n, compat);
  return out;
}

}  // namespace

ColoredModel colored_disk_model(const std::vector<bool>& red) {
  const int m = static_cast<int>(red.size());
  ColoredModel out;
  for (int a = 0; a < m; ++a)
    for (int b = a + 2; b < m; ++b) {
      if (a == 0 && b == m - 1) continue;
      if (red[static_cast<std::size_t>(a)] && red[static_cast<std::size_t>(b)]) continue;
      out.chords.emplace_back(a, b);
    }
  const int n = static_cast<int>(out.chords.size());
  std::vector<std::vector<bool>> compat(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& [a1, b1] = out.chords[static_cast<std::size_t>(i)];
      const auto& [a2, b2] = out.chords[static_cast<std::size_t>(j)];
      compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          i != j && !chords_cross_disk(a1, b1, a2, b2);
    }
  out.complex = Complex::clique(n, compat);
  return out;
}

ColoredModel colored_punctured_model(const std::vector<bool>& red) {
  return colored_line_model(red, false);
}

ColoredModel colored_crown_model(const std::vector<bool>& red) {
  return colored_line_model(red, true);
}

}  // namespace stripdef
