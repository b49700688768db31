#pragma once

// Exact linear algebra over Q (rank / kernel / determinant / solving) and
// Smith normal form over Z. Matrices here are small (ambient dimension <= 9
// in practice), so straightforward fraction-pivot Gaussian elimination and
// textbook SNF are the right tools.

#include "stripdef/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stripdef {

using QVec = std::vector<Q>;

struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Q> a;  // row-major

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Q(0)) {}

  Q& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Q& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  QVec row(std::size_t i) const {
    return QVec(a.begin() + static_cast<long>(i * cols),
                a.begin() + static_cast<long>((i + 1) * cols));
  }
  void push_row(const QVec& r) {
    if (rows == 0 && a.empty()) cols = r.size();
    if (r.size() != cols) throw std::invalid_argument("push_row: width mismatch");
    a.insert(a.end(), r.begin(), r.end());
    ++rows;
  }
};

/// In-place reduction to reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    const Q inv = Q(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Q f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(QMatrix m) { return row_reduce(m).size(); }

/// Basis of the right kernel {x : M x = 0}.
inline std::vector<QVec> kernel_basis(QMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free_c = 0; free_c < m.cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    QVec v(m.cols, Q(0));
    v[free_c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -m.at(k, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Q det(QMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: non-square matrix");
  Q d(1);
  for (std::size_t c = 0, r = 0; c < m.cols; ++c, ++r) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) return Q(0);
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      d = -d;
    }
    d *= m.at(r, c);
    const Q inv = Q(1) / m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      const Q f = m.at(i, c) * inv;
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  return d;
}

inline Q dot(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  Q s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// Canonical representative of the ray through v: clear denominators,
/// divide by the gcd of the (integer) entries, make the leading nonzero
/// entry positive. Zero vectors pass through unchanged.
inline QVec normalize_ray(QVec v) {
  Z lcm_den(1);
  for (const auto& x : v) lcm_den = lcm(lcm_den, denominator(x));
  Z g(0);
  for (auto& x : v) {
    x *= Q(lcm_den);
    g = gcd(g, numerator(x));
  }
  if (g == 0) return v;
  int lead = 0;
  for (const auto& x : v) {
    if (x != 0) { lead = sgn(x); break; }
  }
  const Q scale = Q(lead >= 0 ? g : -g);
  for (auto& x : v) x /= scale;
  return v;
}

/// Primitive integer vector spanning the same ray as v (denominators cleared,
/// entries divided by their gcd). Unlike normalize_ray this never flips the
/// sign, so directions — e.g. rays of a cone — are preserved.
inline QVec primitive_direction(QVec v) {
  Z lcm_den(1);
  for (const auto& x : v) lcm_den = lcm(lcm_den, denominator(x));
  Z g(0);
  for (auto& x : v) {
    x *= Q(lcm_den);
    g = gcd(g, numerator(x));
  }
  if (g == 0) return v;
  for (auto& x : v) x /= Q(g);
  return v;
}

/// Smith normal form diagonal of an integer matrix (non-negative entries,
/// each dividing the next). Used for integral homology.
inline std::vector<Z> smith_diagonal(std::vector<std::vector<Z>> m) {
  std::vector<Z> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;

  // Clears row t and column t outside the pivot by Euclidean steps,
  // leaving m[t][t] nonzero.
  const auto clear_cross = [&](std::size_t t) {
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Z q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) { std::swap(m[t], m[i]); dirty = true; }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Z q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
    }
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    std::size_t pi = t, pj = t;
    bool found = false;
    Z best(0);
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (!found || abs(m[i][j]) < best)) {
          best = abs(m[i][j]);
          pi = i; pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    for (bool divisible = false; !divisible;) {
      clear_cross(t);
      divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols && divisible; ++j)
          if (m[i][j] % m[t][t] != 0) {
            // Fold the offending row in and redo; the corner gcd shrinks.
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divisible = false;
          }
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

}  // namespace stripdef
