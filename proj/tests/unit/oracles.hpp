#pragma once

// Independent reference computations used only by tests.

#include <cstdint>
#include <vector>

#include "quiver.hpp"
#include "representation.hpp"

namespace hsg::testing {

/// dim Hom(M, N) from the column-major vectorised system (I (x) N(a)) vec X_s - (M(a)^T (x) I) vec X_t = 0.
inline std::size_t oracle_hom_dim(const Representation& m, const Representation& n) {
  const Quiver& q = m.quiver();
  const PrimeField& f = m.field();
  std::vector<std::size_t> off(q.vertex_count() + 1, 0);
  for (int v = 0; v < q.vertex_count(); ++v) off[v + 1] = off[v] + static_cast<std::size_t>(m.dim(v)) * n.dim(v);
  std::vector<Vector> rows;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    const Matrix& na = n.map(static_cast<int>(ai));
    const Matrix& ma = m.map(static_cast<int>(ai));
    const std::size_t ms = m.dim(a.source), mt = m.dim(a.target), ns = n.dim(a.source), nt = n.dim(a.target);
    // Equation entry (i, j), i < nt, j < ms; vec index of X(i, j) is i + j * rows.
    for (std::size_t j = 0; j < ms; ++j)
      for (std::size_t i = 0; i < nt; ++i) {
        Vector row(off.back(), 0);
        for (std::size_t k = 0; k < ns; ++k) row[off[a.source] + k + j * ns] = f.add(row[off[a.source] + k + j * ns], na(i, k));
        for (std::size_t k = 0; k < mt; ++k)
          row[off[a.target] + i + k * nt] = f.sub(row[off[a.target] + i + k * nt], ma(k, j));
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return off.back();
  Matrix sys = Matrix::from_columns(rows, off.back(), f).transpose();
  return off.back() - rank(sys);
}

/// Positive roots of a Dynkin quiver by brute-force search of q(x) = 1 with x >= 0.
inline std::vector<std::vector<std::int64_t>> oracle_positive_roots(const Quiver& q, int max_entry = 6) {
  const int n = q.vertex_count();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, 0);
  for (;;) {
    int i = 0;
    while (i < n && x[i] == max_entry) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    if (euler_form(q, x, x) == 1) out.push_back(x);
  }
  return out;
}

}  // namespace hsg::testing
