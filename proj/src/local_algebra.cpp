#include "local_algebra.hpp"

#include "error.hpp"

namespace hsg {

Vector AlgebraTable::multiply(const Vector& x, const Vector& y) const {
  Vector out(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Residue c = field.mul(x[i], y[j]);
      const Vector& p = products[i * dim + j];
      for (std::size_t k = 0; k < dim; ++k) out[k] = field.add(out[k], field.mul(c, p[k]));
    }
  }
  return out;
}

std::optional<LocalStructure> local_structure(const AlgebraTable& algebra) {
  const std::size_t n = algebra.dim;
  const PrimeField& f = algebra.field;
  if (n == 0) return std::nullopt;
  if (n % f.characteristic() == 0)
    fail(ErrorCode::not_local, "locality test needs dim End invertible in the ground field");

  // For local A with A/J = k, L_x = lambda(x) + nilpotent, so tr(L_x) = dim * lambda(x).
  Residue inv_n = f.inv(static_cast<Residue>(n % f.characteristic()));
  Vector residue(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Residue t = 0;
    for (std::size_t j = 0; j < n; ++j) t = f.add(t, algebra.products[i * n + j][j]);
    residue[i] = f.mul(t, inv_n);
  }
  if (dot(residue, algebra.unit, f) != 1) return std::nullopt;

  Matrix row(1, n, f);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = residue[i];
  std::vector<Vector> radical = kernel_basis(row);

  // ker(lambda) must be a nilpotent ideal: J^m shrinks to zero.
  std::vector<Vector> power = radical;
  for (std::size_t step = 0; step <= n && !power.empty(); ++step) {
    std::vector<Vector> products;
    for (const auto& x : power)
      for (const auto& y : radical) products.push_back(algebra.multiply(x, y));
    std::vector<Vector> next = products.empty() ? std::vector<Vector>{}
                                                : image_basis(Matrix::from_columns(products, n, f));
    if (next.size() >= power.size() && !next.empty()) return std::nullopt;
    power = std::move(next);
  }
  if (!power.empty()) return std::nullopt;
  return LocalStructure{std::move(radical), std::move(residue)};
}

}  // namespace hsg
