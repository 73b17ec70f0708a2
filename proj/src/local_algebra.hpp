#pragma once

#include <optional>
#include <vector>

#include "linalg.hpp"

namespace hsg {

/// Finite-dimensional algebra given by structure constants on a basis.
struct AlgebraTable {
  PrimeField field;
  std::size_t dim = 0;
  std::vector<Vector> products;  // products[i * dim + j] = b_i * b_j in coordinates
  Vector unit;

  Vector multiply(const Vector& x, const Vector& y) const;
};

/// Radical and residue map of a local algebra whose residue field is k.
struct LocalStructure {
  std::vector<Vector> radical;  // basis of the Jacobson radical
  Vector residue;               // linear form x -> lambda(x) with x - lambda(x) 1 in the radical
};

/// Empty unless the algebra is local with residue field k. The residue form is
/// tr(L_x) / dim, so dim must be invertible in k.
std::optional<LocalStructure> local_structure(const AlgebraTable& algebra);

}  // namespace hsg
