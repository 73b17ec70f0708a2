#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "representation.hpp"

namespace hsg {

/// Auslander-Reiten translate via the Nakayama functor on a minimal projective presentation.
Representation tau(const Representation& m);
/// Inverse translate, computed as D tau(D M) over the opposite quiver.
Representation tau_inverse(const Representation& m);

/// nu(P) for projective P; throws invalid_argument when P is not projective.
Representation nakayama(const Representation& p);
/// nu^{-1}(I) for injective I.
Representation nakayama_inverse(const Representation& i);

enum class ARTag { preprojective, preinjective, regular, inconclusive };

std::string to_string(ARTag tag);

struct ARClass {
  ARTag tag = ARTag::inconclusive;
  /// tau-power that kills the module, the defect for regular modules, or the exhausted bound.
  std::int64_t certificate = 0;
};

/// Trichotomy class of an indecomposable. Throws `decomposable` for decomposable input.
ARClass classify(const Representation& m, int bound = 64, std::uint64_t seed = 0);

/// Defect <delta, x> of a dimension vector over a Euclidean quiver.
std::int64_t defect(const Quiver& q, const std::vector<std::int64_t>& dims);

/// All indecomposables of a Dynkin quiver, as tau^{-k} P(v) ordered by v then k.
std::vector<Representation> knit_indecomposables(QuiverPtr q, PrimeField field);

/// Integer Coxeter matrix -C^T C^{-1} with C the path-count (Cartan) matrix, columns dim P(v).
std::vector<std::vector<std::int64_t>> coxeter_matrix(const Quiver& q);

std::vector<std::int64_t> integer_apply(const std::vector<std::vector<std::int64_t>>& m, const std::vector<std::int64_t>& x);

}  // namespace hsg
