#pragma once

#include <vector>

#include "fincat.hpp"
#include "representation.hpp"

namespace hsg {

/// The stable category of mod A on a finite set of non-projective indecomposables.
struct StableCategory {
  FinCatPtr cat;
  std::vector<Representation> objects;  // objects[i] is the module behind cat object i
};

/// Dynkin quivers: all non-projective knitted indecomposables.
StableCategory build_stable_category(QuiverPtr q, PrimeField field);
/// Any quiver, on an explicit list of pairwise non-isomorphic non-projective indecomposables.
StableCategory build_stable_category(const std::vector<Representation>& objects);

/// The one-object category with End = k.
FinCatPtr point_category(PrimeField field);

}  // namespace hsg
