#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "quiver.hpp"

namespace hsg {

/// Finite-dimensional representation of an acyclic quiver: arrow a : i -> j acts by a
/// dim(j) x dim(i) matrix.
class Representation {
 public:
  Representation(QuiverPtr quiver, std::vector<int> dims, std::vector<Matrix> maps, PrimeField field);

  static Representation zero(QuiverPtr quiver, PrimeField field);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  const PrimeField& field() const noexcept { return field_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim(int v) const { return dims_.at(v); }
  int total_dim() const noexcept;
  std::vector<std::int64_t> dim_vector() const;
  bool is_zero() const noexcept { return total_dim() == 0; }
  const Matrix& map(int arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  /// Action of a path (product of its arrow maps in traversal order).
  Matrix path_action(int path_id) const;

  std::string dims_string() const;
  /// Module-file text (`dims ...` then one `map` block per arrow).
  std::string to_text() const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  PrimeField field_;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
};

struct RepresentationHash {
  std::size_t operator()(const Representation& r) const noexcept;
};

/// A morphism of representations: one dim N(v) x dim M(v) matrix per vertex.
struct RepMorphism {
  std::vector<Matrix> components;
};

RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism identity_morphism(const Representation& m);
RepMorphism zero_morphism(const Representation& m, const Representation& n);
bool is_morphism(const Representation& m, const Representation& n, const RepMorphism& f);
bool is_isomorphism(const RepMorphism& f);

Representation parse_module(QuiverPtr quiver, std::string_view text, PrimeField field);
Representation load_module(QuiverPtr quiver, const std::string& path, PrimeField field);

Representation projective(QuiverPtr q, int v, PrimeField field);
Representation injective(QuiverPtr q, int v, PrimeField field);
Representation simple(QuiverPtr q, int v, PrimeField field);
Representation direct_sum(const std::vector<Representation>& parts);
/// Random representation with the given dimension vector.
Representation random_representation(QuiverPtr q, const std::vector<int>& dims, PrimeField field, std::mt19937_64& rng);
/// Base change by random invertible matrices at every vertex.
Representation scramble(const Representation& m, std::mt19937_64& rng);

/// Dual representation D M over the opposite quiver `target`.
Representation dual(const Representation& m, QuiverPtr target);

/// Subrepresentation spanned at each vertex by the columns of `bases[v]` (full column rank,
/// closed under the arrow maps).
Representation subrepresentation(const Representation& m, const std::vector<Matrix>& bases);
/// Kernel and image of f : M -> N as subrepresentations.
Representation kernel(const Representation& m, const Representation& n, const RepMorphism& f);
Representation image(const Representation& m, const Representation& n, const RepMorphism& f);

class MorphismSpace {
 public:
  MorphismSpace(Representation source, Representation target, std::vector<RepMorphism> basis);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  const std::vector<RepMorphism>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  Vector flatten(const RepMorphism& f) const;
  RepMorphism unflatten(const Vector& v) const;
  /// Coordinates of f in the basis; throws invalid_argument if f is not a morphism.
  Vector coordinates(const RepMorphism& f) const;
  RepMorphism combination(const Vector& coeffs) const;

 private:
  Representation source_;
  Representation target_;
  std::vector<RepMorphism> basis_;
  Matrix flat_;  // columns are flattened basis elements
};

MorphismSpace hom_space(const Representation& m, const Representation& n);
/// Dimension of Hom(M, N) without materialising a basis.
std::size_t hom_dimension(const Representation& m, const Representation& n);

/// Top generators and the induced cover of a representation by projectives.
struct ProjectiveCover {
  std::vector<int> vertices;     // generator vertices
  std::vector<Vector> elements;  // generator images, element of N(vertices[g])
  Representation projective;     // direct sum of P(vertices[g]), generator-major
  RepMorphism cover;             // projective -> N
};

ProjectiveCover projective_cover(const Representation& n);

/// Minimal projective presentation 0 -> P1 -> P0 -> M -> 0.
struct ProjectivePresentation {
  std::vector<int> top_vertices;
  std::vector<Vector> top_elements;
  std::vector<int> relation_vertices;
  /// Relation r as an element of P0(relation_vertices[r]) in generator-major path coordinates.
  std::vector<Vector> relations;
};

ProjectivePresentation projective_presentation(const Representation& m);
/// Offsets of generator blocks inside P0(w) for generator vertices `gens`.
std::vector<int> projective_offsets(const Quiver& q, const std::vector<int>& gens, int w);

struct Ext1Space {
  std::size_t dimension = 0;
  /// Induced map Hom(P0, N) -> Hom(P1, N); Ext^1 is its cokernel.
  Matrix presentation;
  /// Vectors of Hom(P1, N) whose classes form a basis of the cokernel.
  std::vector<Vector> representatives;
};

Ext1Space ext1_space(const Representation& m, const Representation& n);
std::size_t ext1_dimension(const Representation& m, const Representation& n);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// Hom modulo morphisms factoring through a projective.
class StableMorphismSpace {
 public:
  StableMorphismSpace(MorphismSpace hom, std::vector<Vector> factoring);

  const MorphismSpace& hom() const noexcept { return hom_; }
  std::size_t dimension() const noexcept { return representatives_.size(); }
  const std::vector<RepMorphism>& representatives() const noexcept { return representatives_; }
  /// Span (hom coordinates) of morphisms factoring through projectives.
  const std::vector<Vector>& factoring() const noexcept { return factoring_; }
  /// Coordinates of the class of f with respect to the representatives.
  Vector stable_coordinates(const RepMorphism& f) const;

 private:
  MorphismSpace hom_;
  std::vector<Vector> factoring_;
  std::vector<RepMorphism> representatives_;
  Matrix change_;  // hom coordinates -> (representative | factoring) coordinates
};

StableMorphismSpace stable_hom(const Representation& m, const Representation& n);
/// Hom modulo morphisms factoring through an injective, by duality.
std::size_t costable_hom_dimension(const Representation& m, const Representation& n);

/// Endomorphism-ring locality test with residue field k (absolute indecomposability).
bool has_local_endomorphisms(const Representation& m);

bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed = 0, int trials = 32);

struct Summand {
  Representation module;
  int multiplicity = 1;
};

struct DecomposeOptions {
  int samples = 64;
};

std::vector<Summand> decompose(const Representation& m, std::uint64_t seed, DecomposeOptions opts = {});
/// Flat list of indecomposable summands, with repetition.
std::vector<Representation> indecomposable_summands(const Representation& m, std::uint64_t seed,
                                                    DecomposeOptions opts = {});

}  // namespace hsg
