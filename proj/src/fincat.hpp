#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "local_algebra.hpp"

namespace hsg {

/// Finite basic k-linear category given by structure constants. Objects are pairwise
/// non-isomorphic and have local endomorphism rings with residue field k.
class FinCat {
 public:
  /// composition[(x * n + y) * n + z] is a dim(x,z) x (dim(y,z) * dim(x,y)) matrix whose column
  /// b * dim(x,y) + a holds the coordinates of (basis b of Hom(y,z)) o (basis a of Hom(x,y)).
  FinCat(std::vector<std::string> objects, std::vector<std::vector<std::size_t>> hom_dims,
         std::vector<Vector> identities, std::vector<Matrix> compositions, PrimeField field);

  static FinCat from_json(std::string_view text, PrimeField field);
  static FinCat load(const std::string& path, PrimeField field);
  std::string to_json() const;

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return objects_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::string& name(std::size_t x) const { return objects_.at(x); }
  std::size_t index_of(std::string_view name) const;  // throws unknown object

  std::size_t hom_dim(std::size_t x, std::size_t y) const { return hom_dims_[x][y]; }
  const std::vector<std::vector<std::size_t>>& hom_dims() const noexcept { return hom_dims_; }
  const Vector& identity(std::size_t x) const { return identities_.at(x); }
  const Matrix& composition(std::size_t x, std::size_t y, std::size_t z) const {
    return composition_[(x * size() + y) * size() + z];
  }
  /// g o f for g in Hom(y,z), f in Hom(x,y), in coordinates.
  Vector compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const;

  /// Basis (coordinates) of rad(x,y): all of Hom(x,y) off the diagonal, the maximal ideal on it.
  std::vector<Vector> radical(std::size_t x, std::size_t y) const;
  /// Residue form End(x) -> k.
  const Vector& residue(std::size_t x) const { return local_.at(x).residue; }

  /// Re-runs the unit, associativity and locality checks; returns a description of the first violation.
  std::optional<std::string> validate() const;

 private:
  std::optional<std::string> check_tables(std::vector<LocalStructure>& local) const;

  std::vector<std::string> objects_;
  std::vector<std::vector<std::size_t>> hom_dims_;
  std::vector<Vector> identities_;
  std::vector<Matrix> composition_;
  PrimeField field_;
  std::vector<LocalStructure> local_;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

/// Contravariant module: M(f) : M(y) -> M(x) for f : x -> y.
class FinCatModule {
 public:
  /// action[x * n + y][a] is M(basis a of Hom(x,y)), a dim M(x) x dim M(y) matrix.
  FinCatModule(FinCatPtr cat, std::vector<int> dims, std::vector<std::vector<Matrix>> action);

  static FinCatModule zero(FinCatPtr cat);

  const FinCat& cat() const noexcept { return *cat_; }
  const FinCatPtr& cat_ptr() const noexcept { return cat_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim(std::size_t x) const { return dims_.at(x); }
  int total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }
  const Matrix& action(std::size_t x, std::size_t y, std::size_t a) const { return action_[x * cat_->size() + y][a]; }
  /// M(f) for an arbitrary f in Hom(x,y) given in coordinates.
  Matrix act(std::size_t x, std::size_t y, const Vector& f) const;
  std::vector<std::size_t> support() const;

  /// Checks identities and contravariance exhaustively; returns the first violation.
  std::optional<std::string> validate() const;

 private:
  FinCatPtr cat_;
  std::vector<int> dims_;
  std::vector<std::vector<Matrix>> action_;
};

/// Natural transformation: one dim N(x) x dim M(x) matrix per object.
struct ModuleMorphism {
  std::vector<Matrix> components;
};

bool is_module_morphism(const FinCatModule& m, const FinCatModule& n, const ModuleMorphism& f);
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

/// Representable C(-, x) with action h -> h o f.
FinCatModule yoneda_module(const FinCatPtr& c, std::size_t x);
/// D C(x, -) through dual bases.
FinCatModule co_injective(const FinCatPtr& c, std::size_t x);
FinCatModule simple_module(const FinCatPtr& c, std::size_t x);
std::vector<FinCatModule> simple_modules(const FinCatPtr& c);
FinCatModule direct_sum(const std::vector<FinCatModule>& parts);
/// Submodule spanned by the columns of bases[x]; throws internal if not closed.
FinCatModule submodule(const FinCatModule& m, const std::vector<Matrix>& bases);
/// Quotient M / U where U is spanned by the columns of bases[x].
FinCatModule quotient(const FinCatModule& m, const std::vector<Matrix>& bases);

/// Basis of Hom(M, N) (natural transformations) by solving the naturality system.
std::vector<ModuleMorphism> module_hom_basis(const FinCatModule& m, const FinCatModule& n);
std::size_t module_hom_dimension(const FinCatModule& m, const FinCatModule& n);

/// One step of a projective resolution: P_n = direct sum of C(-, generators[g]).
struct ResolutionStep {
  std::vector<std::size_t> generators;
  /// For n >= 1, images[g] is the image of generator g in P_{n-1}(generators[g]),
  /// in generator-major coordinates of P_{n-1}.
  std::vector<Vector> images;
};

struct Resolution {
  std::vector<ResolutionStep> steps;  // steps[n] describes P_n
  bool terminated = false;            // the last kernel is zero
  /// Syzygy modules: syzygies[n] = kernel of P_{n-1} -> ... (syzygies[0] = M).
  std::vector<FinCatModule> syzygies;
};

/// Direct sum of representables for a generator list.
FinCatModule free_module(const FinCatPtr& c, const std::vector<std::size_t>& generators);
/// Offsets of generator blocks inside free_module(c, generators)(y).
std::vector<std::size_t> free_offsets(const FinCat& c, const std::vector<std::size_t>& generators, std::size_t y);

struct ProjectiveCoverData {
  std::vector<std::size_t> generators;
  std::vector<Vector> elements;  // element of M(generators[g])
  FinCatModule projective;
  ModuleMorphism cover;
};

ProjectiveCoverData module_projective_cover(const FinCatModule& m);

/// Minimal projective resolution computed up to P_depth (or until it terminates).
Resolution minimal_projective_resolution(const FinCatModule& m, int depth);

/// dim Ext^deg(M, N) from a resolution of M holding P_deg and P_{deg+1} (or terminated).
std::size_t ext_group(const Resolution& res, const FinCatModule& n, int deg);
std::size_t ext_group(const FinCatModule& m, const FinCatModule& n, int deg);

/// Projective dimension if at most cap.
std::optional<int> projective_dimension(const FinCatModule& m, int cap);

struct GlobalDimension {
  bool exceeds_cap = false;
  int value = 0;
};

GlobalDimension global_dimension(const FinCatPtr& c, int cap);

/// dim of Hom(M, N) modulo morphisms factoring through the projective cover of N.
std::size_t module_stable_hom_dimension(const FinCatModule& m, const FinCatModule& n);

}  // namespace hsg
