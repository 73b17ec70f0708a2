#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ar.hpp"
#include "report.hpp"
#include "representation.hpp"

namespace hsg {

struct DerivedSummand {
  Representation module;  // indecomposable, nonzero
  int shift = 0;
};

/// Finite direct sum of shifted indecomposables.
struct DerivedObject {
  std::vector<DerivedSummand> summands;

  bool empty() const noexcept { return summands.empty(); }
  std::string describe() const;
};

DerivedObject shift(const DerivedObject& u, int by);

/// Object (X, i) of the repetitive category of the stable category.
struct PhiIndex {
  Representation module;
  int level = 0;
};

/// Caches translates and Hom/Ext dimensions for one quiver and field. Not thread-safe;
/// use one context per thread.
class DerivedContext {
 public:
  DerivedContext(QuiverPtr quiver, PrimeField field, std::uint64_t seed = 0);

  const QuiverPtr& quiver() const noexcept { return quiver_; }
  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// M[shift], decomposed into indecomposable summands.
  DerivedObject object(const Representation& m, int shift = 0);

  std::size_t hom(const Representation& m, const Representation& n);
  std::size_t ext1(const Representation& m, const Representation& n);
  std::size_t stable_hom_dim(const Representation& m, const Representation& n);
  const Representation& tau(const Representation& m);
  const Representation& tau_inverse(const Representation& m);
  bool is_projective(const Representation& m);
  bool is_injective(const Representation& m);
  ARClass classify(const Representation& m, int bound = 64);

  std::size_t derived_hom(const DerivedObject& u, const DerivedObject& v);
  DerivedObject serre(const DerivedObject& u);
  DerivedObject serre_inv(const DerivedObject& u);
  /// S^power for any integer power.
  DerivedObject serre_power(const DerivedObject& u, int power);
  /// S_1 = S o [-1] and its powers.
  DerivedObject s1_power(const DerivedObject& u, int power);

  /// Phi(X, i) = S^i(X[0]); throws projective_summand when X has a projective summand.
  DerivedObject phi(const PhiIndex& ix);
  /// (X, i) with Phi(X, i) isomorphic to m[l] for an indecomposable m.
  PhiIndex phi_preimage(const Representation& m, int l, int bound = 64);

  /// Multiset equality up to isomorphism of summands.
  bool equivalent(const DerivedObject& u, const DerivedObject& v);
  bool isomorphic(const Representation& a, const Representation& b);

 private:
  int intern(const Representation& m);
  PhiIndex checked_index(const DerivedObject& x, int level) const;

  QuiverPtr quiver_;
  PrimeField field_;
  std::uint64_t seed_;
  std::vector<Representation> modules_;
  std::unordered_map<Representation, int, RepresentationHash> ids_;
  std::unordered_map<int, int> tau_, tau_inv_;
  std::unordered_map<int, bool> projective_, injective_;
  std::unordered_map<std::uint64_t, std::size_t> hom_, ext_, stable_;
  std::unordered_map<std::uint64_t, bool> iso_;
};

/// dim Hom_R((X,i),(Y,j)) from the repetitive formula against dim Hom(Phi(X,i), Phi(Y,j)).
Report phi_hom_check(DerivedContext& ctx, const PhiIndex& a, const PhiIndex& b);

/// S^power(m[0]) lies in add(A) or negative shifts (power < 0), add(DA)[1] or shifts > 1 (power > 1).
Report sc0_check(DerivedContext& ctx, const Representation& m, int power);

}  // namespace hsg
