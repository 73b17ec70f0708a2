#pragma once

#include <string>
#include <vector>

#include "fincat.hpp"
#include "report.hpp"

namespace hsg {

/// Levels lo..hi of the repetitive category of a base category.
class RepetitiveWindow {
 public:
  RepetitiveWindow(FinCatPtr base, int lo, int hi);

  const FinCatPtr& base() const noexcept { return base_; }
  const FinCatPtr& cat() const noexcept { return cat_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  bool contains(int level) const noexcept { return level >= lo_ && level <= hi_; }

  std::size_t object(std::size_t x, int level) const;
  std::size_t base_object(std::size_t obj) const { return obj % base_->size(); }
  int level(std::size_t obj) const { return lo_ + static_cast<int>(obj / base_->size()); }
  std::string object_name(std::size_t obj) const { return cat_->name(obj); }

  /// Hom dimension predicted by the three-case formula.
  std::size_t formula_hom_dim(std::size_t from, std::size_t to) const;

 private:
  FinCatPtr base_;
  int lo_;
  int hi_;
  FinCatPtr cat_;
};

/// Window [lo, hi] of the repetitive category; associativity is re-verified on construction.
RepetitiveWindow build_repetitive_window(FinCatPtr base, int lo, int hi);

/// Hom table against the three-case formula plus associativity and unit laws.
Report hom_table_check(const RepetitiveWindow& w);
/// dim Hom((X,i),(Y,j)) = dim Hom((Y,j),(X,i+1)) whenever (X,i+1) is in the window.
Report serre_shift_check(const RepetitiveWindow& w);

/// Base-category module placed at one level of the window.
FinCatModule embed_at_level(const RepetitiveWindow& w, const FinCatModule& base_module, int level);
/// Restriction to level i, re-embedded as a module over the window.
FinCatModule rho(const RepetitiveWindow& w, const FinCatModule& m, int level);

/// Exactness of 0 -> D C_{i-1}(X,-) -> R(-,(X,i)) -> C_i(-,X) -> 0 at every object.
Report check_structural_sequence(const RepetitiveWindow& w, std::size_t x, int level);

struct FiltrationStep {
  int level = 0;
  FinCatModule sub;       // levels <= level
  FinCatModule quotient;  // sub / previous sub, concentrated in `level`
};

std::vector<FiltrationStep> filtration(const RepetitiveWindow& w, const FinCatModule& m);

/// C_0(-, x) as a module over the window.
FinCatModule m_object(const RepetitiveWindow& w, std::size_t x);

/// Throws margin_violation if some projective of the resolution is generated at the lowest level.
void audit_margin(const RepetitiveWindow& w, const Resolution& res, const std::string& what);

/// Ext^n(M_x, M_y) = 0 for 1 <= n <= nmax, stable Hom(M_x, M_y) = dim C(x, y), and
/// stable Hom(M_x, Omega^n M_y) = 0 for 1 <= n <= nmax.
Report tilting_orthogonality_check(const RepetitiveWindow& w, std::size_t x, std::size_t y, int nmax);

}  // namespace hsg
