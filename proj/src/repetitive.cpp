#include "repetitive.hpp"

#include "error.hpp"

namespace hsg {

namespace {

FinCatPtr build_window_category(const FinCat& base, int lo, int hi) {
  const std::size_t nb = base.size();
  const std::size_t levels = static_cast<std::size_t>(hi - lo + 1);
  const std::size_t n = nb * levels;
  const PrimeField& f = base.field();
  auto level_of = [&](std::size_t o) { return lo + static_cast<int>(o / nb); };
  auto base_of = [&](std::size_t o) { return o % nb; };

  std::vector<std::string> names;
  for (std::size_t o = 0; o < n; ++o) names.push_back(base.name(base_of(o)) + "@" + std::to_string(level_of(o)));

  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n, 0));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      int i = level_of(p), j = level_of(q);
      if (i == j) dims[p][q] = base.hom_dim(base_of(p), base_of(q));
      if (j == i + 1) dims[p][q] = base.hom_dim(base_of(q), base_of(p));
    }

  std::vector<Vector> ids;
  for (std::size_t p = 0; p < n; ++p) ids.push_back(base.identity(base_of(p)));

  std::vector<Matrix> comp;
  comp.reserve(n * n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        Matrix m(dims[p][r], dims[q][r] * dims[p][q], f);
        const int i = level_of(p), j = level_of(q), k = level_of(r);
        const std::size_t x = base_of(p), y = base_of(q), z = base_of(r);
        if (m.rows() > 0 && m.cols() > 0) {
          if (i == j && j == k) {
            m = base.composition(x, y, z);
          } else if (i == j && k == i + 1) {
            // f in C(X,Y), g in DC(Z,Y): (g o f)(c) = g(f o c) for c in C(Z,X).
            const Matrix& b = base.composition(z, x, y);
            const std::size_t dzx = base.hom_dim(z, x), dxy = base.hom_dim(x, y);
            for (std::size_t gi = 0; gi < base.hom_dim(z, y); ++gi)
              for (std::size_t fi = 0; fi < dxy; ++fi)
                for (std::size_t c = 0; c < dzx; ++c) m(c, gi * dxy + fi) = b(gi, fi * dzx + c);
          } else if (j == i + 1 && k == j) {
            // f in DC(Y,X), g in C(Y,Z): (g o f)(c) = f(c o g) for c in C(Z,X).
            const Matrix& b = base.composition(y, z, x);
            const std::size_t dyz = base.hom_dim(y, z), dyx = base.hom_dim(y, x);
            for (std::size_t gi = 0; gi < dyz; ++gi)
              for (std::size_t fi = 0; fi < dyx; ++fi)
                for (std::size_t c = 0; c < base.hom_dim(z, x); ++c) m(c, gi * dyx + fi) = b(fi, c * dyz + gi);
          }
        }
        comp.push_back(std::move(m));
      }
  return std::make_shared<const FinCat>(std::move(names), std::move(dims), std::move(ids), std::move(comp), f);
}

}  // namespace

RepetitiveWindow::RepetitiveWindow(FinCatPtr base, int lo, int hi) : base_(std::move(base)), lo_(lo), hi_(hi) {
  if (lo > hi) fail(ErrorCode::invalid_argument, "window needs lo <= hi");
  if (hi - lo > 64) fail(ErrorCode::invalid_argument, "window wider than 65 levels");
  cat_ = build_window_category(*base_, lo, hi);
}

std::size_t RepetitiveWindow::object(std::size_t x, int level) const {
  if (!contains(level)) fail(ErrorCode::unknown_object, "level " + std::to_string(level) + " is outside the window");
  if (x >= base_->size()) fail(ErrorCode::unknown_object, "unknown base object");
  return static_cast<std::size_t>(level - lo_) * base_->size() + x;
}

std::size_t RepetitiveWindow::formula_hom_dim(std::size_t from, std::size_t to) const {
  const int i = level(from), j = level(to);
  if (i == j) return base_->hom_dim(base_object(from), base_object(to));
  if (j == i + 1) return base_->hom_dim(base_object(to), base_object(from));
  return 0;
}

RepetitiveWindow build_repetitive_window(FinCatPtr base, int lo, int hi) { return RepetitiveWindow(std::move(base), lo, hi); }

Report hom_table_check(const RepetitiveWindow& w) {
  Report r;
  r.check_name = "hom-table";
  const FinCat& c = *w.cat();
  for (std::size_t p = 0; p < c.size(); ++p)
    for (std::size_t q = 0; q < c.size(); ++q)
      r.expect_equal(static_cast<std::int64_t>(w.formula_hom_dim(p, q)), static_cast<std::int64_t>(c.hom_dim(p, q)),
                     "dim Hom(" + c.name(p) + ", " + c.name(q) + ")");
  auto err = c.validate();
  r.record(!err.has_value(), "associativity and units of the window", "valid", err.value_or("valid"));
  return r;
}

Report serre_shift_check(const RepetitiveWindow& w) {
  Report r;
  r.check_name = "serre-shift";
  const FinCat& c = *w.cat();
  for (std::size_t p = 0; p < c.size(); ++p) {
    const int i = w.level(p);
    if (!w.contains(i + 1)) {
      r.skipped += static_cast<std::int64_t>(c.size());
      continue;
    }
    std::size_t shifted = w.object(w.base_object(p), i + 1);
    for (std::size_t q = 0; q < c.size(); ++q)
      r.expect_equal(static_cast<std::int64_t>(c.hom_dim(p, q)), static_cast<std::int64_t>(c.hom_dim(q, shifted)),
                     "Hom(" + c.name(p) + ", " + c.name(q) + ") vs Hom(" + c.name(q) + ", " + c.name(shifted) + ")");
  }
  return r;
}

FinCatModule embed_at_level(const RepetitiveWindow& w, const FinCatModule& base_module, int level) {
  if (!w.contains(level)) fail(ErrorCode::unknown_object, "level " + std::to_string(level) + " is outside the window");
  const FinCat& c = *w.cat();
  const std::size_t n = c.size();
  std::vector<int> dims(n, 0);
  for (std::size_t x = 0; x < w.base()->size(); ++x) dims[w.object(x, level)] = base_module.dim(x);
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t a = 0; a < c.hom_dim(p, q); ++a) {
        if (w.level(p) == level && w.level(q) == level)
          action[p * n + q].push_back(base_module.action(w.base_object(p), w.base_object(q), a));
        else
          action[p * n + q].emplace_back(dims[p], dims[q], c.field());
      }
  return FinCatModule(w.cat(), std::move(dims), std::move(action));
}

FinCatModule rho(const RepetitiveWindow& w, const FinCatModule& m, int level) {
  if (!w.contains(level)) fail(ErrorCode::unknown_object, "level " + std::to_string(level) + " is outside the window");
  const FinCat& c = *w.cat();
  const std::size_t n = c.size();
  std::vector<int> dims(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    if (w.level(p) == level) dims[p] = m.dim(p);
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t a = 0; a < c.hom_dim(p, q); ++a) {
        if (w.level(p) == level && w.level(q) == level)
          action[p * n + q].push_back(m.action(p, q, a));
        else
          action[p * n + q].emplace_back(dims[p], dims[q], c.field());
      }
  return FinCatModule(w.cat(), std::move(dims), std::move(action));
}

Report check_structural_sequence(const RepetitiveWindow& w, std::size_t x, int level) {
  Report r;
  r.check_name = "structural-sequence";
  const std::string where = w.base()->name(x) + "@" + std::to_string(level);
  if (level <= w.lo() || level > w.hi()) {
    r.record(false, where, "interior level", "kernel term leaves the window");
    return r;
  }
  const FinCat& c = *w.cat();
  const PrimeField& f = c.field();
  FinCatModule kernel_term = embed_at_level(w, co_injective(w.base(), x), level - 1);
  FinCatModule middle = yoneda_module(w.cat(), w.object(x, level));
  FinCatModule quotient_term = embed_at_level(w, yoneda_module(w.base(), x), level);

  ModuleMorphism alpha, beta;
  for (std::size_t p = 0; p < c.size(); ++p) {
    Matrix a(middle.dim(p), kernel_term.dim(p), f), b(quotient_term.dim(p), middle.dim(p), f);
    if (w.level(p) == level - 1) a = Matrix::identity(middle.dim(p), f);
    if (w.level(p) == level) b = Matrix::identity(middle.dim(p), f);
    alpha.components.push_back(std::move(a));
    beta.components.push_back(std::move(b));
  }
  r.record(is_module_morphism(kernel_term, middle, alpha), "alpha natural at " + where, "natural", "not natural");
  r.record(is_module_morphism(middle, quotient_term, beta), "beta natural at " + where, "natural", "not natural");
  for (std::size_t p = 0; p < c.size(); ++p) {
    const Matrix& a = alpha.components[p];
    const Matrix& b = beta.components[p];
    const std::size_t ra = rank(a), rb = rank(b);
    const bool injective = ra == static_cast<std::size_t>(kernel_term.dim(p));
    const bool surjective = rb == static_cast<std::size_t>(quotient_term.dim(p));
    const bool composite_zero = (b * a).is_zero();
    const bool middle_exact = static_cast<std::size_t>(middle.dim(p)) - rb == ra;
    std::string got = std::string(injective ? "" : "alpha not injective; ") + (surjective ? "" : "beta not surjective; ") +
                      (composite_zero ? "" : "beta alpha != 0; ") + (middle_exact ? "" : "not exact in the middle");
    r.record(injective && surjective && composite_zero && middle_exact, where + " at object " + c.name(p), "exact",
             got.empty() ? "exact" : got);
  }
  return r;
}

std::vector<FiltrationStep> filtration(const RepetitiveWindow& w, const FinCatModule& m) {
  std::vector<FiltrationStep> out;
  const FinCat& c = *w.cat();
  const PrimeField& f = c.field();
  int first = w.hi() + 1, last = w.lo() - 1;
  for (auto p : m.support()) {
    first = std::min(first, w.level(p));
    last = std::max(last, w.level(p));
  }
  std::vector<Matrix> previous;
  for (std::size_t p = 0; p < c.size(); ++p) previous.emplace_back(m.dim(p), 0, f);
  for (int level = first; level <= last; ++level) {
    // Lower levels are closed under the action: morphisms only raise the level.
    std::vector<Matrix> bases;
    for (std::size_t p = 0; p < c.size(); ++p)
      bases.push_back(w.level(p) <= level ? Matrix::identity(m.dim(p), f) : Matrix(m.dim(p), 0, f));
    FinCatModule sub = submodule(m, bases);
    std::vector<Matrix> inside;
    for (std::size_t p = 0; p < c.size(); ++p) {
      Matrix coords;
      if (!solve_matrix(bases[p], previous[p], coords)) fail(ErrorCode::internal, "filtration is not increasing");
      inside.push_back(std::move(coords));
    }
    FinCatModule q = quotient(sub, inside);
    out.push_back(FiltrationStep{level, std::move(sub), std::move(q)});
    previous = std::move(bases);
  }
  return out;
}

FinCatModule m_object(const RepetitiveWindow& w, std::size_t x) {
  if (!w.contains(0)) fail(ErrorCode::unknown_object, "the window does not contain level 0");
  return embed_at_level(w, yoneda_module(w.base(), x), 0);
}

void audit_margin(const RepetitiveWindow& w, const Resolution& res, const std::string& what) {
  for (std::size_t n = 0; n < res.steps.size(); ++n)
    for (auto g : res.steps[n].generators)
      if (w.level(g) == w.lo())
        fail(ErrorCode::margin_violation, what + ": P_" + std::to_string(n) + " has a generator at the window boundary " +
                                              std::to_string(w.lo()) + "; widen the window");
}

Report tilting_orthogonality_check(const RepetitiveWindow& w, std::size_t x, std::size_t y, int nmax) {
  if (nmax < 0) fail(ErrorCode::invalid_argument, "nmax must be nonnegative");
  Report r;
  r.check_name = "tilting";
  const FinCat& base = *w.base();
  FinCatModule mx = m_object(w, x), my = m_object(w, y);
  const std::string pair = "(" + base.name(x) + ", " + base.name(y) + ")";

  r.expect_equal(static_cast<std::int64_t>(base.hom_dim(x, y)), static_cast<std::int64_t>(module_stable_hom_dimension(mx, my)),
                 "stable Hom(M_x, M_y) for " + pair);
  if (nmax == 0) return r;

  Resolution rx = minimal_projective_resolution(mx, nmax + 1);
  audit_margin(w, rx, "resolution of M_" + base.name(x));
  for (int n = 1; n <= nmax; ++n)
    r.expect_equal(0, static_cast<std::int64_t>(ext_group(rx, my, n)), "Ext^" + std::to_string(n) + " " + pair);

  Resolution ry = minimal_projective_resolution(my, nmax + 1);
  audit_margin(w, ry, "resolution of M_" + base.name(y));
  for (int n = 1; n <= nmax; ++n) {
    if (static_cast<std::size_t>(n) >= ry.syzygies.size()) {
      r.record(true, "stable Hom(M_x, Omega^" + std::to_string(n) + " M_y) " + pair, "0", "0");
      continue;
    }
    r.expect_equal(0, static_cast<std::int64_t>(module_stable_hom_dimension(mx, ry.syzygies[n])),
                   "stable Hom(M_x, Omega^" + std::to_string(n) + " M_y) " + pair);
  }
  return r;
}

}  // namespace hsg
