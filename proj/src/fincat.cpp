#include "fincat.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "json.hpp"

namespace hsg {

namespace {

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

std::string triple_name(const FinCat& c, std::size_t x, std::size_t y, std::size_t z) {
  return "(" + c.name(x) + ", " + c.name(y) + ", " + c.name(z) + ")";
}

Matrix columns_or_empty(const std::vector<Vector>& cols, std::size_t rows, const PrimeField& f) {
  return Matrix::from_columns(cols, rows, f);
}

}  // namespace

// ---------------------------------------------------------------------------
// FinCat

FinCat::FinCat(std::vector<std::string> objects, std::vector<std::vector<std::size_t>> hom_dims,
               std::vector<Vector> identities, std::vector<Matrix> compositions, PrimeField field)
    : objects_(std::move(objects)),
      hom_dims_(std::move(hom_dims)),
      identities_(std::move(identities)),
      composition_(std::move(compositions)),
      field_(field) {
  const std::size_t n = objects_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (objects_[i] == objects_[j]) fail(ErrorCode::duplicate_name, "duplicate object '" + objects_[i] + "'");
  if (hom_dims_.size() != n || identities_.size() != n || composition_.size() != n * n * n)
    fail(ErrorCode::invalid_category, "category tables do not match the object count");
  for (const auto& row : hom_dims_)
    if (row.size() != n) fail(ErrorCode::invalid_category, "hom dimension table is not square");
  for (std::size_t x = 0; x < n; ++x)
    if (identities_[x].size() != hom_dims_[x][x]) fail(ErrorCode::invalid_category, "identity has the wrong length");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Matrix& m = composition(x, y, z);
        if (m.rows() != hom_dims_[x][z] || m.cols() != hom_dims_[y][z] * hom_dims_[x][y] || !(m.field() == field_))
          fail(ErrorCode::invalid_category, "composition table " + triple_name(*this, x, y, z) + " has the wrong shape");
      }
  if (auto err = check_tables(local_)) fail(ErrorCode::invalid_category, *err);
}

std::size_t FinCat::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  fail(ErrorCode::unknown_object, "unknown object '" + std::string(name) + "'");
}

Vector FinCat::compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const {
  const Matrix& c = composition(x, y, z);
  const std::size_t dxy = hom_dims_[x][y];
  Vector out(hom_dims_[x][z], 0);
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (g[b] == 0) continue;
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (f[a] == 0) continue;
      Residue s = field_.mul(g[b], f[a]);
      for (std::size_t r = 0; r < out.size(); ++r) out[r] = field_.add(out[r], field_.mul(s, c(r, b * dxy + a)));
    }
  }
  return out;
}

std::optional<std::string> FinCat::validate() const {
  std::vector<LocalStructure> local;
  return check_tables(local);
}

std::optional<std::string> FinCat::check_tables(std::vector<LocalStructure>& local) const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    if (hom_dims_[x][x] == 0) return "object " + name(x) + " has a zero endomorphism ring";
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < hom_dims_[x][y]; ++a) {
        Vector e = unit_vector(hom_dims_[x][y], a);
        if (compose(x, x, y, e, identities_[x]) != e || compose(x, y, y, identities_[y], e) != e)
          return "identity of " + name(x) + " or " + name(y) + " is not a unit";
      }
  }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x) {
      if (hom_dims_[w][x] == 0) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (hom_dims_[x][y] == 0) continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (hom_dims_[y][z] == 0) continue;
          for (std::size_t h = 0; h < hom_dims_[y][z]; ++h)
            for (std::size_t g = 0; g < hom_dims_[x][y]; ++g) {
              Vector hv = unit_vector(hom_dims_[y][z], h), gv = unit_vector(hom_dims_[x][y], g);
              Vector hg = compose(x, y, z, hv, gv);
              for (std::size_t f = 0; f < hom_dims_[w][x]; ++f) {
                Vector fv = unit_vector(hom_dims_[w][x], f);
                if (compose(w, y, z, hv, compose(w, x, y, gv, fv)) != compose(w, x, z, hg, fv))
                  return "composition is not associative on " + name(w) + " -> " + name(x) + " -> " + name(y) +
                         " -> " + name(z);
              }
            }
        }
      }
    }
  local.clear();
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t d = hom_dims_[x][x];
    AlgebraTable t{field_, d, {}, identities_[x]};
    const Matrix& c = composition(x, x, x);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) t.products.push_back(c.column(i * d + j));
    std::optional<LocalStructure> ls;
    try {
      ls = local_structure(t);
    } catch (const Error& e) {
      return "End(" + name(x) + "): " + e.what();
    }
    if (!ls) return "End(" + name(x) + ") is not local with residue field k";
    local.push_back(std::move(*ls));
  }
  return std::nullopt;
}

std::vector<Vector> FinCat::radical(std::size_t x, std::size_t y) const {
  if (x == y) return local_.at(x).radical;
  std::vector<Vector> all;
  for (std::size_t a = 0; a < hom_dims_[x][y]; ++a) all.push_back(unit_vector(hom_dims_[x][y], a));
  return all;
}

FinCat FinCat::from_json(std::string_view text, PrimeField field) {
  using nlohmann::ordered_json;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::parse, std::string("category JSON: ") + e.what());
  }
  try {
    auto objects = doc.at("objects").get<std::vector<std::string>>();
    const std::size_t n = objects.size();
    auto raw_dims = doc.at("hom_dims").get<std::vector<std::vector<std::int64_t>>>();
    if (raw_dims.size() != n) fail(ErrorCode::parse, "category JSON: hom_dims must be n x n");
    std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      if (raw_dims[x].size() != n) fail(ErrorCode::parse, "category JSON: hom_dims must be n x n");
      for (std::size_t y = 0; y < n; ++y) {
        if (raw_dims[x][y] < 0 || raw_dims[x][y] > 10000) fail(ErrorCode::parse, "category JSON: bad hom dimension");
        dims[x][y] = static_cast<std::size_t>(raw_dims[x][y]);
      }
    }
    auto index = [&](const std::string& s) -> std::size_t {
      for (std::size_t i = 0; i < n; ++i)
        if (objects[i] == s) return i;
      fail(ErrorCode::parse, "category JSON: unknown object '" + s + "'");
    };
    auto raw_ids = doc.at("identities").get<std::vector<std::vector<std::int64_t>>>();
    if (raw_ids.size() != n) fail(ErrorCode::parse, "category JSON: one identity per object");
    std::vector<Vector> ids;
    for (std::size_t x = 0; x < n; ++x) {
      if (raw_ids[x].size() != dims[x][x]) fail(ErrorCode::parse, "category JSON: identity length mismatch");
      Vector v;
      for (auto c : raw_ids[x]) v.push_back(field.reduce(c));
      ids.push_back(std::move(v));
    }
    std::vector<Matrix> comp;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) comp.emplace_back(dims[x][z], dims[y][z] * dims[x][y], field);
    for (const auto& entry : doc.at("compositions")) {
      std::size_t x = index(entry.at("source").get<std::string>());
      std::size_t y = index(entry.at("middle").get<std::string>());
      std::size_t z = index(entry.at("target").get<std::string>());
      auto rows = entry.at("constants").get<std::vector<std::vector<std::int64_t>>>();
      Matrix& m = comp[(x * n + y) * n + z];
      if (rows.size() != m.rows()) fail(ErrorCode::parse, "category JSON: constants have the wrong row count");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) fail(ErrorCode::parse, "category JSON: constants have the wrong column count");
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = field.reduce(rows[r][c]);
      }
    }
    return FinCat(std::move(objects), std::move(dims), std::move(ids), std::move(comp), field);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("category JSON: ") + e.what());
  }
}

FinCat FinCat::load(const std::string& path, PrimeField field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse, "cannot open category file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), field);
}

std::string FinCat::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["objects"] = objects_;
  doc["hom_dims"] = hom_dims_;
  ordered_json ids = ordered_json::array();
  for (const auto& v : identities_) {
    ordered_json row = ordered_json::array();
    for (auto c : v) row.push_back(field_.symmetric(c));
    ids.push_back(row);
  }
  doc["identities"] = ids;
  ordered_json comps = ordered_json::array();
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Matrix& m = composition(x, y, z);
        if (m.rows() * m.cols() == 0 || m.is_zero()) continue;
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
          ordered_json row = ordered_json::array();
          for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(field_.symmetric(m(r, c)));
          rows.push_back(row);
        }
        comps.push_back({{"source", objects_[x]}, {"middle", objects_[y]}, {"target", objects_[z]}, {"constants", rows}});
      }
  doc["compositions"] = comps;
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Modules

FinCatModule::FinCatModule(FinCatPtr cat, std::vector<int> dims, std::vector<std::vector<Matrix>> action)
    : cat_(std::move(cat)), dims_(std::move(dims)), action_(std::move(action)) {
  const std::size_t n = cat_->size();
  if (dims_.size() != n || action_.size() != n * n) fail(ErrorCode::dimension_mismatch, "module tables do not match the category");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& acts = action_[x * n + y];
      if (acts.size() != cat_->hom_dim(x, y)) fail(ErrorCode::dimension_mismatch, "one action matrix per basis morphism");
      for (const auto& m : acts)
        if (m.rows() != static_cast<std::size_t>(dims_[x]) || m.cols() != static_cast<std::size_t>(dims_[y]))
          fail(ErrorCode::dimension_mismatch, "action matrix has the wrong shape");
    }
}

FinCatModule FinCatModule::zero(FinCatPtr cat) {
  const std::size_t n = cat->size();
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) action[x * n + y].assign(cat->hom_dim(x, y), Matrix(0, 0, cat->field()));
  return FinCatModule(cat, std::vector<int>(n, 0), std::move(action));
}

int FinCatModule::total_dim() const noexcept {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

Matrix FinCatModule::act(std::size_t x, std::size_t y, const Vector& f) const {
  Matrix out(dims_[x], dims_[y], cat_->field());
  for (std::size_t a = 0; a < f.size(); ++a)
    if (f[a] != 0) out.add_to_block(0, 0, action(x, y, a), f[a]);
  return out;
}

std::vector<std::size_t> FinCatModule::support() const {
  std::vector<std::size_t> s;
  for (std::size_t x = 0; x < dims_.size(); ++x)
    if (dims_[x] > 0) s.push_back(x);
  return s;
}

std::optional<std::string> FinCatModule::validate() const {
  const FinCat& c = *cat_;
  const std::size_t n = c.size();
  const PrimeField& f = c.field();
  for (std::size_t x = 0; x < n; ++x)
    if (!(act(x, x, c.identity(x)) == Matrix::identity(dims_[x], f))) return "identity of " + c.name(x) + " acts non-trivially";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (c.hom_dim(x, y) == 0 || c.hom_dim(y, z) == 0) continue;
        const Matrix& comp = c.composition(x, y, z);
        for (std::size_t b = 0; b < c.hom_dim(y, z); ++b)
          for (std::size_t a = 0; a < c.hom_dim(x, y); ++a)
            if (!(act(x, z, comp.column(b * c.hom_dim(x, y) + a)) == action(x, y, a) * action(y, z, b)))
              return "contravariance fails on " + c.name(x) + " -> " + c.name(y) + " -> " + c.name(z);
      }
  return std::nullopt;
}

bool is_module_morphism(const FinCatModule& m, const FinCatModule& n, const ModuleMorphism& phi) {
  const FinCat& c = m.cat();
  const std::size_t k = c.size();
  if (phi.components.size() != k) return false;
  for (std::size_t x = 0; x < k; ++x)
    if (phi.components[x].rows() != static_cast<std::size_t>(n.dim(x)) ||
        phi.components[x].cols() != static_cast<std::size_t>(m.dim(x)))
      return false;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t a = 0; a < c.hom_dim(x, y); ++a)
        if (!(phi.components[x] * m.action(x, y, a) == n.action(x, y, a) * phi.components[y])) return false;
  return true;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  ModuleMorphism out;
  for (std::size_t x = 0; x < f.components.size(); ++x) out.components.push_back(g.components[x] * f.components[x]);
  return out;
}

FinCatModule yoneda_module(const FinCatPtr& c, std::size_t x) {
  const std::size_t n = c->size();
  if (x >= n) fail(ErrorCode::unknown_object, "unknown object index");
  std::vector<int> dims(n);
  for (std::size_t y = 0; y < n; ++y) dims[y] = static_cast<int>(c->hom_dim(y, x));
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      const std::size_t dyz = c->hom_dim(y, z);
      const Matrix& comp = c->composition(y, z, x);
      for (std::size_t a = 0; a < dyz; ++a) {
        Matrix m(dims[y], dims[z], c->field());
        for (int e = 0; e < dims[z]; ++e)
          for (int r = 0; r < dims[y]; ++r) m(r, e) = comp(r, e * dyz + a);
        action[y * n + z].push_back(std::move(m));
      }
    }
  return FinCatModule(c, std::move(dims), std::move(action));
}

FinCatModule co_injective(const FinCatPtr& c, std::size_t x) {
  const std::size_t n = c->size();
  if (x >= n) fail(ErrorCode::unknown_object, "unknown object index");
  std::vector<int> dims(n);
  for (std::size_t y = 0; y < n; ++y) dims[y] = static_cast<int>(c->hom_dim(x, y));
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      const std::size_t dxy = c->hom_dim(x, y);
      const Matrix& comp = c->composition(x, y, z);
      for (std::size_t a = 0; a < c->hom_dim(y, z); ++a) {
        // C(x, f) : C(x, y) -> C(x, z), h -> f o h; the module acts by its dual map.
        Matrix post(dims[z], dims[y], c->field());
        for (std::size_t e = 0; e < dxy; ++e)
          for (int r = 0; r < dims[z]; ++r) post(r, e) = comp(r, a * dxy + e);
        action[y * n + z].push_back(dual_map(post));
      }
    }
  return FinCatModule(c, std::move(dims), std::move(action));
}

FinCatModule simple_module(const FinCatPtr& c, std::size_t x) {
  const std::size_t n = c->size();
  if (x >= n) fail(ErrorCode::unknown_object, "unknown object index");
  std::vector<int> dims(n, 0);
  dims[x] = 1;
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t a = 0; a < c->hom_dim(y, z); ++a) {
        Matrix m(dims[y], dims[z], c->field());
        if (y == x && z == x) m(0, 0) = c->residue(x)[a];
        action[y * n + z].push_back(std::move(m));
      }
  return FinCatModule(c, std::move(dims), std::move(action));
}

std::vector<FinCatModule> simple_modules(const FinCatPtr& c) {
  std::vector<FinCatModule> out;
  for (std::size_t x = 0; x < c->size(); ++x) out.push_back(simple_module(c, x));
  return out;
}

FinCatModule direct_sum(const std::vector<FinCatModule>& parts) {
  if (parts.empty()) fail(ErrorCode::invalid_argument, "direct sum of an empty list");
  const FinCatPtr& c = parts.front().cat_ptr();
  const std::size_t n = c->size();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts) {
    if (p.cat_ptr() != c) fail(ErrorCode::invalid_argument, "modules over different categories");
    for (std::size_t x = 0; x < n; ++x) dims[x] += p.dim(x);
  }
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < c->hom_dim(x, y); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.action(x, y, a));
        action[x * n + y].push_back(block_diagonal(blocks, c->field()));
      }
  return FinCatModule(c, std::move(dims), std::move(action));
}

FinCatModule submodule(const FinCatModule& m, const std::vector<Matrix>& bases) {
  const FinCat& c = m.cat();
  const std::size_t n = c.size();
  std::vector<int> dims;
  for (const auto& b : bases) dims.push_back(static_cast<int>(b.cols()));
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < c.hom_dim(x, y); ++a) {
        Matrix sol;
        if (!solve_matrix(bases[x], m.action(x, y, a) * bases[y], sol))
          fail(ErrorCode::internal, "subspace family is not a submodule");
        action[x * n + y].push_back(std::move(sol));
      }
  return FinCatModule(m.cat_ptr(), std::move(dims), std::move(action));
}

FinCatModule quotient(const FinCatModule& m, const std::vector<Matrix>& bases) {
  const FinCat& c = m.cat();
  const PrimeField& f = c.field();
  const std::size_t n = c.size();
  std::vector<Matrix> complement, projection;
  std::vector<int> dims;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix id = Matrix::identity(m.dim(x), f);
    std::vector<Vector> cols;
    for (auto i : extending_columns(bases[x], id)) cols.push_back(id.column(i));
    Matrix comp = columns_or_empty(cols, m.dim(x), f);
    Matrix change = inverse(hstack(comp, bases[x]));
    projection.push_back(change.block(0, 0, cols.size(), m.dim(x)));
    complement.push_back(std::move(comp));
    dims.push_back(static_cast<int>(cols.size()));
  }
  std::vector<std::vector<Matrix>> action(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < c.hom_dim(x, y); ++a)
        action[x * n + y].push_back(projection[x] * m.action(x, y, a) * complement[y]);
  return FinCatModule(m.cat_ptr(), std::move(dims), std::move(action));
}

namespace {

Matrix naturality_system(const FinCatModule& m, const FinCatModule& n, std::vector<std::size_t>& offset) {
  const FinCat& c = m.cat();
  const std::size_t k = c.size();
  const PrimeField& f = c.field();
  offset.assign(k + 1, 0);
  for (std::size_t x = 0; x < k; ++x) offset[x + 1] = offset[x] + static_cast<std::size_t>(n.dim(x)) * m.dim(x);
  std::size_t rows = 0;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) rows += c.hom_dim(x, y) * static_cast<std::size_t>(n.dim(x)) * m.dim(y);
  Matrix sys(rows, offset[k], f);
  std::size_t row = 0;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t a = 0; a < c.hom_dim(x, y); ++a) {
        const Matrix& ma = m.action(x, y, a);  // M(x) <- M(y)
        const Matrix& na = n.action(x, y, a);
        // phi_x M(f) - N(f) phi_y = 0, entry (r, col).
        for (int r = 0; r < n.dim(x); ++r)
          for (int col = 0; col < m.dim(y); ++col, ++row) {
            for (int q = 0; q < m.dim(x); ++q) {
              Residue v = ma(q, col);
              if (v == 0) continue;
              std::size_t idx = offset[x] + static_cast<std::size_t>(r) * m.dim(x) + q;
              sys(row, idx) = f.add(sys(row, idx), v);
            }
            for (int q = 0; q < n.dim(y); ++q) {
              Residue v = na(r, q);
              if (v == 0) continue;
              std::size_t idx = offset[y] + static_cast<std::size_t>(q) * m.dim(y) + col;
              sys(row, idx) = f.sub(sys(row, idx), v);
            }
          }
      }
  return sys;
}

}  // namespace

std::vector<ModuleMorphism> module_hom_basis(const FinCatModule& m, const FinCatModule& n) {
  std::vector<std::size_t> offset;
  Matrix sys = naturality_system(m, n, offset);
  const std::size_t k = m.cat().size();
  std::vector<ModuleMorphism> out;
  for (const auto& v : kernel_basis(sys)) {
    ModuleMorphism phi;
    for (std::size_t x = 0; x < k; ++x) {
      Matrix comp(n.dim(x), m.dim(x), m.cat().field());
      for (int r = 0; r < n.dim(x); ++r)
        for (int q = 0; q < m.dim(x); ++q) comp(r, q) = v[offset[x] + static_cast<std::size_t>(r) * m.dim(x) + q];
      phi.components.push_back(std::move(comp));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

std::size_t module_hom_dimension(const FinCatModule& m, const FinCatModule& n) {
  std::vector<std::size_t> offset;
  Matrix sys = naturality_system(m, n, offset);
  return sys.cols() - rank(sys);
}

// ---------------------------------------------------------------------------
// Resolutions

std::vector<std::size_t> free_offsets(const FinCat& c, const std::vector<std::size_t>& generators, std::size_t y) {
  std::vector<std::size_t> off(generators.size() + 1, 0);
  for (std::size_t g = 0; g < generators.size(); ++g) off[g + 1] = off[g] + c.hom_dim(y, generators[g]);
  return off;
}

FinCatModule free_module(const FinCatPtr& c, const std::vector<std::size_t>& generators) {
  if (generators.empty()) return FinCatModule::zero(c);
  std::vector<FinCatModule> parts;
  for (auto x : generators) parts.push_back(yoneda_module(c, x));
  return direct_sum(parts);
}

namespace {

/// Basis of rad M(x) = sum of images of radical morphisms out of x.
Matrix radical_part(const FinCatModule& m, std::size_t x) {
  const FinCat& c = m.cat();
  std::vector<Vector> cols;
  for (std::size_t y = 0; y < c.size(); ++y) {
    if (m.dim(y) == 0) continue;
    for (const auto& r : c.radical(x, y)) {
      Matrix img = m.act(x, y, r);
      for (std::size_t j = 0; j < img.cols(); ++j) cols.push_back(img.column(j));
    }
  }
  return Matrix::from_columns(cols, m.dim(x), c.field());
}

}  // namespace

ProjectiveCoverData module_projective_cover(const FinCatModule& m) {
  const FinCat& c = m.cat();
  const PrimeField& f = c.field();
  ProjectiveCoverData pc{{}, {}, FinCatModule::zero(m.cat_ptr()), {}};
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (m.dim(x) == 0) continue;
    Matrix rad = radical_part(m, x);
    Matrix id = Matrix::identity(m.dim(x), f);
    for (auto i : extending_columns(rad, id)) {
      pc.generators.push_back(x);
      pc.elements.push_back(id.column(i));
    }
  }
  pc.projective = free_module(m.cat_ptr(), pc.generators);
  for (std::size_t y = 0; y < c.size(); ++y) {
    auto off = free_offsets(c, pc.generators, y);
    Matrix comp(m.dim(y), off.back(), f);
    for (std::size_t g = 0; g < pc.generators.size(); ++g)
      for (std::size_t e = 0; e < c.hom_dim(y, pc.generators[g]); ++e) {
        Vector img = m.action(y, pc.generators[g], e).apply(pc.elements[g]);
        for (int r = 0; r < m.dim(y); ++r) comp(r, off[g] + e) = img[r];
      }
    pc.cover.components.push_back(std::move(comp));
  }
  return pc;
}

Resolution minimal_projective_resolution(const FinCatModule& m, int depth) {
  if (depth < 0) fail(ErrorCode::invalid_argument, "resolution depth must be nonnegative");
  const FinCat& c = m.cat();
  Resolution res;
  res.syzygies.push_back(m);
  std::vector<Matrix> previous_kernel;  // basis of the current syzygy inside P_{n-1}
  for (int step = 0; step <= depth; ++step) {
    const FinCatModule& k = res.syzygies.back();
    ProjectiveCoverData pc = module_projective_cover(k);
    ResolutionStep rs;
    rs.generators = pc.generators;
    if (step > 0)
      for (std::size_t g = 0; g < pc.generators.size(); ++g)
        rs.images.push_back(previous_kernel[pc.generators[g]].apply(pc.elements[g]));
    res.steps.push_back(std::move(rs));
    std::vector<Matrix> kernel;
    bool zero = true;
    for (std::size_t y = 0; y < c.size(); ++y) {
      kernel.push_back(Matrix::from_columns(kernel_basis(pc.cover.components[y]), pc.projective.dim(y), c.field()));
      if (kernel.back().cols() > 0) zero = false;
      // Minimality: the kernel of a projective cover lies in the radical of the projective.
      if (kernel.back().cols() > 0) {
        Matrix rad = radical_part(pc.projective, y);
        if (rank(hstack(rad, kernel.back())) != rank(rad)) fail(ErrorCode::internal, "projective cover is not minimal");
      }
    }
    if (zero) {
      res.terminated = true;
      break;
    }
    res.syzygies.push_back(submodule(pc.projective, kernel));
    previous_kernel = std::move(kernel);
  }
  return res;
}

namespace {

/// Matrix of Hom(P_{n-1}, N) -> Hom(P_n, N) induced by the differential P_n -> P_{n-1}.
Matrix induced_differential(const FinCat& c, const ResolutionStep& from, const ResolutionStep& to, const FinCatModule& n) {
  std::vector<std::size_t> col_off(from.generators.size() + 1, 0), row_off(to.generators.size() + 1, 0);
  for (std::size_t g = 0; g < from.generators.size(); ++g) col_off[g + 1] = col_off[g] + n.dim(from.generators[g]);
  for (std::size_t g = 0; g < to.generators.size(); ++g) row_off[g + 1] = row_off[g] + n.dim(to.generators[g]);
  Matrix d(row_off.back(), col_off.back(), c.field());
  for (std::size_t h = 0; h < to.generators.size(); ++h) {
    std::size_t y = to.generators[h];
    auto off = free_offsets(c, from.generators, y);
    for (std::size_t g = 0; g < from.generators.size(); ++g)
      for (std::size_t e = 0; e < c.hom_dim(y, from.generators[g]); ++e) {
        Residue coef = to.images[h][off[g] + e];
        if (coef != 0) d.add_to_block(row_off[h], col_off[g], n.action(y, from.generators[g], e), coef);
      }
  }
  return d;
}

}  // namespace

std::size_t ext_group(const Resolution& res, const FinCatModule& n, int deg) {
  if (deg < 0) fail(ErrorCode::invalid_argument, "negative Ext degree");
  const auto have = static_cast<int>(res.steps.size());
  if (!res.terminated && have < deg + 2)
    fail(ErrorCode::resolution_depth_exceeded,
         "resolution holds P_0..P_" + std::to_string(have - 1) + ", Ext^" + std::to_string(deg) + " needs P_" +
             std::to_string(deg + 1));
  if (deg >= have) return 0;
  const FinCat& c = n.cat();
  std::size_t hom = 0;
  for (auto x : res.steps[deg].generators) hom += n.dim(x);
  std::size_t out_rank = deg + 1 < have ? rank(induced_differential(c, res.steps[deg], res.steps[deg + 1], n)) : 0;
  std::size_t in_rank = deg >= 1 ? rank(induced_differential(c, res.steps[deg - 1], res.steps[deg], n)) : 0;
  return hom - out_rank - in_rank;
}

std::size_t ext_group(const FinCatModule& m, const FinCatModule& n, int deg) {
  return ext_group(minimal_projective_resolution(m, deg + 1), n, deg);
}

std::optional<int> projective_dimension(const FinCatModule& m, int cap) {
  Resolution res = minimal_projective_resolution(m, cap);
  if (!res.terminated) return std::nullopt;
  return static_cast<int>(res.steps.size()) - 1;
}

GlobalDimension global_dimension(const FinCatPtr& c, int cap) {
  if (cap < 0) fail(ErrorCode::invalid_argument, "negative cap");
  GlobalDimension g;
  for (const auto& s : simple_modules(c)) {
    auto pd = projective_dimension(s, cap);
    if (!pd) return GlobalDimension{true, cap};
    g.value = std::max(g.value, *pd);
  }
  return g;
}

std::size_t module_stable_hom_dimension(const FinCatModule& m, const FinCatModule& n) {
  auto hom = module_hom_basis(m, n);
  if (hom.empty()) return 0;
  ProjectiveCoverData pc = module_projective_cover(n);
  std::vector<Vector> images;
  for (const auto& h : module_hom_basis(m, pc.projective)) {
    ModuleMorphism g = compose(pc.cover, h);
    Vector flat;
    for (const auto& comp : g.components) flat.insert(flat.end(), comp.raw().begin(), comp.raw().end());
    images.push_back(std::move(flat));
  }
  if (images.empty()) return hom.size();
  return hom.size() - rank(Matrix::from_columns(images, images.front().size(), m.cat().field()));
}

}  // namespace hsg
