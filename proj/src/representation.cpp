#include "representation.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "error.hpp"
#include "local_algebra.hpp"

namespace hsg {

namespace {

void require_same_quiver(const Representation& a, const Representation& b) {
  if (!same_quiver(a.quiver(), b.quiver())) fail(ErrorCode::quiver_mismatch, "representations over different quivers");
  if (!(a.field() == b.field())) fail(ErrorCode::quiver_mismatch, "representations over different fields");
}

Matrix column_matrix(const std::vector<Vector>& cols, std::size_t rows, PrimeField f) {
  return Matrix::from_columns(cols, rows, f);
}

// Intertwiner system N(a) phi_s - phi_t M(a) = 0; unknown phi_v(r, c) sits at offset[v] + r dM(v) + c.
Matrix hom_system(const Representation& m, const Representation& n, std::vector<std::size_t>& offset) {
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  offset.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dim(v)) * m.dim(v);
  std::size_t rows = 0;
  for (const auto& a : q.arrows()) rows += static_cast<std::size_t>(n.dim(a.target)) * m.dim(a.source);
  Matrix sys(rows, offset[nv], m.field());
  const PrimeField& f = m.field();
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    const Matrix& na = n.map(static_cast<int>(ai));
    const Matrix& ma = m.map(static_cast<int>(ai));
    const int ds = m.dim(a.source), dt = m.dim(a.target);
    const int ns = n.dim(a.source), nt = n.dim(a.target);
    for (int r = 0; r < nt; ++r) {
      for (int c = 0; c < ds; ++c, ++row) {
        for (int k = 0; k < ns; ++k) {
          Residue x = na(r, k);
          if (x == 0) continue;
          std::size_t col = offset[a.source] + static_cast<std::size_t>(k) * ds + c;
          sys(row, col) = f.add(sys(row, col), x);
        }
        for (int k = 0; k < dt; ++k) {
          Residue x = ma(k, c);
          if (x == 0) continue;
          std::size_t col = offset[a.target] + static_cast<std::size_t>(r) * dt + k;
          sys(row, col) = f.sub(sys(row, col), x);
        }
      }
    }
  }
  return sys;
}

Matrix random_invertible(int n, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
  for (;;) {
    Matrix t(n, n, f);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) t(r, c) = dist(rng);
    if (is_invertible(t)) return t;
  }
}

Vector random_vector(std::size_t n, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
  Vector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(QuiverPtr quiver, std::vector<int> dims, std::vector<Matrix> maps, PrimeField field)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) fail(ErrorCode::invalid_argument, "representation without a quiver");
  if (dims_.size() != static_cast<std::size_t>(quiver_->vertex_count()))
    fail(ErrorCode::dimension_mismatch, "dimension vector length does not match the vertex count");
  for (int d : dims_)
    if (d < 0) fail(ErrorCode::dimension_mismatch, "negative dimension");
  if (maps_.size() != quiver_->arrows().size())
    fail(ErrorCode::dimension_mismatch, "one matrix per arrow is required");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& ar = quiver_->arrows()[a];
    if (maps_[a].rows() != static_cast<std::size_t>(dims_[ar.target]) ||
        maps_[a].cols() != static_cast<std::size_t>(dims_[ar.source]))
      fail(ErrorCode::dimension_mismatch, "matrix for arrow '" + ar.name + "' has the wrong shape");
    if (!(maps_[a].field() == field_)) fail(ErrorCode::dimension_mismatch, "matrix over the wrong field");
  }
}

Representation Representation::zero(QuiverPtr quiver, PrimeField field) {
  std::vector<int> dims(quiver->vertex_count(), 0);
  std::vector<Matrix> maps(quiver->arrows().size(), Matrix(0, 0, field));
  return Representation(std::move(quiver), std::move(dims), std::move(maps), field);
}

int Representation::total_dim() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), 0); }

std::vector<std::int64_t> Representation::dim_vector() const { return {dims_.begin(), dims_.end()}; }

Matrix Representation::path_action(int path_id) const {
  const Path& p = quiver_->path(path_id);
  Matrix acc = Matrix::identity(dims_[p.source], field_);
  for (int a : p.arrows) acc = maps_[a] * acc;
  return acc;
}

std::string Representation::dims_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
  return s + ")";
}

std::string Representation::to_text() const {
  std::ostringstream os;
  os << "dims";
  for (int d : dims_) os << " " << d;
  os << "\n";
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Matrix& m = maps_[a];
    os << "map " << quiver_->arrows()[a].name << " " << m.rows() << " x " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << field_.symmetric(m(r, c));
      os << "\n";
    }
  }
  return os.str();
}

bool operator==(const Representation& a, const Representation& b) {
  return same_quiver(*a.quiver_, *b.quiver_) && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

std::size_t RepresentationHash::operator()(const Representation& r) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ull; };
  for (int d : r.dims()) mix(static_cast<std::size_t>(d));
  for (const auto& m : r.maps())
    for (auto x : m.raw()) mix(x);
  return h;
}

// ---------------------------------------------------------------------------
// Morphisms

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (g.components.size() != f.components.size()) fail(ErrorCode::dimension_mismatch, "morphism vertex mismatch");
  RepMorphism out;
  out.components.reserve(f.components.size());
  for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g.components[v] * f.components[v]);
  return out;
}

RepMorphism identity_morphism(const Representation& m) {
  RepMorphism id;
  for (int d : m.dims()) id.components.push_back(Matrix::identity(d, m.field()));
  return id;
}

RepMorphism zero_morphism(const Representation& m, const Representation& n) {
  RepMorphism z;
  for (int v = 0; v < m.quiver().vertex_count(); ++v) z.components.emplace_back(n.dim(v), m.dim(v), m.field());
  return z;
}

bool is_morphism(const Representation& m, const Representation& n, const RepMorphism& f) {
  const Quiver& q = m.quiver();
  if (f.components.size() != static_cast<std::size_t>(q.vertex_count())) return false;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (f.components[v].rows() != static_cast<std::size_t>(n.dim(v)) ||
        f.components[v].cols() != static_cast<std::size_t>(m.dim(v)))
      return false;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    if (!(n.map(static_cast<int>(a)) * f.components[ar.source] == f.components[ar.target] * m.map(static_cast<int>(a))))
      return false;
  }
  return true;
}

bool is_isomorphism(const RepMorphism& f) {
  for (const auto& c : f.components)
    if (!is_invertible(c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Module files

Representation parse_module(QuiverPtr quiver, std::string_view text, PrimeField field) {
  std::vector<std::string> toks;
  {
    std::string cur;
    bool comment = false;
    for (char ch : text) {
      if (ch == '\n') comment = false;
      if (ch == '#') comment = true;
      if (comment || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        continue;
      }
      cur.push_back(ch);
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
  }
  std::size_t i = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (i >= toks.size()) fail(ErrorCode::parse, std::string("module file: unexpected end, expected ") + what);
    return toks[i++];
  };
  auto number = [&](const char* what) -> std::int64_t {
    const std::string& t = next(what);
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(ErrorCode::parse, "module file: expected an integer for " + std::string(what) + ", got '" + t + "'");
    }
  };
  const int nv = quiver->vertex_count();
  if (next("'dims'") != "dims") fail(ErrorCode::parse, "module file must start with 'dims'");
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) {
    auto d = number("a dimension");
    if (d < 0 || d > 100000) fail(ErrorCode::parse, "module file: dimension out of range");
    dims[v] = static_cast<int>(d);
  }
  std::vector<Matrix> maps;
  std::vector<bool> seen(quiver->arrows().size(), false);
  for (const auto& a : quiver->arrows()) maps.emplace_back(dims[a.target], dims[a.source], field);
  while (i < toks.size()) {
    if (next("'map'") != "map") fail(ErrorCode::parse, "module file: expected 'map', got '" + toks[i - 1] + "'");
    const std::string& name = next("an arrow name");
    int a = quiver->arrow_index(name);
    if (a < 0) fail(ErrorCode::parse, "module file: unknown arrow '" + name + "'");
    if (seen[a]) fail(ErrorCode::parse, "module file: arrow '" + name + "' given twice");
    seen[a] = true;
    auto r = number("rows");
    if (next("'x'") != "x") fail(ErrorCode::parse, "module file: expected 'r x c'");
    auto c = number("cols");
    if (r != static_cast<std::int64_t>(maps[a].rows()) || c != static_cast<std::int64_t>(maps[a].cols()))
      fail(ErrorCode::parse, "module file: map '" + name + "' shape does not match dims");
    for (std::int64_t rr = 0; rr < r; ++rr)
      for (std::int64_t cc = 0; cc < c; ++cc) maps[a](rr, cc) = field.reduce(number("a matrix entry"));
  }
  for (std::size_t a = 0; a < seen.size(); ++a)
    if (!seen[a] && maps[a].rows() * maps[a].cols() > 0)
      fail(ErrorCode::parse, "module file: missing map for arrow '" + quiver->arrows()[a].name + "'");
  return Representation(std::move(quiver), std::move(dims), std::move(maps), field);
}

Representation load_module(QuiverPtr quiver, const std::string& path, PrimeField field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse, "cannot open module file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_module(std::move(quiver), ss.str(), field);
}

// ---------------------------------------------------------------------------
// Constructions

Representation projective(QuiverPtr q, int v, PrimeField field) {
  if (v < 0 || v >= q->vertex_count()) fail(ErrorCode::unknown_vertex, "unknown vertex " + std::to_string(v + 1));
  const int n = q->vertex_count();
  std::vector<int> dims(n);
  for (int w = 0; w < n; ++w) dims[w] = static_cast<int>(q->paths_between(v, w).size());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->arrows().size(); ++a) {
    const Arrow& ar = q->arrows()[a];
    Matrix m(dims[ar.target], dims[ar.source], field);
    for (int p : q->paths_between(v, ar.source)) {
      int ext = q->concat(p, q->arrow_path(static_cast<int>(a)));
      m(q->position(ext), q->position(p)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), std::move(dims), std::move(maps), field);
}

Representation injective(QuiverPtr q, int v, PrimeField field) {
  if (v < 0 || v >= q->vertex_count()) fail(ErrorCode::unknown_vertex, "unknown vertex " + std::to_string(v + 1));
  const int n = q->vertex_count();
  std::vector<int> dims(n);
  for (int w = 0; w < n; ++w) dims[w] = static_cast<int>(q->paths_between(w, v).size());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->arrows().size(); ++a) {
    const Arrow& ar = q->arrows()[a];
    // Dual basis: p^* (p : source -> v) maps to q^* whenever p = a followed by q.
    Matrix m(dims[ar.target], dims[ar.source], field);
    for (int qq : q->paths_between(ar.target, v)) {
      int p = q->concat(q->arrow_path(static_cast<int>(a)), qq);
      m(q->position(qq), q->position(p)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), std::move(dims), std::move(maps), field);
}

Representation simple(QuiverPtr q, int v, PrimeField field) {
  if (v < 0 || v >= q->vertex_count()) fail(ErrorCode::unknown_vertex, "unknown vertex " + std::to_string(v + 1));
  std::vector<int> dims(q->vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) maps.emplace_back(dims[a.target], dims[a.source], field);
  return Representation(std::move(q), std::move(dims), std::move(maps), field);
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) fail(ErrorCode::invalid_argument, "direct sum of an empty list");
  const Representation& first = parts.front();
  for (const auto& p : parts) require_same_quiver(first, p);
  const int n = first.quiver().vertex_count();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts)
    for (int v = 0; v < n; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < first.quiver().arrows().size(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(static_cast<int>(a)));
    maps.push_back(block_diagonal(blocks, first.field()));
  }
  return Representation(first.quiver_ptr(), std::move(dims), std::move(maps), first.field());
}

Representation random_representation(QuiverPtr q, const std::vector<int>& dims, PrimeField field,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) {
    Matrix m(dims.at(a.target), dims.at(a.source), field);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = dist(rng);
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), dims, std::move(maps), field);
}

Representation scramble(const Representation& m, std::mt19937_64& rng) {
  std::vector<Matrix> t, tinv;
  for (int d : m.dims()) {
    t.push_back(random_invertible(d, m.field(), rng));
    tinv.push_back(inverse(t.back()));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& ar = m.quiver().arrows()[a];
    maps.push_back(t[ar.target] * m.map(static_cast<int>(a)) * tinv[ar.source]);
  }
  return Representation(m.quiver_ptr(), m.dims(), std::move(maps), m.field());
}

Representation dual(const Representation& m, QuiverPtr target) {
  const Quiver& q = m.quiver();
  if (target->vertex_count() != q.vertex_count() || target->arrows().size() != q.arrows().size())
    fail(ErrorCode::quiver_mismatch, "dual target is not the opposite quiver");
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& x = q.arrows()[a];
    const Arrow& y = target->arrows()[a];
    if (x.source != y.target || x.target != y.source) fail(ErrorCode::quiver_mismatch, "dual target is not the opposite quiver");
  }
  std::vector<Matrix> maps;
  for (const auto& mat : m.maps()) maps.push_back(dual_map(mat));
  return Representation(std::move(target), m.dims(), std::move(maps), m.field());
}

Representation subrepresentation(const Representation& m, const std::vector<Matrix>& bases) {
  const Quiver& q = m.quiver();
  std::vector<int> dims;
  for (const auto& b : bases) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    Matrix x;
    if (!solve_matrix(bases[ar.target], m.map(static_cast<int>(a)) * bases[ar.source], x))
      fail(ErrorCode::internal, "subspace family is not closed under arrow '" + ar.name + "'");
    maps.push_back(std::move(x));
  }
  return Representation(m.quiver_ptr(), std::move(dims), std::move(maps), m.field());
}

Representation kernel(const Representation& m, const Representation&, const RepMorphism& f) {
  std::vector<Matrix> bases;
  for (int v = 0; v < m.quiver().vertex_count(); ++v)
    bases.push_back(column_matrix(kernel_basis(f.components[v]), m.dim(v), m.field()));
  return subrepresentation(m, bases);
}

Representation image(const Representation&, const Representation& n, const RepMorphism& f) {
  std::vector<Matrix> bases;
  for (int v = 0; v < n.quiver().vertex_count(); ++v)
    bases.push_back(column_matrix(image_basis(f.components[v]), n.dim(v), n.field()));
  return subrepresentation(n, bases);
}

// ---------------------------------------------------------------------------
// Hom spaces

MorphismSpace::MorphismSpace(Representation source, Representation target, std::vector<RepMorphism> basis)
    : source_(std::move(source)), target_(std::move(target)), basis_(std::move(basis)) {
  std::vector<Vector> cols;
  for (const auto& b : basis_) cols.push_back(flatten(b));
  std::size_t len = 0;
  for (int v = 0; v < source_.quiver().vertex_count(); ++v)
    len += static_cast<std::size_t>(source_.dim(v)) * target_.dim(v);
  flat_ = Matrix::from_columns(cols, len, source_.field());
}

Vector MorphismSpace::flatten(const RepMorphism& f) const {
  Vector out;
  for (const auto& c : f.components) out.insert(out.end(), c.raw().begin(), c.raw().end());
  return out;
}

RepMorphism MorphismSpace::unflatten(const Vector& v) const {
  RepMorphism f;
  std::size_t pos = 0;
  for (int w = 0; w < source_.quiver().vertex_count(); ++w) {
    Matrix c(target_.dim(w), source_.dim(w), source_.field());
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) c(r, k) = v.at(pos++);
    f.components.push_back(std::move(c));
  }
  return f;
}

Vector MorphismSpace::coordinates(const RepMorphism& f) const {
  auto res = solve_or_witness(flat_, flatten(f));
  if (auto* s = std::get_if<Solution>(&res)) return s->x;
  fail(ErrorCode::invalid_argument, "not a morphism between the given representations");
}

RepMorphism MorphismSpace::combination(const Vector& coeffs) const {
  if (coeffs.size() != basis_.size()) fail(ErrorCode::dimension_mismatch, "coefficient count mismatch");
  return unflatten(flat_.apply(coeffs));
}

MorphismSpace hom_space(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  std::vector<std::size_t> offset;
  Matrix sys = hom_system(m, n, offset);
  MorphismSpace shape(m, n, {});
  std::vector<RepMorphism> basis;
  for (const auto& v : kernel_basis(sys)) basis.push_back(shape.unflatten(v));
  return MorphismSpace(m, n, std::move(basis));
}

std::size_t hom_dimension(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  std::vector<std::size_t> offset;
  Matrix sys = hom_system(m, n, offset);
  return sys.cols() - rank(sys);
}

// ---------------------------------------------------------------------------
// Projective covers and presentations

std::vector<int> projective_offsets(const Quiver& q, const std::vector<int>& gens, int w) {
  std::vector<int> off(gens.size() + 1, 0);
  for (std::size_t g = 0; g < gens.size(); ++g)
    off[g + 1] = off[g] + static_cast<int>(q.paths_between(gens[g], w).size());
  return off;
}

ProjectiveCover projective_cover(const Representation& n) {
  const Quiver& q = n.quiver();
  const int nv = q.vertex_count();
  const PrimeField& f = n.field();
  ProjectiveCover pc{{}, {}, Representation::zero(n.quiver_ptr(), f), {}};
  for (int w = 0; w < nv; ++w) {
    std::vector<Vector> rad;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrows()[a].target != w) continue;
      const Matrix& ma = n.map(static_cast<int>(a));
      for (std::size_t c = 0; c < ma.cols(); ++c) rad.push_back(ma.column(c));
    }
    Matrix radm = column_matrix(rad, n.dim(w), f);
    Matrix id = Matrix::identity(n.dim(w), f);
    for (auto idx : extending_columns(radm, id)) {
      pc.vertices.push_back(w);
      pc.elements.push_back(id.column(idx));
    }
  }
  if (pc.vertices.empty()) {
    pc.cover = zero_morphism(pc.projective, n);
    return pc;
  }
  std::vector<Representation> parts;
  for (int v : pc.vertices) parts.push_back(projective(n.quiver_ptr(), v, f));
  pc.projective = direct_sum(parts);
  std::unordered_map<int, Matrix> action;
  auto act = [&](int path) -> const Matrix& {
    auto it = action.find(path);
    if (it == action.end()) it = action.emplace(path, n.path_action(path)).first;
    return it->second;
  };
  for (int w = 0; w < nv; ++w) {
    std::vector<int> off = projective_offsets(q, pc.vertices, w);
    Matrix c(n.dim(w), off.back(), f);
    for (std::size_t g = 0; g < pc.vertices.size(); ++g) {
      const auto& paths = q.paths_between(pc.vertices[g], w);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        Vector img = act(paths[i]).apply(pc.elements[g]);
        for (int r = 0; r < n.dim(w); ++r) c(r, off[g] + i) = img[r];
      }
    }
    pc.cover.components.push_back(std::move(c));
  }
  return pc;
}

ProjectivePresentation projective_presentation(const Representation& m) {
  const Quiver& q = m.quiver();
  const PrimeField& f = m.field();
  ProjectiveCover pc = projective_cover(m);
  ProjectivePresentation pres;
  pres.top_vertices = pc.vertices;
  pres.top_elements = pc.elements;
  if (pc.vertices.empty()) return pres;
  const Representation& p0 = pc.projective;
  std::vector<Matrix> kb;
  for (int w = 0; w < q.vertex_count(); ++w)
    kb.push_back(column_matrix(kernel_basis(pc.cover.components[w]), p0.dim(w), f));
  // The kernel is projective (hereditary); its top gives the relations.
  for (int w = 0; w < q.vertex_count(); ++w) {
    if (kb[w].cols() == 0) continue;
    std::vector<Vector> rad;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrows()[a].target != w) continue;
      Matrix img = p0.map(static_cast<int>(a)) * kb[q.arrows()[a].source];
      for (std::size_t c = 0; c < img.cols(); ++c) rad.push_back(img.column(c));
    }
    Matrix radm = column_matrix(rad, p0.dim(w), f);
    for (auto idx : extending_columns(radm, kb[w])) {
      pres.relation_vertices.push_back(w);
      pres.relations.push_back(kb[w].column(idx));
    }
  }
  return pres;
}

Ext1Space ext1_space(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  const Quiver& q = m.quiver();
  const PrimeField& f = m.field();
  ProjectivePresentation pres = projective_presentation(m);
  std::vector<int> col_off(pres.top_vertices.size() + 1, 0), row_off(pres.relations.size() + 1, 0);
  for (std::size_t g = 0; g < pres.top_vertices.size(); ++g) col_off[g + 1] = col_off[g] + n.dim(pres.top_vertices[g]);
  for (std::size_t r = 0; r < pres.relations.size(); ++r)
    row_off[r + 1] = row_off[r] + n.dim(pres.relation_vertices[r]);
  Matrix map(row_off.back(), col_off.back(), f);
  std::unordered_map<int, Matrix> action;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    int w = pres.relation_vertices[r];
    std::vector<int> off = projective_offsets(q, pres.top_vertices, w);
    for (std::size_t g = 0; g < pres.top_vertices.size(); ++g) {
      const auto& paths = q.paths_between(pres.top_vertices[g], w);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        Residue c = pres.relations[r][off[g] + i];
        if (c == 0) continue;
        auto it = action.find(paths[i]);
        if (it == action.end()) it = action.emplace(paths[i], n.path_action(paths[i])).first;
        map.add_to_block(row_off[r], col_off[g], it->second, c);
      }
    }
  }
  Ext1Space e;
  e.presentation = map;
  Matrix id = Matrix::identity(map.rows(), f);
  for (auto idx : extending_columns(map, id)) e.representatives.push_back(id.column(idx));
  e.dimension = e.representatives.size();
  return e;
}

std::size_t ext1_dimension(const Representation& m, const Representation& n) {
  Ext1Space e = ext1_space(m, n);
  return e.presentation.rows() - rank(e.presentation);
}

bool is_projective(const Representation& m) {
  return projective_cover(m).projective.total_dim() == m.total_dim();
}

bool is_injective(const Representation& m) { return is_projective(dual(m, m.quiver().opposite())); }

// ---------------------------------------------------------------------------
// Stable Hom

StableMorphismSpace::StableMorphismSpace(MorphismSpace hom, std::vector<Vector> factoring)
    : hom_(std::move(hom)), factoring_(std::move(factoring)) {
  const PrimeField& f = hom_.source().field();
  const std::size_t d = hom_.dimension();
  Matrix fm = Matrix::from_columns(factoring_, d, f);
  Matrix id = Matrix::identity(d, f);
  std::vector<Vector> reps;
  for (auto idx : extending_columns(fm, id)) {
    reps.push_back(id.column(idx));
    representatives_.push_back(hom_.basis()[idx]);
  }
  if (d > 0) change_ = inverse(hstack(Matrix::from_columns(reps, d, f), fm));
}

Vector StableMorphismSpace::stable_coordinates(const RepMorphism& f) const {
  if (hom_.dimension() == 0) return {};
  Vector all = change_.apply(hom_.coordinates(f));
  all.resize(representatives_.size());
  return all;
}

StableMorphismSpace stable_hom(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  MorphismSpace hom = hom_space(m, n);
  ProjectiveCover pc = projective_cover(n);
  std::vector<Vector> images;
  if (!pc.vertices.empty()) {
    MorphismSpace into_cover = hom_space(m, pc.projective);
    for (const auto& h : into_cover.basis()) images.push_back(hom.coordinates(compose(pc.cover, h)));
  }
  std::vector<Vector> factoring =
      images.empty() ? std::vector<Vector>{}
                     : image_basis(Matrix::from_columns(images, hom.dimension(), m.field()));
  return StableMorphismSpace(std::move(hom), std::move(factoring));
}

std::size_t costable_hom_dimension(const Representation& m, const Representation& n) {
  auto op = m.quiver().opposite();
  return stable_hom(dual(n, op), dual(m, op)).dimension();
}

// ---------------------------------------------------------------------------
// Endomorphisms, isomorphism, decomposition

bool has_local_endomorphisms(const Representation& m) {
  if (m.is_zero()) return false;
  MorphismSpace end = hom_space(m, m);
  AlgebraTable t{m.field(), end.dimension(), {}, end.coordinates(identity_morphism(m))};
  for (const auto& x : end.basis())
    for (const auto& y : end.basis()) t.products.push_back(end.coordinates(compose(x, y)));
  return local_structure(t).has_value();
}

bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed, int trials) {
  require_same_quiver(a, b);
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  MorphismSpace hom = hom_space(a, b);
  if (hom.dimension() == 0) return false;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Vector c = random_vector(hom.dimension(), a.field(), rng);
    if (t == 0 && hom.dimension() == 1) c[0] = 1;
    if (is_isomorphism(hom.combination(c))) return true;
  }
  return false;
}

namespace {

RepMorphism stable_power(RepMorphism psi, int exponent) {
  for (int e = 1; e < exponent; e *= 2) psi = compose(psi, psi);
  return psi;
}

void split_recursive(const Representation& m, std::mt19937_64& rng, int samples, std::vector<Representation>& out) {
  if (m.is_zero()) return;
  MorphismSpace end = hom_space(m, m);
  if (end.dimension() <= 1) {
    out.push_back(m);
    return;
  }
  const PrimeField& f = m.field();
  const int total = m.total_dim();
  int exponent = 1;
  for (int d : m.dims()) exponent = std::max(exponent, d);
  for (int s = 0; s < samples; ++s) {
    RepMorphism phi = end.combination(random_vector(end.dimension(), f, rng));
    for (std::uint32_t lambda = 0; lambda < f.characteristic(); ++lambda) {
      bool eigen = false;
      for (int v = 0; v < m.quiver().vertex_count() && !eigen; ++v) {
        if (m.dim(v) == 0) continue;
        Matrix shifted = phi.components[v] - Matrix::identity(m.dim(v), f).scaled(lambda);
        eigen = !is_invertible(shifted);
      }
      if (!eigen) continue;
      RepMorphism psi = phi;
      for (int v = 0; v < m.quiver().vertex_count(); ++v)
        psi.components[v] -= Matrix::identity(m.dim(v), f).scaled(lambda);
      RepMorphism power = stable_power(psi, exponent);
      int r = 0;
      for (const auto& c : power.components) r += static_cast<int>(rank(c));
      if (r == 0 || r == total) continue;
      // Fitting: M = ker psi^N (+) im psi^N.
      split_recursive(kernel(m, m, power), rng, samples, out);
      split_recursive(image(m, m, power), rng, samples, out);
      return;
    }
  }
  out.push_back(m);
}

}  // namespace

std::vector<Representation> indecomposable_summands(const Representation& m, std::uint64_t seed, DecomposeOptions opts) {
  std::mt19937_64 rng(seed);
  std::vector<Representation> out;
  split_recursive(m, rng, opts.samples, out);
  return out;
}

std::vector<Summand> decompose(const Representation& m, std::uint64_t seed, DecomposeOptions opts) {
  std::vector<Summand> out;
  for (auto& piece : indecomposable_summands(m, seed, opts)) {
    bool merged = false;
    for (auto& s : out) {
      if (is_isomorphic(s.module, piece, seed)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(Summand{std::move(piece), 1});
  }
  return out;
}

}  // namespace hsg
