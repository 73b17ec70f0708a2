#include "ar.hpp"

#include "error.hpp"

namespace hsg {

namespace {

// Matrix of nu applied to the summand P(w) -> P(v) of a presentation map given by
// coefficients on paths v -> w; it maps I(w)(u) -> I(v)(u) in dual path bases.
void add_nakayama_block(const Quiver& q, int v, int w, const Vector& coeffs, int u, Matrix& out, std::size_t r0,
                        std::size_t c0) {
  const PrimeField& f = out.field();
  const auto& into_v = q.paths_between(u, v);
  const auto& vw = q.paths_between(v, w);
  for (std::size_t pi = 0; pi < vw.size(); ++pi) {
    Residue c = coeffs[pi];
    if (c == 0) continue;
    for (std::size_t si = 0; si < into_v.size(); ++si) {
      int t = q.concat(into_v[si], vw[pi]);
      std::size_t ti = static_cast<std::size_t>(q.position(t));
      out(r0 + si, c0 + ti) = f.add(out(r0 + si, c0 + ti), c);
    }
  }
}

}  // namespace

Representation tau(const Representation& m) {
  const QuiverPtr& qp = m.quiver_ptr();
  const Quiver& q = *qp;
  const PrimeField& f = m.field();
  ProjectivePresentation pres = projective_presentation(m);
  if (pres.relations.empty()) return Representation::zero(qp, f);
  std::vector<Representation> p1, p0;
  for (int w : pres.relation_vertices) p1.push_back(injective(qp, w, f));
  for (int v : pres.top_vertices) p0.push_back(injective(qp, v, f));
  Representation nu1 = direct_sum(p1);
  Representation nu0 = p0.empty() ? Representation::zero(qp, f) : direct_sum(p0);
  RepMorphism d;
  for (int u = 0; u < q.vertex_count(); ++u) {
    Matrix comp(nu0.dim(u), nu1.dim(u), f);
    std::size_t c0 = 0;
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
      int w = pres.relation_vertices[r];
      std::vector<int> off = projective_offsets(q, pres.top_vertices, w);
      std::size_t r0 = 0;
      for (std::size_t g = 0; g < pres.top_vertices.size(); ++g) {
        int v = pres.top_vertices[g];
        Vector coeffs(pres.relations[r].begin() + off[g], pres.relations[r].begin() + off[g + 1]);
        add_nakayama_block(q, v, w, coeffs, u, comp, r0, c0);
        r0 += q.paths_between(u, v).size();
      }
      c0 += q.paths_between(u, w).size();
    }
    d.components.push_back(std::move(comp));
  }
  return kernel(nu1, nu0, d);
}

Representation tau_inverse(const Representation& m) {
  QuiverPtr op = m.quiver().opposite();
  return dual(tau(dual(m, op)), m.quiver_ptr());
}

Representation nakayama(const Representation& p) {
  ProjectiveCover pc = projective_cover(p);
  if (pc.projective.total_dim() != p.total_dim()) fail(ErrorCode::invalid_argument, "nakayama: module is not projective");
  if (pc.vertices.empty()) return Representation::zero(p.quiver_ptr(), p.field());
  std::vector<Representation> parts;
  for (int v : pc.vertices) parts.push_back(injective(p.quiver_ptr(), v, p.field()));
  return direct_sum(parts);
}

Representation nakayama_inverse(const Representation& i) {
  QuiverPtr op = i.quiver().opposite();
  Representation d = dual(i, op);
  ProjectiveCover pc = projective_cover(d);
  if (pc.projective.total_dim() != d.total_dim())
    fail(ErrorCode::invalid_argument, "nakayama_inverse: module is not injective");
  if (pc.vertices.empty()) return Representation::zero(i.quiver_ptr(), i.field());
  std::vector<Representation> parts;
  for (int v : pc.vertices) parts.push_back(projective(i.quiver_ptr(), v, i.field()));
  return direct_sum(parts);
}

std::string to_string(ARTag tag) {
  switch (tag) {
    case ARTag::preprojective: return "Preprojective";
    case ARTag::preinjective: return "Preinjective";
    case ARTag::regular: return "Regular";
    case ARTag::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::int64_t defect(const Quiver& q, const std::vector<std::int64_t>& dims) {
  GraphClass g = q.classify_graph();
  if (g.type != GraphType::euclidean) fail(ErrorCode::invalid_argument, "defect is defined for Euclidean quivers only");
  return euler_form(q, g.null_root, dims);
}

ARClass classify(const Representation& m, int bound, std::uint64_t seed) {
  if (m.is_zero()) fail(ErrorCode::invalid_argument, "classify: zero module");
  if (bound < 0) fail(ErrorCode::invalid_argument, "classify: negative bound");
  bool local = false;
  try {
    local = has_local_endomorphisms(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_local) throw;
  }
  if (!local && indecomposable_summands(m, seed).size() > 1)
    fail(ErrorCode::decomposable, "classify: module " + m.dims_string() + " is decomposable");

  GraphClass g = m.quiver().classify_graph();
  if (g.type == GraphType::euclidean && euler_form(m.quiver(), g.null_root, m.dim_vector()) == 0)
    return ARClass{ARTag::regular, 0};

  // Walk both tau-orbits in lockstep; the shorter certificate wins, ties go to preprojective.
  Representation fwd = m, bwd = m;
  for (int k = 1; k <= bound; ++k) {
    fwd = tau(fwd);
    if (fwd.is_zero()) return ARClass{ARTag::preprojective, k};
    bwd = tau_inverse(bwd);
    if (bwd.is_zero()) return ARClass{ARTag::preinjective, k};
  }
  return ARClass{ARTag::inconclusive, bound};
}

std::vector<Representation> knit_indecomposables(QuiverPtr q, PrimeField field) {
  if (q->classify_graph().type != GraphType::dynkin)
    fail(ErrorCode::not_dynkin, "knitting needs a quiver of Dynkin type");
  std::vector<Representation> out;
  for (int v = 0; v < q->vertex_count(); ++v) {
    Representation cur = projective(q, v, field);
    // Dynkin orbits are finite: tau^{-1} reaches zero after at most #positive roots steps.
    while (!cur.is_zero()) {
      out.push_back(cur);
      cur = tau_inverse(cur);
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> coxeter_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  auto counts = q.path_counts();  // counts[v][w] = paths v -> w
  // C(w, v) = counts[v][w] is unipotent up to order, so C^{-1} = sum_k (I - C)^k.
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n)), nil(n, std::vector<std::int64_t>(n));
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      c[w][v] = counts[v][w];
      nil[w][v] = (v == w ? 1 : 0) - c[w][v];
    }
  auto mul = [n](const auto& a, const auto& b) {
    std::vector<std::vector<std::int64_t>> r(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
  };
  std::vector<std::vector<std::int64_t>> inv(n, std::vector<std::int64_t>(n, 0)), power(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = power[i][i] = 1;
  for (int k = 1; k < n; ++k) {
    power = mul(power, nil);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv[i][j] += power[i][j];
  }
  std::vector<std::vector<std::int64_t>> ct(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i][j] = -c[j][i];
  return mul(ct, inv);
}

std::vector<std::int64_t> integer_apply(const std::vector<std::vector<std::int64_t>>& m, const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

}  // namespace hsg
