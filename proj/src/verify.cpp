#include "verify.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <random>

#include "ar.hpp"
#include "error.hpp"
#include "json.hpp"
#include "repetitive.hpp"
#include "stable.hpp"

namespace hsg {

namespace {

DerivedObject at(const Representation& m, int s) { return DerivedObject{{DerivedSummand{m, s}}}; }

std::string shifted(const Representation& m, int s) { return m.dims_string() + "[" + std::to_string(s) + "]"; }

void push_unique(std::vector<Representation>& out, Representation m, std::uint64_t seed) {
  if (m.is_zero()) return;
  for (const auto& n : out)
    if (is_isomorphic(n, m, seed)) return;
  out.push_back(std::move(m));
}

Report timed(const std::string& name, bool timing, const std::function<Report()>& body) {
  auto start = std::chrono::steady_clock::now();
  Report r = body();
  r.check_name = name;
  if (timing)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::pair<int, int> window_or(const CheckOptions& opts, std::pair<int, int> fallback) {
  auto w = opts.window.value_or(fallback);
  if (w.first > w.second) fail(ErrorCode::invalid_argument, "window lower bound exceeds upper bound");
  return w;
}

Report structural_sequences(const RepetitiveWindow& w) {
  Report r;
  for (int level = w.lo() + 1; level <= w.hi(); ++level)
    for (std::size_t x = 0; x < w.base()->size(); ++x) r.merge(check_structural_sequence(w, x, level));
  return r;
}

Report tilting_all_pairs(const RepetitiveWindow& w, int nmax) {
  Report r;
  for (std::size_t x = 0; x < w.base()->size(); ++x)
    for (std::size_t y = 0; y < w.base()->size(); ++y) r.merge(tilting_orthogonality_check(w, x, y, nmax));
  return r;
}

Report gldim_report(const FinCatPtr& c) {
  Report r;
  GlobalDimension g = global_dimension(c, 3);
  std::string got = g.exceeds_cap ? "> 3" : std::to_string(g.value);
  r.record(!g.exceeds_cap && g.value <= 2, "gldim mod(stable category)", "<= 2", got);
  r.notes.push_back("gldim = " + got);
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"serre-duality", "phi", "sc0", "tilting", "structural-sequence",
                                              "gldim", "pipeline", "euler", "ar-duality"};
  return names;
}

bool is_kronecker(const Quiver& q) {
  if (q.vertex_count() != 2 || q.arrows().size() != 2) return false;
  const auto& a = q.arrows();
  return a[0].source == a[1].source && a[0].target == a[1].target;
}

Representation kronecker_regular(QuiverPtr q, PrimeField field, int lambda) {
  if (!is_kronecker(*q)) fail(ErrorCode::invalid_argument, "kronecker_regular needs the Kronecker quiver");
  std::vector<int> dims{1, 1};
  Matrix a(1, 1, field), b(1, 1, field);
  if (lambda < 0) {
    b(0, 0) = 1;
  } else {
    a(0, 0) = 1;
    b(0, 0) = field.reduce(lambda);
  }
  return Representation(std::move(q), dims, {a, b}, field);
}

std::vector<Representation> sample_modules(QuiverPtr q, PrimeField field, std::uint64_t seed) {
  GraphClass g = q->classify_graph();
  if (g.type == GraphType::dynkin) return knit_indecomposables(q, field);
  // Orbits grow exponentially on wild quivers, so there they stop at a size cap.
  const int cap = g.type == GraphType::euclidean ? std::numeric_limits<int>::max() : wild_sample_cap;
  std::vector<Representation> out;
  for (int v = 0; v < q->vertex_count(); ++v) {
    Representation p = projective(q, v, field);
    for (int k = 0; k <= 3 && !p.is_zero() && p.total_dim() <= cap; ++k, p = tau_inverse(p)) push_unique(out, p, seed);
  }
  for (int v = 0; v < q->vertex_count(); ++v) {
    Representation i = injective(q, v, field);
    for (int k = 0; k <= 3 && !i.is_zero() && i.total_dim() <= cap; ++k, i = tau(i)) push_unique(out, i, seed);
  }
  if (is_kronecker(*q)) {
    for (int lambda : {0, 1, -1}) push_unique(out, kronecker_regular(q, field, lambda), seed);
  } else if (g.type == GraphType::euclidean) {
    std::mt19937_64 rng(seed);
    std::vector<int> delta(g.null_root.begin(), g.null_root.end());
    for (int trial = 0; trial < 3; ++trial) {
      Representation m = random_representation(q, delta, field, rng);
      if (has_local_endomorphisms(m)) push_unique(out, m, seed);
    }
  }
  return out;
}

std::vector<Representation> non_projective(const std::vector<Representation>& mods) {
  std::vector<Representation> out;
  for (const auto& m : mods)
    if (!is_projective(m)) out.push_back(m);
  return out;
}

Report serre_duality_check(DerivedContext& ctx, const std::vector<Representation>& mods) {
  Report r;
  for (const auto& m : mods)
    for (const auto& n : mods)
      for (int s : {-1, 0, 1, 2}) {
        auto u = at(m, 0), v = at(n, s);
        r.expect_equal(static_cast<std::int64_t>(ctx.derived_hom(u, v)),
                       static_cast<std::int64_t>(ctx.derived_hom(v, ctx.serre(u))),
                       "Hom(" + shifted(m, 0) + ", " + shifted(n, s) + ") vs D Hom(" + shifted(n, s) + ", S " +
                           shifted(m, 0) + ")");
      }
  return r;
}

Report serre_inverse_check(DerivedContext& ctx, const std::vector<Representation>& mods) {
  Report r;
  for (const auto& m : mods)
    for (int s : {-1, 0, 1}) {
      auto x = at(m, s);
      auto back = ctx.serre_inv(ctx.serre(x));
      r.record(ctx.equivalent(back, x), "S^-1 S " + shifted(m, s), x.describe(), back.describe());
      auto forth = ctx.serre(ctx.serre_inv(x));
      r.record(ctx.equivalent(forth, x), "S S^-1 " + shifted(m, s), x.describe(), forth.describe());
    }
  return r;
}

Report phi_faithfulness_check(DerivedContext& ctx, const std::vector<Representation>& mods, int max_level,
                              int size_cap) {
  Report r;
  auto too_big = [&](const PhiIndex& ix) {
    if (size_cap <= 0) return false;
    for (const auto& s : ctx.phi(ix).summands)
      if (s.module.total_dim() > size_cap) return true;
    return false;
  };
  for (const auto& x : mods)
    for (const auto& y : mods)
      for (int i = -max_level; i <= max_level; ++i)
        for (int j = -max_level; j <= max_level; ++j) {
          PhiIndex a{x, i}, b{y, j};
          if (too_big(a) || too_big(b)) {
            ++r.skipped;
            continue;
          }
          r.merge(phi_hom_check(ctx, a, b));
        }
  if (r.skipped > 0)
    r.notes.push_back(std::to_string(r.skipped) + " pairs skipped: an image exceeds total dimension " + std::to_string(size_cap));
  return r;
}

Report phi_density_check(DerivedContext& ctx, const std::vector<Representation>& mods, int max_shift, int bound) {
  Report r;
  for (const auto& m : mods)
    for (int l = -max_shift; l <= max_shift; ++l) {
      const std::string input = "preimage of " + shifted(m, l);
      try {
        PhiIndex ix = ctx.phi_preimage(m, l, bound);
        DerivedObject image = ctx.phi(ix);
        bool ok = !ctx.is_projective(ix.module) && ctx.equivalent(image, at(m, l));
        r.record(ok, input, shifted(m, l),
                 "Phi(" + ix.module.dims_string() + ", " + std::to_string(ix.level) + ") = " + image.describe());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::inconclusive) throw;
        ++r.skipped;
        r.notes.push_back("skipped " + input + ": " + e.what());
      }
    }
  return r;
}

Report sc0_suite_check(DerivedContext& ctx, const std::vector<Representation>& mods, const std::vector<int>& powers) {
  Report r;
  for (const auto& m : mods)
    for (int p : powers) r.merge(sc0_check(ctx, m, p));
  return r;
}

Report euler_check(QuiverPtr q, PrimeField field, std::uint64_t seed, int pairs) {
  Report r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, 2);
  auto random_dims = [&] {
    std::vector<int> d(q->vertex_count());
    for (auto& x : d) x = entry(rng);
    return d;
  };
  for (int k = 0; k < pairs; ++k) {
    Representation m = random_representation(q, random_dims(), field, rng);
    Representation n = random_representation(q, random_dims(), field, rng);
    std::int64_t got = static_cast<std::int64_t>(hom_dimension(m, n)) - static_cast<std::int64_t>(ext1_dimension(m, n));
    r.expect_equal(euler_form(*q, m.dim_vector(), n.dim_vector()), got,
                   "<" + m.dims_string() + ", " + n.dims_string() + ">");
  }
  return r;
}

Report ar_duality_check(const std::vector<Representation>& mods) {
  Report r;
  for (const auto& m : mods)
    for (const auto& n : mods) {
      const auto ext = static_cast<std::int64_t>(ext1_dimension(m, n));
      const std::string pair = "(" + m.dims_string() + ", " + n.dims_string() + ")";
      Representation tn = tau_inverse(n);
      std::int64_t stable = tn.is_zero() ? 0 : static_cast<std::int64_t>(stable_hom(tn, m).dimension());
      r.expect_equal(ext, stable, "Ext^1 vs D stable Hom(tau^-1 N, M) on " + pair);
      Representation tm = tau(m);
      std::int64_t costable = tm.is_zero() ? 0 : static_cast<std::int64_t>(costable_hom_dimension(n, tm));
      r.expect_equal(ext, costable, "Ext^1 vs D costable Hom(N, tau M) on " + pair);
    }
  return r;
}

Report classification_check(const std::vector<Representation>& mods, int bound, std::uint64_t seed) {
  Report r;
  if (mods.empty()) return r;
  const Quiver& q = mods.front().quiver();
  GraphClass g = q.classify_graph();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& m : mods) {
    ARClass c = classify(m, bound, seed);
    ++counts[static_cast<int>(c.tag)];
    if (c.tag == ARTag::inconclusive) {
      ++r.skipped;
      continue;
    }
    std::string expected;
    if (g.type == GraphType::dynkin) {
      expected = "Preprojective or Preinjective";
      r.record(c.tag != ARTag::regular, m.dims_string(), expected, to_string(c.tag));
    } else if (g.type == GraphType::euclidean) {
      // Independent oracle: the sign of the defect decides the class of an indecomposable.
      std::int64_t d = defect(q, m.dim_vector());
      ARTag want = d < 0 ? ARTag::preprojective : d > 0 ? ARTag::preinjective : ARTag::regular;
      r.record(c.tag == want, m.dims_string() + " (defect " + std::to_string(d) + ")", to_string(want),
               to_string(c.tag));
    } else {
      r.record(true, m.dims_string(), "any", to_string(c.tag));
    }
  }
  for (ARTag t : {ARTag::preprojective, ARTag::preinjective, ARTag::regular, ARTag::inconclusive})
    r.notes.push_back(to_string(t) + ": " + std::to_string(counts[static_cast<int>(t)]));
  return r;
}

std::vector<Report> run_suite(const std::string& suite, QuiverPtr q, PrimeField field, const CheckOptions& opts) {
  const bool t = opts.timing;
  std::vector<Report> out;
  auto stable = [&] { return build_stable_category(q, field); };

  if (suite == "serre-duality" || suite == "phi" || suite == "sc0") {
    DerivedContext ctx(q, field, opts.seed);
    auto mods = sample_modules(q, field, opts.seed);
    if (suite == "serre-duality") {
      out.push_back(timed("serre-duality", t, [&] { return serre_duality_check(ctx, mods); }));
      out.push_back(timed("serre-inverse", t, [&] { return serre_inverse_check(ctx, mods); }));
    } else if (suite == "phi") {
      // Serre powers of wild samples grow exponentially; there only small images are compared.
      const bool wild = q->classify_graph().type == GraphType::other;
      out.push_back(timed("phi-hom", t, [&] {
        return phi_faithfulness_check(ctx, non_projective(mods), 2, wild ? 4 * wild_sample_cap : 0);
      }));
      out.push_back(timed("phi-density", t, [&] { return phi_density_check(ctx, mods, wild ? 1 : 3, opts.bound); }));
      if (wild) out.back().notes.push_back("wild quiver: shifts limited to |l| <= 1");
    } else {
      out.push_back(timed("sc0", t, [&] { return sc0_suite_check(ctx, non_projective(mods), {-2, -1, 2, 3}); }));
    }
  } else if (suite == "tilting") {
    auto [lo, hi] = window_or(opts, {-(opts.nmax + 3), 2});
    out.push_back(timed("tilting", t, [&] {
      auto w = build_repetitive_window(stable().cat, lo, hi);
      return tilting_all_pairs(w, opts.nmax);
    }));
  } else if (suite == "structural-sequence") {
    auto [lo, hi] = window_or(opts, {-5, 2});
    out.push_back(timed("structural-sequence", t, [&] {
      auto w = build_repetitive_window(stable().cat, lo, hi);
      return structural_sequences(w);
    }));
  } else if (suite == "gldim") {
    out.push_back(timed("gldim", t, [&] { return gldim_report(stable().cat); }));
  } else if (suite == "pipeline") {
    StableCategory sc;
    out.push_back(timed("pipeline/stable-category", t, [&] {
      sc = stable();
      Report r;
      auto problem = sc.cat->validate();
      r.record(!problem, "stable category", "valid FinCat", problem.value_or("valid"));
      r.notes.push_back(std::to_string(sc.cat->size()) + " objects");
      return r;
    }));
    out.push_back(timed("pipeline/gldim", t, [&] { return gldim_report(sc.cat); }));
    auto [lo, hi] = window_or(opts, {-(opts.nmax + 3), 2});
    std::optional<RepetitiveWindow> w;
    out.push_back(timed("pipeline/hom-table", t, [&] {
      w.emplace(build_repetitive_window(sc.cat, lo, hi));
      return hom_table_check(*w);
    }));
    out.push_back(timed("pipeline/serre-shift", t, [&] { return serre_shift_check(*w); }));
    out.push_back(timed("pipeline/structural-sequence", t, [&] { return structural_sequences(*w); }));
    out.push_back(timed("pipeline/tilting", t, [&] { return tilting_all_pairs(*w, opts.nmax); }));
    out.push_back(timed("pipeline/phi-hom", t, [&] {
      DerivedContext ctx(q, field, opts.seed);
      return phi_faithfulness_check(ctx, sc.objects, 1);
    }));
  } else if (suite == "euler") {
    out.push_back(timed("euler", t, [&] { return euler_check(q, field, opts.seed, 100); }));
  } else if (suite == "ar-duality") {
    out.push_back(timed("ar-duality", t, [&] { return ar_duality_check(sample_modules(q, field, opts.seed)); }));
  } else {
    fail(ErrorCode::invalid_argument, "unknown suite '" + suite + "'");
  }
  return out;
}

std::string reports_to_json(const std::vector<Report>& reports, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check_name"] = r.check_name;
    j["instances"] = r.instances;
    j["passed"] = r.passed;
    j["skipped"] = r.skipped;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    j["elapsed_ms"] = r.elapsed_ms;
    j["notes"] = r.notes;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

}  // namespace hsg
