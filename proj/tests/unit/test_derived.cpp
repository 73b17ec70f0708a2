#include "ar.hpp"
#include "derived.hpp"
#include "doctest.h"
#include "error.hpp"
#include "support.hpp"

using namespace hsg;
using namespace hsg::testing;

namespace {

DerivedObject at(const Representation& m, int s) { return DerivedObject{{DerivedSummand{m, s}}}; }

/// Non-projective indecomposables of the Kronecker quiver used across the checks.
std::vector<Representation> kronecker_nonprojective(QuiverPtr k) {
  const auto& f = f101();
  std::vector<Representation> out;
  for (int v = 0; v < 2; ++v) {
    Representation p = projective(k, v, f), i = injective(k, v, f);
    for (int s = 1; s <= 2; ++s) out.push_back(p = tau_inverse(p));
    for (int s = 0; s <= 2; ++s, i = tau(i)) out.push_back(i);
  }
  for (int lambda : {0, 1, -1}) out.push_back(kronecker_regular(k, lambda));
  return out;
}

}  // namespace

TEST_CASE("serre functor examples") {
  const auto& f = f101();
  for (auto q : {a2(), a3(), kronecker()}) {
    DerivedContext ctx(q, f);
    for (int v = 0; v < q->vertex_count(); ++v)
      CHECK(ctx.equivalent(ctx.serre(at(projective(q, v, f), 0)), at(injective(q, v, f), 0)));
  }
  auto q = a2();
  DerivedContext ctx(q, f);
  CHECK(ctx.equivalent(ctx.serre(at(simple(q, 0, f), 0)), at(simple(q, 1, f), 1)));
}

TEST_CASE("serre_inv inverts serre") {
  const auto& f = f101();
  for (auto q : {a3(), d4(), kronecker()}) {
    DerivedContext ctx(q, f);
    for (int v = 0; v < q->vertex_count(); ++v)
      for (const auto& m : {projective(q, v, f), injective(q, v, f), simple(q, v, f)}) {
        auto x = at(m, 2);
        CHECK(ctx.equivalent(ctx.serre_inv(ctx.serre(x)), x));
        CHECK(ctx.equivalent(ctx.serre(ctx.serre_inv(x)), x));
      }
  }
}

TEST_CASE("derived hom satisfies Serre duality") {
  const auto& f = f101();
  auto k = kronecker();
  DerivedContext ctx(k, f);
  std::vector<Representation> mods = kronecker_nonprojective(k);
  mods.push_back(projective(k, 0, f));
  mods.push_back(projective(k, 1, f));
  CHECK(ctx.derived_hom(at(projective(k, 1, f), 0), at(injective(k, 1, f), 0)) == 1);
  for (const auto& m : mods)
    for (const auto& n : mods)
      for (int s : {-1, 0, 1, 2}) {
        auto u = at(m, 0), v = at(n, s);
        CHECK(ctx.derived_hom(u, v) == ctx.derived_hom(v, ctx.serre(u)));
      }
}

TEST_CASE("phi on regular Kronecker modules") {
  const auto& f = f101();
  auto k = kronecker();
  DerivedContext ctx(k, f);
  for (int lambda : {0, 1, -1}) {
    auto r = kronecker_regular(k, lambda);
    CHECK(ctx.equivalent(ctx.phi(PhiIndex{r, 1}), at(r, 1)));
    CHECK(ctx.equivalent(ctx.phi(PhiIndex{r, -2}), at(r, -2)));
  }
  CHECK_THROWS_AS(ctx.phi(PhiIndex{projective(k, 0, f), 0}), Error);
}

TEST_CASE("phi matches stable hom on the repetitive category") {
  const auto& f = f101();
  for (auto q : {a3(), kronecker()}) {
    DerivedContext ctx(q, f);
    std::vector<Representation> mods;
    if (q->vertex_count() == 2) {
      mods = kronecker_nonprojective(q);
    } else {
      for (const auto& m : knit_indecomposables(q, f))
        if (!is_projective(m)) mods.push_back(m);
    }
    for (const auto& x : mods)
      for (const auto& y : mods)
        for (int i : {0, 1})
          for (int j : {-1, 0, 1, 2}) {
            Report r = phi_hom_check(ctx, PhiIndex{x, i}, PhiIndex{y, j});
            CHECK_MESSAGE(r.ok(), x.dims_string(), " ", i, " ", y.dims_string(), " ", j);
          }
  }
}

TEST_CASE("phi_preimage round trips") {
  const auto& f = f101();
  for (auto q : {a2(), a3(), kronecker()}) {
    DerivedContext ctx(q, f);
    std::vector<Representation> mods;
    if (q->vertex_count() == 2 && q->arrows().size() == 2) {
      mods = kronecker_nonprojective(q);
      for (int v = 0; v < 2; ++v) mods.push_back(projective(q, v, f));
    } else {
      mods = knit_indecomposables(q, f);
    }
    for (const auto& m : mods)
      for (int l : {-2, -1, 0, 1, 2}) {
        PhiIndex ix = ctx.phi_preimage(m, l);
        CHECK_FALSE(is_projective(ix.module));
        CHECK_MESSAGE(ctx.equivalent(ctx.phi(ix), at(m, l)), m.dims_string(), " at ", l);
      }
  }
  auto k = kronecker();
  DerivedContext ctx(k, f);
  auto r = kronecker_regular(k, 1);
  PhiIndex ix = ctx.phi_preimage(r, 1);
  CHECK(ix.level == 1);
  CHECK(is_isomorphic(ix.module, r));
}

TEST_CASE("serre powers leave mod_p A outside degrees 0 and 1") {
  const auto& f = f101();
  auto k = kronecker();
  DerivedContext ctx(k, f);
  for (const auto& m : kronecker_nonprojective(k))
    for (int power : {-3, -2, -1, 2, 3}) CHECK(sc0_check(ctx, m, power).ok());
  CHECK(sc0_check(ctx, projective(k, 0, f), -1).ok());
  CHECK_THROWS_AS(sc0_check(ctx, projective(k, 0, f), 2), Error);
  CHECK_THROWS_AS(sc0_check(ctx, simple(k, 0, f), 1), Error);
}
