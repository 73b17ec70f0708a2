#include <algorithm>

#include "ar.hpp"
#include "doctest.h"
#include "error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hsg;
using namespace hsg::testing;

namespace {

std::vector<Representation> kronecker_samples(QuiverPtr k) {
  const auto& f = f101();
  std::vector<Representation> out;
  for (int v = 0; v < 2; ++v) {
    Representation p = projective(k, v, f), i = injective(k, v, f);
    for (int s = 0; s <= 3; ++s) {
      out.push_back(p);
      out.push_back(i);
      p = tau_inverse(p);
      i = tau(i);
    }
  }
  for (int lambda : {0, 1, -1}) out.push_back(kronecker_regular(k, lambda));
  return out;
}

}  // namespace

TEST_CASE("tau examples") {
  const auto& f = f101();
  auto q = a2();
  CHECK(is_isomorphic(tau(simple(q, 0, f)), simple(q, 1, f)));
  for (auto quiver : {a2(), a3(), d4(), kronecker()})
    for (int v = 0; v < quiver->vertex_count(); ++v) {
      CHECK(tau(projective(quiver, v, f)).is_zero());
      CHECK(tau_inverse(injective(quiver, v, f)).is_zero());
    }
  auto k = kronecker();
  CHECK(tau_inverse(projective(k, 1, f)).dims() == std::vector<int>{2, 3});
  CHECK(tau_inverse(projective(k, 0, f)).dims() == std::vector<int>{3, 4});
  auto r = kronecker_regular(k, 4);
  CHECK(is_isomorphic(tau(r), r));
}

TEST_CASE("tau is a representation and inverts on non-projectives") {
  const auto& f = f101();
  for (auto q : {a3(), d4(), kronecker()}) {
    std::vector<Representation> mods;
    if (q->classify_graph().type == GraphType::dynkin)
      mods = knit_indecomposables(q, f);
    else
      mods = kronecker_samples(q);
    auto cox = coxeter_matrix(*q);
    for (const auto& m : mods) {
      auto t = tau(m);
      if (is_projective(m)) {
        CHECK(t.is_zero());
        continue;
      }
      CHECK(is_isomorphic(tau_inverse(t), m));
      CHECK(t.dim_vector() == integer_apply(cox, m.dim_vector()));
    }
  }
}

TEST_CASE("Nakayama functor on indecomposable projectives and injectives") {
  const auto& f = f101();
  for (auto q : {a3(), kronecker()})
    for (int v = 0; v < q->vertex_count(); ++v) {
      CHECK(is_isomorphic(nakayama(projective(q, v, f)), injective(q, v, f)));
      CHECK(is_isomorphic(nakayama_inverse(injective(q, v, f)), projective(q, v, f)));
    }
  CHECK_THROWS_AS(nakayama(simple(a2(), 0, f)), Error);
}

TEST_CASE("knit_indecomposables matches positive roots") {
  const auto& f = f101();
  auto e6 = Quiver::parse("vertices 6\narrow a 1 2\narrow b 2 3\narrow c 3 4\narrow d 4 5\narrow e 6 3\n");
  auto a3alt = Quiver::parse("vertices 3\narrow a 2 1\narrow b 2 3\n");
  std::vector<std::pair<QuiverPtr, std::size_t>> cases{{a2(), 3}, {a3(), 6}, {d4(), 12}, {a3alt, 6}, {e6, 36}};
  for (auto& [q, expected] : cases) {
    auto mods = knit_indecomposables(q, f);
    CHECK(mods.size() == expected);
    std::vector<std::vector<std::int64_t>> dims;
    for (const auto& m : mods) dims.push_back(m.dim_vector());
    auto roots = oracle_positive_roots(*q, 3);
    std::sort(dims.begin(), dims.end());
    std::sort(roots.begin(), roots.end());
    CHECK(dims == roots);
    for (std::size_t i = 0; i < mods.size(); ++i) {
      CHECK(has_local_endomorphisms(mods[i]));
      for (std::size_t j = 0; j < i; ++j)
        if (mods[i].dims() == mods[j].dims()) CHECK_FALSE(is_isomorphic(mods[i], mods[j]));
    }
  }
  try {
    knit_indecomposables(kronecker(), f);
    FAIL("Kronecker knitted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_dynkin);
  }
}

TEST_CASE("classify examples") {
  const auto& f = f101();
  auto k = kronecker();
  auto r = classify(kronecker_regular(k, 7));
  CHECK(r.tag == ARTag::regular);
  CHECK(r.certificate == 0);
  auto p = classify(projective(k, 0, f));
  CHECK(p.tag == ARTag::preprojective);
  CHECK(p.certificate == 1);
  auto s = classify(simple(a2(), 0, f));
  CHECK(s.tag == ARTag::preinjective);
  CHECK(s.certificate == 1);
  try {
    classify(direct_sum({simple(k, 0, f), simple(k, 1, f)}));
    FAIL("decomposable accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::decomposable);
  }
}

TEST_CASE("classify on knitted and Kronecker modules") {
  const auto& f = f101();
  for (auto q : {a2(), a3(), d4()})
    for (const auto& m : knit_indecomposables(q, f)) {
      auto c = classify(m);
      CHECK((c.tag == ARTag::preprojective || c.tag == ARTag::preinjective));
    }
  auto k = kronecker();
  for (int v = 0; v < 2; ++v) {
    Representation m = projective(k, v, f);
    for (int s = 0; s < 3; ++s) {
      auto c = classify(m);
      CHECK(c.tag == ARTag::preprojective);
      CHECK(c.certificate == s + 1);
      CHECK(defect(*k, m.dim_vector()) < 0);
      m = tau_inverse(m);
    }
    m = injective(k, v, f);
    for (int s = 0; s < 3; ++s) {
      auto c = classify(m);
      CHECK(c.tag == ARTag::preinjective);
      CHECK(defect(*k, m.dim_vector()) > 0);
      m = tau(m);
    }
  }
  auto wild = Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n");
  Matrix x(1, 1, f), y(1, 1, f), z(1, 1, f);
  x(0, 0) = 1;
  y(0, 0) = 2;
  z(0, 0) = 3;
  auto c = classify(Representation(wild, {1, 1}, {x, y, z}, f), 2);
  CHECK(c.tag == ARTag::inconclusive);
}

TEST_CASE("Coxeter matrix example") {
  CHECK(coxeter_matrix(*a2()) == std::vector<std::vector<std::int64_t>>{{0, -1}, {1, -1}});
  CHECK(coxeter_matrix(*kronecker()) == std::vector<std::vector<std::int64_t>>{{3, -2}, {2, -1}});
}

TEST_CASE("AR duality on Dynkin pairs and a Kronecker sample") {
  const auto& f = f101();
  for (auto q : {a2(), a3()}) {
    auto mods = knit_indecomposables(q, f);
    for (const auto& m : mods)
      for (const auto& n : mods) CHECK(ext1_dimension(m, n) == costable_hom_dimension(n, tau(m)));
  }
  auto mods = kronecker_samples(kronecker());
  for (const auto& m : mods)
    for (const auto& n : mods) CHECK(ext1_dimension(m, n) == costable_hom_dimension(n, tau(m)));
}
