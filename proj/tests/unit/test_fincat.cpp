#include "doctest.h"
#include "error.hpp"
#include "fincat.hpp"
#include "stable.hpp"
#include "support.hpp"

using namespace hsg;
using namespace hsg::testing;

namespace {

// Objects 1..n, Hom(i,i) = k, Hom(i,i+1) = k spanned by an arrow, composites of two arrows zero.
FinCatPtr radical_square_zero_chain(std::size_t n) {
  const PrimeField& f = f101();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    dims[i][i] = 1;
    if (i + 1 < n) dims[i][i + 1] = 1;
  }
  std::vector<Matrix> comp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Matrix m(dims[x][z], dims[y][z] * dims[x][y], f);
        // Every composite involving an identity is the other factor; arrow o arrow = 0.
        if (m.rows() && m.cols() && (x == y || y == z)) m(0, 0) = 1;
        comp.push_back(m);
      }
  return std::make_shared<const FinCat>(names, dims, std::vector<Vector>(n, Vector{1}), comp, f);
}

std::vector<FinCatModule> sample_modules(const FinCatPtr& c) {
  std::vector<FinCatModule> out;
  for (std::size_t x = 0; x < c->size(); ++x) {
    out.push_back(yoneda_module(c, x));
    out.push_back(co_injective(c, x));
    out.push_back(simple_module(c, x));
  }
  out.push_back(direct_sum({out[0], out.back()}));
  return out;
}

}  // namespace

TEST_CASE("point category") {
  auto c = point_category(f101());
  auto y = yoneda_module(c, 0), d = co_injective(c, 0);
  CHECK(y.dims() == std::vector<int>{1});
  CHECK(d.dims() == std::vector<int>{1});
  auto g = global_dimension(c, 4);
  CHECK_FALSE(g.exceeds_cap);
  CHECK(g.value == 0);
  CHECK(ext_group(simple_module(c, 0), simple_module(c, 0), 1) == 0);
  CHECK(ext_group(simple_module(c, 0), simple_module(c, 0), 0) == 1);
}

TEST_CASE("radical-square-zero chain") {
  auto c = radical_square_zero_chain(3);
  auto simples = simple_modules(c);
  CHECK(simples.size() == 3);
  CHECK(ext_group(simples[1], simples[0], 1) == 1);
  CHECK(ext_group(simples[2], simples[1], 1) == 1);
  CHECK(ext_group(simples[2], simples[0], 1) == 0);
  CHECK(ext_group(simples[2], simples[0], 2) == 1);
  auto res = minimal_projective_resolution(simples[2], 5);
  CHECK(res.terminated);
  REQUIRE(res.steps.size() == 3);
  // The resolution moves strictly down the chain.
  for (std::size_t n = 0; n < res.steps.size(); ++n) CHECK(res.steps[n].generators == std::vector<std::size_t>{2 - n});
  CHECK(projective_dimension(simples[1], 4) == 1);
  CHECK(projective_dimension(simples[0], 4) == 0);
  auto g = global_dimension(c, 4);
  CHECK_FALSE(g.exceeds_cap);
  CHECK(g.value == 2);
  CHECK(global_dimension(c, 1).exceeds_cap);
}

TEST_CASE("ext_group refuses truncated resolutions") {
  auto c = radical_square_zero_chain(4);
  auto s = simple_module(c, 3);
  auto res = minimal_projective_resolution(s, 1);
  CHECK_FALSE(res.terminated);
  try {
    ext_group(res, simple_module(c, 1), 1);
    FAIL("answered beyond the resolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::resolution_depth_exceeded);
  }
  CHECK(ext_group(res, simple_module(c, 2), 0) == 0);
}

TEST_CASE("Yoneda and the direct Hom oracle") {
  for (auto c : {radical_square_zero_chain(3), build_stable_category(a3(), f101()).cat,
                 build_stable_category(d4(), f101()).cat}) {
    auto mods = sample_modules(c);
    for (const auto& m : mods) CHECK_FALSE(m.validate().has_value());
    for (std::size_t x = 0; x < c->size(); ++x)
      for (const auto& n : mods) CHECK(ext_group(yoneda_module(c, x), n, 0) == static_cast<std::size_t>(n.dim(x)));
    for (const auto& m : mods)
      for (const auto& n : mods) {
        CHECK(ext_group(m, n, 0) == module_hom_dimension(m, n));
        for (const auto& h : module_hom_basis(m, n)) CHECK(is_module_morphism(m, n, h));
      }
  }
}

TEST_CASE("simple modules and covers") {
  auto c = build_stable_category(a3(), f101()).cat;
  for (std::size_t x = 0; x < c->size(); ++x) {
    auto s = simple_module(c, x);
    CHECK(s.total_dim() == 1);
    CHECK(module_hom_dimension(yoneda_module(c, x), s) == 1);
    auto pc = module_projective_cover(s);
    CHECK(pc.generators == std::vector<std::size_t>{x});
    CHECK(is_module_morphism(pc.projective, s, pc.cover));
  }
}

TEST_CASE("stable categories of Dynkin quivers") {
  auto s2 = build_stable_category(a2(), f101());
  REQUIRE(s2.cat->size() == 1);
  CHECK(s2.cat->hom_dim(0, 0) == 1);
  CHECK(global_dimension(s2.cat, 4).value == 0);

  auto s3 = build_stable_category(a3(), f101());
  REQUIRE(s3.cat->size() == 3);
  for (std::size_t x = 0; x < 3; ++x) {
    auto y = yoneda_module(s3.cat, x);
    for (std::size_t z = 0; z < 3; ++z)
      CHECK(static_cast<std::size_t>(y.dim(z)) == stable_hom(s3.objects[z], s3.objects[x]).dimension());
  }
  CHECK_FALSE(s3.cat->validate().has_value());
  auto g3 = global_dimension(s3.cat, 6);
  CHECK_FALSE(g3.exceeds_cap);
  CHECK(g3.value <= 2);

  auto s4 = build_stable_category(d4(), f101());
  CHECK(s4.cat->size() == 8);
  auto g4 = global_dimension(s4.cat, 6);
  CHECK_FALSE(g4.exceeds_cap);
  CHECK(g4.value <= 2);

  try {
    build_stable_category(kronecker(), f101());
    FAIL("non-Dynkin accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_dynkin);
  }
  auto k = kronecker();
  auto explicit_list = build_stable_category({kronecker_regular(k, 0), kronecker_regular(k, 1)});
  CHECK(explicit_list.cat->hom_dim(0, 1) == 0);
  CHECK(explicit_list.cat->hom_dim(0, 0) == 1);
}

TEST_CASE("category JSON round trip") {
  auto c = build_stable_category(a3(), f101()).cat;
  auto back = FinCat::from_json(c->to_json(), f101());
  CHECK(back.objects() == c->objects());
  CHECK(back.hom_dims() == c->hom_dims());
  for (std::size_t x = 0; x < c->size(); ++x)
    for (std::size_t y = 0; y < c->size(); ++y)
      for (std::size_t z = 0; z < c->size(); ++z) CHECK(back.composition(x, y, z) == c->composition(x, y, z));
  CHECK_THROWS_AS(FinCat::from_json("{", f101()), Error);
  CHECK_THROWS_AS(FinCat::from_json(R"({"objects":["X"],"hom_dims":[[1]],"identities":[[1]],"compositions":[]})", f101()),
                  Error);
  auto ok = FinCat::from_json(
      R"({"objects":["X"],"hom_dims":[[1]],"identities":[[1]],"compositions":[{"source":"X","middle":"X","target":"X","constants":[[102]]}]})",
      f101());
  CHECK(ok.size() == 1);
}

TEST_CASE("invalid categories are rejected") {
  const auto& f = f101();
  // End = k x k is not local.
  Matrix prod(2, 4, f);
  prod(0, 0) = 1;  // e1 e1 = e1
  prod(1, 3) = 1;  // e2 e2 = e2
  try {
    FinCat({"X"}, {{2}}, {Vector{1, 1}}, {prod}, f);
    FAIL("non-local endomorphism ring accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_category);
  }
  // Identity that is not a unit.
  Matrix zero(1, 1, f);
  CHECK_THROWS_AS(FinCat({"X"}, {{1}}, {Vector{1}}, {zero}, f), Error);
}
