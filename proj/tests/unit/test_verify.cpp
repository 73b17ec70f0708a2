#include "ar.hpp"
#include "doctest.h"
#include "error.hpp"
#include "json.hpp"
#include "query.hpp"
#include "verify.hpp"
#include "support.hpp"

using namespace hsg;
using namespace hsg::testing;

TEST_CASE("sample sets") {
  const auto& f = f101();
  CHECK(sample_modules(d4(), f).size() == 12);
  auto k = sample_modules(kronecker(), f);
  CHECK(k.size() == 19);
  CHECK(non_projective(k).size() == 17);
  // Euclidean quivers other than the Kronecker quiver get random modules of the null root.
  auto a11 = Quiver::parse("vertices 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\n");
  int regular = 0;
  for (const auto& m : sample_modules(a11, f))
    if (classify(m).tag == ARTag::regular) ++regular;
  CHECK(regular > 0);
}

TEST_CASE("every suite passes on the standard quivers") {
  const auto& f = f101();
  for (const auto& suite : suite_names())
    for (auto q : {a2(), a3()})
      for (const auto& r : run_suite(suite, q, f, CheckOptions{})) CHECK_MESSAGE(r.ok(), suite, " ", r.check_name);
  for (const char* suite : {"serre-duality", "phi", "sc0", "euler", "ar-duality"})
    for (const auto& r : run_suite(suite, kronecker(), f, CheckOptions{})) CHECK_MESSAGE(r.ok(), suite);
  CHECK_THROWS_AS(run_suite("gldim", kronecker(), f, CheckOptions{}), Error);
  CHECK_THROWS_AS(run_suite("nope", a2(), f, CheckOptions{}), Error);
}

TEST_CASE("euler identity on other orientations and wild quivers") {
  const auto& f = f101();
  auto wild = Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n");
  auto d4_mixed = Quiver::parse("vertices 4\narrow a 1 4\narrow b 4 2\narrow c 3 4\n");
  for (auto q : {wild, d4_mixed}) CHECK(euler_check(q, f, 3, 100).ok());
  CHECK(ar_duality_check(knit_indecomposables(d4_mixed, f)).ok());
}

TEST_CASE("JSON reports have a fixed key order") {
  Report r;
  r.check_name = "x";
  r.record(false, "in", "1", "2");
  auto j = nlohmann::ordered_json::parse(reports_to_json({r}));
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check_name", "instances", "passed", "skipped", "failures", "elapsed_ms", "notes"});
  CHECK(j[0]["failures"][0]["got"] == "2");
  auto a = reports_to_json(run_suite("phi", a3(), f101(), CheckOptions{}));
  auto b = reports_to_json(run_suite("phi", a3(), f101(), CheckOptions{}));
  CHECK(a == b);
}

TEST_CASE("module specifications and labels") {
  const auto& f = f101();
  auto q = a2();
  CHECK(resolve_module(q, "P1", f).dims() == std::vector<int>{1, 1});
  CHECK(resolve_module(q, "I2", f).dims() == std::vector<int>{1, 1});
  CHECK(resolve_module(q, "S2", f).dims() == std::vector<int>{0, 1});
  CHECK(resolve_module(q, "K2", f).total_dim() > 0);
  CHECK_THROWS_AS(resolve_module(q, "K9", f), Error);
  CHECK_THROWS_AS(resolve_module(q, "P7", f), Error);
  CHECK_THROWS_AS(resolve_module(q, "missing.module", f), Error);
  CHECK(module_label(tau(simple(q, 0, f))) == "S2");
  CHECK(module_label(projective(q, 0, f)) == "P1");
  auto k = kronecker();
  CHECK(module_label(kronecker_regular(k, 5)) == "(1,1)");
}

TEST_CASE("queries") {
  const auto& f = f101();
  QueryArgs args;
  args.from = "P1";
  args.to = "S1";
  auto j = nlohmann::json::parse(run_query("hom", a2(), f, args));
  CHECK(j["dimension"] == 1);
  args.from = "S1";
  args.to = "S2";
  CHECK(nlohmann::json::parse(run_query("ext", a2(), f, args))["dimension"] == 1);
  args.module = "S1";
  CHECK(nlohmann::json::parse(run_query("tau", a2(), f, args))["result"]["label"] == "S2");
  CHECK(nlohmann::json::parse(run_query("indec", d4(), f, args))["count"] == 12);
  args.module = "P1";
  CHECK(nlohmann::json::parse(run_query("classify", kronecker(), f, args))["class"] == "Preprojective");
  CHECK_THROWS_AS(run_query("indec", kronecker(), f, args), Error);
  CHECK_THROWS_AS(run_query("hom", a2(), f, QueryArgs{}), Error);
}
