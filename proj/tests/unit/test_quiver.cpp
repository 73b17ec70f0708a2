#include "doctest.h"
#include "error.hpp"
#include "quiver.hpp"
#include "support.hpp"

using namespace hsg;

TEST_CASE("parse_quiver examples") {
  auto q = Quiver::parse("vertices 2\narrow a 1 2\n");
  CHECK(q->vertex_count() == 2);
  REQUIRE(q->arrows().size() == 1);
  CHECK(q->arrows()[0].source == 0);
  CHECK(q->arrows()[0].target == 1);

  auto k = Quiver::parse("vertices 2\r\narrow a 1 2\r\narrow b 1 2 # second arrow\r\n");
  CHECK(k->arrows().size() == 2);

  try {
    Quiver::parse("vertices 1\narrow a 1 1\n");
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cyclic_quiver);
  }
}

TEST_CASE("parse errors") {
  auto code_of = [](const char* text) {
    try {
      Quiver::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  CHECK(code_of("vertices 2\narrow a 1 2\narrow a 2 1\n") == ErrorCode::duplicate_name);
  CHECK(code_of("vertices 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\n") == ErrorCode::cyclic_quiver);
  CHECK(code_of("vertices 2\narrow a 1 3\n") == ErrorCode::unknown_vertex);
  CHECK(code_of("arrow a 1 2\n") == ErrorCode::parse);
  CHECK(code_of("vertices x\n") == ErrorCode::parse);
  CHECK(code_of("vertices 2\nedge a 1 2\n") == ErrorCode::parse);
}

TEST_CASE("path enumeration agrees with a counting recursion") {
  auto q = Quiver::parse("vertices 4\narrow a 1 2\narrow b 1 2\narrow c 2 3\narrow d 1 3\narrow e 3 4\n");
  // paths(v, w) = [v == w] + sum over arrows x: v -> u of paths(u, w)
  std::vector<std::vector<std::int64_t>> count(4, std::vector<std::int64_t>(4, 0));
  for (int v = 3; v >= 0; --v)
    for (int w = 0; w < 4; ++w) {
      count[v][w] = v == w ? 1 : 0;
      for (const auto& a : q->arrows())
        if (a.source == v) count[v][w] += count[a.target][w];
    }
  CHECK(q->path_counts() == count);
  for (int id = 0; id < static_cast<int>(q->paths().size()); ++id) {
    const Path& p = q->path(id);
    CHECK(q->paths_between(p.source, p.target)[q->position(id)] == id);
  }
  int ac = q->concat(q->arrow_path(0), q->arrow_path(2));
  REQUIRE(ac >= 0);
  CHECK(q->path(ac).arrows == std::vector<int>{0, 2});
  CHECK(q->concat(q->arrow_path(2), q->arrow_path(0)) == -1);
}

TEST_CASE("graph classification") {
  using namespace hsg::testing;
  CHECK(a2()->classify_graph().type == GraphType::dynkin);
  CHECK(a3()->classify_graph().type == GraphType::dynkin);
  CHECK(d4()->classify_graph().type == GraphType::dynkin);
  auto k = kronecker()->classify_graph();
  CHECK(k.type == GraphType::euclidean);
  CHECK(k.null_root == std::vector<std::int64_t>{1, 1});
  auto d4tilde = Quiver::parse("vertices 5\narrow a 1 5\narrow b 2 5\narrow c 3 5\narrow d 4 5\n")->classify_graph();
  CHECK(d4tilde.type == GraphType::euclidean);
  CHECK(d4tilde.null_root == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  CHECK(Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n")->classify_graph().type == GraphType::other);
  auto e6 = Quiver::parse("vertices 6\narrow a 1 2\narrow b 2 3\narrow c 3 4\narrow d 4 5\narrow e 6 3\n");
  CHECK(e6->classify_graph().type == GraphType::dynkin);
}

TEST_CASE("euler_form examples") {
  using namespace hsg::testing;
  CHECK(euler_form(*a2(), {3, 4}, {0, 0}) == 0);
  CHECK(euler_form(*a2(), {1, 1}, {1, 0}) == 1);
  CHECK(euler_form(*kronecker(), {1, 1}, {1, 1}) == 0);
  CHECK_THROWS_AS(euler_form(*a2(), {1}, {1, 0}), Error);
}

TEST_CASE("opposite quiver round trip") {
  auto q = hsg::testing::kronecker();
  auto op = q->opposite();
  CHECK(op->arrows()[0].source == 1);
  CHECK(same_quiver(*op->opposite(), *q));
  CHECK(Quiver::parse(q->to_text())->arrows() == q->arrows());
}
