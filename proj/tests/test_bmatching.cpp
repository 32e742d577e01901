#include <doctest.h>

#include "oracles.hpp"
#include "pathpack/bmatching.hpp"
#include "pathpack/errors.hpp"
#include "pathpack/generate.hpp"

using namespace pathpack;

TEST_CASE("b-matching examples") {
  BMatchingInstance empty;
  empty.vertex_count = 3;
  empty.b = {2, 2, 2};
  CHECK(max_b_matching(empty).value == 0);

  BMatchingInstance two;
  two.vertex_count = 2;
  two.edges = {{0, 1}};
  two.b = {1, 1};
  CHECK(max_b_matching(two).value == 1);
  two.b = {2, 2};
  CHECK(oracle::b_matching(2, two.edges, {2, 2}) == 2);
  auto r = max_b_matching(two);
  CHECK(r.value == 2);
  CHECK(r.multiplicity == std::vector<long long>{2});
  CHECK(is_feasible_b_matching(two, r.multiplicity));
  CHECK_FALSE(is_feasible_b_matching(two, {3}));
}

TEST_CASE("b-matching rejects fractional b") {
  BMatchingInstance inst;
  inst.vertex_count = 2;
  inst.edges = {{0, 1}};
  inst.b = {make_rational(1, 2), 1};
  inst.labels = {"{a,b}", "{b,c}"};
  CHECK_THROWS_WITH_AS(max_b_matching(inst), doctest::Contains("{a,b}"), PreconditionError);
  inst.b = {-1, 1};
  CHECK_THROWS_AS(max_b_matching(inst), PreconditionError);
}

TEST_CASE("odd cycle needs the blossom") {
  BMatchingInstance tri;
  tri.vertex_count = 3;
  tri.edges = {{0, 1}, {1, 2}, {0, 2}};
  tri.b = {1, 1, 1};
  CHECK(max_b_matching(tri).value == 1);
  tri.b = {2, 2, 2};
  CHECK(max_b_matching(tri).value == 3);
  tri.b = {3, 1, 1};
  CHECK(max_b_matching(tri).value == 2);
}

TEST_CASE("b-matching matches enumeration on random graphs") {
  Rng rng(2024);
  for (int round = 0; round < 80; ++round) {
    BMatchingInstance inst;
    inst.vertex_count = rng.between(2, 6);
    std::vector<long> b;
    for (int v = 0; v < inst.vertex_count; ++v) {
      b.push_back(rng.between(0, 3));
      inst.b.push_back(static_cast<long>(b.back()));
    }
    for (int u = 0; u < inst.vertex_count; ++u) {
      for (int v = u + 1; v < inst.vertex_count; ++v) {
        if (inst.edges.size() < 6 && rng.chance(0.5)) inst.edges.emplace_back(u, v);
      }
    }
    auto r = max_b_matching(inst);
    CHECK(r.value == oracle::b_matching(inst.vertex_count, inst.edges, b));
    CHECK(is_feasible_b_matching(inst, r.multiplicity));
    long long sum = 0;
    for (auto m : r.multiplicity) sum += m;
    CHECK(sum == r.value);
  }
}
