#include <doctest.h>

#include "builders.hpp"
#include "oracles.hpp"
#include "pathpack/errors.hpp"
#include "pathpack/network.hpp"

using namespace pathpack;

TEST_CASE("validate: parallel edges with empty clutter") {
  auto r = validate(build::parallel3());
  CHECK(r.ok());
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("validate: triangle clutter is not flat") {
  auto n = build::triangle({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto r = validate(n, true);
  CHECK_FALSE(r.passed("flat"));
  CHECK_FALSE(r.ok());
  CHECK(validate(n, false).passed("clutter"));
}

TEST_CASE("validate: odd inner degree breaks the Eulerian check") {
  auto n = build::net({"a", "b", "c", "y"}, {"a", "b", "c"},
                      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"y", "a"}, {"y", "b"}, {"y", "c"}},
                      {{"a", "b"}, {"b", "c"}});
  auto r = validate(n);
  CHECK_FALSE(r.passed("eulerian"));
  CHECK_FALSE(is_eulerian(n));
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(Network::from_raw(build::raw({"a", "a"}, {"a"}, {})), StructuralError);
  CHECK_THROWS_AS(Network::from_raw(build::raw({"a", "b"}, {"a", "b"}, {{"a", "z"}})), StructuralError);
  CHECK_THROWS_AS(Network::from_raw(build::raw({"a", "b"}, {"a", "b"}, {{"a", "a"}})), StructuralError);
  CHECK_THROWS_AS(Network::from_raw(build::raw({"a", "b", "x"}, {"a", "b"}, {{"a", "b"}}, {{"a", "x"}})),
                  StructuralError);
  auto rep = validate(build::raw({"a", "b"}, {"a", "c"}, {}));
  CHECK_FALSE(rep.structural_errors.empty());
  CHECK_FALSE(rep.ok());
}

TEST_CASE("clutter predicates") {
  auto n = build::net({"a", "b", "c", "d"}, {"a", "b", "c", "d"}, {});
  CHECK(is_clutter(n.make_clutter({{"a", "b"}, {"b", "c"}})));
  CHECK_FALSE(is_clutter(n.make_clutter({{"a", "b"}, {"a", "b", "c"}})));
  CHECK(is_flat(n.make_clutter({{"a", "b"}, {"c", "d"}})));
  CHECK_FALSE(is_flat(n.make_clutter({{"a", "b", "c"}})));
  CHECK(is_simple(n.make_clutter({{"a", "b", "c"}, {"c", "d"}})));
  CHECK_FALSE(is_simple(n.make_clutter({{"a", "b", "c"}, {"a", "b", "d"}})));
  // three pairwise meeting members with distinct intersections
  CHECK_FALSE(satisfies_k_condition(n.make_clutter({{"a", "b"}, {"b", "c"}, {"a", "c"}})));
  CHECK(satisfies_k_condition(n.make_clutter({{"a", "b"}, {"b", "c"}, {"b", "d"}})));
}

TEST_CASE("pair classification") {
  auto n = build::net({"a", "b", "c", "d"}, {"a", "b", "c", "d"}, {}, {{"a", "b"}});
  CHECK(classify_pair(n, "a", "c") == PairClass::Strong);
  CHECK(classify_pair(n, "a", "b") == PairClass::Weak);
  auto m = build::net({"a", "b", "c", "d"}, {"a", "b", "c", "d"}, {}, {{"a", "b", "c"}, {"a", "b", "d"}});
  CHECK(classify_pair(m, "a", "b") == PairClass::Equivalent);
  CHECK(classify_pair(m, "c", "d") == PairClass::Strong);
  CHECK_THROWS_AS(classify_pair(m, "a", "a"), PreconditionError);
  auto s = build::star();
  CHECK_THROWS_AS(classify_pair(s, "s", "x"), PreconditionError);
}

TEST_CASE("expand: trivial expansion is the identity") {
  auto n = build::triangle();
  auto ex = expand(n, Expansion::trivial(n));
  CHECK(ex.network.graph().nodes() == n.graph().nodes());
  CHECK(ex.network.graph().edge_count() == 3);
  CHECK(ex.network.clutter().members == n.clutter().members);
}

TEST_CASE("expand: star with x absorbed into s") {
  auto n = build::star();
  auto x = Expansion::from_blocks(n, {{"s", {"s", "x"}}});
  auto ex = expand(n, x);
  const auto& g = ex.network.graph();
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  std::vector<std::pair<std::string, std::string>> ends;
  for (const auto& e : g.edges()) {
    auto a = g.name(e.u), b = g.name(e.v);
    if (a > b) std::swap(a, b);
    ends.emplace_back(a, b);
  }
  std::sort(ends.begin(), ends.end());
  CHECK(ends == std::vector<std::pair<std::string, std::string>>{{"s", "t"}, {"s", "u"}, {"s", "v"}});
  CHECK(validate(ex.network).ok());
  CHECK(oracle::lambda(ex.network, {g.node_index("s")}) == 3);
}

TEST_CASE("expansion blocks are checked") {
  auto n = build::star();
  CHECK_THROWS_AS(Expansion::from_blocks(n, {{"s", {"s", "t"}}}), StructuralError);
  CHECK_THROWS_AS(Expansion::from_blocks(n, {{"s", {"s", "y"}}}), StructuralError);
  CHECK_THROWS_AS(Expansion::from_blocks(n, {{"s", {"s", "x"}}, {"t", {"t", "x"}}}), StructuralError);
  CHECK_THROWS_AS(Expansion::from_blocks(n, {{"x", {"x"}}}), StructuralError);
  CHECK_THROWS_AS(Expansion::from_blocks(n, {{"s", {"x"}}}), StructuralError);
}

TEST_CASE("expansion order is blockwise containment") {
  auto n = build::star();
  auto triv = Expansion::trivial(n);
  auto xs = Expansion::from_blocks(n, {{"s", {"s", "x"}}});
  auto xt = Expansion::from_blocks(n, {{"t", {"t", "x"}}});
  CHECK(expansion_precedes(triv, xs));
  CHECK(expansion_precedes(xs, xs));
  CHECK_FALSE(expansion_strictly_precedes(xs, xs));
  CHECK(expansion_strictly_precedes(triv, xs));
  CHECK_FALSE(expansion_precedes(xs, xt));
  CHECK_FALSE(expansion_precedes(xs, triv));
}

TEST_CASE("disconnected block produces a warning") {
  auto n = build::net({"a", "b", "x", "y"}, {"a", "b"}, {{"a", "x"}, {"x", "b"}, {"a", "y"}, {"y", "b"}});
  CHECK(expansion_warnings(n, Expansion::from_blocks(n, {{"a", {"a", "x"}}})).empty());
  auto x = Expansion::from_owner(n, {0, 1, -1, -1});
  CHECK(x.is_trivial());
  auto far = build::net({"a", "b", "x", "y"}, {"a", "b"}, {{"a", "x"}, {"x", "y"}, {"y", "b"}});
  CHECK_FALSE(expansion_warnings(far, Expansion::from_blocks(far, {{"a", {"a", "y"}}})).empty());
}

TEST_CASE("default edge ids sort in position order") {
  CHECK(default_edge_id(0, 3) == "e00");
  CHECK(default_edge_id(7, 100) == "e07");
  CHECK(default_edge_id(99, 100) == "e99");
  CHECK(default_edge_id(5, 1000) == "e005");
}
