#include <doctest.h>

#include <algorithm>
#include <set>

#include "builders.hpp"
#include "oracles.hpp"
#include "pathpack/cuts.hpp"
#include "pathpack/errors.hpp"
#include "pathpack/multiflow.hpp"
#include "pathpack/solvers.hpp"

using namespace pathpack;
using build::flow;
using build::node;
using build::nodes;
using build::path;

TEST_CASE("theta examples") {
  auto t = build::triangle();
  CHECK(theta(t, Multiflow{}) == 0);
  auto f = flow(t, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(theta(t, f) == make_rational(5, 2));
  auto c = count_classes(t, f);
  CHECK(c.strong == 2);
  CHECK(c.weak == 1);
  CHECK(c.total == 3);

  auto s = build::star();
  CHECK(theta(s, flow(s, {{"s", "x", "t"}, {"u", "x", "v"}})) == make_rational(3, 2));
}

TEST_CASE("multiflow bookkeeping") {
  auto t = build::triangle();
  Multiflow f;
  auto p = path(t, {"a", "c", "b"});
  f.add(p, make_rational(1, 3));
  f.add(reversed(p), make_rational(1, 3));
  CHECK(f.path_count() == 1);
  CHECK(f.weight(p) == make_rational(2, 3));
  f.remove(p, make_rational(2, 3));
  CHECK(f.empty());
  f.add(p, 0);
  CHECK(f.empty());
  CHECK_THROWS_AS(f.add(p, -1), PreconditionError);
}

TEST_CASE("check_multiflow catches capacity and shape") {
  auto t = build::triangle();
  Multiflow f = flow(t, {{"a", "b"}, {"a", "c", "b"}});
  CHECK_NOTHROW(check_multiflow(t, f));
  f.add(path(t, {"a", "b"}), make_rational(1, 2));
  CHECK_THROWS_AS(check_multiflow(t, f), PreconditionError);
  CHECK_FALSE(f.respects_capacity(t.graph()));

  auto s = build::star();
  TPath closed;
  closed.nodes = nodes(s, {"s", "x", "s"});
  closed.edges = {0, 0};
  CHECK_FALSE(is_valid_tpath(s, closed));
}

TEST_CASE("hat examples") {
  auto t = build::triangle();
  auto f = flow(t, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(hat(t, f) == f);

  auto p = build::path_abc();
  auto g = flow(p, {{"a", "b", "c"}});
  CHECK(is_compound(p, path(p, {"a", "b", "c"})));
  auto h = hat(p, g);
  CHECK(h == flow(p, {{"a", "b"}, {"b", "c"}}));

  auto q = build::net({"a", "b", "c", "d"}, {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(hat(q, flow(q, {{"a", "b", "c", "d"}})) == flow(q, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
}

TEST_CASE("locks examples") {
  auto s = build::star();
  auto st = nodes(s, {"s", "t"});
  CHECK_FALSE(locks(s, flow(s, {{"s", "x", "t"}, {"u", "x", "v"}}), st));
  CHECK(locks(s, flow(s, {{"s", "x", "u"}, {"t", "x", "v"}}), st));
  CHECK(count_between(s, flow(s, {{"s", "x", "u"}, {"t", "x", "v"}}), st, nodes(s, {"u", "v"})) == 2);

  auto free = build::net({"a", "b", "c"}, {"a", "b", "c"}, {{"a", "b"}});
  CHECK(lambda(free, nodes(free, {"c"})) == 0);
  CHECK(locks(free, Multiflow{}, nodes(free, {"c"})));
}

TEST_CASE("augmenting sequence examples") {
  auto s = build::star();
  auto st = nodes(s, {"s", "t"});
  auto f = flow(s, {{"s", "x", "t"}, {"u", "x", "v"}});
  auto seq = find_augmenting_sequence(s, f, st);
  REQUIRE(seq.has_value());
  REQUIRE(seq->paths.size() == 2);
  CHECK(canonical(seq->paths[0]) == canonical(path(s, {"s", "x", "t"})));
  CHECK(canonical(seq->paths[1]) == canonical(path(s, {"u", "x", "v"})));
  CHECK(seq->pivots == std::vector<int>{node(s, "x")});
  CHECK(is_augmenting_sequence(s, *seq, st));

  CHECK_FALSE(find_augmenting_sequence(s, flow(s, {{"s", "x", "u"}, {"t", "x", "v"}}), st).has_value());

  auto p = build::parallel3();
  Multiflow three;
  for (int e = 0; e < 3; ++e) {
    std::vector<int> es{e};
    three.add(path_from_edges(p.graph(), node(p, "t"), es), 1);
  }
  CHECK_FALSE(find_augmenting_sequence(p, three, nodes(p, {"t"})).has_value());
}

TEST_CASE("augmenting sequence preconditions") {
  auto s = build::star();
  auto st = nodes(s, {"s", "t"});
  CHECK_THROWS_AS(find_augmenting_sequence(s, flow(s, {{"s", "x", "t"}}), st), UnusedEdgeError);
  auto t = build::triangle();
  // all edges used, but two paths where three fit
  CHECK_THROWS_AS(find_augmenting_sequence(t, flow(t, {{"a", "b"}, {"b", "c", "a"}}), nodes(t, {"a"})),
                  NotMaximumError);
}

TEST_CASE("switch examples") {
  auto s = build::star();
  auto f = flow(s, {{"s", "x", "t"}, {"u", "x", "v"}});
  auto p = path(s, {"s", "x", "t"});
  auto q = path(s, {"u", "x", "v"});
  int x = node(s, "x");
  auto v1 = switch_paths(s, f, p, q, x, 1);
  CHECK(v1.flow == flow(s, {{"s", "x", "u"}, {"t", "x", "v"}}));
  auto v2 = switch_paths(s, f, p, q, x, 2);
  CHECK(v2.flow == flow(s, {{"s", "x", "v"}, {"t", "x", "u"}}));
  CHECK(theta(s, f) == make_rational(3, 2));
  CHECK(theta(s, v1.flow) == 2);

  for (int variant : {1, 2}) {
    auto once = switch_paths(s, f, p, q, x, variant);
    auto back = switch_paths(s, once.flow, once.first, once.second, x, variant);
    CHECK(back.flow == f);
    CHECK(once.flow.size() == f.size());
    CHECK(once.flow.edge_usage(s.graph()) == f.edge_usage(s.graph()));
  }
}

TEST_CASE("switch preconditions") {
  auto s = build::star();
  Multiflow f;
  f.add(path(s, {"s", "x", "t"}), 1);
  f.add(path(s, {"u", "x", "v"}), make_rational(1, 2));
  CHECK_THROWS_AS(switch_paths(s, f, path(s, {"s", "x", "t"}), path(s, {"u", "x", "v"}), node(s, "x"), 1),
                  PreconditionError);
  auto g = flow(s, {{"s", "x", "t"}, {"u", "x", "v"}});
  CHECK_THROWS_AS(switch_paths(s, g, path(s, {"s", "x", "t"}), path(s, {"u", "x", "v"}), node(s, "s"), 1),
                  PreconditionError);
}

TEST_CASE("split and restore") {
  auto s = build::star();
  int x = node(s, "x");
  auto sp = split_node(s, x, EdgePairing{{{0, 1}, {2, 3}}});
  const auto& g = sp.network.graph();
  CHECK(g.node_count() == 4);
  REQUIRE(g.edge_count() == 2);
  std::set<std::set<std::string>> ends;
  for (const auto& e : g.edges()) ends.insert({g.name(e.u), g.name(e.v)});
  CHECK(ends == std::set<std::set<std::string>>{{"s", "t"}, {"u", "v"}});
  auto sp2 = split_node(s, x, EdgePairing{{{0, 2}, {1, 3}}});
  ends.clear();
  for (const auto& e : sp2.network.graph().edges()) {
    ends.insert({sp2.network.graph().name(e.u), sp2.network.graph().name(e.v)});
  }
  CHECK(ends == std::set<std::set<std::string>>{{"s", "u"}, {"t", "v"}});

  auto back = restore_node(sp);
  CHECK(back.graph().nodes() == s.graph().nodes());
  for (int e = 0; e < 4; ++e) {
    CHECK(back.graph().edge(e).id == s.graph().edge(e).id);
    CHECK(back.graph().edge(e).u == s.graph().edge(e).u);
    CHECK(back.graph().edge(e).v == s.graph().edge(e).v);
  }

  auto f = flow(s, {{"s", "x", "u"}, {"t", "x", "v"}});
  CHECK(split_preserves(s, f, x, EdgePairing{{{0, 2}, {1, 3}}}));
  CHECK_FALSE(split_preserves(s, f, x, EdgePairing{{{0, 1}, {2, 3}}}));
  auto moved = reembed(s, f, sp2);
  CHECK(moved.size() == 2);
  CHECK(restore_flow(sp2, s, moved) == f);
  CHECK_THROWS_AS(reembed(s, f, sp), PreconditionError);

  auto t = build::triangle();
  CHECK_THROWS_AS(split_node(t, node(t, "a"), 0), PreconditionError);
}

TEST_CASE("three_halves example") {
  auto s = build::star();
  auto f = flow(s, {{"s", "x", "t"}, {"u", "x", "v"}});
  auto out = three_halves(s, f, path(s, {"s", "x", "t"}), path(s, {"u", "x", "v"}), node(s, "x"), 1);
  Multiflow want;
  want.add(path(s, {"t", "x", "v"}), make_rational(1, 2));
  want.add(path(s, {"t", "x", "u"}), make_rational(1, 2));
  want.add(path(s, {"u", "x", "v"}), make_rational(1, 2));
  CHECK(out == want);
  CHECK(out.size() == make_rational(3, 2));
  CHECK(theta(s, out) == make_rational(3, 2));
  for (const auto& u : out.edge_usage(s.graph())) CHECK(u <= 1);
  CHECK_THROWS_AS(three_halves(s, f, path(s, {"s", "x", "t"}), path(s, {"u", "x", "v"}), node(s, "x"), 0),
                  PreconditionError);
  CHECK_THROWS_AS(three_halves(s, f, path(s, {"s", "x", "t"}), path(s, {"u", "x", "v"}), node(s, "x"), 3),
                  PreconditionError);
}

TEST_CASE("trident examples") {
  auto s = build::star();
  auto tr = detect_tridents(s, flow(s, {{"s", "x", "t"}, {"u", "x", "v"}}));
  REQUIRE(tr.size() == 1);
  CHECK(tr[0].pivot == node(s, "x"));
  CHECK(tr[0].kind == TridentKind::Ordinary);

  auto p = build::parallel3();
  CHECK(detect_tridents(p, Multiflow{}).empty());
  auto t = build::triangle();
  CHECK(detect_tridents(t, flow(t, {{"a", "b"}, {"b", "c"}, {"a", "c"}})).empty());

  // two A-paths crossing at x, A = {a, b, c}
  auto cross = build::net({"a", "b", "c", "d", "x"}, {"a", "b", "c", "d"},
                          {{"a", "x"}, {"b", "x"}, {"c", "x"}, {"d", "x"}}, {{"a", "b", "c", "d"}});
  CHECK(detect_tridents(cross, flow(cross, {{"a", "x", "b"}, {"c", "x", "d"}})).empty());
}

TEST_CASE("operations keep capacity and usage on random packings") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Network n = fixtures::flat_instance(seed);
    auto paths = enumerate_paths(n);
    PackingProblem pp;
    pp.edge_count = n.graph().edge_count();
    for (const auto& p : paths) {
      pp.paths.push_back(p.edges);
      pp.weights.push_back(1);
    }
    std::size_t visits = 0;
    for_each_packing(pp, [&](const std::vector<int>& chosen) {
      if (++visits % 7 != 0) return;
      Multiflow f = to_multiflow(paths, chosen);
      auto usage = f.edge_usage(n.graph());
      auto h = hat(n, f);
      CHECK(h.respects_capacity(n.graph()));
      CHECK(h.size() >= f.size());
      CHECK(hat(n, h) == h);
      for (const auto& [p, w] : h.paths()) CHECK_FALSE(is_compound(n, p));
      for (const auto& [p, w] : f.paths()) {
        for (const auto& [q, v] : f.paths()) {
          if (!(p < q)) continue;
          for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
            int x = p.nodes[i];
            if (n.is_terminal(x)) continue;
            if (std::find(q.nodes.begin() + 1, q.nodes.end() - 1, x) == q.nodes.end() - 1) continue;
            for (int variant : {1, 2}) {
              auto r = switch_paths(n, f, p, q, x, variant);
              CHECK(r.flow.respects_capacity(n.graph()));
              if (!r.first_closed && !r.second_closed) {
                CHECK(r.flow.size() == f.size());
                CHECK(r.flow.edge_usage(n.graph()) == usage);
              }
              ++checked;
            }
          }
        }
      }
    }, 5000);
  }
  CHECK(checked > 0);
}
