#include "pathpack/bmatching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <map>

#include "pathpack/errors.hpp"

namespace pathpack {

namespace {

std::string label(const BMatchingInstance& inst, int v) {
  if (static_cast<std::size_t>(v) < inst.labels.size()) return inst.labels[static_cast<std::size_t>(v)];
  return "vertex " + std::to_string(v);
}

}  // namespace

BMatchingResult max_b_matching(const BMatchingInstance& inst) {
  if (inst.b.size() != static_cast<std::size_t>(inst.vertex_count)) {
    throw PreconditionError("b-vector has " + std::to_string(inst.b.size()) + " entries for " +
                            std::to_string(inst.vertex_count) + " vertices");
  }
  std::vector<long long> cap(static_cast<std::size_t>(inst.vertex_count));
  std::vector<int> first_copy(static_cast<std::size_t>(inst.vertex_count) + 1, 0);
  for (int v = 0; v < inst.vertex_count; ++v) {
    const Rational& bv = inst.b[static_cast<std::size_t>(v)];
    if (!is_integer(bv) || bv < 0) {
      throw PreconditionError("b-matching needs a non-negative integer b, got " + to_string(bv) + " at " +
                              label(inst, v));
    }
    cap[static_cast<std::size_t>(v)] = bv.get_num().get_si();
    first_copy[static_cast<std::size_t>(v) + 1] =
        first_copy[static_cast<std::size_t>(v)] + static_cast<int>(cap[static_cast<std::size_t>(v)]);
  }
  for (auto [u, v] : inst.edges) {
    if (u == v || u < 0 || v < 0 || u >= inst.vertex_count || v >= inst.vertex_count) {
      throw PreconditionError("b-matching edge is a loop or has an endpoint out of range");
    }
  }

  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int copies = first_copy.back();
  Graph g(static_cast<std::size_t>(copies));
  for (auto [u, v] : inst.edges) {
    for (int i = first_copy[static_cast<std::size_t>(u)]; i < first_copy[static_cast<std::size_t>(u) + 1]; ++i) {
      for (int j = first_copy[static_cast<std::size_t>(v)]; j < first_copy[static_cast<std::size_t>(v) + 1]; ++j) {
        boost::add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), g);
      }
    }
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(static_cast<std::size_t>(copies));
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);

  std::vector<int> owner(static_cast<std::size_t>(copies));
  for (int v = 0; v < inst.vertex_count; ++v) {
    for (int i = first_copy[static_cast<std::size_t>(v)]; i < first_copy[static_cast<std::size_t>(v) + 1]; ++i) {
      owner[static_cast<std::size_t>(i)] = v;
    }
  }
  std::map<std::pair<int, int>, std::size_t> edge_of;
  for (std::size_t k = 0; k < inst.edges.size(); ++k) {
    auto [u, v] = inst.edges[k];
    edge_of[{std::min(u, v), std::max(u, v)}] = k;
  }

  BMatchingResult res;
  res.multiplicity.assign(inst.edges.size(), 0);
  const auto null = boost::graph_traits<Graph>::null_vertex();
  for (int i = 0; i < copies; ++i) {
    const auto j = mate[static_cast<std::size_t>(i)];
    if (j == null || static_cast<int>(j) < i) continue;
    const int u = owner[static_cast<std::size_t>(i)];
    const int v = owner[j];
    ++res.multiplicity[edge_of.at({std::min(u, v), std::max(u, v)})];
    ++res.value;
  }
  return res;
}

bool is_feasible_b_matching(const BMatchingInstance& inst, const std::vector<long long>& multiplicity) {
  if (multiplicity.size() != inst.edges.size()) return false;
  std::vector<Rational> load(static_cast<std::size_t>(inst.vertex_count), Rational(0));
  for (std::size_t k = 0; k < inst.edges.size(); ++k) {
    if (multiplicity[k] < 0) return false;
    load[static_cast<std::size_t>(inst.edges[k].first)] += static_cast<long>(multiplicity[k]);
    load[static_cast<std::size_t>(inst.edges[k].second)] += static_cast<long>(multiplicity[k]);
  }
  for (int v = 0; v < inst.vertex_count; ++v) {
    if (load[static_cast<std::size_t>(v)] > inst.b[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

}  // namespace pathpack
