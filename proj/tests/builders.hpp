#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathpack/multiflow.hpp"
#include "pathpack/network.hpp"

namespace build {

using namespace pathpack;

inline RawNetwork raw(std::vector<NodeId> nodes, std::vector<NodeId> terminals,
                      const std::vector<std::pair<NodeId, NodeId>>& edges,
                      std::vector<std::vector<NodeId>> clutter = {}) {
  RawNetwork r;
  r.nodes = std::move(nodes);
  r.terminals = std::move(terminals);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    r.edges.push_back({default_edge_id(i, edges.size()), edges[i].first, edges[i].second});
  }
  r.clutter = std::move(clutter);
  return r;
}

inline Network net(std::vector<NodeId> nodes, std::vector<NodeId> terminals,
                   const std::vector<std::pair<NodeId, NodeId>>& edges,
                   std::vector<std::vector<NodeId>> clutter = {}) {
  return Network::from_raw(raw(std::move(nodes), std::move(terminals), edges, std::move(clutter)));
}

inline Network parallel3() { return net({"s", "t"}, {"s", "t"}, {{"t", "s"}, {"t", "s"}, {"t", "s"}}); }

inline Network triangle(std::vector<std::vector<NodeId>> k = {{"a", "b"}}) {
  return net({"a", "b", "c"}, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, std::move(k));
}

inline Network path_abc(std::vector<std::vector<NodeId>> k = {{"a", "b"}, {"b", "c"}}) {
  return net({"a", "b", "c"}, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, std::move(k));
}

inline Network star(std::vector<std::vector<NodeId>> k = {{"s", "t"}}) {
  return net({"s", "t", "u", "v", "x"}, {"s", "t", "u", "v"}, {{"s", "x"}, {"t", "x"}, {"u", "x"}, {"v", "x"}},
             std::move(k));
}

inline TPath path(const Network& n, std::vector<NodeId> names) { return path_from_names(n.graph(), names); }

inline Multiflow flow(const Network& n, const std::vector<std::vector<NodeId>>& paths, const Rational& w = 1) {
  Multiflow f;
  for (const auto& p : paths) f.add(path(n, p), w);
  return f;
}

inline int node(const Network& n, const char* name) { return n.graph().node_index(name); }

inline std::vector<int> nodes(const Network& n, std::vector<NodeId> names) {
  std::vector<int> out;
  for (const auto& s : names) out.push_back(n.graph().node_index(s));
  return out;
}

}  // namespace build
