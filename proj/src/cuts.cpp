#include "pathpack/cuts.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "pathpack/errors.hpp"

namespace pathpack {

namespace {

// Dinic on the doubled arc representation. An undirected unit edge becomes
// two opposite arcs of capacity one that serve as each other's reverse.
class Dinic {
 public:
  explicit Dinic(int n) : adj_(static_cast<std::size_t>(n)), level_(static_cast<std::size_t>(n)),
                          it_(static_cast<std::size_t>(n)) {}

  void add_undirected(int u, int v) {
    const int a = static_cast<int>(arcs_.size());
    arcs_.push_back({v, 1});
    arcs_.push_back({u, 1});
    adj_[static_cast<std::size_t>(u)].push_back(a);
    adj_[static_cast<std::size_t>(v)].push_back(a + 1);
  }

  void add_directed(int u, int v, int cap) {
    const int a = static_cast<int>(arcs_.size());
    arcs_.push_back({v, cap});
    arcs_.push_back({u, 0});
    adj_[static_cast<std::size_t>(u)].push_back(a);
    adj_[static_cast<std::size_t>(v)].push_back(a + 1);
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj_[static_cast<std::size_t>(v)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          q.push(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj_[static_cast<std::size_t>(v)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int v, int t, int limit) {
    if (v == t) return limit;
    auto& i = it_[static_cast<std::size_t>(v)];
    const auto& out = adj_[static_cast<std::size_t>(v)];
    for (; i < out.size(); ++i) {
      const int a = out[i];
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      if (int got = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= got;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

void check_sides(const Multigraph& g, std::span<const int> sources, std::span<const int> sinks) {
  if (sources.empty() || sinks.empty()) throw PreconditionError("max_flow: empty source or sink set");
  std::vector<char> side(static_cast<std::size_t>(g.node_count()), 0);
  for (int s : sources) {
    if (s < 0 || s >= g.node_count()) throw PreconditionError("max_flow: node out of range");
    side[static_cast<std::size_t>(s)] = 1;
  }
  for (int t : sinks) {
    if (t < 0 || t >= g.node_count()) throw PreconditionError("max_flow: node out of range");
    if (side[static_cast<std::size_t>(t)] == 1) throw PreconditionError("max_flow: source and sink sets overlap");
  }
}

}  // namespace

CutResult max_flow(const Multigraph& g, std::span<const int> sources, std::span<const int> sinks) {
  check_sides(g, sources, sinks);
  const int n = g.node_count();
  const int src = n;
  const int snk = n + 1;
  Dinic dinic(n + 2);
  for (const Edge& e : g.edges()) dinic.add_undirected(e.u, e.v);
  const int big = g.edge_count() + 1;
  for (int s : sources) dinic.add_directed(src, s, big);
  for (int t : sinks) dinic.add_directed(t, snk, big);

  CutResult res;
  res.value = dinic.run(src, snk);
  auto seen = dinic.reachable(src);
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) res.source_side.push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (seen[static_cast<std::size_t>(ed.u)] != seen[static_cast<std::size_t>(ed.v)]) res.cut_edges.push_back(e);
  }
  return res;
}

namespace {

std::vector<int> complement_terminals(const Network& net, std::span<const int> subset) {
  std::vector<char> in(static_cast<std::size_t>(net.graph().node_count()), 0);
  for (int v : subset) {
    if (v < 0 || v >= net.graph().node_count() || !net.is_terminal(v)) {
      throw PreconditionError("terminal subset contains a non-terminal");
    }
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> rest;
  for (int t : net.terminals()) {
    if (!in[static_cast<std::size_t>(t)]) rest.push_back(t);
  }
  if (subset.empty() || rest.empty()) throw PreconditionError("terminal subset must be proper and non-empty");
  return rest;
}

}  // namespace

int lambda(const Network& net, std::span<const int> terminal_subset) {
  auto rest = complement_terminals(net, terminal_subset);
  return max_flow(net.graph(), terminal_subset, rest).value;
}

int lambda(const Network& net, int terminal) {
  const int one[] = {terminal};
  return lambda(net, std::span<const int>(one));
}

Rational beta(const Network& net, std::span<const int> terminal_subset) {
  long long sum = 0;
  for (int t : terminal_subset) sum += lambda(net, t);
  return make_rational(sum - lambda(net, terminal_subset), 2);
}

int cut_degree(const Multigraph& g, std::span<const int> node_set) {
  std::vector<char> in(static_cast<std::size_t>(g.node_count()), 0);
  int count = 0;
  for (int v : node_set) {
    if (v < 0 || v >= g.node_count()) throw PreconditionError("cut_degree: node out of range");
    if (!in[static_cast<std::size_t>(v)]) ++count;
    in[static_cast<std::size_t>(v)] = 1;
  }
  if (count == 0 || count == g.node_count()) throw PreconditionError("cut_degree: set must be proper and non-empty");
  int d = 0;
  for (const Edge& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) ++d;
  }
  return d;
}

}  // namespace pathpack
