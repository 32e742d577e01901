#include "pathpack/multiflow.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "pathpack/cuts.hpp"

namespace pathpack {

// ---------------------------------------------------------------------------
// TPath

TPath reversed(const TPath& p) {
  TPath r{{p.nodes.rbegin(), p.nodes.rend()}, {p.edges.rbegin(), p.edges.rend()}};
  return r;
}

TPath canonical(const TPath& p) {
  if (p.nodes.empty()) return p;
  if (p.front() < p.back()) return p;
  TPath r = reversed(p);
  if (p.front() > p.back()) return r;
  return std::min(p, r);
}

TPath path_from_edges(const Multigraph& g, int start, std::span<const int> edges) {
  if (start < 0 || start >= g.node_count()) throw PreconditionError("path start out of range");
  TPath p;
  p.nodes.push_back(start);
  int at = start;
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("path edge out of range");
    const Edge& ed = g.edge(e);
    if (ed.u != at && ed.v != at) {
      throw PreconditionError("edge '" + ed.id + "' does not continue the walk at '" + g.name(at) + "'");
    }
    at = g.other_end(e, at);
    p.edges.push_back(e);
    p.nodes.push_back(at);
  }
  return p;
}

TPath path_from_nodes(const Multigraph& g, std::span<const int> nodes) {
  if (nodes.empty()) throw PreconditionError("empty node sequence");
  TPath p;
  p.nodes.assign(nodes.begin(), nodes.end());
  std::set<int> used;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    int pick = -1;
    for (int e : g.incident(nodes[i])) {
      if (g.other_end(e, nodes[i]) == nodes[i + 1] && !used.count(e)) {
        pick = e;
        break;
      }
    }
    if (pick < 0) {
      throw PreconditionError("no free edge between '" + g.name(nodes[i]) + "' and '" + g.name(nodes[i + 1]) + "'");
    }
    used.insert(pick);
    p.edges.push_back(pick);
  }
  return p;
}

TPath path_from_names(const Multigraph& g, const std::vector<NodeId>& names) {
  std::vector<int> nodes;
  for (const NodeId& n : names) {
    auto v = g.find_node(n);
    if (!v) throw PreconditionError("path names unknown node '" + n + "'");
    nodes.push_back(*v);
  }
  return path_from_nodes(g, nodes);
}

std::string to_string(const Multigraph& g, const TPath& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) os << (i ? "-" : "") << g.name(p.nodes[i]);
  return os.str();
}

bool is_valid_tpath(const Network& net, const TPath& p, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Multigraph& g = net.graph();
  if (p.edges.empty() || p.nodes.size() != p.edges.size() + 1) return fail("path is empty or malformed");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const int e = p.edges[i];
    if (e < 0 || e >= g.edge_count()) return fail("edge index out of range");
    const Edge& ed = g.edge(e);
    const int a = p.nodes[i];
    const int b = p.nodes[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return fail("edge '" + ed.id + "' breaks the walk");
  }
  std::vector<int> sorted = p.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail("path repeats an edge");
  if (!net.is_terminal(p.front()) || !net.is_terminal(p.back())) return fail("path end is not a terminal");
  if (p.front() == p.back()) return fail("path ends coincide");
  return true;
}

bool is_compound(const Network& net, const TPath& p) {
  for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
    const int v = p.nodes[i];
    if (net.is_terminal(v) && v != p.front() && v != p.back()) return true;
  }
  return false;
}

PairClass path_class(const Network& net, const TPath& p) { return net.pair_class(p.front(), p.back()); }

// ---------------------------------------------------------------------------
// Multiflow

void Multiflow::add(const TPath& p, const Rational& w) {
  if (w < 0) throw PreconditionError("negative path weight");
  if (w == 0) return;
  paths_[canonical(p)] += w;
}

void Multiflow::remove(const TPath& p, const Rational& w) {
  auto it = paths_.find(canonical(p));
  if (it == paths_.end() || it->second < w) throw PreconditionError("removing more weight than present");
  it->second -= w;
  if (it->second == 0) paths_.erase(it);
}

Rational Multiflow::weight(const TPath& p) const {
  auto it = paths_.find(canonical(p));
  return it == paths_.end() ? Rational(0) : it->second;
}

Rational Multiflow::size() const {
  Rational s = 0;
  for (const auto& [p, w] : paths_) s += w;
  return s;
}

bool Multiflow::is_integer() const {
  return std::all_of(paths_.begin(), paths_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::vector<Rational> Multiflow::edge_usage(const Multigraph& g) const {
  std::vector<Rational> use(static_cast<std::size_t>(g.edge_count()), Rational(0));
  for (const auto& [p, w] : paths_) {
    for (int e : p.edges) use[static_cast<std::size_t>(e)] += w;
  }
  return use;
}

bool Multiflow::respects_capacity(const Multigraph& g) const {
  for (const Rational& u : edge_usage(g)) {
    if (u > 1) return false;
  }
  return true;
}

void check_multiflow(const Network& net, const Multiflow& f) {
  for (const auto& [p, w] : f.paths()) {
    std::string why;
    if (!is_valid_tpath(net, p, &why)) {
      throw PreconditionError("invalid path " + to_string(net.graph(), p) + ": " + why);
    }
    if (w <= 0 || w > 1) throw PreconditionError("path weight outside (0,1]");
  }
  if (!f.respects_capacity(net.graph())) throw PreconditionError("multiflow exceeds an edge capacity");
}

FlowCounts count_classes(const Network& net, const Multiflow& f) {
  FlowCounts c;
  for (const auto& [p, w] : f.paths()) {
    switch (path_class(net, p)) {
      case PairClass::Strong: c.strong += w; break;
      case PairClass::Weak: c.weak += w; break;
      case PairClass::Equivalent: c.equivalent += w; break;
    }
    c.total += w;
  }
  return c;
}

Rational theta(const Network& net, const Multiflow& f) { return count_classes(net, f).theta(); }

std::vector<char> terminal_mask(const Network& net, std::span<const int> subset) {
  std::vector<char> in(static_cast<std::size_t>(net.graph().node_count()), 0);
  for (int v : subset) {
    if (v < 0 || v >= net.graph().node_count() || !net.is_terminal(v)) {
      throw PreconditionError("terminal subset contains a non-terminal");
    }
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

Rational count_between(const Network& net, const Multiflow& f, std::span<const int> a,
                       std::span<const int> b) {
  auto in_a = terminal_mask(net, a);
  auto in_b = terminal_mask(net, b);
  Rational total = 0;
  for (const auto& [p, w] : f.paths()) {
    auto s = static_cast<std::size_t>(p.front());
    auto t = static_cast<std::size_t>(p.back());
    if ((in_a[s] && in_b[t]) || (in_b[s] && in_a[t])) total += w;
  }
  return total;
}

Rational count_within(const Network& net, const Multiflow& f, std::span<const int> a) {
  auto in_a = terminal_mask(net, a);
  Rational total = 0;
  for (const auto& [p, w] : f.paths()) {
    if (in_a[static_cast<std::size_t>(p.front())] && in_a[static_cast<std::size_t>(p.back())]) total += w;
  }
  return total;
}

Multiflow hat(const Network& net, const Multiflow& f) {
  Multiflow out;
  for (const auto& [p, w] : f.paths()) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < p.nodes.size(); ++i) {
      if (!net.is_terminal(p.nodes[i]) && i + 1 != p.nodes.size()) continue;
      TPath piece{{p.nodes.begin() + static_cast<long>(start), p.nodes.begin() + static_cast<long>(i) + 1},
                  {p.edges.begin() + static_cast<long>(start), p.edges.begin() + static_cast<long>(i)}};
      if (piece.front() != piece.back()) out.add(piece, w);
      start = i;
    }
  }
  return out;
}

bool locks(const Network& net, const Multiflow& f, std::span<const int> a) {
  auto in_a = terminal_mask(net, a);
  std::vector<int> rest;
  for (int t : net.terminals()) {
    if (!in_a[static_cast<std::size_t>(t)]) rest.push_back(t);
  }
  if (a.empty() || rest.empty()) throw PreconditionError("locks: subset must be proper and non-empty");
  return count_between(net, hat(net, f), a, rest) == lambda(net, a);
}

// ---------------------------------------------------------------------------
// Augmenting sequences

namespace {

enum class Side { Inside, Outside, Across };

Side side_of(const std::vector<char>& in_a, const TPath& p) {
  const bool s = in_a[static_cast<std::size_t>(p.front())];
  const bool t = in_a[static_cast<std::size_t>(p.back())];
  if (s && t) return Side::Inside;
  if (!s && !t) return Side::Outside;
  return Side::Across;
}

}  // namespace

std::optional<AugmentingSequence> find_augmenting_sequence(const Network& net, const Multiflow& f,
                                                           std::span<const int> a) {
  const Multigraph& g = net.graph();
  auto in_a = terminal_mask(net, a);
  if (a.empty() || static_cast<int>(a.size()) >= net.terminal_count()) {
    throw PreconditionError("augmenting sequence: subset must be proper and non-empty");
  }
  check_multiflow(net, f);
  if (!f.is_integer()) throw PreconditionError("augmenting sequence requires an integer multiflow");
  {
    auto use = f.edge_usage(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (use[static_cast<std::size_t>(e)] == 0) {
        throw UnusedEdgeError("edge '" + g.edge(e).id + "' is not traversed by the multiflow");
      }
    }
  }
  {
    long long sum = 0;
    for (int t : net.terminals()) sum += lambda(net, t);
    if (f.size() != make_rational(sum, 2)) {
      throw NotMaximumError("multiflow has size " + to_string(f.size()) + ", maximum is " +
                            to_string(make_rational(sum, 2)));
    }
  }

  // A maximum multiflow has no compound paths, so hat() only re-canonicalizes.
  const Multiflow flat = hat(net, f);
  std::vector<TPath> paths;
  std::vector<Side> sides;
  std::vector<int> a_end;  // for Across paths: position of the A-end
  for (const auto& [p, w] : flat.paths()) {
    paths.push_back(p);
    sides.push_back(side_of(in_a, p));
    a_end.push_back(in_a[static_cast<std::size_t>(p.front())] ? 0 : static_cast<int>(p.nodes.size()) - 1);
  }
  // occurrences[v] = (path, position) pairs at interior positions
  std::vector<std::vector<std::pair<int, int>>> occ(static_cast<std::size_t>(g.node_count()));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t k = 1; k + 1 < paths[i].nodes.size(); ++k) {
      occ[static_cast<std::size_t>(paths[i].nodes[k])].emplace_back(static_cast<int>(i), static_cast<int>(k));
    }
  }

  struct State {
    int path;
    int pos;
    int parent;  // index into states, -1 for starts
  };
  std::vector<State> states;
  std::set<std::pair<int, int>> seen;
  std::deque<int> queue;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (sides[i] != Side::Inside) continue;
    for (std::size_t k = 1; k + 1 < paths[i].nodes.size(); ++k) {
      if (seen.insert({static_cast<int>(i), static_cast<int>(k)}).second) {
        states.push_back({static_cast<int>(i), static_cast<int>(k), -1});
        queue.push_back(static_cast<int>(states.size()) - 1);
      }
    }
  }

  auto build = [&](int last, int final_path) {
    std::vector<int> chain;
    for (int s = last; s >= 0; s = states[static_cast<std::size_t>(s)].parent) chain.push_back(s);
    std::reverse(chain.begin(), chain.end());
    AugmentingSequence seq;
    for (int s : chain) {
      const State& st = states[static_cast<std::size_t>(s)];
      seq.paths.push_back(paths[static_cast<std::size_t>(st.path)]);
      seq.positions.push_back(st.pos);
      seq.pivots.push_back(paths[static_cast<std::size_t>(st.path)].nodes[static_cast<std::size_t>(st.pos)]);
    }
    seq.paths.push_back(paths[static_cast<std::size_t>(final_path)]);
    return seq;
  };

  while (!queue.empty()) {
    const int si = queue.front();
    queue.pop_front();
    const State st = states[static_cast<std::size_t>(si)];
    const int v = paths[static_cast<std::size_t>(st.path)].nodes[static_cast<std::size_t>(st.pos)];
    for (const auto& [q, j] : occ[static_cast<std::size_t>(v)]) {
      if (q == st.path) continue;
      const Side sq = sides[static_cast<std::size_t>(q)];
      if (sq == Side::Outside) return build(si, q);
      if (sq != Side::Across) continue;
      const int end = a_end[static_cast<std::size_t>(q)];
      const int step = end < j ? -1 : 1;
      for (int k = j + step; k != end; k += step) {
        if (seen.insert({q, k}).second) {
          states.push_back({q, k, si});
          queue.push_back(static_cast<int>(states.size()) - 1);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_augmenting_sequence(const Network& net, const AugmentingSequence& s, std::span<const int> a) {
  auto in_a = terminal_mask(net, a);
  const std::size_t n = s.pivots.size();
  if (s.paths.size() != n + 1 || s.positions.size() != n || n == 0) return false;
  if (side_of(in_a, s.paths.front()) != Side::Inside) return false;
  if (side_of(in_a, s.paths.back()) != Side::Outside) return false;
  for (std::size_t i = 1; i < n; ++i) {
    if (side_of(in_a, s.paths[i]) != Side::Across) return false;
  }
  int prev_pos = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const TPath& p = s.paths[i];
    const int pos = s.positions[i];
    if (pos <= 0 || pos + 1 >= static_cast<int>(p.nodes.size())) return false;
    if (p.nodes[static_cast<std::size_t>(pos)] != s.pivots[i] || net.is_terminal(s.pivots[i])) return false;
    const TPath& next = s.paths[i + 1];
    if (std::find(next.nodes.begin() + 1, next.nodes.end() - 1, s.pivots[i]) == next.nodes.end() - 1) return false;
    if (i > 0) {
      // pos must lie strictly between the entry point and the A-end.
      const int end = in_a[static_cast<std::size_t>(p.front())] ? 0 : static_cast<int>(p.nodes.size()) - 1;
      const bool between = end < prev_pos ? (end < pos && pos < prev_pos) : (prev_pos < pos && pos < end);
      if (!between) return false;
    }
    // entry position of x_i on the next path
    prev_pos = static_cast<int>(std::find(next.nodes.begin() + 1, next.nodes.end() - 1, s.pivots[i]) -
                                next.nodes.begin());
  }
  return true;
}

// ---------------------------------------------------------------------------
// Switching

namespace {

int interior_position(const TPath& p, int x) {
  for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
    if (p.nodes[i] == x) return static_cast<int>(i);
  }
  return -1;
}

TPath prefix(const TPath& p, int pos) {
  return {{p.nodes.begin(), p.nodes.begin() + pos + 1}, {p.edges.begin(), p.edges.begin() + pos}};
}

TPath suffix(const TPath& p, int pos) {
  return {{p.nodes.begin() + pos, p.nodes.end()}, {p.edges.begin() + pos, p.edges.end()}};
}

// a ends where b starts
TPath join(const TPath& a, const TPath& b) {
  TPath out = a;
  out.nodes.insert(out.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

bool repeats_edge(const TPath& p) {
  std::vector<int> s = p.edges;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

}  // namespace

SwitchResult switch_paths(const Network& net, const Multiflow& f, const TPath& p, const TPath& q,
                          int x, int variant) {
  if (variant != 1 && variant != 2) throw PreconditionError("switch variant must be 1 or 2");
  if (canonical(p) == canonical(q)) throw PreconditionError("cannot switch a path with itself");
  const Rational wp = f.weight(p);
  const Rational wq = f.weight(q);
  if (wp == 0 || wq == 0) throw PreconditionError("switched paths must belong to the multiflow");
  if (wp != wq) throw PreconditionError("switch requires equal path weights");
  if (net.is_terminal(x)) throw PreconditionError("switch node must be an inner node");
  const int i = interior_position(p, x);
  const int j = interior_position(q, x);
  if (i < 0 || j < 0) throw PreconditionError("switch node is not interior to both paths");

  const TPath p1 = prefix(p, i), p2 = suffix(p, i);
  const TPath q1 = prefix(q, j), q2 = suffix(q, j);
  SwitchResult r;
  if (variant == 1) {
    r.first = join(p1, reversed(q1));
    r.second = join(reversed(p2), q2);
  } else {
    r.first = join(p1, q2);
    r.second = join(q1, p2);
  }
  if (repeats_edge(r.first) || repeats_edge(r.second)) {
    throw PreconditionError("switch would create a walk repeating an edge");
  }
  r.first_closed = r.first.front() == r.first.back();
  r.second_closed = r.second.front() == r.second.back();
  r.flow = f;
  r.flow.remove(p, wp);
  r.flow.remove(q, wq);
  if (!r.first_closed) r.flow.add(r.first, wp);
  if (!r.second_closed) r.flow.add(r.second, wp);
  return r;
}

// ---------------------------------------------------------------------------
// Splits

std::array<EdgePairing, 3> pairings_at(const Multigraph& g, int x) {
  const auto& inc = g.incident(x);
  if (inc.size() != 4) throw PreconditionError("split requires a node of degree 4");
  const int a = inc[0], b = inc[1], c = inc[2], d = inc[3];
  return {EdgePairing{{{a, b}, {c, d}}}, EdgePairing{{{a, c}, {b, d}}}, EdgePairing{{{a, d}, {b, c}}}};
}

namespace {

void check_pairing(const Multigraph& g, int x, const EdgePairing& pairing) {
  std::vector<int> got{pairing[0][0], pairing[0][1], pairing[1][0], pairing[1][1]};
  std::sort(got.begin(), got.end());
  if (got != g.incident(x)) throw PreconditionError("pairing must partition the edges at the node");
}

bool same_pair(const std::array<int, 2>& pr, int e, int f) {
  return (pr[0] == e && pr[1] == f) || (pr[0] == f && pr[1] == e);
}

}  // namespace

SplitResult split_node(const Network& net, int x, const EdgePairing& pairing) {
  const Multigraph& g = net.graph();
  if (x < 0 || x >= g.node_count()) throw PreconditionError("split node out of range");
  if (net.is_terminal(x)) throw PreconditionError("cannot split a terminal");
  if (g.degree(x) != 4) throw PreconditionError("split requires a node of degree 4");
  check_pairing(g, x, pairing);

  SplitResult s;
  s.removed = g.name(x);
  s.pairing = pairing;
  RawNetwork raw = net.to_raw();
  raw.nodes.erase(std::find(raw.nodes.begin(), raw.nodes.end(), g.name(x)));
  std::vector<RawEdge> kept;
  for (const RawEdge& e : raw.edges) {
    if (e.u == s.removed || e.v == s.removed) s.removed_edges.push_back(e);
    else kept.push_back(e);
  }
  for (std::size_t k = 0; k < 2; ++k) {
    const int e1 = pairing[k][0];
    const int e2 = pairing[k][1];
    const int a = g.other_end(e1, x);
    const int b = g.other_end(e2, x);
    if (a == b) continue;  // the join would be a loop; dropped
    s.new_edges[k] = g.edge(e1).id + "+" + g.edge(e2).id;
    kept.push_back({s.new_edges[k], g.name(a), g.name(b)});
  }
  raw.edges = std::move(kept);
  s.network = Network::from_raw(raw);
  return s;
}

SplitResult split_node(const Network& net, int x, int pairing_index) {
  if (pairing_index < 0 || pairing_index > 2) throw PreconditionError("pairing index must be 0, 1 or 2");
  if (x < 0 || x >= net.graph().node_count() || net.graph().degree(x) != 4) {
    throw PreconditionError("split requires a node of degree 4");
  }
  return split_node(net, x, pairings_at(net.graph(), x)[static_cast<std::size_t>(pairing_index)]);
}

Network restore_node(const SplitResult& s) {
  RawNetwork raw = s.network.to_raw();
  raw.nodes.push_back(s.removed);
  std::erase_if(raw.edges, [&](const RawEdge& e) { return e.id == s.new_edges[0] || e.id == s.new_edges[1]; });
  raw.edges.insert(raw.edges.end(), s.removed_edges.begin(), s.removed_edges.end());
  return Network::from_raw(raw);
}

bool split_preserves(const Network& net, const Multiflow& f, int x, const EdgePairing& pairing) {
  check_pairing(net.graph(), x, pairing);
  for (const auto& [p, w] : f.paths()) {
    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
      if (p.nodes[i] != x) continue;
      const int in = p.edges[i - 1];
      const int out = p.edges[i];
      if (!same_pair(pairing[0], in, out) && !same_pair(pairing[1], in, out)) return false;
    }
  }
  return true;
}

Multiflow reembed(const Network& net, const Multiflow& f, const SplitResult& s) {
  const Multigraph& g = net.graph();
  const int x = g.node_index(s.removed);
  if (!split_preserves(net, f, x, s.pairing)) throw PreconditionError("split does not preserve the multiflow");
  const Multigraph& h = s.network.graph();
  Multiflow out;
  for (const auto& [p, w] : f.paths()) {
    std::vector<int> nodes;
    std::vector<int> edges;
    nodes.push_back(h.node_index(g.name(p.nodes[0])));
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const int nxt = p.nodes[i + 1];
      if (nxt == x) {
        const int in = p.edges[i];
        const int outg = p.edges[i + 1];
        const std::size_t k = same_pair(s.pairing[0], in, outg) ? 0 : 1;
        if (s.new_edges[k].empty()) throw PreconditionError("path runs through a dropped loop");
        edges.push_back(*h.find_edge(s.new_edges[k]));
        nodes.push_back(h.node_index(g.name(p.nodes[i + 2])));
        ++i;
        continue;
      }
      edges.push_back(*h.find_edge(g.edge(p.edges[i]).id));
      nodes.push_back(h.node_index(g.name(nxt)));
    }
    out.add(TPath{nodes, edges}, w);
  }
  return out;
}

Multiflow restore_flow(const SplitResult& s, const Network& original, const Multiflow& gflow) {
  const Multigraph& g = original.graph();
  const Multigraph& h = s.network.graph();
  const int x = g.node_index(s.removed);
  Multiflow out;
  for (const auto& [p, w] : gflow.paths()) {
    TPath q;
    q.nodes.push_back(g.node_index(h.name(p.nodes[0])));
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const EdgeId& id = h.edge(p.edges[i]).id;
      const int to = g.node_index(h.name(p.nodes[i + 1]));
      const int from = q.nodes.back();
      int k = id == s.new_edges[0] ? 0 : (id == s.new_edges[1] ? 1 : -1);
      if (k < 0) {
        q.edges.push_back(*g.find_edge(id));
        q.nodes.push_back(to);
        continue;
      }
      const auto& pr = s.pairing[static_cast<std::size_t>(k)];
      const int first = g.other_end(pr[0], x) == from ? pr[0] : pr[1];
      const int second = first == pr[0] ? pr[1] : pr[0];
      q.edges.push_back(first);
      q.nodes.push_back(x);
      q.edges.push_back(second);
      q.nodes.push_back(to);
    }
    out.add(q, w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3/2-operation

Multiflow three_halves(const Network& net, const Multiflow& f, const TPath& p0, const TPath& p1,
                       int x0, const Rational& eps) {
  const Rational alpha = f.weight(p0);
  const Rational beta = f.weight(p1);
  if (alpha == 0 || beta == 0) throw PreconditionError("3/2-operation paths must belong to the multiflow");
  if (canonical(p0) == canonical(p1)) throw PreconditionError("3/2-operation needs two distinct paths");
  if (eps <= 0 || eps > alpha || eps > 2 * beta) throw PreconditionError("epsilon out of range (0, min(a, 2b)]");
  if (net.is_terminal(x0)) throw PreconditionError("3/2-operation node must be inner");
  const int i = interior_position(p0, x0);
  const int j = interior_position(p1, x0);
  if (i < 0 || j < 0) throw PreconditionError("3/2-operation node not shared by both paths");

  const TPath t_to_x = reversed(suffix(p0, i));  // t' ... x0
  const TPath tr = join(t_to_x, suffix(p1, j));
  const TPath tq = join(t_to_x, reversed(prefix(p1, j)));
  if (repeats_edge(tr) || repeats_edge(tq)) throw PreconditionError("3/2-operation would repeat an edge");
  if (tr.front() == tr.back() || tq.front() == tq.back()) {
    throw PreconditionError("3/2-operation would create a closed walk");
  }
  Multiflow out = f;
  const Rational half = eps / 2;
  out.remove(p0, eps);
  out.remove(p1, half);
  out.add(tr, half);
  out.add(tq, half);
  return out;
}

// ---------------------------------------------------------------------------
// Tridents

namespace {

std::vector<int> covering_members(const Network& net, int a, int b) {
  std::vector<int> out;
  const auto& ms = net.clutter().members;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Member& m = ms[i];
    if (std::binary_search(m.begin(), m.end(), a) && std::binary_search(m.begin(), m.end(), b)) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

bool ordinary(const Network& net, const TPath& p, const TPath& q) {
  const int a = p.front(), b = p.back(), c = q.front(), d = q.back();
  std::set<int> ends{a, b, c, d};
  if (ends.size() != 4) return false;
  for (int mi : covering_members(net, a, b)) {
    const Member& m = net.clutter().members[static_cast<std::size_t>(mi)];
    if (!std::binary_search(m.begin(), m.end(), c) && !std::binary_search(m.begin(), m.end(), d)) return true;
  }
  return false;
}

bool simple_trident(const Network& net, const TPath& p, const TPath& q) {
  std::set<int> ends{p.front(), p.back(), q.front(), q.back()};
  if (ends.size() != 3) return false;
  auto ma = covering_members(net, p.front(), p.back());
  auto mb = covering_members(net, q.front(), q.back());
  for (int x : ma) {
    for (int y : mb) {
      if (x != y) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Trident> detect_tridents(const Network& net, const Multiflow& f) {
  std::vector<TPath> paths;
  for (const auto& [p, w] : f.paths()) paths.push_back(p);
  std::vector<Trident> out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const TPath& p = paths[i];
      const TPath& q = paths[j];
      std::set<int> shared;
      for (std::size_t k = 1; k + 1 < p.nodes.size(); ++k) {
        const int v = p.nodes[k];
        if (!net.is_terminal(v) && interior_position(q, v) >= 0) shared.insert(v);
      }
      if (shared.empty()) continue;
      std::optional<Trident> t;
      if (ordinary(net, p, q)) t = Trident{p, q, -1, TridentKind::Ordinary};
      else if (ordinary(net, q, p)) t = Trident{q, p, -1, TridentKind::Ordinary};
      else if (simple_trident(net, p, q)) t = Trident{p, q, -1, TridentKind::Simple};
      if (!t) continue;
      for (int v : shared) {
        t->pivot = v;
        out.push_back(*t);
      }
    }
  }
  return out;
}

}  // namespace pathpack
