#include "pathpack/network.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "pathpack/errors.hpp"
#include "pathpack/rational.hpp"

namespace pathpack {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r(s, 10);
      return r;
    }
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

std::string default_edge_id(std::size_t i, std::size_t m) {
  const std::size_t width = std::max<std::size_t>(2, std::to_string(m == 0 ? 0 : m - 1).size());
  std::string digits = std::to_string(i);
  return "e" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Strong: return "strong";
    case PairClass::Weak: return "weak";
    case PairClass::Equivalent: return "equivalent";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Multigraph(std::vector<NodeId> nodes, std::vector<RawEdge> edges) {
  std::sort(nodes.begin(), nodes.end());
  if (auto dup = std::adjacent_find(nodes.begin(), nodes.end()); dup != nodes.end()) {
    throw StructuralError("duplicate node id '" + *dup + "'");
  }
  nodes_ = std::move(nodes);
  std::sort(edges.begin(), edges.end(),
            [](const RawEdge& a, const RawEdge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) {
      throw StructuralError("duplicate edge id '" + edges[i].id + "'");
    }
  }
  incident_.assign(nodes_.size(), {});
  edges_.reserve(edges.size());
  for (const RawEdge& re : edges) {
    auto u = find_node(re.u);
    auto v = find_node(re.v);
    if (!u) throw StructuralError("edge '" + re.id + "' has dangling endpoint '" + re.u + "'");
    if (!v) throw StructuralError("edge '" + re.id + "' has dangling endpoint '" + re.v + "'");
    if (*u == *v) throw StructuralError("edge '" + re.id + "' is a self-loop at '" + re.u + "'");
    const int e = static_cast<int>(edges_.size());
    edges_.push_back(Edge{re.id, *u, *v});
    incident_[static_cast<std::size_t>(*u)].push_back(e);
    incident_[static_cast<std::size_t>(*v)].push_back(e);
  }
}

std::optional<int> Multigraph::find_node(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

std::optional<int> Multigraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view k) { return e.id < k; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

int Multigraph::node_index(std::string_view id) const {
  auto v = find_node(id);
  if (!v) throw StructuralError("unknown node '" + std::string(id) + "'");
  return *v;
}

// ---------------------------------------------------------------------------
// Network

Network::Network(Multigraph graph, std::vector<int> terminals, Clutter clutter)
    : graph_(std::move(graph)), terminals_(std::move(terminals)), clutter_(std::move(clutter)) {
  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
  terminal_pos_.assign(static_cast<std::size_t>(graph_.node_count()), -1);
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    const int t = terminals_[i];
    if (t < 0 || t >= graph_.node_count()) throw StructuralError("terminal index out of range");
    terminal_pos_[static_cast<std::size_t>(t)] = static_cast<int>(i);
  }
  for (Member& m : clutter_.members) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (int v : m) {
      if (v < 0 || v >= graph_.node_count() || terminal_pos_[static_cast<std::size_t>(v)] < 0) {
        throw StructuralError("clutter member contains a non-terminal");
      }
    }
  }
  std::sort(clutter_.members.begin(), clutter_.members.end());
  clutter_.members.erase(std::unique(clutter_.members.begin(), clutter_.members.end()),
                         clutter_.members.end());

  const std::size_t k = terminals_.size();
  cover_.assign(k * k, 0);
  for (const Member& m : clutter_.members) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        auto a = static_cast<std::size_t>(terminal_position(m[i]));
        auto b = static_cast<std::size_t>(terminal_position(m[j]));
        ++cover_[a * k + b];
        ++cover_[b * k + a];
      }
    }
  }
}

Network Network::from_raw(const RawNetwork& raw) {
  Multigraph g(raw.nodes, raw.edges);
  std::vector<int> terms;
  std::set<NodeId> seen;
  for (const NodeId& t : raw.terminals) {
    if (!seen.insert(t).second) throw StructuralError("duplicate terminal '" + t + "'");
    auto v = g.find_node(t);
    if (!v) throw StructuralError("terminal '" + t + "' is not a node");
    terms.push_back(*v);
  }
  Network shell(g, terms, {});
  Clutter k = shell.make_clutter(raw.clutter);
  return Network(std::move(g), std::move(terms), std::move(k));
}

RawNetwork Network::to_raw() const {
  RawNetwork raw;
  raw.nodes = graph_.nodes();
  for (int t : terminals_) raw.terminals.push_back(graph_.name(t));
  for (const Edge& e : graph_.edges()) raw.edges.push_back({e.id, graph_.name(e.u), graph_.name(e.v)});
  for (const Member& m : clutter_.members) raw.clutter.push_back(member_names(m));
  return raw;
}

int Network::cover_count(int u, int v) const {
  const int a = terminal_position(u);
  const int b = terminal_position(v);
  if (a < 0 || b < 0) return 0;
  return cover_[static_cast<std::size_t>(a) * terminals_.size() + static_cast<std::size_t>(b)];
}

PairClass Network::pair_class(int u, int v) const {
  const int c = cover_count(u, v);
  if (c == 0) return PairClass::Strong;
  if (c == 1) return PairClass::Weak;
  return PairClass::Equivalent;
}

Network Network::with_clutter(Clutter clutter) const {
  return Network(graph_, terminals_, std::move(clutter));
}

Clutter Network::make_clutter(const std::vector<std::vector<NodeId>>& members) const {
  Clutter k;
  for (const auto& names : members) {
    Member m;
    for (const NodeId& n : names) {
      auto v = graph_.find_node(n);
      if (!v || !is_terminal(*v)) {
        throw StructuralError("clutter member refers to non-terminal '" + n + "'");
      }
      m.push_back(*v);
    }
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end()) {
      throw StructuralError("clutter member repeats a terminal");
    }
    k.members.push_back(std::move(m));
  }
  std::sort(k.members.begin(), k.members.end());
  k.members.erase(std::unique(k.members.begin(), k.members.end()), k.members.end());
  return k;
}

std::vector<NodeId> Network::member_names(const Member& m) const {
  std::vector<NodeId> out;
  for (int v : m) out.push_back(graph_.name(v));
  return out;
}

// ---------------------------------------------------------------------------
// Property checks

namespace {

std::vector<int> intersect(const Member& a, const Member& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string describe(const Member& m) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << '}';
  return os.str();
}

}  // namespace

bool is_clutter(const Clutter& k) {
  for (std::size_t i = 0; i < k.members.size(); ++i) {
    for (std::size_t j = 0; j < k.members.size(); ++j) {
      if (i == j) continue;
      const Member& a = k.members[i];
      const Member& b = k.members[j];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
  }
  return true;
}

bool is_eulerian(const Network& net) {
  const Multigraph& g = net.graph();
  for (int v = 0; v < g.node_count(); ++v) {
    if (!net.is_terminal(v) && g.degree(v) % 2 != 0) return false;
  }
  return true;
}

bool satisfies_k_condition(const Clutter& k) {
  const auto& ms = k.members;
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      auto ab = intersect(ms[a], ms[b]);
      if (ab.empty()) continue;
      for (std::size_t c = b + 1; c < ms.size(); ++c) {
        auto ac = intersect(ms[a], ms[c]);
        auto bc = intersect(ms[b], ms[c]);
        if (ac.empty() || bc.empty()) continue;
        if (ab != ac || ab != bc) return false;
      }
    }
  }
  return true;
}

bool is_simple(const Clutter& k) {
  const auto& ms = k.members;
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      if (intersect(ms[a], ms[b]).size() > 1) return false;
    }
  }
  return true;
}

bool is_flat(const Clutter& k) {
  std::set<std::pair<int, int>> pairs;
  std::set<int> ends;
  for (const Member& m : k.members) {
    if (m.size() != 2) return false;
    pairs.emplace(m[0], m[1]);
    ends.insert(m[0]);
    ends.insert(m[1]);
  }
  auto has = [&](int a, int b) { return pairs.count({std::min(a, b), std::max(a, b)}) > 0; };
  for (const auto& [a, b] : pairs) {
    for (int c : ends) {
      if (c != a && c != b && has(a, c) && has(b, c)) return false;
    }
  }
  return true;
}

const CheckResult* ValidationReport::find(std::string_view name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool ValidationReport::passed(std::string_view name) const {
  const CheckResult* c = find(name);
  return c != nullptr && c->passed;
}

bool ValidationReport::ok() const {
  if (!structural_errors.empty()) return false;
  if (!passed("clutter") || !passed("eulerian") || !passed("k-condition")) return false;
  return !require_flat || passed("flat");
}

ValidationReport validate(const Network& net, bool require_flat) {
  ValidationReport rep;
  rep.require_flat = require_flat;
  const Clutter& k = net.clutter();
  const Multigraph& g = net.graph();

  {
    CheckResult c{"clutter", is_clutter(k), ""};
    if (!c.passed) c.detail = "two members are comparable under inclusion";
    rep.checks.push_back(c);
  }
  {
    CheckResult c{"eulerian", true, ""};
    for (int v = 0; v < g.node_count(); ++v) {
      if (!net.is_terminal(v) && g.degree(v) % 2 != 0) {
        c.passed = false;
        c.detail = "inner node '" + g.name(v) + "' has odd degree " + std::to_string(g.degree(v));
        break;
      }
    }
    rep.checks.push_back(c);
  }
  {
    CheckResult c{"k-condition", satisfies_k_condition(k), ""};
    if (!c.passed) c.detail = "three pairwise intersecting members with distinct intersections";
    rep.checks.push_back(c);
  }
  const bool flat = is_flat(k);
  {
    CheckResult c{"simple", is_simple(k), ""};
    if (!c.passed) c.detail = "two members share more than one terminal";
    if (flat) c.detail = "implied by flatness";
    rep.checks.push_back(c);
  }
  {
    CheckResult c{"flat", flat, ""};
    if (!flat) {
      bool sized = std::all_of(k.members.begin(), k.members.end(),
                               [](const Member& m) { return m.size() == 2; });
      c.detail = sized ? "members form a triangle" : "a member does not have exactly two terminals";
    }
    rep.checks.push_back(c);
  }
  for (const Member& m : k.members) {
    if (m.size() < 2) rep.warnings.push_back("clutter member " + describe(m) + " has fewer than two terminals");
  }
  return rep;
}

ValidationReport validate(const RawNetwork& raw, bool require_flat) {
  try {
    return validate(Network::from_raw(raw), require_flat);
  } catch (const StructuralError& e) {
    ValidationReport rep;
    rep.require_flat = require_flat;
    rep.structural_errors.emplace_back(e.what());
    return rep;
  }
}

PairClass classify_pair(const Network& net, int u, int v) {
  if (u == v) throw PreconditionError("pair endpoints must differ");
  if (!net.is_terminal(u) || !net.is_terminal(v)) {
    throw PreconditionError("classify_pair called on a non-terminal");
  }
  return net.pair_class(u, v);
}

PairClass classify_pair(const Network& net, std::string_view u, std::string_view v) {
  auto a = net.graph().find_node(u);
  auto b = net.graph().find_node(v);
  if (!a || !b) throw PreconditionError("classify_pair: unknown node");
  return classify_pair(net, *a, *b);
}

// ---------------------------------------------------------------------------
// Expansion

Expansion Expansion::trivial(const Network& net) {
  std::vector<int> owner(static_cast<std::size_t>(net.graph().node_count()), -1);
  for (int t : net.terminals()) owner[static_cast<std::size_t>(t)] = net.terminal_position(t);
  return from_owner(net, std::move(owner));
}

Expansion Expansion::from_owner(const Network& net, std::vector<int> owner) {
  const Multigraph& g = net.graph();
  if (static_cast<int>(owner.size()) != g.node_count()) {
    throw StructuralError("expansion owner vector has wrong size");
  }
  for (int v = 0; v < g.node_count(); ++v) {
    const int o = owner[static_cast<std::size_t>(v)];
    if (o < -1 || o >= net.terminal_count()) throw StructuralError("expansion block index out of range");
    if (net.is_terminal(v) && o != net.terminal_position(v)) {
      if (o == -1) throw StructuralError("block of terminal '" + g.name(v) + "' is missing its terminal");
      throw StructuralError("terminal '" + g.name(v) + "' placed in the block of another terminal");
    }
  }
  Expansion x;
  x.owner_ = std::move(owner);
  x.block_count_ = net.terminal_count();
  return x;
}

Expansion Expansion::from_blocks(const Network& net,
                                 const std::map<NodeId, std::vector<NodeId>>& blocks) {
  const Multigraph& g = net.graph();
  std::vector<int> owner(static_cast<std::size_t>(g.node_count()), -1);
  for (int t : net.terminals()) {
    if (!blocks.count(g.name(t))) owner[static_cast<std::size_t>(t)] = net.terminal_position(t);
  }
  for (const auto& [tname, nodes] : blocks) {
    auto t = g.find_node(tname);
    if (!t || !net.is_terminal(*t)) throw StructuralError("expansion key '" + tname + "' is not a terminal");
    const int pos = net.terminal_position(*t);
    bool has_own = false;
    for (const NodeId& n : nodes) {
      auto v = g.find_node(n);
      if (!v) throw StructuralError("expansion block of '" + tname + "' names unknown node '" + n + "'");
      if (*v == *t) {
        if (has_own) throw StructuralError("node '" + n + "' listed twice");
        has_own = true;
      }
      if (net.is_terminal(*v) && *v != *t) {
        throw StructuralError("block of '" + tname + "' contains foreign terminal '" + n + "'");
      }
      int& slot = owner[static_cast<std::size_t>(*v)];
      if (slot != -1 && slot != pos) throw StructuralError("node '" + n + "' lies in two blocks");
      if (slot == pos && *v != *t) throw StructuralError("node '" + n + "' listed twice");
      slot = pos;
    }
    if (!has_own) throw StructuralError("block of '" + tname + "' is missing its terminal");
  }
  return from_owner(net, std::move(owner));
}

std::vector<int> Expansion::block(int terminal_pos) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < owner_.size(); ++v) {
    if (owner_[v] == terminal_pos) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::vector<int>> Expansion::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
  for (std::size_t v = 0; v < owner_.size(); ++v) {
    if (owner_[v] >= 0) out[static_cast<std::size_t>(owner_[v])].push_back(static_cast<int>(v));
  }
  return out;
}

std::map<NodeId, std::vector<NodeId>> Expansion::named_blocks(const Network& net) const {
  std::map<NodeId, std::vector<NodeId>> out;
  auto bs = blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    auto& names = out[net.graph().name(net.terminals()[i])];
    for (int v : bs[i]) names.push_back(net.graph().name(v));
  }
  return out;
}

bool Expansion::is_trivial() const {
  return static_cast<int>(std::count_if(owner_.begin(), owner_.end(), [](int o) { return o >= 0; })) ==
         block_count_;
}

std::vector<int> Expansion::assignment_key(const Network& net) const {
  std::vector<int> key;
  for (std::size_t v = 0; v < owner_.size(); ++v) {
    if (!net.is_terminal(static_cast<int>(v))) key.push_back(owner_[v] + 1);
  }
  return key;
}

bool expansion_precedes(const Expansion& x, const Expansion& y) {
  const auto& a = x.owner();
  const auto& b = y.owner();
  if (a.size() != b.size()) return false;
  // Each block of x must sit inside a single block of y.
  std::vector<int> target(static_cast<std::size_t>(x.block_count()), -2);
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] < 0) continue;
    if (b[v] < 0) return false;
    int& t = target[static_cast<std::size_t>(a[v])];
    if (t == -2) t = b[v];
    else if (t != b[v]) return false;
  }
  return true;
}

bool expansion_strictly_precedes(const Expansion& x, const Expansion& y) {
  return expansion_precedes(x, y) && x.owner() != y.owner();
}

std::vector<std::string> expansion_warnings(const Network& net, const Expansion& x) {
  std::vector<std::string> out;
  const Multigraph& g = net.graph();
  auto bs = x.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const int t = net.terminals()[i];
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::queue<int> q;
    q.push(t);
    seen[static_cast<std::size_t>(t)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : g.incident(v)) {
        int w = g.other_end(e, v);
        if (!seen[static_cast<std::size_t>(w)] && x.owner()[static_cast<std::size_t>(w)] == static_cast<int>(i)) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    for (int v : bs[i]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        out.push_back("node '" + g.name(v) + "' is not reachable from '" + g.name(t) + "' inside its block");
      }
    }
  }
  return out;
}

ExpandedNetwork expand(const Network& net, const Expansion& x) {
  const Multigraph& g = net.graph();
  if (static_cast<int>(x.owner().size()) != g.node_count() || x.block_count() != net.terminal_count()) {
    throw StructuralError("expansion does not belong to this network");
  }
  // Block representative is the terminal itself, so names carry over.
  std::vector<int> rep(static_cast<std::size_t>(g.node_count()));
  std::vector<NodeId> nodes;
  for (int v = 0; v < g.node_count(); ++v) {
    const int o = x.owner()[static_cast<std::size_t>(v)];
    rep[static_cast<std::size_t>(v)] = o >= 0 ? net.terminals()[static_cast<std::size_t>(o)] : v;
    if (rep[static_cast<std::size_t>(v)] == v) nodes.push_back(g.name(v));
  }
  std::vector<RawEdge> edges;
  for (const Edge& e : g.edges()) {
    const int a = rep[static_cast<std::size_t>(e.u)];
    const int b = rep[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    edges.push_back({e.id, g.name(a), g.name(b)});
  }
  RawNetwork raw;
  raw.nodes = nodes;
  raw.edges = edges;
  for (int t : net.terminals()) raw.terminals.push_back(g.name(t));
  for (const Member& m : net.clutter().members) raw.clutter.push_back(net.member_names(m));

  ExpandedNetwork out{Network::from_raw(raw), {}, {}};
  const Multigraph& h = out.network.graph();
  out.node_map.resize(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) {
    out.node_map[static_cast<std::size_t>(v)] = h.node_index(g.name(rep[static_cast<std::size_t>(v)]));
  }
  out.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (auto f = h.find_edge(g.edge(e).id)) out.edge_map[static_cast<std::size_t>(e)] = *f;
  }
  return out;
}

}  // namespace pathpack
