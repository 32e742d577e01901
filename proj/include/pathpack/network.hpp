#pragma once

// Multigraphs, terminal networks (G, T, K), pair classification and
// terminal expansions.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathpack {

using NodeId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  int u = -1;
  int v = -1;
};

// Unvalidated description of a network, as read from a file or built by hand.
struct RawEdge {
  EdgeId id;
  NodeId u;
  NodeId v;
};

/// Default id of the i-th edge among m ("e07"); zero-padded so that id
/// order equals position order.
std::string default_edge_id(std::size_t i, std::size_t m);

struct RawNetwork {
  std::vector<NodeId> nodes;
  std::vector<NodeId> terminals;
  std::vector<RawEdge> edges;
  std::vector<std::vector<NodeId>> clutter;
};

/// Undirected multigraph with opaque string ids. Nodes are kept sorted
/// lexicographically and edges sorted by id; indices follow that order.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws StructuralError on duplicate ids, dangling endpoints or loops.
  Multigraph(std::vector<NodeId> nodes, std::vector<RawEdge> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const NodeId& name(int v) const { return nodes_[static_cast<std::size_t>(v)]; }

  std::optional<int> find_node(std::string_view id) const;
  std::optional<int> find_edge(std::string_view id) const;
  int node_index(std::string_view id) const;  // throws if absent

  const std::vector<int>& incident(int v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  int other_end(int e, int v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

enum class PairClass : std::uint8_t { Strong, Weak, Equivalent };

const char* to_string(PairClass c);

// A clutter member is a sorted list of terminal node indices.
using Member = std::vector<int>;

struct Clutter {
  std::vector<Member> members;  // sorted, deduplicated
};

/// A network (G, T, K). Structural integrity is enforced on construction;
/// clutter/Eulerian/K-condition properties are reported by validate().
class Network {
 public:
  Network() = default;
  Network(Multigraph graph, std::vector<int> terminals, Clutter clutter);

  static Network from_raw(const RawNetwork& raw);
  RawNetwork to_raw() const;

  const Multigraph& graph() const { return graph_; }
  const std::vector<int>& terminals() const { return terminals_; }
  const Clutter& clutter() const { return clutter_; }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }

  bool is_terminal(int v) const { return terminal_pos_[static_cast<std::size_t>(v)] >= 0; }
  /// Position of node v in terminals(), or -1.
  int terminal_position(int v) const { return terminal_pos_[static_cast<std::size_t>(v)]; }

  /// Number of clutter members covering the terminal pair {u, v}.
  int cover_count(int u, int v) const;
  PairClass pair_class(int u, int v) const;

  Network with_clutter(Clutter clutter) const;

  /// Builds a clutter from terminal names. Throws StructuralError.
  Clutter make_clutter(const std::vector<std::vector<NodeId>>& members) const;
  std::vector<NodeId> member_names(const Member& m) const;

 private:
  Multigraph graph_;
  std::vector<int> terminals_;
  std::vector<int> terminal_pos_;
  Clutter clutter_;
  std::vector<int> cover_;  // terminal_count^2 cover counts
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> structural_errors;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  bool require_flat = false;

  const CheckResult* find(std::string_view name) const;
  bool passed(std::string_view name) const;
  /// Structure sound, clutter/Eulerian/K-condition hold, and flat if required.
  bool ok() const;
};

ValidationReport validate(const Network& net, bool require_flat = false);
/// Also reports structural problems of unvalidated input.
ValidationReport validate(const RawNetwork& raw, bool require_flat = false);

bool is_clutter(const Clutter& k);
bool is_eulerian(const Network& net);
bool satisfies_k_condition(const Clutter& k);
bool is_simple(const Clutter& k);
bool is_flat(const Clutter& k);

/// Throws PreconditionError if either node is not a terminal or u == v.
PairClass classify_pair(const Network& net, int u, int v);
PairClass classify_pair(const Network& net, std::string_view u, std::string_view v);

/// Disjoint node blocks, one per terminal. owner[v] is the terminal position
/// whose block holds v, or -1.
class Expansion {
 public:
  Expansion() = default;
  static Expansion trivial(const Network& net);
  /// Throws StructuralError on overlap, missing terminal, foreign terminal.
  static Expansion from_owner(const Network& net, std::vector<int> owner);
  static Expansion from_blocks(const Network& net,
                               const std::map<NodeId, std::vector<NodeId>>& blocks);

  const std::vector<int>& owner() const { return owner_; }
  std::vector<int> block(int terminal_pos) const;
  std::vector<std::vector<int>> blocks() const;
  std::map<NodeId, std::vector<NodeId>> named_blocks(const Network& net) const;
  int block_count() const { return block_count_; }
  bool is_trivial() const;

  /// Lexicographic key over inner-node assignments (none sorts first).
  std::vector<int> assignment_key(const Network& net) const;

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  std::vector<int> owner_;
  int block_count_ = 0;
};

/// Non-strict blockwise containment: every block of x lies in a block of y.
bool expansion_precedes(const Expansion& x, const Expansion& y);
bool expansion_strictly_precedes(const Expansion& x, const Expansion& y);

/// Blocks not connected inside their own induced subgraph.
std::vector<std::string> expansion_warnings(const Network& net, const Expansion& x);

struct ExpandedNetwork {
  Network network;
  std::vector<int> node_map;  // original node -> expanded node
  std::vector<int> edge_map;  // original edge -> expanded edge, -1 if internal
};

/// Contracts each block to its terminal. Blocks keep the terminal's name,
/// edges keep their ids, the clutter is carried over member-wise.
ExpandedNetwork expand(const Network& net, const Expansion& x);

}  // namespace pathpack
