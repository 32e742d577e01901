#pragma once

// T-paths, weighted multiflows and the path operations used by the
// locking / switching theory: hat decomposition, locking, augmenting
// sequences, switches, node splits, the 3/2-operation and tridents.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathpack/errors.hpp"
#include "pathpack/network.hpp"
#include "pathpack/rational.hpp"

namespace pathpack {

/// Edge-simple walk. nodes.size() == edges.size() + 1. Node repeats are
/// allowed; switching can create them.
struct TPath {
  std::vector<int> nodes;
  std::vector<int> edges;

  int front() const { return nodes.front(); }
  int back() const { return nodes.back(); }
  std::size_t length() const { return edges.size(); }

  friend auto operator<=>(const TPath&, const TPath&) = default;
  friend bool operator==(const TPath&, const TPath&) = default;
};

TPath reversed(const TPath& p);
/// Orientation with the smaller end first (ties: smaller node sequence).
TPath canonical(const TPath& p);

/// Throws PreconditionError if the edges do not form a walk from start.
TPath path_from_edges(const Multigraph& g, int start, std::span<const int> edges);
/// Resolves a node sequence, choosing the lowest-id unused parallel edge
/// for each step. Throws PreconditionError if a step has no free edge.
TPath path_from_nodes(const Multigraph& g, std::span<const int> nodes);
TPath path_from_names(const Multigraph& g, const std::vector<NodeId>& names);

std::string to_string(const Multigraph& g, const TPath& p);

/// Walk structure, no repeated edge, distinct terminal ends.
bool is_valid_tpath(const Network& net, const TPath& p, std::string* why = nullptr);
bool is_compound(const Network& net, const TPath& p);
PairClass path_class(const Network& net, const TPath& p);

class Multiflow {
 public:
  using Map = std::map<TPath, Rational>;

  /// Adds weight to the canonical form of p. Non-positive weights rejected.
  void add(const TPath& p, const Rational& w);
  /// Removes weight; the entry disappears when it reaches zero.
  void remove(const TPath& p, const Rational& w);
  Rational weight(const TPath& p) const;
  bool contains(const TPath& p) const { return weight(p) > 0; }

  const Map& paths() const { return paths_; }
  std::size_t path_count() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }

  Rational size() const;
  bool is_integer() const;
  std::vector<Rational> edge_usage(const Multigraph& g) const;
  bool respects_capacity(const Multigraph& g) const;

  friend bool operator==(const Multiflow&, const Multiflow&) = default;

 private:
  Map paths_;
};

/// Throws PreconditionError naming the first violated condition.
void check_multiflow(const Network& net, const Multiflow& f);

struct FlowCounts {
  Rational strong;
  Rational weak;
  Rational equivalent;
  Rational total;
  Rational theta() const { return strong + weak / 2; }
};

FlowCounts count_classes(const Network& net, const Multiflow& f);
Rational theta(const Network& net, const Multiflow& f);

/// Membership mask over nodes built from a terminal subset.
std::vector<char> terminal_mask(const Network& net, std::span<const int> subset);

/// f[A,B]: weight of paths with one end in A and the other in B (A, B disjoint).
Rational count_between(const Network& net, const Multiflow& f, std::span<const int> a,
                       std::span<const int> b);
/// f[A]: weight of paths with both ends in A.
Rational count_within(const Network& net, const Multiflow& f, std::span<const int> a);

/// Breaks every path at its interior terminal visits. Pieces whose ends
/// coincide are closed walks and are discarded.
Multiflow hat(const Network& net, const Multiflow& f);

/// f[A, A^c] on hat(f) equals lambda(A).
bool locks(const Network& net, const Multiflow& f, std::span<const int> a);

struct AugmentingSequence {
  std::vector<TPath> paths;  // P_0 .. P_n, each oriented as stored in the flow
  std::vector<int> pivots;   // x_0 .. x_{n-1}
  std::vector<int> positions;  // position of x_i on P_i
};

class UnusedEdgeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotMaximumError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Breadth-first search for an augmenting sequence of an integer maximum
/// multiflow that traverses every edge. Returns nullopt iff f locks A.
/// Throws UnusedEdgeError (checked first) or NotMaximumError.
std::optional<AugmentingSequence> find_augmenting_sequence(const Network& net, const Multiflow& f,
                                                           std::span<const int> a);
/// Structural check of a sequence against the ordering constraint.
bool is_augmenting_sequence(const Network& net, const AugmentingSequence& s, std::span<const int> a);

struct SwitchResult {
  Multiflow flow;
  TPath first;   // P' x Q' (variant 1) or P' x Q'' (variant 2)
  TPath second;  // P'' x Q'' (variant 1) or Q' x P'' (variant 2)
  bool first_closed = false;
  bool second_closed = false;
};

/// Switches equal-weight paths p and q at the first interior occurrence of
/// x. Halves are taken in the orientation the caller passes. A recombined
/// walk with coinciding ends is closed and is dropped from the flow.
SwitchResult switch_paths(const Network& net, const Multiflow& f, const TPath& p, const TPath& q,
                          int x, int variant);

using EdgePairing = std::array<std::array<int, 2>, 2>;

/// The three perfect pairings of the four edges at a degree-4 node.
std::array<EdgePairing, 3> pairings_at(const Multigraph& g, int x);

struct SplitResult {
  Network network;
  NodeId removed;
  EdgePairing pairing;            // original edge indices
  std::vector<RawEdge> removed_edges;
  std::array<EdgeId, 2> new_edges;  // empty id when the join produced a loop
};

/// Removes inner degree-4 node x and joins its edges per the pairing.
SplitResult split_node(const Network& net, int x, const EdgePairing& pairing);
SplitResult split_node(const Network& net, int x, int pairing_index);
Network restore_node(const SplitResult& s);

/// True iff every passage of f through x uses a pair of the pairing.
bool split_preserves(const Network& net, const Multiflow& f, int x, const EdgePairing& pairing);
/// Moves f onto the split network. Throws PreconditionError if not preserved.
Multiflow reembed(const Network& net, const Multiflow& f, const SplitResult& s);
/// Inverse of reembed.
Multiflow restore_flow(const SplitResult& s, const Network& original, const Multiflow& g);

/// Replaces the (s',t')-path p0 (weight a) and the (q',r')-path p1 (weight b)
/// sharing x0 by (t',r'), (t',q'), (q',r'), (s',t') paths of weights e/2, e/2,
/// b - e/2, a - e. Requires 0 < e <= min(a, 2b).
Multiflow three_halves(const Network& net, const Multiflow& f, const TPath& p0, const TPath& p1,
                       int x0, const Rational& eps);

enum class TridentKind { Ordinary, Simple };

struct Trident {
  TPath p;  // the A-path
  TPath q;
  int pivot = -1;
  TridentKind kind = TridentKind::Ordinary;
};

std::vector<Trident> detect_tridents(const Network& net, const Multiflow& f);

}  // namespace pathpack
