#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "maxtoll/rational.hpp"

namespace maxtoll {

using NodeIndex = std::size_t;
using ArcIndex = std::size_t;

// Ordered arc indices of a (usually s-t) path.
using PathSeq = std::vector<ArcIndex>;

// A nonnegative cost or the distinguished infinite value.
class Distance {
 public:
  constexpr Distance() = default;
  Distance(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static Distance infinite() {
    Distance d;
    d.finite_ = false;
    return d;
  }

  bool is_finite() const noexcept { return finite_; }
  bool is_infinite() const noexcept { return !finite_; }
  // Requires is_finite().
  const Rational& value() const;

  friend Distance operator+(const Distance& a, const Distance& b);
  friend bool operator==(const Distance& a, const Distance& b);
  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);

  // "inf" or the rational's text form.
  std::string to_string() const;

 private:
  Rational value_;
  bool finite_ = true;
};

enum class ArcKind { Toll, Free };

struct Arc {
  std::string id;
  std::string from;
  std::string to;
  Rational cost;
  ArcKind kind = ArcKind::Free;

  bool is_toll() const noexcept { return kind == ArcKind::Toll; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable toll network: a directed multigraph whose arcs are split into
// toll and toll-free arcs, with a source s and a sink t. A toll-free s-t path
// is guaranteed to exist. Construct through build_network().
class Network {
 public:
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcIndex a) const { return arcs_.at(a); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  std::span<const std::string> nodes() const noexcept { return nodes_; }
  const std::string& node_name(NodeIndex v) const { return nodes_.at(v); }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  NodeIndex source() const noexcept { return source_; }
  NodeIndex sink() const noexcept { return sink_; }

  NodeIndex tail(ArcIndex a) const { return tails_[a]; }
  NodeIndex head(ArcIndex a) const { return heads_[a]; }

  // Outgoing arcs of v sorted by arc id (byte order).
  std::span<const ArcIndex> out_arcs(NodeIndex v) const { return out_[v]; }
  std::span<const ArcIndex> in_arcs(NodeIndex v) const { return in_[v]; }

  std::optional<NodeIndex> find_node(std::string_view name) const;
  std::optional<ArcIndex> find_arc(std::string_view id) const;
  // Throw Error(UnknownNode / UnknownArc).
  NodeIndex node(std::string_view name) const;
  ArcIndex arc_index(std::string_view id) const;

  // Toll arcs in declaration order.
  std::span<const ArcIndex> toll_arcs() const noexcept { return toll_arcs_; }
  std::size_t toll_count() const noexcept { return toll_arcs_.size(); }

  // C: the sum of all fixed costs. C + 1 acts as an arc-deleting toll.
  const Rational& total_fixed_cost() const noexcept { return total_cost_; }

  std::vector<std::string> arc_ids(const PathSeq& path) const;
  // Converts arc ids into a PathSeq; throws Error(UnknownArc).
  PathSeq path_from_ids(std::span<const std::string> ids) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.arcs_ == b.arcs_ && a.nodes_ == b.nodes_ && a.source_ == b.source_ && a.sink_ == b.sink_;
  }

 private:
  friend Network build_network(std::vector<Arc>, std::string_view, std::string_view,
                               std::optional<std::vector<std::string>>);

  std::vector<Arc> arcs_;
  std::vector<std::string> nodes_;
  std::unordered_map<std::string, NodeIndex> node_lookup_;
  std::unordered_map<std::string, ArcIndex> arc_lookup_;
  std::vector<NodeIndex> tails_;
  std::vector<NodeIndex> heads_;
  std::vector<std::vector<ArcIndex>> out_;
  std::vector<std::vector<ArcIndex>> in_;
  std::vector<ArcIndex> toll_arcs_;
  Rational total_cost_;
  NodeIndex source_ = 0;
  NodeIndex sink_ = 0;
};

// Validates and freezes a network. When `nodes` is given every arc endpoint
// must be declared there; otherwise the node set is the set of endpoints in
// order of first appearance.
//
// Errors: EmptyNetwork, DuplicateArcId, DanglingEndpoint, NegativeCost,
// InvalidArgument (s == t), NoTollFreePath.
Network build_network(std::vector<Arc> arcs, std::string_view source, std::string_view sink,
                      std::optional<std::vector<std::string>> nodes = std::nullopt);

// Per-toll-arc toll values, each either a nonnegative rational or BLOCKED.
// Blocked toll arcs behave as deleted; numerically they stand for C + 1.
class TollAssignment {
 public:
  TollAssignment() = default;

  // Every toll arc blocked.
  static TollAssignment blocked(const Network& net);
  // Every toll arc priced at zero.
  static TollAssignment zeros(const Network& net);

  bool is_blocked(ArcIndex a) const { return !entries_.at(a).has_value(); }
  // Requires !is_blocked(a).
  const Rational& toll(ArcIndex a) const;

  void set(ArcIndex a, Rational value);
  void block(ArcIndex a);

  std::size_t size() const noexcept { return entries_.size(); }

  // Toll values for net.toll_arcs(), with BLOCKED written as C + 1.
  std::vector<Rational> materialize(const Network& net) const;

  friend bool operator==(const TollAssignment&, const TollAssignment&) = default;

 private:
  explicit TollAssignment(std::size_t arc_count) : entries_(arc_count) {}

  // Indexed by arc; entries of toll-free arcs are never consulted.
  std::vector<std::optional<Rational>> entries_;
};

// How toll arcs are priced during a shortest-path query.
class TollRegime {
 public:
  enum class Kind { ZeroTolls, FreeOnly, Priced };

  static TollRegime zero_tolls() { return TollRegime(Kind::ZeroTolls, nullptr); }
  static TollRegime free_only() { return TollRegime(Kind::FreeOnly, nullptr); }
  // The assignment must outlive the regime.
  static TollRegime priced(const TollAssignment& tolls) { return TollRegime(Kind::Priced, &tolls); }

  Kind kind() const noexcept { return kind_; }

  // Cost of arc `a` under this regime, or nullopt when the arc is removed.
  std::optional<Rational> arc_cost(const Network& net, ArcIndex a) const;

 private:
  TollRegime(Kind kind, const TollAssignment* tolls) : kind_(kind), tolls_(tolls) {}

  Kind kind_;
  const TollAssignment* tolls_;
};

struct ShortestPath {
  Distance length;
  // Witness path; absent when the target is unreachable.
  std::optional<PathSeq> path;
};

// Exact shortest path between two nodes. Among equal-length paths the
// witness is the simple path with the lexicographically smallest arc-id
// sequence.
ShortestPath shortest_path(const Network& net, NodeIndex from, NodeIndex to, const TollRegime& regime);
ShortestPath shortest_path(const Network& net, std::string_view from, std::string_view to,
                           const TollRegime& regime);

// Single-source distances under a regime (no witnesses).
std::vector<Distance> distances_from(const Network& net, NodeIndex from, const TollRegime& regime);

// Toll-free distances from a batch of sources.
class FreeDistanceTable {
 public:
  FreeDistanceTable() = default;
  FreeDistanceTable(std::size_t node_count, std::vector<NodeIndex> sources,
                    std::vector<std::vector<Distance>> rows);

  bool has_source(NodeIndex u) const { return u < row_of_.size() && row_of_[u] != kNoRow; }
  // Requires has_source(u).
  const Distance& at(NodeIndex u, NodeIndex v) const;
  std::span<const NodeIndex> sources() const noexcept { return sources_; }

 private:
  static constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

  std::vector<NodeIndex> sources_;
  std::vector<std::size_t> row_of_;
  std::vector<std::vector<Distance>> rows_;
};

FreeDistanceTable multi_source_free_distances(const Network& net, std::span<const NodeIndex> sources);
FreeDistanceTable multi_source_free_distances(const Network& net, std::span<const std::string> sources);
// Every node as a source.
FreeDistanceTable all_pairs_free_distances(const Network& net);

// Sum of arc costs along a path under a regime; nullopt if the path uses a
// removed arc.
std::optional<Rational> path_length(const Network& net, const PathSeq& path, const TollRegime& regime);

// True if consecutive arcs chain, no node repeats, and the path runs from
// `from` to `to` (an empty path qualifies iff from == to).
bool is_simple_path(const Network& net, const PathSeq& path, NodeIndex from, NodeIndex to);

}  // namespace maxtoll
