#include "maxtoll/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "maxtoll/error.hpp"

namespace maxtoll {

// ---------------------------------------------------------------------------
// Distance

const Rational& Distance::value() const {
  if (!finite_) throw Error(ErrorCode::InvalidArgument, "value() of an infinite distance");
  return value_;
}

Distance operator+(const Distance& a, const Distance& b) {
  if (!a.finite_ || !b.finite_) return Distance::infinite();
  return Distance(a.value_ + b.value_);
}

bool operator==(const Distance& a, const Distance& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
  if (!a.finite_ || !b.finite_) {
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.value_ <=> b.value_;
}

std::string Distance::to_string() const { return finite_ ? value_.to_string() : "inf"; }

// ---------------------------------------------------------------------------
// Network

std::optional<NodeIndex> Network::find_node(std::string_view name) const {
  auto it = node_lookup_.find(std::string(name));
  if (it == node_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArcIndex> Network::find_arc(std::string_view id) const {
  auto it = arc_lookup_.find(std::string(id));
  if (it == arc_lookup_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Network::node(std::string_view name) const {
  auto v = find_node(name);
  if (!v) throw Error(ErrorCode::UnknownNode, "'" + std::string(name) + "'");
  return *v;
}

ArcIndex Network::arc_index(std::string_view id) const {
  auto a = find_arc(id);
  if (!a) throw Error(ErrorCode::UnknownArc, "'" + std::string(id) + "'");
  return *a;
}

std::vector<std::string> Network::arc_ids(const PathSeq& path) const {
  std::vector<std::string> ids;
  ids.reserve(path.size());
  for (ArcIndex a : path) ids.push_back(arcs_.at(a).id);
  return ids;
}

PathSeq Network::path_from_ids(std::span<const std::string> ids) const {
  PathSeq path;
  path.reserve(ids.size());
  for (const auto& id : ids) path.push_back(arc_index(id));
  return path;
}

Network build_network(std::vector<Arc> arcs, std::string_view source, std::string_view sink,
                      std::optional<std::vector<std::string>> nodes) {
  if (arcs.empty()) throw Error(ErrorCode::EmptyNetwork, "arc list is empty");
  if (source == sink) throw Error(ErrorCode::InvalidArgument, "source and sink coincide");

  Network net;
  auto add_node = [&net](const std::string& name) {
    auto [it, inserted] = net.node_lookup_.emplace(name, net.nodes_.size());
    if (inserted) net.nodes_.push_back(name);
    return it->second;
  };

  if (nodes) {
    for (const auto& name : *nodes) add_node(name);
  }

  for (ArcIndex a = 0; a < arcs.size(); ++a) {
    const Arc& arc = arcs[a];
    if (!net.arc_lookup_.emplace(arc.id, a).second) {
      throw Error(ErrorCode::DuplicateArcId, "'" + arc.id + "'");
    }
    if (arc.cost.is_negative()) {
      throw Error(ErrorCode::NegativeCost, "arc '" + arc.id + "' has cost " + arc.cost.to_string());
    }
    for (const std::string* end : {&arc.from, &arc.to}) {
      if (nodes && !net.node_lookup_.contains(*end)) {
        throw Error(ErrorCode::DanglingEndpoint, "arc '" + arc.id + "' endpoint '" + *end + "' is undeclared");
      }
    }
    net.tails_.push_back(add_node(arc.from));
    net.heads_.push_back(add_node(arc.to));
    net.total_cost_ += arc.cost;
    if (arc.is_toll()) net.toll_arcs_.push_back(a);
  }

  for (std::string_view end : {source, sink}) {
    if (!net.node_lookup_.contains(std::string(end))) {
      throw Error(ErrorCode::DanglingEndpoint, "terminal '" + std::string(end) + "' is not a node");
    }
  }
  net.source_ = net.node_lookup_.at(std::string(source));
  net.sink_ = net.node_lookup_.at(std::string(sink));

  net.out_.assign(net.nodes_.size(), {});
  net.in_.assign(net.nodes_.size(), {});
  for (ArcIndex a = 0; a < arcs.size(); ++a) {
    net.out_[net.tails_[a]].push_back(a);
    net.in_[net.heads_[a]].push_back(a);
  }
  auto by_id = [&arcs](ArcIndex x, ArcIndex y) { return arcs[x].id < arcs[y].id; };
  for (auto& list : net.out_) std::sort(list.begin(), list.end(), by_id);
  for (auto& list : net.in_) std::sort(list.begin(), list.end(), by_id);

  net.arcs_ = std::move(arcs);

  if (distances_from(net, net.source_, TollRegime::free_only())[net.sink_].is_infinite()) {
    throw Error(ErrorCode::NoTollFreePath, "no toll-free path from '" + std::string(source) + "' to '" +
                                               std::string(sink) + "'");
  }
  return net;
}

// ---------------------------------------------------------------------------
// TollAssignment and TollRegime

TollAssignment TollAssignment::blocked(const Network& net) { return TollAssignment(net.arc_count()); }

TollAssignment TollAssignment::zeros(const Network& net) {
  TollAssignment tolls(net.arc_count());
  for (ArcIndex a : net.toll_arcs()) tolls.entries_[a] = Rational(0);
  return tolls;
}

const Rational& TollAssignment::toll(ArcIndex a) const {
  const auto& entry = entries_.at(a);
  if (!entry) throw Error(ErrorCode::InvalidArgument, "toll of a blocked arc");
  return *entry;
}

void TollAssignment::set(ArcIndex a, Rational value) {
  if (value.is_negative()) throw Error(ErrorCode::InvalidArgument, "negative toll " + value.to_string());
  entries_.at(a) = std::move(value);
}

void TollAssignment::block(ArcIndex a) { entries_.at(a).reset(); }

std::vector<Rational> TollAssignment::materialize(const Network& net) const {
  std::vector<Rational> values;
  values.reserve(net.toll_count());
  Rational blocked_value = net.total_fixed_cost() + Rational(1);
  for (ArcIndex a : net.toll_arcs()) values.push_back(is_blocked(a) ? blocked_value : toll(a));
  return values;
}

std::optional<Rational> TollRegime::arc_cost(const Network& net, ArcIndex a) const {
  const Arc& arc = net.arc(a);
  if (!arc.is_toll()) return arc.cost;
  switch (kind_) {
    case Kind::ZeroTolls: return arc.cost;
    case Kind::FreeOnly: return std::nullopt;
    case Kind::Priced:
      if (tolls_->is_blocked(a)) return std::nullopt;
      return arc.cost + tolls_->toll(a);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Shortest paths

namespace {

struct ArcCosts {
  std::vector<std::optional<Rational>> cost;

  ArcCosts(const Network& net, const TollRegime& regime) : cost(net.arc_count()) {
    for (ArcIndex a = 0; a < net.arc_count(); ++a) cost[a] = regime.arc_cost(net, a);
  }
};

std::vector<Distance> dijkstra(const Network& net, NodeIndex from, const ArcCosts& costs) {
  std::vector<Distance> dist(net.node_count(), Distance::infinite());
  std::vector<bool> done(net.node_count(), false);
  using Entry = std::pair<Rational, NodeIndex>;
  auto cmp = [](const Entry& x, const Entry& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second > y.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
  dist[from] = Rational(0);
  queue.emplace(Rational(0), from);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (ArcIndex a : net.out_arcs(u)) {
      const auto& w = costs.cost[a];
      if (!w) continue;
      NodeIndex v = net.head(a);
      if (done[v]) continue;
      Rational candidate = d + *w;
      if (dist[v].is_infinite() || candidate < dist[v].value()) {
        dist[v] = candidate;
        queue.emplace(std::move(candidate), v);
      }
    }
  }
  return dist;
}

bool is_tight(const Network& net, const ArcCosts& costs, const std::vector<Distance>& dist, ArcIndex a) {
  const auto& w = costs.cost[a];
  if (!w) return false;
  const Distance& du = dist[net.tail(a)];
  const Distance& dv = dist[net.head(a)];
  if (du.is_infinite() || dv.is_infinite()) return false;
  return du.value() + *w == dv.value();
}

// Nodes that reach `to` through tight arcs without entering `blocked`.
std::vector<bool> tight_reachers(const Network& net, const ArcCosts& costs, const std::vector<Distance>& dist,
                                 NodeIndex to, const std::vector<bool>& blocked) {
  std::vector<bool> reach(net.node_count(), false);
  if (blocked[to]) return reach;
  std::vector<NodeIndex> stack{to};
  reach[to] = true;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    for (ArcIndex a : net.in_arcs(v)) {
      NodeIndex u = net.tail(a);
      if (reach[u] || blocked[u] || !is_tight(net, costs, dist, a)) continue;
      reach[u] = true;
      stack.push_back(u);
    }
  }
  return reach;
}

}  // namespace

std::vector<Distance> distances_from(const Network& net, NodeIndex from, const TollRegime& regime) {
  if (from >= net.node_count()) throw Error(ErrorCode::UnknownNode, "index " + std::to_string(from));
  return dijkstra(net, from, ArcCosts(net, regime));
}

ShortestPath shortest_path(const Network& net, NodeIndex from, NodeIndex to, const TollRegime& regime) {
  if (from >= net.node_count() || to >= net.node_count()) {
    throw Error(ErrorCode::UnknownNode, "index out of range");
  }
  if (from == to) return {Distance(Rational(0)), PathSeq{}};

  ArcCosts costs(net, regime);
  auto dist = dijkstra(net, from, costs);
  if (dist[to].is_infinite()) return {Distance::infinite(), std::nullopt};

  // Greedy lexicographic walk over the tight subgraph. Before taking an arc
  // we make sure its head can still finish a simple tight path to `to`.
  std::vector<bool> visited(net.node_count(), false);
  visited[from] = true;
  PathSeq path;
  NodeIndex current = from;
  while (current != to) {
    bool advanced = false;
    auto can_finish = tight_reachers(net, costs, dist, to, visited);
    for (ArcIndex a : net.out_arcs(current)) {
      NodeIndex v = net.head(a);
      if (visited[v] || !can_finish[v] || !is_tight(net, costs, dist, a)) continue;
      path.push_back(a);
      visited[v] = true;
      current = v;
      advanced = true;
      break;
    }
    if (!advanced) throw Error(ErrorCode::InvalidArgument, "internal: tight path reconstruction failed");
  }
  return {dist[to], std::move(path)};
}

ShortestPath shortest_path(const Network& net, std::string_view from, std::string_view to,
                           const TollRegime& regime) {
  return shortest_path(net, net.node(from), net.node(to), regime);
}

// ---------------------------------------------------------------------------
// Batch toll-free distances

FreeDistanceTable::FreeDistanceTable(std::size_t node_count, std::vector<NodeIndex> sources,
                                     std::vector<std::vector<Distance>> rows)
    : sources_(std::move(sources)), row_of_(node_count, kNoRow), rows_(std::move(rows)) {
  for (std::size_t r = 0; r < sources_.size(); ++r) row_of_[sources_[r]] = r;
}

const Distance& FreeDistanceTable::at(NodeIndex u, NodeIndex v) const {
  if (!has_source(u)) throw Error(ErrorCode::UnknownNode, "node is not a source of this table");
  return rows_[row_of_[u]].at(v);
}

FreeDistanceTable multi_source_free_distances(const Network& net, std::span<const NodeIndex> sources) {
  ArcCosts costs(net, TollRegime::free_only());
  std::vector<NodeIndex> unique;
  std::vector<std::vector<Distance>> rows;
  std::vector<bool> seen(net.node_count(), false);
  for (NodeIndex u : sources) {
    if (u >= net.node_count()) throw Error(ErrorCode::UnknownNode, "index " + std::to_string(u));
    if (seen[u]) continue;
    seen[u] = true;
    unique.push_back(u);
    rows.push_back(dijkstra(net, u, costs));
  }
  return FreeDistanceTable(net.node_count(), std::move(unique), std::move(rows));
}

FreeDistanceTable multi_source_free_distances(const Network& net, std::span<const std::string> sources) {
  std::vector<NodeIndex> indices;
  indices.reserve(sources.size());
  for (const auto& name : sources) indices.push_back(net.node(name));
  return multi_source_free_distances(net, indices);
}

FreeDistanceTable all_pairs_free_distances(const Network& net) {
  std::vector<NodeIndex> all(net.node_count());
  for (NodeIndex v = 0; v < all.size(); ++v) all[v] = v;
  return multi_source_free_distances(net, all);
}

std::optional<Rational> path_length(const Network& net, const PathSeq& path, const TollRegime& regime) {
  Rational total;
  for (ArcIndex a : path) {
    auto w = regime.arc_cost(net, a);
    if (!w) return std::nullopt;
    total += *w;
  }
  return total;
}

bool is_simple_path(const Network& net, const PathSeq& path, NodeIndex from, NodeIndex to) {
  if (path.empty()) return from == to;
  std::vector<bool> seen(net.node_count(), false);
  NodeIndex current = from;
  seen[current] = true;
  for (ArcIndex a : path) {
    if (a >= net.arc_count() || net.tail(a) != current) return false;
    current = net.head(a);
    if (seen[current]) return false;
    seen[current] = true;
  }
  return current == to;
}

}  // namespace maxtoll
