#include "maxtoll/pathmodel.hpp"

#include <algorithm>

#include "maxtoll/error.hpp"

namespace maxtoll {

// ---------------------------------------------------------------------------
// ValidPath

std::vector<ArcIndex> ValidPath::toll_arcs() const {
  std::vector<ArcIndex> out;
  out.reserve(toll_positions_.size());
  for (std::size_t pos : toll_positions_) out.push_back(arcs_[pos]);
  return out;
}

std::size_t ValidPath::term_position(std::size_t k) const {
  if (k == 0) return 0;
  return toll_positions_.at(k - 1) + 1;
}

std::size_t ValidPath::init_position(std::size_t j) const {
  if (j == toll_positions_.size() + 1) return arcs_.size();
  return toll_positions_.at(j - 1);
}

PathSeq ValidPath::between(std::size_t k, std::size_t l) const {
  auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(term_position(k));
  auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(init_position(l));
  return PathSeq(first, last);
}

// Structural checks only; validity is decided against the subpath table.
ValidPath make_valid_path_unchecked(const Network& net, PathSeq path) {
  if (path.empty() || net.tail(path.front()) != net.source() || net.head(path.back()) != net.sink()) {
    throw Error(ErrorCode::NotSourceSink, "path does not run from source to sink");
  }
  if (!is_simple_path(net, path, net.source(), net.sink())) {
    throw Error(ErrorCode::NotSimple, "path is not a simple chain of arcs");
  }
  ValidPath vp;
  vp.term_nodes_.push_back(net.source());
  for (std::size_t pos = 0; pos < path.size(); ++pos) {
    ArcIndex a = path[pos];
    if (!net.arc(a).is_toll()) continue;
    vp.toll_positions_.push_back(pos);
    vp.init_nodes_.push_back(net.tail(a));
    vp.term_nodes_.push_back(net.head(a));
  }
  vp.init_nodes_.push_back(net.sink());
  if (vp.toll_positions_.empty()) throw Error(ErrorCode::NoTollArc, "path carries no toll arc");
  vp.arcs_ = std::move(path);
  return vp;
}

// ---------------------------------------------------------------------------
// SubpathTable

const Distance& SubpathTable::upper(std::size_t i, std::size_t j) const {
  if (i >= j || j > m_ + 1) throw Error(ErrorCode::InvalidArgument, "window out of range");
  return upper_[index(i, j)];
}

Rational SubpathTable::lower(std::size_t k, std::size_t l) const {
  if (k >= l || l > m_ + 1) throw Error(ErrorCode::InvalidArgument, "window out of range");
  return prefix_[init_pos_[l]] - prefix_[term_pos_[k]];
}

bool SubpathTable::zero_tolls_consistent() const {
  for (std::size_t i = 0; i <= m_; ++i) {
    for (std::size_t j = i + 1; j <= m_ + 1; ++j) {
      const Distance& u = upper_[index(i, j)];
      if (u.is_finite() && lower(i, j) > u.value()) return false;
    }
  }
  return true;
}

SubpathTable subpath_table(const Network& net, const ValidPath& vp, const FreeDistanceTable* free_distances) {
  SubpathTable table;
  const std::size_t m = vp.toll_count();
  table.m_ = m;
  table.upper_.assign((m + 2) * (m + 2), Distance::infinite());

  table.prefix_.reserve(vp.arcs().size() + 1);
  table.prefix_.emplace_back(0);
  for (ArcIndex a : vp.arcs()) table.prefix_.push_back(table.prefix_.back() + net.arc(a).cost);

  table.term_pos_.resize(m + 2, 0);
  table.init_pos_.resize(m + 2, 0);
  for (std::size_t k = 0; k <= m; ++k) table.term_pos_[k] = vp.term_position(k);
  for (std::size_t j = 1; j <= m + 1; ++j) table.init_pos_[j] = vp.init_position(j);

  for (std::size_t i = 0; i <= m; ++i) {
    NodeIndex from = vp.term_node(i);
    std::vector<Distance> row;
    if (free_distances == nullptr) row = distances_from(net, from, TollRegime::free_only());
    for (std::size_t j = i + 1; j <= m + 1; ++j) {
      NodeIndex to = vp.init_node(j);
      table.upper_[table.index(i, j)] = free_distances ? free_distances->at(from, to) : row[to];
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Decomposition

DecomposedPath decompose_with_table(const Network& net, const PathSeq& path,
                                    const FreeDistanceTable* free_distances) {
  ValidPath vp = make_valid_path_unchecked(net, path);
  SubpathTable table = subpath_table(net, vp, free_distances);
  if (!table.zero_tolls_consistent()) {
    throw Error(ErrorCode::NotValid, "path is not shortest in its own network under zero tolls");
  }
  return {std::move(vp), std::move(table)};
}

std::optional<DecomposedPath> try_decompose(const Network& net, const PathSeq& path,
                                            const FreeDistanceTable* free_distances) {
  bool has_toll = std::any_of(path.begin(), path.end(), [&net](ArcIndex a) { return net.arc(a).is_toll(); });
  if (!has_toll) return std::nullopt;
  ValidPath vp = make_valid_path_unchecked(net, path);
  SubpathTable table = subpath_table(net, vp, free_distances);
  if (!table.zero_tolls_consistent()) return std::nullopt;
  return DecomposedPath{std::move(vp), std::move(table)};
}

ValidPath decompose(const Network& net, const PathSeq& path) {
  return std::move(decompose_with_table(net, path).path);
}

// ---------------------------------------------------------------------------
// Consistency

std::vector<ConsistencyConstraint> consistency_constraints(const SubpathTable& table) {
  const std::size_t m = table.toll_count();
  std::vector<ConsistencyConstraint> out;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i + 2; j <= m + 1; ++j) {
      const Distance& u = table.upper(i, j);
      if (u.is_infinite()) continue;
      out.push_back({i, j, u.value() - table.lower(i, j)});
    }
  }
  return out;
}

bool is_consistent(const SubpathTable& table, std::span<const Rational> tolls) {
  const std::size_t m = table.toll_count();
  if (tolls.size() != m) throw Error(ErrorCode::InvalidArgument, "toll vector length differs from m");
  // toll_prefix[k] = t_1 + ... + t_k
  std::vector<Rational> toll_prefix(m + 1);
  for (std::size_t k = 1; k <= m; ++k) {
    if (tolls[k - 1].is_negative()) throw Error(ErrorCode::InvalidArgument, "negative toll");
    toll_prefix[k] = toll_prefix[k - 1] + tolls[k - 1];
  }
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m + 1; ++j) {
      const Distance& u = table.upper(i, j);
      if (u.is_infinite()) continue;
      Rational window_tolls = toll_prefix[j - 1] - toll_prefix[i];
      if (table.lower(i, j) + window_tolls > u.value()) return false;
    }
  }
  return true;
}

bool is_consistent(const SubpathTable& table, const ValidPath& vp, const TollAssignment& tolls) {
  auto on_path = tolls_on_path(vp, tolls);
  return is_consistent(table, on_path);
}

bool is_consistent_oracle(const Network& net, const ValidPath& vp, const TollAssignment& tolls) {
  TollAssignment restricted = assignment_on_path(net, vp, tolls_on_path(vp, tolls));
  TollRegime regime = TollRegime::priced(restricted);
  auto own = path_length(net, vp.arcs(), regime);
  auto best = shortest_path(net, net.source(), net.sink(), regime);
  return own && best.length.is_finite() && *own == best.length.value();
}

std::vector<Rational> tolls_on_path(const ValidPath& vp, const TollAssignment& tolls) {
  std::vector<Rational> out;
  out.reserve(vp.toll_count());
  for (std::size_t k = 1; k <= vp.toll_count(); ++k) {
    ArcIndex a = vp.toll_arc(k);
    if (tolls.is_blocked(a)) throw Error(ErrorCode::InvalidArgument, "on-path toll arc is blocked");
    out.push_back(tolls.toll(a));
  }
  return out;
}

TollAssignment assignment_on_path(const Network& net, const ValidPath& vp, std::span<const Rational> tolls) {
  if (tolls.size() != vp.toll_count()) throw Error(ErrorCode::InvalidArgument, "toll vector length differs from m");
  TollAssignment out = TollAssignment::blocked(net);
  for (std::size_t k = 1; k <= vp.toll_count(); ++k) out.set(vp.toll_arc(k), tolls[k - 1]);
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

Rational path_bound(const SubpathTable& table) {
  const std::size_t m = table.toll_count();
  return table.upper(0, m + 1).value() - table.lower(0, m + 1);
}

Bounds compute_bounds(const Network& net) {
  Bounds b;
  b.l0 = distances_from(net, net.source(), TollRegime::zero_tolls())[net.sink()].value();
  b.linf = distances_from(net, net.source(), TollRegime::free_only())[net.sink()].value();
  b.lp = b.linf - b.l0;
  return b;
}

Rational lp_bound(const Network& net) { return compute_bounds(net).lp; }

}  // namespace maxtoll
