#include "maxtoll/exact.hpp"

#include <numeric>

#include "maxtoll/error.hpp"
#include "maxtoll/tollalg.hpp"

namespace maxtoll {

bool for_each_simple_path(const Network& net, std::size_t cap, const std::function<bool(const PathSeq&)>& visit) {
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "path cap must be positive");
  std::vector<bool> on_stack(net.node_count(), false);
  PathSeq path;
  std::size_t emitted = 0;
  bool truncated = false;
  bool stopped = false;

  // Outgoing arcs are already sorted by id, so depth-first order is
  // lexicographic order of arc-id sequences.
  std::function<void(NodeIndex)> dfs = [&](NodeIndex u) {
    if (u == net.sink()) {
      if (emitted == cap) {
        truncated = true;
        stopped = true;
        return;
      }
      ++emitted;
      if (!visit(path)) stopped = true;
      return;
    }
    for (ArcIndex a : net.out_arcs(u)) {
      NodeIndex v = net.head(a);
      if (on_stack[v]) continue;
      on_stack[v] = true;
      path.push_back(a);
      dfs(v);
      path.pop_back();
      on_stack[v] = false;
      if (stopped) return;
    }
  };

  on_stack[net.source()] = true;
  dfs(net.source());
  return truncated;
}

PathEnumeration enumerate_simple_paths(const Network& net, std::size_t cap) {
  PathEnumeration out;
  out.truncated = for_each_simple_path(net, cap, [&out](const PathSeq& p) {
    out.paths.push_back(p);
    return true;
  });
  return out;
}

ExactResult exact_opt(const Network& net, std::size_t cap) {
  ExactResult result;
  result.best_tolls = TollAssignment::blocked(net);
  FreeDistanceTable free_distances = all_pairs_free_distances(net);
  bool found = false;

  result.truncated = for_each_simple_path(net, cap, [&](const PathSeq& path) {
    ++result.paths_enumerated;
    auto decomposed = try_decompose(net, path, &free_distances);
    if (!decomposed) return true;
    ++result.valid_paths;
    MaxRevResult priced = max_rev(decomposed->table);
    if (!found || priced.revenue > result.opt) {
      found = true;
      result.opt = priced.revenue;
      result.best_path = path;
      result.best_tolls = assignment_on_path(net, decomposed->path, priced.tolls);
    }
    return true;
  });
  return result;
}

Network scale_costs(const Network& net, const Rational& factor) {
  if (factor <= Rational(0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<Arc> arcs(net.arcs().begin(), net.arcs().end());
  for (Arc& arc : arcs) arc.cost *= factor;
  std::vector<std::string> nodes(net.nodes().begin(), net.nodes().end());
  return build_network(std::move(arcs), net.node_name(net.source()), net.node_name(net.sink()), std::move(nodes));
}

namespace {

Rational::Int lcm_of_denominators(const Network& net) {
  Rational::Int l = 1;
  for (const Arc& arc : net.arcs()) {
    Rational::Int d = arc.cost.den();
    Rational::Int a = l;
    Rational::Int b = d;
    while (b != 0) {
      Rational::Int t = a % b;
      a = b;
      b = t;
    }
    l = (l / a) * d;
  }
  return l;
}

}  // namespace

Rational brute_force_path_revenue(const Network& net, const ValidPath& vp) {
  const std::size_t m = vp.toll_count();
  if (m > kGridMaxTolls) throw Error(ErrorCode::GuardExceeded, "grid oracle admits at most 3 toll arcs");
  const Rational scale = Rational(lcm_of_denominators(net), 1);
  if (scale * net.total_fixed_cost() > Rational(kGridMaxTotalCost)) {
    throw Error(ErrorCode::GuardExceeded, "grid oracle admits total cost at most 20");
  }
  const Network scaled = scale == Rational(1) ? net : scale_costs(net, scale);
  const ValidPath path = decompose(scaled, vp.arcs());
  const std::int64_t top = scaled.total_fixed_cost().to_int64() + 1;

  std::vector<std::int64_t> grid(m, 0);
  std::int64_t best = 0;
  for (;;) {
    std::vector<Rational> tolls(grid.begin(), grid.end());
    std::int64_t sum = std::accumulate(grid.begin(), grid.end(), std::int64_t{0});
    if (sum > best && is_consistent_oracle(scaled, path, assignment_on_path(scaled, path, tolls))) best = sum;
    std::size_t k = 0;
    while (k < m && grid[k] == top) grid[k++] = 0;
    if (k == m) break;
    ++grid[k];
  }
  return Rational(best) / scale;
}

}  // namespace maxtoll
