#include "support.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace maxtoll::testing {

std::vector<std::vector<Distance>> floyd_warshall(const Network& net, const TollRegime& regime) {
  const std::size_t n = net.node_count();
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, Distance::infinite()));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = Rational(0);
  for (ArcIndex a = 0; a < net.arc_count(); ++a) {
    auto cost = regime.arc_cost(net, a);
    if (!cost) continue;
    Distance& cell = d[net.tail(a)][net.head(a)];
    if (Distance(*cost) < cell) cell = *cost;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k].is_infinite()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        Distance via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

std::vector<Rational> alpha_reference(std::size_t kmax) {
  std::vector<Rational> a(kmax + 1);
  if (kmax >= 1) a[1] = Rational(1);
  for (std::size_t k = 2; k <= kmax; ++k) {
    Rational best(0);
    for (std::size_t i = 1; i <= k / 2; ++i) {
      for (std::size_t j = i; i + j <= k; ++j) {
        Rational v = (Rational(1) + a[i] + a[j]) / Rational(2);
        if (v > best) best = v;
      }
    }
    a[k] = best;
  }
  return a;
}

Network random_digraph(std::mt19937_64& rng, std::size_t nodes, std::size_t arcs, int cmax, double p_toll,
                       bool halves) {
  std::vector<std::string> names{"s"};
  for (std::size_t i = 1; i + 1 < nodes; ++i) names.push_back("v" + std::to_string(i));
  names.push_back("t");

  std::uniform_int_distribution<std::size_t> pick(0, nodes - 1);
  std::uniform_int_distribution<int> cost(0, cmax);
  std::bernoulli_distribution toll(p_toll);
  std::bernoulli_distribution half(0.25);

  std::vector<Arc> out;
  for (std::size_t e = 0; e < arcs; ++e) {
    std::size_t u = pick(rng);
    std::size_t v = pick(rng);
    if (u == v) v = (v + 1) % nodes;
    Rational c(cost(rng));
    if (halves && half(rng)) c = c / Rational(2);
    out.push_back({"a" + std::to_string(e), names[u], names[v], c, toll(rng) ? ArcKind::Toll : ArcKind::Free});
  }
  std::uniform_int_distribution<int> backbone(cmax, static_cast<int>(nodes) * cmax);
  out.push_back({"z", "s", "t", Rational(backbone(rng)), ArcKind::Free});
  return build_network(std::move(out), "s", "t", names);
}

namespace {

// Single-source distances by Bellman-Ford over the arcs accepted by `cost`.
std::vector<Distance> bellman_ford(const Network& net, NodeIndex from,
                                   const std::function<std::optional<Rational>(ArcIndex)>& cost) {
  std::vector<Distance> d(net.node_count(), Distance::infinite());
  d[from] = Rational(0);
  for (std::size_t round = 0; round + 1 < net.node_count(); ++round) {
    bool changed = false;
    for (ArcIndex a = 0; a < net.arc_count(); ++a) {
      auto c = cost(a);
      if (!c || d[net.tail(a)].is_infinite()) continue;
      Distance via = d[net.tail(a)] + Distance(*c);
      if (via < d[net.head(a)]) {
        d[net.head(a)] = via;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return d;
}

void simple_paths(const Network& net, std::size_t cap, std::vector<PathSeq>& out) {
  std::vector<bool> seen(net.node_count(), false);
  PathSeq path;
  std::function<void(NodeIndex)> dfs = [&](NodeIndex u) {
    if (out.size() >= cap) return;
    if (u == net.sink()) {
      out.push_back(path);
      return;
    }
    for (ArcIndex a = 0; a < net.arc_count(); ++a) {
      if (net.tail(a) != u || seen[net.head(a)]) continue;
      seen[net.head(a)] = true;
      path.push_back(a);
      dfs(net.head(a));
      path.pop_back();
      seen[net.head(a)] = false;
    }
  };
  seen[net.source()] = true;
  dfs(net.source());
}

}  // namespace

bool consistent_reference(const Network& net, const PathSeq& path, const std::vector<Rational>& tolls) {
  std::vector<std::optional<Rational>> toll_of(net.arc_count());
  std::size_t k = 0;
  for (ArcIndex a : path) {
    if (net.arc(a).is_toll()) toll_of[a] = tolls.at(k++);
  }
  auto cost = [&](ArcIndex a) -> std::optional<Rational> {
    if (!net.arc(a).is_toll()) return net.arc(a).cost;
    if (!toll_of[a]) return std::nullopt;
    return net.arc(a).cost + *toll_of[a];
  };
  Rational own(0);
  for (ArcIndex a : path) own += *cost(a);
  Distance best = bellman_ford(net, net.source(), cost)[net.sink()];
  return best.is_finite() && best.value() == own;
}

std::vector<ValidPath> valid_paths_reference(const Network& net, std::size_t cap) {
  std::vector<PathSeq> paths;
  simple_paths(net, cap, paths);
  std::vector<ValidPath> out;
  for (const PathSeq& p : paths) {
    std::size_t m = std::count_if(p.begin(), p.end(), [&net](ArcIndex a) { return net.arc(a).is_toll(); });
    if (m == 0) continue;
    if (!consistent_reference(net, p, std::vector<Rational>(m, Rational(0)))) continue;
    out.push_back(decompose(net, p));
  }
  return out;
}

std::vector<SatInstance> sample_formulas(std::mt19937_64& rng, std::size_t count, int max_vars, int max_clauses) {
  std::uniform_int_distribution<int> vars_dist(1, max_vars);
  std::uniform_int_distribution<int> clause_dist(1, max_clauses);
  std::bernoulli_distribution negate(0.5);
  std::vector<SatInstance> out;
  for (std::size_t f = 0; f < count; ++f) {
    SatInstance formula;
    formula.variables = vars_dist(rng);
    int m = clause_dist(rng);
    std::uniform_int_distribution<int> var(1, formula.variables);
    for (int c = 0; c < m; ++c) {
      std::array<int, 3> clause{};
      for (int j = 0; j < 3; ++j) {
        int v = 0;
        do {
          v = var(rng);
        } while (formula.variables >= 3 &&
                 std::any_of(clause.begin(), clause.begin() + j, [v](int lit) { return std::abs(lit) == v; }));
        clause[j] = negate(rng) ? -v : v;
      }
      formula.clauses.push_back(clause);
    }
    out.push_back(std::move(formula));
  }
  return out;
}

}  // namespace maxtoll::testing
