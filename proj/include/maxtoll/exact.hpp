#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "maxtoll/graph.hpp"
#include "maxtoll/pathmodel.hpp"
#include "maxtoll/rational.hpp"

namespace maxtoll {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

// Calls `visit` for every simple s-t path in lexicographic arc-id order,
// stopping after `cap` paths or when `visit` returns false. Returns true if
// the enumeration was cut short by the cap.
bool for_each_simple_path(const Network& net, std::size_t cap, const std::function<bool(const PathSeq&)>& visit);

struct PathEnumeration {
  std::vector<PathSeq> paths;
  bool truncated = false;
};

PathEnumeration enumerate_simple_paths(const Network& net, std::size_t cap);

struct ExactResult {
  Rational opt;
  PathSeq best_path;          // empty when no valid path exists
  TollAssignment best_tolls;
  std::size_t paths_enumerated = 0;
  std::size_t valid_paths = 0;
  bool truncated = false;
};

// Maximum revenue over every valid simple s-t path, each priced optimally by
// max_rev. Ties keep the first path in enumeration order.
ExactResult exact_opt(const Network& net, std::size_t cap = kDefaultPathCap);

// Guard for the integer-grid oracle.
inline constexpr std::size_t kGridMaxTolls = 3;
inline constexpr std::int64_t kGridMaxTotalCost = 20;

// Best revenue over integer toll vectors in [0, C + 1]^m on the path, each
// checked against the shortest-path consistency oracle. Rational costs are
// first scaled to integers by the LCM of their denominators.
//
// Errors: GuardExceeded when m > 3 or the (scaled) total cost C > 20.
Rational brute_force_path_revenue(const Network& net, const ValidPath& vp);

// The network with every cost multiplied by `factor` (> 0).
Network scale_costs(const Network& net, const Rational& factor);

}  // namespace maxtoll
