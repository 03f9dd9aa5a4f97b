#pragma once

// Independent oracles and instance samplers shared by the unit tests and the
// acceptance runner. Nothing here calls into the library's algorithms except
// to build networks.

#include <cstdint>
#include <random>
#include <vector>

#include "maxtoll/generators.hpp"
#include "maxtoll/graph.hpp"
#include "maxtoll/pathmodel.hpp"
#include "maxtoll/rational.hpp"

namespace maxtoll::testing {

// All-pairs distances by Floyd-Warshall under a regime.
std::vector<std::vector<Distance>> floyd_warshall(const Network& net, const TollRegime& regime);

// alpha(1..kmax) from the unreduced recurrence: max over every split
// 1 <= i <= j, i + j <= k, evaluated in exact rationals. Index 0 is unused.
std::vector<Rational> alpha_reference(std::size_t kmax);

// Random digraph on `nodes` nodes (s = "s", t = "t", others "v<i>") with
// `arcs` random arcs between distinct nodes, cycles and parallel arcs
// allowed, plus a toll-free s -> t arc. Costs are integers in [0, cmax],
// halved with probability 1/4 when `halves` is set.
Network random_digraph(std::mt19937_64& rng, std::size_t nodes, std::size_t arcs, int cmax, double p_toll,
                       bool halves = false);

// Every valid path of the network (paths with a toll arc that are shortest
// in their own sub-network), found by plain enumeration and a per-path
// Bellman-Ford check.
std::vector<ValidPath> valid_paths_reference(const Network& net, std::size_t cap = 100000);

// Shortest-path check by Bellman-Ford: with off-path toll arcs deleted and
// `tolls[k - 1]` added to the k-th toll arc of `path`, no s-t path is
// shorter than `path`.
bool consistent_reference(const Network& net, const PathSeq& path, const std::vector<Rational>& tolls);

// `count` random 3-CNF formulas with 1..max_vars variables and
// 1..max_clauses clauses; literals use distinct variables within a clause
// whenever there are at least three variables.
std::vector<SatInstance> sample_formulas(std::mt19937_64& rng, std::size_t count, int max_vars, int max_clauses);

}  // namespace maxtoll::testing
