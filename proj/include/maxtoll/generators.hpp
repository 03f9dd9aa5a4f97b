#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "maxtoll/graph.hpp"
#include "maxtoll/rational.hpp"

namespace maxtoll {

enum class Family { Z, ZMod, Sat, Fixture, Random };

std::string_view to_string(Family family);

// Quantities an instance family is known to attain. Fields stay empty where
// nothing is claimed.
struct Expected {
  std::optional<Rational> lp;
  std::optional<Rational> opt;
  std::optional<Rational> app;
};

struct GenMetadata {
  Family family = Family::Fixture;
  std::size_t parameter = 0;   // k for Z / ZMod, clause count for Sat, layers for Random
  std::int64_t scale = 1;      // cost multiplier used to integerize
  Expected expected;
};

struct Generated {
  Network network;
  GenMetadata meta;
};

// Z(k): recursive tightness instance whose LP/OPT ratio is alpha(k). Costs
// are multiplied by 2^ceil(log2 k) so that they are integers.
Generated gen_z(std::size_t k);

// Z(k) plus a toll arc s_k -> t_k of (scaled) cost 1.
Generated gen_z_mod(std::size_t k);

struct SatInstance {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;  // nonzero signed variable indices
};

// Brute-force satisfiability over all 2^n assignments.
bool is_satisfiable(const SatInstance& formula);

// 3-SAT reduction: the optimal revenue equals 3m - 2 iff the formula is
// satisfiable. Errors: MalformedClause.
Generated gen_sat(const SatInstance& formula);

// Canonical two-toll network with constraints T1 <= 11, T2 <= 7, T1 + T2 <= 4.
Network fixture_fig2();

// Nine-node worked example with four toll arcs on the zero-toll path.
Network fixture_fig7();

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform integer in [0, bound] (modulo reduction).
  std::uint64_t below_or_equal(std::uint64_t bound) { return next() % (bound + 1); }
  // True with probability num/den, 0 <= num <= den.
  bool bernoulli(const Rational& p);

 private:
  std::uint64_t state_;
};

struct RandomSpec {
  std::size_t layers = 2;
  std::size_t width = 1;
  Rational p_toll{1, 2};
  std::int64_t cmax = 1;
  std::uint64_t seed = 0;
};

// Layered DAG s -> layer 1 -> ... -> layer L -> t with complete bipartite
// forward arcs, each toll with probability p_toll and cost uniform in
// [0, cmax], plus a toll-free s -> t backbone of cost (layers + 1) * cmax.
Generated gen_random(const RandomSpec& spec);

}  // namespace maxtoll
