#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "maxtoll/graph.hpp"
#include "maxtoll/pathmodel.hpp"
#include "maxtoll/rational.hpp"
#include "maxtoll/tollalg.hpp"

namespace maxtoll {

// Memoized approximation factors
//   alpha(1) = 1,
//   alpha(k) = 1/2 * max_{i + j <= k, 0 < i <= j < k} (1 + alpha(i) + alpha(j)).
//
// Values are dyadic, so the table keeps them as fixed-point integers over
// 2^kFractionBits and converts to Rational on the way out. Not thread-safe;
// the free function alpha() wraps a shared, locked instance.
class AlphaTable {
 public:
  static constexpr int kFractionBits = 56;

  AlphaTable();

  Rational value(std::size_t k);
  // Extends the table so that value(k) is a lookup.
  void reserve(std::size_t k);
  std::size_t size() const noexcept { return scaled_.size() - 1; }

 private:
  std::vector<std::uint64_t> scaled_;  // scaled_[k] = alpha(k) * 2^kFractionBits; index 0 unused
};

Rational alpha(std::size_t k);

// alpha(k) through the balanced split 1/2 (1 + alpha(ceil(k/2)) + alpha(floor(k/2))),
// in O(log k) evaluations.
Rational alpha_balanced(std::size_t k);

// Exact test of alpha_k <= log2(k) / 2 + 1, i.e. 2^(2 (alpha_k - 1)) <= k.
bool within_log_bound(std::size_t k, const Rational& alpha_k);

// One visit of the recursive driver, reported to ExploreOptions::observer.
struct ExploreStep {
  const ValidPath& path;
  const SubpathTable& table;
  const MaxRevResult& revenue;
  const Rational& bound;                  // B(P)
  const CoveringSequence* covering;       // set when the path is partitioned
  const DescendantPair* descendants;      // set when the path is partitioned
  std::size_t depth;
};

struct ExploreOptions {
  // Evaluate the two subtrees concurrently down to `parallel_depth`.
  bool parallel = false;
  std::size_t parallel_depth = 4;
  // Called once per visited path; must be thread-safe when `parallel` is set.
  std::function<void(const ExploreStep&)> observer;
};

struct ExploreResult {
  Rational revenue;
  TollAssignment tolls;   // on-path tolls; every other toll arc blocked
  PathSeq path;
  Rational path_bound;    // B of the returned path
  std::size_t calls = 0;  // visited paths in this subtree
};

// Prices the path with max_rev. If the revenue falls short of B(P), splits
// the path into its two descendants, recurses on both and keeps the best of
// the three candidates (ties: parent, then first, then second).
ExploreResult explore_descendants(const Network& net, const ValidPath& vp, const ExploreOptions& options = {});

struct Solution {
  PathSeq path;
  TollAssignment tolls;
  Rational revenue;
  Rational path_bound;
  Rational l0;
  Rational linf;
  Rational lp;
  Rational guarantee;             // alpha(m_T of the initial path)
  std::size_t initial_toll_count = 0;
  std::size_t recursion_calls = 0;
};

// Runs the approximation from the deterministic zero-toll shortest path. When
// LP = 0 nothing can be earned and the zero solution is returned directly.
Solution solve(const Network& net, const ExploreOptions& options = {});

}  // namespace maxtoll
