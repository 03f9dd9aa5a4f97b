#include "maxtoll/explore.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxtoll/error.hpp"

namespace maxtoll {

// ---------------------------------------------------------------------------
// Alpha

AlphaTable::AlphaTable() : scaled_{0, std::uint64_t{1} << kFractionBits} {}

void AlphaTable::reserve(std::size_t k) {
  constexpr std::uint64_t kOne = std::uint64_t{1} << kFractionBits;
  scaled_.reserve(k + 1);
  for (std::size_t n = scaled_.size(); n <= k; ++n) {
    // alpha is nondecreasing (the admissible split set only grows with k), so
    // for a fixed i the best partner is j = n - i.
    std::uint64_t best = 0;
    for (std::size_t i = 1; i <= n / 2; ++i) best = std::max(best, scaled_[i] + scaled_[n - i]);
    std::uint64_t doubled = kOne + best;
    if (doubled & 1U) throw Error(ErrorCode::Overflow, "alpha exceeds fixed-point precision");
    scaled_.push_back(doubled / 2);
  }
}

Rational AlphaTable::value(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "alpha(0) is undefined");
  reserve(k);
  return Rational(static_cast<Rational::Int>(scaled_[k]), static_cast<Rational::Int>(1) << kFractionBits);
}

Rational alpha(std::size_t k) {
  static std::mutex mutex;
  static AlphaTable table;
  std::lock_guard lock(mutex);
  return table.value(k);
}

namespace {

Rational alpha_balanced_memo(std::size_t k, std::map<std::size_t, Rational>& memo) {
  if (k == 1) return Rational(1);
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  Rational value = (Rational(1) + alpha_balanced_memo((k + 1) / 2, memo) + alpha_balanced_memo(k / 2, memo)) /
                   Rational(2);
  memo.emplace(k, value);
  return value;
}

}  // namespace

Rational alpha_balanced(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "alpha(0) is undefined");
  std::map<std::size_t, Rational> memo;
  return alpha_balanced_memo(k, memo);
}

bool within_log_bound(std::size_t k, const Rational& alpha_k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  // exponent = 2 (alpha_k - 1) = p / q; need 2^p <= k^q.
  Rational exponent = Rational(2) * (alpha_k - Rational(1));
  if (exponent.num() <= 0) return true;
  const Rational::Int p = exponent.num();
  const Rational::Int q = exponent.den();
  const int floor_log = std::bit_width(static_cast<std::uint64_t>(k)) - 1;
  const bool power_of_two = std::has_single_bit(static_cast<std::uint64_t>(k));
  if (p <= q * floor_log) return true;
  if (power_of_two || p >= q * (floor_log + 1)) return false;

  // log2(k) is irrational here; decide by floating point unless the two
  // sides are too close to call.
  long double lhs = static_cast<long double>(p) / static_cast<long double>(q);
  long double rhs = std::log2(static_cast<long double>(k));
  if (std::fabs(lhs - rhs) > 1e-9L) return lhs < rhs;

  using boost::multiprecision::cpp_int;
  if (p > (Rational::Int{1} << 24) || q > (Rational::Int{1} << 24)) {
    throw Error(ErrorCode::Overflow, "log bound comparison too large for exact fallback");
  }
  cpp_int two_pow = cpp_int(1) << static_cast<unsigned>(p);
  cpp_int k_pow = boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(q));
  return two_pow <= k_pow;
}

// ---------------------------------------------------------------------------
// ExploreDescendants

namespace {

ExploreResult explore_recursive(const Network& net, const DecomposedPath& node, const ExploreOptions& options,
                                std::size_t depth) {
  const ValidPath& vp = node.path;
  const SubpathTable& table = node.table;
  MaxRevResult priced = max_rev(table);
  Rational bound = path_bound(table);

  ExploreResult own;
  own.revenue = priced.revenue;
  own.tolls = assignment_on_path(net, vp, priced.tolls);
  own.path = vp.arcs();
  own.path_bound = bound;
  own.calls = 1;

  if (priced.revenue >= bound) {
    if (options.observer) options.observer({vp, table, priced, bound, nullptr, nullptr, depth});
    return own;
  }

  CoveringSequence seq = covering_sequence(priced, vp.toll_count());
  if (seq.size() < 2) throw std::logic_error("explore: single covering window but revenue below bound");
  DescendantPair children = toll_partition(net, vp, seq);
  if (options.observer) options.observer({vp, table, priced, bound, &seq, &children, depth});

  auto run_child = [&](const PathSeq& child) {
    DecomposedPath decomposed = decompose_with_table(net, child);
    return explore_recursive(net, decomposed, options, depth + 1);
  };

  ExploreResult first;
  ExploreResult second;
  if (options.parallel && depth < options.parallel_depth) {
    auto pending = std::async(std::launch::async, run_child, std::cref(children.first));
    second = run_child(children.second);
    first = pending.get();
  } else {
    first = run_child(children.first);
    second = run_child(children.second);
  }

  std::size_t calls = own.calls + first.calls + second.calls;
  ExploreResult* best = &own;
  if (first.revenue > best->revenue) best = &first;
  if (second.revenue > best->revenue) best = &second;
  ExploreResult out = std::move(*best);
  out.calls = calls;
  return out;
}

}  // namespace

ExploreResult explore_descendants(const Network& net, const ValidPath& vp, const ExploreOptions& options) {
  DecomposedPath node{vp, subpath_table(net, vp)};
  return explore_recursive(net, node, options, 0);
}

Solution solve(const Network& net, const ExploreOptions& options) {
  Solution sol;
  Bounds bounds = compute_bounds(net);
  sol.l0 = bounds.l0;
  sol.linf = bounds.linf;
  sol.lp = bounds.lp;

  auto p0 = shortest_path(net, net.source(), net.sink(), TollRegime::zero_tolls());
  if (sol.lp.is_zero()) {
    sol.path = *p0.path;
    sol.tolls = TollAssignment::blocked(net);
    for (ArcIndex a : sol.path) {
      if (net.arc(a).is_toll()) {
        sol.tolls.set(a, Rational(0));
        ++sol.initial_toll_count;
      }
    }
    sol.guarantee = Rational(1);
    return sol;
  }

  DecomposedPath start = decompose_with_table(net, *p0.path);
  sol.initial_toll_count = start.path.toll_count();
  sol.guarantee = alpha(sol.initial_toll_count);

  ExploreResult best = explore_recursive(net, start, options, 0);
  sol.path = std::move(best.path);
  sol.tolls = std::move(best.tolls);
  sol.revenue = best.revenue;
  sol.path_bound = best.path_bound;
  sol.recursion_calls = best.calls;

  if (!is_consistent_oracle(net, decompose(net, sol.path), sol.tolls)) {
    throw std::logic_error("solve: returned tolls are not consistent with the returned path");
  }
  return sol;
}

}  // namespace maxtoll
