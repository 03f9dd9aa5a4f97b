#include <doctest.h>

#include <cmath>
#include <mutex>

#include "maxtoll/exact.hpp"
#include "maxtoll/explore.hpp"
#include "maxtoll/generators.hpp"
#include "support.hpp"

using namespace maxtoll;

TEST_CASE("alpha small values") {
  CHECK(alpha(1) == Rational(1));
  CHECK(alpha(2) == Rational(3, 2));
  CHECK(alpha(3) == Rational(7, 4));
  CHECK(alpha(4) == Rational(2));
  CHECK(alpha(8) == Rational(5, 2));
  CHECK(alpha(16) == Rational(3));
  CHECK_THROWS(alpha(0));
}

TEST_CASE("alpha matches the unreduced recurrence") {
  auto reference = testing::alpha_reference(300);
  AlphaTable table;
  for (std::size_t k = 1; k <= 300; ++k) {
    CAPTURE(k);
    CHECK(table.value(k) == reference[k]);
    CHECK(alpha(k) == reference[k]);
  }
  CHECK(table.size() >= 300);
}

TEST_CASE("balanced split reproduces alpha") {
  for (std::size_t k = 1; k <= 1024; ++k) {
    CAPTURE(k);
    CHECK(alpha_balanced(k) == alpha(k));
  }
  CHECK(alpha_balanced(1u << 20) == Rational(11));
}

TEST_CASE("alpha is monotone and below the logarithmic bound") {
  for (std::size_t k = 1; k < 4096; ++k) {
    CHECK(alpha(k) <= alpha(k + 1));
    CHECK(within_log_bound(k, alpha(k)));
    CHECK(alpha(k).to_double() <= 0.5 * std::log2(static_cast<double>(k)) + 1 + 1e-12);
  }
}

TEST_CASE("log bound test is exact at the boundary") {
  // 2^(2 (a - 1)) <= k with a = 1 + log2(k) / 2 at powers of two.
  CHECK(within_log_bound(4, Rational(2)));
  CHECK_FALSE(within_log_bound(3, Rational(2)));
  CHECK(within_log_bound(16, Rational(3)));
  CHECK_FALSE(within_log_bound(15, Rational(3)));
  // 2^(2 * 1/4) = sqrt(2) ~ 1.414
  CHECK_FALSE(within_log_bound(1, Rational(5, 4)));
  CHECK(within_log_bound(2, Rational(5, 4)));
  // 2^(2 * 3/4) = 2^1.5 ~ 2.83
  CHECK_FALSE(within_log_bound(2, Rational(7, 4)));
  CHECK(within_log_bound(3, Rational(7, 4)));
}

TEST_CASE("solve on the nine-node example") {
  Network net = fixture_fig7();
  std::vector<std::size_t> depths;
  ExploreOptions options;
  options.observer = [&](const ExploreStep& step) { depths.push_back(step.depth); };
  Solution sol = solve(net, options);
  CHECK(sol.revenue == Rational(9));
  CHECK(sol.lp == Rational(10));
  CHECK(sol.l0 == Rational(0));
  CHECK(sol.linf == Rational(10));
  CHECK(sol.guarantee == Rational(2));
  CHECK(sol.initial_toll_count == 4);
  CHECK(sol.recursion_calls == 3);
  CHECK(depths.size() == 3);
  CHECK(net.arc_ids(sol.path) == std::vector<std::string>{"s-v1", "T1", "v2-v3", "T2", "v4-t"});
  CHECK(sol.tolls.toll(net.arc_index("T1")) + sol.tolls.toll(net.arc_index("T2")) == Rational(9));
  CHECK(sol.tolls.is_blocked(net.arc_index("T3")));
  CHECK(sol.revenue * sol.guarantee >= sol.lp);
}

TEST_CASE("solve on networks without revenue") {
  Network only_free = build_network({{"a", "s", "t", Rational(3), ArcKind::Free}}, "s", "t");
  Solution s1 = solve(only_free);
  CHECK(s1.revenue == Rational(0));
  CHECK(s1.lp == Rational(0));
  CHECK(s1.guarantee == Rational(1));
  CHECK(s1.recursion_calls == 0);

  RandomSpec spec;
  spec.p_toll = Rational(0);
  spec.layers = 3;
  spec.width = 2;
  spec.cmax = 4;
  Solution s2 = solve(gen_random(spec).network);
  CHECK(s2.revenue == Rational(0));
  CHECK(s2.lp == Rational(0));
}

TEST_CASE("solve on the tightness families") {
  for (std::size_t k = 1; k <= 16; ++k) {
    CAPTURE(k);
    Generated z = gen_z(k);
    Solution sol = solve(z.network);
    CHECK(sol.revenue == Rational(2 * z.meta.scale));
    CHECK(sol.lp == *z.meta.expected.lp);
    CHECK(sol.initial_toll_count == k);
    CHECK(sol.recursion_calls <= 2 * k - 1);

    Generated zm = gen_z_mod(k);
    CHECK(solve(zm.network).revenue == Rational(2 * zm.meta.scale));
  }
}

TEST_CASE("parallel exploration gives identical results") {
  for (std::size_t k : {5, 13, 32}) {
    Network net = gen_z(k).network;
    ExploreOptions par;
    par.parallel = true;
    par.parallel_depth = 3;
    Solution a = solve(net);
    Solution b = solve(net, par);
    CHECK(a.path == b.path);
    CHECK(a.tolls == b.tolls);
    CHECK(a.revenue == b.revenue);
    CHECK(a.recursion_calls == b.recursion_calls);
  }
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Network net = gen_random({4, 3, Rational(2, 3), 6, seed}).network;
    ExploreOptions par;
    par.parallel = true;
    std::mutex mu;
    std::size_t seen = 0;
    par.observer = [&](const ExploreStep&) {
      std::lock_guard lock(mu);
      ++seen;
    };
    Solution a = solve(net);
    Solution b = solve(net, par);
    CHECK(a.path == b.path);
    CHECK(a.tolls == b.tolls);
    CHECK(seen == b.recursion_calls);
  }
}

TEST_CASE("guarantee sandwich and recursion invariants on random instances") {
  std::size_t partitioned = 0;
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomSpec spec{2 + seed % 3, 1 + seed % 3, Rational(1, 2), static_cast<std::int64_t>(1 + seed % 6), seed};
    Network net = seed % 2 == 0 ? gen_random(spec).network
                                : testing::random_digraph(rng, 5 + seed % 4, 9 + seed % 8, 6, 0.6, seed % 3 == 0);

    ExploreOptions options;
    bool steps_ok = true;
    options.observer = [&](const ExploreStep& step) {
      if (step.revenue.revenue < step.bound) {
        if (!step.covering || !step.descendants || step.covering->size() < 2) steps_ok = false;
      }
      if (step.covering) {
        ++partitioned;
        if (!covering_violations(*step.covering, step.revenue, step.table).empty()) steps_ok = false;
        if (!descendant_violations(net, step.path, *step.descendants).empty()) steps_ok = false;
        if (!try_decompose(net, step.descendants->first) || !try_decompose(net, step.descendants->second)) {
          steps_ok = false;
        }
      }
    };
    Solution sol = solve(net, options);
    CHECK(steps_ok);
    ExactResult ex = exact_opt(net);
    REQUIRE_FALSE(ex.truncated);
    CHECK(sol.revenue <= ex.opt);
    CHECK(ex.opt <= sol.lp);
    CHECK(sol.revenue * sol.guarantee >= sol.lp);
    if (sol.initial_toll_count > 0) CHECK(sol.recursion_calls <= 2 * sol.initial_toll_count - 1);
  }
  CHECK(partitioned > 0);
}
