#include <doctest.h>

#include <algorithm>

#include "maxtoll/error.hpp"
#include "maxtoll/exact.hpp"
#include "maxtoll/generators.hpp"
#include "maxtoll/tollalg.hpp"
#include "support.hpp"

using namespace maxtoll;

namespace {

PathSeq ids(const Network& net, std::vector<std::string> names) { return net.path_from_ids(names); }

bool contains(const std::vector<PathSeq>& paths, const PathSeq& p) {
  return std::find(paths.begin(), paths.end(), p) != paths.end();
}

}  // namespace

TEST_CASE("enumeration basics") {
  Network z1 = gen_z(1).network;
  auto all = enumerate_simple_paths(z1, 10);
  CHECK(all.paths.size() == 2);
  CHECK_FALSE(all.truncated);

  Network f7 = fixture_fig7();
  auto e = enumerate_simple_paths(f7, kDefaultPathCap);
  CHECK(contains(e.paths, ids(f7, {"s-v1", "T1", "v2-v3", "T2", "v4-v5", "T3", "v6-v7", "T4", "v8-t"})));
  CHECK(contains(e.paths, ids(f7, {"s-v7", "T4", "v8-t"})));
  CHECK(contains(e.paths, ids(f7, {"s-v1", "T1", "v2-v3", "T2", "v4-t"})));
  CHECK(contains(e.paths, ids(f7, {"s-t"})));

  auto one = enumerate_simple_paths(f7, 1);
  CHECK(one.paths.size() == 1);
  CHECK(one.truncated);
  CHECK_THROWS_AS(enumerate_simple_paths(f7, 0), Error);
}

TEST_CASE("enumeration order is lexicographic by arc id") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    Network net = testing::random_digraph(rng, 5 + trial % 3, 10 + trial % 6, 3, 0.5);
    auto e = enumerate_simple_paths(net, kDefaultPathCap);
    std::vector<std::vector<std::string>> named;
    for (const auto& p : e.paths) named.push_back(net.arc_ids(p));
    CHECK(std::is_sorted(named.begin(), named.end()));
    CHECK(std::adjacent_find(named.begin(), named.end()) == named.end());
    for (const auto& p : e.paths) CHECK(is_simple_path(net, p, net.source(), net.sink()));
  }
}

TEST_CASE("exact optimum of the fixtures") {
  Network f7 = fixture_fig7();
  ExactResult r7 = exact_opt(f7);
  CHECK(r7.opt == Rational(9));
  CHECK(r7.best_path == ids(f7, {"s-v1", "T1", "v2-v3", "T2", "v4-t"}));
  CHECK_FALSE(r7.truncated);

  ExactResult r2 = exact_opt(fixture_fig2());
  CHECK(r2.opt == Rational(4));
  CHECK(r2.valid_paths == 1);
}

TEST_CASE("exact optimum equals the best valid path under an independent validity filter") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    Network net = testing::random_digraph(rng, 4 + trial % 4, 6 + trial % 8, 5, 0.5, trial % 2 == 0);
    ExactResult r = exact_opt(net);
    Rational best(0);
    auto valid = testing::valid_paths_reference(net);
    for (const ValidPath& vp : valid) best = max(best, max_rev(subpath_table(net, vp)).revenue);
    CHECK(r.opt == best);
    CHECK(r.valid_paths == valid.size());
    CHECK(r.opt <= lp_bound(net));
  }
}

TEST_CASE("tightness family optimum is twice the scale") {
  for (std::size_t k = 1; k <= 8; ++k) {
    CAPTURE(k);
    Generated z = gen_z(k);
    ExactResult r = exact_opt(z.network);
    CHECK_FALSE(r.truncated);
    CHECK(r.opt == *z.meta.expected.opt);
  }
}

TEST_CASE("grid oracle on known paths") {
  // The two-toll fixture has C = 22, beyond the guard; the same constraint
  // shape with T1 <= 5 instead of T1 <= 11 has C = 16.
  Network f2 = fixture_fig2();
  ValidPath p = decompose(f2, ids(f2, {"s-a1", "T1", "b1-a2", "T2", "b2-t"}));
  CHECK_THROWS_AS(brute_force_path_revenue(f2, p), Error);
  std::vector<Arc> arcs(f2.arcs().begin(), f2.arcs().end());
  for (Arc& arc : arcs) {
    if (arc.id == "s-a2") arc.cost = Rational(5);
  }
  Network small = build_network(arcs, "s", "t");
  CHECK(brute_force_path_revenue(small, decompose(small, ids(small, {"s-a1", "T1", "b1-a2", "T2", "b2-t"}))) ==
        Rational(4));

  Network z1 = gen_z(1).network;
  DecomposedPath d = decompose_with_table(z1, ids(z1, {"toll"}));
  CHECK(brute_force_path_revenue(z1, d.path) == path_bound(d.table));

  Network halves = build_network({{"t1", "s", "x", Rational(1, 2), ArcKind::Toll},
                                  {"f1", "x", "t", Rational(0), ArcKind::Free},
                                  {"f2", "s", "t", Rational(7, 2), ArcKind::Free}},
                                 "s", "t");
  CHECK(brute_force_path_revenue(halves, decompose(halves, ids(halves, {"t1", "f1"}))) == Rational(3));
}

TEST_CASE("grid oracle guard") {
  Network f7 = fixture_fig7();
  ValidPath p0 = decompose(f7, ids(f7, {"s-v1", "T1", "v2-v3", "T2", "v4-v5", "T3", "v6-v7", "T4", "v8-t"}));
  try {
    (void)brute_force_path_revenue(f7, p0);
    FAIL("guard did not trip");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GuardExceeded);
  }
  Network wide = build_network({{"t1", "s", "t", Rational(0), ArcKind::Toll}, {"f", "s", "t", Rational(21), ArcKind::Free}},
                               "s", "t");
  CHECK_THROWS_AS(brute_force_path_revenue(wide, decompose(wide, ids(wide, {"t1"}))), Error);
}

TEST_CASE("grid oracle agrees with MaxRev on random integer instances") {
  std::mt19937_64 rng(2024);
  std::size_t compared = 0;
  for (int trial = 0; trial < 600; ++trial) {
    Network net = testing::random_digraph(rng, 4 + trial % 5, 5 + trial % 6, 2, 0.6);
    if (net.total_fixed_cost() > Rational(kGridMaxTotalCost)) continue;
    for (const ValidPath& vp : testing::valid_paths_reference(net)) {
      if (vp.toll_count() > kGridMaxTolls) continue;
      CHECK(brute_force_path_revenue(net, vp) == max_rev(subpath_table(net, vp)).revenue);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("exact optimum scales linearly with the costs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Network net = testing::random_digraph(rng, 5, 9, 4, 0.5, true);
    ExactResult base = exact_opt(net);
    for (int lambda : {2, 3, 7}) {
      Network scaled = scale_costs(net, Rational(lambda));
      ExactResult r = exact_opt(scaled);
      CHECK(r.opt == base.opt * Rational(lambda));
      CHECK(r.best_path == base.best_path);
    }
  }
  CHECK_THROWS_AS(scale_costs(fixture_fig2(), Rational(0)), Error);
}
