#include "maxtoll/tollalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "maxtoll/error.hpp"

namespace maxtoll {

// ---------------------------------------------------------------------------
// MaxRev

MaxRevResult max_rev(const SubpathTable& table) {
  const std::size_t m = table.toll_count();
  MaxRevResult result;
  result.tolls.assign(m, Rational(0));
  result.active.assign(m, Window{});

  // toll_prefix[k] = t_1 + ... + t_k for the tolls fixed so far.
  std::vector<Rational> toll_prefix(m + 1, Rational(0));

  std::size_t k = 1;
  while (k < m + 1) {
    std::optional<Rational> best;
    Window arg;
    for (std::size_t i = 0; i < k; ++i) {
      Rational set_inside = toll_prefix[k - 1] - toll_prefix[i];
      for (std::size_t j = k + 1; j <= m + 1; ++j) {
        const Distance& u = table.upper(i, j);
        if (u.is_infinite()) continue;
        Rational value = u.value() - table.lower(i, j) - set_inside;
        bool better = !best || value < *best || (value == *best && (j > arg.j || (j == arg.j && i < arg.i)));
        if (better) {
          best = std::move(value);
          arg = {i, j};
        }
      }
    }
    if (!best) throw std::logic_error("max_rev: no finite window covers a toll arc");
    if (best->is_negative()) throw std::logic_error("max_rev: negative slack; path is not valid");

    result.tolls[k - 1] = *best;
    result.active[k - 1] = arg;
    toll_prefix[k] = toll_prefix[k - 1] + *best;
    for (std::size_t l = k + 1; l < arg.j; ++l) {
      result.active[l - 1] = arg;
      toll_prefix[l] = toll_prefix[l - 1];
    }
    k = arg.j;
  }

  for (const auto& t : result.tolls) result.revenue += t;
  return result;
}

// ---------------------------------------------------------------------------
// Covering sequence

CoveringSequence covering_sequence(const MaxRevResult& result, std::size_t m) {
  if (result.active.size() != m || m == 0) throw Error(ErrorCode::InvalidArgument, "active window count differs from m");
  CoveringSequence seq;
  std::size_t l = m;
  while (l > 0) {
    const Window& w = result.active.at(l - 1);
    if (w.i >= l) throw std::logic_error("covering_sequence: active window does not move left");
    seq.windows.push_back(w);
    l = w.i;
  }
  std::reverse(seq.windows.begin(), seq.windows.end());

#ifndef NDEBUG
  // Only the structural properties can be checked without the table.
  if (seq.windows.front().i != 0 || seq.windows.back().j != m + 1) {
    throw std::logic_error("covering_sequence: end points violated");
  }
#endif
  return seq;
}

std::vector<std::string> covering_violations(const CoveringSequence& seq, const MaxRevResult& result,
                                             const SubpathTable& table) {
  std::vector<std::string> issues;
  const std::size_t m = table.toll_count();
  const std::size_t q = seq.size();
  if (q == 0) return {"empty covering sequence"};

  if (seq[1].i != 0) issues.push_back("i(1) != 0");
  if (seq[q].j != m + 1) issues.push_back("j(q) != m + 1");

  for (std::size_t h = 1; h < q; ++h) {
    if (!(seq[h + 1].i < seq[h].j)) issues.push_back("i(h+1) < j(h) fails at h=" + std::to_string(h));
    if (!(seq[h].j < seq[h + 1].j)) issues.push_back("j(h) < j(h+1) fails at h=" + std::to_string(h));
    if (!(seq[h].i < seq[h + 1].i)) issues.push_back("i(h) < i(h+1) fails at h=" + std::to_string(h));
    if (h + 2 <= q && !(seq[h].j <= seq[h + 2].i)) {
      issues.push_back("j(h) <= i(h+2) fails at h=" + std::to_string(h));
    }
  }

  for (std::size_t k = 1; k <= m; ++k) {
    std::size_t cover = 0;
    for (const Window& w : seq.windows) {
      if (w.i + 1 <= k && k + 1 <= w.j) ++cover;
    }
    if (cover == 0) issues.push_back("toll " + std::to_string(k) + " is not covered");
    if (cover > 1 && !result.tolls.at(k - 1).is_zero()) {
      issues.push_back("nonzero toll " + std::to_string(k) + " covered " + std::to_string(cover) + " times");
    }
  }

  std::vector<Rational> slack(q + 1);
  for (std::size_t h = 1; h <= q; ++h) {
    const Distance& u = table.upper(seq[h].i, seq[h].j);
    if (u.is_infinite()) {
      issues.push_back("window " + std::to_string(h) + " has no toll-free path");
      return issues;
    }
    slack[h] = u.value() - table.lower(seq[h].i, seq[h].j);
  }
  std::vector<Rational> toll_prefix(m + 1);
  for (std::size_t k = 1; k <= m; ++k) toll_prefix[k] = toll_prefix[k - 1] + result.tolls.at(k - 1);
  for (std::size_t h1 = 1; h1 <= q; ++h1) {
    Rational slack_sum;
    for (std::size_t h2 = h1; h2 <= q; ++h2) {
      slack_sum += slack[h2];
      std::size_t first = seq[h1].i + 1;
      std::size_t last = seq[h2].j - 1;
      Rational toll_sum = last >= first ? toll_prefix[last] - toll_prefix[first - 1] : Rational(0);
      if (toll_sum != slack_sum) {
        issues.push_back("saturation fails for h'=" + std::to_string(h1) + ", h''=" + std::to_string(h2));
      }
    }
  }
  return issues;
}

// ---------------------------------------------------------------------------
// TollPartition

PathSeq excise_cycles(const Network& net, const PathSeq& walk) {
  if (walk.empty()) return {};
  PathSeq result;
  std::vector<NodeIndex> nodes{net.tail(walk.front())};
  std::unordered_map<NodeIndex, std::size_t> position{{nodes.front(), 0}};
  for (ArcIndex a : walk) {
    NodeIndex v = net.head(a);
    auto it = position.find(v);
    if (it != position.end()) {
      std::size_t keep = it->second;
      for (std::size_t p = keep + 1; p < nodes.size(); ++p) position.erase(nodes[p]);
      nodes.resize(keep + 1);
      result.resize(keep);
      continue;
    }
    result.push_back(a);
    position.emplace(v, nodes.size());
    nodes.push_back(v);
  }
  return result;
}

namespace {

PathSeq build_descendant(const Network& net, const ValidPath& vp, const CoveringSequence& seq, std::size_t first_h) {
  const PathSeq& parent = vp.arcs();
  PathSeq walk;
  std::size_t cursor = 0;  // next parent position to copy from
  for (std::size_t h = first_h; h <= seq.size(); h += 2) {
    const Window& w = seq[h];
    std::size_t leave = vp.term_position(w.i);
    walk.insert(walk.end(), parent.begin() + static_cast<std::ptrdiff_t>(cursor),
                parent.begin() + static_cast<std::ptrdiff_t>(leave));
    auto witness = shortest_path(net, vp.term_node(w.i), vp.init_node(w.j), TollRegime::free_only());
    if (!witness.path) throw std::logic_error("toll_partition: covering window has no toll-free witness");
    walk.insert(walk.end(), witness.path->begin(), witness.path->end());
    cursor = vp.init_position(w.j);
  }
  walk.insert(walk.end(), parent.begin() + static_cast<std::ptrdiff_t>(cursor), parent.end());
  return excise_cycles(net, walk);
}

std::vector<ArcIndex> toll_arcs_of(const Network& net, const PathSeq& path) {
  std::vector<ArcIndex> out;
  for (ArcIndex a : path) {
    if (net.arc(a).is_toll()) out.push_back(a);
  }
  return out;
}

}  // namespace

DescendantPair toll_partition(const Network& net, const ValidPath& vp, const CoveringSequence& seq) {
  if (seq.size() < 2) throw Error(ErrorCode::InvalidArgument, "toll_partition needs at least two windows");
  DescendantPair pair{build_descendant(net, vp, seq, 1), build_descendant(net, vp, seq, 2)};
#ifndef NDEBUG
  auto issues = descendant_violations(net, vp, pair);
  if (!issues.empty()) throw std::logic_error("toll_partition: " + issues.front());
#endif
  return pair;
}

std::vector<std::string> descendant_violations(const Network& net, const ValidPath& parent,
                                               const DescendantPair& pair) {
  std::vector<std::string> issues;
  const std::vector<ArcIndex> parent_tolls = parent.toll_arcs();
  std::unordered_map<ArcIndex, std::size_t> order;
  for (std::size_t k = 0; k < parent_tolls.size(); ++k) order.emplace(parent_tolls[k], k);

  std::unordered_set<ArcIndex> used;
  std::size_t total = 0;
  const PathSeq* children[] = {&pair.first, &pair.second};
  for (int r = 0; r < 2; ++r) {
    const std::string name = r == 0 ? "first" : "second";
    const PathSeq& child = *children[r];
    if (!is_simple_path(net, child, net.source(), net.sink())) issues.push_back(name + " is not a simple s-t path");
    auto tolls = toll_arcs_of(net, child);
    total += tolls.size();
    if (tolls.empty()) issues.push_back(name + " has no toll arc");
    if (tolls.size() >= parent_tolls.size()) issues.push_back(name + " keeps every parent toll arc");
    std::optional<std::size_t> previous;
    for (ArcIndex a : tolls) {
      auto it = order.find(a);
      if (it == order.end()) {
        issues.push_back(name + " uses a toll arc outside the parent");
        continue;
      }
      if (previous && it->second <= *previous) issues.push_back(name + " reorders parent toll arcs");
      previous = it->second;
      if (!used.insert(a).second) issues.push_back("descendants share toll arc " + net.arc(a).id);
    }
  }
  if (total > parent_tolls.size()) issues.push_back("descendants hold more toll arcs than the parent");
  return issues;
}

}  // namespace maxtoll
