#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maxtoll/graph.hpp"
#include "maxtoll/pathmodel.hpp"
#include "maxtoll/rational.hpp"

namespace maxtoll {

// A toll-free window upsilon_{i,j}: it constrains the tolls tau_{i+1}..tau_{j-1}.
struct Window {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

struct MaxRevResult {
  std::vector<Rational> tolls;   // tolls[k - 1] = t_k
  Rational revenue;              // sum of tolls
  std::vector<Window> active;    // active[k - 1] = (i'(k), j'(k))
};

// Optimal tolls for a fixed valid path. Toll arcs are priced left to right at
// the largest value the consistency system allows given the tolls already
// set; after pricing t_k against window (i', j') the arcs strictly inside
// (k, j') are skipped at zero. Ties between windows go to the largest j, then
// the smallest i.
MaxRevResult max_rev(const SubpathTable& table);

// Saturated windows (i(1), j(1)), ..., (i(q), j(q)) with i(1) = 0 and
// j(q) = m + 1, obtained by walking the active windows backwards from tau_m.
struct CoveringSequence {
  std::vector<Window> windows;

  std::size_t size() const noexcept { return windows.size(); }
  const Window& operator[](std::size_t h) const { return windows.at(h - 1); }  // 1-based
};

CoveringSequence covering_sequence(const MaxRevResult& result, std::size_t m);

// Checks the covering sequence against its defining properties:
//   * end points i(1) = 0, j(q) = m + 1,
//   * interleaving i(h+1) < j(h) <= i(h+2) < j(h+1),
//   * every toll index covered, exactly once where t_k != 0,
//   * saturation: tolls over windows h'..h'' add up to the summed slacks.
// Returns one message per violated property; empty when all hold.
std::vector<std::string> covering_violations(const CoveringSequence& seq, const MaxRevResult& result,
                                             const SubpathTable& table);

// The two descendants of a parent path.
struct DescendantPair {
  PathSeq first;   // odd windows
  PathSeq second;  // even windows
};

// Builds the descendants: each one follows the toll-free witnesses of every
// other covering window and rejoins the parent between them. Requires
// seq.size() >= 2.
DescendantPair toll_partition(const Network& net, const ValidPath& vp, const CoveringSequence& seq);

// Checks the descendant properties: simple s-t paths whose toll arcs form
// disjoint, order-preserving, non-empty proper subsets of the parent's toll
// arcs. Returns the violated properties; empty when all hold. Validity is
// checked separately through decompose().
std::vector<std::string> descendant_violations(const Network& net, const ValidPath& parent,
                                               const DescendantPair& pair);

// Removes cycles from a walk: whenever a node repeats, the arcs between its
// two visits are cut out. The result is a simple path between the same ends.
PathSeq excise_cycles(const Network& net, const PathSeq& walk);

}  // namespace maxtoll
