#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maxtoll/graph.hpp"
#include "maxtoll/rational.hpp"

namespace maxtoll {

// A valid s-t path split into its toll arcs tau_1..tau_m and the toll-free
// segments between them. Toll indices are 1-based; index 0 stands for the
// source side and m + 1 for the sink side.
class ValidPath {
 public:
  const PathSeq& arcs() const noexcept { return arcs_; }
  std::size_t toll_count() const noexcept { return toll_positions_.size(); }

  // k in [1, m].
  ArcIndex toll_arc(std::size_t k) const { return arcs_[toll_positions_.at(k - 1)]; }
  std::vector<ArcIndex> toll_arcs() const;

  // Position in arcs() right after tau_k (k in [0, m]); 0 for k = 0.
  std::size_t term_position(std::size_t k) const;
  // Position of tau_j in arcs() (j in [1, m + 1]); arcs().size() for j = m + 1.
  std::size_t init_position(std::size_t j) const;

  // Node right after tau_k, with term(tau_0) = s.
  NodeIndex term_node(std::size_t k) const { return term_nodes_.at(k); }
  // Node right before tau_j, with init(tau_{m+1}) = t.
  NodeIndex init_node(std::size_t j) const { return init_nodes_.at(j - 1); }

  // Arcs of the path from term(tau_k) to init(tau_l), k < l.
  PathSeq between(std::size_t k, std::size_t l) const;

 private:
  friend ValidPath make_valid_path_unchecked(const Network&, PathSeq);

  PathSeq arcs_;
  std::vector<std::size_t> toll_positions_;
  std::vector<NodeIndex> term_nodes_;  // k = 0..m
  std::vector<NodeIndex> init_nodes_;  // j = 1..m+1
};

// U_{i,j} for every window 0 <= i < j <= m + 1 plus prefix sums of fixed
// costs along the path, so that any L_{k,l} is an O(1) difference.
class SubpathTable {
 public:
  std::size_t toll_count() const noexcept { return m_; }

  // Shortest toll-free distance from term(tau_i) to init(tau_j).
  const Distance& upper(std::size_t i, std::size_t j) const;
  // Fixed-cost length of the path between term(tau_k) and init(tau_l).
  Rational lower(std::size_t k, std::size_t l) const;

  // True iff L_{i,j} <= U_{i,j} for every window, i.e. zero tolls are
  // consistent with the owning path.
  bool zero_tolls_consistent() const;

 private:
  friend SubpathTable subpath_table(const Network&, const ValidPath&, const FreeDistanceTable*);

  std::size_t index(std::size_t i, std::size_t j) const { return i * (m_ + 2) + j; }

  std::size_t m_ = 0;
  std::vector<Distance> upper_;
  std::vector<Rational> prefix_;  // prefix_[p] = cost of arcs[0..p)
  std::vector<std::size_t> term_pos_;
  std::vector<std::size_t> init_pos_;
};

// Decomposes a simple s-t path with at least one toll arc and checks
// validity (the zero toll vector is consistent with it).
//
// Errors: NotSimple, NotSourceSink, NoTollArc, NotValid.
ValidPath decompose(const Network& net, const PathSeq& path);

struct DecomposedPath {
  ValidPath path;
  SubpathTable table;
};

// decompose() and subpath_table() in one pass. `free_distances`, when given,
// must hold every node of the network as a source.
DecomposedPath decompose_with_table(const Network& net, const PathSeq& path,
                                    const FreeDistanceTable* free_distances = nullptr);

// Like decompose_with_table() but returns nullopt instead of throwing when
// the path has no toll arc or is not valid. Other defects still throw.
std::optional<DecomposedPath> try_decompose(const Network& net, const PathSeq& path,
                                            const FreeDistanceTable* free_distances = nullptr);

SubpathTable subpath_table(const Network& net, const ValidPath& vp,
                           const FreeDistanceTable* free_distances = nullptr);

// One non-trivial constraint T_{first..last} <= slack of the consistency
// system, where slack = U_{i,j} - L_{i,j} and the window holds tolls
// first = i + 1 through last = j - 1.
struct ConsistencyConstraint {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational slack;

  friend bool operator==(const ConsistencyConstraint&, const ConsistencyConstraint&) = default;
};

// Every finite window with at least one toll arc inside, ordered by (i, j).
std::vector<ConsistencyConstraint> consistency_constraints(const SubpathTable& table);

// `tolls[k - 1]` is the toll on tau_k. True iff L_{i,j} + T_{i,j} <= U_{i,j}
// over all windows with finite U.
bool is_consistent(const SubpathTable& table, std::span<const Rational> tolls);
bool is_consistent(const SubpathTable& table, const ValidPath& vp, const TollAssignment& tolls);

// Direct shortest-path check: with off-path toll arcs removed and on-path
// tolls applied, the path is a shortest s-t path.
bool is_consistent_oracle(const Network& net, const ValidPath& vp, const TollAssignment& tolls);

// Tolls on tau_1..tau_m read from an assignment; throws if one is blocked.
std::vector<Rational> tolls_on_path(const ValidPath& vp, const TollAssignment& tolls);

// On-path tolls from `tolls`, every other toll arc blocked.
TollAssignment assignment_on_path(const Network& net, const ValidPath& vp, std::span<const Rational> tolls);

// B(P) = U_{0,m+1} - L_{0,m+1}.
Rational path_bound(const SubpathTable& table);

struct Bounds {
  Rational l0;     // shortest s-t length with zero tolls
  Rational linf;   // shortest toll-free s-t length
  Rational lp;     // linf - l0
};

Bounds compute_bounds(const Network& net);
Rational lp_bound(const Network& net);

}  // namespace maxtoll
