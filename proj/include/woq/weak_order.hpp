#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "woq/perm.hpp"

namespace woq {

// Join-irreducible of the weak order on S_n: a permutation with exactly one
// right descent, encoded by the subset A of entries after the descent. The
// encoding is the bijection with nonempty A subset [n] such that
// M = max(A^c) > m = min(A); the word is A^c ascending then A ascending.
struct JoinIrreducible {
  int n = 0;
  uint16_t A = 0;  // bit v-1 set iff value v in A

  int m() const;                // min A
  int M() const;                // max A^c
  int descent_position() const; // = |A^c|, 1-based position of the descent
  int deg() const;              // degree = M - m = gamma_i - gamma_{i+1}
  Permutation word() const;
  Permutation word_star() const;  // gamma_*: the unique element covered

  std::set<int> subset() const;

  static JoinIrreducible from_subset(int n, const std::set<int>& A);
  static JoinIrreducible from_mask(int n, uint16_t A);  // validates M > m
  static JoinIrreducible from_permutation(const Permutation& g);

  bool operator==(const JoinIrreducible&) const = default;
  auto operator<=>(const JoinIrreducible&) const = default;
};

// Spec-facing subset bijection on plain permutations.
Permutation ji_from_subset(const std::set<int>& A, int n);
std::set<int> subset_from_ji(const Permutation& g);

// lambda(x, i): the join-irreducible attached to the down-edge of x at
// descent i; contracting the edge is equivalent to contracting lambda(x,i).
JoinIrreducible lambda_ji(const Permutation& x, int i);

// Cover moves in the weak order (adjacent transpositions at ascents/descents).
std::vector<Permutation> covers_up(const Permutation& x);
std::vector<Permutation> covers_down(const Permutation& x);

// Lattice operations. join of the empty set is the identity, meet is w0
// (hence the explicit n). Joins are computed by transitively closing the
// union of inversion sets; meets by the antipodal symmetry.
Permutation join(const Permutation& x, const Permutation& y);
Permutation meet(const Permutation& x, const Permutation& y);
Permutation join(const std::vector<Permutation>& S, int n);
Permutation meet(const std::vector<Permutation>& S, int n);

// Reference route: scan all of S_n for minimal common upper bounds (resp.
// maximal lower bounds) and assert there is exactly one. O(n!).
Permutation join_via_search(const std::vector<Permutation>& S, int n);
Permutation meet_via_search(const std::vector<Permutation>& S, int n);

// Mobius function of the interval [x, y] in the weak order.
int64_t mobius_weak_order(const Permutation& x, const Permutation& y);

// The weak order on S_n, fully materialized: every permutation with its
// cover lists, indexed by Lehmer rank. Read-only after construction.
class WeakOrder {
public:
  explicit WeakOrder(int n);  // n <= 8

  int n() const { return n_; }
  int64_t size() const { return static_cast<int64_t>(elems_.size()); }
  const Permutation& perm(int64_t r) const { return elems_[r]; }
  int64_t rank(const Permutation& x) const;
  uint64_t inv(int64_t r) const { return inv_[r]; }
  bool leq(int64_t a, int64_t b) const { return (inv_[a] & ~inv_[b]) == 0; }
  const std::vector<int32_t>& covers_up(int64_t r) const { return up_[r]; }
  const std::vector<int32_t>& covers_down(int64_t r) const { return down_[r]; }

private:
  int n_;
  std::vector<Permutation> elems_;
  std::vector<uint64_t> inv_;
  std::vector<std::vector<int32_t>> up_, down_;
};

// Lehmer rank/unrank without materializing the lattice.
int64_t perm_rank(const Permutation& x);
Permutation perm_unrank(int n, int64_t r);

// JSON {"elements": [words], "covers": [[lo, hi]...]} of the weak order.
std::string poset_json(const WeakOrder& W);

// All join-irreducibles of S_n in canonical (subset-mask) order.
std::vector<JoinIrreducible> all_join_irreducibles(int n);

}  // namespace woq
