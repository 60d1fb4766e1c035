#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "woq/weak_order.hpp"

namespace woq {

// Shared, cached weak-order lattices (read-only once built).
std::shared_ptr<const WeakOrder> weak_order(int n);

// The forcing order Irr(Con(S_n)) on join-irreducibles. gamma1 -> gamma2
// means contracting gamma1 forces contracting gamma2, i.e. gamma2 <= gamma1;
// contracted sets of congruences are exactly the order ideals. Built from
// the two-case arrow rule; the four-case cover rule is checked against it
// at construction (their transitive closures must agree).
class IrrConOrder {
public:
  explicit IrrConOrder(int n);  // n <= 9

  int n() const { return n_; }
  const std::vector<JoinIrreducible>& elements() const { return elems_; }
  int index(const JoinIrreducible& g) const;

  bool arrow(const JoinIrreducible& g1, const JoinIrreducible& g2) const;
  std::vector<JoinIrreducible> covers(const JoinIrreducible& g) const;

  bool leq(const JoinIrreducible& lo, const JoinIrreducible& hi) const;
  bool is_ideal(const std::vector<JoinIrreducible>& J) const;
  std::vector<JoinIrreducible> ideal(const std::vector<JoinIrreducible>& gens) const;

private:
  int n_;
  std::vector<JoinIrreducible> elems_;
  std::vector<int> idx_by_mask_;           // subset mask -> element index (-1 absent)
  std::vector<std::vector<uint64_t>> below_;  // bitset row i = { j : elems_[j] <= elems_[i] }
};

const IrrConOrder& irr_con_order(int n);  // cached

// The order ideal of Irr(Con(S_n)) generated by the given join-irreducibles:
// the contracted set of the smallest congruence contracting the generators.
std::vector<JoinIrreducible> forcing_ideal(int n, const std::vector<JoinIrreducible>& gens);

// A lattice congruence on S_n, stored as the full class partition plus the
// projections pi_down / pi_up and the contracted join-irreducible set.
// Immutable once built; every factory verifies the order-congruence axioms
// (classes are intervals, projections order-preserving) before returning.
class Congruence {
public:
  struct ClassRec {
    int64_t bottom, top;            // lattice ranks
    std::vector<int64_t> members;   // sorted by (length, word)
  };

  // Fixed-point closure of the generated equivalence under
  // x=y  =>  x v z = y v z and x ^ z = y ^ z. Generators must be cover pairs.
  static Congruence closure_bruteforce(
      int n, const std::vector<std::pair<Permutation, Permutation>>& generator_pairs);

  // Classes = components of the contracted-edge graph, where the edge at
  // descent i of x is contracted iff lambda(x,i) lies in J. J must be an
  // order ideal of Irr(Con(S_n)); passing a non-ideal is a caller error.
  static Congruence from_contracted(int n, const std::vector<JoinIrreducible>& J);

  static Congruence trivial(int n);                       // all classes singletons
  static Congruence parabolic(int n, const std::set<int>& K);  // fibers of x -> x_K

  static Congruence meet(const Congruence& a, const Congruence& b);
  static Congruence join(const Congruence& a, const Congruence& b);

  int n() const { return n_; }
  const WeakOrder& lattice() const { return *W_; }
  std::shared_ptr<const WeakOrder> lattice_ptr() const { return W_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<ClassRec>& classes() const { return classes_; }
  int class_id_by_rank(int64_t r) const { return class_of_[r]; }
  int class_id(const Permutation& x) const { return class_of_[W_->rank(x)]; }

  Permutation pi_down(const Permutation& x) const;
  Permutation pi_up(const Permutation& x) const;
  bool is_bottom(const Permutation& x) const;
  bool same_class(const Permutation& x, const Permutation& y) const;

  std::vector<Permutation> bottoms() const;  // sorted by (length, word)
  const std::vector<JoinIrreducible>& contracted() const { return contracted_; }
  bool contracts(const JoinIrreducible& g) const;

  bool refines(const Congruence& coarser) const;

  // Exhaustive (n <= 6) or seeded-sample verification that the partition
  // respects joins and meets: for contracted edges x<y and test elements z,
  // x v z = y v z and x ^ z = y ^ z. Throws internal_error on violation.
  void verify_compatibility(uint64_t seed = 0, int64_t samples = 0) const;

  // {"n": n, "classes": [[words...]...]}, classes sorted by bottom word.
  std::string to_json() const;

private:
  Congruence() = default;
  static Congruence finalize(int n, std::vector<int32_t> class_of);

  int n_ = 0;
  std::shared_ptr<const WeakOrder> W_;
  std::vector<int32_t> class_of_;     // rank -> class id
  std::vector<ClassRec> classes_;
  std::vector<JoinIrreducible> contracted_;
};

// The quotient poset S_n / Theta realized on class bottoms (an induced
// subposet of the weak order). Covers come from the cover correspondence:
// classes covered by [x] biject with elements covered by pi_down(x).
class QuotientPoset {
public:
  explicit QuotientPoset(std::shared_ptr<const Congruence> cong);

  const Congruence& congruence() const { return *cong_; }
  int size() const { return static_cast<int>(bottoms_.size()); }
  const Permutation& element(int i) const { return perms_[i]; }
  int index_of(const Permutation& bottom) const;
  int index_of_class(int class_id) const { return class_to_idx_[class_id]; }

  bool leq(int a, int b) const { return (invs_[a] & ~invs_[b]) == 0; }
  const std::vector<int>& covers_up(int i) const { return up_[i]; }
  const std::vector<int>& covers_down(int i) const { return down_[i]; }
  int bottom_index() const { return 0; }
  int top_index() const;

  int join_index(int a, int b) const;       // pi_down of the weak-order join
  int join_index(const std::vector<int>& S) const;

  // atoms of the interval [a,b]; returns false if a !<= b
  bool interval(int a, int b, std::vector<int>* atoms_out) const;
  bool interval_atomic(int a, int b, int* num_atoms) const;

  // Full Mobius matrix; mu[a][b] for a <= b, 0 otherwise.
  std::vector<std::vector<int64_t>> mobius_matrix() const;
  int64_t mobius(int a, int b) const;

  // covers computed directly in the induced subposet (reference route)
  std::vector<int> covers_down_by_search(int i) const;

private:
  std::shared_ptr<const Congruence> cong_;
  std::vector<int64_t> bottoms_;   // lattice ranks, sorted by (length, word)
  std::vector<Permutation> perms_;
  std::vector<uint64_t> invs_;
  std::vector<int> class_to_idx_;
  std::vector<std::vector<int>> up_, down_;
};

}  // namespace woq
