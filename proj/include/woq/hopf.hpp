#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "woq/families.hpp"

namespace woq {

using Rational = mpq_class;

// Finitely supported rational combination of permutations across all
// degrees. Zero coefficients are pruned, so equality is structural.
class GradedVector {
public:
  GradedVector() = default;
  explicit GradedVector(const Permutation& x, Rational c = 1) { add(x, c); }

  void add(const Permutation& x, const Rational& c);
  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  GradedVector operator*(const Rational& c) const;
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  Rational coeff(const Permutation& x) const;
  const std::map<Permutation, Rational>& terms() const { return terms_; }

  bool operator==(const GradedVector&) const = default;
  std::string str() const;
  std::string to_json() const;

private:
  std::map<Permutation, Rational> terms_;
};

// Finitely supported rational combination of ordered pairs (tensors).
class TensorVector {
public:
  using Key = std::pair<Permutation, Permutation>;

  TensorVector() = default;
  void add(const Permutation& a, const Permutation& b, const Rational& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  bool operator==(const TensorVector&) const = default;
  std::string str() const;
  std::string to_json() const;

private:
  std::map<Key, Rational> terms_;
};

// Shuffle product of basis permutations: the sum over the weak-order
// interval [u x v, u |x v], i.e. all shuffles of u and v shifted.
GradedVector mr_product(const Permutation& u, const Permutation& v);
GradedVector mr_product(const GradedVector& a, const GradedVector& b);

// Sum over the interval route (reference; equals mr_product).
GradedVector mr_product_interval(const Permutation& u, const Permutation& v);

// Delta_S: all n+1 standardized splits.
TensorVector mr_coproduct(const Permutation& x);
TensorVector mr_coproduct(const GradedVector& a);

struct AxiomReport {
  bool pass = true;
  std::vector<std::string> failures;  // localized: first offending inputs
  std::string summary() const;
};

// Hopf-algebra view of either the Malvenuto-Reutenauer algebra itself or the
// quotient attached to a family of congruences, on the basis of class
// bottoms. Quotient products are computed along both routes of the spec
// (direct bottom sum vs r(c x c)) and must agree; a mismatch throws.
class HopfAlgebra {
public:
  static HopfAlgebra malvenuto_reutenauer();
  static HopfAlgebra quotient(std::shared_ptr<const FamilyContext> family);

  bool is_quotient() const { return family_ != nullptr; }
  const FamilyContext& family() const { return *family_; }

  bool is_basis(const Permutation& x) const;
  std::vector<Permutation> basis(int degree) const;

  GradedVector c_map(const Permutation& bottom) const;  // class sum
  GradedVector c_map(const GradedVector& v) const;
  GradedVector r_map(const GradedVector& v) const;      // kill non-bottoms

  GradedVector product(const Permutation& u, const Permutation& v) const;
  GradedVector product(const GradedVector& a, const GradedVector& b) const;
  TensorVector coproduct(const Permutation& x) const;
  TensorVector coproduct(const GradedVector& a) const;
  GradedVector antipode(const Permutation& x) const;
  GradedVector antipode(const GradedVector& a) const;

  // coproduct via the rearranged triple sum over (p, value split, u, v);
  // test oracle for the Delta_Z formula.
  TensorVector coproduct_triple_sum(const Permutation& x) const;

  Rational counit(const GradedVector& v) const;

  // Verifies associativity, unit, coassociativity, counit, bialgebra
  // compatibility and the antipode identity on all basis elements up to
  // max_degree (pairs/triples bounded by total degree).
  AxiomReport check_axioms(int max_degree) const;

private:
  struct AntipodeCache;

  HopfAlgebra();
  std::shared_ptr<const FamilyContext> family_;  // null = MR
  std::shared_ptr<AntipodeCache> cache_;         // MR antipode memo

  GradedVector mr_antipode(const Permutation& x) const;
};

}  // namespace woq
