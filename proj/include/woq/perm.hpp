#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "woq/util.hpp"

namespace woq {

// A permutation of [n] in one-line notation, values 1..n. The empty
// permutation (n = 0) is a first-class value; it is the unit of the
// Malvenuto-Reutenauer algebra. Immutable after construction.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);  // w0 = n(n-1)...1
  // One-line digits for n <= 9 ("2413"), comma-separated otherwise.
  static Permutation parse(std::string_view s);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  // 1-based position access: (*this)[i] = x_i.
  int operator[](int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }
  std::span<const int> span() const { return word_; }

  std::string str() const;

  bool operator==(const Permutation&) const = default;
  // Canonical order: by size, then lexicographically on the word.
  std::strong_ordering operator<=>(const Permutation& o) const {
    if (auto c = word_.size() <=> o.word_.size(); c != 0) return c;
    for (size_t i = 0; i < word_.size(); ++i)
      if (auto c = word_[i] <=> o.word_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

private:
  std::vector<int> word_;
};

std::string word_str(std::span<const int> w);

// --- inversion sets -------------------------------------------------------
//
// Inversion pairs are stored as (smaller value, larger value). Bit-indexed
// masks over the value pairs make subset tests (weak-order comparisons) one
// word operation for n <= 11, which bounds everything this project builds.

constexpr int kMaxMaskN = 11;

constexpr int pair_bit(int a, int b) {  // requires 1 <= a < b <= 11
  return (b - 1) * (b - 2) / 2 + (a - 1);
}

uint64_t inv_mask(std::span<const int> w);
inline uint64_t inv_mask(const Permutation& x) { return inv_mask(x.span()); }

// All pairs (a,b), a<b, with b preceding a in the word. Size = length l(x).
std::set<std::pair<int, int>> inversion_set(const Permutation& x);
int length(const Permutation& x);

// x <= y in (right) weak order iff I(x) is a subset of I(y).
bool weak_leq(const Permutation& x, const Permutation& y);

// --- basic operations -----------------------------------------------------

Permutation standardize(std::span<const int> seq);

// composition (x*y)(i) = x(y(i)) and inverse
Permutation compose(const Permutation& x, const Permutation& y);
Permutation inverse(const Permutation& x);

// 1-based positions i with x_i > x_{i+1} (resp. x_i < x_{i+1}).
std::vector<int> descents(const Permutation& x);
std::vector<int> ascents(const Permutation& x);

// Pattern containment: some subsequence of x standardizes to y.
bool occurs(const Permutation& y, const Permutation& x);

// Cliff at j means y_j = k, y_{j+1} = 1 for y in S_k. Returns 0 if none.
int cliff_position(std::span<const int> y);
inline int cliff_position(const Permutation& y) { return cliff_position(y.span()); }

// y must have a cliff; true iff some occurrence of y in x places the cliff
// pair in adjacent positions of x.
bool occurs_with_adjacent_cliff(const Permutation& y, const Permutation& x);

// x is untranslated iff x_1 > 1 and x_n < n; for join-irreducibles this is
// equivalent to having a cliff.
bool is_untranslated(const Permutation& x);
bool is_join_irreducible_perm(const Permutation& x);  // exactly one descent
bool is_untranslated_ji(const Permutation& x);

// All scrambles of an untranslated join-irreducible g with cliff at j:
// permutations sigma with sigma_j = k, sigma_{j+1} = 1 and the same set of
// entries before the cliff (both sides reordered freely).
std::vector<Permutation> scrambles(const Permutation& g);

// u x v and u |x v, the bottom and top of the parabolic congruence class
// indexed by (u, v); u x v <= u |x v in weak order.
Permutation times(const Permutation& u, const Permutation& v);
Permutation ltimes(const Permutation& u, const Permutation& v);

enum class Side { Left, Right };

// Parabolic factorization. K is a subset of [n-1] naming adjacent
// transpositions. Left: x = x_K * Kx with x_K in (S_n)_K, l additive and
// l(x_K) maximal; returns (x_K, Kx). Right: x = xK * x_K; returns (x_K, xK).
std::pair<Permutation, Permutation> parabolic_factor(const Permutation& x,
                                                     const std::set<int>& K,
                                                     Side side);

// supp(x): minimal K with x in (S_n)_K; degree = |supp|.
std::set<int> supp(const Permutation& x);
int degree(const Permutation& x);

}  // namespace woq
