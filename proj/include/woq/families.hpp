#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "woq/congruence.hpp"

namespace woq {

// A family of congruences across all n, generated by a set C of untranslated
// join-irreducibles: Tr(C) contracts all translates of C; H(C) is the
// smallest translational-and-insertional (Hopf) family containing them.
struct FamilySpec {
  enum class Kind { Tr, H };
  Kind kind = Kind::H;
  std::vector<Permutation> generators;  // untranslated join-irreducibles

  static FamilySpec tr(std::vector<Permutation> gens);
  static FamilySpec h(std::vector<Permutation> gens);
  bool operator==(const FamilySpec&) const = default;
  std::string str() const;
};

// Named example families. Accepted names: "trivial", "full", "tamari",
// "tamari231", "descent", "twisted-baxter", "snk <k>", "pnk <k>"
// (also "snk-k"/"pnk-k"). Unknown names throw.
FamilySpec named_family(const std::string& name);

// Comma-separated one-line words, e.g. "2413,3412" -> H of those generators.
std::vector<Permutation> parse_generators(const std::string& csv);

// All untranslated join-irreducibles of S_k (subsets with m = 1, M = k).
std::vector<Permutation> untranslated_jis(int k);

// Insertion operators on join-irreducibles, i in [1, n+1]. Left inserts i
// into the ascending prefix (the A^c run), right into the ascending suffix
// (the A run); entries >= i are shifted up first.
JoinIrreducible left_insert(const JoinIrreducible& g, int i);
JoinIrreducible right_insert(const JoinIrreducible& g, int i);
Permutation left_insert(const Permutation& g, int i);
Permutation right_insert(const Permutation& g, int i);

// Elements covered by an untranslated g in Tr_infinity / H_infinity
// (duplicates coalesced, sorted).
std::vector<Permutation> tr_covers(const Permutation& g);
std::vector<Permutation> h_covers(const Permutation& g);

// The contracted join-irreducible set of the family's congruence on S_n:
// for H, everything containing a generator as a pattern; for Tr, the forcing
// ideal of all generator translates.
std::vector<JoinIrreducible> contracted_jis(const FamilySpec& spec, int n);

// H-families only: x is contracted iff some scramble of some generator
// occurs in x with adjacent cliff, iff x is not a class bottom.
bool is_contracted_perm(const FamilySpec& spec, const Permutation& x);
bool is_contracted_word(const FamilySpec& spec, std::span<const int> x);

// H-families only: repeatedly transpose the cliff pair of the leftmost
// cliff-adjacent scramble occurrence; the fixed point is pi_down(x).
Permutation pi_down_fast(const FamilySpec& spec, const Permutation& x);

// Family-wide definitional checks, fed by congruences for n = 0..N (the
// callable lets tests feed deliberately broken families).
using CongruenceProvider = std::function<const Congruence&(int)>;
bool is_translational(const CongruenceProvider& family, int N);
bool is_insertional(const CongruenceProvider& family, int N);

// Pattern predicates of section-9 flavor. Twisted Baxter: no 2413- or
// 3412-pattern whose "4" and "1" sit in adjacent positions. Baxter: no
// cliff-adjacent 2413 and no 3142 with the "1","4" adjacent.
bool twisted_baxter(std::span<const int> x);
bool baxter(std::span<const int> x);
inline bool twisted_baxter(const Permutation& x) { return twisted_baxter(x.span()); }
inline bool baxter(const Permutation& x) { return baxter(x.span()); }

// A family spec plus memoized per-n congruences (single-writer cell).
class FamilyContext {
public:
  explicit FamilyContext(FamilySpec spec);

  const FamilySpec& spec() const { return spec_; }
  std::shared_ptr<const Congruence> congruence(int n) const;  // n <= 8

  // Number of class bottoms of the congruence on S_n. H-families count by
  // the pattern predicate alone (no lattice build), so n up to 12 works;
  // Tr-families materialize and are capped at n <= 8.
  int64_t count_bottoms(int n, int threads = 1) const;
  std::vector<Permutation> bottoms(int n) const;  // via predicate for H
  bool is_bottom(const Permutation& x) const;

private:
  FamilySpec spec_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const Congruence>> memo_;
};

}  // namespace woq
