#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "woq/congruence.hpp"

namespace woq {

// A polyhedral cone in R^n cut out by coordinate comparisons p_a <= p_b
// (every cone of a braid-fan quotient has this form; normals are then
// +-(e_a - e_b)). Canonical form is the reflexive-transitive closure of the
// forced comparisons, so equality of cones is equality of closures. All
// queries are exact; no floating point anywhere.
class RationalCone {
public:
  // leq_pairs: (a, b) means p_a <= p_b on the cone, 1-based coordinates.
  RationalCone(int n, const std::vector<std::pair<int, int>>& leq_pairs);

  int ambient_dim() const { return n_; }
  int dim() const;            // #coordinate blocks
  int lineality_dim() const;  // dim of the largest subspace inside

  bool forces(int a, int b) const;  // p_a <= p_b holds on the cone
  bool same_block(int a, int b) const;
  // blocks of coordinates forced equal, each sorted, sorted by least element
  std::vector<std::vector<int>> blocks() const;

  bool contains(std::span<const long long> p) const;
  bool strictly_contains(std::span<const long long> p) const;  // relative interior

  RationalCone intersect(const RationalCone& o) const;
  bool subset_of(const RationalCone& o) const;
  bool is_face_of(const RationalCone& o) const;

  // Irredundant inward facet normals: one e_b - e_a per Hasse edge of the
  // block order (integer vectors of length n).
  std::vector<std::vector<long long>> facet_normals() const;

  // Extreme rays as canonical primitive integer vectors orthogonal to the
  // all-ones line. Requires the lineality space to be exactly that line.
  // Found by enumerating facet subsets and solving exactly.
  std::vector<std::vector<long long>> extreme_rays() const;

  bool operator==(const RationalCone& o) const { return n_ == o.n_ && leq_ == o.leq_; }
  bool operator<(const RationalCone& o) const { return leq_ < o.leq_; }

private:
  int n_;
  std::vector<uint16_t> leq_;  // leq_[a-1] = bitmask of b with p_a <= p_b forced
  void close();
};

// Chamber of the braid arrangement attached to a permutation: the points
// with p_{x_1} <= p_{x_2} <= ... <= p_{x_n}; its separating set is I(x).
RationalCone region_cone(const Permutation& x);

// Union of the chambers over a congruence class [pi_down x, pi_up x]:
// p_b <= p_a for (a,b) in I(bottom), p_a <= p_b for (a,b) not in I(top).
RationalCone class_cone(const Congruence& C, int class_id);

// Canonical primitive integer representative of the ray spanned by v modulo
// the all-ones line (direction preserved).
std::vector<long long> canonical_ray(std::span<const long long> v);

// A quotient fan: maximal cones indexed by congruence classes, plus (in
// faces mode) every face obtained by intersections. Construction verifies
// the fan axioms exactly: chambers partition into class cones, class cones
// equal the unions of their chambers, and pairwise intersections of maximal
// cones are faces of both.
class QuotientFan {
public:
  struct Face {
    RationalCone cone;
    int dim;
    std::vector<int> maximal_indices;  // maximal cones containing this face
  };

  static QuotientFan build(std::shared_ptr<const Congruence> cong, bool with_faces = true);

  const Congruence& congruence() const { return *cong_; }
  int n() const { return n_; }
  int lineality_dim() const { return lineality_dim_; }
  bool has_faces() const { return has_faces_; }
  const std::vector<RationalCone>& maximal() const { return maximal_; }
  const std::vector<Face>& faces() const { return faces_; }

  // pairs of maximal cones meeting in dimension n-1 (the dual 1-skeleton)
  std::vector<std::pair<int, int>> adjacency() const;

  // all extreme rays of the fan (union over maximal cones), lex-sorted
  std::vector<std::vector<long long>> rays_geometric() const;

  // face counts by dimension, from the geometric face list
  std::map<int, int64_t> face_census() const;

private:
  std::shared_ptr<const Congruence> cong_;
  int n_ = 0;
  int lineality_dim_ = 0;
  bool has_faces_ = false;
  std::vector<RationalCone> maximal_;
  std::vector<Face> faces_;
};

// Prop-"rays" combinatorial ray set: one ray per facet hyperplane of the
// base chamber plus one per join-irreducible gamma with pi_up(gamma) =
// gamma, realized as explicit vectors. Errors if Theta contracts an atom.
std::vector<std::vector<long long>> rays(const Congruence& C);

// dim of the intersection of all maximal cones, computed exactly.
int fan_lineality_dim(const Congruence& C);

// Counting condition of the simpliciality criterion: for every class,
// #covers below the bottom plus #covers above the top equals
// n - dim(intersection of the fan). Combinatorial only.
bool is_simplicial(const Congruence& C);

// f- and h-vectors of the associated sphere. f excludes f_{-1} = 1 and runs
// over cone dimensions lineality+1 .. n; h comes from the polynomial
// identity. Combinatorial route via atomic intervals of the quotient.
struct FanVectors {
  int d = 0;  // n - lineality_dim
  std::vector<int64_t> f;
  std::vector<int64_t> h;
};
FanVectors fh_vectors(const QuotientPoset& Q);
std::vector<int64_t> f_vector(const Congruence& C);
std::vector<int64_t> h_vector(const Congruence& C);
// simplicial-only route: h_i = #elements covering exactly i elements
std::vector<int64_t> h_from_cover_counts(const QuotientPoset& Q);

// Structured report of the fan-poset property checks.
struct FanReport {
  struct Item {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass() const;
  std::string summary() const;
};

// Runs: (a) 1-skeleton = Hasse diagram, oriented by b = (n, n-1, ..., 1);
// (b) Mobius values from atomic intervals; (c) atomic-facial with geometric
// cross-check; (d) Dehn-Sommerville; (e) shelling condition (ii) on seeded
// linear extensions; (f) flagness; (g) bisimpliciality wrt b. Geometric
// parts need n <= 5; (d)-(f) are skipped for non-simplicial fans.
FanReport check_fan_poset_properties(std::shared_ptr<const Congruence> cong,
                                     uint64_t seed = 5489, int num_extensions = 3);

// {"n", "lineality_dim", "rays", "maximal_cones", "f_vector", "h_vector"},
// rays lex-sorted, maximal cones in class order with sorted ray indices.
std::string fan_json(std::shared_ptr<const Congruence> cong);

}  // namespace woq
