#include "woq/congruence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "json.hpp"

namespace woq {

std::shared_ptr<const WeakOrder> weak_order(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const WeakOrder>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_shared<WeakOrder>(n)).first;
  return it->second;
}

// --- IrrConOrder ------------------------------------------------------------

IrrConOrder::IrrConOrder(int n) : n_(n) {
  require_capacity(n >= 1 && n <= 9, "irr_con_order limited to n <= 9");
  elems_ = all_join_irreducibles(n);
  idx_by_mask_.assign(1u << n, -1);
  for (size_t i = 0; i < elems_.size(); ++i) idx_by_mask_[elems_[i].A] = static_cast<int>(i);

  const size_t m = elems_.size();
  const size_t words = (m + 63) / 64;
  // reach from the two-case arrow rule
  std::vector<std::vector<uint64_t>> reach(m, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < m; ++i) {
    reach[i][i / 64] |= 1ULL << (i % 64);
    for (size_t j = 0; j < m; ++j)
      if (i != j && arrow(elems_[i], elems_[j])) reach[i][j / 64] |= 1ULL << (j % 64);
  }
  auto close = [&](std::vector<std::vector<uint64_t>>& R) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
          if (R[i][j / 64] & (1ULL << (j % 64)))
            for (size_t w = 0; w < words; ++w) {
              const uint64_t add = R[j][w] & ~R[i][w];
              if (add) { R[i][w] |= add; changed = true; }
            }
    }
  };
  close(reach);

  // cover rule closure must agree
  std::vector<std::vector<uint64_t>> reach2(m, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < m; ++i) {
    reach2[i][i / 64] |= 1ULL << (i % 64);
    for (const auto& c : covers(elems_[i])) {
      const int j = index(c);
      reach2[i][j / 64] |= 1ULL << (j % 64);
    }
  }
  close(reach2);
  WOQ_CHECK(reach == reach2, "Irr(Con) arrow rule and cover rule closures disagree");

  // below_[i] = everything forced by contracting elems_[i] = reach rows
  below_ = std::move(reach);
}

int IrrConOrder::index(const JoinIrreducible& g) const {
  require(g.n == n_, "IrrConOrder: wrong n");
  const int i = idx_by_mask_[g.A];
  require(i >= 0, "IrrConOrder: not a join-irreducible subset");
  return i;
}

bool IrrConOrder::arrow(const JoinIrreducible& g1, const JoinIrreducible& g2) const {
  const int m1 = g1.m(), M1 = g1.M();
  const int m2 = g2.m(), M2 = g2.M();
  const uint32_t full = (1u << n_) - 1;
  // (i) A1 and A2 agree on [1, M1) and M2 > M1
  const uint32_t lowmask = (1u << (M1 - 1)) - 1;
  if (M2 > M1 && (g1.A & lowmask) == (g2.A & lowmask)) return true;
  // (ii) A1 and A2 agree on (m1, n] and m2 < m1
  const uint32_t highmask = full & ~((1u << m1) - 1);
  if (m2 < m1 && (g1.A & highmask) == (g2.A & highmask)) return true;
  return false;
}

std::vector<JoinIrreducible> IrrConOrder::covers(const JoinIrreducible& g) const {
  const int m = g.m(), M = g.M();
  std::vector<uint16_t> cand;
  if (M < n_) {
    cand.push_back(static_cast<uint16_t>(g.A & ~(1u << M)));                    // A - {M+1}
    cand.push_back(static_cast<uint16_t>((g.A & ~(1u << M)) | (1u << (M - 1))));  // + {M}
  }
  if (m > 1) {
    cand.push_back(static_cast<uint16_t>(g.A | (1u << (m - 2))));               // A + {m-1}
    cand.push_back(static_cast<uint16_t>((g.A | (1u << (m - 2))) & ~(1u << (m - 1))));
  }
  std::vector<JoinIrreducible> out;
  for (uint16_t A : cand) {
    if (A == g.A || A == 0) continue;
    const int i = idx_by_mask_[A];
    WOQ_CHECK(i >= 0, "cover rule produced a non-join-irreducible subset");
    if (!std::count(out.begin(), out.end(), elems_[i])) out.push_back(elems_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IrrConOrder::leq(const JoinIrreducible& lo, const JoinIrreducible& hi) const {
  const int i = index(hi), j = index(lo);
  return below_[i][j / 64] & (1ULL << (j % 64));
}

bool IrrConOrder::is_ideal(const std::vector<JoinIrreducible>& J) const {
  std::vector<char> in(elems_.size(), 0);
  for (const auto& g : J) in[index(g)] = 1;
  for (const auto& g : J) {
    const int i = index(g);
    for (size_t j = 0; j < elems_.size(); ++j)
      if ((below_[i][j / 64] & (1ULL << (j % 64))) && !in[j]) return false;
  }
  return true;
}

std::vector<JoinIrreducible> IrrConOrder::ideal(const std::vector<JoinIrreducible>& gens) const {
  std::vector<char> in(elems_.size(), 0);
  for (const auto& g : gens) {
    const int i = index(g);
    for (size_t j = 0; j < elems_.size(); ++j)
      if (below_[i][j / 64] & (1ULL << (j % 64))) in[j] = 1;
  }
  std::vector<JoinIrreducible> out;
  for (size_t j = 0; j < elems_.size(); ++j)
    if (in[j]) out.push_back(elems_[j]);
  return out;
}

const IrrConOrder& irr_con_order(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<IrrConOrder>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<IrrConOrder>(n)).first;
  return *it->second;
}

std::vector<JoinIrreducible> forcing_ideal(int n, const std::vector<JoinIrreducible>& gens) {
  return irr_con_order(n).ideal(gens);
}

// --- mask-level join/meet (no allocation) -----------------------------------

namespace {

uint64_t join_mask(int n, uint64_t a, uint64_t b) {
  uint64_t E = a | b;
  uint32_t reach[12] = {0};
  for (int v = n; v >= 1; --v) {
    uint32_t r = 0;
    for (int w = v + 1; w <= n; ++w)
      if (E & (1ULL << pair_bit(v, w))) r |= (1u << (w - 1)) | reach[w];
    reach[v] = r;
  }
  uint64_t T = 0;
  for (int v = 1; v <= n; ++v)
    for (int w = v + 1; w <= n; ++w)
      if (reach[v] & (1u << (w - 1))) T |= 1ULL << pair_bit(v, w);
  return T;
}

uint64_t full_mask(int n) {
  uint64_t f = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) f |= 1ULL << pair_bit(a, b);
  return f;
}

uint64_t meet_mask(int n, uint64_t a, uint64_t b) {
  const uint64_t f = full_mask(n);
  return f ^ join_mask(n, f ^ a, f ^ b);
}

// Reconstructs the word of the (biclosed) inversion mask and ranks it.
int64_t rank_of_inv_mask(int n, uint64_t T) {
  int w[12];
  for (int a = 1; a <= n; ++a) {
    int pos = 0;
    for (int b = 1; b < a; ++b)
      if (!(T & (1ULL << pair_bit(b, a)))) ++pos;
    for (int b = a + 1; b <= n; ++b)
      if (T & (1ULL << pair_bit(a, b))) ++pos;
    w[pos] = a;
  }
  int64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int j = i + 1; j < n; ++j)
      if (w[j] < w[i]) ++c;
    r += c * factorial(n - 1 - i);
  }
  return r;
}

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(int64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int32_t a, int32_t b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

// --- Congruence --------------------------------------------------------------

Congruence Congruence::finalize(int n, std::vector<int32_t> class_of) {
  Congruence c;
  c.n_ = n;
  c.W_ = weak_order(n);
  const WeakOrder& W = *c.W_;
  const int64_t N = W.size();
  WOQ_CHECK(static_cast<int64_t>(class_of.size()) == N, "partition size");

  // relabel class ids in order of first appearance of their bottoms later;
  // first group members
  std::map<int32_t, std::vector<int64_t>> groups;
  for (int64_t r = 0; r < N; ++r) groups[class_of[r]].push_back(r);

  auto len_of = [&](int64_t r) { return std::popcount(W.inv(r)); };

  std::vector<ClassRec> recs;
  recs.reserve(groups.size());
  for (auto& [id, members] : groups) {
    std::sort(members.begin(), members.end(), [&](int64_t a, int64_t b) {
      const int la = len_of(a), lb = len_of(b);
      return la != lb ? la < lb : W.perm(a) < W.perm(b);
    });
    ClassRec rec;
    rec.bottom = members.front();
    rec.top = members.back();
    rec.members = std::move(members);
    recs.push_back(std::move(rec));
  }
  // canonical class order: by bottom (length, word)
  std::sort(recs.begin(), recs.end(), [&](const ClassRec& a, const ClassRec& b) {
    const int la = len_of(a.bottom), lb = len_of(b.bottom);
    return la != lb ? la < lb : W.perm(a.bottom) < W.perm(b.bottom);
  });
  c.classes_ = std::move(recs);
  c.class_of_.assign(N, -1);
  for (size_t i = 0; i < c.classes_.size(); ++i)
    for (int64_t r : c.classes_[i].members) c.class_of_[r] = static_cast<int32_t>(i);

  // every class is exactly the interval [bottom, top]: members sit inside it,
  // bottom/top are strict, and an upward walk from the bottom confined to
  // <= top visits the class and nothing else
  for (size_t ci = 0; ci < c.classes_.size(); ++ci) {
    const auto& rec = c.classes_[ci];
    if (rec.members.size() >= 2) {
      WOQ_CHECK(len_of(rec.members[1]) > len_of(rec.bottom), "class bottom not unique");
      WOQ_CHECK(len_of(rec.members[rec.members.size() - 2]) < len_of(rec.top),
                "class top not unique");
    }
    for (int64_t r : rec.members)
      WOQ_CHECK(W.leq(rec.bottom, r) && W.leq(r, rec.top),
                "congruence class member outside [bottom, top]");
    std::vector<int64_t> stack{rec.bottom};
    std::set<int64_t> seen{rec.bottom};
    size_t visited = 0;
    while (!stack.empty()) {
      const int64_t r = stack.back();
      stack.pop_back();
      WOQ_CHECK(c.class_of_[r] == static_cast<int32_t>(ci),
                "congruence class is not an interval");
      ++visited;
      for (int32_t s : W.covers_up(r))
        if (W.leq(s, rec.top) && seen.insert(s).second) stack.push_back(s);
    }
    WOQ_CHECK(visited == rec.members.size(), "congruence class is not an interval");
  }

  // pi_down / pi_up order-preserving on cover edges
  for (int64_t r = 0; r < N; ++r) {
    const int32_t cr = c.class_of_[r];
    for (int32_t s : W.covers_up(r)) {
      const int32_t cs = c.class_of_[s];
      WOQ_CHECK(W.leq(c.classes_[cr].bottom, c.classes_[cs].bottom), "pi_down not order-preserving");
      WOQ_CHECK(W.leq(c.classes_[cr].top, c.classes_[cs].top), "pi_up not order-preserving");
    }
  }

  // contracted join-irreducibles: gamma = gamma_*
  for (const auto& g : all_join_irreducibles(n)) {
    const int64_t a = W.rank(g.word()), b = W.rank(g.word_star());
    if (c.class_of_[a] == c.class_of_[b]) c.contracted_.push_back(g);
  }
  if (n <= 9) WOQ_CHECK(irr_con_order(n).is_ideal(c.contracted_), "contracted set is not an ideal");
  return c;
}

Congruence Congruence::closure_bruteforce(
    int n, const std::vector<std::pair<Permutation, Permutation>>& generator_pairs) {
  require_capacity(n >= 1 && n <= 7, "closure_bruteforce limited to n <= 7");
  auto Wp = weak_order(n);
  const WeakOrder& W = *Wp;
  const int64_t N = W.size();
  UnionFind uf(N);
  std::vector<std::pair<int64_t, int64_t>> work;
  for (const auto& [x, y] : generator_pairs) {
    require(x.size() == n && y.size() == n, "closure: generators must lie in S_n");
    const uint64_t ix = inv_mask(x), iy = inv_mask(y);
    const bool cover = (ix & ~iy) == 0 && std::popcount(iy) == std::popcount(ix) + 1;
    const bool cover_rev = (iy & ~ix) == 0 && std::popcount(ix) == std::popcount(iy) + 1;
    require(cover || cover_rev, "closure: generator pairs must be cover pairs");
    if (uf.unite(static_cast<int32_t>(W.rank(x)), static_cast<int32_t>(W.rank(y))))
      work.emplace_back(W.rank(x), W.rank(y));
  }
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    const uint64_t ia = W.inv(a), ib = W.inv(b);
    for (int64_t z = 0; z < N; ++z) {
      const uint64_t iz = W.inv(z);
      const int64_t j1 = rank_of_inv_mask(n, join_mask(n, ia, iz));
      const int64_t j2 = rank_of_inv_mask(n, join_mask(n, ib, iz));
      if (uf.unite(static_cast<int32_t>(j1), static_cast<int32_t>(j2))) work.emplace_back(j1, j2);
      const int64_t m1 = rank_of_inv_mask(n, meet_mask(n, ia, iz));
      const int64_t m2 = rank_of_inv_mask(n, meet_mask(n, ib, iz));
      if (uf.unite(static_cast<int32_t>(m1), static_cast<int32_t>(m2))) work.emplace_back(m1, m2);
    }
  }
  std::vector<int32_t> class_of(N);
  for (int64_t r = 0; r < N; ++r) class_of[r] = uf.find(static_cast<int32_t>(r));
  return finalize(n, std::move(class_of));
}

Congruence Congruence::from_contracted(int n, const std::vector<JoinIrreducible>& J) {
  require_capacity(n >= 1 && n <= 8, "from_contracted limited to n <= 8");
  require(irr_con_order(n).is_ideal(J),
          "from_contracted: J must be an order ideal of Irr(Con(S_n))");
  auto Wp = weak_order(n);
  const WeakOrder& W = *Wp;
  const int64_t N = W.size();
  std::vector<char> in_J(1u << n, 0);
  for (const auto& g : J) {
    require(g.n == n, "from_contracted: wrong n");
    in_J[g.A] = 1;
  }
  UnionFind uf(N);
  for (int64_t r = 0; r < N; ++r) {
    const Permutation& x = W.perm(r);
    for (int i = 1; i < n; ++i) {
      if (x[i] > x[i + 1]) {
        uint16_t A = 0;
        for (int j = 1; j <= i; ++j)
          if (x[j] > x[i]) A |= 1u << (x[j] - 1);
        for (int j = i + 1; j <= n; ++j)
          if (x[j] >= x[i + 1]) A |= 1u << (x[j] - 1);
        if (in_J[A]) {
          std::vector<int> w = x.word();
          std::swap(w[i - 1], w[i]);
          uf.unite(static_cast<int32_t>(r), static_cast<int32_t>(W.rank(Permutation(std::move(w)))));
        }
      }
    }
  }
  std::vector<int32_t> class_of(N);
  for (int64_t r = 0; r < N; ++r) class_of[r] = uf.find(static_cast<int32_t>(r));
  Congruence c = finalize(n, std::move(class_of));
  // the congruence determined by an ideal contracts exactly that ideal
  std::set<uint16_t> got;
  for (const auto& g : c.contracted_) got.insert(g.A);
  std::set<uint16_t> want;
  for (const auto& g : J) want.insert(g.A);
  WOQ_CHECK(got == want, "from_contracted: contracted set mismatch");
  return c;
}

Congruence Congruence::trivial(int n) { return from_contracted(n, {}); }

Congruence Congruence::parabolic(int n, const std::set<int>& K) {
  require_capacity(n >= 1 && n <= 8, "parabolic limited to n <= 8");
  auto Wp = weak_order(n);
  const WeakOrder& W = *Wp;
  const int64_t N = W.size();
  std::vector<int32_t> class_of(N);
  std::map<Permutation, int32_t> ids;
  for (int64_t r = 0; r < N; ++r) {
    const auto xK = parabolic_factor(W.perm(r), K, Side::Left).first;
    class_of[r] = ids.emplace(xK, static_cast<int32_t>(ids.size())).first->second;
  }
  return finalize(n, std::move(class_of));
}

Congruence Congruence::meet(const Congruence& a, const Congruence& b) {
  require(a.n() == b.n(), "meet: mismatched n");
  const int64_t N = a.W_->size();
  std::vector<int32_t> class_of(N);
  std::map<std::pair<int32_t, int32_t>, int32_t> ids;
  for (int64_t r = 0; r < N; ++r) {
    const auto key = std::make_pair(a.class_of_[r], b.class_of_[r]);
    class_of[r] = ids.emplace(key, static_cast<int32_t>(ids.size())).first->second;
  }
  Congruence c = finalize(a.n(), std::move(class_of));
  // Con(L) is distributive; contracted(meet) = intersection of contracted sets
  std::set<uint16_t> ca, cb, cc;
  for (const auto& g : a.contracted_) ca.insert(g.A);
  for (const auto& g : b.contracted_) cb.insert(g.A);
  for (const auto& g : c.contracted_) cc.insert(g.A);
  std::set<uint16_t> expect;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                        std::inserter(expect, expect.begin()));
  WOQ_CHECK(cc == expect, "meet: contracted set is not the intersection");
  return c;
}

Congruence Congruence::join(const Congruence& a, const Congruence& b) {
  require(a.n() == b.n(), "join: mismatched n");
  std::vector<JoinIrreducible> J = a.contracted_;
  std::set<uint16_t> seen;
  for (const auto& g : J) seen.insert(g.A);
  for (const auto& g : b.contracted_)
    if (seen.insert(g.A).second) J.push_back(g);
  Congruence c = from_contracted(a.n(), J);
  // bottoms of the join are exactly the common bottoms
  const int64_t N = a.W_->size();
  for (int64_t r = 0; r < N; ++r) {
    const bool both = (a.classes_[a.class_of_[r]].bottom == r) &&
                      (b.classes_[b.class_of_[r]].bottom == r);
    const bool join_bot = (c.classes_[c.class_of_[r]].bottom == r);
    WOQ_CHECK(both == join_bot, "join: bottoms are not the intersection of bottom sets");
  }
  return c;
}

Permutation Congruence::pi_down(const Permutation& x) const {
  return W_->perm(classes_[class_id(x)].bottom);
}

Permutation Congruence::pi_up(const Permutation& x) const {
  return W_->perm(classes_[class_id(x)].top);
}

bool Congruence::is_bottom(const Permutation& x) const {
  const int64_t r = W_->rank(x);
  return classes_[class_of_[r]].bottom == r;
}

bool Congruence::same_class(const Permutation& x, const Permutation& y) const {
  return class_id(x) == class_id(y);
}

std::vector<Permutation> Congruence::bottoms() const {
  std::vector<Permutation> out;
  out.reserve(classes_.size());
  for (const auto& rec : classes_) out.push_back(W_->perm(rec.bottom));
  return out;  // classes_ are already sorted by bottom (length, word)
}

bool Congruence::contracts(const JoinIrreducible& g) const {
  return std::find(contracted_.begin(), contracted_.end(), g) != contracted_.end();
}

bool Congruence::refines(const Congruence& coarser) const {
  require(n_ == coarser.n_, "refines: mismatched n");
  const int64_t N = W_->size();
  std::map<int32_t, int32_t> image;
  for (int64_t r = 0; r < N; ++r) {
    auto [it, fresh] = image.emplace(class_of_[r], coarser.class_of_[r]);
    if (!fresh && it->second != coarser.class_of_[r]) return false;
  }
  return true;
}

void Congruence::verify_compatibility(uint64_t seed, int64_t samples) const {
  const WeakOrder& W = *W_;
  const int64_t N = W.size();
  // contracted cover edges generate all congruent pairs inside the interval
  // classes, so compatibility on (edge, z) triples suffices.
  std::vector<std::pair<int64_t, int64_t>> edges;
  for (int64_t r = 0; r < N; ++r)
    for (int32_t s : W.covers_up(r))
      if (class_of_[r] == class_of_[s]) edges.emplace_back(r, s);
  auto check = [&](int64_t ei, int64_t z) {
    const auto [x, y] = edges[ei];
    const uint64_t iz = W.inv(z);
    const int64_t j1 = rank_of_inv_mask(n_, join_mask(n_, W.inv(x), iz));
    const int64_t j2 = rank_of_inv_mask(n_, join_mask(n_, W.inv(y), iz));
    WOQ_CHECK(class_of_[j1] == class_of_[j2], "congruence violates join compatibility");
    const int64_t m1 = rank_of_inv_mask(n_, meet_mask(n_, W.inv(x), iz));
    const int64_t m2 = rank_of_inv_mask(n_, meet_mask(n_, W.inv(y), iz));
    WOQ_CHECK(class_of_[m1] == class_of_[m2], "congruence violates meet compatibility");
  };
  if (edges.empty()) return;
  if (samples <= 0) {
    require_capacity(n_ <= 6, "exhaustive compatibility check limited to n <= 6");
    for (size_t e = 0; e < edges.size(); ++e)
      for (int64_t z = 0; z < N; ++z) check(e, z);
  } else {
    SplitMix64 rng(seed);
    for (int64_t t = 0; t < samples; ++t)
      check(rng.below(edges.size()), static_cast<int64_t>(rng.below(N)));
  }
}

std::string Congruence::to_json() const {
  // classes sorted by bottom word (plain lexicographic on the word string)
  std::vector<int> order(classes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return W_->perm(classes_[i].bottom).word() < W_->perm(classes_[j].bottom).word();
  });
  nlohmann::json j;
  j["n"] = n_;
  auto& cls = j["classes"] = nlohmann::json::array();
  for (int i : order) {
    nlohmann::json c = nlohmann::json::array();
    for (int64_t r : classes_[i].members) c.push_back(W_->perm(r).str());
    cls.push_back(std::move(c));
  }
  return j.dump();
}

// --- QuotientPoset ------------------------------------------------------------

QuotientPoset::QuotientPoset(std::shared_ptr<const Congruence> cong) : cong_(std::move(cong)) {
  const Congruence& C = *cong_;
  const WeakOrder& W = C.lattice();
  const auto& classes = C.classes();
  const int k = C.num_classes();
  bottoms_.reserve(k);
  class_to_idx_.assign(k, -1);
  for (int c = 0; c < k; ++c) bottoms_.push_back(classes[c].bottom);
  // classes are already sorted by bottom (length, word); keep that order
  for (int i = 0; i < k; ++i) {
    class_to_idx_[i] = i;
    perms_.push_back(W.perm(bottoms_[i]));
    invs_.push_back(W.inv(bottoms_[i]));
  }
  up_.resize(k);
  down_.resize(k);
  for (int i = 0; i < k; ++i) {
    // cover correspondence: down-covers of class i are the classes of the
    // elements covered by its bottom, each hit exactly once
    std::set<int> seen;
    for (int32_t s : W.covers_down(bottoms_[i])) {
      const int j = class_to_idx_[C.class_id_by_rank(s)];
      WOQ_CHECK(seen.insert(j).second, "quotient cover correspondence not one-to-one");
      down_[i].push_back(j);
      up_[j].push_back(i);
    }
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
}

int QuotientPoset::index_of(const Permutation& bottom) const {
  const int c = cong_->class_id(bottom);
  const int i = class_to_idx_[c];
  require(perms_[i] == bottom, "index_of: not a class bottom");
  return i;
}

int QuotientPoset::top_index() const { return size() - 1; }

int QuotientPoset::join_index(int a, int b) const {
  const Permutation j = woq::join(perms_[a], perms_[b]);
  return class_to_idx_[cong_->class_id(j)];
}

int QuotientPoset::join_index(const std::vector<int>& S) const {
  if (S.empty()) return 0;
  int acc = S[0];
  for (size_t i = 1; i < S.size(); ++i) acc = join_index(acc, S[i]);
  return acc;
}

bool QuotientPoset::interval(int a, int b, std::vector<int>* atoms_out) const {
  if (!leq(a, b)) return false;
  if (atoms_out) {
    atoms_out->clear();
    for (int c : up_[a])
      if (leq(c, b)) atoms_out->push_back(c);
  }
  return true;
}

bool QuotientPoset::interval_atomic(int a, int b, int* num_atoms) const {
  std::vector<int> atoms;
  if (!interval(a, b, &atoms)) return false;
  if (num_atoms) *num_atoms = static_cast<int>(atoms.size());
  if (a == b) return true;  // join of no atoms is a itself
  if (atoms.empty()) return false;
  return join_index(atoms) == b;
}

std::vector<std::vector<int64_t>> QuotientPoset::mobius_matrix() const {
  const int k = size();
  std::vector<std::vector<int64_t>> mu(k, std::vector<int64_t>(k, 0));
  // elements are sorted by length, a linear extension
  for (int a = 0; a < k; ++a) {
    mu[a][a] = 1;
    for (int b = a + 1; b < k; ++b) {
      if (!leq(a, b)) continue;
      int64_t s = 0;
      for (int z = a; z < b; ++z)
        if (leq(a, z) && leq(z, b)) s += mu[a][z];
      mu[a][b] = -s;
    }
  }
  return mu;
}

int64_t QuotientPoset::mobius(int a, int b) const {
  require(leq(a, b), "mobius: a <= b required");
  // local recursion over the interval
  std::vector<int> iv;
  for (int z = 0; z < size(); ++z)
    if (leq(a, z) && leq(z, b)) iv.push_back(z);
  std::map<int, int64_t> mu;
  for (int z : iv) {
    if (z == a) { mu[z] = 1; continue; }
    int64_t s = 0;
    for (int w : iv)
      if (w != z && leq(w, z)) s += mu[w];
    mu[z] = -s;
  }
  return mu[b];
}

std::vector<int> QuotientPoset::covers_down_by_search(int i) const {
  std::vector<int> below;
  for (int j = 0; j < size(); ++j)
    if (j != i && leq(j, i)) below.push_back(j);
  std::vector<int> out;
  for (int j : below) {
    bool is_cover = true;
    for (int z : below)
      if (z != j && leq(j, z)) { is_cover = false; break; }
    if (is_cover) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace woq
