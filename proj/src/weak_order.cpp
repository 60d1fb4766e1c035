#include "woq/weak_order.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "json.hpp"

namespace woq {

int JoinIrreducible::m() const { return std::countr_zero(A) + 1; }

int JoinIrreducible::M() const {
  const uint32_t comp = ~static_cast<uint32_t>(A) & ((1u << n) - 1);
  WOQ_CHECK(comp != 0, "join-irreducible with empty complement");
  return 32 - std::countl_zero(comp);
}

int JoinIrreducible::descent_position() const { return n - std::popcount(A); }

int JoinIrreducible::deg() const { return M() - m(); }

Permutation JoinIrreducible::word() const {
  std::vector<int> w;
  w.reserve(n);
  for (int v = 1; v <= n; ++v)
    if (!(A & (1u << (v - 1)))) w.push_back(v);
  for (int v = 1; v <= n; ++v)
    if (A & (1u << (v - 1))) w.push_back(v);
  return Permutation(std::move(w));
}

Permutation JoinIrreducible::word_star() const {
  Permutation g = word();
  std::vector<int> w = g.word();
  const int i = descent_position();
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

std::set<int> JoinIrreducible::subset() const {
  std::set<int> s;
  for (int v = 1; v <= n; ++v)
    if (A & (1u << (v - 1))) s.insert(v);
  return s;
}

JoinIrreducible JoinIrreducible::from_mask(int n, uint16_t A) {
  require(n >= 1 && n <= 16 && A != 0 && (A >> n) == 0,
          "join-irreducible subset out of range");
  JoinIrreducible j{n, A};
  const uint16_t comp = static_cast<uint16_t>(~A & ((1u << n) - 1));
  require(comp != 0, "join-irreducible: A = [n] has no descent");
  const int m = std::countr_zero(A) + 1;
  const int M = 32 - std::countl_zero(static_cast<uint32_t>(comp));
  require(M > m, "join-irreducible: max(A^c) > min(A) required");
  return j;
}

JoinIrreducible JoinIrreducible::from_subset(int n, const std::set<int>& A) {
  uint16_t mask = 0;
  for (int v : A) {
    require(v >= 1 && v <= n, "subset entry out of [n]");
    mask |= 1u << (v - 1);
  }
  return from_mask(n, mask);
}

JoinIrreducible JoinIrreducible::from_permutation(const Permutation& g) {
  const auto d = descents(g);
  require(d.size() == 1, "not a join-irreducible permutation: " + g.str());
  uint16_t mask = 0;
  for (int i = d[0] + 1; i <= g.size(); ++i) mask |= 1u << (g[i] - 1);
  return from_mask(g.size(), mask);
}

Permutation ji_from_subset(const std::set<int>& A, int n) {
  return JoinIrreducible::from_subset(n, A).word();
}

std::set<int> subset_from_ji(const Permutation& g) {
  return JoinIrreducible::from_permutation(g).subset();
}

JoinIrreducible lambda_ji(const Permutation& x, int i) {
  const int n = x.size();
  require(i >= 1 && i < n && x[i] > x[i + 1], "lambda: i must be a descent of x");
  uint16_t A = 0;
  for (int j = 1; j <= i; ++j)
    if (x[j] > x[i]) A |= 1u << (x[j] - 1);
  for (int j = i + 1; j <= n; ++j)
    if (x[j] >= x[i + 1]) A |= 1u << (x[j] - 1);
  JoinIrreducible out = JoinIrreducible::from_mask(n, A);
  WOQ_CHECK(out.M() == x[i] && out.m() == x[i + 1], "lambda: descent pair mismatch");
  return out;
}

std::vector<Permutation> covers_up(const Permutation& x) {
  std::vector<Permutation> out;
  for (int i : ascents(x)) {
    std::vector<int> w = x.word();
    std::swap(w[i - 1], w[i]);
    out.emplace_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> covers_down(const Permutation& x) {
  std::vector<Permutation> out;
  for (int i : descents(x)) {
    std::vector<int> w = x.word();
    std::swap(w[i - 1], w[i]);
    out.emplace_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Permutation perm_from_inv_mask(int n, uint64_t T) {
  std::vector<int> w(n);
  for (int a = 1; a <= n; ++a) {
    int pos = 1;
    for (int b = 1; b < a; ++b)
      if (!(T & (1ULL << pair_bit(b, a)))) ++pos;  // b before a
    for (int b = a + 1; b <= n; ++b)
      if (T & (1ULL << pair_bit(a, b))) ++pos;  // b before a
    w[pos - 1] = a;
  }
  Permutation x(std::move(w));  // throws if T was not biclosed
  WOQ_CHECK(inv_mask(x) == T, "inversion set not biclosed");
  return x;
}

Permutation reverse_word(const Permutation& x) {
  std::vector<int> w(x.word().rbegin(), x.word().rend());
  return Permutation(std::move(w));
}

}  // namespace

Permutation join(const Permutation& x, const Permutation& y) {
  require(x.size() == y.size(), "join: mismatched sizes");
  const int n = x.size();
  if (n == 0) return x;
  const uint64_t E = inv_mask(x) | inv_mask(y);
  // transitive closure over the value DAG (edges point small -> large)
  std::vector<uint16_t> reach(n + 1, 0);
  for (int a = n; a >= 1; --a) {
    for (int b = a + 1; b <= n; ++b)
      if (E & (1ULL << pair_bit(a, b))) reach[a] |= static_cast<uint16_t>(1u << (b - 1)) | reach[b];
  }
  uint64_t T = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (reach[a] & (1u << (b - 1))) T |= 1ULL << pair_bit(a, b);
  return perm_from_inv_mask(n, T);
}

Permutation meet(const Permutation& x, const Permutation& y) {
  return reverse_word(join(reverse_word(x), reverse_word(y)));
}

Permutation join(const std::vector<Permutation>& S, int n) {
  Permutation acc = Permutation::identity(n);
  for (const auto& x : S) {
    require(x.size() == n, "join: mismatched sizes");
    acc = join(acc, x);
  }
  return acc;
}

Permutation meet(const std::vector<Permutation>& S, int n) {
  Permutation acc = Permutation::longest(n);
  for (const auto& x : S) {
    require(x.size() == n, "meet: mismatched sizes");
    acc = meet(acc, x);
  }
  return acc;
}

Permutation join_via_search(const std::vector<Permutation>& S, int n) {
  require_capacity(n <= 8, "join_via_search: n <= 8");
  uint64_t need = 0;
  for (const auto& x : S) {
    require(x.size() == n, "join: mismatched sizes");
    need |= inv_mask(x);
  }
  std::vector<Permutation> ub;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do {
    if ((need & ~inv_mask(w)) == 0) ub.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::vector<Permutation> minimal;
  for (const auto& z : ub) {
    bool is_min = true;
    for (const auto& z2 : ub)
      if (z2 != z && weak_leq(z2, z)) { is_min = false; break; }
    if (is_min) minimal.push_back(z);
  }
  WOQ_CHECK(minimal.size() == 1, "join_via_search: upper bounds have no unique minimum");
  return minimal[0];
}

Permutation meet_via_search(const std::vector<Permutation>& S, int n) {
  std::vector<Permutation> rev;
  rev.reserve(S.size());
  for (const auto& x : S) rev.push_back(reverse_word(x));
  return reverse_word(join_via_search(rev, n));
}

int64_t mobius_weak_order(const Permutation& x, const Permutation& y) {
  require(x.size() == y.size(), "mobius: mismatched sizes");
  require(weak_leq(x, y), "mobius: x <= y required");
  // collect [x, y] by upward BFS from x
  std::map<Permutation, int64_t> mu;
  std::vector<Permutation> interval{x};
  std::set<Permutation> seen{x};
  for (size_t h = 0; h < interval.size(); ++h) {
    for (const auto& z : covers_up(interval[h])) {
      if (weak_leq(z, y) && seen.insert(z).second) interval.push_back(z);
    }
  }
  std::sort(interval.begin(), interval.end(),
            [](const Permutation& a, const Permutation& b) {
              const int la = length(a), lb = length(b);
              return la != lb ? la < lb : a < b;
            });
  for (const auto& z : interval) {
    if (z == x) { mu[z] = 1; continue; }
    int64_t s = 0;
    for (const auto& w : interval)
      if (w != z && weak_leq(w, z)) s += mu[w];
    mu[z] = -s;
  }
  return mu[y];
}

WeakOrder::WeakOrder(int n) : n_(n) {
  require_capacity(n >= 0 && n <= 8, "WeakOrder materialization limited to n <= 8");
  const int64_t N = factorial(n);
  elems_.reserve(N);
  inv_.reserve(N);
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do {
    elems_.emplace_back(w);
    inv_.push_back(inv_mask(w));
  } while (std::next_permutation(w.begin(), w.end()));
  WOQ_CHECK(static_cast<int64_t>(elems_.size()) == N, "n! enumeration");
  up_.resize(N);
  down_.resize(N);
  for (int64_t r = 0; r < N; ++r) {
    const Permutation& x = elems_[r];
    for (int i = 1; i < n; ++i) {
      if (x[i] < x[i + 1]) {
        std::vector<int> v = x.word();
        std::swap(v[i - 1], v[i]);
        const int64_t s = perm_rank(Permutation(std::move(v)));
        up_[r].push_back(static_cast<int32_t>(s));
        down_[s].push_back(static_cast<int32_t>(r));
      }
    }
  }
}

int64_t WeakOrder::rank(const Permutation& x) const {
  require(x.size() == n_, "rank: wrong size");
  return perm_rank(x);
}

int64_t perm_rank(const Permutation& x) {
  // Lehmer code; lex order matches next_permutation enumeration.
  const int n = x.size();
  int64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int c = 0;
    for (int j = i + 1; j <= n; ++j)
      if (x[j] < x[i]) ++c;
    r += c * factorial(n - i);
  }
  return r;
}

Permutation perm_unrank(int n, int64_t r) {
  std::vector<int> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = i + 1;
  std::vector<int> w;
  w.reserve(n);
  for (int i = n; i >= 1; --i) {
    const int64_t f = factorial(i - 1);
    const int64_t c = r / f;
    r %= f;
    w.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  return Permutation(std::move(w));
}

std::string poset_json(const WeakOrder& W) {
  nlohmann::json j;
  auto& elems = j["elements"] = nlohmann::json::array();
  for (int64_t r = 0; r < W.size(); ++r) elems.push_back(W.perm(r).str());
  auto& covers = j["covers"] = nlohmann::json::array();
  for (int64_t r = 0; r < W.size(); ++r)
    for (int32_t s : W.covers_up(r)) covers.push_back({r, s});
  return j.dump();
}

std::vector<JoinIrreducible> all_join_irreducibles(int n) {
  std::vector<JoinIrreducible> out;
  for (uint32_t A = 1; A < (1u << n); ++A) {
    const uint16_t comp = static_cast<uint16_t>(~A & ((1u << n) - 1));
    if (comp == 0) continue;
    const int m = std::countr_zero(A) + 1;
    const int M = 32 - std::countl_zero(static_cast<uint32_t>(comp));
    if (M > m) out.push_back(JoinIrreducible{n, static_cast<uint16_t>(A)});
  }
  return out;
}

}  // namespace woq
