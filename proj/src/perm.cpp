#include "woq/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace woq {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : word_) {
    require(v >= 1 && v <= n && !seen[v], "not a permutation of [n]: " + word_str(word_));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view s) {
  std::vector<int> w;
  if (s.empty()) return Permutation();
  if (s.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t next = s.find(',', pos);
      std::string_view tok = s.substr(pos, next == std::string_view::npos ? next : next - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      require(ec == std::errc() && p == tok.data() + tok.size(),
              "bad permutation token: " + std::string(tok));
      w.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      require(c >= '1' && c <= '9', "bad one-line permutation: " + std::string(s));
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::string word_str(std::span<const int> w) {
  std::string s;
  const bool digits = w.size() <= 9;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string Permutation::str() const { return word_str(word_); }

uint64_t inv_mask(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  WOQ_CHECK(n <= kMaxMaskN, "inversion mask limited to n <= 11");
  uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) m |= 1ULL << pair_bit(w[j], w[i]);
  return m;
}

std::set<std::pair<int, int>> inversion_set(const Permutation& x) {
  std::set<std::pair<int, int>> s;
  const auto& w = x.word();
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) s.emplace(w[j], w[i]);
  return s;
}

int length(const Permutation& x) {
  int l = 0;
  const auto& w = x.word();
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++l;
  return l;
}

bool weak_leq(const Permutation& x, const Permutation& y) {
  require(x.size() == y.size(), "weak_leq: mismatched sizes");
  const uint64_t a = inv_mask(x), b = inv_mask(y);
  return (a & ~b) == 0;
}

Permutation standardize(std::span<const int> seq) {
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "standardize: entries must be distinct");
  std::vector<int> w(seq.size());
  for (size_t i = 0; i < seq.size(); ++i)
    w[i] = 1 + static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) -
                                sorted.begin());
  return Permutation(std::move(w));
}

Permutation compose(const Permutation& x, const Permutation& y) {
  require(x.size() == y.size(), "compose: mismatched sizes");
  std::vector<int> w(x.size());
  for (int i = 1; i <= x.size(); ++i) w[i - 1] = x[y[i]];
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& x) {
  std::vector<int> w(x.size());
  for (int i = 1; i <= x.size(); ++i) w[x[i] - 1] = i;
  return Permutation(std::move(w));
}

std::vector<int> descents(const Permutation& x) {
  std::vector<int> d;
  for (int i = 1; i < x.size(); ++i)
    if (x[i] > x[i + 1]) d.push_back(i);
  return d;
}

std::vector<int> ascents(const Permutation& x) {
  std::vector<int> a;
  for (int i = 1; i < x.size(); ++i)
    if (x[i] < x[i + 1]) a.push_back(i);
  return a;
}

namespace {

// Backtracking subsequence search. adj_after, when >= 1, is the 1-based
// pattern index j that must sit immediately left of pattern index j+1 in x.
bool occurs_from(std::span<const int> y, std::span<const int> x, int adj_after,
                 std::vector<int>& chosen, size_t yi, size_t xi) {
  if (yi == y.size()) return true;
  if (y.size() - yi > x.size() - xi) return false;
  for (size_t p = xi; p < x.size(); ++p) {
    if (adj_after >= 1 && yi == static_cast<size_t>(adj_after)) {
      // forced adjacency: this entry must be taken at exactly position xi
      if (p != xi) return false;
    }
    bool ok = true;
    for (size_t q = 0; q < yi && ok; ++q)
      ok = (y[q] < y[yi]) == (chosen[q] < x[p]);
    if (ok) {
      chosen[yi] = x[p];
      size_t next = p + 1;
      if (occurs_from(y, x, adj_after, chosen, yi + 1, next)) return true;
    }
    if (adj_after >= 1 && yi == static_cast<size_t>(adj_after)) return false;
  }
  return false;
}

bool occurs_impl(std::span<const int> y, std::span<const int> x, int adj_after) {
  if (y.empty()) return true;
  std::vector<int> chosen(y.size());
  // try each start position; recursion handles the rest
  for (size_t p = 0; p + y.size() <= x.size() + 0u; ++p) {
    chosen[0] = x[p];
    if (occurs_from(y, x, adj_after, chosen, 1, p + 1)) return true;
  }
  return false;
}

}  // namespace

bool occurs(const Permutation& y, const Permutation& x) {
  return occurs_impl(y.span(), x.span(), 0);
}

int cliff_position(std::span<const int> y) {
  const int k = static_cast<int>(y.size());
  for (int j = 1; j < k; ++j)
    if (y[j - 1] == k && y[j] == 1) return j;
  return 0;
}

bool occurs_with_adjacent_cliff(const Permutation& y, const Permutation& x) {
  const int j = cliff_position(y);
  require(j != 0, "occurs_with_adjacent_cliff: pattern " + y.str() + " has no cliff");
  return occurs_impl(y.span(), x.span(), j);
}

bool is_untranslated(const Permutation& x) {
  const int n = x.size();
  if (n == 0) return false;
  return x[1] > 1 && x[n] < n;
}

bool is_join_irreducible_perm(const Permutation& x) { return descents(x).size() == 1; }

bool is_untranslated_ji(const Permutation& x) {
  return is_join_irreducible_perm(x) && cliff_position(x) != 0;
}

std::vector<Permutation> scrambles(const Permutation& g) {
  require(is_untranslated_ji(g), "scrambles: " + g.str() + " is not an untranslated join-irreducible");
  const int k = g.size();
  const int j = cliff_position(g);
  std::vector<int> pre(g.word().begin(), g.word().begin() + (j - 1));
  std::vector<int> post(g.word().begin() + (j + 1), g.word().end());
  std::sort(pre.begin(), pre.end());
  std::sort(post.begin(), post.end());
  std::vector<Permutation> out;
  do {
    std::vector<int> postp = post;
    do {
      std::vector<int> w;
      w.reserve(k);
      w.insert(w.end(), pre.begin(), pre.end());
      w.push_back(k);
      w.push_back(1);
      w.insert(w.end(), postp.begin(), postp.end());
      out.emplace_back(std::move(w));
    } while (std::next_permutation(postp.begin(), postp.end()));
  } while (std::next_permutation(pre.begin(), pre.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation times(const Permutation& u, const Permutation& v) {
  const int p = u.size();
  std::vector<int> w;
  w.reserve(p + v.size());
  w.insert(w.end(), u.word().begin(), u.word().end());
  for (int a : v.word()) w.push_back(p + a);
  return Permutation(std::move(w));
}

Permutation ltimes(const Permutation& u, const Permutation& v) {
  const int p = u.size();
  std::vector<int> w;
  w.reserve(p + v.size());
  for (int a : v.word()) w.push_back(p + a);
  w.insert(w.end(), u.word().begin(), u.word().end());
  return Permutation(std::move(w));
}

namespace {

// Maximal blocks of consecutive values linked by K.
std::vector<std::vector<int>> value_blocks(int n, const std::set<int>& K) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur{1};
  for (int i = 1; i < n; ++i) {
    if (K.count(i)) {
      cur.push_back(i + 1);
    } else {
      blocks.push_back(cur);
      cur = {i + 1};
    }
  }
  if (n >= 1) blocks.push_back(cur);
  return blocks;
}

}  // namespace

std::pair<Permutation, Permutation> parabolic_factor(const Permutation& x,
                                                     const std::set<int>& K, Side side) {
  const int n = x.size();
  for (int i : K) require(i >= 1 && i < n, "parabolic_factor: K must be a subset of [n-1]");
  if (n == 0) return {Permutation(), Permutation()};
  if (side == Side::Left) {
    // Kx: within each value block, redistribute the block's values so they
    // appear in increasing order along the word. x_K = x o (Kx)^{-1}.
    std::vector<int> y(x.word());
    for (const auto& B : value_blocks(n, K)) {
      std::vector<int> pos;
      for (int i = 0; i < n; ++i)
        if (x.word()[i] >= B.front() && x.word()[i] <= B.back()) pos.push_back(i);
      for (size_t t = 0; t < pos.size(); ++t) y[pos[t]] = B[t];
    }
    Permutation Kx{std::move(y)};
    Permutation xK = compose(x, inverse(Kx));
    WOQ_CHECK(length(x) == length(xK) + length(Kx), "parabolic_factor: length not additive");
    return {xK, Kx};
  }
  // Right: xK sorts entries within each position block; x_K = (xK)^{-1} o x.
  std::vector<int> y(x.word());
  for (const auto& B : value_blocks(n, K)) {  // blocks of positions this time
    std::vector<int> vals;
    for (int i : B) vals.push_back(x[i]);
    std::sort(vals.begin(), vals.end());
    for (size_t t = 0; t < B.size(); ++t) y[B[t] - 1] = vals[t];
  }
  Permutation xQ{std::move(y)};
  Permutation xK = compose(inverse(xQ), x);
  WOQ_CHECK(length(x) == length(xK) + length(xQ), "parabolic_factor: length not additive");
  return {xK, xQ};
}

std::set<int> supp(const Permutation& x) {
  std::set<int> s;
  const int n = x.size();
  int seen_max = 0;
  for (int i = 1; i < n; ++i) {
    seen_max = std::max(seen_max, x[i]);
    if (seen_max > i) s.insert(i);  // prefix [1..i] not preserved
  }
  return s;
}

int degree(const Permutation& x) { return static_cast<int>(supp(x).size()); }

}  // namespace woq
