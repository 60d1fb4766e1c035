#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "woq/perm.hpp"

using namespace woq;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// independent oracle: enumerate all subsequences
bool occurs_brute(const Permutation& y, const Permutation& x) {
  const int k = y.size(), n = x.size();
  if (k > n) return false;
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int t, int start) {
    if (t == k) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(x[i]);
      return standardize(sub) == y;
    }
    for (int i = start; i <= n; ++i) {
      idx[t] = i;
      if (rec(t + 1, i + 1)) return true;
    }
    return false;
  };
  return k == 0 || rec(0, 1);
}

bool occurs_adj_brute(const Permutation& y, const Permutation& x) {
  const int k = y.size(), n = x.size();
  const int j = cliff_position(y);
  REQUIRE(j != 0);
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int t, int start) {
    if (t == k) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(x[i]);
      return standardize(sub) == y && idx[j] == idx[j - 1] + 1;
    }
    for (int i = start; i <= n; ++i) {
      idx[t] = i;
      if (rec(t + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 1);
}

std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("construction and serialization") {
  CHECK(P("2413").word() == std::vector<int>{2, 4, 1, 3});
  CHECK(P("").size() == 0);
  CHECK(Permutation::identity(4).str() == "1234");
  CHECK(Permutation::longest(3).str() == "321");
  CHECK_THROWS_AS(P("122"), std::invalid_argument);
  // comma form kicks in above n = 9
  std::vector<int> w(10);
  for (int i = 0; i < 10; ++i) w[i] = i == 0 ? 10 : i;
  const Permutation big(w);
  CHECK(big.str() == "10,1,2,3,4,5,6,7,8,9");
  CHECK(Permutation::parse(big.str()) == big);
}

TEST_CASE("inversion sets") {
  CHECK(inversion_set(P("312")) == std::set<std::pair<int, int>>{{1, 3}, {2, 3}});
  CHECK(inversion_set(Permutation::identity(5)).empty());
  CHECK(inversion_set(P("321")) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(length(P("321")) == 3);
  for (const auto& x : all_perms(5))
    CHECK(static_cast<size_t>(length(x)) == inversion_set(x).size());
}

TEST_CASE("standardize") {
  CHECK(standardize(std::vector<int>{7, 3, 5, 9, 1}) == P("42351"));
  CHECK(standardize(std::vector<int>{1, 2, 3}) == P("123"));
  CHECK(standardize(std::vector<int>{5, 2}) == P("21"));
  CHECK(standardize(std::vector<int>{}) == Permutation());
  CHECK_THROWS_AS(standardize(std::vector<int>{2, 2}), std::invalid_argument);
  // st(x.word) = x
  for (const auto& x : all_perms(4)) CHECK(standardize(x.span()) == x);
}

TEST_CASE("pattern occurrence") {
  CHECK_FALSE(occurs(P("312"), P("321")));
  CHECK(occurs(P("231"), P("25314")));
  for (const auto& y : all_perms(3)) CHECK(occurs(y, y));
  // against the brute subsequence oracle
  for (int k = 1; k <= 3; ++k)
    for (const auto& y : all_perms(k))
      for (const auto& x : all_perms(5)) CHECK(occurs(y, x) == occurs_brute(y, x));
}

TEST_CASE("occurrence is reflexive and transitive") {
  for (const auto& y : all_perms(3))
    for (const auto& x : all_perms(4)) {
      if (!occurs(y, x)) continue;
      for (const auto& z : all_perms(5))
        if (occurs(x, z)) CHECK(occurs(y, z));
    }
}

TEST_CASE("cliff-adjacent occurrence") {
  CHECK(cliff_position(P("312")) == 1);
  CHECK(cliff_position(P("2413")) == 2);
  CHECK(cliff_position(P("213")) == 0);
  CHECK(occurs_with_adjacent_cliff(P("312"), P("312")));
  CHECK(occurs_with_adjacent_cliff(P("231"), P("2431")));
  CHECK_FALSE(occurs_with_adjacent_cliff(P("2413"), P("25314")));
  CHECK_THROWS_AS(occurs_with_adjacent_cliff(P("213"), P("2134")), std::invalid_argument);
  // adjacency implies plain occurrence; checked against the brute oracle
  for (const auto& y : all_perms(3)) {
    if (cliff_position(y) == 0) continue;
    for (const auto& x : all_perms(5)) {
      CHECK(occurs_with_adjacent_cliff(y, x) == occurs_adj_brute(y, x));
      if (occurs_with_adjacent_cliff(y, x)) CHECK(occurs(y, x));
    }
  }
}

TEST_CASE("for 312 and 231 plain and cliff-adjacent avoidance coincide") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& x : all_perms(n))
      for (const char* pat : {"312", "231"})
        CHECK(occurs(P(pat), x) == (n >= 3 && occurs_with_adjacent_cliff(P(pat), x)));
}

TEST_CASE("scrambles") {
  auto words = [](const std::vector<Permutation>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.str());
    return out;
  };
  CHECK(words(scrambles(P("312"))) == std::vector<std::string>{"312"});
  CHECK(words(scrambles(P("231"))) == std::vector<std::string>{"231"});
  CHECK(words(scrambles(P("2413"))) == std::vector<std::string>{"2413"});
  CHECK(words(scrambles(P("2341"))) == std::vector<std::string>{"2341", "3241"});
  CHECK_THROWS_AS(scrambles(P("213")), std::invalid_argument);   // no cliff
  CHECK_THROWS_AS(scrambles(P("3142")), std::invalid_argument);  // two descents
  // oracle: enumerate all sigma with the three defining conditions
  for (const auto& g : all_perms(4)) {
    if (!is_untranslated_ji(g)) continue;
    const int j = cliff_position(g);
    std::set<Permutation> expect;
    std::multiset<int> pre(g.word().begin(), g.word().begin() + (j - 1));
    for (const auto& s : all_perms(4)) {
      if (s[j] != 4 || s[j + 1] != 1) continue;
      std::multiset<int> spre(s.word().begin(), s.word().begin() + (j - 1));
      if (spre == pre) expect.insert(s);
    }
    const auto got = scrambles(g);
    CHECK(std::set<Permutation>(got.begin(), got.end()) == expect);
  }
}

TEST_CASE("times and ltimes") {
  CHECK(times(P("21"), P("1")) == P("213"));
  CHECK(times(Permutation(), P("312")) == P("312"));
  CHECK(times(P("12"), P("21")) == P("1243"));
  CHECK(ltimes(P("21"), P("1")) == P("321"));
  CHECK(ltimes(P("21"), Permutation()) == P("21"));
  CHECK(ltimes(P("12"), P("12")) == P("3412"));
  // u x v <= u |x v in weak order
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 6 && q <= 3; ++q)
      for (const auto& u : all_perms(p))
        for (const auto& v : all_perms(q)) CHECK(weak_leq(times(u, v), ltimes(u, v)));
}

TEST_CASE("parabolic factorization") {
  const auto [xK, Kx] = parabolic_factor(P("2143"), {1}, Side::Left);
  CHECK(xK == P("2134"));
  CHECK(Kx == P("1243"));
  CHECK(parabolic_factor(P("2143"), {}, Side::Left) ==
        std::make_pair(Permutation::identity(4), P("2143")));
  CHECK(parabolic_factor(P("2143"), {1, 2, 3}, Side::Left) ==
        std::make_pair(P("2143"), Permutation::identity(4)));

  // oracle: enumerate all factorizations x = a . b with a in W_K and l
  // additive; the factor of maximal length must be unique and match
  for (const auto& x : all_perms(4)) {
    for (uint32_t km = 0; km < 8; ++km) {
      std::set<int> K;
      for (int i = 1; i <= 3; ++i)
        if (km & (1u << (i - 1))) K.insert(i);
      // W_K = all a whose left factor at K is itself
      std::vector<Permutation> WK;
      for (const auto& a : all_perms(4))
        if (parabolic_factor(a, K, Side::Left).first == a) WK.push_back(a);
      const auto [best, rest] = parabolic_factor(x, K, Side::Left);
      int best_len = -1;
      Permutation arg;
      for (const auto& a : WK) {
        const Permutation b = compose(inverse(a), x);
        if (length(a) + length(b) == length(x) && length(a) > best_len) {
          best_len = length(a);
          arg = a;
        }
      }
      CHECK(best == arg);
      CHECK(compose(best, rest) == x);
      CHECK(length(best) + length(rest) == length(x));
    }
  }
  // right side: x = xQ . x_K with entries of xQ increasing on K-blocks
  for (const auto& x : all_perms(4)) {
    const auto [xk, xq] = parabolic_factor(x, {1, 3}, Side::Right);
    CHECK(compose(xq, xk) == x);
    CHECK(length(xk) + length(xq) == length(x));
    CHECK(xq[1] < xq[2]);
    CHECK(xq[3] < xq[4]);
  }
}

TEST_CASE("support and degree") {
  CHECK(supp(P("2134")) == std::set<int>{1});
  CHECK(supp(P("1234")).empty());
  CHECK(supp(P("2413")) == std::set<int>{1, 2, 3});
  CHECK(degree(P("312")) == 2);
  // join-irreducible degree = descent drop
  for (const auto& g : all_perms(5)) {
    const auto d = descents(g);
    if (d.size() != 1) continue;
    CHECK(degree(g) == g[d[0]] - g[d[0] + 1]);
  }
}

TEST_CASE("untranslated iff cliff for join-irreducibles") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : all_perms(n))
      if (descents(g).size() == 1) CHECK(is_untranslated(g) == (cliff_position(g) != 0));
}
