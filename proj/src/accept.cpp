#include "woq/accept.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "woq/fan.hpp"
#include "woq/hopf.hpp"

namespace woq {

namespace {

int64_t count_perms_if(int n, int threads, const std::function<bool(std::span<const int>)>& pred) {
  if (n <= 0) return pred(std::span<const int>()) ? 1 : 0;
  const int64_t N = factorial(n);
  std::vector<int64_t> partial(std::max(1, threads), 0);
  parallel_chunks(N, threads, [&](int t, int64_t b, int64_t e) {
    std::vector<int> w = perm_unrank(n, b).word();
    int64_t cnt = 0;
    for (int64_t r = b; r < e; ++r) {
      if (pred(w)) ++cnt;
      std::next_permutation(w.begin(), w.end());
    }
    partial[t] += cnt;
  });
  int64_t total = 0;
  for (int64_t c : partial) total += c;
  return total;
}

// West's characterization: every 2413 occurs inside a 25314 and every 3142
// inside a 41352. Independent brute-force route for the Baxter predicate.
bool west_baxter(std::span<const int> x) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (x[k] < x[i] && x[i] < x[l] && x[l] < x[j]) {  // 2413
            bool ok = false;
            for (int t = j + 1; t < k && !ok; ++t)
              if (x[i] < x[t] && x[t] < x[l]) ok = true;
            if (!ok) return false;
          }
          if (x[j] < x[l] && x[l] < x[i] && x[i] < x[k]) {  // 3142
            bool ok = false;
            for (int t = j + 1; t < k && !ok; ++t)
              if (x[l] < x[t] && x[t] < x[i]) ok = true;
            if (!ok) return false;
          }
        }
  return true;
}

bool partitions_equal(const Congruence& a, const Congruence& b) {
  if (a.n() != b.n() || a.num_classes() != b.num_classes()) return false;
  const int64_t N = a.lattice().size();
  std::vector<int32_t> map(a.num_classes(), -1);
  for (int64_t r = 0; r < N; ++r) {
    const int32_t ca = a.class_id_by_rank(r), cb = b.class_id_by_rank(r);
    if (map[ca] < 0) map[ca] = cb;
    else if (map[ca] != cb) return false;
  }
  return true;
}

struct Runner {
  std::vector<CriterionResult> results;
  int threads;
  uint64_t seed;

  void run(int id, const std::string& name, const std::function<std::string()>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }
};

#define ACCEPT_CHECK(cond, msg)                                         \
  do {                                                                  \
    if (!(cond)) throw std::runtime_error(msg);                         \
  } while (0)

std::string check_tamari_counts(int threads) {
  // Catalan numbers regenerated from the recurrence C_{n+1} = sum C_i C_{n-i}
  std::vector<int64_t> cat{1};
  for (int n = 0; n < 9; ++n) {
    int64_t s = 0;
    for (int i = 0; i <= n; ++i) s += cat[i] * cat[n - i];
    cat.push_back(s);
  }
  FamilyContext fam(named_family("tamari"));
  std::ostringstream os;
  for (int n = 1; n <= 9; ++n) {
    const int64_t c = fam.count_bottoms(n, threads);
    ACCEPT_CHECK(c == cat[n], "tamari count at n=" + std::to_string(n) + " is " +
                                  std::to_string(c) + ", expected " + std::to_string(cat[n]));
    os << (n > 1 ? "," : "") << c;
  }
  return "counts " + os.str();
}

std::string check_descent_counts(int threads) {
  FamilyContext fam(named_family("descent"));
  for (int n = 1; n <= 10; ++n) {
    const int64_t c = fam.count_bottoms(n, threads);
    const int64_t expect = 1LL << (n - 1);
    ACCEPT_CHECK(c == expect, "descent count at n=" + std::to_string(n) + " is " +
                                  std::to_string(c) + ", expected " + std::to_string(expect));
  }
  return "2^(n-1) for n=1..10";
}

std::string check_snk_product_formula(int threads) {
  for (int k = 1; k <= 8; ++k) {
    FamilyContext fam(named_family("snk " + std::to_string(k)));
    for (int n = 1; n <= 8; ++n) {
      int64_t expect = 1;
      for (int i = 1; i <= n; ++i) expect *= std::min(i, k);
      const int64_t c = fam.count_bottoms(n, threads);
      ACCEPT_CHECK(c == expect, "S_{n,k} count at n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + " is " + std::to_string(c) +
                                    ", expected " + std::to_string(expect));
    }
  }
  return "prod min(i,k) for n,k <= 8";
}

std::string check_baxter_counts(int threads) {
  std::ostringstream os;
  for (int n = 1; n <= 10; ++n) {
    const int64_t tb = count_perms_if(n, threads, [](std::span<const int> w) {
      return twisted_baxter(w);
    });
    const int64_t bx = count_perms_if(n, threads, [](std::span<const int> w) {
      return baxter(w);
    });
    ACCEPT_CHECK(tb == bx, "n=" + std::to_string(n) + ": twisted " + std::to_string(tb) +
                               " vs baxter " + std::to_string(bx));
    if (n <= 8) {
      const int64_t wb = count_perms_if(n, threads, [](std::span<const int> w) {
        return west_baxter(w);
      });
      ACCEPT_CHECK(bx == wb, "n=" + std::to_string(n) + ": baxter " + std::to_string(bx) +
                                 " vs West brute " + std::to_string(wb));
    }
    os << (n > 1 ? "," : "") << tb;
  }
  return "counts " + os.str();
}

std::string check_meet_property(int) {
  const FamilySpec tb = named_family("twisted-baxter");
  const FamilySpec t231 = named_family("tamari231");
  const FamilySpec t312 = named_family("tamari");
  for (int n = 2; n <= 8; ++n) {
    std::set<uint16_t> lhs, a, b;
    for (const auto& g : contracted_jis(tb, n)) lhs.insert(g.A);
    for (const auto& g : contracted_jis(t231, n)) a.insert(g.A);
    for (const auto& g : contracted_jis(t312, n)) b.insert(g.A);
    std::set<uint16_t> rhs;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(rhs, rhs.begin()));
    ACCEPT_CHECK(lhs == rhs, "contracted sets differ at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 7; ++n) {
    const Congruence ctb = Congruence::from_contracted(n, contracted_jis(tb, n));
    const Congruence c231 = Congruence::from_contracted(n, contracted_jis(t231, n));
    const Congruence c312 = Congruence::from_contracted(n, contracted_jis(t312, n));
    const Congruence m = Congruence::meet(c231, c312);
    ACCEPT_CHECK(partitions_equal(ctb, m), "partition mismatch at n=" + std::to_string(n));
  }
  return "H(2413,3412) = H(231) ^ H(312), sets n<=8, partitions n<=7";
}

std::string check_oracle_equivalence(int, uint64_t seed) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : all_join_irreducibles(n)) {
      const Congruence brute =
          Congruence::closure_bruteforce(n, {{g.word_star(), g.word()}});
      const Congruence fast = Congruence::from_contracted(n, forcing_ideal(n, {g}));
      ACCEPT_CHECK(partitions_equal(brute, fast),
                   "single-generator mismatch at " + g.word().str());
    }
  }
  // 50 seeded random generator sets at n = 6
  const int n = 6;
  const auto jis = all_join_irreducibles(n);
  SplitMix64 rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    const int sz = 1 + static_cast<int>(rng.below(3));
    std::vector<JoinIrreducible> gens;
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (int i = 0; i < sz; ++i) {
      const auto& g = jis[rng.below(jis.size())];
      gens.push_back(g);
      pairs.emplace_back(g.word_star(), g.word());
    }
    const Congruence brute = Congruence::closure_bruteforce(n, pairs);
    const Congruence fast = Congruence::from_contracted(n, forcing_ideal(n, gens));
    ACCEPT_CHECK(partitions_equal(brute, fast), "random-set mismatch in trial " +
                                                    std::to_string(trial));
  }
  return "all single JIs n<=5 plus 50 seeded sets at n=6";
}

const std::vector<std::string>& hopf_family_names() {
  static const std::vector<std::string> names{"tamari", "descent", "twisted-baxter",
                                              "snk 3", "pnk 3"};
  return names;
}

std::string check_hopf_axioms(int) {
  {
    const auto rep = HopfAlgebra::malvenuto_reutenauer().check_axioms(5);
    ACCEPT_CHECK(rep.pass, "MR axioms: " + rep.summary());
  }
  for (const auto& name : hopf_family_names()) {
    auto fam = std::make_shared<FamilyContext>(named_family(name));
    const auto rep = HopfAlgebra::quotient(fam).check_axioms(6);
    ACCEPT_CHECK(rep.pass, name + " axioms: " + rep.summary());
  }
  return "MR to degree 5; tamari/descent/twisted-baxter/snk-3/pnk-3 to degree 6";
}

std::string check_embedding(int) {
  for (const auto& name : hopf_family_names()) {
    auto fam = std::make_shared<FamilyContext>(named_family(name));
    const HopfAlgebra Z = HopfAlgebra::quotient(fam);
    const HopfAlgebra MR = HopfAlgebra::malvenuto_reutenauer();
    std::vector<std::vector<Permutation>> bots(7);
    for (int d = 0; d <= 6; ++d) bots[d] = fam->bottoms(d);
    for (int p = 0; p <= 6; ++p)
      for (int q = 0; p + q <= 6; ++q)
        for (const auto& u : bots[p])
          for (const auto& v : bots[q]) {
            const GradedVector lhs = Z.c_map(Z.product(u, v));
            const GradedVector rhs = MR.product(Z.c_map(u), Z.c_map(v));
            ACCEPT_CHECK(lhs == rhs, name + ": c(u *Z v) != c(u) *S c(v) at (" + u.str() +
                                         ", " + v.str() + ")");
          }
    for (int d = 0; d <= 6; ++d)
      for (const auto& x : bots[d]) {
        TensorVector lhs;
        for (const auto& [k2, c] : Z.coproduct(x).terms()) {
          const GradedVector ca = Z.c_map(k2.first), cb = Z.c_map(k2.second);
          for (const auto& [a, c1] : ca.terms())
            for (const auto& [b, c2] : cb.terms()) lhs.add(a, b, c * c1 * c2);
        }
        const TensorVector rhs = MR.coproduct(Z.c_map(x));
        ACCEPT_CHECK(lhs == rhs, name + ": (c x c) Delta_Z != Delta_S c at " + x.str());
      }
  }
  return "both embedding identities to total degree 6 in 5 families";
}

std::string check_pell(int threads) {
  FamilyContext fam(named_family("pnk 3"));
  std::vector<int64_t> a(10, 0);
  for (int n = 1; n <= 9; ++n) a[n] = fam.count_bottoms(n, threads);
  for (int n = 3; n <= 9; ++n)
    ACCEPT_CHECK(a[n] == 2 * a[n - 1] + a[n - 2],
                 "Pell recurrence fails at n=" + std::to_string(n));
  return "a_n = 2a_(n-1) + a_(n-2) for n=3..9";
}

const std::vector<std::string>& fan_family_names() {
  static const std::vector<std::string> names{"trivial", "tamari", "descent",
                                              "twisted-baxter"};
  return names;
}

std::string check_fan_suite(int, uint64_t seed) {
  std::ostringstream os;
  for (const auto& name : fan_family_names()) {
    FamilyContext fam(named_family(name));
    for (int n = 2; n <= 5; ++n) {
      auto cong = fam.congruence(n);
      // building the fan runs the completeness/face-intersection checks
      QuotientFan fan = QuotientFan::build(cong, true);
      ACCEPT_CHECK(fan.lineality_dim() == 1, name + " lineality at n=" + std::to_string(n));
      const auto geo = fan.rays_geometric();
      const auto comb = rays(*cong);
      ACCEPT_CHECK(geo == comb, name + " n=" + std::to_string(n) +
                                    ": Prop-rays set != geometric extreme rays");
      int up_fixed = 0, uncontracted = 0;
      for (const auto& j : all_join_irreducibles(n)) {
        if (cong->pi_up(j.word()) == j.word()) ++up_fixed;
        if (!cong->contracts(j)) ++uncontracted;
      }
      ACCEPT_CHECK(static_cast<int>(geo.size()) == (n - 1) + up_fixed,
                   name + " n=" + std::to_string(n) + ": ray count formula");
      const bool simp = is_simplicial(*cong);
      if (simp)
        ACCEPT_CHECK(static_cast<int>(geo.size()) == (n - 1) + uncontracted,
                     name + " n=" + std::to_string(n) + ": simplicial ray count");
      // geometric simpliciality agrees with the counting condition
      bool geo_simp = true;
      for (const auto& m : fan.maximal()) {
        const auto fns = m.facet_normals();
        std::vector<std::vector<mpq_class>> rows;
        for (const auto& nu : fns) {
          std::vector<mpq_class> r(nu.size());
          for (size_t t = 0; t < nu.size(); ++t) r[t] = static_cast<long>(nu[t]);
          rows.push_back(std::move(r));
        }
        // rank via elimination
        size_t rank = 0;
        const size_t cols = rows.empty() ? 0 : rows[0].size();
        for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
          size_t piv = rank;
          while (piv < rows.size() && rows[piv][col] == 0) ++piv;
          if (piv == rows.size()) continue;
          std::swap(rows[rank], rows[piv]);
          for (size_t r2 = 0; r2 < rows.size(); ++r2)
            if (r2 != rank && rows[r2][col] != 0) {
              const mpq_class f = rows[r2][col] / rows[rank][col];
              for (size_t c2 = col; c2 < cols; ++c2) rows[r2][c2] -= f * rows[rank][c2];
            }
          ++rank;
        }
        if (rank != fns.size()) { geo_simp = false; break; }
      }
      ACCEPT_CHECK(geo_simp == simp,
                   name + " n=" + std::to_string(n) + ": counting vs geometric simpliciality");
      // 1-skeleton and the rest of the structural report
      const FanReport rep = check_fan_poset_properties(cong, seed);
      for (const auto& item : rep.items)
        ACCEPT_CHECK(item.pass || item.skipped, name + " n=" + std::to_string(n) + " " +
                                                    item.name + ": " + item.detail);
      if (name == "tamari" && n == 4) {
        const auto fv = f_vector(*cong);
        ACCEPT_CHECK((fv == std::vector<int64_t>{9, 21, 14}),
                     "tamari n=4 face census is not (9,21,14)");
      }
      if (name == "twisted-baxter")
        ACCEPT_CHECK(simp == (n <= 3), "twisted-baxter simpliciality first fails at n=4");
    }
    os << name << " ok; ";
  }
  return os.str();
}

std::string check_mobius_facial(int) {
  for (const auto& name : fan_family_names()) {
    FamilyContext fam(named_family(name));
    for (int n = 2; n <= 6; ++n) {
      QuotientPoset Q(fam.congruence(n));
      const auto mu = Q.mobius_matrix();
      for (int a = 0; a < Q.size(); ++a)
        for (int b = a; b < Q.size(); ++b) {
          if (!Q.leq(a, b)) continue;
          int na = 0;
          const bool atomic = Q.interval_atomic(a, b, &na);
          const int64_t expect = atomic ? ((na % 2) ? -1 : 1) : 0;
          ACCEPT_CHECK(mu[a][b] == expect,
                       name + " n=" + std::to_string(n) + ": mu(" + Q.element(a).str() +
                           ", " + Q.element(b).str() + ") = " + std::to_string(mu[a][b]) +
                           " != " + std::to_string(expect));
        }
    }
  }
  return "mu = (-1)^#atoms on atomic intervals, 0 otherwise; n <= 6, 4 families";
}

std::string check_ds_shelling(int, uint64_t seed) {
  for (const auto& name : fan_family_names()) {
    FamilyContext fam(named_family(name));
    for (int n = 2; n <= 5; ++n) {
      auto cong = fam.congruence(n);
      if (!is_simplicial(*cong)) continue;
      const FanReport rep = check_fan_poset_properties(cong, seed);
      for (const auto& item : rep.items) {
        if (item.name == "dehn-sommerville" || item.name == "shelling" ||
            item.name == "flag") {
          ACCEPT_CHECK(item.pass && !item.skipped,
                       name + " n=" + std::to_string(n) + " " + item.name + ": " +
                           item.detail);
        }
      }
    }
  }
  return "DS symmetry, 3 seeded shelling extensions, flagness on simplicial fans n <= 5";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& suite, int threads,
                                            uint64_t seed) {
  require(suite == "all" || suite == "lattice" || suite == "hopf" || suite == "fan",
          "unknown suite: " + suite);
  Runner R;
  R.threads = threads;
  R.seed = seed;
  const bool lat = suite == "all" || suite == "lattice";
  const bool hop = suite == "all" || suite == "hopf";
  const bool fan = suite == "all" || suite == "fan";
  if (lat) {
    R.run(1, "tamari Catalan counts n=1..9", [&] { return check_tamari_counts(threads); });
    R.run(2, "descent 2^(n-1) counts n=1..10", [&] { return check_descent_counts(threads); });
    R.run(3, "S_{n,k} product formula n,k<=8", [&] { return check_snk_product_formula(threads); });
    R.run(4, "twisted Baxter = Baxter n=1..10", [&] { return check_baxter_counts(threads); });
    R.run(5, "meet property H(2413,3412)", [&] { return check_meet_property(threads); });
    R.run(6, "closure oracle = forcing ideal", [&] { return check_oracle_equivalence(threads, seed); });
    R.run(9, "Pell recurrence for P_{n,3}", [&] { return check_pell(threads); });
  }
  if (hop) {
    R.run(7, "Hopf axioms (MR deg 5, quotients deg 6)", [&] { return check_hopf_axioms(threads); });
    R.run(8, "embedding theorems to degree 6", [&] { return check_embedding(threads); });
  }
  if (fan) {
    R.run(10, "fan suite n<=5 (axioms, rays, census)", [&] { return check_fan_suite(threads, seed); });
    R.run(11, "Mobius facial values n<=6", [&] { return check_mobius_facial(threads); });
    R.run(12, "Dehn-Sommerville + shelling + flag", [&] { return check_ds_shelling(threads, seed); });
  }
  std::sort(R.results.begin(), R.results.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return R.results;
}

}  // namespace woq
