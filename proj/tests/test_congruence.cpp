#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "woq/congruence.hpp"
#include "woq/families.hpp"

using namespace woq;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::set<std::set<std::string>> class_words(const Congruence& c) {
  std::set<std::set<std::string>> out;
  for (const auto& rec : c.classes()) {
    std::set<std::string> cls;
    for (int64_t r : rec.members) cls.insert(c.lattice().perm(r).str());
    out.insert(std::move(cls));
  }
  return out;
}

JoinIrreducible JI(const char* s) { return JoinIrreducible::from_permutation(P(s)); }

}  // namespace

TEST_CASE("closure_bruteforce on S_3") {
  const Congruence c = Congruence::closure_bruteforce(3, {{P("132"), P("312")}});
  CHECK(c.num_classes() == 5);
  CHECK(class_words(c) ==
        std::set<std::set<std::string>>{
            {"123"}, {"132", "312"}, {"213"}, {"231"}, {"321"}});
  CHECK(c.pi_down(P("312")) == P("132"));
  CHECK(c.pi_up(P("132")) == P("312"));

  const Congruence none = Congruence::closure_bruteforce(3, {});
  CHECK(none.num_classes() == 6);

  std::vector<std::pair<Permutation, Permutation>> all_edges;
  const WeakOrder& W = *weak_order(3);
  for (int64_t r = 0; r < W.size(); ++r)
    for (int32_t s : W.covers_up(r)) all_edges.emplace_back(W.perm(r), W.perm(s));
  CHECK(Congruence::closure_bruteforce(3, all_edges).num_classes() == 1);

  CHECK_THROWS_AS(Congruence::closure_bruteforce(8, {}), capacity_error);
  CHECK_THROWS_AS(Congruence::closure_bruteforce(3, {{P("123"), P("321")}}),
                  std::invalid_argument);  // not a cover pair
}

TEST_CASE("forcing order on S_3: arrows and minimality") {
  const IrrConOrder& ord = irr_con_order(3);
  CHECK(ord.elements().size() == 4);
  auto below = [&](const char* hi) {
    std::set<std::string> out;
    for (const auto& g : ord.elements())
      if (g != JI(hi) && ord.leq(g, JI(hi))) out.insert(g.word().str());
    return out;
  };
  CHECK(below("213") == std::set<std::string>{"231", "312"});
  CHECK(below("132") == std::set<std::string>{"231", "312"});
  CHECK(below("231").empty());
  CHECK(below("312").empty());
  CHECK(ord.covers(JI("213")).size() == 2);
}

TEST_CASE("join-irreducibles with a cliff are minimal in the forcing order") {
  for (int n = 3; n <= 6; ++n) {
    const IrrConOrder& ord = irr_con_order(n);
    for (const auto& g : ord.elements())
      if (cliff_position(g.word()) != 0) CHECK(ord.covers(g).empty());
  }
}

TEST_CASE("covers of 3412 in Irr(Con(S_4))") {
  // A = {1,2} has M = n and m = 1, so the four-case list is empty
  CHECK(irr_con_order(4).covers(JI("3412")).empty());
}

TEST_CASE("forcing ideals") {
  auto words = [](const std::vector<JoinIrreducible>& v) {
    std::set<std::string> out;
    for (const auto& g : v) out.insert(g.word().str());
    return out;
  };
  CHECK(words(forcing_ideal(3, {JI("312")})) == std::set<std::string>{"312"});
  CHECK(forcing_ideal(4, {}).empty());
  CHECK(words(forcing_ideal(4, {JI("2341")})) == std::set<std::string>{"2341"});
  CHECK(words(forcing_ideal(3, {JI("213")})) ==
        std::set<std::string>{"213", "231", "312"});
}

TEST_CASE("congruence from contracted ideal") {
  const Congruence tam = Congruence::from_contracted(3, {JI("312")});
  CHECK(tam.num_classes() == 5);
  CHECK(class_words(tam) ==
        std::set<std::set<std::string>>{
            {"123"}, {"132", "312"}, {"213"}, {"231"}, {"321"}});
  CHECK(tam.contracted().size() == 1);

  CHECK(Congruence::trivial(3).num_classes() == 6);

  const Congruence both = Congruence::from_contracted(3, {JI("231"), JI("312")});
  CHECK(both.num_classes() == 4);
  std::set<std::string> bots;
  for (const auto& b : both.bottoms()) bots.insert(b.str());
  CHECK(bots == std::set<std::string>{"123", "132", "213", "321"});

  // a non-ideal is a caller error, not silently closed
  CHECK_THROWS_AS(Congruence::from_contracted(3, {JI("213")}), std::invalid_argument);
}

TEST_CASE("single-generator congruences match the brute-force closure") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : all_join_irreducibles(n)) {
      const Congruence brute =
          Congruence::closure_bruteforce(n, {{g.word_star(), g.word()}});
      const Congruence fast = Congruence::from_contracted(n, forcing_ideal(n, {g}));
      REQUIRE(brute.num_classes() == fast.num_classes());
      REQUIRE(class_words(brute) == class_words(fast));
      // contracted set of the closure equals the forcing ideal
      std::set<uint16_t> a, b;
      for (const auto& x : brute.contracted()) a.insert(x.A);
      for (const auto& x : forcing_ideal(n, {g})) b.insert(x.A);
      REQUIRE(a == b);
    }
}

TEST_CASE("meet and join of congruences") {
  const Congruence t231 = Congruence::from_contracted(4, contracted_jis(named_family("tamari231"), 4));
  const Congruence t312 = Congruence::from_contracted(4, contracted_jis(named_family("tamari"), 4));
  const Congruence tb = Congruence::from_contracted(4, contracted_jis(named_family("twisted-baxter"), 4));

  const Congruence m = Congruence::meet(t231, t312);
  CHECK(class_words(m) == class_words(tb));
  CHECK(class_words(Congruence::meet(t312, t312)) == class_words(t312));

  const Congruence j = Congruence::join(t312, Congruence::trivial(4));
  CHECK(class_words(j) == class_words(t312));
  // join bottoms = intersection of bottom sets (checked internally too)
  const Congruence j2 = Congruence::join(t231, t312);
  std::set<Permutation> b1, b2, bj;
  for (const auto& b : t231.bottoms()) b1.insert(b);
  for (const auto& b : t312.bottoms()) b2.insert(b);
  for (const auto& b : j2.bottoms()) bj.insert(b);
  std::set<Permutation> expect;
  std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                        std::inserter(expect, expect.begin()));
  CHECK(bj == expect);
}

TEST_CASE("parabolic congruences") {
  CHECK(Congruence::parabolic(3, {1, 2}).num_classes() == 6);  // trivial congruence
  CHECK(Congruence::parabolic(3, {}).num_classes() == 1);      // everything collapses
  const Congruence k1 = Congruence::parabolic(3, {1});
  CHECK(k1.num_classes() == 2);
  // the smallest congruence contracting the atom 132 = Cg(123 < 132)
  const Congruence cg = Congruence::closure_bruteforce(3, {{P("123"), P("132")}});
  CHECK(class_words(k1) == class_words(cg));
}

TEST_CASE("interval lemma: quotient intervals are images of intervals") {
  SplitMix64 rng(20240);
  for (int n = 4; n <= 6; ++n) {
    auto cong = FamilyContext(named_family(n == 5 ? "descent" : "tamari")).congruence(n);
    const WeakOrder& W = cong->lattice();
    for (int trial = 0; trial < 30; ++trial) {
      const int64_t a = static_cast<int64_t>(rng.below(W.size()));
      const int64_t b = static_cast<int64_t>(rng.below(W.size()));
      if (!W.leq(a, b)) continue;
      std::set<int> image;
      for (int64_t z = 0; z < W.size(); ++z)
        if (W.leq(a, z) && W.leq(z, b)) image.insert(cong->class_id_by_rank(z));
      std::set<int> quotient_interval;
      const Permutation pa = cong->pi_down(W.perm(a)), pb = cong->pi_down(W.perm(b));
      for (const auto& rec : cong->classes()) {
        const Permutation bot = W.perm(rec.bottom);
        if (weak_leq(pa, bot) && weak_leq(bot, pb))
          quotient_interval.insert(cong->class_id(bot));
      }
      CHECK(image == quotient_interval);
    }
  }
}

TEST_CASE("upper-coset restriction lemma") {
  // restriction of Theta to the parabolic corresponds to the restriction to
  // the top coset under u x v -> u |x v
  for (const char* name : {"tamari", "twisted-baxter"}) {
    FamilyContext fam(named_family(name));
    for (int n = 4; n <= 6; ++n) {
      auto cong = fam.congruence(n);
      for (int p = 1; p < n; ++p) {
        const int q = n - p;
        const WeakOrder& Wp = *weak_order(p);
        const WeakOrder& Wq = *weak_order(q);
        for (int64_t u1 = 0; u1 < Wp.size(); ++u1)
          for (int64_t v1 = 0; v1 < Wq.size(); ++v1)
            for (int64_t u2 = 0; u2 < Wp.size(); ++u2)
              for (int64_t v2 = 0; v2 < Wq.size(); ++v2) {
                const bool lo = cong->same_class(times(Wp.perm(u1), Wq.perm(v1)),
                                                 times(Wp.perm(u2), Wq.perm(v2)));
                const bool hi = cong->same_class(ltimes(Wp.perm(u1), Wq.perm(v1)),
                                                 ltimes(Wp.perm(u2), Wq.perm(v2)));
                REQUIRE(lo == hi);
              }
      }
    }
  }
}

TEST_CASE("refinement gives nested bottom sets") {
  FamilyContext tam(named_family("tamari")), desc(named_family("descent"));
  for (int n = 3; n <= 6; ++n) {
    auto ct = tam.congruence(n);
    auto cd = desc.congruence(n);
    CHECK(ct->refines(*cd));
    std::set<Permutation> bt, bd;
    for (const auto& b : ct->bottoms()) bt.insert(b);
    for (const auto& b : cd->bottoms()) bd.insert(b);
    CHECK(std::includes(bt.begin(), bt.end(), bd.begin(), bd.end()));
  }
}

TEST_CASE("compatibility verification") {
  for (int n = 3; n <= 5; ++n) {
    FamilyContext fam(named_family("tamari"));
    CHECK_NOTHROW(fam.congruence(n)->verify_compatibility());
  }
  // sampled at n = 6 and 7
  FamilyContext fam(named_family("twisted-baxter"));
  CHECK_NOTHROW(fam.congruence(6)->verify_compatibility(123, 20000));
  CHECK_NOTHROW(fam.congruence(7)->verify_compatibility(123, 20000));
}

TEST_CASE("quotient poset covers match the induced subposet") {
  for (const char* name : {"tamari", "descent", "twisted-baxter"}) {
    FamilyContext fam(named_family(name));
    for (int n = 3; n <= 6; ++n) {
      QuotientPoset Q(fam.congruence(n));
      for (int i = 0; i < Q.size(); ++i) {
        auto direct = Q.covers_down(i);
        std::sort(direct.begin(), direct.end());
        CHECK(direct == Q.covers_down_by_search(i));
      }
    }
  }
}

TEST_CASE("congruence json export") {
  const Congruence tam = Congruence::from_contracted(3, {JI("312")});
  CHECK(tam.to_json() ==
        R"({"classes":[["123"],["132","312"],["213"],["231"],["321"]],"n":3})");
}
