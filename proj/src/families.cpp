#include "woq/families.hpp"

#include <algorithm>
#include <charconv>

namespace woq {

namespace {

void validate_generators(std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    require(is_untranslated_ji(g),
            "family generator " + g.str() + " is not an untranslated join-irreducible");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

}  // namespace

FamilySpec FamilySpec::tr(std::vector<Permutation> gens) {
  validate_generators(gens);
  return FamilySpec{Kind::Tr, std::move(gens)};
}

FamilySpec FamilySpec::h(std::vector<Permutation> gens) {
  validate_generators(gens);
  return FamilySpec{Kind::H, std::move(gens)};
}

std::string FamilySpec::str() const {
  std::string s = kind == Kind::Tr ? "Tr(" : "H(";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ',';
    s += generators[i].str();
  }
  return s + ")";
}

std::vector<Permutation> untranslated_jis(int k) {
  std::vector<Permutation> out;
  for (const auto& j : all_join_irreducibles(k))
    if (j.m() == 1 && j.M() == k) out.push_back(j.word());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> parse_generators(const std::string& csv) {
  std::vector<Permutation> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t next = csv.find(',', pos);
    const std::string tok = csv.substr(pos, next == std::string::npos ? next : next - pos);
    if (!tok.empty()) out.push_back(Permutation::parse(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  require(!out.empty(), "no generators given");
  return out;
}

FamilySpec named_family(const std::string& name) {
  auto ji = [](const char* w) { return Permutation::parse(w); };
  std::string base = name;
  int k = -1;
  // "snk 3", "snk-3", "pnk 3", "pnk-3"
  if (name.size() > 4 && (name.rfind("snk", 0) == 0 || name.rfind("pnk", 0) == 0) &&
      (name[3] == ' ' || name[3] == '-')) {
    base = name.substr(0, 3);
    const std::string arg = name.substr(4);
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
    require(ec == std::errc() && p == arg.data() + arg.size() && k >= 1 && k <= 10,
            "bad family parameter: " + name);
  }
  if (base == "trivial") return FamilySpec::h({});
  if (base == "full") return FamilySpec::h({ji("21")});
  if (base == "tamari") return FamilySpec::h({ji("312")});
  if (base == "tamari231") return FamilySpec::h({ji("231")});
  if (base == "descent") return FamilySpec::h({ji("231"), ji("312")});
  if (base == "twisted-baxter") return FamilySpec::h({ji("2413"), ji("3412")});
  if (base == "snk") return FamilySpec::h(untranslated_jis(k + 1));
  if (base == "pnk") {
    std::vector<int> w{k + 1};
    for (int v = 1; v <= k; ++v) w.push_back(v);
    return FamilySpec::h({ji("231"), Permutation(std::move(w))});
  }
  throw std::invalid_argument("unknown family: " + name);
}

// --- insertions -------------------------------------------------------------

JoinIrreducible left_insert(const JoinIrreducible& g, int i) {
  require(i >= 1 && i <= g.n + 1, "left_insert: i in [1, n+1]");
  const uint32_t low = g.A & ((1u << (i - 1)) - 1);
  const uint32_t high = (static_cast<uint32_t>(g.A) & ~((1u << (i - 1)) - 1)) << 1;
  return JoinIrreducible::from_mask(g.n + 1, static_cast<uint16_t>(low | high));
}

JoinIrreducible right_insert(const JoinIrreducible& g, int i) {
  require(i >= 1 && i <= g.n + 1, "right_insert: i in [1, n+1]");
  const uint32_t low = g.A & ((1u << (i - 1)) - 1);
  const uint32_t high = (static_cast<uint32_t>(g.A) & ~((1u << (i - 1)) - 1)) << 1;
  return JoinIrreducible::from_mask(g.n + 1, static_cast<uint16_t>(low | high | (1u << (i - 1))));
}

Permutation left_insert(const Permutation& g, int i) {
  return left_insert(JoinIrreducible::from_permutation(g), i).word();
}

Permutation right_insert(const Permutation& g, int i) {
  return right_insert(JoinIrreducible::from_permutation(g), i).word();
}

std::vector<Permutation> tr_covers(const Permutation& g) {
  require(is_untranslated_ji(g), "tr_covers: " + g.str() + " is not untranslated");
  const auto j = JoinIrreducible::from_permutation(g);
  const int n = j.n;
  std::vector<Permutation> out{right_insert(j, 1).word(), left_insert(j, 2).word(),
                               right_insert(j, n).word(), left_insert(j, n + 1).word()};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> h_covers(const Permutation& g) {
  require(is_untranslated_ji(g), "h_covers: " + g.str() + " is not untranslated");
  const auto j = JoinIrreducible::from_permutation(g);
  const int n = j.n;
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) out.push_back(right_insert(j, i).word());
  for (int i = 2; i <= n + 1; ++i) out.push_back(left_insert(j, i).word());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- contracted sets ----------------------------------------------------------

std::vector<JoinIrreducible> contracted_jis(const FamilySpec& spec, int n) {
  if (spec.kind == FamilySpec::Kind::H) {
    std::vector<JoinIrreducible> out;
    for (const auto& j : all_join_irreducibles(n)) {
      const Permutation w = j.word();
      for (const auto& g : spec.generators)
        if (occurs(g, w)) { out.push_back(j); break; }
    }
    return out;
  }
  // Tr: forcing ideal of all translates 1_p x g x 1_q that fit in S_n
  std::vector<JoinIrreducible> gens;
  for (const auto& g : spec.generators) {
    const auto j = JoinIrreducible::from_permutation(g);
    const int k = j.n;
    for (int p = 0; p + k <= n; ++p) {
      const int q = n - k - p;
      uint16_t A = static_cast<uint16_t>(static_cast<uint32_t>(j.A) << p);
      for (int v = p + k + 1; v <= p + k + q; ++v) A |= 1u << (v - 1);
      gens.push_back(JoinIrreducible::from_mask(n, A));
    }
  }
  return forcing_ideal(n, gens);
}

// --- scramble-occurrence machinery ---------------------------------------------
//
// A scramble of g (cliff at j) occurs in x with adjacent cliff iff x has a
// descent pair (x_p, x_{p+1}) = (max, min of the occurrence) such that the
// k-2 in-between ranks can be drawn from values in (x_{p+1}, x_p), matching
// g's left/right split: rank r goes left of p iff r is an entry of g before
// the cliff. Greedy subsequence test over the values in increasing order.

namespace {

struct GenPattern {
  int k = 0;
  std::vector<char> side;  // side[r-2] for rank r in [2, k-1]: 1 = left of cliff
};

GenPattern gen_pattern(const Permutation& g) {
  GenPattern gp;
  gp.k = g.size();
  const int j = cliff_position(g);
  WOQ_CHECK(j != 0, "generator lost its cliff");
  gp.side.assign(std::max(0, gp.k - 2), 0);
  for (int i = 1; i < j; ++i) gp.side[g[i] - 2] = 1;
  return gp;
}

// One descent pair (positions p, p+1, zero-based p0 = p-1), values in word.
bool matches_at(const GenPattern& gp, std::span<const int> w, std::span<const int> pos,
                int p0) {
  const int hi = w[p0], lo = w[p0 + 1];
  if (hi - lo - 1 < gp.k - 2) return false;
  size_t need = 0;
  for (int v = lo + 1; v < hi && need < gp.side.size(); ++v) {
    const bool is_left = pos[v - 1] < p0;
    if ((gp.side[need] != 0) == is_left) ++need;
  }
  return need == gp.side.size();
}

}  // namespace

bool is_contracted_word(const FamilySpec& spec, std::span<const int> x) {
  require(spec.kind == FamilySpec::Kind::H,
          "is_contracted_perm requires an H-family (Tr families lack the "
          "cliff-avoidance characterization)");
  const int n = static_cast<int>(x.size());
  if (n < 2 || spec.generators.empty()) return false;
  require(n <= 16, "is_contracted_word: n <= 16");
  int pos_buf[16];
  for (int i = 0; i < n; ++i) pos_buf[x[i] - 1] = i;
  std::span<const int> pos(pos_buf, n);
  for (const auto& g : spec.generators) {
    if (g.size() > n) continue;
    const GenPattern gp = gen_pattern(g);
    for (int p0 = 0; p0 + 1 < n; ++p0)
      if (x[p0] > x[p0 + 1] && matches_at(gp, x, pos, p0)) return true;
  }
  return false;
}

bool is_contracted_perm(const FamilySpec& spec, const Permutation& x) {
  return is_contracted_word(spec, x.span());
}

Permutation pi_down_fast(const FamilySpec& spec, const Permutation& x) {
  require(spec.kind == FamilySpec::Kind::H, "pi_down_fast requires an H-family");
  const int n = x.size();
  std::vector<int> w = x.word();
  std::vector<int> pos(n);
  std::vector<GenPattern> gps;
  for (const auto& g : spec.generators)
    if (g.size() <= n) gps.push_back(gen_pattern(g));
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) pos[w[i] - 1] = i;
    for (int p0 = 0; p0 + 1 < n && !moved; ++p0) {
      if (w[p0] <= w[p0 + 1]) continue;
      for (const auto& gp : gps) {
        if (matches_at(gp, w, pos, p0)) {
          std::swap(w[p0], w[p0 + 1]);  // a contracted down-edge: strict step
          moved = true;
          break;
        }
      }
    }
  }
  return Permutation(std::move(w));
}

// --- family-wide definitional checks -----------------------------------------

bool is_translational(const CongruenceProvider& family, int N) {
  for (int n = 2; n <= N; ++n) {
    const Congruence& big = family(n);
    require(big.n() == n, "provider returned wrong congruence");
    for (int p = 1; p < n; ++p) {
      const int q = n - p;
      const Congruence& A = family(p);
      const Congruence& B = family(q);
      const WeakOrder& Wp = *weak_order(p);
      const WeakOrder& Wq = *weak_order(q);
      for (int64_t u = 0; u < Wp.size(); ++u)
        for (int64_t u2 = 0; u2 < Wp.size(); ++u2)
          for (int64_t v = 0; v < Wq.size(); ++v)
            for (int64_t v2 = 0; v2 < Wq.size(); ++v2) {
              const bool fine = A.class_id_by_rank(u) == A.class_id_by_rank(u2) &&
                                B.class_id_by_rank(v) == B.class_id_by_rank(v2);
              const bool coarse =
                  big.same_class(times(Wp.perm(u), Wq.perm(v)), times(Wp.perm(u2), Wq.perm(v2)));
              if (fine != coarse) return false;
            }
    }
  }
  return true;
}

bool is_insertional(const CongruenceProvider& family, int N) {
  for (int n = 2; n < N; ++n) {
    const Congruence& cur = family(n);
    const Congruence& next = family(n + 1);
    std::vector<char> next_contracted(1u << (n + 1), 0);
    for (const auto& g : next.contracted()) next_contracted[g.A] = 1;
    for (const auto& g : cur.contracted()) {
      const int m = g.m(), M = g.M();
      for (int i = m + 1; i <= M + 1; ++i)
        if (!next_contracted[right_insert(g, i).A]) return false;
      for (int i = m; i <= M; ++i)
        if (!next_contracted[left_insert(g, i).A]) return false;
    }
  }
  return true;
}

// --- Baxter-flavored predicates ------------------------------------------------

bool twisted_baxter(std::span<const int> x) {
  const int n = static_cast<int>(x.size());
  require(n <= 16, "twisted_baxter: n <= 16");
  int pos[16];
  for (int i = 0; i < n; ++i) pos[x[i] - 1] = i;
  for (int p = 0; p + 1 < n; ++p) {
    if (x[p] <= x[p + 1]) continue;
    const int lo = x[p + 1], hi = x[p];
    bool left = false, right = false;
    for (int v = lo + 1; v < hi; ++v) {
      if (pos[v - 1] < p) left = true;
      else right = true;
      if (left && right) return false;  // a 2413 or 3412 with adjacent cliff
    }
  }
  return true;
}

bool baxter(std::span<const int> x) {
  const int n = static_cast<int>(x.size());
  require(n <= 16, "baxter: n <= 16");
  int pos[16];
  for (int i = 0; i < n; ++i) pos[x[i] - 1] = i;
  for (int p = 0; p + 1 < n; ++p) {
    const int a = x[p], b = x[p + 1];
    if (a > b) {
      // 2413 with "4","1" adjacent: left value < right value, both in (b, a)
      int min_left = n + 1, max_right = 0;
      for (int v = b + 1; v < a; ++v) {
        if (pos[v - 1] < p) min_left = std::min(min_left, v);
        else max_right = std::max(max_right, v);
      }
      if (min_left < max_right) return false;
    } else {
      // 3142 with "1","4" adjacent: left value > right value, both in (a, b)
      int max_left = 0, min_right = n + 1;
      for (int v = a + 1; v < b; ++v) {
        if (pos[v - 1] < p) max_left = std::max(max_left, v);
        else min_right = std::min(min_right, v);
      }
      if (max_left > min_right) return false;
    }
  }
  return true;
}

// --- FamilyContext -------------------------------------------------------------

FamilyContext::FamilyContext(FamilySpec spec) : spec_(std::move(spec)) {}

std::shared_ptr<const Congruence> FamilyContext::congruence(int n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(n);
  if (it == memo_.end()) {
    auto c = std::make_shared<Congruence>(
        Congruence::from_contracted(n, contracted_jis(spec_, n)));
    it = memo_.emplace(n, std::move(c)).first;
  }
  return it->second;
}

int64_t FamilyContext::count_bottoms(int n, int threads) const {
  require(n >= 0, "count_bottoms: n >= 0");
  if (n <= 1) return 1;
  if (spec_.kind == FamilySpec::Kind::Tr) return congruence(n)->num_classes();
  require_capacity(n <= 12, "count_bottoms limited to n <= 12");
  const int64_t N = factorial(n);
  std::vector<int64_t> partial(std::max(1, threads), 0);
  parallel_chunks(N, threads, [&](int t, int64_t b, int64_t e) {
    std::vector<int> w = perm_unrank(n, b).word();
    int64_t cnt = 0;
    for (int64_t r = b; r < e; ++r) {
      if (!is_contracted_word(spec_, w)) ++cnt;
      std::next_permutation(w.begin(), w.end());
    }
    partial[t] += cnt;
  });
  int64_t total = 0;
  for (int64_t c : partial) total += c;
  return total;
}

std::vector<Permutation> FamilyContext::bottoms(int n) const {
  if (spec_.kind == FamilySpec::Kind::Tr) return congruence(n)->bottoms();
  require_capacity(n <= 10, "bottoms listing limited to n <= 10");
  std::vector<Permutation> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> w = Permutation::identity(n).word();
  do {
    if (!is_contracted_word(spec_, w)) out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    const int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

bool FamilyContext::is_bottom(const Permutation& x) const {
  if (spec_.kind == FamilySpec::Kind::H) return !is_contracted_perm(spec_, x);
  return congruence(x.size())->is_bottom(x);
}

}  // namespace woq
