#include "woq/hopf.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <tuple>

#include "json.hpp"

namespace woq {

namespace {

std::string perm_label(const Permutation& x) { return x.empty() ? "e" : x.str(); }

std::string coeff_prefix(const Rational& c, bool first) {
  const bool neg = sgn(c) < 0;
  Rational a = abs(c);
  std::string s = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (a != 1) s += a.get_str() + "*";
  return s;
}

}  // namespace

void GradedVector::add(const Permutation& x, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    terms_.emplace(x, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

GradedVector GradedVector::operator*(const Rational& c) const {
  GradedVector out;
  if (c == 0) return out;
  for (const auto& [x, k] : terms_) out.terms_.emplace(x, k * c);
  return out;
}

Rational GradedVector::coeff(const Permutation& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string GradedVector::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    s += coeff_prefix(c, first) + perm_label(x);
    first = false;
  }
  return s;
}

std::string GradedVector::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [x, c] : terms_)
    j.push_back({{"coeff", c.get_str()}, {"word", x.str()}});
  return j.dump();
}

void TensorVector::add(const Permutation& a, const Permutation& b, const Rational& c) {
  if (c == 0) return;
  const Key k{a, b};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

std::string TensorVector::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    s += coeff_prefix(c, first) + perm_label(k.first) + " (x) " + perm_label(k.second);
    first = false;
  }
  return s;
}

std::string TensorVector::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, c] : terms_)
    j.push_back({{"coeff", c.get_str()}, {"left", k.first.str()}, {"right", k.second.str()}});
  return j.dump();
}

// --- MR product and coproduct -------------------------------------------------

GradedVector mr_product(const Permutation& u, const Permutation& v) {
  const int p = u.size(), q = v.size();
  require(p + q <= 12, "mr_product: degree <= 12");
  GradedVector out;
  // iterate all p-subsets of positions for u's letters
  std::vector<int> w(p + q);
  const uint32_t full = (1u << (p + q)) - 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != p) continue;
    int ui = 1, vi = 1;
    for (int i = 0; i < p + q; ++i)
      w[i] = (mask & (1u << i)) ? u[ui++] : p + v[vi++];
    out.add(Permutation(w), 1);
    if (p + q == 0) break;
  }
  return out;
}

GradedVector mr_product(const GradedVector& a, const GradedVector& b) {
  GradedVector out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      GradedVector t = mr_product(u, v);
      for (const auto& [w, c] : t.terms()) out.add(w, c * cu * cv);
    }
  return out;
}

GradedVector mr_product_interval(const Permutation& u, const Permutation& v) {
  const Permutation lo = times(u, v), hi = ltimes(u, v);
  const int n = lo.size();
  GradedVector out;
  if (n == 0) {
    out.add(lo, 1);
    return out;
  }
  // walk the interval [lo, hi] upward
  std::vector<Permutation> stack{lo};
  std::set<Permutation> seen{lo};
  while (!stack.empty()) {
    Permutation x = std::move(stack.back());
    stack.pop_back();
    out.add(x, 1);
    for (const auto& y : covers_up(x))
      if (weak_leq(y, hi) && seen.insert(y).second) stack.push_back(y);
  }
  return out;
}

TensorVector mr_coproduct(const Permutation& x) {
  const int n = x.size();
  TensorVector out;
  for (int p = 0; p <= n; ++p) {
    std::span<const int> w = x.span();
    out.add(standardize(w.subspan(0, p)), standardize(w.subspan(p)), 1);
  }
  return out;
}

TensorVector mr_coproduct(const GradedVector& a) {
  TensorVector out;
  for (const auto& [x, c] : a.terms()) {
    TensorVector t = mr_coproduct(x);
    for (const auto& [k, v] : t.terms()) out.add(k.first, k.second, v * c);
  }
  return out;
}

// --- HopfAlgebra ----------------------------------------------------------------

struct HopfAlgebra::AntipodeCache {
  std::mutex mu;
  std::map<Permutation, GradedVector> memo;
};

HopfAlgebra::HopfAlgebra() : cache_(std::make_shared<AntipodeCache>()) {}

HopfAlgebra HopfAlgebra::malvenuto_reutenauer() { return HopfAlgebra(); }

HopfAlgebra HopfAlgebra::quotient(std::shared_ptr<const FamilyContext> family) {
  HopfAlgebra h;
  h.family_ = std::move(family);
  return h;
}

bool HopfAlgebra::is_basis(const Permutation& x) const {
  return family_ == nullptr || family_->is_bottom(x);
}

std::vector<Permutation> HopfAlgebra::basis(int degree) const {
  if (family_) return family_->bottoms(degree);
  require_capacity(degree <= 8, "MR basis listing limited to degree <= 8");
  std::vector<Permutation> out;
  if (degree == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> w = Permutation::identity(degree).word();
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

GradedVector HopfAlgebra::c_map(const Permutation& bottom) const {
  GradedVector out;
  if (!family_) {
    out.add(bottom, 1);
    return out;
  }
  require(family_->is_bottom(bottom), "c_map: " + bottom.str() + " is not a class bottom");
  const auto cong = family_->congruence(bottom.size());
  const auto& rec = cong->classes()[cong->class_id(bottom)];
  for (int64_t r : rec.members) out.add(cong->lattice().perm(r), 1);
  return out;
}

GradedVector HopfAlgebra::c_map(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [x, c] : v.terms()) out += c_map(x) * c;
  return out;
}

GradedVector HopfAlgebra::r_map(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [x, c] : v.terms())
    if (is_basis(x)) out.add(x, c);
  return out;
}

GradedVector HopfAlgebra::product(const Permutation& u, const Permutation& v) const {
  if (!family_) return mr_product(u, v);
  require(family_->is_bottom(u) && family_->is_bottom(v),
          "quotient product arguments must be class bottoms");
  // route 1: filter the MR product of class sums
  const GradedVector filtered = r_map(mr_product(c_map(u), c_map(v)));
  // route 2: the direct sum over bottoms x of S_{p+q} with x_pbar = u x v,
  // i.e. the shuffles of u and v that are bottoms
  GradedVector direct;
  for (const auto& [w, c] : mr_product(u, v).terms())
    if (family_->is_bottom(w)) direct.add(w, c);
  WOQ_CHECK(filtered == direct,
            "quotient product routes disagree (family is not translational)");
  return direct;
}

GradedVector HopfAlgebra::product(const GradedVector& a, const GradedVector& b) const {
  GradedVector out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out += product(u, v) * (cu * cv);
  return out;
}

TensorVector HopfAlgebra::coproduct(const Permutation& x) const {
  if (!family_) return mr_coproduct(x);
  require(family_->is_bottom(x), "quotient coproduct argument must be a class bottom");
  // (r (x) r) o Delta_S o c
  TensorVector out;
  for (const auto& [y, cy] : c_map(x).terms()) {
    const int n = y.size();
    for (int p = 0; p <= n; ++p) {
      std::span<const int> w = y.span();
      const Permutation a = standardize(w.subspan(0, p));
      const Permutation b = standardize(w.subspan(p));
      if (is_basis(a) && is_basis(b)) out.add(a, b, cy);
    }
  }
  return out;
}

TensorVector HopfAlgebra::coproduct(const GradedVector& a) const {
  TensorVector out;
  for (const auto& [x, c] : a.terms()) {
    TensorVector t = coproduct(x);
    for (const auto& [k, v] : t.terms()) out.add(k.first, k.second, v * c);
  }
  return out;
}

TensorVector HopfAlgebra::coproduct_triple_sum(const Permutation& x) const {
  require(family_ != nullptr, "triple-sum coproduct is the quotient formula");
  const int n = x.size();
  std::vector<std::vector<Permutation>> bots(n + 1);
  for (int d = 0; d <= n; ++d) bots[d] = family_->bottoms(d);
  TensorVector out;
  for (int p = 0; p <= n; ++p) {
    const int q = n - p;
    // value split: S = values taken by the prefix letters
    std::vector<int> comb(p);
    for (int i = 0; i < p; ++i) comb[i] = i + 1;
    while (true) {
      std::vector<int> rest;
      {
        std::vector<char> used(n + 1, 0);
        for (int v : comb) used[v] = 1;
        for (int v = 1; v <= n; ++v)
          if (!used[v]) rest.push_back(v);
      }
      for (const auto& u : bots[p]) {
        for (const auto& v : bots[q]) {
          std::vector<int> w(n);
          for (int i = 1; i <= p; ++i) w[i - 1] = comb[u[i] - 1];
          for (int i = 1; i <= q; ++i) w[p + i - 1] = rest[v[i] - 1];
          if (pi_down_fast(family_->spec(), Permutation(w)) == x) out.add(u, v, 1);
        }
      }
      // next p-combination of [n]
      int i = p - 1;
      while (i >= 0 && comb[i] == n - (p - 1 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

GradedVector HopfAlgebra::mr_antipode(const Permutation& x) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->memo.find(x);
    if (it != cache_->memo.end()) return it->second;
  }
  const int n = x.size();
  GradedVector out;
  if (n == 0) {
    out.add(x, 1);
  } else {
    out.add(x, -1);
    for (int p = 1; p < n; ++p) {
      std::span<const int> w = x.span();
      const GradedVector su = mr_antipode(standardize(w.subspan(0, p)));
      const Permutation v = standardize(w.subspan(p));
      for (const auto& [a, ca] : su.terms()) {
        GradedVector t = woq::mr_product(a, v);
        for (const auto& [b, cb] : t.terms()) out.add(b, -ca * cb);
      }
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->memo.emplace(x, std::move(out)).first->second;
}

GradedVector HopfAlgebra::antipode(const Permutation& x) const {
  if (!family_) return mr_antipode(x);
  require(family_->is_bottom(x), "quotient antipode argument must be a class bottom");
  GradedVector acc;
  for (const auto& [y, c] : c_map(x).terms()) acc += mr_antipode(y) * c;
  return r_map(acc);
}

GradedVector HopfAlgebra::antipode(const GradedVector& a) const {
  GradedVector out;
  for (const auto& [x, c] : a.terms()) out += antipode(x) * c;
  return out;
}

Rational HopfAlgebra::counit(const GradedVector& v) const {
  return v.coeff(Permutation());
}

AxiomReport HopfAlgebra::check_axioms(int max_degree) const {
  require_capacity(family_ ? max_degree <= 7 : max_degree <= 6,
                   "check_axioms degree guard: <= 6 for MR, <= 7 for quotients");
  AxiomReport rep;
  auto fail = [&](std::string msg) {
    rep.pass = false;
    if (rep.failures.size() < 16) rep.failures.push_back(std::move(msg));
  };
  std::vector<std::vector<Permutation>> bas(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) bas[d] = basis(d);
  const Permutation unit;  // empty permutation

  // unit and counit laws
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& x : bas[d]) {
      if (product(unit, x) != GradedVector(x) || product(x, unit) != GradedVector(x))
        fail("unit law fails at " + perm_label(x));
      // (eps (x) id) Delta = id = (id (x) eps) Delta
      GradedVector left, right;
      for (const auto& [k, c] : coproduct(x).terms()) {
        if (k.first.empty()) left.add(k.second, c);
        if (k.second.empty()) right.add(k.first, c);
      }
      if (left != GradedVector(x) || right != GradedVector(x))
        fail("counit law fails at " + perm_label(x));
    }

  // associativity on basis triples
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; p + q <= max_degree; ++q)
      for (int r = 0; p + q + r <= max_degree; ++r) {
        if (p == 0 && q == 0 && r == 0) continue;
        for (const auto& a : bas[p])
          for (const auto& b : bas[q])
            for (const auto& c : bas[r]) {
              if (product(product(a, b), GradedVector(c)) !=
                  product(GradedVector(a), product(b, c)))
                fail("associativity fails at (" + perm_label(a) + ", " + perm_label(b) +
                     ", " + perm_label(c) + ")");
            }
      }

  // coassociativity
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& x : bas[d]) {
      // (Delta (x) id) Delta(x) vs (id (x) Delta) Delta(x), as maps of triples
      std::map<std::tuple<Permutation, Permutation, Permutation>, Rational> lhs, rhs;
      for (const auto& [k, c] : coproduct(x).terms()) {
        for (const auto& [k2, c2] : coproduct(k.first).terms()) {
          auto key = std::make_tuple(k2.first, k2.second, k.second);
          if ((lhs[key] += c * c2) == 0) lhs.erase(key);
        }
        for (const auto& [k2, c2] : coproduct(k.second).terms()) {
          auto key = std::make_tuple(k.first, k2.first, k2.second);
          if ((rhs[key] += c * c2) == 0) rhs.erase(key);
        }
      }
      if (lhs != rhs) fail("coassociativity fails at " + perm_label(x));
    }

  // bialgebra compatibility: Delta(a*b) = Delta(a)*Delta(b) componentwise
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; p + q <= max_degree; ++q)
      for (const auto& a : bas[p])
        for (const auto& b : bas[q]) {
          TensorVector lhs = coproduct(product(a, b));
          TensorVector rhs;
          for (const auto& [ka, ca] : coproduct(a).terms())
            for (const auto& [kb, cb] : coproduct(b).terms()) {
              const GradedVector l = product(ka.first, kb.first);
              const GradedVector r = product(ka.second, kb.second);
              for (const auto& [x1, c1] : l.terms())
                for (const auto& [x2, c2] : r.terms())
                  rhs.add(x1, x2, ca * cb * c1 * c2);
            }
          if (lhs != rhs)
            fail("bialgebra compatibility fails at (" + perm_label(a) + ", " +
                 perm_label(b) + ")");
        }

  // antipode identity: m(S (x) id)Delta(x) = eps(x) * unit = m(id (x) S)Delta(x)
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& x : bas[d]) {
      GradedVector lhs, rhs;
      for (const auto& [k, c] : coproduct(x).terms()) {
        lhs += product(antipode(k.first), GradedVector(k.second)) * c;
        rhs += product(GradedVector(k.first), antipode(k.second)) * c;
      }
      GradedVector expect;
      if (d == 0) expect.add(unit, 1);
      if (lhs != expect || rhs != expect) fail("antipode identity fails at " + perm_label(x));
    }

  return rep;
}

std::string AxiomReport::summary() const {
  if (pass) return "all Hopf axioms verified";
  std::string s = "FAILED:";
  for (const auto& f : failures) s += "\n  " + f;
  return s;
}

}  // namespace woq
