#include "woq/fan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "json.hpp"

namespace woq {

namespace {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// Gaussian elimination; returns rank, reduces m in place.
int rank_q(QMat m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r != row && m[r][col] != 0) {
        const mpq_class f = m[r][col] / m[row][col];
        for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
      }
    }
    ++row;
  }
  return static_cast<int>(row);
}

// Basis of { v : m v = 0 } in Q^n.
QMat nullspace_q(QMat m, int n) {
  if (m.empty()) {
    QMat basis;
    for (int i = 0; i < n; ++i) {
      QVec e(n, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int col = 0; col < n && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const mpq_class d = m[row][col];
    for (int c = 0; c < n; ++c) m[row][c] /= d;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r != row && m[r][col] != 0) {
        const mpq_class f = m[r][col];
        for (int c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  QMat basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVec v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

QVec to_q(std::span<const long long> v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = static_cast<long>(v[i]);
  return q;
}

mpq_class dot(const QVec& a, const QVec& b) {
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<long long> primitive_integer(const QVec& v) {
  mpz_class lcm = 1;
  for (const auto& q : v) lcm = ::lcm(lcm, q.get_den());
  mpz_class gcd = 0;
  std::vector<mpz_class> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = mpz_class(v[i] * lcm);
    gcd = ::gcd(gcd, w[i]);
  }
  WOQ_CHECK(gcd != 0, "primitive_integer: zero vector");
  std::vector<long long> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    mpz_class z = w[i] / gcd;
    WOQ_CHECK(z.fits_slong_p(), "primitive_integer: overflow");
    out[i] = z.get_si();
  }
  return out;
}

}  // namespace

// --- RationalCone --------------------------------------------------------------

RationalCone::RationalCone(int n, const std::vector<std::pair<int, int>>& leq_pairs)
    : n_(n), leq_(n, 0) {
  require(n >= 1 && n <= 12, "RationalCone: 1 <= n <= 12");
  for (int a = 1; a <= n; ++a) leq_[a - 1] = static_cast<uint16_t>(1u << (a - 1));
  for (auto [a, b] : leq_pairs) {
    require(a >= 1 && a <= n && b >= 1 && b <= n, "RationalCone: coordinate out of range");
    leq_[a - 1] |= static_cast<uint16_t>(1u << (b - 1));
  }
  close();
}

void RationalCone::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n_; ++a) {
      uint16_t acc = leq_[a];
      uint16_t m = acc;
      while (m) {
        const int b = std::countr_zero(m);
        m &= static_cast<uint16_t>(m - 1);
        acc |= leq_[b];
      }
      if (acc != leq_[a]) {
        leq_[a] = acc;
        changed = true;
      }
    }
  }
}

bool RationalCone::forces(int a, int b) const {
  return leq_[a - 1] & (1u << (b - 1));
}

bool RationalCone::same_block(int a, int b) const { return forces(a, b) && forces(b, a); }

std::vector<std::vector<int>> RationalCone::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n_ + 1, 0);
  for (int a = 1; a <= n_; ++a) {
    if (seen[a]) continue;
    std::vector<int> blk;
    for (int b = a; b <= n_; ++b)
      if (same_block(a, b)) {
        blk.push_back(b);
        seen[b] = 1;
      }
    out.push_back(std::move(blk));
  }
  return out;
}

int RationalCone::dim() const { return static_cast<int>(blocks().size()); }

int RationalCone::lineality_dim() const {
  // components of the comparability graph on blocks
  const auto blks = blocks();
  const int k = static_cast<int>(blks.size());
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int d = 0; d < k; ++d)
        if (comp[d] < 0 &&
            (forces(blks[c][0], blks[d][0]) || forces(blks[d][0], blks[c][0]))) {
          comp[d] = ncomp;
          stack.push_back(d);
        }
    }
    ++ncomp;
  }
  return ncomp;
}

bool RationalCone::contains(std::span<const long long> p) const {
  require(static_cast<int>(p.size()) == n_, "contains: wrong dimension");
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b) {
      if (forces(a, b) && !(p[a - 1] <= p[b - 1])) return false;
      if (forces(b, a) && !(p[b - 1] <= p[a - 1])) return false;
    }
  return true;
}

bool RationalCone::strictly_contains(std::span<const long long> p) const {
  if (!contains(p)) return false;
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b) {
      if (a == b) continue;
      if (same_block(a, b) && p[a - 1] != p[b - 1]) return false;
      if (forces(a, b) && !forces(b, a) && !(p[a - 1] < p[b - 1])) return false;
    }
  return true;
}

RationalCone RationalCone::intersect(const RationalCone& o) const {
  require(n_ == o.n_, "intersect: dimension mismatch");
  RationalCone out = *this;
  for (int a = 0; a < n_; ++a) out.leq_[a] |= o.leq_[a];
  out.close();
  return out;
}

bool RationalCone::subset_of(const RationalCone& o) const {
  require(n_ == o.n_, "subset_of: dimension mismatch");
  for (int a = 0; a < n_; ++a)
    if (o.leq_[a] & ~leq_[a]) return false;
  return true;
}

bool RationalCone::is_face_of(const RationalCone& o) const {
  if (!subset_of(o)) return false;
  // tighten o at exactly the constraints that are equalities on *this
  RationalCone t = o;
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      if (a != b && o.forces(a, b) && same_block(a, b))
        t.leq_[b - 1] |= static_cast<uint16_t>(1u << (a - 1));
  t.close();
  return t == *this;
}

std::vector<std::vector<long long>> RationalCone::facet_normals() const {
  const auto blks = blocks();
  const int k = static_cast<int>(blks.size());
  std::vector<std::vector<long long>> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !forces(blks[i][0], blks[j][0])) continue;
      // Hasse edge test: no block strictly between
      bool hasse = true;
      for (int l = 0; l < k && hasse; ++l)
        if (l != i && l != j && forces(blks[i][0], blks[l][0]) && forces(blks[l][0], blks[j][0]))
          hasse = false;
      if (!hasse) continue;
      std::vector<long long> nu(n_, 0);
      nu[blks[j][0] - 1] = 1;
      nu[blks[i][0] - 1] = -1;
      out.push_back(std::move(nu));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> canonical_ray(std::span<const long long> v) {
  const int n = static_cast<int>(v.size());
  long long s = 0;
  for (long long a : v) s += a;
  QVec q(n);
  for (int i = 0; i < n; ++i) q[i] = mpq_class(static_cast<long>(n * v[i] - s));
  return primitive_integer(q);
}

std::vector<std::vector<long long>> RationalCone::extreme_rays() const {
  // equality rows: spanning chains inside blocks
  QMat eq;
  for (const auto& blk : blocks())
    for (size_t t = 1; t < blk.size(); ++t) {
      QVec row(n_, 0);
      row[blk[t - 1] - 1] = 1;
      row[blk[t] - 1] = -1;
      eq.push_back(std::move(row));
    }
  const auto facets = facet_normals();
  QMat fac;
  for (const auto& nu : facets) fac.push_back(to_q(nu));

  {  // lineality must be exactly the all-ones line
    QMat all = eq;
    for (const auto& r : fac) all.push_back(r);
    const QMat lin = nullspace_q(all, n_);
    require(lin.size() == 1, "extreme_rays requires lineality = span(1)");
  }

  std::set<std::vector<long long>> found;
  const uint32_t nf = static_cast<uint32_t>(fac.size());
  require_capacity(nf <= 20, "extreme_rays: too many facets");
  for (uint32_t S = 0; S < (1u << nf); ++S) {
    QMat m = eq;
    for (uint32_t i = 0; i < nf; ++i)
      if (S & (1u << i)) m.push_back(fac[i]);
    const QMat ns = nullspace_q(std::move(m), n_);
    if (ns.size() != 2) continue;
    // pick the direction in the null plane orthogonal to 1 (up to sign)
    // basis {u, w}; candidate = w - (sum w / n) 1 projected within the plane
    QVec cand;
    for (const auto& w : ns) {
      mpq_class s = 0;
      for (const auto& c : w) s += c;
      QVec proj(n_);
      bool nonzero = false;
      for (int i = 0; i < n_; ++i) {
        proj[i] = w[i] - s / n_;
        if (proj[i] != 0) nonzero = true;
      }
      if (nonzero) {
        cand = std::move(proj);
        break;
      }
    }
    if (cand.empty()) continue;
    const QVec ones(n_, 1);
    // the projection must stay in the null plane: check it satisfies eq+S
    bool pos = true, neg = true;
    for (const auto& nu : fac) {
      const mpq_class d = dot(nu, cand);
      if (d < 0) pos = false;
      if (d > 0) neg = false;
    }
    bool in_plane = true;
    {
      QMat m2 = eq;
      for (uint32_t i = 0; i < nf; ++i)
        if (S & (1u << i)) m2.push_back(fac[i]);
      for (const auto& row : m2)
        if (dot(row, cand) != 0) in_plane = false;
    }
    if (!in_plane) continue;
    if (pos == neg) continue;  // zero on everything or infeasible both ways
    QVec dir = cand;
    if (neg)
      for (auto& c : dir) c = -c;
    found.insert(primitive_integer(dir));
  }
  return {found.begin(), found.end()};
}

// --- cones from permutations and classes ---------------------------------------

RationalCone region_cone(const Permutation& x) {
  const int n = x.size();
  require(n >= 1, "region_cone: empty permutation has no chamber");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(x[i], x[i + 1]);
  return RationalCone(n, pairs);
}

RationalCone class_cone(const Congruence& C, int class_id) {
  const int n = C.n();
  require(class_id >= 0 && class_id < C.num_classes(), "class_cone: bad class id");
  const auto& rec = C.classes()[class_id];
  const WeakOrder& W = C.lattice();
  const uint64_t ibot = W.inv(rec.bottom), itop = W.inv(rec.top);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const uint64_t bit = 1ULL << pair_bit(a, b);
      if (ibot & bit) pairs.emplace_back(b, a);     // p_b <= p_a
      if (!(itop & bit)) pairs.emplace_back(a, b);  // p_a <= p_b
    }
  return RationalCone(n, pairs);
}

// --- QuotientFan -----------------------------------------------------------------

QuotientFan QuotientFan::build(std::shared_ptr<const Congruence> cong, bool with_faces) {
  const Congruence& C = *cong;
  const int n = C.n();
  require_capacity(n <= 7, "build_fan limited to n <= 7");
  if (with_faces) require_capacity(n <= 6, "full face computation limited to n <= 6");

  QuotientFan fan;
  fan.cong_ = cong;
  fan.n_ = n;
  fan.has_faces_ = with_faces;

  const WeakOrder& W = C.lattice();
  const int k = C.num_classes();
  for (int c = 0; c < k; ++c) fan.maximal_.push_back(class_cone(C, c));

  // each class cone is exactly the union of its member chambers
  for (int c = 0; c < k; ++c) {
    const auto& rec = C.classes()[c];
    WOQ_CHECK(fan.maximal_[c].dim() == n, "class cone not full-dimensional");
    // sampled interior point of every member chamber lies in the cone, and
    // the sum of those points is interior to the cone
    std::vector<long long> sum(n, 0);
    for (int64_t r : rec.members) {
      const Permutation inv_w = inverse(W.perm(r));
      std::vector<long long> p(n);
      for (int i = 0; i < n; ++i) p[i] = inv_w.word()[i];
      WOQ_CHECK(fan.maximal_[c].contains(p), "member chamber point escapes class cone");
      for (int i = 0; i < n; ++i) sum[i] += p[i];
    }
    WOQ_CHECK(fan.maximal_[c].strictly_contains(sum),
              "class interior point not strictly interior");
  }
  // chambers tile into class cones: chamber of x is inside cone c iff x in c
  for (int64_t r = 0; r < W.size(); ++r) {
    const RationalCone ch = region_cone(W.perm(r));
    for (int c = 0; c < k; ++c) {
      const bool inside = ch.subset_of(fan.maximal_[c]);
      WOQ_CHECK(inside == (C.class_id_by_rank(r) == c),
                "chamber/class cone membership mismatch (fan not complete)");
    }
  }
  // pairwise intersections of maximal cones are faces of both
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const RationalCone m = fan.maximal_[a].intersect(fan.maximal_[b]);
      WOQ_CHECK(m.is_face_of(fan.maximal_[a]) && m.is_face_of(fan.maximal_[b]),
                "maximal cones do not intersect in a common face");
    }

  {  // lineality = intersection of all maximal cones
    RationalCone m = fan.maximal_.empty() ? RationalCone(n, {}) : fan.maximal_[0];
    for (int c = 1; c < k; ++c) m = m.intersect(fan.maximal_[c]);
    fan.lineality_dim_ = m.dim();
    WOQ_CHECK(m.lineality_dim() == m.dim(), "minimal cone is not a subspace");
  }

  if (with_faces) {
    std::map<RationalCone, int> index;
    std::vector<RationalCone> work;
    for (const auto& m : fan.maximal_)
      if (index.emplace(m, static_cast<int>(index.size())).second) work.push_back(m);
    while (!work.empty()) {
      const RationalCone f = std::move(work.back());
      work.pop_back();
      for (const auto& m : fan.maximal_) {
        RationalCone g = f.intersect(m);
        if (index.emplace(g, static_cast<int>(index.size())).second) work.push_back(g);
      }
    }
    std::map<int, const RationalCone*> by_idx;
    for (const auto& [cone, i] : index) by_idx.emplace(i, &cone);
    for (const auto& [i, conep] : by_idx) {
      Face f{*conep, conep->dim(), {}};
      for (int c = 0; c < k; ++c)
        if (conep->subset_of(fan.maximal_[c])) f.maximal_indices.push_back(c);
      fan.faces_.push_back(std::move(f));
    }
  }
  return fan;
}

std::vector<std::pair<int, int>> QuotientFan::adjacency() const {
  std::vector<std::pair<int, int>> out;
  const int k = static_cast<int>(maximal_.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (maximal_[a].intersect(maximal_[b]).dim() == n_ - 1) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<long long>> QuotientFan::rays_geometric() const {
  std::set<std::vector<long long>> all;
  for (const auto& m : maximal_)
    for (auto& r : m.extreme_rays()) all.insert(std::move(r));
  return {all.begin(), all.end()};
}

std::map<int, int64_t> QuotientFan::face_census() const {
  require(has_faces_, "face_census requires faces mode");
  std::map<int, int64_t> census;
  for (const auto& f : faces_) ++census[f.dim];
  return census;
}

// --- combinatorial rays, simpliciality, f/h -------------------------------------

namespace {

std::vector<long long> chi_ray(int n, uint32_t members) {
  std::vector<long long> v(n, 0);
  for (int i = 0; i < n; ++i)
    if (members & (1u << i)) v[i] = 1;
  return canonical_ray(v);
}

}  // namespace

std::vector<std::vector<long long>> rays(const Congruence& C) {
  const int n = C.n();
  require(n >= 2, "rays: n >= 2");
  // no atom may be contracted ([B] = {B}); otherwise reduce to a parabolic
  // subarrangement first, which is out of scope here
  const Permutation id = Permutation::identity(n);
  for (const auto& a : covers_up(id))
    require(!C.same_class(id, a),
            "rays: an atom is contracted; reduce to the parabolic subarrangement");
  std::set<std::vector<long long>> out;
  // (i) one ray per facet hyperplane of the base chamber
  for (int i = 1; i < n; ++i) {
    uint32_t suffix = 0;
    for (int v = i + 1; v <= n; ++v) suffix |= 1u << (v - 1);
    out.insert(chi_ray(n, suffix));
  }
  // (ii) one ray per join-irreducible fixed by pi_up
  for (const auto& j : all_join_irreducibles(n)) {
    const Permutation g = j.word();
    if (C.pi_up(g) == g) out.insert(chi_ray(n, j.A));
  }
  return {out.begin(), out.end()};
}

int fan_lineality_dim(const Congruence& C) {
  RationalCone m = class_cone(C, 0);
  for (int c = 1; c < C.num_classes(); ++c) m = m.intersect(class_cone(C, c));
  WOQ_CHECK(m.lineality_dim() == m.dim(), "minimal cone is not a subspace");
  return m.dim();
}

bool is_simplicial(const Congruence& C) {
  const int n = C.n();
  const int lin = fan_lineality_dim(C);
  const WeakOrder& W = C.lattice();
  for (const auto& rec : C.classes()) {
    const int down = static_cast<int>(W.covers_down(rec.bottom).size());
    const int up = static_cast<int>(W.covers_up(rec.top).size());
    if (down + up != n - lin) return false;
  }
  return true;
}

FanVectors fh_vectors(const QuotientPoset& Q) {
  const int n = Q.congruence().n();
  const int k = Q.size();
  // census of atomic intervals by atom count
  std::vector<int64_t> by_atoms(n + 1, 0);
  int kmax = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      int na = 0;
      if (!Q.leq(a, b)) continue;
      if (Q.interval_atomic(a, b, &na)) {
        ++by_atoms[na];
        kmax = std::max(kmax, na);
      }
    }
  {  // the full interval is facial for the lineality cone, hence atomic
    int na = 0;
    WOQ_CHECK(Q.interval_atomic(0, Q.top_index(), &na) && na == kmax,
              "whole quotient poset is not an atomic interval of maximal atom count");
  }
  FanVectors out;
  out.d = kmax;  // = n - lineality_dim
  out.f.resize(kmax);
  for (int i = 0; i < kmax; ++i) out.f[i] = by_atoms[kmax - 1 - i];
  // h from sum f_{i-1} (x-1)^{d-i} = sum h_i x^{d-i}
  const int d = kmax;
  out.h.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    const int64_t fi = (i == 0) ? 1 : out.f[i - 1];
    // expand fi * (x-1)^(d-i): contributes to x^(d-i-t) the term (-1)^t C(d-i, t)
    for (int t = 0; t <= d - i; ++t) {
      int64_t binom = 1;
      for (int s = 1; s <= t; ++s) binom = binom * (d - i - s + 1) / s;
      const int64_t coef = (t % 2 ? -1 : 1) * binom * fi;
      out.h[i + t] += coef;  // x^{d-i-t} pairs with h index i+t
    }
  }
  return out;
}

std::vector<int64_t> f_vector(const Congruence& C) {
  QuotientPoset Q(std::make_shared<Congruence>(C));
  return fh_vectors(Q).f;
}

std::vector<int64_t> h_vector(const Congruence& C) {
  QuotientPoset Q(std::make_shared<Congruence>(C));
  return fh_vectors(Q).h;
}

std::vector<int64_t> h_from_cover_counts(const QuotientPoset& Q) {
  int d = 0;
  for (int i = 0; i < Q.size(); ++i)
    d = std::max(d, static_cast<int>(Q.covers_down(i).size()));
  std::vector<int64_t> h(d + 1, 0);
  for (int i = 0; i < Q.size(); ++i) ++h[Q.covers_down(i).size()];
  return h;
}

// --- fan-poset property checks ----------------------------------------------------

namespace {

int64_t b_functional(int n, std::span<const long long> v) {
  int64_t s = 0;
  for (int i = 0; i < n; ++i) s += static_cast<int64_t>(n - i) * v[i];
  return s;
}

std::vector<int> random_linear_extension(const QuotientPoset& Q, SplitMix64& rng) {
  const int k = Q.size();
  std::vector<int> indeg(k, 0);
  for (int i = 0; i < k; ++i) indeg[i] = static_cast<int>(Q.covers_down(i).size());
  std::vector<int> avail, order;
  for (int i = 0; i < k; ++i)
    if (indeg[i] == 0) avail.push_back(i);
  while (!avail.empty()) {
    const size_t pick = rng.below(avail.size());
    const int x = avail[pick];
    avail.erase(avail.begin() + pick);
    order.push_back(x);
    for (int y : Q.covers_up(x))
      if (--indeg[y] == 0) avail.push_back(y);
  }
  WOQ_CHECK(static_cast<int>(order.size()) == k, "linear extension incomplete");
  return order;
}

}  // namespace

bool FanReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass && !it.skipped) return false;
  return true;
}

std::string FanReport::summary() const {
  std::string s;
  for (const auto& it : items) {
    s += it.name + ": " + (it.skipped ? "skipped" : (it.pass ? "pass" : "FAIL"));
    if (!it.detail.empty()) s += " (" + it.detail + ")";
    s += "\n";
  }
  return s;
}

FanReport check_fan_poset_properties(std::shared_ptr<const Congruence> cong,
                                     uint64_t seed, int num_extensions) {
  const Congruence& C = *cong;
  const int n = C.n();
  require_capacity(n <= 6, "check_fan_poset_properties limited to n <= 6");
  const bool geometric = n <= 5;

  FanReport rep;
  auto item = [&rep](const std::string& name) -> FanReport::Item& {
    rep.items.push_back({name, true, false, ""});
    return rep.items.back();
  };

  QuotientPoset Q(cong);
  const int k = Q.size();
  QuotientFan fan = QuotientFan::build(cong, geometric);
  const bool simplicial = is_simplicial(C);
  const FanVectors fv = fh_vectors(Q);
  const int d = fv.d;

  // quotient index <-> fan maximal index: classes share the same order
  {
    auto& it = item("1-skeleton");
    std::set<std::pair<int, int>> hasse;
    for (int i = 0; i < k; ++i)
      for (int j : Q.covers_up(i)) hasse.emplace(std::min(i, j), std::max(i, j));
    std::set<std::pair<int, int>> adj;
    for (auto [a, b] : fan.adjacency()) adj.emplace(a, b);
    if (hasse != adj) {
      it.pass = false;
      it.detail = "Hasse diagram and chamber adjacency differ";
    } else {
      // induced by b = (n, n-1, ..., 1): the normal separating a cover pair,
      // oriented upward, must have positive b-value
      for (int i = 0; i < k && it.pass; ++i)
        for (int j : Q.covers_up(i)) {
          const RationalCone f = fan.maximal()[i].intersect(fan.maximal()[j]);
          bool found = false;
          for (const auto& nu : fan.maximal()[j].facet_normals()) {
            // facet of upper cone containing f, inward normal points up
            QVec nuq = to_q(nu);
            bool tight = true;
            {
              // f's blocks force equality across nu's support
              int apos = -1, aneg = -1;
              for (int t = 0; t < n; ++t) {
                if (nu[t] == 1) apos = t + 1;
                if (nu[t] == -1) aneg = t + 1;
              }
              tight = f.same_block(apos, aneg);
            }
            if (tight) {
              found = true;
              if (b_functional(n, nu) <= 0) {
                it.pass = false;
                it.detail = "cover normal not positive on b";
              }
              break;
            }
          }
          if (!found) {
            it.pass = false;
            it.detail = "no separating facet found for a cover";
          }
        }
    }
  }

  {
    auto& it = item("mobius");
    const auto mu = Q.mobius_matrix();
    for (int a = 0; a < k && it.pass; ++a)
      for (int b = a; b < k && it.pass; ++b) {
        if (!Q.leq(a, b)) continue;
        int na = 0;
        const bool atomic = Q.interval_atomic(a, b, &na);
        const int64_t expect = atomic ? ((na % 2) ? -1 : 1) : 0;
        if (mu[a][b] != expect) {
          it.pass = false;
          it.detail = "interval [" + Q.element(a).str() + ", " + Q.element(b).str() +
                      "] has mu = " + std::to_string(mu[a][b]) + ", expected " +
                      std::to_string(expect);
        }
      }
  }

  {
    auto& it = item("atomic-facial");
    if (!geometric) {
      it.skipped = true;
      it.detail = "geometric cross-check needs n <= 5";
    } else {
      int64_t atomic_count = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b)
          if (Q.leq(a, b) && Q.interval_atomic(a, b, nullptr)) ++atomic_count;
      if (atomic_count != static_cast<int64_t>(fan.faces().size())) {
        it.pass = false;
        it.detail = "atomic intervals != faces";
      }
      for (const auto& f : fan.faces()) {
        if (!it.pass) break;
        // the containing maximal cones must form an atomic interval whose
        // atom count encodes the face dimension: dim = n - #atoms
        const auto& M = f.maximal_indices;
        const int lo = *std::min_element(M.begin(), M.end());
        const int hi = *std::max_element(M.begin(), M.end());
        std::vector<int> interval_set;
        for (int z = 0; z < k; ++z)
          if (Q.leq(lo, z) && Q.leq(z, hi)) interval_set.push_back(z);
        std::vector<int> sortedM = M;
        std::sort(sortedM.begin(), sortedM.end());
        int na = 0;
        if (interval_set != sortedM || !Q.interval_atomic(lo, hi, &na) ||
            f.dim != n - na) {
          it.pass = false;
          it.detail = "facial interval mismatch at a face of dim " + std::to_string(f.dim);
        }
      }
    }
  }

  {
    auto& it = item("dehn-sommerville");
    if (!simplicial) {
      it.skipped = true;
      it.detail = "fan not simplicial";
    } else {
      const auto hc = h_from_cover_counts(Q);
      if (static_cast<int>(hc.size()) > d + 1) {
        it.pass = false;
        it.detail = "cover count exceeds d";
      } else {
        for (int i = 0; i <= d && it.pass; ++i) {
          const int64_t hi = i < static_cast<int>(fv.h.size()) ? fv.h[i] : 0;
          const int64_t hci = i < static_cast<int>(hc.size()) ? hc[i] : 0;
          if (hi != hci || hi != fv.h[d - i]) {
            it.pass = false;
            it.detail = "h-vector rows disagree at i = " + std::to_string(i);
          }
        }
      }
    }
  }

  {
    auto& it = item("shelling");
    if (!simplicial) {
      it.skipped = true;
      it.detail = "fan not simplicial";
    } else if (!geometric) {
      it.skipped = true;
      it.detail = "needs n <= 5 geometry";
    } else {
      const auto raylist = fan.rays_geometric();
      require_capacity(raylist.size() <= 64, "too many rays for shelling bitsets");
      auto ray_index = [&](const std::vector<long long>& r) {
        return static_cast<int>(std::lower_bound(raylist.begin(), raylist.end(), r) -
                                raylist.begin());
      };
      std::vector<uint64_t> rayset(k, 0);
      for (int c = 0; c < k; ++c) {
        for (const auto& r : fan.maximal()[c].extreme_rays())
          rayset[c] |= 1ULL << ray_index(r);
        if (std::popcount(rayset[c]) != d) {
          it.pass = false;
          it.detail = "simplicial maximal cone without exactly d rays";
        }
      }
      SplitMix64 rng(seed);
      for (int e = 0; e < num_extensions && it.pass; ++e) {
        const auto order = random_linear_extension(Q, rng);
        // condition (ii): F_j's intersection with earlier facets is pure of
        // codimension one in F_j
        for (int j = 1; j < k && it.pass; ++j)
          for (int i = 0; i < j && it.pass; ++i) {
            const uint64_t common = rayset[order[i]] & rayset[order[j]];
            bool ok = false;
            for (int l = 0; l < j && !ok; ++l) {
              const uint64_t cap = rayset[order[l]] & rayset[order[j]];
              if ((common & ~cap) == 0 && std::popcount(cap) == d - 1) ok = true;
            }
            if (!ok) {
              it.pass = false;
              it.detail = "condition (ii) fails in extension " + std::to_string(e);
            }
          }
      }
    }
  }

  {
    auto& it = item("flag");
    if (!simplicial) {
      it.skipped = true;
      it.detail = "fan not simplicial";
    } else if (!geometric) {
      it.skipped = true;
      it.detail = "needs n <= 5 geometry";
    } else {
      const auto raylist = fan.rays_geometric();
      const int R = static_cast<int>(raylist.size());
      require_capacity(R <= 64, "too many rays for flag check");
      std::vector<uint64_t> rayset;
      for (const auto& m : fan.maximal()) {
        uint64_t s = 0;
        for (const auto& r : m.extreme_rays())
          s |= 1ULL << (std::lower_bound(raylist.begin(), raylist.end(), r) - raylist.begin());
        rayset.push_back(s);
      }
      auto is_face = [&](uint64_t S) {
        for (uint64_t rs : rayset)
          if ((S & ~rs) == 0) return true;
        return false;
      };
      std::vector<uint64_t> adj(R, 0);
      for (int a = 0; a < R; ++a)
        for (int b = a + 1; b < R; ++b)
          if (is_face((1ULL << a) | (1ULL << b))) {
            adj[a] |= 1ULL << b;
            adj[b] |= 1ULL << a;
          }
      // every clique must span a face; check maximal cliques (Bron-Kerbosch)
      std::vector<std::tuple<uint64_t, uint64_t, uint64_t>> stack;
      stack.emplace_back(0, (1ULL << R) - 1, 0);
      while (!stack.empty() && it.pass) {
        auto [cur, cand, excl] = stack.back();
        stack.pop_back();
        if (cand == 0 && excl == 0) {
          if (!is_face(cur)) {
            it.pass = false;
            it.detail = "clique of rays is not a face";
          }
          continue;
        }
        uint64_t iter = cand;
        while (iter) {
          const int v = std::countr_zero(iter);
          iter &= iter - 1;
          stack.emplace_back(cur | (1ULL << v), cand & adj[v], excl & adj[v]);
          cand &= ~(1ULL << v);
          excl |= 1ULL << v;
        }
      }
    }
  }

  {
    auto& it = item("bisimplicial");
    if (!geometric) {
      it.skipped = true;
      it.detail = "needs n <= 5 geometry";
    } else {
      for (int c = 0; c < k && it.pass; ++c) {
        QMat Npos, Nneg;
        for (const auto& nu : fan.maximal()[c].facet_normals()) {
          std::vector<long long> out_nu(nu.size());
          for (size_t t = 0; t < nu.size(); ++t) out_nu[t] = -nu[t];
          if (b_functional(n, out_nu) > 0) Npos.push_back(to_q(out_nu));
          else Nneg.push_back(to_q(out_nu));
        }
        if (rank_q(Npos) != static_cast<int>(Npos.size()) ||
            rank_q(Nneg) != static_cast<int>(Nneg.size())) {
          it.pass = false;
          it.detail = "outward normals of a class cone are dependent on one side of b";
        }
      }
    }
  }

  return rep;
}

std::string fan_json(std::shared_ptr<const Congruence> cong) {
  const Congruence& C = *cong;
  const int n = C.n();
  QuotientFan fan = QuotientFan::build(cong, n <= 6);
  nlohmann::json j;
  j["n"] = n;
  j["lineality_dim"] = fan.lineality_dim();
  std::vector<std::vector<long long>> raylist;
  if (fan.lineality_dim() == 1) raylist = fan.rays_geometric();  // lex-sorted
  auto& jr = j["rays"] = nlohmann::json::array();
  for (const auto& r : raylist) jr.push_back(r);
  auto& jm = j["maximal_cones"] = nlohmann::json::array();
  for (const auto& m : fan.maximal()) {
    std::vector<int> idx;
    for (size_t i = 0; i < raylist.size(); ++i) {
      std::vector<long long> p = raylist[i];
      // a fan ray contained in a maximal cone is a face of it, hence extreme
      bool inside = true;
      {
        // test containment of the ray direction: all facet inequalities >= 0
        for (const auto& nu : m.facet_normals()) {
          long long s = 0;
          for (int t = 0; t < n; ++t) s += nu[t] * p[t];
          if (s < 0) { inside = false; break; }
        }
        // and the ray must satisfy the block equalities of m
        if (inside)
          for (const auto& blk : m.blocks())
            for (size_t t = 1; t < blk.size() && inside; ++t)
              if (p[blk[t - 1] - 1] != p[blk[t] - 1]) inside = false;
      }
      if (inside) idx.push_back(static_cast<int>(i));
    }
    jm.push_back(idx);
  }
  QuotientPoset Q(cong);
  const FanVectors fv = fh_vectors(Q);
  j["f_vector"] = fv.f;
  j["h_vector"] = fv.h;
  return j.dump();
}

}  // namespace woq
