#include "tpa/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tpa/cyclotomic.hpp"

namespace tpa {

SPerm perm_compose(const SPerm& a, const SPerm& b) {
  SPerm r(b.size());
  for (size_t k = 0; k < b.size(); ++k) r[k] = a.at(b[k]);
  return r;
}

std::vector<int> perm_word(const SPerm& w) {
  SPerm u = w;
  std::vector<int> rev;
  for (;;) {
    int i = -1;
    for (int k = 0; k + 1 < static_cast<int>(u.size()); ++k)
      if (u[k] > u[k + 1]) {
        i = k;
        break;
      }
    if (i < 0) break;
    std::swap(u[i], u[i + 1]);  // u s_i
    rev.push_back(i);
  }
  return {rev.rbegin(), rev.rend()};
}

namespace {

SPerm identity_perm(int d) {
  SPerm e(d);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

SPerm left_s(int i, const SPerm& u) {
  SPerm r = u;
  for (int& v : r) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

void add_into(AffineElem& a, const SPerm& w, const Poly& p) {
  if (p.is_zero()) return;
  auto it = a.find(w);
  if (it == a.end()) {
    a.emplace(w, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) a.erase(it);
}

// s_i * sum P_u u
AffineElem times_s(int i, const AffineElem& a) {
  AffineElem r;
  for (const auto& [u, p] : a) {
    add_into(r, left_s(i, u), p.swapped(i));
    Poly dp = p.demazure(i);
    dp *= Int(-1);
    add_into(r, u, dp);
  }
  return r;
}

// w * sum P_u u
AffineElem times_perm(const SPerm& w, AffineElem a) {
  auto word = perm_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) a = times_s(*it, a);
  return a;
}

void monomials_upto(int d, int deg, std::vector<Monomial>& out) {
  Monomial m(d, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == d) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[k] = e;
      self(self, k + 1, left - e);
    }
    m[k] = 0;
  };
  rec(rec, 0, deg);
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

using Mat = CyclotomicHecke::Mat;

Mat identity_mat(int n) {
  Mat m(QField(), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat shifted(const Mat& a, const mpq_class& c) {
  Mat m = a;
  for (int i = 0; i < m.rows; ++i) m.at(i, i) -= c;
  return m;
}

Mat power(Mat a, int e) {
  Mat r = identity_mat(a.rows);
  while (e > 0) {
    if (e & 1) r = r.mul(a);
    e >>= 1;
    if (e) a = a.mul(a);
  }
  return r;
}

bool same(const Mat& a, const Mat& b) { return a.a == b.a; }

Mat sub(const Mat& a, const Mat& b) {
  Mat r = a;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= b.a[k];
  return r;
}

}  // namespace

AffineElem affine_multiply(const AffineElem& a, const AffineElem& b, int d) {
  (void)d;
  AffineElem r;
  for (const auto& [w, p] : a) {
    // p w (q v) = p (w q) v
    for (const auto& [v, q] : b) {
      AffineElem wq = times_perm(w, AffineElem{{identity_perm(static_cast<int>(w.size())), q}});
      for (const auto& [u, s] : wq) add_into(r, perm_compose(u, v), p * s);
    }
  }
  return r;
}

CyclotomicHecke::CyclotomicHecke(std::vector<int> lambda, int d) : lambda_(std::move(lambda)), d_(d), N_(0) {
  if (d < 0) throw std::invalid_argument("negative number of strands");
  for (int l : lambda_) {
    if (l < 0) throw std::invalid_argument("dominant weight with a negative coefficient");
    N_ += l;
  }
  if (N_ == 0 && d > 0) throw std::invalid_argument("level zero cyclotomic quotient is zero");
  build();
}

void CyclotomicHecke::build() {
  const int d = d_;
  const SPerm e = identity_perm(d);
  // standard basis: permutations in lexicographic order, exponents < N
  std::vector<SPerm> perms;
  {
    SPerm p = e;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<Monomial> std_monos;
  {
    Monomial m(d, 0);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == d) {
        std_monos.push_back(m);
        return;
      }
      for (int a = 0; a < N_; ++a) {
        m[k] = a;
        self(self, k + 1);
      }
      m[k] = 0;
    };
    rec(rec, 0);
  }
  for (const auto& m : std_monos)
    for (const auto& w : perms) {
      index_[{m, w}] = static_cast<int>(basis_.size());
      basis_.emplace_back(m, w);
    }
  const int n = dim();
  auto is_std = [&](const Monomial& m) { return std::all_of(m.begin(), m.end(), [&](int a) { return a < N_; }); };

  // f(x_1) as a polynomial
  Poly f = Poly::constant(d, 1);
  for (size_t i = 0; i < lambda_.size() && d > 0; ++i)
    for (int r = 0; r < lambda_[i]; ++r) f = f * (Poly::variable(d, 0) - Poly::constant(d, static_cast<long>(i + 1)));

  // non-standard monomials reached by x_k on the standard basis
  const int target = (N_ - 1) * d + 1;
  std::map<std::pair<Monomial, SPerm>, Vec> reduction;
  if (d > 0) {
    bool done = false;
    for (int D = std::max(target, N_); D <= target + 2 * N_ + 4 && !done; ++D) {
      std::vector<Monomial> monos;
      monomials_upto(d, D, monos);
      // columns: non-standard by degree descending, then standard
      std::vector<std::pair<Monomial, SPerm>> cols;
      std::vector<Monomial> ns, st;
      for (const auto& m : monos) (is_std(m) ? st : ns).push_back(m);
      std::stable_sort(ns.begin(), ns.end(), [](const Monomial& a, const Monomial& b) { return degree(a) > degree(b); });
      std::map<std::pair<Monomial, SPerm>, int> col;
      for (const auto* group : {&ns, &st})
        for (const auto& m : *group)
          for (const auto& w : perms) {
            col[{m, w}] = static_cast<int>(cols.size());
            cols.emplace_back(m, w);
          }
      RowSpace<QField> ideal(QField(), static_cast<int>(cols.size()));
      for (const auto& c : monos) {
        if (degree(c) + N_ > D) continue;
        Poly g = f.times_monomial(c);
        for (const auto& w : perms) {
          AffineElem wg = times_perm(w, AffineElem{{e, g}});
          for (const auto& v : perms) {
            std::map<int, mpq_class> acc;
            for (const auto& [u, p] : wg) {
              SPerm uv = perm_compose(u, v);
              for (const auto& [m, x] : p.terms()) acc[col.at({m, uv})] += mpq_class(x);
            }
            RowSpace<QField>::Row row;
            for (auto& [j, x] : acc)
              if (x != 0) row.emplace_back(j, x);
            if (!row.empty()) ideal.insert(row);
          }
        }
      }
      done = true;
      reduction.clear();
      for (const auto& m : monos) {
        if (is_std(m) || degree(m) > target) continue;
        for (const auto& w : perms) {
          auto rest = ideal.reduce({{col.at({m, w}), mpq_class(1)}});
          Vec v(n, 0);
          bool ok = true;
          for (const auto& [j, x] : rest) {
            auto it = index_.find(cols[j]);
            if (it == index_.end()) {
              ok = false;
              break;
            }
            v[it->second] = x;
          }
          if (!ok) {
            done = false;
            break;
          }
          reduction[{m, w}] = std::move(v);
        }
        if (!done) break;
      }
      if (done) window_ = D;
    }
    if (!done) throw IntegrityError("cyclotomic reduction did not close within the degree window");
  }

  auto column_of = [&](const Monomial& m, const SPerm& w) -> Vec {
    auto it = index_.find({m, w});
    if (it != index_.end()) {
      Vec v(n, 0);
      v[it->second] = 1;
      return v;
    }
    return reduction.at({m, w});
  };
  lx_.assign(d, Mat(QField(), n, n));
  ls_.assign(std::max(d - 1, 0), Mat(QField(), n, n));
  for (int b = 0; b < n; ++b) {
    const auto& [m, w] = basis_[b];
    for (int k = 0; k < d; ++k) {
      Monomial mk = m;
      ++mk[k];
      Vec v = column_of(mk, w);
      for (int r = 0; r < n; ++r) lx_[k].at(r, b) = v[r];
    }
    for (int i = 0; i + 1 < d; ++i) {
      Poly p = Poly::constant(d, 1).times_monomial(m);
      AffineElem img = times_s(i, AffineElem{{w, p}});
      for (const auto& [u, q] : img)
        for (const auto& [mm, x] : q.terms()) ls_[i].at(index_.at({mm, u}), b) += mpq_class(x);
    }
  }
}

CyclotomicHecke::Vec CyclotomicHecke::one() const {
  Vec v(dim(), 0);
  v[index_.at({Monomial(d_, 0), identity_perm(d_)})] = 1;
  return v;
}

CyclotomicHecke::Vec CyclotomicHecke::apply(const Mat& m, const Vec& v) const {
  Vec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (v[j] != 0 && m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

CyclotomicHecke::Vec CyclotomicHecke::left_basis(int b, const Vec& v) const {
  const auto& [m, w] = basis_.at(b);
  Vec r = v;
  auto word = perm_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply(ls_[*it], r);
  for (int k = 0; k < d_; ++k)
    for (int a = 0; a < m[k]; ++a) r = apply(lx_[k], r);
  return r;
}

CyclotomicHecke::Vec CyclotomicHecke::multiply(const Vec& a, const Vec& b) const {
  Vec r(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    Vec t = left_basis(i, b);
    for (int j = 0; j < dim(); ++j) r[j] += a[i] * t[j];
  }
  return r;
}

std::vector<std::string> CyclotomicHecke::relation_failures() const {
  std::vector<std::string> bad;
  const int n = dim();
  const Mat I = identity_mat(n);
  for (int i = 0; i + 1 < d_; ++i) {
    if (!same(ls_[i].mul(ls_[i]), I)) bad.push_back("s" + std::to_string(i + 1) + "^2");
    if (i + 2 < d_ && !same(ls_[i].mul(ls_[i + 1]).mul(ls_[i]), ls_[i + 1].mul(ls_[i]).mul(ls_[i + 1])))
      bad.push_back("braid " + std::to_string(i + 1));
    for (int j = i + 2; j + 1 < d_; ++j)
      if (!same(ls_[i].mul(ls_[j]), ls_[j].mul(ls_[i])))
        bad.push_back("s" + std::to_string(i + 1) + " s" + std::to_string(j + 1));
    for (int j = 0; j < d_; ++j) {
      int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
      Mat lhs = sub(ls_[i].mul(lx_[j]), lx_[sj].mul(ls_[i]));
      int delta = (j == i ? -1 : 0) + (j == i + 1 ? 1 : 0);
      Mat rhs = I;
      for (auto& x : rhs.a) x *= delta;
      if (!same(lhs, rhs)) bad.push_back("s" + std::to_string(i + 1) + " x" + std::to_string(j + 1));
    }
  }
  for (int j = 0; j < d_; ++j)
    for (int k = j + 1; k < d_; ++k)
      if (!same(lx_[j].mul(lx_[k]), lx_[k].mul(lx_[j])))
        bad.push_back("x" + std::to_string(j + 1) + " x" + std::to_string(k + 1));
  if (d_ > 0) {
    Mat f = I;
    for (size_t i = 0; i < lambda_.size(); ++i) f = f.mul(power(shifted(lx_[0], static_cast<long>(i + 1)), lambda_[i]));
    if (!same(f, Mat(QField(), n, n))) bad.push_back("cyclotomic");
  }
  Vec u = one();
  for (int b = 0; b < n; ++b) {
    Vec v = left_basis(b, u);
    Vec e(n, 0);
    e[b] = 1;
    if (v != e) {
      bad.push_back("basis word " + std::to_string(b));
      break;
    }
  }
  return bad;
}

const CyclotomicHecke::Mat& CyclotomicHecke::right_x(int k) const {
  if (rx_.empty()) {
    const int n = dim();
    for (int j = 0; j < d_; ++j) {
      Vec xj = apply(lx_[j], one());
      Mat r(QField(), n, n);
      for (int b = 0; b < n; ++b) {
        Vec v = left_basis(b, xj);
        for (int i = 0; i < n; ++i) r.at(i, b) = v[i];
      }
      rx_.push_back(std::move(r));
    }
  }
  return rx_.at(k);
}

const CyclotomicHecke::Mat& CyclotomicHecke::op(int id) const { return id < d_ ? lx_.at(id) : right_x(id - d_); }

std::vector<CyclotomicHecke::Vec> CyclotomicHecke::joint_space(const std::vector<int>& ops,
                                                               const std::vector<int>& eig) const {
  const int n = dim();
  std::vector<Vec> V;
  for (int i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    V.push_back(std::move(v));
  }
  for (size_t k = 0; k < ops.size() && !V.empty(); ++k) {
    auto key = std::make_pair(ops[k], eig[k]);
    auto pit = powers_.find(key);
    if (pit == powers_.end()) pit = powers_.emplace(key, power(shifted(op(ops[k]), eig[k]), n)).first;
    const Mat& P = pit->second;
    Mat img(QField(), n, static_cast<int>(V.size()));
    for (size_t c = 0; c < V.size(); ++c) {
      Vec y = apply(P, V[c]);
      for (int i = 0; i < n; ++i) img.at(i, static_cast<int>(c)) = y[i];
    }
    std::vector<Vec> W;
    for (const auto& coef : img.nullspace()) {
      Vec w(n, 0);
      for (size_t c = 0; c < V.size(); ++c)
        if (coef[c] != 0)
          for (int i = 0; i < n; ++i) w[i] += coef[c] * V[c][i];
      W.push_back(std::move(w));
    }
    V = std::move(W);
  }
  return V;
}

const std::map<std::vector<int>, CyclotomicHecke::Vec>& CyclotomicHecke::weight_idempotents() const {
  if (idems_) return *idems_;
  const int n = dim();
  auto& out = idems_.emplace();
  if (d_ == 0) {
    out[{}] = one();
    return out;
  }
  int lo = 1 - (d_ - 1), hi = static_cast<int>(lambda_.size()) + (d_ - 1);
  std::map<std::vector<int>, std::vector<Vec>> spaces;
  std::vector<int> I;
  std::vector<int> ops;
  for (int k = 0; k < d_; ++k) ops.push_back(k);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == d_) {
      auto V = joint_space(ops, I);
      if (!V.empty()) spaces[I] = std::move(V);
      return;
    }
    for (int c = lo; c <= hi; ++c) {
      I.push_back(c);
      std::vector<int> pre(ops.begin(), ops.begin() + k + 1);
      if (!joint_space(pre, I).empty()) self(self, k + 1);
      I.pop_back();
    }
  };
  rec(rec, 0);
  int total = 0;
  for (const auto& [_, V] : spaces) total += static_cast<int>(V.size());
  if (total != n) throw IntegrityError("generalized eigenspaces of the x_k do not span");
  // e(I) = prod_k E_{k,i_k}(x_k) 1 with E_c(t) = 1 - (1 - q_c(t))^{m_c},
  // q_c = prod_{c' != c} ((t - c') / (c - c'))^{m_c'}, m the nilpotency index
  std::vector<std::map<int, Mat>> proj(d_);
  for (int k = 0; k < d_; ++k) {
    std::map<int, int> index;
    for (int c = lo; c <= hi; ++c) {
      const int target = static_cast<int>(joint_space({k}, {c}).size());
      if (target == 0) continue;
      Mat A = shifted(lx_[k], c), P = A;
      int m = 1;
      while (n - P.rank() != target) {
        P = P.mul(A);
        ++m;
      }
      index[c] = m;
    }
    for (const auto& [c, m] : index) {
      Mat q = identity_mat(n);
      for (const auto& [c2, m2] : index) {
        if (c2 == c) continue;
        Mat f = shifted(lx_[k], c2);
        for (auto& x : f.a) x /= mpq_class(c - c2);
        q = q.mul(power(f, m2));
      }
      Mat one_minus = identity_mat(n);
      for (size_t t = 0; t < q.a.size(); ++t) one_minus.a[t] -= q.a[t];
      proj[k].emplace(c, sub(identity_mat(n), power(one_minus, m)));
    }
  }
  for (const auto& [seq, V] : spaces) {
    Vec e = one();
    for (int k = d_ - 1; k >= 0; --k) e = apply(proj[k].at(seq[k]), e);
    if (std::any_of(e.begin(), e.end(), [](const mpq_class& x) { return x != 0; })) out[seq] = std::move(e);
  }
  return out;
}

int CyclotomicHecke::block_dim(const std::vector<int>& I, const std::vector<int>& J) const {
  if (static_cast<int>(I.size()) != d_ || static_cast<int>(J.size()) != d_)
    throw std::invalid_argument("eigenvalue sequence of the wrong length");
  std::vector<int> ops, eig;
  for (int k = 0; k < d_; ++k) {
    ops.push_back(k);
    eig.push_back(I[k]);
  }
  for (int k = 0; k < d_; ++k) {
    ops.push_back(d_ + k);
    eig.push_back(J[k]);
  }
  return static_cast<int>(joint_space(ops, eig).size());
}

std::vector<int> CyclotomicHecke::nilpotency(const std::vector<int>& I) const {
  const auto& E = weight_idempotents();
  auto it = E.find(I);
  if (it == E.end()) return {};
  std::vector<int> out;
  for (int j = 0; j < d_; ++j) {
    Mat A = shifted(lx_[j], I[j]);
    Vec v = it->second;
    int K = 0;
    while (std::any_of(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; })) {
      if (++K > dim()) return {};
      v = apply(A, v);
    }
    out.push_back(K);
  }
  return out;
}

}  // namespace tpa

namespace tpa {

BKReport bk_check(const CartanDatum& D, const Weight& lambda, int d) {
  const int r = D.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (D.c(i, j) != want || D.d(i) != 1) throw std::invalid_argument("the Hecke comparison needs type A in chain order");
    }
  D.check(lambda);
  BKReport rep;
  CyclotomicHecke H(lambda.coords, d);
  rep.dim = H.dim();
  rep.expected_dim = 1;
  for (int k = 1; k <= d; ++k) rep.expected_dim *= H.level() * k;
  rep.relation_failures = H.relation_failures();

  const auto& E = H.weight_idempotents();
  {
    bool ok = true;
    CyclotomicHecke::Vec sum(H.dim(), 0);
    for (const auto& [I, e] : E) {
      for (int i = 0; i < H.dim(); ++i) sum[i] += e[i];
      for (const auto& [J, f] : E) {
        auto p = H.multiply(e, f);
        if (I == J ? p != e : std::any_of(p.begin(), p.end(), [](const mpq_class& x) { return x != 0; })) ok = false;
      }
    }
    rep.idempotents_ok = ok && sum == H.one();
  }
  rep.cyclotomic_ok = true;
  for (const auto& [I, e] : E) {
    if (d == 0) break;
    auto K = H.nilpotency(I);
    int node = I[0] - 1;
    int bound = node >= 0 && node < r ? lambda.coords[node] : 0;
    if (K.empty() || K[0] > bound) rep.cyclotomic_ok = false;
  }

  TildeAlgebra A(D, QMatrix::default_for(D), {lambda});
  TensorSpace V(D, {lambda});
  QuotientEngine<QField> Q(A, QField());
  std::vector<std::vector<int>> seqs{{}};
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& s : seqs)
      for (int i = 0; i < r; ++i) {
        next.push_back(s);
        next.back().push_back(i);
      }
    seqs = std::move(next);
  }
  auto shift = [](std::vector<int> s) {
    for (int& x : s) ++x;
    return s;
  };
  for (const auto& I : seqs)
    for (const auto& J : seqs) {
      BKBlock b{I, J, H.block_dim(shift(I), shift(J)), 0};
      Idem a{J, {0}}, c{I, {0}};
      auto g = graded_hom(Q, V, a, c, ScanOptions{});
      if (!g.complete) throw IntegrityError("degree scan incomplete in the Hecke comparison");
      b.klr = g.dims.eval_at_1();
      if (Int(b.hecke) != b.klr) ++rep.mismatches;
      rep.blocks.push_back(std::move(b));
    }
  return rep;
}

}  // namespace tpa
