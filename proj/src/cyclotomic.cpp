#include "tpa/cyclotomic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tpa {

namespace {

std::vector<int> red_positions(const Idem& e) {
  std::vector<int> out;
  auto codes = e.merged();
  for (int p = 0; p < static_cast<int>(codes.size()); ++p)
    if (is_red(codes[p])) out.push_back(p);
  return out;
}


}  // namespace

// ------------------------------------------------------------------ engine

template <class F>
std::vector<std::pair<Diagram, int>> QuotientEngine<F>::generators(const Idem& e, Quotient kind) {
  std::vector<std::pair<Diagram, int>> out;
  if (e.violating()) return out;
  auto reds = red_positions(e);
  const int N = e.n() + e.ell();
  auto push = [&](int q, int r) {
    // bubble the black strand at q leftward down to position r
    GenericWord g;
    for (int k = q - 1; k >= r; --k) g.push_back(Event::cross(k));
    Element x = A_.straighten(g, e);
    if (x.size() != 1) throw std::logic_error("generator did not straighten to a single diagram");
    const auto& [d, c] = *x.terms().begin();
    if (c != 1) throw std::logic_error("generator has a nontrivial coefficient");
    out.emplace_back(d, A_.degree(d));
  };
  if (kind == Quotient::Violating) {
    // every black strand dragged to the far left
    for (int q = 0; q < N; ++q)
      if (std::find(reds.begin(), reds.end(), q) == reds.end()) push(q, 0);
  } else {
    // every black strand dragged across the red strand just left of it
    for (int j = 0; j < e.ell(); ++j) {
      const int next = j + 1 < e.ell() ? reds[j + 1] : N;
      for (int q = reds[j] + 1; q < next; ++q) push(q, reds[j]);
    }
  }
  return out;
}

template <class F>
typename QuotientEngine<F>::Row QuotientEngine<F>::to_row(const Element& x, const Component& c) const {
  Row r;
  for (const auto& [d, v] : x.terms()) {
    auto it = c.index.find(d);
    if (it == c.index.end()) throw std::logic_error("element leaves the component it should live in");
    S s = field_.from(v);
    if (!field_.is_zero(s)) r.emplace_back(it->second, s);
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

template <class F>
std::shared_ptr<const typename QuotientEngine<F>::Component> QuotientEngine<F>::component(const Idem& bottom,
                                                                                          const Idem& top, int d,
                                                                                          Quotient kind) {
  auto key = std::make_tuple(A_.intern(bottom), A_.intern(top), d, static_cast<int>(kind));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto comp = std::make_shared<Component>();
  comp->basis = A_.basis_enumerate(bottom, top, d, d);
  const int nb = static_cast<int>(comp->basis.size());
  for (int i = 0; i < nb; ++i) comp->index.emplace(comp->basis[i], i);
  comp->rep_of.assign(nb, -1);
  if (!bottom.violating() && !top.violating() && nb > 0) {
    comp->kernel = std::make_unique<RowSpace<F>>(field_, nb);
    for (const auto& [g, dg] : generators(bottom, kind)) {
      if (comp->kernel->rank() == nb) break;
      Idem gt = A_.idem(A_.top(g));
      for (const auto& b : A_.basis_enumerate(gt, top, d - dg, d - dg)) {
        comp->kernel->insert(to_row(A_.multiply(g, b), *comp));
        if (comp->kernel->rank() == nb) break;
      }
    }
    const auto& piv = comp->kernel->pivots();
    for (int c = 0; c < nb; ++c)
      if (!piv.count(c)) {
        comp->rep_of[c] = static_cast<int>(comp->reps.size());
        comp->reps.push_back(c);
      }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(comp)).first->second;
}

template <class F>
bool QuotientEngine<F>::right_closed(const Idem& bottom, const Idem& top, int d, Quotient kind) {
  auto comp = component(bottom, top, d, kind);
  if (!comp->kernel || comp->kernel->rank() == 0) return true;
  const std::vector<int> codes = top.merged();
  const int size = static_cast<int>(codes.size());
  std::vector<Event> events;
  for (int p = 0; p < size; ++p)
    if (!is_red(codes[p])) events.push_back(Event::dot(p));
  for (int p = 0; p + 1 < size; ++p)
    if (!is_red(codes[p]) || !is_red(codes[p + 1])) events.push_back(Event::cross(p));
  for (const Event& ev : events) {
    std::vector<int> nc = codes;
    int dd = d;
    if (ev.kind == Event::Dot) {
      dd += 2 * A_.datum().d(codes[ev.pos]);
    } else {
      dd += A_.crossing_degree(codes[ev.pos], codes[ev.pos + 1]);
      std::swap(nc[ev.pos], nc[ev.pos + 1]);
    }
    Idem nt = Idem::from_merged(nc);
    auto tgt = component(bottom, nt, dd, kind);
    if (!tgt->kernel) continue;  // target is zero or entirely killed
    std::vector<Row> img(comp->basis.size());
    std::vector<char> done(comp->basis.size(), 0);
    for (const auto& [c, row] : comp->kernel->pivots()) {
      std::map<int, S> acc;
      for (const auto& [j, x] : row) {
        if (!done[j]) {
          img[j] = to_row(A_.rmul(Element::single(comp->basis[j]), ev), *tgt);
          done[j] = 1;
        }
        for (const auto& [k, y] : img[j]) {
          auto it = acc.emplace(k, field_.zero()).first;
          it->second = field_.add(it->second, field_.mul(x, y));
        }
      }
      Row r;
      for (const auto& [k, v] : acc)
        if (!field_.is_zero(v)) r.emplace_back(k, v);
      if (!tgt->kernel->contains(r)) return false;
    }
  }
  return true;
}

template <class F>
typename QuotientEngine<F>::Row QuotientEngine<F>::coords(const Element& x, const Idem& bottom, const Idem& top,
                                                          int d, Quotient kind) {
  auto comp = component(bottom, top, d, kind);
  Row out;
  if (!comp->kernel) return out;
  for (const auto& [c, v] : comp->kernel->reduce(to_row(x, *comp))) {
    int r = comp->rep_of[c];
    if (r < 0) throw std::logic_error("remainder on a pivot column");
    out.emplace_back(r, v);
  }
  return out;
}

template <class F>
GradedDims QuotientEngine<F>::graded_dim(const Idem& bottom, const Idem& top, Quotient kind, const Int& target,
                                         const ScanOptions& opt) {
  GradedDims res;
  if (bottom.violating() || top.violating()) return res;
  if (A_.perms_between(bottom, top).empty()) return res;
  if (target < 0) throw IntegrityError("negative dimension predicted");
  const int dmin = A_.min_degree(bottom, top);
  res.lo = dmin;
  Int total = 0;
  int vanished = 0;
  for (int d = dmin;; ++d) {
    if (d > opt.max_degree) {
      res.complete = false;
      break;
    }
    res.hi = d;
    const int k = component(bottom, top, d, kind)->dim();
    if (k) res.dims += LaurentPoly::monomial(d, k);
    total += k;
    if (total > target) {
      std::ostringstream os;
      os << "dimension " << total << " exceeds the predicted " << target << " for " << bottom.to_string(A_.datum())
         << " -> " << top.to_string(A_.datum()) << " at degree " << d;
      throw IntegrityError(os.str());
    }
    if (total == target) {
      if (k == 0) ++vanished;
      if (vanished >= opt.tail) break;
    }
  }
  return res;
}

// ------------------------------------------------------------------ predictions

LaurentPoly hom_prediction(const TensorSpace& V, const Idem& a, const Idem& b) {
  return V.form(V.vkappa(a), V.vkappa(b));
}

LaurentPoly standard_prediction(const TensorSpace& V, const Idem& J, const Idem& I) {
  return V.form(V.vkappa(J), V.skappa(I));
}

// ------------------------------------------------------------------ filtration

std::vector<FiltrationTerm> filtration_terms(const TildeAlgebra& A, const Idem& e) {
  std::vector<FiltrationTerm> out;
  if (e.violating()) return out;
  const int n = e.n(), ell = e.ell();
  std::vector<int> own(n);
  for (int b = 0; b < n; ++b) {
    int blk = -1;
    for (int j = 0; j < ell; ++j)
      if (e.kappa[j] <= b) blk = j;
    own[b] = blk;
  }
  const auto codes = e.merged();
  std::vector<int> pick(n, 0);
  auto rec = [&](auto&& self, int b) -> void {
    if (b == n) {
      std::vector<int> order(n);
      for (int k = 0; k < n; ++k) order[k] = k;
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return pick[x] < pick[y]; });
      Idem t;
      for (int k : order) t.I.push_back(e.I[k]);
      t.kappa.assign(ell, 0);
      for (int j = 0; j < ell; ++j)
        for (int k = 0; k < n; ++k)
          if (pick[k] < j) ++t.kappa[j];
      // where each strand of e ends up in t
      const auto tcodes = t.merged();
      std::vector<int> newpos_black(n);
      std::vector<int> black_rank(n);
      for (int r = 0; r < n; ++r) black_rank[order[r]] = r;
      Perm w(codes.size());
      int bseen = 0;
      for (int p = 0; p < static_cast<int>(codes.size()); ++p) {
        int target_pos = -1;
        if (is_red(codes[p])) {
          target_pos = static_cast<int>(std::find(tcodes.begin(), tcodes.end(), codes[p]) - tcodes.begin());
        } else {
          int want = black_rank[bseen++], cnt = 0;
          for (int q = 0; q < static_cast<int>(tcodes.size()); ++q)
            if (!is_red(tcodes[q]) && cnt++ == want) {
              target_pos = q;
              break;
            }
        }
        w[p] = static_cast<uint8_t>(target_pos);
      }
      out.push_back({t, A.perm_degree(codes, w)});
      return;
    }
    for (int v = 0; v <= own[b]; ++v) {
      pick[b] = v;
      self(self, b + 1);
    }
  };
  rec(rec, 0);
  return out;
}

template <class F>
FiltrationCertificate standard_filtration_check(QuotientEngine<F>& Q, const TensorSpace& V, const Idem& e,
                                                const ScanOptions& opt) {
  FiltrationCertificate cert;
  TildeAlgebra& A = Q.algebra();
  cert.terms = filtration_terms(A, e);
  TensorVector v = V.vkappa(e), sm, sp;
  for (const auto& t : cert.terms) {
    TensorVector s = V.skappa(t.target);
    TensorVector a = s, b = s;
    a *= LaurentPoly::monomial(-t.degree);
    b *= LaurentPoly::monomial(t.degree);
    sm += a;
    sp += b;
  }
  cert.tensor_minus = (v == sm);
  cert.tensor_plus = (v == sp);
  cert.dims_minus = cert.dims_plus = true;
  std::ostringstream os;
  for (const auto& J : idempotents_with_content(e.content(A.datum().rank()), e.ell(), true)) {
    GradedDims P = graded_hom(Q, V, J, e, opt);
    LaurentPoly m, p;
    bool complete = P.complete;
    for (const auto& t : cert.terms) {
      GradedDims s = standard_hom(Q, V, J, t.target, opt);
      complete = complete && s.complete;
      m += s.dims.shifted(-t.degree);
      p += s.dims.shifted(t.degree);
    }
    if (!complete) os << "incomplete scan at " << J.to_string(A.datum()) << "; ";
    if (m != P.dims) cert.dims_minus = false;
    if (p != P.dims) cert.dims_plus = false;
  }
  cert.detail = os.str();
  return cert;
}

// ------------------------------------------------------------------ blocks

template <class F>
const typename QuotientBlock<F>::Vec& QuotientBlock<F>::product(int i, int j) const {
  auto it = table.find({i, j});
  return it == table.end() ? zero_ : it->second;
}

template <class F>
typename QuotientBlock<F>::Vec QuotientBlock<F>::multiply(const Vec& a, const Vec& b) const {
  std::map<int, S> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      if (basis[i].top != basis[j].bottom) continue;
      S xy = field.mul(x, y);
      for (const auto& [k, z] : product(i, j)) {
        auto [it, ins] = acc.emplace(k, field.zero());
        it->second = field.add(it->second, field.mul(xy, z));
      }
    }
  Vec out;
  for (auto& [k, v] : acc)
    if (!field.is_zero(v)) out.emplace_back(k, v);
  return out;
}

template <class F>
typename QuotientBlock<F>::Vec QuotientBlock<F>::unit() const {
  std::map<int, S> acc;
  for (const auto& v : idem_vec)
    for (const auto& [k, x] : v) {
      auto [it, ins] = acc.emplace(k, field.zero());
      it->second = field.add(it->second, x);
    }
  Vec out;
  for (auto& [k, v] : acc)
    if (!field.is_zero(v)) out.emplace_back(k, v);
  return out;
}

template <class F>
int QuotientBlock<F>::idem_index(const Idem& e) const {
  auto it = std::find(idems.begin(), idems.end(), e);
  return it == idems.end() ? -1 : static_cast<int>(it - idems.begin());
}

template <class F>
typename QuotientBlock<F>::Vec block_coords(QuotientEngine<F>& Q, const QuotientBlock<F>& B, const Element& x) {
  using S = typename F::S;
  TildeAlgebra& A = Q.algebra();
  std::map<std::tuple<uint32_t, uint32_t, int>, Element> parts;
  for (const auto& [d, c] : x.terms()) parts[{d.bottom, A.top(d), A.degree(d)}].add(d, c);
  std::map<int, S> acc;
  for (const auto& [key, part] : parts) {
    const auto& [bid, tid, deg] = key;
    Idem bi = A.idem(bid), ti = A.idem(tid);
    if (bi.violating() || ti.violating()) continue;
    int b = B.idem_index(bi), t = B.idem_index(ti);
    if (b < 0 || t < 0) throw std::invalid_argument("element does not belong to this block");
    auto row = Q.coords(part, bi, ti, deg, Quotient::Violating);
    if (row.empty()) continue;
    auto off = B.offset.find({b, t, deg});
    if (off == B.offset.end()) throw IntegrityError("nonzero coset outside the scanned degrees");
    for (const auto& [r, v] : row) {
      auto [it, ins] = acc.emplace(off->second + r, B.field.zero());
      it->second = B.field.add(it->second, v);
    }
  }
  typename QuotientBlock<F>::Vec out;
  for (auto& [k, v] : acc)
    if (!B.field.is_zero(v)) out.emplace_back(k, v);
  return out;
}

template <class F>
QuotientBlock<F> build_block(QuotientEngine<F>& Q, const TensorSpace& V, const RootVector& content,
                             const ScanOptions& opt, bool check_ideal) {
  TildeAlgebra& A = Q.algebra();
  QuotientBlock<F> B(Q.field());
  B.content = content;
  B.idems = idempotents_with_content(content, A.ell(), true);
  const int m = static_cast<int>(B.idems.size());
  for (int bi = 0; bi < m; ++bi)
    for (int ti = 0; ti < m; ++ti) {
      GradedDims g = Q.graded_dim(B.idems[bi], B.idems[ti], Quotient::Violating,
                                  hom_prediction(V, B.idems[ti], B.idems[bi]).eval_at_1(), opt);
      if (!g.complete) throw IntegrityError("degree cap reached while assembling a block");
      for (const auto& [d, k] : g.dims.terms()) {
        auto comp = Q.component(B.idems[bi], B.idems[ti], d, Quotient::Violating);
        B.offset[{bi, ti, d}] = B.dim();
        for (int c : comp->reps) B.basis.push_back({bi, ti, d, comp->basis[c]});
      }
    }
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (B.basis[i].top != B.basis[j].bottom) continue;
      Element p = A.multiply(B.basis[i].rep, B.basis[j].rep);
      auto v = block_coords(Q, B, p);
      if (!v.empty()) B.table[{i, j}] = std::move(v);
    }
  for (int k = 0; k < m; ++k) B.idem_vec.push_back(block_coords(Q, B, A.idempotent(B.idems[k])));
  if (check_ideal) {
    // left multiples of kernel generators must land in the computed kernel
    for (int i = 0; i < n; ++i) {
      const auto& bi = B.basis[i];
      for (const auto& [g, dg] : Q.generators(B.idems[bi.top], Quotient::Violating)) {
        Element left = A.multiply(bi.rep, g);
        Idem gt = A.idem(A.top(g));
        for (int f = 0; f < m; ++f) {
          int lo = A.perms_between(gt, B.idems[f]).empty() ? 0 : A.min_degree(gt, B.idems[f]);
          for (const auto& b : A.basis_enumerate(gt, B.idems[f], lo, lo + 2)) {
            Element x = A.multiply(left, Element::single(b));
            if (!x.is_zero() && !block_coords(Q, B, x).empty())
              throw IntegrityError("violating kernel is not closed under left multiplication");
          }
        }
      }
    }
  }
  return B;
}

template <class F>
int block_associativity_failures(const QuotientBlock<F>& B) {
  int fails = 0;
  const int n = B.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (B.basis[i].top != B.basis[j].bottom) continue;
      typename QuotientBlock<F>::Vec ei{{i, B.field.one()}}, ej{{j, B.field.one()}};
      auto ij = B.multiply(ei, ej);
      for (int k = 0; k < n; ++k) {
        if (B.basis[j].top != B.basis[k].bottom) continue;
        typename QuotientBlock<F>::Vec ek{{k, B.field.one()}};
        if (B.multiply(ij, ek) != B.multiply(ei, B.multiply(ej, ek))) ++fails;
      }
    }
  return fails;
}

// ------------------------------------------------------------------ single red strand

template <class F>
bool cyclotomic_kernel_matches(QuotientEngine<F>& Q, const std::vector<int>& I, const std::vector<int>& J, int d) {
  TildeAlgebra& A = Q.algebra();
  if (A.ell() != 1) throw std::invalid_argument("cyclotomic comparison needs exactly one red strand");
  Idem e{I, {0}}, f{J, {0}};
  auto comp = Q.component(e, f, d, Quotient::Violating);
  const int nb = static_cast<int>(comp->basis.size());
  if (nb == 0) return true;
  RowSpace<F> cyc(Q.field(), nb);
  for (const auto& K : sequences_with_content(e.content(A.datum().rank()))) {
    if (K.empty()) continue;  // no strand to put dots on
    Idem k{K, {0}};
    Diagram y = A.identity(k);
    y.dots[0] = static_cast<uint16_t>(A.lambdas()[0].coords[K[0]]);
    const int ydeg = A.degree(y);
    if (A.perms_between(e, k).empty() || A.perms_between(k, f).empty()) continue;
    const int lo1 = A.min_degree(e, k), lo2 = A.min_degree(k, f);
    for (int d1 = lo1; d1 + ydeg + lo2 <= d; ++d1) {
      const int d2 = d - ydeg - d1;
      auto left = A.basis_enumerate(e, k, d1, d1);
      auto right = A.basis_enumerate(k, f, d2, d2);
      for (const auto& a : left) {
        Element ay = A.multiply(a, y);
        for (const auto& b : right) {
          Element x = A.multiply(ay, Element::single(b));
          typename RowSpace<F>::Row r;
          for (const auto& [dg, c] : x.terms()) {
            auto it = comp->index.find(dg);
            if (it == comp->index.end()) throw std::logic_error("cyclotomic row leaves the component");
            auto s = Q.field().from(c);
            if (!Q.field().is_zero(s)) r.emplace_back(it->second, s);
          }
          std::sort(r.begin(), r.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
          cyc.insert(r);
        }
      }
    }
  }
  if (!comp->kernel) return cyc.rank() == nb;
  if (cyc.rank() != comp->kernel->rank()) return false;
  for (const auto& [c, row] : cyc.pivots())
    if (!comp->kernel->contains(row)) return false;
  return true;
}

template <class F>
CentralizerData double_centralizer_data(QuotientEngine<F>& multi, QuotientEngine<F>& single,
                                        const TensorSpace& Vmulti, const TensorSpace& Vsingle, const Idem& e,
                                        const std::vector<int>& J, const ScanOptions& opt) {
  CentralizerData out;
  TildeAlgebra& As = single.algebra();
  const TildeAlgebra& Am = multi.algebra();
  Idem zeroJ{J, std::vector<int>(e.ell(), 0)};
  out.hom_side = graded_hom(multi, Vmulti, zeroJ, e, opt).dims;

  Idem eI{e.I, {0}}, eJ{J, {0}};
  Diagram y = As.identity(eI);
  for (int k = 0; k < e.n(); ++k) {
    int dots = 0;
    for (int j = 0; j < e.ell(); ++j)
      if (k < e.kappa[j]) dots += Am.lambdas()[j].coords[e.I[k]];
    y.dots[k] = static_cast<uint16_t>(dots);
  }
  const int ydeg = As.degree(y);
  GradedDims base = graded_hom(single, Vsingle, eJ, eI, opt);  // e_I T^lambda e_J
  for (const auto& [d, k] : base.dims.terms()) {
    auto src = single.component(eI, eJ, d, Quotient::Violating);
    auto dst = single.component(eI, eJ, d + ydeg, Quotient::Violating);
    if (dst->dim() == 0) continue;
    RowSpace<F> img(single.field(), dst->dim());
    for (int c : src->reps) {
      Element x = As.multiply(y, src->basis[c]);
      img.insert(single.coords(x, eI, eJ, d + ydeg, Quotient::Violating));
    }
    if (img.rank()) out.y_side += LaurentPoly::monomial(d + ydeg, img.rank());
  }
  if (out.y_side.is_zero() && out.hom_side.is_zero()) {
    out.match = true;
  } else if (!out.y_side.is_zero() && !out.hom_side.is_zero()) {
    out.shift = out.y_side.min_exp() - out.hom_side.min_exp();
    out.match = out.y_side == out.hom_side.shifted(out.shift);
  }
  return out;
}

// ------------------------------------------------------------------ Frobenius

template <class F>
FrobeniusCertificate frobenius_check(const QuotientBlock<F>& B, uint64_t seed) {
  using S = typename F::S;
  FrobeniusCertificate cert;
  const int n = B.dim();
  if (n == 0) {
    cert.feasible = true;
    cert.detail = "zero block";
    return cert;
  }
  int dmin = B.basis[0].degree, dmax = dmin;
  for (const auto& b : B.basis) {
    dmin = std::min(dmin, b.degree);
    dmax = std::max(dmax, b.degree);
  }
  const int D = dmin + dmax;
  cert.degree = D;
  std::vector<int> top;  // basis elements of degree D
  std::vector<int> col(n, -1);
  for (int i = 0; i < n; ++i)
    if (B.basis[i].degree == D) {
      col[i] = static_cast<int>(top.size());
      top.push_back(i);
    }
  if (top.empty()) {
    cert.detail = "no basis elements in the pairing degree";
    return cert;
  }
  // tau(ab) - tau(ba) = 0 for homogeneous pairs, and tau(e x) = tau(x e)
  std::vector<std::vector<S>> eqs;
  auto add_eq = [&](const typename QuotientBlock<F>::Vec& ab, const typename QuotientBlock<F>::Vec& ba) {
    std::vector<S> row(top.size(), B.field.zero());
    bool nz = false;
    for (const auto& [k, v] : ab)
      if (col[k] >= 0) row[col[k]] = B.field.add(row[col[k]], v), nz = true;
    for (const auto& [k, v] : ba)
      if (col[k] >= 0) row[col[k]] = B.field.sub(row[col[k]], v), nz = true;
    if (nz) eqs.push_back(std::move(row));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (B.basis[i].degree + B.basis[j].degree != D) continue;
      add_eq(B.product(i, j), B.product(j, i));
    }
  for (const auto& e : B.idem_vec)
    for (int j : top) {
      typename QuotientBlock<F>::Vec x{{j, B.field.one()}};
      add_eq(B.multiply(e, x), B.multiply(x, e));
    }
  Matrix<F> M(B.field, static_cast<int>(eqs.size()), static_cast<int>(top.size()));
  for (size_t r = 0; r < eqs.size(); ++r)
    for (size_t c = 0; c < top.size(); ++c) M.at(static_cast<int>(r), static_cast<int>(c)) = eqs[r][c];
  auto null = M.nullspace();
  cert.functionals = static_cast<int>(null.size());
  if (null.empty()) {
    cert.detail = "no symmetric functional in the pairing degree";
    return cert;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<S> tau(top.size(), B.field.zero());
    for (const auto& v : null) {
      long long r = static_cast<long long>(rng() % 19) - 9;
      S rs = B.field.from(Int(static_cast<long>(r)));
      for (size_t c = 0; c < top.size(); ++c) tau[c] = B.field.add(tau[c], B.field.mul(rs, v[c]));
    }
    Matrix<F> G(B.field, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (B.basis[i].degree + B.basis[j].degree != D) continue;
        S s = B.field.zero();
        for (const auto& [k, v] : B.product(i, j))
          if (col[k] >= 0) s = B.field.add(s, B.field.mul(v, tau[col[k]]));
        G.at(i, j) = s;
      }
    if (!B.field.is_zero(G.det())) {
      cert.feasible = true;
      std::ostringstream os;
      os << "nondegenerate at attempt " << attempt + 1;
      cert.detail = os.str();
      return cert;
    }
  }
  cert.detail = "every sampled symmetric functional was degenerate";
  return cert;
}

// ------------------------------------------------------------------ instantiations

#define TPA_INSTANTIATE(F)                                                                                         \
  template class QuotientEngine<F>;                                                                                \
  template struct QuotientBlock<F>;                                                                                \
  template FiltrationCertificate standard_filtration_check<F>(QuotientEngine<F>&, const TensorSpace&, const Idem&,  \
                                                              const ScanOptions&);                                 \
  template QuotientBlock<F> build_block<F>(QuotientEngine<F>&, const TensorSpace&, const RootVector&,               \
                                           const ScanOptions&, bool);                                              \
  template typename QuotientBlock<F>::Vec block_coords<F>(QuotientEngine<F>&, const QuotientBlock<F>&,              \
                                                          const Element&);                                         \
  template int block_associativity_failures<F>(const QuotientBlock<F>&);                                           \
  template bool cyclotomic_kernel_matches<F>(QuotientEngine<F>&, const std::vector<int>&, const std::vector<int>&,  \
                                             int);                                                                 \
  template CentralizerData double_centralizer_data<F>(QuotientEngine<F>&, QuotientEngine<F>&, const TensorSpace&,  \
                                                      const TensorSpace&, const Idem&, const std::vector<int>&,    \
                                                      const ScanOptions&);                                         \
  template FrobeniusCertificate frobenius_check<F>(const QuotientBlock<F>&, uint64_t);

TPA_INSTANTIATE(QField)
TPA_INSTANTIATE(PField)

}  // namespace tpa
