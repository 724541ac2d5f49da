#include "tpa/modules.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace tpa {

namespace {

using S = mpq_class;
using Row = RowSpace<QField>::Row;

QVec from_map(const std::map<int, S>& m) {
  QVec out;
  for (const auto& [k, v] : m)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

void axpy(std::map<int, S>& acc, const QVec& v, const S& c) {
  for (const auto& [k, x] : v) acc[k] += c * x;
}

QVec combine(const QVec& a, const S& ca, const QVec& b, const S& cb) {
  std::map<int, S> acc;
  axpy(acc, a, ca);
  axpy(acc, b, cb);
  return from_map(acc);
}

QVec unit_vec(int k) { return QVec{{k, S(1)}}; }

using Key = std::pair<int, int>;  // (idempotent, degree)

}  // namespace

// ------------------------------------------------------------------ modules

QVec FinDimModule::act(const QVec& v, int j) const {
  std::map<int, S> acc;
  for (const auto& [r, x] : v) {
    auto it = action.find({r, j});
    if (it != action.end()) axpy(acc, it->second, x);
  }
  return from_map(acc);
}

QVec FinDimModule::act(const QVec& v, const QVec& a) const {
  std::map<int, S> acc;
  for (const auto& [j, c] : a) axpy(acc, act(v, j), c);
  return from_map(acc);
}

std::vector<LaurentPoly> FinDimModule::character() const {
  std::vector<LaurentPoly> out(block->idems.size());
  for (int r = 0; r < dim(); ++r) out[idem[r]].add_term(degree[r], 1);
  return out;
}

std::vector<int> FinDimModule::ungraded_character() const {
  std::vector<int> out(block->idems.size(), 0);
  for (int r = 0; r < dim(); ++r) ++out[idem[r]];
  return out;
}

LaurentPoly FinDimModule::graded_dim() const {
  LaurentPoly p;
  for (int r = 0; r < dim(); ++r) p.add_term(degree[r], 1);
  return p;
}

int FinDimModule::relation_failures() const {
  const QBlock& B = *block;
  int fails = 0;
  for (int r = 0; r < dim(); ++r)
    for (int a = 0; a < B.dim(); ++a) {
      if (B.basis[a].bottom != idem[r]) continue;
      QVec ra = act(unit_vec(r), a);
      for (int b = 0; b < B.dim(); ++b) {
        if (B.basis[b].bottom != B.basis[a].top) continue;
        if (act(ra, b) != act(unit_vec(r), B.product(a, b))) ++fails;
      }
    }
  return fails;
}

FinDimModule regular_module(const QBlock& B) {
  FinDimModule M;
  M.block = &B;
  for (const auto& b : B.basis) {
    M.idem.push_back(b.top);
    M.degree.push_back(b.degree);
  }
  for (const auto& [ij, v] : B.table) M.action.emplace(ij, v);
  return M;
}

FinDimModule submodule(const FinDimModule& M, const std::vector<QVec>& gens, std::vector<QVec>* rows) {
  const QBlock& B = *M.block;
  const int n = M.dim();
  std::map<Key, RowSpace<QField>> comps;
  auto key_of = [&](const QVec& v) { return Key{M.idem[v.front().first], M.degree[v.front().first]}; };
  auto space = [&](const Key& k) -> RowSpace<QField>& {
    auto it = comps.find(k);
    if (it == comps.end()) it = comps.emplace(k, RowSpace<QField>(QField(), n)).first;
    return it->second;
  };
  std::vector<QVec> queue;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    Key k = key_of(g);
    for (const auto& [c, x] : g)
      if (M.idem[c] != k.first || M.degree[c] != k.second)
        throw std::invalid_argument("submodule generator is not homogeneous");
    if (space(k).insert(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    QVec v = std::move(queue.back());
    queue.pop_back();
    const int a = M.idem[v.front().first];
    for (int j = 0; j < B.dim(); ++j) {
      if (B.basis[j].bottom != a) continue;
      QVec w = M.act(v, j);
      if (w.empty()) continue;
      if (space(key_of(w)).insert(w)) queue.push_back(std::move(w));
    }
  }
  FinDimModule out;
  out.block = &B;
  std::map<std::pair<Key, int>, int> index;  // (component, pivot column) -> new basis index
  std::vector<QVec> basis;
  for (const auto& [k, rs] : comps)
    for (const auto& [col, row] : rs.pivots()) {
      index[{k, col}] = out.dim();
      out.idem.push_back(k.first);
      out.degree.push_back(k.second);
      basis.push_back(row);
    }
  for (int r = 0; r < out.dim(); ++r)
    for (int j = 0; j < B.dim(); ++j) {
      if (B.basis[j].bottom != out.idem[r]) continue;
      QVec w = M.act(basis[r], j);
      if (w.empty()) continue;
      Key k = key_of(w);
      Row rest;
      auto coef = comps.at(k).coefficients(w, &rest);
      if (!rest.empty()) throw IntegrityError("submodule is not closed");
      QVec img;
      for (const auto& [col, c] : coef) img.emplace_back(index.at({k, col}), c);
      std::sort(img.begin(), img.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!img.empty()) out.action.emplace(std::make_pair(r, j), std::move(img));
    }
  if (rows) *rows = std::move(basis);
  return out;
}

FinDimModule quotient(const FinDimModule& M, const std::vector<QVec>& sub) {
  const QBlock& B = *M.block;
  const int n = M.dim();
  RowSpace<QField> rs(QField(), n);
  for (const auto& v : sub) rs.insert(v);
  std::vector<int> newidx(n, -1);
  FinDimModule out;
  out.block = &B;
  std::vector<int> keep;
  for (int c = 0; c < n; ++c)
    if (!rs.pivots().count(c)) {
      newidx[c] = static_cast<int>(keep.size());
      keep.push_back(c);
      out.idem.push_back(M.idem[c]);
      out.degree.push_back(M.degree[c]);
    }
  for (int r = 0; r < out.dim(); ++r)
    for (int j = 0; j < B.dim(); ++j) {
      if (B.basis[j].bottom != out.idem[r]) continue;
      QVec w = rs.reduce(M.act(unit_vec(keep[r]), j));
      QVec img;
      for (const auto& [c, x] : w) {
        if (newidx[c] < 0) throw IntegrityError("remainder on a pivot column");
        img.emplace_back(newidx[c], x);
      }
      if (!img.empty()) out.action.emplace(std::make_pair(r, j), std::move(img));
    }
  return out;
}

int hom_dim(const FinDimModule& M, const FinDimModule& N) {
  if (M.block != N.block && (M.dim() && N.dim())) throw std::invalid_argument("modules over different blocks");
  if (M.dim() == 0 || N.dim() == 0) return 0;
  const QBlock& B = *M.block;
  // unknowns phi(m)_n with matching idempotents
  std::map<std::pair<int, int>, int> var;
  for (int m = 0; m < M.dim(); ++m)
    for (int n = 0; n < N.dim(); ++n)
      if (M.idem[m] == N.idem[n]) var.emplace(std::make_pair(m, n), static_cast<int>(var.size()));
  if (var.empty()) return 0;
  // phi(m b) - phi(m) b = 0, one equation per (m, b, coordinate of N)
  std::vector<std::map<int, S>> eqs;
  for (int m = 0; m < M.dim(); ++m)
    for (int j = 0; j < B.dim(); ++j) {
      if (B.basis[j].bottom != M.idem[m]) continue;
      std::map<int, std::map<int, S>> byrow;  // N coordinate -> variable -> coefficient
      for (const auto& [r, c] : M.act(unit_vec(m), j))
        for (int n = 0; n < N.dim(); ++n) {
          auto it = var.find({r, n});
          if (it != var.end()) byrow[n][it->second] += c;
        }
      for (int n = 0; n < N.dim(); ++n) {
        auto it = var.find({m, n});
        if (it == var.end()) continue;
        for (const auto& [k, c] : N.act(unit_vec(n), j)) byrow[k][it->second] -= c;
      }
      for (auto& [k, e] : byrow) eqs.push_back(std::move(e));
    }
  RowSpace<QField> rs(QField(), static_cast<int>(var.size()));
  for (const auto& e : eqs) rs.insert(from_map(e));
  return static_cast<int>(var.size()) - rs.rank();
}

// ------------------------------------------------------------------ radical

std::vector<QVec> radical(const QBlock& B) {
  const int n = B.dim();
  // trace of left multiplication by each basis element
  std::vector<S> tr(n, S(0));
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) {
      if (B.basis[k].top != B.basis[m].bottom) continue;
      for (const auto& [c, x] : B.product(k, m))
        if (c == m) tr[k] += x;
    }
  auto trace = [&](const QVec& v) {
    S s = 0;
    for (const auto& [k, x] : v) s += x * tr[k];
    return s;
  };
  std::vector<QVec> out;
  for (const auto& [key, first] : B.offset) {
    auto [a, b, d] = key;
    int count = 0;
    while (first + count < n && B.basis[first + count].bottom == a && B.basis[first + count].top == b &&
           B.basis[first + count].degree == d)
      ++count;
    std::vector<int> partners;
    auto it = B.offset.find({b, a, -d});
    if (it != B.offset.end())
      for (int y = it->second; y < n && B.basis[y].bottom == b && B.basis[y].top == a && B.basis[y].degree == -d; ++y)
        partners.push_back(y);
    // rows: partners, columns: elements of this component
    Matrix<QField> G(QField(), static_cast<int>(partners.size()), count);
    for (size_t p = 0; p < partners.size(); ++p)
      for (int x = 0; x < count; ++x) G.at(static_cast<int>(p), x) = trace(B.product(first + x, partners[p]));
    for (const auto& v : G.nullspace()) {
      QVec r;
      for (int x = 0; x < count; ++x)
        if (v[x] != 0) r.emplace_back(first + x, v[x]);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<QVec> radical(const QuotientBlock<PField>&) {
  throw UnsupportedCharacteristic("the radical is only computed in characteristic 0");
}

// ------------------------------------------------------------------ decomposition

namespace {

/// Rational roots of an integer polynomial (coefficients low to high), all
/// of them or nothing when some root is irrational or too large to search.
std::optional<std::vector<S>> rational_roots(std::vector<Int> p) {
  std::vector<S> roots;
  auto trim = [&] {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim();
  while (p.size() > 1 && p.front() == 0) {
    roots.push_back(0);
    p.erase(p.begin());
  }
  auto divisors = [](Int x) -> std::optional<std::vector<Int>> {
    x = abs(x);
    if (x > Int("1000000000000")) return std::nullopt;
    std::vector<Int> ds;
    for (Int d = 1; d * d <= x; ++d)
      if (x % d == 0) {
        ds.push_back(d);
        if (d * d != x) ds.push_back(x / d);
      }
    return ds;
  };
  while (p.size() > 1) {
    auto num = divisors(p.front()), den = divisors(p.back());
    if (!num || !den) return std::nullopt;
    bool found = false;
    for (const auto& a : *num) {
      for (const auto& b : *den) {
        for (int sgn : {1, -1}) {
          S r(Int(sgn * a), b);
          r.canonicalize();
          S v = 0;
          for (size_t k = p.size(); k-- > 0;) v = v * r + S(p[k]);
          if (v != 0) continue;
          roots.push_back(r);
          // synthetic division by (b t - sgn a), exact over Z by Gauss
          std::vector<S> q(p.size() - 1);
          S carry = 0;
          for (size_t k = p.size(); k-- > 1;) {
            carry = carry * r + S(p[k]);
            q[k - 1] = carry;
          }
          Int l = 1;
          for (const auto& c : q) l = lcm(l, Int(c.get_den()));
          std::vector<Int> np;
          for (const auto& c : q) np.push_back(Int(c * S(l)));
          Int g = 0;
          for (const auto& c : np) g = gcd(g, c);
          for (auto& c : np) c /= g;
          p = std::move(np);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

struct Semisimple {
  const QBlock& B;
  RowSpace<QField> rad;
  explicit Semisimple(const QBlock& b, const std::vector<QVec>& r) : B(b), rad(QField(), b.dim()) {
    for (const auto& v : r) rad.insert(v);
  }
  QVec red(const QVec& v) const { return rad.reduce(v); }
  QVec mul(const QVec& a, const QVec& b) const { return red(B.multiply(a, b)); }
};

}  // namespace

BlockDecomposition decompose(const QBlock& B, uint64_t seed) {
  BlockDecomposition D;
  D.radical = radical(B);
  const int n = B.dim();
  if (n == 0) return D;
  Semisimple ss(B, D.radical);
  FinDimModule reg = regular_module(B);
  FinDimModule abar = quotient(reg, D.radical);
  std::vector<int> keep, newidx(n, -1);
  for (int c = 0; c < n; ++c)
    if (!ss.rad.pivots().count(c)) {
      newidx[c] = static_cast<int>(keep.size());
      keep.push_back(c);
    }
  auto to_abar = [&](const QVec& v) {
    QVec out;
    for (const auto& [c, x] : ss.red(v)) out.emplace_back(newidx[c], x);
    return out;
  };

  // center of A/rad, which sits in degree 0
  std::vector<int> z0;
  for (int c : keep)
    if (B.basis[c].degree == 0) z0.push_back(c);
  std::vector<std::vector<QVec>> comm(z0.size());
  std::map<std::pair<int, int>, int> rowid;
  for (size_t j = 0; j < z0.size(); ++j)
    for (int l : keep) {
      QVec w = combine(ss.mul(unit_vec(z0[j]), unit_vec(l)), S(1), ss.mul(unit_vec(l), unit_vec(z0[j])), S(-1));
      for (const auto& [c, x] : w) rowid.emplace(std::make_pair(l, c), static_cast<int>(rowid.size()));
      comm[j].push_back(std::move(w));
    }
  Matrix<QField> C(QField(), static_cast<int>(rowid.size()), static_cast<int>(z0.size()));
  for (size_t j = 0; j < z0.size(); ++j) {
    size_t t = 0;
    for (int l : keep) {
      for (const auto& [c, x] : comm[j][t]) C.at(rowid.at({l, c}), static_cast<int>(j)) = x;
      ++t;
    }
  }
  std::vector<QVec> center;
  for (const auto& v : C.nullspace()) {
    QVec z;
    for (size_t j = 0; j < z0.size(); ++j)
      if (v[j] != 0) z.emplace_back(z0[j], v[j]);
    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    center.push_back(z);
  }
  const int r = static_cast<int>(center.size());
  const QVec one = ss.red(B.unit());

  // eigenvalues of a random central element separate the blocks of A/rad
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(1, 7);
  std::vector<QVec> idems;
  for (int attempt = 0; attempt < 40 && idems.empty(); ++attempt) {
    QVec z;
    for (const auto& c : center) z = combine(z, S(1), c, S(coef(rng)));
    std::vector<QVec> pw{one};
    std::vector<S> poly;
    for (int deg = 1; deg <= r; ++deg) {
      pw.push_back(ss.mul(pw.back(), z));
      std::set<int> cols;
      for (const auto& v : pw)
        for (const auto& [c, x] : v) cols.insert(c);
      std::map<int, int> ci;
      for (int c : cols) ci.emplace(c, static_cast<int>(ci.size()));
      Matrix<QField> P(QField(), static_cast<int>(cols.size()), deg + 1);
      for (int k = 0; k <= deg; ++k)
        for (const auto& [c, x] : pw[k]) P.at(ci.at(c), k) = x;
      auto ns = P.nullspace();
      if (!ns.empty()) {
        poly = ns.front();
        break;
      }
    }
    if (static_cast<int>(poly.size()) != r + 1) continue;  // eigenvalues collide
    Int l = 1;
    for (const auto& c : poly) l = lcm(l, Int(c.get_den()));
    std::vector<Int> ip;
    for (const auto& c : poly) ip.push_back(Int(c * S(l)));
    auto roots = rational_roots(ip);
    if (!roots || static_cast<int>(roots->size()) != r) continue;
    for (int k = 0; k < r; ++k) {
      QVec e = one;
      for (int m = 0; m < r; ++m) {
        if (m == k) continue;
        S den = (*roots)[k] - (*roots)[m];
        QVec f = combine(z, S(1) / den, one, -(*roots)[m] / den);
        e = ss.mul(e, f);
      }
      idems.push_back(e);
    }
  }
  if (static_cast<int>(idems.size()) != r) throw IntegrityError("could not split the center of A/rad");
  {
    QVec total;
    for (const auto& e : idems) {
      if (ss.mul(e, e) != e) throw IntegrityError("central idempotent is not idempotent");
      total = combine(total, S(1), e, S(1));
    }
    if (total != one) throw IntegrityError("central idempotents do not sum to one");
  }
  D.central_idempotents = idems;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return B.basis[a].degree > B.basis[b].degree; });
  for (const auto& e : idems) {
    RowSpace<QField> span(QField(), n);
    for (int j = 0; j < n; ++j) span.insert(ss.mul(e, unit_vec(j)));
    const int sq = span.rank();
    int nk = 0;
    while ((nk + 1) * (nk + 1) <= sq) ++nk;
    if (nk * nk != sq) throw IntegrityError("block of A/rad has non-square dimension");
    std::optional<FinDimModule> simple;
    auto attempt = [&](const QVec& x) {
      QVec xb = to_abar(x);
      if (xb.empty()) return false;
      FinDimModule L = submodule(abar, {xb});
      if (L.dim() != nk) return false;
      simple = std::move(L);
      return true;
    };
    for (int j : order)
      if (attempt(ss.mul(e, unit_vec(j)))) break;
    for (size_t a = 0; a < order.size() && !simple; ++a)
      for (size_t b = 0; b < order.size() && !simple; ++b) {
        int i = order[a], j = order[b];
        if (B.basis[i].top != B.basis[j].bottom) continue;
        attempt(ss.mul(e, B.product(i, j)));
      }
    if (!simple) throw IntegrityError("no rank one element found in a block of A/rad");
    SimpleModule sm;
    sm.module = std::move(*simple);
    LaurentPoly g = sm.module.graded_dim();
    int lo = g.min_exp(), hi = g.max_exp();
    if ((lo + hi) % 2 == 0) sm.shift = -(lo + hi) / 2;
    for (auto& d : sm.module.degree) d += sm.shift;
    sm.character = sm.module.character();
    sm.ungraded = sm.module.ungraded_character();
    sm.self_dual = std::all_of(sm.character.begin(), sm.character.end(),
                               [](const LaurentPoly& p) { return p.is_bar_invariant(); });
    D.simples.push_back(std::move(sm));
  }
  return D;
}

std::pair<int, int> identify_simple(const BlockDecomposition& D, const std::vector<int>& chi) {
  for (size_t s = 0; s < D.simples.size(); ++s) {
    const auto& u = D.simples[s].ungraded;
    if (u.size() != chi.size()) continue;
    int ratio = 0;
    bool ok = true;
    for (size_t a = 0; a < u.size() && ok; ++a) {
      if (u[a] == 0) {
        ok = chi[a] == 0;
      } else if (chi[a] % u[a] != 0) {
        ok = false;
      } else {
        int q = chi[a] / u[a];
        if (ratio == 0) ratio = q;
        ok = q == ratio && q > 0;
      }
    }
    if (ok && ratio > 0) return {static_cast<int>(s), ratio};
  }
  return {-1, 0};
}

// ------------------------------------------------------------------ workbench

ModuleWorkbench::ModuleWorkbench(TildeAlgebra& A, const TensorSpace& V, ScanOptions opt, int max_strands)
    : A_(A), V_(V), opt_(opt), max_strands_(max_strands), Q_(A, QField()) {}

const QBlock& ModuleWorkbench::block(const RootVector& c) {
  auto it = blocks_.find(c);
  if (it != blocks_.end()) return *it->second;
  int n = 0;
  for (int x : c.coords) {
    if (x < 0) throw std::invalid_argument("negative content");
    n += x;
  }
  if (n > max_strands_) throw BlockMissing("block needs " + std::to_string(n) + " black strands, bound is " +
                                           std::to_string(max_strands_));
  auto B = std::make_unique<QBlock>(build_block(Q_, V_, c, opt_));
  return *blocks_.emplace(c, std::move(B)).first->second;
}

const BlockDecomposition& ModuleWorkbench::decomposition(const RootVector& c) {
  auto it = decomps_.find(c);
  if (it != decomps_.end()) return *it->second;
  auto D = std::make_unique<BlockDecomposition>(decompose(block(c)));
  return *decomps_.emplace(c, std::move(D)).first->second;
}

const ModuleWorkbench::NuData& ModuleWorkbench::nu(const RootVector& c, int i) {
  auto key = std::make_pair(c, i);
  auto it = nus_.find(key);
  if (it != nus_.end()) return it->second;
  RootVector c2 = c;
  c2.coords.at(i) += 1;
  NuData d;
  d.source = &block(c);
  d.target = &block(c2);
  for (const auto& e : d.source->idems) {
    Idem f = e;
    f.I.push_back(i);
    d.idem.push_back(d.target->idem_index(f));
  }
  for (const auto& b : d.source->basis) {
    Idem bot = d.source->idems[b.bottom];
    bot.I.push_back(i);
    Element x = A_.straighten(A_.word_of(b.rep), bot);
    d.images.push_back(block_coords(Q_, *d.target, x));
  }
  return nus_.emplace(key, std::move(d)).first->second;
}

const QBlock& ModuleWorkbench::block_of(const FinDimModule& M) {
  if (!M.block) throw std::invalid_argument("module without a block");
  return block(M.block->content);
}

FinDimModule ModuleWorkbench::induce(const FinDimModule& M, int i) {
  const QBlock& Ab = block_of(M);
  const NuData& n = nu(Ab.content, i);
  const QBlock& Bb = *n.target;
  // pairs (m, y) with y starting at nu(idem of m)
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pid;
  for (int m = 0; m < M.dim(); ++m)
    for (int y = 0; y < Bb.dim(); ++y)
      if (Bb.basis[y].bottom == n.idem[M.idem[m]]) {
        pid[{m, y}] = static_cast<int>(pairs.size());
        pairs.push_back({m, y});
      }
  const int np = static_cast<int>(pairs.size());
  FinDimModule T;
  T.block = &Bb;
  for (const auto& [m, y] : pairs) {
    T.idem.push_back(Bb.basis[y].top);
    T.degree.push_back(M.degree[m] + Bb.basis[y].degree);
  }
  for (int p = 0; p < np; ++p) {
    auto [m, y] = pairs[p];
    for (int b = 0; b < Bb.dim(); ++b) {
      if (Bb.basis[b].bottom != Bb.basis[y].top) continue;
      QVec img;
      for (const auto& [w, c] : Bb.product(y, b)) img.emplace_back(pid.at({m, w}), c);
      if (!img.empty()) T.action.emplace(std::make_pair(p, b), std::move(img));
    }
  }
  // (m z) x y - m x nu(z) y
  std::vector<QVec> rel;
  for (int m = 0; m < M.dim(); ++m)
    for (int z = 0; z < Ab.dim(); ++z) {
      if (Ab.basis[z].bottom != M.idem[m]) continue;
      QVec mz = M.act(unit_vec(m), z);
      for (int y = 0; y < Bb.dim(); ++y) {
        if (Bb.basis[y].bottom != n.idem[Ab.basis[z].top]) continue;
        std::map<int, S> acc;
        for (const auto& [r, c] : mz) acc[pid.at({r, y})] += c;
        for (const auto& [w, c] : Bb.multiply(n.images[z], unit_vec(y))) acc[pid.at({m, w})] -= c;
        QVec v = from_map(acc);
        if (!v.empty()) rel.push_back(std::move(v));
      }
    }
  return quotient(T, rel);
}

FinDimModule ModuleWorkbench::restrict_module(const FinDimModule& N, int i) {
  const QBlock& Bb = block_of(N);
  RootVector c = Bb.content;
  if (c.coords.at(i) == 0) {
    FinDimModule z;
    z.block = &Bb;  // nothing to restrict to; the zero module
    return z;
  }
  c.coords[i] -= 1;
  const NuData& n = nu(c, i);
  const QBlock& Ab = *n.source;
  std::vector<int> src_of(Bb.idems.size(), -1);
  for (size_t a = 0; a < n.idem.size(); ++a)
    if (n.idem[a] >= 0) src_of[n.idem[a]] = static_cast<int>(a);
  FinDimModule out;
  out.block = &Ab;
  std::vector<int> newidx(N.dim(), -1), old;
  for (int r = 0; r < N.dim(); ++r)
    if (src_of[N.idem[r]] >= 0) {
      newidx[r] = out.dim();
      old.push_back(r);
      out.idem.push_back(src_of[N.idem[r]]);
      out.degree.push_back(N.degree[r]);
    }
  for (int r = 0; r < out.dim(); ++r)
    for (int z = 0; z < Ab.dim(); ++z) {
      if (Ab.basis[z].bottom != out.idem[r]) continue;
      QVec img;
      for (const auto& [w, x] : N.act(unit_vec(old[r]), n.images[z])) {
        if (newidx[w] < 0) throw IntegrityError("restriction leaves nu(1)");
        img.emplace_back(newidx[w], x);
      }
      if (!img.empty()) out.action.emplace(std::make_pair(r, z), std::move(img));
    }
  return out;
}

FinDimModule ModuleWorkbench::cosocle(const FinDimModule& M) {
  const auto& D = decomposition(block_of(M).content);
  std::vector<QVec> sub;
  for (int r = 0; r < M.dim(); ++r)
    for (const auto& x : D.radical) {
      if (M.block->basis[x.front().first].bottom != M.idem[r]) continue;
      QVec w = M.act(unit_vec(r), x);
      if (!w.empty()) sub.push_back(std::move(w));
    }
  return quotient(M, sub);
}

FinDimModule ModuleWorkbench::socle(const FinDimModule& M) {
  const auto& D = decomposition(block_of(M).content);
  std::map<Key, std::vector<int>> comps;
  for (int r = 0; r < M.dim(); ++r) comps[{M.idem[r], M.degree[r]}].push_back(r);
  std::vector<QVec> gens;
  for (const auto& [k, cols] : comps) {
    std::map<std::pair<size_t, int>, int> rowid;
    std::vector<std::vector<QVec>> per(cols.size());
    for (size_t t = 0; t < cols.size(); ++t)
      for (size_t x = 0; x < D.radical.size(); ++x) {
        QVec w = M.act(unit_vec(cols[t]), D.radical[x]);
        per[t].push_back(w);
        for (const auto& [c, v] : w) rowid.emplace(std::make_pair(x, c), static_cast<int>(rowid.size()));
      }
    Matrix<QField> G(QField(), static_cast<int>(rowid.size()), static_cast<int>(cols.size()));
    for (size_t t = 0; t < cols.size(); ++t)
      for (size_t x = 0; x < D.radical.size(); ++x)
        for (const auto& [c, v] : per[t][x]) G.at(rowid.at({x, c}), static_cast<int>(t)) = v;
    for (const auto& v : G.nullspace()) {
      QVec g;
      for (size_t t = 0; t < cols.size(); ++t)
        if (v[t] != 0) g.emplace_back(cols[t], v[t]);
      gens.push_back(std::move(g));
    }
  }
  return submodule(M, gens);
}

CrystalStep ModuleWorkbench::classify(const FinDimModule& M, const RootVector& c) {
  CrystalStep st;
  st.content = c;
  if (M.dim() == 0) return st;
  const auto& D = decomposition(c);
  auto [s, m] = identify_simple(D, M.ungraded_character());
  if (s < 0) throw IntegrityError("crystal operator output is not isotypic");
  st.zero = false;
  st.simple = s;
  st.multiplicity = m;
  return st;
}

CrystalStep ModuleWorkbench::crystal_f(const RootVector& c, int s, int i) {
  const auto& D = decomposition(c);
  RootVector c2 = c;
  c2.coords.at(i) += 1;
  int n = 0;
  for (int x : c2.coords) n += x;
  CrystalStep zero;
  zero.content = c2;
  if (n > max_strands_) throw BlockMissing("crystal step beyond the strand bound");
  FinDimModule F = induce(D.simples.at(s).module, i);
  if (F.dim() == 0) return zero;
  return classify(cosocle(F), c2);
}

CrystalStep ModuleWorkbench::crystal_e(const RootVector& c, int s, int i) {
  const auto& D = decomposition(c);
  RootVector c2 = c;
  CrystalStep zero;
  if (c2.coords.at(i) == 0) {
    zero.content = c2;
    return zero;
  }
  c2.coords[i] -= 1;
  zero.content = c2;
  FinDimModule E = restrict_module(D.simples.at(s).module, i);
  if (E.dim() == 0) return zero;
  return classify(socle(E), c2);
}

}  // namespace tpa
