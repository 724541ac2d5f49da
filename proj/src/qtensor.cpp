#include "tpa/qtensor.hpp"

#include <sstream>
#include <stdexcept>

namespace tpa {

void TensorVector::add(const PureTensor& t, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [t, c] : o.terms) add(t, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [t, c] : o.terms) add(t, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [t, v] : terms) v *= c;
  return *this;
}

std::string TensorVector::to_string(const CartanDatum& datum) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (size_t j = 0; j < t.size(); ++j) {
      os << (j ? " x " : " ");
      for (auto it = t[j].rbegin(); it != t[j].rend(); ++it) os << "F" << datum.nodes()[*it];
      os << "v";
    }
  }
  return os.str();
}

bool GradedHomTable::bar_swap_symmetric() const {
  for (const auto& [ab, v] : entries) {
    auto it = entries.find({ab.second, ab.first});
    if (it != entries.end() && it->second != v.bar()) return false;
  }
  return true;
}

bool GradedHomTable::swap_symmetric() const {
  for (const auto& [ab, v] : entries) {
    auto it = entries.find({ab.second, ab.first});
    if (it != entries.end() && it->second != v) return false;
  }
  return true;
}

std::string GradedHomTable::to_csv(const CartanDatum& datum) const {
  std::ostringstream os;
  os << "row_idem,col_idem,laurent\n";
  for (const auto& [ab, v] : entries)
    os << '"' << ab.first.to_string(datum) << "\",\"" << ab.second.to_string(datum) << "\",\"" << v.to_string() << "\"\n";
  return os.str();
}

TensorSpace::TensorSpace(CartanDatum datum, std::vector<Weight> lambdas)
    : datum_(std::move(datum)), lambdas_(std::move(lambdas)) {
  for (const auto& l : lambdas_) {
    datum_.check(l);
    if (!l.dominant()) throw ConfigError("tensor factors need dominant weights");
  }
}

TensorVector TensorSpace::highest(int factors) const {
  if (factors < 0) factors = ell();
  TensorVector v;
  v.add(PureTensor(factors), LaurentPoly(1));
  return v;
}

Weight TensorSpace::factor_weight(int j, const FWord& w) const {
  Weight out = lambdas_.at(j);
  for (int i : w)
    for (int m = 0; m < datum_.rank(); ++m) out.coords[m] -= datum_.c(i, m);
  return out;
}

Weight TensorSpace::weight(const PureTensor& t) const {
  Weight out = datum_.zero_weight();
  for (size_t j = 0; j < t.size(); ++j) {
    Weight f = factor_weight(static_cast<int>(j), t[j]);
    for (int m = 0; m < datum_.rank(); ++m) out.coords[m] += f.coords[m];
  }
  return out;
}

TensorVector TensorSpace::apply_F(int i, const TensorVector& v) const {
  TensorVector out;
  for (const auto& [t, c] : v.terms) {
    const int l = static_cast<int>(t.size());
    // K_{-i} acts on every factor right of the one receiving F_i.
    int right = 0;
    std::vector<int> shift(l, 0);
    for (int j = l - 1; j >= 0; --j) {
      shift[j] = right;
      right += datum_.d(i) * factor_weight(j, t[j]).coords[i];
    }
    for (int j = 0; j < l; ++j) {
      PureTensor u = t;
      u[j].push_back(i);
      out.add(u, c.shifted(-shift[j]));
    }
  }
  return out;
}

void TensorSpace::apply_E_pure(int i, const PureTensor& t, const LaurentPoly& c, TensorVector& out) const {
  const int l = static_cast<int>(t.size());
  const int di = datum_.d(i);
  int left = 0;  // <alpha_i, weight of the factors left of j>
  for (int j = 0; j < l; ++j) {
    Weight mu = lambdas_.at(j);
    for (size_t r = 0; r < t[j].size(); ++r) {
      if (t[j][r] == i) {
        PureTensor u = t;
        u[j].erase(u[j].begin() + static_cast<long>(r));
        out.add(u, (c * qint_signed(mu.coords[i], di)).shifted(left));
      }
      for (int m = 0; m < datum_.rank(); ++m) mu.coords[m] -= datum_.c(t[j][r], m);
    }
    left += di * factor_weight(j, t[j]).coords[i];
  }
}

TensorVector TensorSpace::apply_E(int i, const TensorVector& v) const {
  TensorVector out;
  for (const auto& [t, c] : v.terms) apply_E_pure(i, t, c, out);
  return out;
}

LaurentPoly TensorSpace::form(const TensorVector& v, const TensorVector& w) const {
  LaurentPoly s;
  for (const auto& [x, cx] : v.terms)
    for (const auto& [y, cy] : w.terms) {
      LaurentPoly f = form_pure(x, y);
      if (!f.is_zero()) s += cx.bar() * cy * f;
    }
  return s;
}

LaurentPoly TensorSpace::form_pure(const PureTensor& x, const PureTensor& y) const {
  if (x.size() != y.size()) throw std::invalid_argument("form: tensors with different factor counts");
  if (static_cast<int>(x.size()) > ell()) throw std::invalid_argument("form: too many tensor factors");
  return form_rec(x, y);
}

LaurentPoly TensorSpace::form_rec(const PureTensor& x, const PureTensor& y) const {
  if (weight(x) != weight(y)) return LaurentPoly();
  if (x.empty()) return LaurentPoly(1);
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find({x, y});
    if (it != memo_.end()) return it->second;
  }
  LaurentPoly result;
  if (x.back().empty() && y.back().empty()) {
    // v -> v x v_h is an isometric embedding
    result = form_rec(PureTensor(x.begin(), x.end() - 1), PureTensor(y.begin(), y.end() - 1));
  } else if (x.back().empty()) {
    // peel y instead: <x, F_i y'> = q^{d_i(<alpha_i^v, wt x> + 1)} <E_i x, y'>, linear in y
    const int l = static_cast<int>(y.size());
    const int i = y.back().back();
    PureTensor yp = y;
    yp.back().pop_back();
    const int di = datum_.d(i);
    Weight wx = weight(x);
    int pair = di * (wx.coords[i] + 2);
    TensorVector ex;
    apply_E_pure(i, x, LaurentPoly(1), ex);
    for (const auto& [t, c] : ex.terms) {
      LaurentPoly f = form_rec(t, yp);
      if (!f.is_zero()) result += (c.bar() * f).shifted(pair - di);
    }
    int right = di * factor_weight(l - 1, yp[l - 1]).coords[i];
    for (int j = l - 2; j >= 0; --j) {
      PureTensor u = yp;
      u[j].push_back(i);
      LaurentPoly f = form_rec(x, u);
      if (!f.is_zero()) result -= f.shifted(-right);
      right += di * factor_weight(j, yp[j]).coords[i];
    }
  } else {
    const int l = static_cast<int>(x.size());
    const int i = x.back().back();
    PureTensor xp = x;
    xp.back().pop_back();
    // x = Delta(F_i) xp - sum_{j<l} c_j (xp with F_i in factor j)
    const int di = datum_.d(i);
    Weight wy = weight(y);
    int pair = di * (wy.coords[i] + 2);  // <alpha_i, wt(y) + alpha_i>
    TensorVector ey;
    apply_E_pure(i, y, LaurentPoly(1), ey);
    for (const auto& [t, c] : ey.terms) {
      LaurentPoly f = form_rec(xp, t);
      if (!f.is_zero()) result += (c * f).shifted(pair - di);
    }
    int right = di * factor_weight(l - 1, xp[l - 1]).coords[i];
    for (int j = l - 2; j >= 0; --j) {
      PureTensor u = xp;
      u[j].push_back(i);
      LaurentPoly f = form_rec(u, y);
      // coefficient q^{-right} enters antilinearly
      if (!f.is_zero()) result -= f.shifted(right);
      right += di * factor_weight(j, xp[j]).coords[i];
    }
  }
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.emplace(std::make_pair(x, y), result);
  return result;
}

TensorVector TensorSpace::vkappa(const Idem& e) const {
  e.validate();
  if (e.ell() != ell()) throw std::invalid_argument("vkappa: kappa length differs from the number of factors");
  if (e.violating()) return TensorVector();
  TensorVector v;
  v.add(PureTensor(), LaurentPoly(1));
  for (int code : e.merged()) {
    if (is_red(code)) {
      TensorVector grown;
      for (const auto& [t, c] : v.terms) {
        PureTensor u = t;
        u.emplace_back();
        grown.add(u, c);
      }
      v = std::move(grown);
    } else {
      v = apply_F(code, v);
    }
  }
  return v;
}

TensorVector TensorSpace::pure(const Idem& e) const {
  e.validate();
  if (e.ell() != ell()) throw std::invalid_argument("pure: kappa length differs from the number of factors");
  if (e.violating()) return TensorVector();
  PureTensor t(ell());
  for (int j = 0; j < ell(); ++j) {
    int hi = j + 1 < ell() ? e.kappa[j + 1] : e.n();
    for (int k = e.kappa[j]; k < hi; ++k) t[j].push_back(e.I[k]);
  }
  TensorVector v;
  v.add(t, LaurentPoly(1));
  return v;
}

RootVector TensorSpace::content_for_weight(const Weight& mu) const {
  datum_.check(mu);
  const int r = datum_.rank();
  // Solve sum_i a_i c_im = (sum lambda - mu)_m exactly.
  std::vector<std::vector<mpq_class>> m(r, std::vector<mpq_class>(r + 1));
  for (int mm = 0; mm < r; ++mm) {
    int rhs = -mu.coords[mm];
    for (const auto& l : lambdas_) rhs += l.coords[mm];
    for (int i = 0; i < r; ++i) m[mm][i] = datum_.c(i, mm);
    m[mm][r] = rhs;
  }
  for (int col = 0, row = 0; col < r; ++col) {
    int piv = -1;
    for (int k = row; k < r; ++k)
      if (m[k][col] != 0) piv = k;
    if (piv < 0) throw std::invalid_argument("singular Cartan matrix");
    std::swap(m[row], m[piv]);
    for (int k = 0; k < r; ++k) {
      if (k == row || m[k][col] == 0) continue;
      mpq_class f = m[k][col] / m[row][col];
      for (int c = col; c <= r; ++c) m[k][c] -= f * m[row][c];
    }
    ++row;
  }
  RootVector a = datum_.zero_root();
  for (int i = 0; i < r; ++i) {
    mpq_class v = m[i][r] / m[i][i];
    if (v.get_den() != 1 || v < 0) throw std::invalid_argument("weight is not reachable from the top weight");
    a.coords[i] = static_cast<int>(v.get_num().get_si());
  }
  return a;
}

Weight TensorSpace::weight_for_content(const RootVector& content) const {
  Weight w = datum_.zero_weight();
  for (const auto& l : lambdas_)
    for (int m = 0; m < datum_.rank(); ++m) w.coords[m] += l.coords[m];
  Weight sub = datum_.root_to_weight(content);
  for (int m = 0; m < datum_.rank(); ++m) w.coords[m] -= sub.coords[m];
  return w;
}

int TensorSpace::weight_dim(const Weight& mu) const { return weight_dim_content(content_for_weight(mu)); }

int TensorSpace::weight_dim_content(const RootVector& content) const {
  std::vector<TensorVector> vs;
  for (const auto& e : idempotents_with_content(content, ell(), true)) {
    TensorVector v = vkappa(e);
    if (!v.is_zero()) vs.push_back(std::move(v));
  }
  if (vs.empty()) return 0;
  std::vector<std::vector<LaurentPoly>> g(vs.size(), std::vector<LaurentPoly>(vs.size()));
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = 0; b < vs.size(); ++b) g[a][b] = form(vs[a], vs[b]);
  return laurent_matrix_rank(std::move(g));
}

GradedHomTable TensorSpace::form_table(const RootVector& content) const {
  GradedHomTable t;
  auto idems = idempotents_with_content(content, ell(), true);
  std::vector<TensorVector> vs;
  for (const auto& e : idems) vs.push_back(vkappa(e));
  for (size_t a = 0; a < idems.size(); ++a)
    for (size_t b = 0; b < idems.size(); ++b) t.entries[{idems[a], idems[b]}] = form(vs[a], vs[b]);
  return t;
}

int laurent_matrix_rank(std::vector<std::vector<LaurentPoly>> m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  LaurentPoly prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t k = r; k < rows; ++k)
      if (!m[k][c].is_zero()) {
        piv = k;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t k = r + 1; k < rows; ++k) {
      for (size_t cc = c + 1; cc < cols; ++cc)
        m[k][cc] = (m[r][c] * m[k][cc] - m[k][c] * m[r][cc]).exact_div(prev);
      m[k][c] = LaurentPoly();
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

static Idem idem_of_pure(const PureTensor& t) {
  Idem e;
  for (const auto& w : t) {
    e.kappa.push_back(static_cast<int>(e.I.size()));
    e.I.insert(e.I.end(), w.begin(), w.end());
  }
  return e;
}

TensorVector TensorSpace::skappa(const Idem& e) const {
  e.validate();
  if (e.ell() != ell()) throw std::invalid_argument("skappa: kappa length differs from the number of factors");
  if (e.violating()) return TensorVector();
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = smemo_.find(e);
    if (it != smemo_.end()) return it->second;
  }
  // v_e = p_e + sum c_t p_t with every t further left, so
  // psi(p_e) = v_e - sum bar(c_t) psi(p_t)
  const PureTensor own = pure(e).terms.begin()->first;
  TensorVector out = vkappa(e);
  TensorVector corr;
  for (const auto& [t, c] : out.terms) {
    if (t == own) continue;
    TensorVector s = skappa(idem_of_pure(t));
    s *= c.bar();
    corr += s;
  }
  // out currently holds v_e; remove the non-leading pure terms' images
  out -= corr;
  std::lock_guard<std::mutex> lock(memo_mu_);
  smemo_.emplace(e, out);
  return out;
}

}  // namespace tpa
