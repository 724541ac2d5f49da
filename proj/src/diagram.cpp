#include "tpa/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tpa {

// ---------------------------------------------------------------- Element

Element Element::single(const Diagram& d, const Int& c) {
  Element e;
  e.add(d, c);
  return e;
}

void Element::add(const Diagram& d, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& o, const Int& c) {
  if (c == 0) return;
  for (const auto& [d, v] : o.terms_) add(d, v * c);
}

Int Element::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<std::pair<Diagram, Int>> Element::sorted() const {
  std::vector<std::pair<Diagram, Int>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------- permutations

std::vector<int> TildeAlgebra::canonical_word(const Perm& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> inv(n);
  for (int p = 0; p < n; ++p) inv[w[p]] = p;
  std::vector<int> cur(n);  // strand (bottom position) currently at each position
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<int> word;
  for (int r = 0; r < n; ++r) {
    int p = static_cast<int>(std::find(cur.begin() + r, cur.end(), inv[r]) - cur.begin());
    for (int k = p - 1; k >= r; --k) {
      word.push_back(k);
      std::swap(cur[k], cur[k + 1]);
    }
  }
  return word;
}

Perm TildeAlgebra::perm_of_word(int size, const std::vector<int>& word) {
  std::vector<int> cur(size);
  std::iota(cur.begin(), cur.end(), 0);
  for (int k : word) {
    if (k < 0 || k + 1 >= size) throw StructuralError("crossing out of range");
    std::swap(cur[k], cur[k + 1]);
  }
  Perm w(size);
  for (int p = 0; p < size; ++p) w[cur[p]] = static_cast<uint8_t>(p);
  return w;
}

int TildeAlgebra::length(const Perm& w) {
  int l = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++l;
  return l;
}

bool bruhat_leq(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) return false;
  std::vector<int> a, b;
  for (size_t k = 0; k < u.size(); ++k) {
    a.insert(std::upper_bound(a.begin(), a.end(), u[k]), u[k]);
    b.insert(std::upper_bound(b.begin(), b.end(), v[k]), v[k]);
    for (size_t t = 0; t <= k; ++t)
      if (a[t] > b[t]) return false;
  }
  return true;
}

Perm demazure_product(int size, const std::vector<int>& word) {
  std::vector<int> cur(size);
  std::iota(cur.begin(), cur.end(), 0);
  for (int k : word)
    if (cur[k] < cur[k + 1]) std::swap(cur[k], cur[k + 1]);
  Perm w(size);
  for (int p = 0; p < size; ++p) w[cur[p]] = static_cast<uint8_t>(p);
  return w;
}

// ---------------------------------------------------------------- algebra

TildeAlgebra::TildeAlgebra(CartanDatum datum, QMatrix Q, std::vector<Weight> lambdas)
    : datum_(std::move(datum)), Q_(std::move(Q)), lambdas_(std::move(lambdas)) {
  Q_.validate(datum_);
  for (const auto& l : lambdas_) {
    datum_.check(l);
    if (!l.dominant()) throw ConfigError("red strands need dominant weights");
  }
}

uint32_t TildeAlgebra::intern_codes(const std::vector<int>& codes) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = idem_ids_.find(codes);
  if (it != idem_ids_.end()) return it->second;
  int reds = 0;
  for (int c : codes) {
    if (is_red(c)) {
      if (red_index(c) != reds++) throw StructuralError("red strands out of order");
    } else if (c >= datum_.rank()) {
      throw StructuralError("black label out of range");
    }
  }
  if (reds != ell()) throw StructuralError("idempotent has the wrong number of red strands");
  if (codes.size() > 250) throw StructuralError("too many strands");
  uint32_t id = static_cast<uint32_t>(idem_codes_.size());
  idem_codes_.push_back(codes);
  idem_ids_.emplace(codes, id);
  return id;
}

uint32_t TildeAlgebra::intern(const Idem& e) {
  e.validate();
  return intern_codes(e.merged());
}

const std::vector<int>& TildeAlgebra::codes(uint32_t id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return idem_codes_.at(id);
}

std::vector<int> TildeAlgebra::top_codes(const Diagram& d) const {
  const auto& b = codes(d.bottom);
  std::vector<int> t(b.size());
  for (size_t p = 0; p < b.size(); ++p) t[d.w[p]] = b[p];
  return t;
}

uint32_t TildeAlgebra::top(const Diagram& d) { return intern_codes(top_codes(d)); }

Diagram TildeAlgebra::identity(const Idem& e) {
  Diagram d;
  d.bottom = intern(e);
  d.w.resize(e.n() + e.ell());
  std::iota(d.w.begin(), d.w.end(), 0);
  d.dots.assign(e.n(), 0);
  return d;
}

int TildeAlgebra::black_index(const std::vector<int>& codes, int pos) const {
  int b = 0;
  for (int p = 0; p < pos; ++p)
    if (!is_red(codes[p])) ++b;
  return b;
}

int TildeAlgebra::lambda_at(int red, int label) const { return lambdas_.at(red_index(red)).coords.at(label); }

int TildeAlgebra::crossing_degree(int a, int b) const {
  if (is_red(a) && is_red(b)) throw StructuralError("red strands never cross");
  if (is_red(a)) return datum_.d(b) * lambda_at(a, b);
  if (is_red(b)) return datum_.d(a) * lambda_at(b, a);
  return -datum_.root_pairing(a, b);
}

int TildeAlgebra::perm_degree(const std::vector<int>& codes, const Perm& w) const {
  int deg = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) deg += crossing_degree(codes[a], codes[b]);
  return deg;
}

int TildeAlgebra::degree(const Diagram& d) const {
  int deg = perm_degree(codes(d.bottom), d.w);
  auto t = top_codes(d);
  int b = 0;
  for (int c : t)
    if (!is_red(c)) deg += 2 * datum_.d(c) * d.dots[b++];
  return deg;
}

// ---------------------------------------------------------------- rewriting

void TildeAlgebra::braid_move(const std::vector<int>& bottom_codes, std::vector<int>& word, size_t off,
                              std::vector<Correction>& out) const {
  const int t = word[off], s = word[off + 1];
  const int a = std::min(s, t);
  std::vector<int> L = bottom_codes;
  for (size_t h = 0; h < off; ++h) std::swap(L[word[h]], L[word[h] + 1]);
  const int x = L[a], y = L[a + 1], z = L[a + 2];
  // psi_a psi_{a+1} psi_a = psi_{a+1} psi_a psi_{a+1} + C
  const int sign = (t == a) ? 1 : -1;
  struct Mono {
    int e1, e2, e3;
    Int c;
  };
  std::vector<Mono> monos;
  if (is_red(x) + is_red(y) + is_red(z) > 1) throw StructuralError("braid move through two red strands");
  if (!is_red(x) && !is_red(y) && !is_red(z)) {
    if (x == z && x != y) {
      // (Q_xy(y3,y2) - Q_xy(y1,y2)) / (y3 - y1)
      for (const auto& [e, c] : Q_.entry(x, y))
        for (int m = 0; m < e.first; ++m) monos.push_back({e.first - 1 - m, e.second, m, c});
    }
  } else if (is_red(y) && x == z) {
    const int lam = lambda_at(y, x);
    for (int m = 0; m < lam; ++m) monos.push_back({lam - 1 - m, 0, m, Int(1)});
  }
  for (const auto& mono : monos) {
    Correction corr{sign * mono.c, {}};
    for (size_t h = 0; h < off; ++h) corr.word.push_back(Event::cross(word[h]));
    for (int r = 0; r < mono.e1; ++r) corr.word.push_back(Event::dot(a));
    for (int r = 0; r < mono.e2; ++r) corr.word.push_back(Event::dot(a + 1));
    for (int r = 0; r < mono.e3; ++r) corr.word.push_back(Event::dot(a + 2));
    for (size_t h = off + 3; h < word.size(); ++h) corr.word.push_back(Event::cross(word[h]));
    out.push_back(std::move(corr));
  }
  word[off] = s;
  word[off + 1] = t;
  word[off + 2] = s;
}

void TildeAlgebra::bring_front(const std::vector<int>& bottom_codes, std::vector<int>& word, size_t off, int s,
                               std::vector<Correction>& out) const {
  if (off >= word.size()) throw std::logic_error("bring_front: letter is not a descent");
  if (word[off] == s) return;
  const int t = word[off];
  if (std::abs(s - t) >= 2) {
    bring_front(bottom_codes, word, off + 1, s, out);
    std::swap(word[off], word[off + 1]);
  } else {
    bring_front(bottom_codes, word, off + 1, s, out);
    bring_front(bottom_codes, word, off + 2, t, out);
    braid_move(bottom_codes, word, off, out);
  }
}

void TildeAlgebra::transform(const std::vector<int>& bottom_codes, std::vector<int>& word,
                             const std::vector<int>& target, std::vector<Correction>& out) const {
  if (word.size() != target.size()) throw std::logic_error("transform: words of different length");
  for (size_t pos = 0; pos < target.size(); ++pos) bring_front(bottom_codes, word, pos, target[pos], out);
}

Element TildeAlgebra::fold(uint32_t bottom, const GenericWord& g) {
  Diagram id;
  id.bottom = bottom;
  const auto& c = codes(bottom);
  id.w.resize(c.size());
  std::iota(id.w.begin(), id.w.end(), 0);
  id.dots.assign(c.size() - ell(), 0);
  Element cur = Element::single(id);
  for (const auto& ev : g) {
    if (cur.is_zero()) break;
    cur = rmul(cur, ev);
  }
  return cur;
}

void TildeAlgebra::add_with_dots(Element& out, const Element& src, const std::vector<uint16_t>& extra,
                                 const Int& c) const {
  for (const auto& [d, v] : src.terms()) {
    Diagram e = d;
    for (size_t b = 0; b < extra.size(); ++b) e.dots[b] = static_cast<uint16_t>(e.dots[b] + extra[b]);
    out.add(e, v * c);
  }
}

const Element& TildeAlgebra::crossprod(uint32_t bottom, const Perm& w, int k) {
  CrossKey key{bottom, w, k};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cross_memo_.find(key);
    if (it != cross_memo_.end()) return it->second;
  }
  Element val = crossprod_compute(bottom, w, k);
  std::lock_guard<std::mutex> lock(mu_);
  return cross_memo_.emplace(std::move(key), std::move(val)).first->second;
}

Element TildeAlgebra::crossprod_compute(uint32_t bottom, const Perm& w, int k) {
  const std::vector<int> bcodes = codes(bottom);
  const int n = static_cast<int>(w.size());
  const int nblack = n - ell();
  std::vector<int> inv(n);
  for (int p = 0; p < n; ++p) inv[w[p]] = p;
  const int p1 = inv[k], p2 = inv[k + 1];
  Perm ws = w;
  ws[p1] = static_cast<uint8_t>(k + 1);
  ws[p2] = static_cast<uint8_t>(k);
  std::vector<int> word = canonical_word(w);
  std::vector<Correction> corr;
  Element out;
  if (p1 < p2) {
    word.push_back(k);
    transform(bcodes, word, canonical_word(ws), corr);
    out.add(Diagram{bottom, ws, std::vector<uint16_t>(nblack, 0)}, 1);
    for (auto& c : corr) out.add_scaled(fold(bottom, c.word), c.coef);
    return out;
  }
  std::vector<int> target = canonical_word(ws);
  target.push_back(k);
  transform(bcodes, word, target, corr);
  for (auto& c : corr) {
    c.word.push_back(Event::cross(k));
    out.add_scaled(fold(bottom, c.word), c.coef);
  }
  // psi_{ws} psi_k psi_k, the double crossing sitting on top(ws)
  Diagram base{bottom, ws, std::vector<uint16_t>(nblack, 0)};
  std::vector<int> t = top_codes(base);
  const int x = t[k], z = t[k + 1];
  if (!is_red(x) && !is_red(z)) {
    if (x != z) {
      const int b = black_index(t, k);
      for (const auto& [e, c] : Q_.entry(x, z)) {
        Diagram d = base;
        d.dots[b] = static_cast<uint16_t>(e.first);
        d.dots[b + 1] = static_cast<uint16_t>(e.second);
        out.add(d, c);
      }
    }
  } else {
    const int bpos = is_red(x) ? k + 1 : k;
    const int red = is_red(x) ? x : z;
    Diagram d = base;
    d.dots[black_index(t, bpos)] = static_cast<uint16_t>(lambda_at(red, t[bpos]));
    out.add(d, 1);
  }
  return out;
}

Element TildeAlgebra::rmul(const Element& a, const Event& ev) {
  Element out;
  for (const auto& [D, c] : a.terms()) {
    std::vector<int> t = top_codes(D);
    const int n = static_cast<int>(t.size());
    if (ev.kind == Event::Dot) {
      if (ev.pos < 0 || ev.pos >= n) throw StructuralError("dot position out of range");
      if (is_red(t[ev.pos])) throw StructuralError("dots only live on black strands");
      Diagram e = D;
      ++e.dots[black_index(t, ev.pos)];
      out.add(e, c);
      continue;
    }
    const int k = ev.pos;
    if (k < 0 || k + 1 >= n) throw StructuralError("crossing out of range");
    if (is_red(t[k]) && is_red(t[k + 1])) throw StructuralError("red strands never cross");
    std::vector<uint16_t> a2 = D.dots;
    if (!is_red(t[k]) && !is_red(t[k + 1])) {
      const int b = black_index(t, k);
      if (t[k] == t[k + 1]) {
        // f psi = psi s(f) + (f - s f)/(y_b - y_{b+1})
        for (const auto& dt : divided_difference(D.dots[b], D.dots[b + 1])) {
          Diagram e = D;
          e.dots[b] = static_cast<uint16_t>(dt.px);
          e.dots[b + 1] = static_cast<uint16_t>(dt.py);
          out.add(e, c * dt.sign);
        }
      }
      std::swap(a2[b], a2[b + 1]);
    }
    const Element& X = crossprod(D.bottom, D.w, k);
    add_with_dots(out, X, a2, c);
  }
  return out;
}

Element TildeAlgebra::straighten_codes(uint32_t bottom, const GenericWord& g) { return fold(bottom, g); }

Element TildeAlgebra::straighten(const GenericWord& g, const Idem& bottom) { return fold(intern(bottom), g); }

GenericWord TildeAlgebra::word_of(const Diagram& d) const {
  GenericWord g;
  for (int k : canonical_word(d.w)) g.push_back(Event::cross(k));
  auto t = top_codes(d);
  int b = 0;
  for (int p = 0; p < static_cast<int>(t.size()); ++p) {
    if (is_red(t[p])) continue;
    for (int r = 0; r < d.dots[b]; ++r) g.push_back(Event::dot(p));
    ++b;
  }
  return g;
}

Element TildeAlgebra::multiply(const Diagram& a, const Diagram& b) {
  if (top(a) != b.bottom) return Element();
  Element cur = Element::single(a);
  for (const auto& ev : word_of(b)) {
    if (cur.is_zero()) break;
    cur = rmul(cur, ev);
  }
  return cur;
}

Element TildeAlgebra::multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [da, ca] : a.terms()) {
    uint32_t ta = top(da);
    for (const auto& [db, cb] : b.terms()) {
      if (db.bottom != ta) continue;
      out.add_scaled(multiply(da, db), ca * cb);
    }
  }
  return out;
}

Element TildeAlgebra::flip(const Element& a) {
  Element out;
  for (const auto& [d, c] : a.terms()) {
    auto t = top_codes(d);
    GenericWord g;
    int b = 0;
    for (int p = 0; p < static_cast<int>(t.size()); ++p) {
      if (is_red(t[p])) continue;
      for (int r = 0; r < d.dots[b]; ++r) g.push_back(Event::dot(p));
      ++b;
    }
    auto word = canonical_word(d.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) g.push_back(Event::cross(*it));
    out.add_scaled(fold(intern_codes(t), g), c);
  }
  return out;
}

// ---------------------------------------------------------------- enumeration

std::vector<Perm> TildeAlgebra::perms_between(const Idem& e, const Idem& f) {
  std::vector<Perm> out;
  if (e.ell() != f.ell() || e.n() != f.n()) return out;
  std::vector<int> B = e.merged(), T = f.merged();
  std::vector<int> sb = B, st = T;
  std::sort(sb.begin(), sb.end());
  std::sort(st.begin(), st.end());
  if (sb != st) return out;
  const int n = static_cast<int>(B.size());
  Perm w(n, 0);
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (int p = 0; p < n; ++p) {
    if (is_red(B[p])) w[p] = static_cast<uint8_t>(std::find(T.begin(), T.end(), B[p]) - T.begin());
    else groups[B[p]].first.push_back(p);
  }
  for (int p = 0; p < n; ++p)
    if (!is_red(T[p])) groups[T[p]].second.push_back(p);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> gs;
  for (auto& [lab, g] : groups) gs.push_back(g);
  auto rec = [&](auto&& self, size_t gi) -> void {
    if (gi == gs.size()) {
      out.push_back(w);
      return;
    }
    std::vector<int> tops = gs[gi].second;
    std::sort(tops.begin(), tops.end());
    do {
      for (size_t r = 0; r < tops.size(); ++r) w[gs[gi].first[r]] = static_cast<uint8_t>(tops[r]);
      self(self, gi + 1);
    } while (std::next_permutation(tops.begin(), tops.end()));
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int TildeAlgebra::min_degree(const Idem& e, const Idem& f) {
  auto perms = perms_between(e, f);
  if (perms.empty()) throw std::invalid_argument("min_degree: no diagrams between these idempotents");
  auto B = e.merged();
  int best = perm_degree(B, perms[0]);
  for (const auto& w : perms) best = std::min(best, perm_degree(B, w));
  return best;
}

std::vector<Diagram> TildeAlgebra::basis_enumerate(const Idem& e, const Idem& f, int dlo, int dhi) {
  std::vector<Diagram> out;
  auto perms = perms_between(e, f);
  if (perms.empty()) return out;
  const uint32_t bid = intern(e);
  const auto B = e.merged();
  std::vector<int> weights;  // degree of one dot on each black strand at the top
  for (int c : f.merged())
    if (!is_red(c)) weights.push_back(2 * datum_.d(c));
  const int nb = static_cast<int>(weights.size());
  for (const auto& w : perms) {
    const int base = perm_degree(B, w);
    if (base > dhi) continue;
    std::vector<uint16_t> a(nb, 0);
    auto rec = [&](auto&& self, int b, int deg) -> void {
      if (b == nb) {
        if (deg >= dlo) out.push_back(Diagram{bid, w, a});
        return;
      }
      for (int x = 0; deg + x * weights[b] <= dhi; ++x) {
        a[b] = static_cast<uint16_t>(x);
        self(self, b + 1, deg + x * weights[b]);
      }
      a[b] = 0;
    };
    rec(rec, 0, base);
  }
  return out;
}

// ---------------------------------------------------------------- polynomial representation

Poly TildeAlgebra::poly_rep_word(uint32_t bottom, const GenericWord& g, const Poly& f) {
  std::vector<std::vector<int>> heights;
  heights.push_back(codes(bottom));
  for (const auto& ev : g) {
    auto L = heights.back();
    if (ev.kind == Event::Cross) {
      if (ev.pos < 0 || ev.pos + 1 >= static_cast<int>(L.size())) throw StructuralError("crossing out of range");
      std::swap(L[ev.pos], L[ev.pos + 1]);
    }
    heights.push_back(std::move(L));
  }
  const int nv = f.nvars();
  Poly cur = f;
  for (size_t h = g.size(); h-- > 0;) {
    const auto& L = heights[h];
    const Event& ev = g[h];
    if (ev.kind == Event::Dot) {
      cur = cur * Poly::variable(nv, black_index(L, ev.pos));
      continue;
    }
    const int k = ev.pos;
    const int x = L[k], z = L[k + 1];
    if (is_red(x) && is_red(z)) throw StructuralError("red strands never cross");
    const int b = black_index(L, k);
    if (!is_red(x) && !is_red(z)) {
      if (x == z) {
        cur = cur.demazure(b);
      } else if (x < z) {
        cur = cur.swapped(b);
      } else {
        Poly q(nv);
        for (const auto& [e, c] : Q_.entry(x, z)) {
          Monomial m(nv, 0);
          m[b] = e.first;
          m[b + 1] = e.second;
          q.add_term(m, c);
        }
        cur = q * cur.swapped(b);
      }
    } else if (!is_red(x)) {
      // black moves right going up
      cur = cur * Poly::variable(nv, b, lambda_at(z, x));
    }
  }
  return cur;
}

Poly TildeAlgebra::poly_rep_apply(const Element& a, uint32_t top_id, const Poly& f) {
  const int nblack = static_cast<int>(codes(top_id).size()) - ell();
  if (f.nvars() != nblack) throw std::invalid_argument("polynomial has the wrong number of variables");
  Poly out(nblack);
  for (const auto& [d, c] : a.terms()) {
    if (top(d) != top_id) continue;
    Poly p = poly_rep_word(d.bottom, word_of(d), f);
    p *= c;
    out += p;
  }
  return out;
}

// ---------------------------------------------------------------- text

std::string TildeAlgebra::to_text(const Diagram& d) const {
  std::ostringstream os;
  os << idem(d.bottom).to_string(datum_) << " ;";
  for (int k : canonical_word(d.w)) os << " s" << (k + 1);
  os << " ;";
  for (size_t b = 0; b < d.dots.size(); ++b) {
    if (d.dots[b] == 0) continue;
    os << " y" << (b + 1);
    if (d.dots[b] != 1) os << "^" << d.dots[b];
  }
  return os.str();
}

Diagram TildeAlgebra::parse_text(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (parts.empty() || parts.size() > 3) throw StructuralError("diagram text must be 'e[...] ; word ; dots'");
  Idem e = Idem::parse(datum_, parts[0]);
  Diagram d = identity(e);
  std::vector<int> word;
  if (parts.size() > 1) {
    std::stringstream ws(parts[1]);
    std::string tok;
    while (ws >> tok) {
      if (tok.size() < 2 || tok[0] != 's') throw StructuralError("bad crossing token " + tok);
      word.push_back(std::stoi(tok.substr(1)) - 1);
    }
  }
  d.w = perm_of_word(static_cast<int>(d.w.size()), word);
  if (canonical_word(d.w) != word) throw StructuralError("crossing word is not the canonical reduced word");
  if (parts.size() > 2) {
    std::stringstream ds(parts[2]);
    std::string tok;
    while (ds >> tok) {
      if (tok.size() < 2 || tok[0] != 'y') throw StructuralError("bad dot token " + tok);
      auto caret = tok.find('^');
      int b = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1)) - 1;
      int x = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      if (b < 0 || b >= static_cast<int>(d.dots.size()) || x < 0) throw StructuralError("dot out of range: " + tok);
      d.dots[b] = static_cast<uint16_t>(d.dots[b] + x);
    }
  }
  // every red pair must keep its order
  const auto& B = codes(d.bottom);
  for (size_t a = 0; a < B.size(); ++a)
    for (size_t c = a + 1; c < B.size(); ++c)
      if (is_red(B[a]) && is_red(B[c]) && d.w[a] > d.w[c]) throw StructuralError("red strands never cross");
  return d;
}

std::string TildeAlgebra::element_to_json(const Element& a) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [d, c] : a.sorted()) j.push_back({{"diagram", to_text(d)}, {"coeff", c.get_str()}});
  return j.dump();
}

Element TildeAlgebra::element_from_json(const std::string& text) {
  Element out;
  for (const auto& t : nlohmann::json::parse(text))
    out.add(parse_text(t.at("diagram").get<std::string>()), Int(t.at("coeff").get<std::string>()));
  return out;
}

}  // namespace tpa
