#include "tpa/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tpa {

Poly Poly::constant(int nvars, const Int& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int k, int power) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m.at(k) = power;
  p.add_term(m, 1);
  return p;
}

int Poly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int e : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

void Poly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::times_monomial(const Monomial& x) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    for (int k = 0; k < nvars_; ++k) n[k] += x[k];
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

Poly Poly::swapped(int k) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    std::swap(n.at(k), n.at(k + 1));
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

std::vector<DividedTerm> divided_difference(int p, int r) {
  std::vector<DividedTerm> out;
  if (p == r) return out;
  int m = std::min(p, r);
  int t = p > r ? p - r : r - p;
  int sign = p > r ? 1 : -1;
  for (int u = 0; u < t; ++u) out.push_back({m + u, m + t - 1 - u, sign});
  return out;
}

Poly Poly::demazure(int k) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    for (const auto& t : divided_difference(m[k], m[k + 1])) {
      Monomial n = m;
      n[k] = t.px;
      n[k + 1] = t.py;
      r.add_term(n, t.sign * c);
    }
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int mag = abs(c);
    bool any = false;
    for (int k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (any) os << "*";
      else if (mag != 1) os << mag.get_str() << "*";
      any = true;
      os << "y" << (k + 1);
      if (m[k] != 1) os << "^" << m[k];
    }
    if (!any) os << mag.get_str();
  }
  return os.str();
}

}  // namespace tpa
