#include "tpa/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tpa {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exp, const Int& coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quo;
  const int bmax = b.max_exp();
  const Int& blead = b.terms_.rbegin()->second;
  // Long division from the top; the remainder must vanish before its degree
  // span drops below that of b.
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < bmax - b.min_exp())
      throw std::domain_error("Laurent polynomial division is not exact");
    const Int& rlead = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(rlead.get_mpz_t(), blead.get_mpz_t()))
      throw std::domain_error("Laurent polynomial division is not exact");
    Int c = rlead / blead;
    int e = rem.max_exp() - bmax;
    quo.add_term(e, c);
    for (const auto& [eb, cb] : b.terms_) rem.add_term(eb + e, -c * cb);
  }
  return quo;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Int LaurentPoly::eval_at_1() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class p = 1;
    mpq_class base = e >= 0 ? x : mpq_class(1) / x;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
    s += p * mpq_class(c);
  }
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

struct TermParser {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad Laurent polynomial '" + s + "': " + what);
  }
  int read_int() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected integer exponent");
    int v = std::stoi(s.substr(start, i - start));
    return neg ? -v : v;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  TermParser p{text};
  LaurentPoly r;
  if (p.done()) p.fail("empty");
  bool first = true;
  while (!p.done()) {
    int sign = 1;
    p.skip();
    if (text[p.i] == '+' || text[p.i] == '-') {
      sign = text[p.i] == '-' ? -1 : 1;
      ++p.i;
    } else if (!first) {
      p.fail("expected + or -");
    }
    first = false;
    p.skip();
    Int coeff = 1;
    bool have_coeff = false;
    size_t start = p.i;
    while (p.i < text.size() && std::isdigit(static_cast<unsigned char>(text[p.i]))) ++p.i;
    if (p.i > start) {
      coeff = Int(text.substr(start, p.i - start));
      have_coeff = true;
    }
    p.skip();
    if (p.i < text.size() && text[p.i] == '*') {
      if (!have_coeff) p.fail("dangling '*'");
      ++p.i;
      p.skip();
    }
    int exp = 0;
    if (p.i < text.size() && text[p.i] == 'q') {
      ++p.i;
      exp = 1;
      p.skip();
      if (p.i < text.size() && text[p.i] == '^') {
        ++p.i;
        exp = p.read_int();
      }
    } else if (!have_coeff) {
      p.fail("expected coefficient or q");
    }
    r.add_term(exp, sign * coeff);
  }
  return r;
}

LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }
Int eval_at_1(const LaurentPoly& a) { return a.eval_at_1(); }

LaurentPoly qint(int n, int d) {
  if (n < 0) throw std::invalid_argument("qint: n must be non-negative");
  if (d <= 0) throw std::invalid_argument("qint: d must be positive");
  LaurentPoly r;
  for (int k = 0; k < n; ++k) r.add_term(d * (n - 1 - 2 * k), 1);
  return r;
}

LaurentPoly qint_signed(int n, int d) { return n >= 0 ? qint(n, d) : -qint(-n, d); }

}  // namespace tpa
