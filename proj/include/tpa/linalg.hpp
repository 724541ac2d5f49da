#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tpa/laurent.hpp"

namespace tpa {

/// Coefficient field for linear algebra: the rationals, or F_p when p != 0.
struct FieldSpec {
  uint64_t p = 0;
  bool is_prime() const { return p != 0; }
  /// "q" or "p:PRIME".
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;
};

struct QField {
  using S = mpq_class;
  S zero() const { return 0; }
  S one() const { return 1; }
  S from(const Int& x) const { return S(x); }
  bool is_zero(const S& x) const { return x == 0; }
  S add(const S& a, const S& b) const { return a + b; }
  S sub(const S& a, const S& b) const { return a - b; }
  S mul(const S& a, const S& b) const { return a * b; }
  S neg(const S& a) const { return -a; }
  S inv(const S& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
};

struct PField {
  using S = uint64_t;
  uint64_t p;
  explicit PField(uint64_t prime) : p(prime) {}
  S zero() const { return 0; }
  S one() const { return 1; }
  S from(const Int& x) const { return mpz_fdiv_ui(x.get_mpz_t(), p); }
  S from(long long x) const { return static_cast<S>(((x % static_cast<long long>(p)) + p) % p); }
  bool is_zero(S x) const { return x == 0; }
  S add(S a, S b) const { return (a + b) % p; }
  S sub(S a, S b) const { return (a + p - b) % p; }
  S mul(S a, S b) const { return static_cast<S>((unsigned __int128)a * b % p); }
  S neg(S a) const { return a == 0 ? 0 : p - a; }
  S inv(S a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    S r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

bool is_probable_prime(uint64_t n);

/// Span of sparse rows kept in semi-echelon form: every stored row has
/// leading coefficient 1 at a distinct pivot column.
template <class F>
class RowSpace {
 public:
  using S = typename F::S;
  using Row = std::vector<std::pair<int, S>>;  // increasing columns, no zeros

  RowSpace(F f, int ncols) : f_(std::move(f)), ncols_(ncols), acc_(ncols, f_.zero()), used_(ncols, 0) {}

  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }
  const F& field() const { return f_; }

  /// Remainder of v after clearing every pivot column; zero iff v is in the span.
  Row reduce(const Row& v) const {
    load(v);
    for (auto& [col, row] : pivots_) {
      if (f_.is_zero(acc_[col])) continue;
      S c = acc_[col];
      for (const auto& [j, x] : row) {
        acc_[j] = f_.sub(acc_[j], f_.mul(c, x));
        used_[j] = 1;
      }
    }
    return unload();
  }

  bool contains(const Row& v) const { return reduce(v).empty(); }

  /// Coefficients of v on the stored rows, keyed by pivot column, with the
  /// remainder in *rest.
  Row coefficients(const Row& v, Row* rest = nullptr) const {
    load(v);
    Row coef;
    for (auto& [col, row] : pivots_) {
      if (f_.is_zero(acc_[col])) continue;
      S c = acc_[col];
      coef.emplace_back(col, c);
      for (const auto& [j, x] : row) {
        acc_[j] = f_.sub(acc_[j], f_.mul(c, x));
        used_[j] = 1;
      }
    }
    Row r = unload();
    if (rest) *rest = std::move(r);
    return coef;
  }

  /// Adds v to the span; returns false if it was already there.
  bool insert(const Row& v) {
    Row r = reduce(v);
    if (r.empty()) return false;
    S inv = f_.inv(r.front().second);
    for (auto& e : r) e.second = f_.mul(e.second, inv);
    int col = r.front().first;
    pivots_.emplace(col, std::move(r));
    return true;
  }

  const std::map<int, Row>& pivots() const { return pivots_; }

 private:
  void load(const Row& v) const {
    for (const auto& [j, x] : v) {
      if (j < 0 || j >= ncols_) throw std::out_of_range("row column out of range");
      acc_[j] = f_.add(acc_[j], x);
      used_[j] = 1;
    }
  }
  Row unload() const {
    Row out;
    for (int j = 0; j < ncols_; ++j) {
      if (!used_[j]) continue;
      used_[j] = 0;
      if (!f_.is_zero(acc_[j])) out.emplace_back(j, acc_[j]);
      acc_[j] = f_.zero();
    }
    return out;
  }

  F f_;
  int ncols_;
  std::map<int, Row> pivots_;
  mutable std::vector<S> acc_;
  mutable std::vector<char> used_;
};

/// Dense matrix over a field, row-major.
template <class F>
struct Matrix {
  using S = typename F::S;
  F f;
  int rows = 0, cols = 0;
  std::vector<S> a;

  Matrix(F field, int r, int c) : f(std::move(field)), rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}
  S& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const S& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (!f.is_zero(at(i, c))) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      for (int j = 0; j < cols; ++j) std::swap(at(r, j), at(sel, j));
      S inv = f.inv(at(r, c));
      for (int j = c; j < cols; ++j) at(r, j) = f.mul(at(r, j), inv);
      for (int i = 0; i < rows; ++i) {
        if (i == r || f.is_zero(at(i, c))) continue;
        S m = at(i, c);
        for (int j = c; j < cols; ++j) at(i, j) = f.sub(at(i, j), f.mul(m, at(r, j)));
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  /// Basis of {x : A x = 0}.
  std::vector<std::vector<S>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<S>> out;
    for (int fc = 0; fc < cols; ++fc) {
      if (is_piv[fc]) continue;
      std::vector<S> x(cols, f.zero());
      x[fc] = f.one();
      for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = f.neg(m.at(static_cast<int>(r), fc));
      out.push_back(std::move(x));
    }
    return out;
  }

  Matrix mul(const Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shapes do not match");
    Matrix out(f, rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        if (f.is_zero(at(i, k))) continue;
        for (int j = 0; j < o.cols; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(at(i, k), o.at(k, j)));
      }
    return out;
  }

  /// Determinant by elimination.
  S det() const {
    if (rows != cols) throw std::invalid_argument("determinant of a non-square matrix");
    Matrix m = *this;
    S d = f.one();
    for (int c = 0; c < cols; ++c) {
      int sel = -1;
      for (int i = c; i < rows; ++i)
        if (!f.is_zero(m.at(i, c))) {
          sel = i;
          break;
        }
      if (sel < 0) return f.zero();
      if (sel != c) {
        for (int j = 0; j < cols; ++j) std::swap(m.at(c, j), m.at(sel, j));
        d = f.neg(d);
      }
      d = f.mul(d, m.at(c, c));
      S inv = f.inv(m.at(c, c));
      for (int i = c + 1; i < rows; ++i) {
        if (f.is_zero(m.at(i, c))) continue;
        S k = f.mul(m.at(i, c), inv);
        for (int j = c; j < cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(k, m.at(c, j)));
      }
    }
    return d;
  }
};

}  // namespace tpa
