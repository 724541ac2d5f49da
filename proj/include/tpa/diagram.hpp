#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "tpa/cartan.hpp"
#include "tpa/poly.hpp"
#include "tpa/sequence.hpp"

namespace tpa {

/// w[p] = top position of the strand whose bottom end is at merged position p.
using Perm = std::vector<uint8_t>;

/// Normal-form basis diagram e(bottom) psi_w y^a, dots indexed by black
/// strand at the top boundary.
struct Diagram {
  uint32_t bottom = 0;
  Perm w;
  std::vector<uint16_t> dots;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.bottom == b.bottom && a.w == b.w && a.dots == b.dots;
  }
  friend bool operator<(const Diagram& a, const Diagram& b) {
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    if (a.w != b.w) return a.w < b.w;
    return a.dots < b.dots;
  }
};

struct DiagramHash {
  size_t operator()(const Diagram& d) const noexcept {
    uint64_t h = 1469598103934665603ull ^ d.bottom;
    for (uint8_t x : d.w) h = (h ^ x) * 1099511628211ull;
    for (uint16_t x : d.dots) h = (h ^ (x + 0x9e37u)) * 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

/// Finite integer combination of basis diagrams.
class Element {
 public:
  using Map = std::unordered_map<Diagram, Int, DiagramHash>;

  Element() = default;
  static Element single(const Diagram& d, const Int& c = 1);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  void add(const Diagram& d, const Int& c);
  void add_scaled(const Element& o, const Int& c);
  Element& operator+=(const Element& o) {
    add_scaled(o, 1);
    return *this;
  }
  Element& operator-=(const Element& o) {
    add_scaled(o, -1);
    return *this;
  }
  Int coeff(const Diagram& d) const;
  /// Terms in a deterministic order.
  std::vector<std::pair<Diagram, Int>> sorted() const;
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  Map terms_;
};

/// Elementary event of a generic word, read bottom to top.
struct Event {
  enum Kind : uint8_t { Cross, Dot } kind;
  int pos;  // Cross: swaps merged positions pos, pos+1.  Dot: merged position.
  static Event cross(int k) { return {Cross, k}; }
  static Event dot(int p) { return {Dot, p}; }
};
using GenericWord = std::vector<Event>;

struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The algebra with black strands labelled by nodes and red strands labelled
/// by the weights lambda_1..lambda_ell, before killing violating diagrams.
class TildeAlgebra {
 public:
  TildeAlgebra(CartanDatum datum, QMatrix Q, std::vector<Weight> lambdas);

  const CartanDatum& datum() const { return datum_; }
  const QMatrix& Q() const { return Q_; }
  const std::vector<Weight>& lambdas() const { return lambdas_; }
  int ell() const { return static_cast<int>(lambdas_.size()); }

  uint32_t intern(const Idem& e);
  uint32_t intern_codes(const std::vector<int>& codes);
  const std::vector<int>& codes(uint32_t id) const;
  Idem idem(uint32_t id) const { return Idem::from_merged(codes(id)); }

  std::vector<int> top_codes(const Diagram& d) const;
  uint32_t top(const Diagram& d);
  Diagram identity(const Idem& e);
  Element idempotent(const Idem& e) { return Element::single(identity(e)); }

  /// Reduced word chosen by moving the strand bound for top position 0 to
  /// the far left first, then recursing on the remaining positions.
  static std::vector<int> canonical_word(const Perm& w);
  static Perm perm_of_word(int size, const std::vector<int>& word);
  static int length(const Perm& w);

  int crossing_degree(int code_a, int code_b) const;
  int perm_degree(const std::vector<int>& bottom_codes, const Perm& w) const;
  int degree(const Diagram& d) const;

  /// Normal form of a generic word over the given bottom idempotent.
  Element straighten(const GenericWord& g, const Idem& bottom);
  Element straighten_codes(uint32_t bottom, const GenericWord& g);
  Element multiply(const Element& a, const Element& b);
  Element multiply(const Diagram& a, const Diagram& b);
  /// Right multiplication by one event.
  Element rmul(const Element& a, const Event& ev);
  Element flip(const Element& a);
  /// Generic word for a basis diagram: canonical crossings then top dots.
  GenericWord word_of(const Diagram& d) const;

  /// Every basis diagram from bottom e to top f with degree in [dlo, dhi].
  std::vector<Diagram> basis_enumerate(const Idem& e, const Idem& f, int dlo, int dhi);
  /// Permutations from e to f (red order preserved, labels matching).
  std::vector<Perm> perms_between(const Idem& e, const Idem& f);
  int min_degree(const Idem& e, const Idem& f);

  /// Polynomial representation: f lives on the top idempotent of the
  /// diagrams; returns the polynomial on the bottom idempotent.
  Poly poly_rep_apply(const Element& a, uint32_t top_id, const Poly& f);
  Poly poly_rep_word(uint32_t bottom, const GenericWord& g, const Poly& f);

  std::string to_text(const Diagram& d) const;
  Diagram parse_text(const std::string& text);
  std::string element_to_json(const Element& a) const;
  Element element_from_json(const std::string& text);

  size_t memo_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cross_memo_.size();
  }

 private:
  struct Correction {
    Int coef;
    GenericWord word;
  };
  struct CrossKey {
    uint32_t bottom;
    Perm w;
    int k;
    friend bool operator==(const CrossKey& a, const CrossKey& b) {
      return a.bottom == b.bottom && a.k == b.k && a.w == b.w;
    }
  };
  struct CrossKeyHash {
    size_t operator()(const CrossKey& c) const noexcept {
      return DiagramHash()(Diagram{c.bottom, c.w, {}}) * 31u + static_cast<size_t>(c.k);
    }
  };

  const Element& crossprod(uint32_t bottom, const Perm& w, int k);
  Element crossprod_compute(uint32_t bottom, const Perm& w, int k);
  void transform(const std::vector<int>& bottom_codes, std::vector<int>& word, const std::vector<int>& target,
                 std::vector<Correction>& out) const;
  void bring_front(const std::vector<int>& bottom_codes, std::vector<int>& word, size_t off, int s,
                   std::vector<Correction>& out) const;
  void braid_move(const std::vector<int>& bottom_codes, std::vector<int>& word, size_t off,
                  std::vector<Correction>& out) const;
  int black_index(const std::vector<int>& codes, int pos) const;
  int lambda_at(int red_code, int label) const;
  Element fold(uint32_t bottom, const GenericWord& g);
  void add_with_dots(Element& out, const Element& src, const std::vector<uint16_t>& extra, const Int& c) const;

  CartanDatum datum_;
  QMatrix Q_;
  std::vector<Weight> lambdas_;

  mutable std::mutex mu_;
  std::map<std::vector<int>, uint32_t> idem_ids_;
  std::deque<std::vector<int>> idem_codes_;  // stable references
  std::unordered_map<CrossKey, Element, CrossKeyHash> cross_memo_;
};

/// Bruhat order on permutations of {0..n-1} (tableau criterion).
bool bruhat_leq(const Perm& u, const Perm& v);
/// Demazure (0-Hecke) product of a word.
Perm demazure_product(int size, const std::vector<int>& word);

}  // namespace tpa
