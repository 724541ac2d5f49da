#include "tpa/sequence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tpa {

void Idem::validate() const {
  for (int j = 0; j < ell(); ++j) {
    if (kappa[j] < 0 || kappa[j] > n()) throw std::invalid_argument("kappa value out of range");
    if (j > 0 && kappa[j] < kappa[j - 1]) throw std::invalid_argument("kappa is not weakly increasing");
  }
}

RootVector Idem::content(int rank) const {
  RootVector a{std::vector<int>(rank, 0)};
  for (int i : I) a.coords.at(i) += 1;
  return a;
}

std::vector<int> Idem::merged() const {
  std::vector<int> out;
  out.reserve(I.size() + kappa.size());
  int j = 0;
  for (int k = 0; k <= n(); ++k) {
    while (j < ell() && kappa[j] == k) out.push_back(red_code(j++));
    if (k < n()) out.push_back(I[k]);
  }
  return out;
}

Idem Idem::from_merged(const std::vector<int>& codes) {
  Idem e;
  int expected = 0;
  for (int c : codes) {
    if (is_red(c)) {
      if (red_index(c) != expected++) throw std::invalid_argument("red strands out of order");
      e.kappa.push_back(e.n());
    } else {
      e.I.push_back(c);
    }
  }
  return e;
}

std::string Idem::to_string(const CartanDatum& datum) const {
  std::ostringstream os;
  os << "e[";
  for (int k = 0; k < n(); ++k) os << (k ? "," : "") << datum.nodes().at(I[k]);
  os << "|R@";
  for (int j = 0; j < ell(); ++j) os << (j ? "," : "") << kappa[j];
  os << "]";
  return os.str();
}

namespace {
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, sep)) {
    x.erase(0, x.find_first_not_of(" \t"));
    x.erase(x.find_last_not_of(" \t") + 1);
    out.push_back(x);
  }
  return out;
}
}  // namespace

Idem Idem::parse(const CartanDatum& datum, const std::string& text) {
  auto open = text.find("e[");
  auto bar = text.find("|R@");
  auto close = text.rfind(']');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos || bar > close)
    throw std::invalid_argument("idempotent must look like e[1,2|R@0,2]: " + text);
  Idem e;
  for (const auto& lab : split(text.substr(open + 2, bar - open - 2), ',')) e.I.push_back(datum.node_index(lab));
  for (const auto& k : split(text.substr(bar + 3, close - bar - 3), ',')) e.kappa.push_back(std::stoi(k));
  e.validate();
  return e;
}

std::vector<std::vector<int>> sequences_with_content(const RootVector& content) {
  std::vector<int> seq;
  for (size_t i = 0; i < content.coords.size(); ++i) {
    if (content.coords[i] < 0) return {};
    seq.insert(seq.end(), content.coords[i], static_cast<int>(i));
  }
  std::vector<std::vector<int>> out;
  do out.push_back(seq);
  while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::vector<std::vector<int>> all_kappas(int n, int ell, bool nonviolating_only) {
  std::vector<std::vector<int>> out;
  if (ell == 0 && n > 0 && nonviolating_only) return out;
  std::vector<int> k(ell, 0);
  auto rec = [&](auto&& self, int j, int lo) -> void {
    if (j == ell) {
      out.push_back(k);
      return;
    }
    int hi = (j == 0 && nonviolating_only) ? 0 : n;
    for (int v = lo; v <= hi; ++v) {
      k[j] = v;
      self(self, j + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Idem> idempotents_with_content(const RootVector& content, int ell, bool nonviolating_only) {
  std::vector<Idem> out;
  for (const auto& I : sequences_with_content(content))
    for (const auto& k : all_kappas(static_cast<int>(I.size()), ell, nonviolating_only)) out.push_back(Idem{I, k});
  return out;
}

}  // namespace tpa
