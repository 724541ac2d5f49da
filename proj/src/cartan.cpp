#include "tpa/cartan.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace tpa {

using nlohmann::json;

bool Weight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

bool RootVector::positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

CartanDatum::CartanDatum(std::vector<std::string> nodes, std::vector<std::vector<int>> cartan,
                         std::vector<int> sym)
    : nodes_(std::move(nodes)), cartan_(std::move(cartan)), sym_(std::move(sym)) {
  const size_t n = nodes_.size();
  if (cartan_.size() != n || sym_.size() != n) throw ConfigError("cartan datum: size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (cartan_[i].size() != n) throw ConfigError("cartan datum: matrix is not square");
    if (sym_[i] <= 0) throw ConfigError("cartan datum: symmetrizers must be positive");
    for (size_t j = i + 1; j < n; ++j)
      if (nodes_[i] == nodes_[j]) throw ConfigError("cartan datum: duplicate node " + nodes_[i]);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int cij = cartan_[i][j], cji = cartan_[j][i];
      if (i == j && cij != 2) throw ConfigError("cartan datum: diagonal entries must be 2");
      if (i != j && cij > 0) throw ConfigError("cartan datum: off-diagonal entries must be <= 0");
      if ((cij == 0) != (cji == 0)) throw ConfigError("cartan datum: c_ij = 0 iff c_ji = 0 violated");
      if (sym_[i] * cji != sym_[j] * cij)
        throw ConfigError("cartan datum: d_i c_ji = d_j c_ij violated at (" + nodes_[i] + "," + nodes_[j] + ")");
    }
}

CartanDatum CartanDatum::preset(const std::string& name) {
  auto type_a = [](int n) {
    std::vector<std::string> nodes;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      nodes.push_back(std::to_string(i + 1));
      c[i][i] = 2;
      if (i > 0) c[i][i - 1] = c[i - 1][i] = -1;
    }
    return CartanDatum(nodes, c, std::vector<int>(n, 1));
  };
  if (name == "sl2") return type_a(1);
  if (name == "sl3") return type_a(2);
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'a') && name.find('x') == std::string::npos) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw ConfigError("unknown preset " + name);
    }
    if (n < 1) throw ConfigError("unknown preset " + name);
    return type_a(n);
  }
  if (name == "A1xA1") return CartanDatum({"1", "2"}, {{2, 0}, {0, 2}}, {1, 1});
  // alpha_1 long, alpha_2 short
  if (name == "B2") return CartanDatum({"1", "2"}, {{2, -2}, {-1, 2}}, {2, 1});
  throw ConfigError("unknown preset " + name);
}

int CartanDatum::node_index(const std::string& name) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end()) throw ConfigError("unknown node " + name);
  return static_cast<int>(it - nodes_.begin());
}

void CartanDatum::check(const Weight& w) const {
  if (static_cast<int>(w.coords.size()) != rank()) throw DatumMismatch("weight has wrong rank");
}

void CartanDatum::check(const RootVector& a) const {
  if (static_cast<int>(a.coords.size()) != rank()) throw DatumMismatch("root vector has wrong rank");
}

int CartanDatum::pairing(const RootVector& a, const RootVector& b) const {
  check(a);
  check(b);
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a.coords[i] * b.coords[j] * root_pairing(i, j);
  return s;
}

int CartanDatum::pairing(const RootVector& a, const Weight& w) const {
  check(a);
  check(w);
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += a.coords[i] * sym_[i] * w.coords[i];
  return s;
}

Weight CartanDatum::root_to_weight(const RootVector& a) const {
  check(a);
  Weight w = zero_weight();
  for (int i = 0; i < rank(); ++i)
    for (int m = 0; m < rank(); ++m) w.coords[m] += a.coords[i] * cartan_[i][m];
  return w;
}

Weight CartanDatum::simple_root_weight(int i) const {
  RootVector a = zero_root();
  a.coords.at(i) = 1;
  return root_to_weight(a);
}

Weight CartanDatum::fundamental(int i) const {
  Weight w = zero_weight();
  w.coords.at(i) = 1;
  return w;
}

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(const CartanDatum& datum, std::map<std::pair<int, int>, BiPoly> entries)
    : n_(datum.rank()), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    for (auto t = it->second.begin(); t != it->second.end();)
      t = t->second == 0 ? it->second.erase(t) : std::next(t);
    ++it;
  }
  validate(datum);
}

QMatrix QMatrix::default_for(const CartanDatum& datum) {
  std::map<std::pair<int, int>, BiPoly> e;
  for (int i = 0; i < datum.rank(); ++i)
    for (int j = 0; j < datum.rank(); ++j) {
      if (i == j) continue;
      BiPoly p;
      p[{-datum.c(j, i), 0}] += 1;
      p[{0, -datum.c(i, j)}] += 1;
      e[{i, j}] = p;
    }
  return QMatrix(datum, std::move(e));
}

QMatrix default_Q(const CartanDatum& datum) { return QMatrix::default_for(datum); }

const BiPoly& QMatrix::entry(int i, int j) const {
  if (i == j) return zero_;
  auto it = entries_.find({i, j});
  if (it == entries_.end()) throw ConfigError("Q matrix entry missing");
  return it->second;
}

Int QMatrix::t(int i, int j) const {
  if (i == j) return 1;
  Int s = 0;
  for (const auto& [e, c] : entry(i, j))
    if (e.second == 0) s += c;
  return s;
}

void QMatrix::validate(const CartanDatum& datum) const {
  if (n_ != datum.rank()) throw DatumMismatch("Q matrix rank differs from datum");
  for (const auto& [ij, p] : entries_) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ConfigError("Q matrix index out of range");
    if (i == j && !p.empty()) throw ConfigError("Q_ii must be zero");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      const BiPoly& p = entry(i, j);
      const BiPoly& pt = entry(j, i);
      const std::string where = "(" + datum.nodes()[i] + "," + datum.nodes()[j] + ")";
      for (const auto& [e, c] : p) {
        auto it = pt.find({e.second, e.first});
        if (it == pt.end() || it->second != c) throw ConfigError("Q_ij(u,v) != Q_ji(v,u) at " + where);
        int deg = 2 * datum.d(i) * e.first + 2 * datum.d(j) * e.second;
        if (deg != -2 * datum.d(j) * datum.c(i, j)) throw ConfigError("Q_ij not homogeneous of the right degree at " + where);
        if (e.first > -datum.c(j, i)) throw ConfigError("Q_ij has u-degree above -c_ji at " + where);
        if (e.first < 0 || e.second < 0) throw ConfigError("Q_ij has negative exponent at " + where);
      }
      if (p.size() != pt.size()) throw ConfigError("Q_ij(u,v) != Q_ji(v,u) at " + where);
      if (t(i, j) == 0) throw ConfigError("t_ij = Q_ij(1,0) vanishes at " + where);
    }
}

// ---------------------------------------------------------------- JSON

LoadedDatum load_datum_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("datum JSON: ") + e.what());
  }
  try {
    std::vector<std::string> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back(n.is_string() ? n.get<std::string>() : n.dump());
    auto cartan = j.at("cartan").get<std::vector<std::vector<int>>>();
    std::vector<int> d = j.contains("d") ? j.at("d").get<std::vector<int>>() : std::vector<int>(nodes.size(), 1);
    CartanDatum datum(nodes, cartan, d);
    if (!j.contains("Q")) return {datum, QMatrix::default_for(datum)};
    std::map<std::pair<int, int>, BiPoly> e;
    for (const auto& [key, terms] : j.at("Q").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) throw ConfigError("Q key must be \"i,j\": " + key);
      int a = datum.node_index(key.substr(0, comma));
      int b = datum.node_index(key.substr(comma + 1));
      BiPoly p;
      for (const auto& t : terms) {
        auto v = t.get<std::vector<long>>();
        if (v.size() != 3) throw ConfigError("Q term must be [coeff,uexp,vexp]");
        p[{static_cast<int>(v[1]), static_cast<int>(v[2])}] += Int(v[0]);
      }
      e[{a, b}] = p;
    }
    return {datum, QMatrix(datum, std::move(e))};
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("datum JSON: ") + ex.what());
  }
}

std::string datum_to_json(const CartanDatum& datum, const QMatrix& Q) {
  json j;
  j["nodes"] = datum.nodes();
  j["cartan"] = datum.cartan();
  j["d"] = datum.sym();
  json q = json::object();
  for (int a = 0; a < datum.rank(); ++a)
    for (int b = 0; b < datum.rank(); ++b) {
      if (a == b) continue;
      json terms = json::array();
      for (const auto& [e, c] : Q.entry(a, b)) terms.push_back({c.get_si(), e.first, e.second});
      q[datum.nodes()[a] + "," + datum.nodes()[b]] = terms;
    }
  j["Q"] = q;
  return j.dump();
}

std::vector<Weight> parse_lambda(const CartanDatum& datum, const std::string& text) {
  std::vector<Weight> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    Weight w;
    std::stringstream ps(part);
    std::string x;
    while (std::getline(ps, x, ',')) {
      try {
        size_t used = 0;
        w.coords.push_back(std::stoi(x, &used));
        while (used < x.size() && std::isspace(static_cast<unsigned char>(x[used]))) ++used;
        if (used != x.size()) throw ConfigError("bad lambda entry '" + x + "'");
      } catch (const std::logic_error&) {
        throw ConfigError("bad lambda entry '" + x + "'");
      }
    }
    if (static_cast<int>(w.coords.size()) != datum.rank())
      throw ConfigError("lambda '" + part + "' does not match the datum rank");
    if (!w.dominant()) throw ConfigError("lambda '" + part + "' is not dominant");
    out.push_back(w);
  }
  return out;
}

}  // namespace tpa
