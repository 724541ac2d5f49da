#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "tpa/cyclotomic.hpp"
#include "tpa/hecke.hpp"
#include "tpa/modules.hpp"
#include "tpa/soundness.hpp"

namespace py = pybind11;
using namespace tpa;

namespace {

py::object to_py(const Int& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::dict to_py(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

CartanDatum datum_of(const std::string& preset) {
  try {
    return CartanDatum::preset(preset);
  } catch (const std::exception&) {
    throw ConfigError("unknown datum preset '" + preset + "'");
  }
}

/// One algebra T^lambda with its tensor space and a rational quotient engine.
class Workbench {
 public:
  Workbench(const std::string& preset, const std::string& lambda)
      : D_(datum_of(preset)),
        lam_(parse_lambda(D_, lambda)),
        A_(std::make_unique<TildeAlgebra>(D_, QMatrix::default_for(D_), lam_)),
        V_(std::make_unique<TensorSpace>(D_, lam_)),
        Q_(std::make_unique<QuotientEngine<QField>>(*A_, QField())) {}

  int rank() const { return D_.rank(); }
  int ell() const { return V_->ell(); }

  std::vector<std::pair<std::vector<int>, std::vector<int>>> idempotents(const std::vector<int>& content) const {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& e : idempotents_with_content(RootVector{content}, ell(), true)) out.emplace_back(e.I, e.kappa);
    return out;
  }

  py::dict graded_hom(const std::vector<int>& I, const std::vector<int>& kappa, const std::vector<int>& J,
                      const std::vector<int>& kappa2) {
    Idem a{I, kappa}, b{J, kappa2};
    a.validate();
    b.validate();
    return to_py(tpa::graded_hom(*Q_, *V_, a, b, ScanOptions{}).dims);
  }

  py::dict form(const std::vector<int>& I, const std::vector<int>& kappa, const std::vector<int>& J,
                const std::vector<int>& kappa2) const {
    Idem a{I, kappa}, b{J, kappa2};
    a.validate();
    b.validate();
    return to_py(V_->form(V_->vkappa(a), V_->vkappa(b)));
  }

  py::object block_total(const std::vector<int>& content) {
    Int total = 0;
    auto idems = idempotents_with_content(RootVector{content}, ell(), true);
    for (const auto& a : idems)
      for (const auto& b : idems) total += tpa::graded_hom(*Q_, *V_, a, b, ScanOptions{}).dims.eval_at_1();
    return to_py(total);
  }

  int weight_dim(const std::vector<int>& content) const { return V_->weight_dim_content(RootVector{content}); }

  std::vector<int> simple_dims(const std::vector<int>& content, int max_strands) {
    ModuleWorkbench W(*A_, *V_, ScanOptions{}, max_strands);
    std::vector<int> out;
    for (const auto& s : W.decomposition(RootVector{content}).simples) out.push_back(s.module.dim());
    return out;
  }

  py::dict soundness(const std::vector<int>& content, int triples, int products, int polys, uint64_t seed) {
    SoundnessOptions opt;
    opt.triples = triples;
    opt.products = products;
    opt.polys = polys;
    opt.words = products;
    opt.seed = seed;
    auto r = soundness_check(*A_, RootVector{content}, opt);
    py::dict d;
    d["ok"] = r.ok();
    d["triples"] = r.triples;
    d["assoc_failures"] = r.assoc_failures;
    d["oracle_checks"] = r.oracle_checks;
    d["oracle_failures"] = r.oracle_failures;
    d["bruhat_failures"] = r.bruhat_failures;
    return d;
  }

 private:
  CartanDatum D_;
  std::vector<Weight> lam_;
  std::unique_ptr<TildeAlgebra> A_;
  std::unique_ptr<TensorSpace> V_;
  std::unique_ptr<QuotientEngine<QField>> Q_;
};

py::dict hecke(const std::string& preset, const std::string& lambda, int d) {
  auto D = datum_of(preset);
  auto lam = parse_lambda(D, lambda);
  if (lam.size() != 1) throw ConfigError("exactly one weight expected");
  auto r = bk_check(D, lam[0], d);
  py::dict out;
  out["dim"] = r.dim;
  out["expected_dim"] = r.expected_dim;
  out["relation_failures"] = r.relation_failures;
  out["idempotents_ok"] = r.idempotents_ok;
  out["cyclotomic_ok"] = r.cyclotomic_ok;
  out["mismatches"] = r.mismatches;
  out["ok"] = r.ok();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in tensor product algebras";
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);

  py::class_<Workbench>(m, "Workbench")
      .def(py::init<const std::string&, const std::string&>(), py::arg("datum"), py::arg("lam"))
      .def_property_readonly("rank", &Workbench::rank)
      .def_property_readonly("ell", &Workbench::ell)
      .def("idempotents", &Workbench::idempotents, py::arg("content"),
           "Nonviolating (I, kappa) pairs with the given content")
      .def("graded_hom", &Workbench::graded_hom, py::arg("I"), py::arg("kappa"), py::arg("J"), py::arg("kappa2"),
           "dim_q Hom(P_(I,kappa), P_(J,kappa2)) as {degree: coefficient}")
      .def("form", &Workbench::form, py::arg("I"), py::arg("kappa"), py::arg("J"), py::arg("kappa2"))
      .def("block_total", &Workbench::block_total, py::arg("content"))
      .def("weight_dim", &Workbench::weight_dim, py::arg("content"))
      .def("simple_dims", &Workbench::simple_dims, py::arg("content"), py::arg("max_strands") = 4)
      .def("soundness", &Workbench::soundness, py::arg("content"), py::arg("triples") = 50,
           py::arg("products") = 20, py::arg("polys") = 5, py::arg("seed") = 1);

  m.def("hecke_check", &hecke, py::arg("datum"), py::arg("lam"), py::arg("d"));
  m.def("hecke_dim", [](const std::vector<int>& lam, int d) { return CyclotomicHecke(lam, d).dim(); },
        py::arg("lam"), py::arg("d"));
}
