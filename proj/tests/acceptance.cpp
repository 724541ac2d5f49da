// One PASS/FAIL line per acceptance criterion.  Exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "tpa/cyclotomic.hpp"
#include "tpa/hecke.hpp"
#include "tpa/modules.hpp"
#include "tpa/soundness.hpp"

using namespace tpa;

namespace {

struct Setup {
  CartanDatum D;
  std::vector<Weight> lam;
  TildeAlgebra A;
  TensorSpace V;
  Setup(const std::string& preset, const std::string& lambda)
      : D(CartanDatum::preset(preset)), lam(parse_lambda(D, lambda)), A(D, QMatrix::default_for(D), lam), V(D, lam) {}
};

std::vector<RootVector> contents_upto(int rank, int n) {
  std::vector<RootVector> out;
  std::vector<int> c(rank, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == rank) {
      out.push_back(RootVector{c});
      return;
    }
    for (int x = 0; x <= left; ++x) {
      c[k] = x;
      self(self, k + 1, left - x);
    }
    c[k] = 0;
  };
  rec(rec, 0, n);
  return out;
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The workloads shared by criteria 2 and 4.
const std::vector<std::pair<std::string, std::string>> kEulerCases = {
    {"sl2", "1"}, {"sl2", "2"}, {"sl2", "1;1"}, {"sl2", "2;1"}, {"sl3", "1,0"}, {"sl3", "1,0;0,1"}};
constexpr int kEulerStrands = 4;

void criterion1(Outcome& o) {
  Setup s("sl2", "1;1");
  QuotientEngine<QField> Q(s.A, QField());
  const int want[] = {1, 5, 9};
  std::ostringstream got;
  for (int n = 0; n <= 2; ++n) {
    Int total = 0;
    auto idems = idempotents_with_content(RootVector{{n}}, 2, true);
    for (const auto& a : idems)
      for (const auto& b : idems) {
        auto g = graded_hom(Q, s.V, a, b, ScanOptions{});
        if (!g.complete) o.fail("degree scan incomplete; ");
        total += g.dims.eval_at_1();
      }
    got << (n ? "/" : "") << total.get_str();
    if (total != want[n]) o.fail("wrong total; ");
  }
  o.note << "totals " << got.str();
}

void criterion2(Outcome& o) {
  int pairs = 0, bad = 0;
  for (const auto& [preset, lam] : kEulerCases) {
    Setup s(preset, lam);
    QuotientEngine<QField> Q(s.A, QField());
    for (const auto& c : contents_upto(s.D.rank(), kEulerStrands)) {
      auto idems = idempotents_with_content(c, s.V.ell(), true);
      for (const auto& a : idems)
        for (const auto& b : idems) {
          ++pairs;
          auto g = graded_hom(Q, s.V, a, b, ScanOptions{});
          if (!g.complete || g.dims != hom_prediction(s.V, a, b)) {
            if (bad == 0) o.fail(preset + " " + lam + " " + a.to_string(s.D) + " " + b.to_string(s.D) + "; ");
            ++bad;
          }
        }
    }
  }
  o.note << pairs << " components, " << bad << " mismatches";
}

void criterion3(Outcome& o) {
  int comps = 0, bad = 0;
  auto run = [&](const std::string& preset, const std::string& lam, int strands) {
    Setup s(preset, lam);
    QuotientEngine<QField> Q(s.A, QField());
    for (const auto& c : contents_upto(s.D.rank(), strands)) {
      auto seqs = sequences_with_content(c);
      for (const auto& I : seqs)
        for (const auto& J : seqs) {
          ++comps;
          Idem a{J, {0}}, b{I, {0}};
          bool ok = true;
          // graded dims against the form on F_I v, F_J v
          auto g = graded_hom(Q, s.V, a, b, ScanOptions{});
          if (!g.complete || g.dims != hom_prediction(s.V, a, b)) ok = false;
          // and the kernel is exactly the cyclotomic ideal, degree by degree
          int lo = s.A.min_degree(b, a);
          for (int d = lo; d <= lo + 12 && ok; ++d)
            if (!cyclotomic_kernel_matches(Q, I, J, d)) ok = false;
          if (!ok) {
            if (bad == 0) o.fail(preset + " " + lam + " " + b.to_string(s.D) + "; ");
            ++bad;
          }
        }
    }
  };
  for (const char* l : {"1", "2", "3"}) run("sl2", l, 4);
  run("sl3", "1,0", 3);
  run("sl3", "0,1", 3);
  o.note << comps << " components, " << bad << " mismatches";
}

void criterion4(Outcome& o) {
  int pairs = 0, bad = 0, idems_checked = 0;
  bool plus = true, minus = true;
  for (const auto& [preset, lam] : kEulerCases) {
    Setup s(preset, lam);
    QuotientEngine<QField> Q(s.A, QField());
    for (const auto& c : contents_upto(s.D.rank(), kEulerStrands)) {
      auto idems = idempotents_with_content(c, s.V.ell(), true);
      for (const auto& J : idems)
        for (const auto& I : idems) {
          ++pairs;
          auto g = standard_hom(Q, s.V, J, I, ScanOptions{});
          if (!g.complete || g.dims != standard_prediction(s.V, J, I)) {
            if (bad == 0) o.fail("standard " + preset + " " + lam + " " + I.to_string(s.D) + "; ");
            ++bad;
          }
        }
      for (const auto& e : idems) {
        auto cert = standard_filtration_check(Q, s.V, e, ScanOptions{});
        ++idems_checked;
        plus = plus && cert.tensor_plus && cert.dims_plus;
        minus = minus && cert.tensor_minus && cert.dims_minus;
      }
    }
  }
  if (!plus && !minus) o.fail("no global sign for the filtration; ");
  o.note << pairs << " standard pairs, " << bad << " mismatches; filtration on " << idems_checked
         << " idempotents, sign " << (plus ? "+" : (minus ? "-" : "none"));
}

void criterion5(Outcome& o) {
  struct Block {
    std::string preset, lam;
    std::vector<int> content;
  };
  const std::vector<Block> blocks = {{"sl2", "1;1", {2}},       {"sl2", "1;1", {3}},    {"sl2", "2;1", {3}},
                                     {"sl3", "1,0;0,1", {1, 1}}, {"sl3", "1,1", {1, 2}}, {"B2", "1,0", {1, 2}}};
  SoundnessOptions opt;  // 500 triples, 200 products x 5 polynomials
  int nb = 0;
  SoundnessReport total;
  for (const auto& b : blocks) {
    Setup s(b.preset, b.lam);
    opt.seed = 1000 + nb++;
    auto r = soundness_check(s.A, RootVector{b.content}, opt);
    if (!r.ok()) o.fail(b.preset + " " + b.lam + ": " + r.summary() + "; ");
    total.triples += r.triples;
    total.assoc_failures += r.assoc_failures;
    total.oracle_checks += r.oracle_checks;
    total.oracle_failures += r.oracle_failures;
    total.oracle_nonzero += r.oracle_nonzero;
    total.words += r.words;
    total.bruhat_failures += r.bruhat_failures;
    total.leading_failures += r.leading_failures;
  }
  o.note << nb << " blocks: " << total.summary();
}

void criterion6(Outcome& o) {
  Setup s("sl2", "1;1");
  ModuleWorkbench W(s.A, s.V, ScanOptions{}, 2);
  const auto& low = W.decomposition(RootVector{{2}});
  if (!low.radical.empty()) o.fail("radical of the weight -2 block is nonzero; ");
  if (low.simples.size() != 1 || low.simples[0].module.dim() != 3) o.fail("weight -2 block is not one 3-dim simple; ");
  const auto& mid = W.decomposition(RootVector{{1}});
  const int want = s.V.weight_dim_content(RootVector{{1}});
  if (static_cast<int>(mid.simples.size()) != want) o.fail("weight 0 simple count; ");
  o.note << "weight -2: radical " << low.radical.size() << ", simples " << low.simples.size() << " of dim "
         << (low.simples.empty() ? 0 : low.simples[0].module.dim()) << "; weight 0: " << mid.simples.size()
         << " simples (weight space dim " << want << ")";
}

void criterion7(Outcome& o) {
  int algebras = 0;
  // every dominant weight of level <= 2 for sl2 and sl3
  const std::vector<std::vector<int>> weights = {{1}, {2}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
  for (const auto& lam : weights)
    for (int d = 0; d <= 3; ++d) {
      CyclotomicHecke H(lam, d);
      int want = 1;
      for (int k = 1; k <= d; ++k) want *= H.level() * k;
      ++algebras;
      if (H.dim() != want || !H.relation_failures().empty()) o.fail("dimension or relations at d=" + std::to_string(d) + "; ");
    }
  int blocks = 0;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"sl2", "1"}, {"sl2", "2"}, {"sl3", "1,0"}, {"sl3", "0,1"}};
  for (const auto& [preset, lam] : cases) {
    auto D = CartanDatum::preset(preset);
    auto w = parse_lambda(D, lam);
    for (int d = 0; d <= 3; ++d) {
      auto r = bk_check(D, w[0], d);
      blocks += static_cast<int>(r.blocks.size());
      if (!r.ok()) o.fail(preset + " " + lam + " d=" + std::to_string(d) + "; ");
    }
  }
  o.note << algebras << " algebras with dim N^d d!, " << blocks << " weight blocks compared";
}

void criterion8(Outcome& o) {
  int nblocks = 0;
  for (const char* l : {"1", "2"}) {
    Setup s("sl2", l);
    QuotientEngine<QField> Q(s.A, QField());
    for (int n = 0; n <= 3; ++n) {
      auto B = build_block(Q, s.V, RootVector{{n}}, ScanOptions{});
      if (B.dim() == 0) continue;
      ++nblocks;
      if (block_associativity_failures(B) != 0) o.fail("block table not associative; ");
      auto cert = frobenius_check(B, 7);
      if (!cert.feasible) o.fail(std::string("lambda ") + l + " n=" + std::to_string(n) + ": " + cert.detail + "; ");
    }
  }
  o.note << nblocks << " nonzero blocks";
}

}  // namespace

int main() {
  struct Crit {
    int id;
    std::function<void(Outcome&)> fn;
    double limit;  // seconds, 0 for none
  };
  const std::vector<Crit> crits = {{1, criterion1, 60},  {2, criterion2, 600}, {3, criterion3, 0}, {4, criterion4, 0},
                                   {5, criterion5, 0},   {6, criterion6, 0},   {7, criterion7, 0}, {8, criterion8, 0}};
  int failed = 0;
  for (const auto& c : crits) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.fn(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double t = seconds_since(t0);
    if (c.limit > 0 && t > c.limit) o.fail("over the time limit; ");
    if (!o.pass) ++failed;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.note.str();
    std::cout.setf(std::ios::fixed);
    std::cout.precision(1);
    std::cout << "; " << t << "s)" << std::endl;
  }
  return failed ? 1 : 0;
}
