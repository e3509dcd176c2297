// Acceptance checks: one PASS/FAIL line per criterion. argv[1] is the path
// of the fdalg executable used by the determinism check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fdalg/algebra_file.hpp"
#include "fdalg/catalog.hpp"
#include "fdalg/frobenius.hpp"
#include "fdalg/graded.hpp"
#include "fdalg/verify.hpp"
#include "properties.hpp"

using namespace fdalg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::ostringstream notes;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) notes << "; ";
      notes << what;
      ok = false;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Module left_of(const Module& m) { return one_sided(m, Side::Left); }

Outcome criterion_1() {
  Outcome o;
  auto t0 = Clock::now();
  AlgebraPtr r = make_example("upper_triangular");
  Module d = dual_bimodule(r);
  o.require(hom_space(left_of(d), left_of(regular_bimodule(r)), HomKind::Left).dim() == 1, "dim Hom(R*, R) != 1");
  TensorPowers tp(d);
  o.require(tp.power(2).dim == 1, "dim R* (x) R* != 1");
  o.require(tp.power(3).dim == 0, "(R*)^3 != 0");
  o.require(is_quasi_frobenius(build_dual_construction(r, 3).algebra(), SearchOptions{}) == Verdict::No,
            "A(R,3) quasi-Frobenius");
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  auto t0 = Clock::now();
  AlgebraPtr r = make_example("generalized_matrix");
  Module d = dual_bimodule(r);
  o.require(hom_space(left_of(d), left_of(regular_bimodule(r)), HomKind::Left).dim() == 0, "Hom(R*, R) != 0");
  o.require(tensor_over(d, d).result.dim == 0, "R* (x) R* != 0");
  Construction a3 = build_dual_construction(r, 3);
  Construction trivial = build_dual_construction(r, 2);
  o.require(a3.algebra()->dim() == 8, "dim A(R,3) != 8");
  o.require(algebra_file_json(*a3.algebra()) == algebra_file_json(*trivial.algebra()),
            "A(R,3) differs from the trivial extension");
  o.require(is_symmetric(a3.algebra(), SearchOptions{}).verdict == Verdict::Yes, "A(R,3) not symmetric");
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  auto t0 = Clock::now();
  SearchOptions opts;
  AlgebraPtr r = make_example("nakayama");
  o.require(r->dim() == 9, "dim R != 9");
  o.require(is_quasi_frobenius(r, opts) == Verdict::Yes, "R not quasi-Frobenius");
  o.require(frobenius_form(r, opts).verdict == Verdict::No, "R Frobenius");
  NakayamaPermutation p = nakayama_permutation(r, opts);
  o.require(cycle_notation(p.pi) == "(1 2)", "pi = " + cycle_notation(p.pi));
  o.require(p.multiplicities == std::vector<int>{2, 1}, "m != (2,1)");
  PicOrder pic = pic_order_of_dual(r, 6, opts);
  o.require(pic.kind == PicOrder::Kind::Order && pic.value == 2, "Picard order of the dual != 2");
  Construction a3 = build_dual_construction(r, 3);
  o.require(is_quasi_frobenius(a3.algebra(), opts) == Verdict::Yes, "A(R,3) not quasi-Frobenius");
  o.require(frobenius_form(a3.algebra(), opts).verdict == Verdict::No, "A(R,3) Frobenius");
  Construction a4 = build_dual_construction(r, 4);
  o.require(frobenius_form(a4.algebra(), opts).verdict == Verdict::Yes, "A(R,4) not Frobenius");
  o.require(is_symmetric(a4.algebra(), opts).verdict == Verdict::Yes, "A(R,4) not symmetric");
  o.require(seconds_since(t0) < 20.0, "slower than 20 s");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  SearchOptions opts;
  AlgebraPtr r = make_example("quantum_plane", {{"q", "2"}});
  const Algebra& a = *r;
  FrobeniusData fd = frobenius_data(r, a.basis_vec(a.index_of("xy")));
  o.require(fd.nu * a.element("x") == a.element("1/2*x"), "nu(x) != x/2");
  o.require(fd.nu * a.element("y") == a.element("2*y"), "nu(y) != 2y");
  for (int n : {2, 3, 4})
    o.require(associative_c_space(fd, n) == Subspace::span({a.element("xy")}, a.dim(), a.field()),
              "c space != span{xy} for n = " + std::to_string(n));
  Construction c = build_dual_construction(r, 3);
  TheoremDData td = theorem_D_data(fd, c);
  const Algebra& big = *c.algebra();
  o.require(rank(gram_matrix(big, td.lambda)) == big.dim(), "Lambda degenerate");
  o.require(td.nakayama == nakayama_automorphism(c.algebra(), td.lambda), "N differs from the Nakayama automorphism");
  o.require(graded_diagnostics(c.graded, opts).graded_frobenius[2] == Verdict::Yes, "A not 2-graded Frobenius");
  o.require(is_symmetric(c.algebra(), opts).verdict == Verdict::No, "A symmetric");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  SearchOptions opts;
  AlgebraPtr r = make_example("quantum_plane", {{"q", "-1"}});
  const Algebra& a = *r;
  FrobeniusData fd = frobenius_data(r, a.basis_vec(a.index_of("xy")));
  auto powers = std::make_shared<TensorPowers>(dual_bimodule(r));
  Matrix phi = phi_from_c(fd, *powers, 2, a.unit());
  o.require(phi.is_square() && rank(phi) == a.dim(), "phi not an isomorphism");
  Construction c = build_A(powers, 2, phi);
  o.require(is_strongly_graded(c.graded), "not strongly graded");
  GradedDiagnostics g = graded_diagnostics(c.graded, opts);
  o.require(g.graded_frobenius[0] == Verdict::Yes && g.graded_frobenius[1] == Verdict::Yes,
            "not graded Frobenius in both degrees");
  o.require(is_symmetric(c.algebra(), opts).verdict == Verdict::Yes, "A not symmetric");
  OreResult ore = ore_crosscheck(fd, 2, a.unit());
  o.require(ore.verdict == Verdict::Yes, "Ore cross-check failed: " + ore.reason);
  if (ore.ore) {
    const Algebra& big = *c.algebra();
    bool exact = rank(ore.iso) == big.dim();
    for (int i = 0; i < big.dim() && exact; ++i)
      for (int j = 0; j < big.dim() && exact; ++j)
        exact = ore.iso * big.basis_product(i, j) == ore.ore->mul(ore.iso.col(i), ore.iso.col(j));
    o.require(exact, "iso does not carry structure constants exactly");
  }
  return o;
}

Outcome claim_suite(const std::string& claim) {
  Outcome o;
  int verified = 0;
  for (const auto& in : default_inputs(claim)) {
    ClaimReport r = verify_claim(claim, in, SearchOptions{});
    if (r.verdict == ClaimVerdict::Verified) {
      ++verified;
    } else {
      o.require(false, in.example + " n=" + std::to_string(in.n) + " " + claim_verdict_name(r.verdict));
    }
  }
  o.notes << (o.ok ? "" : "; ") << verified << " inputs verified";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  for (const auto& p : props::all_properties(0, 100)) {
    o.require(p.cases == 100, p.name + " ran " + std::to_string(p.cases) + " cases");
    o.require(p.failures == 0, p.name + ": " + p.first_failure);
  }
  return o;
}

struct RunResult {
  std::string out;
  int status = -1;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome criterion_10(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  std::string cmd = "'" + cli + "' verify all --seed 0 --format json";
  RunResult a = run(cmd), b = run(cmd);
  o.require(a.status == 0 && b.status == 0, "exit codes " + std::to_string(a.status) + ", " + std::to_string(b.status));
  o.require(!a.out.empty() && a.out == b.out, "reports differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"upper-triangular dual, tensors and A(R,3)", criterion_1},
      {"generalized matrix algebra and the trivial extension", criterion_2},
      {"Nakayama algebra and A(R,3), A(R,4)", criterion_3},
      {"quantum plane q=2, n=3 closed-form form and automorphism", criterion_4},
      {"quantum plane q=-1, n=2, c=1", criterion_5},
      {"associativity of morphisms from dual powers", [] { return claim_suite("B"); }},
      {"Frobenius verdicts against the permutation predicate", [] { return claim_suite("F"); }},
      {"A(R,2) symmetric for every catalog algebra", [] { return claim_suite("Tachikawa"); }},
      {"property suites, 100 cases each", criterion_9},
      {"deterministic verify all", [&] { return criterion_10(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds_since(t0),
                o.notes.str().empty() ? "" : ": ", o.notes.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
