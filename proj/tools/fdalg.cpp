#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fdalg/algebra_file.hpp"
#include "fdalg/catalog.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/frobenius.hpp"
#include "fdalg/graded.hpp"
#include "fdalg/semisimple.hpp"
#include "fdalg/verify.hpp"

using namespace fdalg;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kPicLimit = 6;

struct Flags {
  std::uint64_t seed = 0;
  int mc_trials = 64;
  int det_fallback_dim = 12;
  std::string format = "json";
  std::string out;
  bool timings = false;

  SearchOptions options() const {
    SearchOptions o;
    o.seed = seed;
    o.mc_trials = mc_trials;
    o.fallback_max_size = det_fallback_dim;
    return o;
  }
};

// Exit status accumulated over a run: 1 input error, 2 violated, 3 undecided.
struct Status {
  bool input_error = false;
  bool violated = false;
  bool undecided = false;
  int code() const { return input_error ? 1 : violated ? 2 : undecided ? 3 : 0; }
};

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

Json error_json(const Error& e) { return {{"error", error_kind_name(e.kind())}, {"message", e.what()}}; }

ExampleParams parse_params(const std::vector<std::string>& items) {
  ExampleParams p;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(ErrorKind::BadParams, "parameters are key=value, got '" + s + "'");
    p[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return p;
}

// Runs one section of a report; errors become structured entries.
void section(Json& results, const std::string& key, const std::function<Json()>& body) {
  try {
    results[key] = body();
  } catch (const Error& e) {
    results[key] = error_json(e);
  }
}

Json verdict_entry(Verdict v, Status& st, Json extra = Json::object()) {
  if (v == Verdict::Undecided) st.undecided = true;
  Json out = {{"verdict", verdict_name(v)}};
  for (auto& [k, x] : extra.items()) out[k] = x;
  return out;
}

Json analyze(const AlgebraFile& file, const Flags& flags, Status& st) {
  const AlgebraPtr& a = file.algebra;
  const SearchOptions opts = flags.options();
  Json r;
  r["dimension"] = a->dim();
  r["field"] = a->field().name();
  r["basis"] = a->labels();

  section(r, "radical", [&] {
    Subspace j = jacobson_radical(*a);
    Json basis = Json::array();
    for (const auto& v : j.basis()) basis.push_back(a->format(v));
    return Json{{"dimension", j.dim()}, {"basis", basis}};
  });
  section(r, "dual", [&] {
    Module dual = dual_bimodule(a);
    TensorPowers tp(dual);
    int hom = hom_space(one_sided(dual, Side::Left), one_sided(regular_bimodule(a), Side::Left), HomKind::Left).dim();
    return Json{{"hom_left_dual_to_regular", hom}, {"tensor_square", tp.power(2).dim}, {"tensor_cube", tp.power(3).dim}};
  });
  Verdict qf = Verdict::Undecided;
  section(r, "quasi_frobenius", [&] {
    std::string why;
    qf = is_quasi_frobenius(a, opts, &why);
    return verdict_entry(qf, st, {{"reason", why}});
  });
  section(r, "semisimple", [&] {
    SemisimpleData ss = semisimple_data(a);
    Json idem = Json::array();
    for (const auto& e : ss.primitive_idempotents) idem.push_back(a->format(e));
    return Json{{"blocks", ss.block_count()}, {"multiplicities", ss.multiplicities}, {"primitive_idempotents", idem}};
  });
  section(r, "frobenius", [&] {
    FrobeniusResult fr = frobenius_form(a, opts);
    Json extra = {{"reason", fr.reason}, {"by_criterion", fr.by_criterion}};
    if (fr.permutation) {
      std::vector<int> one_based;
      for (int x : fr.permutation->pi) one_based.push_back(x + 1);
      extra["nakayama_permutation"] = {{"cycles", cycle_notation(fr.permutation->pi)}, {"images", one_based}};
      extra["multiplicities"] = fr.permutation->multiplicities;
    }
    if (fr.data) {
      extra["form"] = vec_json(fr.data->form);
      extra["nakayama_automorphism"] = matrix_json(fr.data->nu);
    }
    return verdict_entry(fr.verdict, st, extra);
  });
  section(r, "symmetric", [&] {
    ElementResult s = is_symmetric(a, opts);
    Json extra = {{"reason", s.reason}};
    if (s.verdict == Verdict::Yes) extra["form"] = vec_json(s.element);
    return verdict_entry(s.verdict, st, extra);
  });
  if (qf == Verdict::Yes) {
    section(r, "dual_class_order", [&] {
      PicOrder p = pic_order_of_dual(a, kPicLimit, opts);
      switch (p.kind) {
        case PicOrder::Kind::Order:
          return Json{{"order", p.value}};
        case PicOrder::Kind::NoneUpTo:
          return Json{{"order", nullptr}, {"searched_up_to", p.value}};
        case PicOrder::Kind::Undecided:
          break;
      }
      st.undecided = true;
      return Json{{"order", "undecided"}, {"first_undecided_power", p.value}, {"certificate", p.certificate}};
    });
  }
  if (file.grading) {
    section(r, "grading", [&] {
      GradedDiagnostics g = graded_diagnostics(*file.grading, opts);
      Json per = Json::array();
      for (int s = 0; s < file.grading->modulus; ++s) {
        if (g.graded_frobenius[s] == Verdict::Undecided) st.undecided = true;
        Json e = {{"sigma", s}, {"faithful", static_cast<bool>(g.faithful[s])}, {"graded_frobenius", verdict_name(g.graded_frobenius[s])}};
        if (g.forms[s]) e["form"] = vec_json(*g.forms[s]);
        per.push_back(e);
      }
      return Json{{"modulus", file.grading->modulus}, {"strongly_graded", g.strongly_graded}, {"per_sigma", per}};
    });
  }
  return r;
}

Json construct(const AlgebraFile& file, int n, const std::string& phi_spec, const std::string& form,
               const Flags& flags) {
  const AlgebraPtr& r = file.algebra;
  auto powers = std::make_shared<TensorPowers>(dual_bimodule(r));
  Matrix phi;
  if (phi_spec == "zero") {
    phi = Matrix(r->dim(), powers->power(n).dim, r->field());
  } else if (phi_spec.rfind("c:", 0) == 0) {
    FrobeniusData fd = [&] {
      if (!form.empty()) return frobenius_data(r, r->element(form));
      FrobeniusResult fr = frobenius_form(r, flags.options());
      if (fr.verdict != Verdict::Yes) fail(ErrorKind::BadParams, "phi = c:<element> needs a Frobenius algebra");
      return *fr.data;
    }();
    Vec c = r->element(phi_spec.substr(2));
    if (!associative_c_space(fd, n).contains(c)) fail(ErrorKind::InvalidC, "c is not admissible for n = " + std::to_string(n));
    phi = phi_from_c(fd, *powers, n, c);
  } else {
    std::ifstream in(phi_spec);
    if (!in) fail(ErrorKind::Validation, "cannot open phi file '" + phi_spec + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::Validation, phi_spec + ": " + e.what());
    }
    if (!j.is_array()) fail(ErrorKind::Validation, "phi file must hold a matrix as an array of rows");
    const int cols = powers->power(n).dim;
    phi = Matrix(r->dim(), cols, r->field());
    if (static_cast<int>(j.size()) != r->dim()) fail(ErrorKind::Validation, "phi must have dim R rows");
    for (int i = 0; i < r->dim(); ++i) {
      if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
        fail(ErrorKind::Validation, "phi rows must have " + std::to_string(cols) + " entries");
      for (int k = 0; k < cols; ++k) {
        if (!j[i][k].is_string()) fail(ErrorKind::Validation, "phi entries must be strings");
        phi(i, k) = Scalar::parse(r->field(), j[i][k].get<std::string>());
      }
    }
  }
  Construction c = build_A(powers, n, phi);
  return algebra_file_json(*c.algebra(), &c.graded);
}

std::string text_report(const Json& j, int indent = 0) {
  std::ostringstream out;
  const std::string pad(indent, ' ');
  for (auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << pad << k << ":\n" << text_report(v, indent + 2);
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << pad << k << ":\n";
      for (const auto& e : v) out << text_report(e, indent + 2) << "\n";
    } else {
      out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return out.str();
}

int emit(const Json& report, const Flags& flags) {
  std::string text = flags.format == "text" ? text_report(report) : report.dump(2) + "\n";
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(flags.out);
    if (!f) {
      std::cerr << "cannot write '" << flags.out << "'\n";
      return 1;
    }
    f << text;
  }
  return 0;
}

Json header(const std::string& command, const Flags& flags) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"parameters", {{"seed", flags.seed}, {"mc_trials", flags.mc_trials}, {"det_fallback_dim", flags.det_fallback_dim}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional algebras: Frobenius diagnostics and graded constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--seed", flags.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--mc-trials", flags.mc_trials, "Monte-Carlo trials per search")->capture_default_str();
  app.add_option("--det-fallback-dim", flags.det_fallback_dim, "largest matrix size for the exact grid fallback")
      ->capture_default_str();
  app.add_option("--format", flags.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", flags.out, "write the report to this file");
  app.add_flag("--timings", flags.timings, "include elapsed times in reports");

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "run the diagnostic battery on an algebra file");
  analyze_cmd->add_option("file", file, "algebra file")->required();

  int n = 2;
  std::string phi = "zero", form;
  auto* construct_cmd = app.add_subcommand("construct", "build A(R, R*, phi) and write it as an algebra file");
  construct_cmd->add_option("file", file, "algebra file for R")->required();
  construct_cmd->add_option("--n", n, "modulus n >= 2")->required();
  construct_cmd->add_option("--phi", phi, "zero | c:<element> | path to a matrix file")->capture_default_str();
  construct_cmd->add_option("--form", form, "Frobenius form for phi = c:..., as an element of the dual basis");

  std::string claim, example, c;
  std::vector<std::string> params;
  int vn = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run claim checks");
  verify_cmd->add_option("claim", claim, "claim identifier or 'all'")->required();
  verify_cmd->add_option("--example", example, "catalog example for a single claim");
  verify_cmd->add_option("--params", params, "example parameters key=value")->delimiter(',');
  verify_cmd->add_option("--n", vn, "n for a single claim");
  verify_cmd->add_option("--c", c, "element defining phi_c");
  verify_cmd->add_option("--form", form, "Frobenius form as an element of the dual basis");

  std::string ex_id;
  std::vector<std::string> ex_params;
  auto* examples_cmd = app.add_subcommand("examples", "list catalog examples or print one as an algebra file");
  examples_cmd->add_option("id", ex_id, "example identifier");
  examples_cmd->add_option("--params", ex_params, "example parameters key=value")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Status st;
  try {
    if (*analyze_cmd) {
      Json report = header("analyze " + file, flags);
      auto start = std::chrono::steady_clock::now();
      report["results"] = analyze(read_algebra_file(file), flags, st);
      if (flags.timings)
        report["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (int e = emit(report, flags)) return e;
      return st.code();
    }
    if (*construct_cmd) {
      if (n < 2) fail(ErrorKind::BadParams, "n must be at least 2");
      Json out = construct(read_algebra_file(file), n, phi, form, flags);
      Flags raw = flags;
      raw.format = "json";
      return emit(out, raw);
    }
    if (*examples_cmd) {
      if (ex_id.empty()) {
        Json list = Json::array();
        for (const auto& e : example_list()) {
          Json defaults = Json::object();
          for (const auto& [k, v] : e.defaults) defaults[k] = v;
          list.push_back({{"id", e.id}, {"summary", e.summary}, {"defaults", defaults}});
        }
        Json report = header("examples", flags);
        report["examples"] = list;
        return emit(report, flags);
      }
      AlgebraPtr a = make_example(ex_id, parse_params(ex_params));
      Flags raw = flags;
      raw.format = "json";
      return emit(algebra_file_json(*a), raw);
    }
    // verify
    std::vector<std::pair<std::string, ClaimInput>> runs;
    if (claim == "all") {
      runs = default_suite();
    } else if (!example.empty()) {
      ClaimInput in;
      in.example = example;
      in.params = parse_params(params);
      in.n = vn ? vn : 2;
      in.c = c;
      in.form = form;
      runs.push_back({claim, in});
    } else {
      for (auto& in : default_inputs(claim)) runs.push_back({claim, in});
    }
    Json report = header("verify " + claim, flags);
    Json claims = Json::array();
    int counts[3] = {0, 0, 0};
    int errors = 0;
    const SearchOptions opts = flags.options();
    for (const auto& [id, in] : runs) {
      try {
        ClaimReport cr = verify_claim(id, in, opts);
        claims.push_back(to_json(cr, flags.timings));
        counts[static_cast<int>(cr.verdict)]++;
        if (cr.verdict == ClaimVerdict::Violated) st.violated = true;
        if (cr.verdict == ClaimVerdict::Undecided) st.undecided = true;
      } catch (const Error& e) {
        Json entry = {{"claim", id}, {"input", to_json(in)}, {"verdict", "error"}};
        entry.update(error_json(e));
        claims.push_back(entry);
        ++errors;
        st.input_error = true;
      }
    }
    report["claims"] = claims;
    report["summary"] = {{"verified", counts[0]}, {"violated", counts[1]}, {"undecided", counts[2]}, {"errors", errors}};
    if (int e = emit(report, flags)) return e;
    return st.code();
  } catch (const Error& e) {
    Json report = header(app.get_subcommands().front()->get_name(), flags);
    report["error"] = error_json(e);
    emit(report, flags);
    return 1;
  }
}
