#include "fdalg/algebra_file.hpp"

#include <fstream>

#include "fdalg/errors.hpp"

namespace fdalg {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Validation, "algebra file: " + what); }

Field parse_field(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    bad("field must be \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    try {
      return Field::prime(j["Fp"].get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  bad("field must be \"Q\" or {\"Fp\": p}");
}

Json field_json(Field f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.p}};
}

Scalar parse_coeff(Field f, const Json& j) {
  if (!j.is_string()) bad("coefficients must be strings such as \"3\" or \"-1/2\"");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad("cannot parse coefficient '" + j.get<std::string>() + "'");
  }
}

Vec parse_vec(Field f, const Json& j, int dim, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) bad(what + " must be an array of " + std::to_string(dim) + " coefficients");
  Vec v;
  for (const auto& x : j) v.push_back(parse_coeff(f, x));
  return v;
}

int parse_index(const Json& j, int dim) {
  if (!j.is_number_integer()) bad("indices must be integers");
  int i = j.get<int>();
  if (i < 0 || i >= dim) bad("index " + std::to_string(i) + " out of range");
  return i;
}

}  // namespace

AlgebraFile parse_algebra_file(const Json& j) {
  try {
    if (!j.is_object()) bad("top level must be an object");
    for (const char* key : {"field", "basis", "unit", "table"})
      if (!j.contains(key)) bad(std::string("missing key '") + key + "'");
    AlgebraSpec spec;
    spec.field = parse_field(j["field"]);
    if (!j["basis"].is_array() || j["basis"].empty()) bad("basis must be a non-empty array of labels");
    for (const auto& l : j["basis"]) {
      if (!l.is_string()) bad("basis labels must be strings");
      spec.labels.push_back(l.get<std::string>());
    }
    const int dim = static_cast<int>(spec.labels.size());
    spec.unit = parse_vec(spec.field, j["unit"], dim, "unit");
    spec.table.assign(dim, std::vector<SparseVec>(dim));
    if (!j["table"].is_array()) bad("table must be an array");
    for (const auto& entry : j["table"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) bad("table entries are [i, j, [[k, coeff], ...]]");
      int a = parse_index(entry[0], dim), b = parse_index(entry[1], dim);
      if (!spec.table[a][b].empty()) bad("duplicate table entry for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      for (const auto& term : entry[2]) {
        if (!term.is_array() || term.size() != 2) bad("terms are [k, coeff]");
        int k = parse_index(term[0], dim);
        Scalar c = parse_coeff(spec.field, term[1]);
        if (!c.is_zero()) spec.table[a][b].push_back({k, c});
      }
    }
    if (j.contains("idempotents")) {
      if (!j["idempotents"].is_array()) bad("idempotents must be an array of coefficient vectors");
      for (const auto& e : j["idempotents"]) spec.idempotent_hints.push_back(parse_vec(spec.field, e, dim, "idempotent"));
    }
    AlgebraFile out;
    out.algebra = build_algebra(std::move(spec));
    if (j.contains("grading")) {
      const Json& g = j["grading"];
      if (!g.is_object() || !g.contains("modulus") || !g.contains("degrees") || !g["modulus"].is_number_integer() ||
          !g["degrees"].is_array())
        bad("grading is {\"modulus\": n, \"degrees\": [...]}");
      std::vector<int> degrees;
      for (const auto& d : g["degrees"]) {
        if (!d.is_number_integer()) bad("degrees must be integers");
        degrees.push_back(d.get<int>());
      }
      out.grading = make_graded(out.algebra, g["modulus"].get<int>(), std::move(degrees));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Validation, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Validation, path + ": " + e.what());
  }
  return parse_algebra_file(j);
}

Json algebra_file_json(const Algebra& a, const GradedAlgebra* grading) {
  Json j;
  j["field"] = field_json(a.field());
  j["basis"] = a.labels();
  Json unit = Json::array();
  for (const auto& x : a.unit()) unit.push_back(x.str());
  j["unit"] = unit;
  Json table = Json::array();
  for (int p = 0; p < a.dim(); ++p)
    for (int q = 0; q < a.dim(); ++q) {
      const SparseVec& terms = a.product_terms(p, q);
      if (terms.empty()) continue;
      Json t = Json::array();
      for (const auto& term : terms) t.push_back(Json::array({term.index, term.coeff.str()}));
      table.push_back(Json::array({p, q, t}));
    }
  j["table"] = table;
  if (!a.idempotent_hints().empty()) {
    Json hints = Json::array();
    for (const auto& h : a.idempotent_hints()) {
      Json v = Json::array();
      for (const auto& x : h) v.push_back(x.str());
      hints.push_back(v);
    }
    j["idempotents"] = hints;
  }
  if (grading) j["grading"] = {{"modulus", grading->modulus}, {"degrees", grading->degrees}};
  return j;
}

}  // namespace fdalg
