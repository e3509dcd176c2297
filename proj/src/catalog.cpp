#include "fdalg/catalog.hpp"

#include "fdalg/errors.hpp"

namespace fdalg {

AlgebraPtr field_algebra(Field f) { return AlgebraBuilder(f, {"1"}).set("1", "1", "1").unit("1").hint("1").build(); }

AlgebraPtr dual_numbers(Field f) {
  return AlgebraBuilder(f, {"1", "eps"})
      .set("1", "1", "1")
      .set("1", "eps", "eps")
      .set("eps", "1", "eps")
      .unit("1")
      .hint("1")
      .build();
}

AlgebraPtr quantum_plane(const Scalar& q, Field f) {
  Scalar qq = q.in_field(f);
  if (qq.is_zero()) fail(ErrorKind::BadParams, "quantum plane needs q != 0");
  AlgebraBuilder b(f, {"1", "x", "y", "xy"});
  for (const char* l : {"1", "x", "y", "xy"}) {
    b.set("1", l, l);
    if (std::string(l) != "1") b.set(l, "1", l);
  }
  b.set("x", "y", "xy").set("y", "x", "xy", qq);
  return b.unit("1").hint("1").build();
}

AlgebraPtr matrix_algebra(int n, Field f) {
  if (n < 1) fail(ErrorKind::BadParams, "matrix size must be positive");
  std::vector<std::string> labels;
  auto name = [](int i, int j) { return "E" + std::to_string(i + 1) + std::to_string(j + 1); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back(name(i, j));
  AlgebraBuilder b(f, labels);
  std::string unit;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) b.set(name(i, j), name(j, k), name(i, k));
  for (int i = 0; i < n; ++i) unit += (i ? " + " : "") + name(i, i);
  return b.unit(unit).hint(name(0, 0)).build();
}

AlgebraPtr upper_triangular_2(Field f) {
  return AlgebraBuilder(f, {"e", "f", "x"})
      .set("e", "e", "e")
      .set("f", "f", "f")
      .set("e", "x", "x")
      .set("x", "f", "x")
      .unit("e + f")
      .hint("e")
      .hint("f")
      .build();
}

AlgebraPtr generalized_matrix(Field f) {
  return AlgebraBuilder(f, {"e", "f", "x", "y"})
      .set("e", "e", "e")
      .set("f", "f", "f")
      .set("e", "x", "x")
      .set("x", "f", "x")
      .set("e", "y", "y")
      .set("y", "f", "y")
      .unit("e + f")
      .hint("e")
      .hint("f")
      .build();
}

AlgebraPtr nakayama_pq(int p, int q, Field f) {
  if (p < 1 || q < 1 || p == q) fail(ErrorKind::BadParams, "nakayama_pq needs positive p != q");
  auto idx = [](char c, int a, int b) { return std::string(1, c) + std::to_string(a) + std::to_string(b); };
  std::vector<std::string> labels;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) labels.push_back(idx('E', i, j));
  for (int i = 1; i <= p; ++i)
    for (int r = 1; r <= q; ++r) labels.push_back(idx('X', i, r));
  for (int r = 1; r <= q; ++r)
    for (int i = 1; i <= p; ++i) labels.push_back(idx('Y', r, i));
  for (int r = 1; r <= q; ++r)
    for (int t = 1; t <= q; ++t) labels.push_back(idx('F', r, t));
  AlgebraBuilder b(f, labels);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) {
      for (int s = 1; s <= p; ++s) b.set(idx('E', i, j), idx('E', j, s), idx('E', i, s));
      for (int r = 1; r <= q; ++r) {
        b.set(idx('E', i, j), idx('X', j, r), idx('X', i, r));
        b.set(idx('Y', r, i), idx('E', i, j), idx('Y', r, j));
      }
    }
  for (int r = 1; r <= q; ++r)
    for (int t = 1; t <= q; ++t) {
      for (int u = 1; u <= q; ++u) b.set(idx('F', r, t), idx('F', t, u), idx('F', r, u));
      for (int i = 1; i <= p; ++i) {
        b.set(idx('X', i, r), idx('F', r, t), idx('X', i, t));
        b.set(idx('F', r, t), idx('Y', t, i), idx('Y', r, i));
      }
    }
  std::string unit;
  for (int i = 1; i <= p; ++i) unit += (unit.empty() ? "" : " + ") + idx('E', i, i);
  for (int r = 1; r <= q; ++r) unit += " + " + idx('F', r, r);
  return b.unit(unit).hint(idx('E', 1, 1)).hint(idx('F', 1, 1)).build();
}

AlgebraPtr nakayama_basic(Field f) {
  AlgebraPtr r = nakayama_pq(2, 1, f);
  Corner c = corner_algebra(r, r->element("E11 + F11"));
  AlgebraSpec spec = c.algebra->spec();
  spec.idempotent_hints = {c.algebra->element("E11"), c.algebra->element("F11")};
  return build_algebra(std::move(spec));
}

namespace {

Field field_param(const ExampleParams& p) {
  auto it = p.find("field");
  if (it == p.end() || it->second == "Q") return Field::rationals();
  std::string s = it->second;
  if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) s = s.substr(s[1] == '_' ? 2 : 1);
  try {
    return Field::prime(std::stoull(s));
  } catch (const std::exception&) {
    fail(ErrorKind::BadParams, "field must be Q or F<p> for a prime p, got '" + it->second + "'");
  }
}

int int_param(const ExampleParams& p, const std::string& key) {
  try {
    return std::stoi(p.at(key));
  } catch (const std::exception&) {
    fail(ErrorKind::BadParams, "parameter '" + key + "' must be an integer");
  }
}

ExampleParams merged(const ExampleInfo& info, const ExampleParams& params) {
  ExampleParams out = info.defaults;
  for (const auto& [k, v] : params) {
    if (!out.count(k)) fail(ErrorKind::BadParams, "example '" + info.id + "' has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

}  // namespace

const std::vector<ExampleInfo>& example_list() {
  static const std::vector<ExampleInfo> list = {
      {"field", "the ground field", {{"field", "Q"}}},
      {"dual_numbers", "K[eps]/(eps^2)", {{"field", "Q"}}},
      {"quantum_plane", "K<x,y>/(x^2, y^2, yx - q xy)", {{"field", "Q"}, {"q", "2"}}},
      {"matrix", "full matrix algebra M_n(K)", {{"field", "Q"}, {"n", "2"}}},
      {"upper_triangular", "upper triangular 2x2 matrices", {{"field", "Q"}}},
      {"generalized_matrix", "triangular algebra with a K^2 corner", {{"field", "Q"}}},
      {"nakayama", "quasi-Frobenius algebra on E, X, Y, F blocks", {{"field", "Q"}, {"p", "2"}, {"q", "1"}}},
      {"nakayama_basic", "basic corner (E11 + F11) R (E11 + F11) of nakayama p=2, q=1", {{"field", "Q"}}},
      {"quantum_plane_pair", "quantum_plane x quantum_plane", {{"field", "Q"}, {"q", "2"}}},
      {"generalized_matrix_x_field", "generalized_matrix x K", {{"field", "Q"}}},
      {"triangular_x_generalized", "upper_triangular x generalized_matrix", {{"field", "Q"}}},
  };
  return list;
}

AlgebraPtr make_example(const std::string& id, const ExampleParams& params) {
  const ExampleInfo* info = nullptr;
  for (const auto& e : example_list())
    if (e.id == id) info = &e;
  if (!info) fail(ErrorKind::BadParams, "unknown example '" + id + "'");
  ExampleParams p = merged(*info, params);
  Field f = field_param(p);
  auto q_param = [&] { return Scalar::parse(f, p.at("q")); };
  if (id == "field") return field_algebra(f);
  if (id == "dual_numbers") return dual_numbers(f);
  if (id == "quantum_plane") return quantum_plane(q_param(), f);
  if (id == "matrix") return matrix_algebra(int_param(p, "n"), f);
  if (id == "upper_triangular") return upper_triangular_2(f);
  if (id == "generalized_matrix") return generalized_matrix(f);
  if (id == "nakayama") return nakayama_pq(int_param(p, "p"), int_param(p, "q"), f);
  if (id == "nakayama_basic") return nakayama_basic(f);
  if (id == "quantum_plane_pair") return product_algebra(quantum_plane(q_param(), f), quantum_plane(q_param(), f));
  if (id == "generalized_matrix_x_field") return product_algebra(generalized_matrix(f), field_algebra(f));
  return product_algebra(upper_triangular_2(f), generalized_matrix(f));
}

std::vector<CatalogEntry> standard_catalog() {
  auto entry = [](std::string name, std::string id, ExampleParams params, bool qf, bool frob, bool sym,
                  std::optional<int> pic) {
    CatalogEntry e;
    e.name = std::move(name);
    e.id = std::move(id);
    e.params = std::move(params);
    e.algebra = make_example(e.id, e.params);
    e.quasi_frobenius = qf;
    e.frobenius = frob;
    e.symmetric = sym;
    e.pic_order = pic;
    return e;
  };
  std::vector<CatalogEntry> out;
  out.push_back(entry("field", "field", {}, true, true, true, 1));
  out.push_back(entry("dual_numbers", "dual_numbers", {}, true, true, true, 1));
  out.push_back(entry("quantum_plane(q=2)", "quantum_plane", {{"q", "2"}}, true, true, false, std::nullopt));
  out.push_back(entry("quantum_plane(q=-1)", "quantum_plane", {{"q", "-1"}}, true, true, false, 2));
  out.push_back(entry("quantum_plane(q=2, F_5)", "quantum_plane", {{"q", "2"}, {"field", "F5"}}, true, true, false, 4));
  out.push_back(entry("matrix(2)", "matrix", {{"n", "2"}}, true, true, true, 1));
  out.push_back(entry("nakayama(2,1)", "nakayama", {}, true, false, false, 2));
  out.push_back(entry("nakayama_basic", "nakayama_basic", {}, true, true, false, 2));
  out.push_back(entry("quantum_plane_pair(q=2)", "quantum_plane_pair", {{"q", "2"}}, true, true, false, std::nullopt));
  out.push_back(entry("upper_triangular", "upper_triangular", {}, false, false, false, std::nullopt));
  out.push_back(entry("generalized_matrix", "generalized_matrix", {}, false, false, false, std::nullopt));
  out.push_back(entry("generalized_matrix_x_field", "generalized_matrix_x_field", {}, false, false, false, std::nullopt));
  out.push_back(entry("triangular_x_generalized", "triangular_x_generalized", {}, false, false, false, std::nullopt));
  return out;
}

}  // namespace fdalg
