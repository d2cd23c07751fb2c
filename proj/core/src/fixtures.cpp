#include "holonomy/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holonomy/error.hpp"

namespace holo {

using nlohmann::json;

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse, "bad integer literal: " + s);
  }
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int p = int_from_string(s.substr(0, slash));
  Int q = int_from_string(s.substr(slash + 1));
  check(q > 0, ErrorKind::parse, "rational denominator must be positive: " + s);
  Rat r(p, q);
  r.canonicalize();
  return r;
}

namespace {

std::string str_field(const json& j, const char* key) {
  check(j.contains(key) && j[key].is_string(), ErrorKind::parse,
        std::string("expected string field '") + key + "'");
  return j[key].get<std::string>();
}

std::size_t size_field(const json& j, const char* key) {
  Int v = int_from_string(str_field(j, key));
  check(v >= 0, ErrorKind::parse, std::string(key) + " must be non-negative");
  return static_cast<std::size_t>(v.get_ui());
}

IntMatrix parse_int_matrix(const json& j) {
  check(j.is_array() && !j.empty(), ErrorKind::parse,
        "matrix must be a non-empty array of rows");
  std::size_t rows = j.size(), cols = j[0].size();
  std::vector<Int> entries;
  for (const json& row : j) {
    check(row.is_array() && row.size() == cols, ErrorKind::parse,
          "ragged matrix rows");
    for (const json& e : row) {
      check(e.is_string(), ErrorKind::parse, "matrix entry must be a string");
      entries.push_back(int_from_string(e.get<std::string>()));
    }
  }
  return IntMatrix(rows, cols, std::move(entries));
}

json emit_int_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix parse_rat_matrix(const json& j) {
  check(j.is_array() && !j.empty(), ErrorKind::parse,
        "matrix must be a non-empty array of rows");
  std::size_t rows = j.size(), cols = j[0].size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    check(j[i].is_array() && j[i].size() == cols, ErrorKind::parse,
          "ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) {
      check(j[i][k].is_string(), ErrorKind::parse,
            "matrix entry must be a string");
      m.at(i, k) = rat_from_string(j[i][k].get<std::string>());
    }
  }
  return m;
}

json emit_rat_matrix(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycRat parse_gaussian(const CycField& f, const json& j) {
  check(j.is_object() && j.contains("re") && j.contains("im"),
        ErrorKind::parse, "complex entry must be {\"re\",\"im\"}");
  Rat re = rat_from_string(str_field(j, "re"));
  Rat im = rat_from_string(str_field(j, "im"));
  CycRat z(f.degree);
  z[0] = re;
  if (im != 0) {
    check(f.order % 4 == 0, ErrorKind::parse,
          "field order must be divisible by 4 for imaginary entries");
    CycInt iota = cyc_root_power(f, f.order / 4);
    for (std::size_t k = 0; k < f.degree; ++k)
      z[k] += im * Rat(iota[k]);
  }
  return z;
}

json emit_gaussian(const CycField& f, const CycRat& z) {
  auto [re, im] = cyc_real_imag(f, z);
  return json{{"im", rat_to_string(im)}, {"re", rat_to_string(re)}};
}

Generator parse_generator(const json& j) {
  check(j.is_object(), ErrorKind::parse, "generator must be an object");
  Generator g;
  if (j.contains("perm")) {
    check(j["perm"].is_array(), ErrorKind::parse, "perm must be an array");
    std::vector<int> p;
    for (const json& e : j["perm"]) {
      check(e.is_string(), ErrorKind::parse, "perm entry must be a string");
      p.push_back(static_cast<int>(int_from_string(e.get<std::string>()).get_si()));
    }
    g.perm = std::move(p);
  } else if (j.contains("matrix")) {
    g.matrix = parse_int_matrix(j["matrix"]);
  } else {
    throw Error(ErrorKind::parse, "generator needs 'perm' or 'matrix'");
  }
  return g;
}

json emit_generator(const Generator& g) {
  if (g.perm) {
    json p = json::array();
    for (int v : *g.perm) p.push_back(std::to_string(v));
    return json{{"perm", std::move(p)}};
  }
  return json{{"matrix", emit_int_matrix(*g.matrix)}};
}

AbstractFixture parse_abstract(const json& j) {
  AbstractFixture fx;
  check(j.contains("group_generators") && j["group_generators"].is_array(),
        ErrorKind::parse, "abstract fixture needs group_generators");
  for (const json& g : j["group_generators"])
    fx.group_generators.push_back(parse_generator(g));
  fx.rank = size_field(j, "rank");
  check(j.contains("action") && j["action"].is_array(), ErrorKind::parse,
        "abstract fixture needs action matrices");
  for (const json& m : j["action"]) fx.action.push_back(parse_int_matrix(m));
  if (j.contains("cocycle")) {
    check(j["cocycle"].is_array(), ErrorKind::parse,
          "cocycle must be an array of strings");
    Cochain2 f;
    for (const json& e : j["cocycle"]) {
      check(e.is_string(), ErrorKind::parse, "cocycle entry must be a string");
      f.push_back(int_from_string(e.get<std::string>()));
    }
    fx.cocycle = std::move(f);
  }
  return fx;
}

json emit_abstract(const AbstractFixture& fx) {
  json j;
  json gens = json::array();
  for (const Generator& g : fx.group_generators)
    gens.push_back(emit_generator(g));
  j["group_generators"] = std::move(gens);
  j["rank"] = std::to_string(fx.rank);
  json action = json::array();
  for (const IntMatrix& m : fx.action) action.push_back(emit_int_matrix(m));
  j["action"] = std::move(action);
  if (fx.cocycle) {
    json f = json::array();
    for (const Int& v : *fx.cocycle) f.push_back(v.get_str());
    j["cocycle"] = std::move(f);
  }
  return j;
}

AffineFixture parse_affine(const json& j) {
  AffineFixture fx;
  check(j.contains("generators") && j["generators"].is_array() &&
            !j["generators"].empty(),
        ErrorKind::parse, "affine fixture needs generators");
  for (const json& g : j["generators"]) {
    AffinePair p;
    p.linear = parse_rat_matrix(g.at("linear"));
    check(g.contains("translation") && g["translation"].is_array(),
          ErrorKind::parse, "affine generator needs a translation");
    for (const json& e : g["translation"])
      p.translation.push_back(rat_from_string(e.get<std::string>()));
    check(p.linear.rows() == p.linear.cols() &&
              p.linear.rows() == p.translation.size(),
          ErrorKind::parse, "affine generator shape mismatch");
    fx.generators.push_back(std::move(p));
  }
  return fx;
}

json emit_affine(const AffineFixture& fx) {
  json gens = json::array();
  for (const AffinePair& p : fx.generators) {
    json t = json::array();
    for (const Rat& r : p.translation) t.push_back(rat_to_string(r));
    gens.push_back(json{{"linear", emit_rat_matrix(p.linear)},
                        {"translation", std::move(t)}});
  }
  return json{{"generators", std::move(gens)}};
}

ComplexFixture parse_complex(const json& j) {
  ComplexFixture fx;
  fx.field_order = static_cast<unsigned>(size_field(j, "field_order"));
  check(fx.field_order >= 1, ErrorKind::parse, "field_order must be >= 1");
  CycField f = cyclotomic_field(fx.field_order);
  check(j.contains("generators") && j["generators"].is_array() &&
            !j["generators"].empty(),
        ErrorKind::parse, "complex fixture needs generators");
  for (const json& g : j["generators"]) {
    ComplexAffine p;
    const json& lin = g.at("linear");
    check(lin.is_array() && !lin.empty(), ErrorKind::parse,
          "complex linear part must be a matrix");
    std::size_t n = lin.size();
    p.linear = cyc_mat_zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      check(lin[i].is_array() && lin[i].size() == n, ErrorKind::parse,
            "complex linear part must be square");
      for (std::size_t k = 0; k < n; ++k)
        p.linear.at(i, k) = parse_gaussian(f, lin[i][k]);
    }
    check(g.contains("translation") && g["translation"].is_array() &&
              g["translation"].size() == n,
          ErrorKind::parse, "complex generator shape mismatch");
    for (const json& e : g["translation"])
      p.translation.push_back(parse_gaussian(f, e));
    fx.generators.push_back(std::move(p));
  }
  return fx;
}

json emit_complex(const ComplexFixture& fx) {
  CycField f = cyclotomic_field(fx.field_order);
  json gens = json::array();
  for (const ComplexAffine& p : fx.generators) {
    json lin = json::array();
    for (std::size_t i = 0; i < p.linear.rows; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < p.linear.cols; ++k)
        row.push_back(emit_gaussian(f, p.linear.at(i, k)));
      lin.push_back(std::move(row));
    }
    json t = json::array();
    for (const CycRat& z : p.translation) t.push_back(emit_gaussian(f, z));
    gens.push_back(json{{"linear", std::move(lin)},
                        {"translation", std::move(t)}});
  }
  return json{{"field_order", std::to_string(fx.field_order)},
              {"generators", std::move(gens)}};
}

}  // namespace

FixtureDocument parse_fixture(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed document: ") + e.what());
  }
  check(j.is_object(), ErrorKind::parse, "document must be an object");

  FixtureDocument doc;
  Int version = int_from_string(str_field(j, "format_version"));
  check(version == 1, ErrorKind::parse, "unsupported format_version");
  doc.format_version = 1;
  doc.name = str_field(j, "name");
  doc.dimension = size_field(j, "dimension");
  if (j.contains("expected")) {
    check(j["expected"].is_object(), ErrorKind::parse,
          "expected must be an object of strings");
    for (auto& [k, v] : j["expected"].items()) {
      check(v.is_string(), ErrorKind::parse, "expected values must be strings");
      doc.expected[k] = v.get<std::string>();
    }
  }

  std::string kind = str_field(j, "kind");
  int populated = j.contains("abstract") + j.contains("affine") +
                  j.contains("complex");
  check(populated == 1, ErrorKind::parse,
        "exactly one of abstract/affine/complex must be present");
  if (kind == "abstract") {
    doc.kind = FixtureKind::abstract;
    check(j.contains("abstract"), ErrorKind::parse, "kind/payload mismatch");
    doc.abstract_data = parse_abstract(j["abstract"]);
  } else if (kind == "affine") {
    doc.kind = FixtureKind::affine;
    check(j.contains("affine"), ErrorKind::parse, "kind/payload mismatch");
    doc.affine_data = parse_affine(j["affine"]);
  } else if (kind == "complex") {
    doc.kind = FixtureKind::complex;
    check(j.contains("complex"), ErrorKind::parse, "kind/payload mismatch");
    doc.complex_data = parse_complex(j["complex"]);
  } else {
    throw Error(ErrorKind::parse, "unknown kind: " + kind);
  }
  return doc;
}

FixtureDocument load_fixture(const std::string& path) {
  std::ifstream in(path);
  check(in.good(), ErrorKind::parse, "cannot open fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::string serialize_fixture(const FixtureDocument& doc) {
  json j;
  j["format_version"] = std::to_string(doc.format_version);
  j["name"] = doc.name;
  j["dimension"] = std::to_string(doc.dimension);
  json expected = json::object();
  for (const auto& [k, v] : doc.expected) expected[k] = v;
  j["expected"] = std::move(expected);
  switch (doc.kind) {
    case FixtureKind::abstract:
      j["kind"] = "abstract";
      j["abstract"] = emit_abstract(*doc.abstract_data);
      break;
    case FixtureKind::affine:
      j["kind"] = "affine";
      j["affine"] = emit_affine(*doc.affine_data);
      break;
    case FixtureKind::complex:
      j["kind"] = "complex";
      j["complex"] = emit_complex(*doc.complex_data);
      break;
  }
  return j.dump(2) + "\n";
}

namespace {

RatVec rv(std::vector<Rat> v) { return v; }

AffinePair affine(const IntMatrix& linear, RatVec t) {
  return AffinePair{RatMatrix::from_int(linear), std::move(t)};
}

FixtureDocument torus_fixture(std::size_t dim) {
  FixtureDocument doc;
  doc.name = "torus-" + std::to_string(dim) + "d";
  doc.dimension = dim;
  doc.kind = FixtureKind::affine;
  doc.expected = {{"bieberbach", "true"},
                  {"components", "1"},
                  {"group_order", "1"},
                  {"homogeneous", "true"}};
  AffineFixture fx;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec t(dim, Rat(0));
    t[i] = 1;
    fx.generators.push_back(affine(IntMatrix::identity(dim), std::move(t)));
  }
  doc.affine_data = std::move(fx);
  return doc;
}

FixtureDocument klein_bottle_fixture() {
  FixtureDocument doc;
  doc.name = "klein-bottle";
  doc.dimension = 2;
  doc.kind = FixtureKind::affine;
  doc.expected = {{"bieberbach", "true"},
                  {"components", "2"},
                  {"group_order", "2"},
                  {"homogeneous", "false"}};
  AffineFixture fx;
  fx.generators.push_back(affine(IntMatrix::from_rows({{1, 0}, {0, -1}}),
                                 rv({Rat(1, 2), Rat(0)})));
  fx.generators.push_back(affine(IntMatrix::identity(2), rv({Rat(0), Rat(1)})));
  doc.affine_data = std::move(fx);
  return doc;
}

FixtureDocument half_turn_fixture() {
  FixtureDocument doc;
  doc.name = "half-turn-3d";
  doc.dimension = 3;
  doc.kind = FixtureKind::affine;
  doc.expected = {{"bieberbach", "true"},
                  {"components", "2"},
                  {"group_order", "2"},
                  {"homogeneous", "false"}};
  AffineFixture fx;
  fx.generators.push_back(
      affine(IntMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
             rv({Rat(1, 2), Rat(0), Rat(0)})));
  fx.generators.push_back(
      affine(IntMatrix::identity(3), rv({Rat(0), Rat(1), Rat(0)})));
  fx.generators.push_back(
      affine(IntMatrix::identity(3), rv({Rat(0), Rat(0), Rat(1)})));
  doc.affine_data = std::move(fx);
  return doc;
}

FixtureDocument hantzsche_wendt_fixture() {
  FixtureDocument doc;
  doc.name = "hantzsche-wendt";
  doc.dimension = 3;
  doc.kind = FixtureKind::affine;
  doc.expected = {{"bieberbach", "true"},
                  {"components", "3"},
                  {"group_order", "4"},
                  {"homogeneous", "false"}};
  AffineFixture fx;
  fx.generators.push_back(
      affine(IntMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
             rv({Rat(1, 2), Rat(1, 2), Rat(0)})));
  fx.generators.push_back(
      affine(IntMatrix::from_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
             rv({Rat(0), Rat(1, 2), Rat(1, 2)})));
  doc.affine_data = std::move(fx);
  return doc;
}

FixtureDocument split_c2_fixture() {
  FixtureDocument doc;
  doc.name = "split-c2";
  doc.dimension = 2;
  doc.kind = FixtureKind::affine;
  doc.expected = {{"bieberbach", "false"},
                  {"components", "2"},
                  {"group_order", "2"},
                  {"homogeneous", "false"}};
  AffineFixture fx;
  fx.generators.push_back(affine(IntMatrix::from_rows({{1, 0}, {0, -1}}),
                                 rv({Rat(0), Rat(0)})));
  fx.generators.push_back(affine(IntMatrix::identity(2), rv({Rat(1), Rat(0)})));
  fx.generators.push_back(affine(IntMatrix::identity(2), rv({Rat(0), Rat(1)})));
  doc.affine_data = std::move(fx);
  return doc;
}

CycRat gauss(const CycField& f, Rat re, Rat im) {
  CycRat z(f.degree);
  z[0] = std::move(re);
  if (im != 0) {
    CycInt iota = cyc_root_power(f, f.order / 4);
    for (std::size_t k = 0; k < f.degree; ++k) z[k] += im * Rat(iota[k]);
  }
  return z;
}

FixtureDocument complex_torus_fixture() {
  FixtureDocument doc;
  doc.name = "complex-torus";
  doc.dimension = 2;
  doc.kind = FixtureKind::complex;
  doc.expected = {{"bieberbach", "true"},
                  {"c_components", "1"},
                  {"components", "1"},
                  {"group_order", "1"},
                  {"homogeneous", "true"}};
  CycField f = cyclotomic_field(4);
  ComplexFixture fx;
  fx.field_order = 4;
  ComplexAffine one{cyc_mat_identity(f, 1), {gauss(f, Rat(1), Rat(0))}};
  ComplexAffine i{cyc_mat_identity(f, 1), {gauss(f, Rat(0), Rat(1))}};
  fx.generators = {one, i};
  doc.complex_data = std::move(fx);
  return doc;
}

FixtureDocument hyperelliptic_fixture() {
  FixtureDocument doc;
  doc.name = "hyperelliptic";
  doc.dimension = 4;
  doc.kind = FixtureKind::complex;
  doc.expected = {{"bieberbach", "true"},
                  {"c_components", "2"},
                  {"components", "2"},
                  {"group_order", "2"},
                  {"homogeneous", "false"}};
  CycField f = cyclotomic_field(4);
  ComplexFixture fx;
  fx.field_order = 4;
  CycMatrix sigma = cyc_mat_identity(f, 2);
  sigma.at(1, 1) = gauss(f, Rat(-1), Rat(0));
  CycRat zero = gauss(f, Rat(0), Rat(0));
  fx.generators.push_back(
      ComplexAffine{sigma, {gauss(f, Rat(1, 2), Rat(0)), zero}});
  fx.generators.push_back(ComplexAffine{cyc_mat_identity(f, 2),
                                        {gauss(f, Rat(0), Rat(1)), zero}});
  fx.generators.push_back(ComplexAffine{cyc_mat_identity(f, 2),
                                        {zero, gauss(f, Rat(1), Rat(0))}});
  fx.generators.push_back(ComplexAffine{cyc_mat_identity(f, 2),
                                        {zero, gauss(f, Rat(0), Rat(1))}});
  doc.complex_data = std::move(fx);
  return doc;
}

}  // namespace

std::vector<FixtureDocument> builtin_catalog() {
  std::vector<FixtureDocument> catalog;
  catalog.push_back(torus_fixture(1));
  catalog.push_back(torus_fixture(2));
  catalog.push_back(torus_fixture(3));
  catalog.push_back(klein_bottle_fixture());
  catalog.push_back(half_turn_fixture());
  catalog.push_back(hantzsche_wendt_fixture());
  catalog.push_back(split_c2_fixture());
  catalog.push_back(complex_torus_fixture());
  catalog.push_back(hyperelliptic_fixture());
  std::sort(catalog.begin(), catalog.end(),
            [](const FixtureDocument& a, const FixtureDocument& b) {
              return a.name < b.name;
            });
  return catalog;
}

std::vector<FixtureDocument> load_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  check(fs::is_directory(dir), ErrorKind::parse,
        "catalog directory not found: " + dir);
  std::vector<FixtureDocument> catalog;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      catalog.push_back(load_fixture(entry.path().string()));
  std::sort(catalog.begin(), catalog.end(),
            [](const FixtureDocument& a, const FixtureDocument& b) {
              return a.name < b.name;
            });
  return catalog;
}

}  // namespace holo
