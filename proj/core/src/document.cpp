#include "affcryst/document.hpp"

#include "json_convert.hpp"

namespace affcryst {

namespace jsonio {

namespace {

const ordered_json& require_key(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

int int_from(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Scalar scalar_from_json(const ordered_json& j, long d) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_object()) {
    if (d == 0)
      throw ParseError("quadratic scalar without a Qsqrt field context");
    mpq_class a = parse_rational(require_key(j, "a").get<std::string>());
    mpq_class b = parse_rational(require_key(j, "b").get<std::string>());
    return Scalar(a, b, d);
  }
  throw ParseError("scalar must be a string, an integer, or an {a,b} object");
}

ordered_json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_str(s.rat());
  ordered_json j;
  j["a"] = rational_str(s.rat());
  j["b"] = rational_str(s.surd());
  return j;
}

Vec vec_from_json(const ordered_json& j, long d) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(scalar_from_json(e, d));
  return v;
}

ordered_json vec_to_json(const Vec& v) {
  ordered_json j = ordered_json::array();
  for (const auto& s : v) j.push_back(scalar_to_json(s));
  return j;
}

Matrix matrix_from_json(const ordered_json& j, long d) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix must be a nonempty array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) rows.push_back(vec_from_json(row, d));
  return Matrix::from_rows(rows);
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json j = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) j.push_back(vec_to_json(m.row(r)));
  return j;
}

long disc_from_field(const ordered_json& doc) {
  auto it = doc.find("field");
  if (it == doc.end()) return 0;
  std::string type = require_key(*it, "type").get<std::string>();
  if (type == "Q") return 0;
  if (type == "Qsqrt") {
    long d = require_key(*it, "d").get<long>();
    if (d <= 1) throw ParseError("Qsqrt discriminant must exceed 1");
    return d;
  }
  throw ParseError("unknown field type '" + type + "'");
}

ordered_json field_to_json(long d) {
  ordered_json j;
  if (d == 0) {
    j["type"] = "Q";
  } else {
    j["type"] = "Qsqrt";
    j["d"] = d;
  }
  return j;
}

namespace {

long disc_of_vec(const Vec& v, long d) {
  for (const auto& s : v) d = merge_disc(d, s.disc());
  return d;
}

long disc_of_matrix(const Matrix& m, long d) {
  return disc_of_vec(m.flatten(), d);
}

}  // namespace

long lie_disc(const LieAlgebra& lie) {
  long d = 0;
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = i + 1; j < lie.dim(); ++j)
      d = disc_of_vec(lie.bracket_basis(i, j), d);
  return d;
}

LieAlgebra lie_from_json(const ordered_json& j) {
  int n = int_from(require_key(j, "n"), "n");
  long d = disc_from_field(j);
  LieAlgebra lie(n);
  const ordered_json& brackets = require_key(j, "brackets");
  if (!brackets.is_array()) throw ParseError("brackets must be an array");
  for (const auto& entry : brackets) {
    if (!entry.is_array() || entry.size() != 3)
      throw ParseError("bracket entries are [i, j, [coeff per k]]");
    int bi = int_from(entry[0], "bracket index");
    int bj = int_from(entry[1], "bracket index");
    if (bi < 1 || bj < 1 || bi > n || bj > n || bi >= bj)
      throw ParseError("bracket indices are 1-based with i < j");
    lie.set_bracket(bi - 1, bj - 1, vec_from_json(entry[2], d));
  }
  return lie;
}

ordered_json lie_to_json(const LieAlgebra& lie) {
  ordered_json j;
  j["kind"] = "lie";
  j["n"] = lie.dim();
  j["field"] = field_to_json(lie_disc(lie));
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < lie.dim(); ++i)
    for (int k = i + 1; k < lie.dim(); ++k) {
      Vec b = lie.bracket_basis(i, k);
      if (is_zero(b)) continue;
      brackets.push_back(ordered_json::array({i + 1, k + 1, vec_to_json(b)}));
    }
  j["brackets"] = brackets;
  return j;
}

AffineRep rep_from_json(const ordered_json& j) {
  LieAlgebra lie = lie_from_json(require_key(j, "algebra"));
  long d = lie_disc(lie);
  d = merge_disc(d, disc_from_field(require_key(j, "algebra")));
  d = merge_disc(d, disc_from_field(j));
  const ordered_json& images = require_key(j, "images");
  if (!images.is_array()) throw ParseError("images must be an array");
  std::vector<AffineLieElement> ys;
  for (const auto& img : images) {
    Matrix m = matrix_from_json(require_key(img, "M"), d);
    Vec w = vec_from_json(require_key(img, "w"), d);
    ys.push_back(AffineLieElement(m, w));
  }
  return AffineRep(std::move(lie), std::move(ys));
}

ordered_json rep_to_json(const AffineRep& rep) {
  long d = lie_disc(rep.algebra());
  for (const auto& y : rep.images()) d = disc_of_matrix(y.matrix(), d);
  ordered_json j;
  j["kind"] = "rep";
  j["algebra"] = lie_to_json(rep.algebra());
  if (d != 0) j["algebra"]["field"] = field_to_json(d);
  ordered_json images = ordered_json::array();
  for (const auto& y : rep.images()) {
    ordered_json img;
    img["M"] = matrix_to_json(y.linear_part());
    img["w"] = vec_to_json(y.translation_part());
    images.push_back(img);
  }
  j["images"] = images;
  return j;
}

PolycyclicRep pcrep_from_json(const ordered_json& j) {
  int n = int_from(require_key(j, "n"), "n");
  long d = disc_from_field(j);
  const ordered_json& gens = require_key(j, "generators");
  if (!gens.is_array()) throw ParseError("generators must be an array");
  std::vector<AffineMap> maps;
  for (const auto& g : gens) {
    Matrix m = matrix_from_json(g, d);
    if (m.rows() != n + 1 || m.cols() != n + 1)
      throw ParseError("polycyclic generators are (n+1)x(n+1) matrices");
    maps.push_back(AffineMap(m));
  }
  int supplement = int_from(require_key(j, "supplement"), "supplement");
  return PolycyclicRep(n, std::move(maps), supplement);
}

ordered_json pcrep_to_json(const PolycyclicRep& rep) {
  long d = 0;
  for (const auto& g : rep.generators()) d = disc_of_matrix(g.matrix(), d);
  ordered_json j;
  j["kind"] = "pcrep";
  j["n"] = rep.dim();
  j["field"] = field_to_json(d);
  ordered_json gens = ordered_json::array();
  for (const auto& g : rep.generators()) gens.push_back(matrix_to_json(g.matrix()));
  j["generators"] = gens;
  j["supplement"] = rep.supplement_size();
  return j;
}

CAProduct ca_from_json(const ordered_json& j) {
  int n = int_from(require_key(j, "n"), "n");
  long d = disc_from_field(j);
  const ordered_json& table = require_key(j, "d");
  if (!table.is_array() || static_cast<int>(table.size()) != n)
    throw ParseError("product table must be an n x n array of coefficient lists");
  CAProduct c(n);
  for (int i = 0; i < n; ++i) {
    if (!table[i].is_array() || static_cast<int>(table[i].size()) != n)
      throw ParseError("product table must be an n x n array of coefficient lists");
    for (int k = i; k < n; ++k) {
      Vec v = vec_from_json(table[i][k], d);
      Vec mirrored = vec_from_json(table[k][i], d);
      if (v != mirrored)
        throw InvariantError("product table is not symmetric");
      c.set(i, k, v);
    }
  }
  return c;
}

ordered_json ca_to_json(const CAProduct& product) {
  long d = 0;
  for (int i = 0; i < product.dim(); ++i)
    for (int k = 0; k < product.dim(); ++k)
      d = disc_of_vec(product.table(i, k), d);
  ordered_json j;
  j["kind"] = "ca";
  j["n"] = product.dim();
  if (d != 0) j["field"] = field_to_json(d);
  ordered_json table = ordered_json::array();
  for (int i = 0; i < product.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < product.dim(); ++k)
      row.push_back(vec_to_json(product.table(i, k)));
    table.push_back(row);
  }
  j["d"] = table;
  return j;
}

ExtensionDocument ext_from_json(const ordered_json& j) {
  AffineRep base = rep_from_json(require_key(j, "rep"));
  long d = disc_from_field(j);
  const ordered_json& autos = require_key(j, "autos");
  if (!autos.is_array()) throw ParseError("autos must be an array");
  std::vector<ExtensionAuto> entries;
  for (const auto& a : autos) {
    Matrix phi = matrix_from_json(require_key(a, "phi"), d);
    int order = int_from(require_key(a, "order"), "order");
    entries.push_back({std::move(phi), order});
  }
  const ordered_json& relations = require_key(j, "relations");
  if (!relations.is_array()) throw ParseError("relations must be an array");
  std::vector<std::vector<int>> words;
  for (const auto& w : relations) {
    if (!w.is_array()) throw ParseError("relation words are arrays of letters");
    std::vector<int> word;
    for (const auto& letter : w) {
      int v = int_from(letter, "relation letter");
      if (v == 0) throw ParseError("relation letters are nonzero");
      word.push_back(v);
    }
    words.push_back(std::move(word));
  }
  ExtensionDocument doc{ExtensionSpec{std::move(base), std::move(entries),
                                      std::move(words)},
                        std::nullopt};
  if (auto it = j.find("lifts"); it != j.end()) {
    std::vector<AffineMap> lifts;
    for (const auto& l : *it) lifts.push_back(AffineMap(matrix_from_json(l, d)));
    doc.lifts = std::move(lifts);
  }
  return doc;
}

}  // namespace jsonio

Document parse_document(const std::string& text) {
  jsonio::ordered_json j;
  try {
    j = jsonio::ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string())
    throw ParseError("document needs a string 'kind'");
  std::string kind = kind_it->get<std::string>();

  Document doc;
  if (auto it = j.find("schema"); it != j.end()) {
    doc.schema = it->get<int>();
    if (doc.schema != 1) throw ParseError("unsupported schema version");
  }

  if (kind == "lie") {
    LieDocument lie{jsonio::lie_from_json(j), std::nullopt, std::nullopt};
    if (auto it = j.find("weights"); it != j.end()) {
      Grading g;
      for (const auto& w : *it) g.weights.push_back(w.get<int>());
      lie.grading = std::move(g);
    }
    if (auto it = j.find("derivation"); it != j.end())
      lie.derivation =
          jsonio::matrix_from_json(*it, jsonio::disc_from_field(j));
    doc.payload = std::move(lie);
  } else if (kind == "rep") {
    doc.payload = jsonio::rep_from_json(j);
  } else if (kind == "pcrep") {
    doc.payload = jsonio::pcrep_from_json(j);
  } else if (kind == "ca") {
    doc.payload = jsonio::ca_from_json(j);
  } else if (kind == "ext") {
    doc.payload = jsonio::ext_from_json(j);
  } else {
    throw ParseError("unknown document kind '" + kind + "'");
  }
  return doc;
}

namespace {

std::string with_schema(jsonio::ordered_json j) {
  jsonio::ordered_json out;
  out["schema"] = 1;
  for (auto& [key, value] : j.items()) out[key] = value;
  return out.dump(2);
}

}  // namespace

std::string emit_document(const LieAlgebra& lie) {
  return with_schema(jsonio::lie_to_json(lie));
}
std::string emit_document(const AffineRep& rep) {
  return with_schema(jsonio::rep_to_json(rep));
}
std::string emit_document(const PolycyclicRep& rep) {
  return with_schema(jsonio::pcrep_to_json(rep));
}
std::string emit_document(const CAProduct& product) {
  return with_schema(jsonio::ca_to_json(product));
}

}  // namespace affcryst
