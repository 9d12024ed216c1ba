#include "finslie/definition.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace finslie {

using nlohmann::json;

namespace {

std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

Rational read_scalar(const json& node, const std::string& where) {
  if (node.is_string()) {
    try {
      return Rational::parse(node.get<std::string>());
    } catch (const ParseError& e) {
      throw DefinitionError(where, e.what());
    }
  }
  if (node.is_number_integer()) return Rational(node.get<long>());
  throw DefinitionError(where, "expected a rational string \"p/q\" or an integer");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DefinitionError(where, std::string("missing field '") + key + "'");
  return *it;
}

ExactVector read_vector(const json& node, std::size_t dim, const std::string& where) {
  if (!node.is_array()) throw DefinitionError(where, "expected an array");
  if (node.size() != dim) {
    throw DefinitionError(where, "expected " + std::to_string(dim) + " entries, got " + std::to_string(node.size()));
  }
  ExactVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = read_scalar(node[i], pointer(where, i));
  return v;
}

ExactMatrix read_matrix(const json& node, std::size_t dim, const std::string& where) {
  if (!node.is_array() || node.size() != dim) {
    throw DefinitionError(where, "expected " + std::to_string(dim) + " rows");
  }
  ExactMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const ExactVector row = read_vector(node[i], dim, pointer(where, i));
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = row[j];
  }
  return m;
}

std::size_t read_index(const json& node, std::size_t dim, const std::string& where) {
  if (!node.is_number_integer()) throw DefinitionError(where, "expected an integer index");
  const long v = node.get<long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim) throw DefinitionError(where, "index out of range");
  return static_cast<std::size_t>(v);
}

json write_vector(const ExactVector& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(c.to_string());
  return arr;
}

json write_matrix(const ExactMatrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(write_vector(m.row(i)));
  return arr;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

DefinitionFile parse_definition(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DefinitionError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "malformed definition file");
  }
  if (!doc.is_object()) throw DefinitionError("/", "expected a JSON object");

  const json& dim_node = require(doc, "dim", "/");
  if (!dim_node.is_number_integer() || dim_node.get<long>() <= 0) {
    throw DefinitionError("/dim", "expected a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_node.get<long>());

  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != dim) throw DefinitionError("/labels", "expected " + std::to_string(dim) + " labels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!(*it)[i].is_string()) throw DefinitionError(pointer("/labels", i), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
      if (!seen.insert(labels.back()).second) throw DefinitionError(pointer("/labels", i), "duplicate label");
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }

  DefinitionFile def{LieAlgebra(labels), std::nullopt, std::nullopt, std::nullopt};

  if (auto it = doc.find("brackets"); it != doc.end()) {
    if (!it->is_array()) throw DefinitionError("/brackets", "expected an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t n = 0; n < it->size(); ++n) {
      const std::string where = pointer("/brackets", n);
      const json& entry = (*it)[n];
      if (!entry.is_object()) throw DefinitionError(where, "expected an object {i, j, coeffs}");
      const std::size_t i = read_index(require(entry, "i", where), dim, where + "/i");
      const std::size_t j = read_index(require(entry, "j", where), dim, where + "/j");
      const ExactVector coeffs = read_vector(require(entry, "coeffs", where), dim, where + "/coeffs");
      if (i == j && !coeffs.is_zero()) throw DefinitionError(where, "[e_i, e_i] must vanish");
      if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
        throw DefinitionError(where, "bracket of this pair given twice");
      }
      def.algebra.set_bracket(i, j, coeffs);
    }
  }

  if (auto it = doc.find("metric"); it != doc.end()) {
    try {
      def.metric.emplace(read_matrix(*it, dim, "/metric"));
    } catch (const InvalidMetric& e) {
      throw MetricDefinitionError("/metric", e.what());
    }
  }

  if (auto it = doc.find("Q"); it != doc.end()) def.q = read_vector(*it, dim, "/Q");

  if (auto it = doc.find("hypercomplex"); it != doc.end()) {
    if (!it->is_object()) throw DefinitionError("/hypercomplex", "expected an object {j1, j2, j3}");
    ComplexStructureTriple t;
    const char* keys[] = {"j1", "j2", "j3"};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string where = std::string("/hypercomplex/") + keys[k];
      t.j[k] = read_matrix(require(*it, keys[k], "/hypercomplex"), dim, where);
    }
    def.hypercomplex = std::move(t);
  }
  return def;
}

DefinitionFile load_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DefinitionError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_definition(buffer.str());
}

std::string serialize_definition(const DefinitionFile& def) {
  const LieAlgebra& g = def.algebra;
  json doc;
  doc["dim"] = g.dim();
  doc["labels"] = g.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const ExactVector b = g.basis_bracket(i, j);
      if (b.is_zero()) continue;
      brackets.push_back({{"i", i}, {"j", j}, {"coeffs", write_vector(b)}});
    }
  doc["brackets"] = std::move(brackets);
  if (def.metric) doc["metric"] = write_matrix(def.metric->gram());
  if (def.q) doc["Q"] = write_vector(*def.q);
  if (def.hypercomplex) {
    doc["hypercomplex"] = {{"j1", write_matrix(def.hypercomplex->j[0])},
                           {"j2", write_matrix(def.hypercomplex->j[1])},
                           {"j3", write_matrix(def.hypercomplex->j[2])}};
  }
  return doc.dump(2) + "\n";
}

ExactVector parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    values.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ExactVector(std::move(values));
}

}  // namespace finslie
