#include "ctgeo/model.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ctgeo {

namespace {

using nlohmann::json;

ScalarField parse_field_text(const json& value, const std::string& field, const ChartPtr& chart) {
  if (!value.is_string()) throw ModelError(field, "expected expression text");
  try {
    return ScalarField::parse(value.get<std::string>(), chart);
  } catch (const ParseError& e) {
    throw ModelError(field, e.what());
  }
}

SfMatrix parse_matrix(const json& value, const std::string& field, const ChartPtr& chart, int n) {
  if (!value.is_array() || static_cast<int>(value.size()) != n)
    throw ModelError(field, "expected an n x n matrix of expression texts");
  SfMatrix out(chart, n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = value[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ModelError(field, "row " + std::to_string(i) + " must have " + std::to_string(n) +
                                  " entries");
    for (int j = 0; j < n; ++j)
      out.at(i, j) = parse_field_text(row[static_cast<std::size_t>(j)],
                                      field + "[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "]",
                                      chart);
  }
  return out;
}

std::vector<Interval> parse_box(const json& value, const std::string& field, int n) {
  if (!value.is_array() || static_cast<int>(value.size()) != n)
    throw ModelError(field, "expected one [lo, hi] interval per coordinate");
  std::vector<Interval> out;
  for (const json& pair : value) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw ModelError(field, "intervals must be [lo, hi] number pairs");
    Interval iv{pair[0].get<double>(), pair[1].get<double>()};
    if (!(iv.lo < iv.hi)) throw ModelError(field, "interval bounds must satisfy lo < hi");
    out.push_back(iv);
  }
  return out;
}

}  // namespace

ModelFile parse_model(const std::string& json_text, std::string id) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError("<document>", e.what());
  }
  if (!doc.is_object()) throw ModelError("<document>", "model must be a JSON object");

  static const char* known_fields[] = {"dimension",         "hamiltonian", "lagrangian",
                                       "connection",        "tangent_structure",
                                       "vector_field",      "sampling"};
  for (const auto& [key, _] : doc.items()) {
    bool known = false;
    for (const char* f : known_fields) known |= (key == f);
    if (!known) throw ModelError(key, "unknown field");
  }

  ModelFile m;
  m.id = std::move(id);
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw ModelError("dimension", "required positive integer");
  m.dimension = doc["dimension"].get<int>();
  if (m.dimension < 1) throw ModelError("dimension", "must be at least 1");
  m.cotangent_chart = Chart::cotangent(m.dimension);
  m.tangent_chart = Chart::tangent(m.dimension);

  if (doc.contains("hamiltonian"))
    m.hamiltonian = parse_field_text(doc["hamiltonian"], "hamiltonian", m.cotangent_chart);
  if (doc.contains("lagrangian"))
    m.lagrangian = parse_field_text(doc["lagrangian"], "lagrangian", m.tangent_chart);
  if (doc.contains("connection"))
    m.connection = parse_matrix(doc["connection"], "connection", m.cotangent_chart, m.dimension);
  if (doc.contains("tangent_structure"))
    m.tangent_structure = parse_matrix(doc["tangent_structure"], "tangent_structure",
                                       m.cotangent_chart, m.dimension);

  if (doc.contains("vector_field")) {
    const json& vf = doc["vector_field"];
    if (!vf.is_object() || !vf.contains("xi") || !vf.contains("chi"))
      throw ModelError("vector_field", "expected an object with 'xi' and 'chi' arrays");
    auto parse_components = [&](const json& arr, const std::string& field) {
      if (!arr.is_array() || static_cast<int>(arr.size()) != m.dimension)
        throw ModelError(field, "expected " + std::to_string(m.dimension) + " expression texts");
      std::vector<ScalarField> out;
      for (int i = 0; i < m.dimension; ++i)
        out.push_back(parse_field_text(arr[static_cast<std::size_t>(i)],
                                       field + "[" + std::to_string(i) + "]", m.cotangent_chart));
      return out;
    };
    m.vector_field = PhaseVectorField::from_parts(
        m.cotangent_chart, parse_components(vf["xi"], "vector_field.xi"),
        parse_components(vf["chi"], "vector_field.chi"));
  }

  if (!m.hamiltonian && !(m.tangent_structure && m.vector_field))
    throw ModelError("<document>",
                     "model needs a 'hamiltonian' or both 'tangent_structure' and 'vector_field'");

  if (doc.contains("sampling")) {
    const json& s = doc["sampling"];
    if (!s.is_object()) throw ModelError("sampling", "expected an object");
    if (s.contains("x_box")) m.sampling.x_box = parse_box(s["x_box"], "sampling.x_box", m.dimension);
    if (s.contains("p_box")) m.sampling.p_box = parse_box(s["p_box"], "sampling.p_box", m.dimension);
    if (s.contains("p_min_norm")) {
      if (!s["p_min_norm"].is_number()) throw ModelError("sampling.p_min_norm", "expected a number");
      m.sampling.p_min_norm = s["p_min_norm"].get<double>();
    }
    if (s.contains("seed")) {
      if (!s["seed"].is_number_integer()) throw ModelError("sampling.seed", "expected an integer");
      m.sampling.seed = s["seed"].get<std::uint64_t>();
    }
    if (s.contains("count")) {
      if (!s["count"].is_number_integer() || s["count"].get<int>() < 1)
        throw ModelError("sampling.count", "expected a positive integer");
      m.sampling.count = s["count"].get<int>();
    }
  }
  return m;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("<document>", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), std::filesystem::path(path).stem().string());
}

}  // namespace ctgeo
