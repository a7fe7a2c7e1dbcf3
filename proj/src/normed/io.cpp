#include "calab/normed/io.hpp"

#include <cmath>
#include <fstream>

#include "calab/error.hpp"

namespace calab::normed {

using nlohmann::json;

namespace {

double parse_p(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return kInf;
    throw InvalidArgument("space.p: expected a number or \"inf\"");
  }
  if (!j.is_number()) throw InvalidArgument("space.p: expected a number or \"inf\"");
  return j.get<double>();
}

cplx parse_entry(const json& j, Field field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    if (field == Field::Real && j[1].get<double>() != 0.0)
      throw InvalidArgument("complex entry in a real space");
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InvalidArgument("vector entry must be a number or an [re, im] pair");
}

json entry_to_json(const cplx& z, Field field) {
  if (field == Field::Real) return z.real();
  return json::array({z.real(), z.imag()});
}

}  // namespace

FiniteNormedSpace space_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("space must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "kind" && key != "p" && key != "dim" && key != "field")
      throw InvalidArgument("space: unknown field '" + key + "'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const std::string field_s = j.value("field", std::string("real"));
  if (field_s != "real" && field_s != "complex") throw InvalidArgument("space.field must be real or complex");
  const Field field = field_s == "real" ? Field::Real : Field::Complex;
  if (!j.contains("dim") || !j.at("dim").is_number_unsigned())
    throw InvalidArgument("space.dim must be a positive integer");
  const auto dim = j.at("dim").get<std::size_t>();
  if (kind == "lp") {
    if (!j.contains("p")) throw InvalidArgument("lp space requires p");
    return FiniteNormedSpace::lp(parse_p(j.at("p")), dim, field);
  }
  if (kind == "sup") return FiniteNormedSpace::sup(dim, field);
  if (kind == "matrix") return FiniteNormedSpace::matrix(dim, field);
  throw InvalidArgument("space.kind must be lp, sup, or matrix");
}

json space_to_json(const FiniteNormedSpace& space) {
  json j;
  switch (space.kind()) {
    case SpaceKind::Lp:
      j["kind"] = "lp";
      if (std::isinf(space.p()))
        j["p"] = "inf";
      else
        j["p"] = space.p();
      j["dim"] = space.dimension();
      break;
    case SpaceKind::SupOverPoints:
      j["kind"] = "sup";
      j["dim"] = space.dimension();
      break;
    case SpaceKind::MatrixSpectral:
      j["kind"] = "matrix";
      j["dim"] = space.matrix_order();
      break;
  }
  j["field"] = to_string(space.field());
  return j;
}

VectorFamily family_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("family must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "space" && key != "vectors" && key != "labels")
      throw InvalidArgument("family: unknown field '" + key + "'");
  }
  const FiniteNormedSpace space = space_from_json(j.at("space"));
  const json& vs = j.at("vectors");
  if (!vs.is_array()) throw InvalidArgument("vectors must be an array");
  std::vector<Vec> vectors;
  for (const auto& v : vs) {
    if (!v.is_array()) throw InvalidArgument("each vector must be an array");
    Vec coords;
    const std::size_t d = space.matrix_order();
    const bool nested = space.kind() == SpaceKind::MatrixSpectral && v.size() == d && v[0].is_array() &&
                        v[0].size() == d && (space.field() == Field::Real || v[0][0].is_array());
    if (nested) {
      for (const auto& row : v) {
        if (!row.is_array()) throw InvalidArgument("matrix rows must be arrays");
        for (const auto& e : row) coords.push_back(parse_entry(e, space.field()));
      }
    } else {
      for (const auto& e : v) coords.push_back(parse_entry(e, space.field()));
    }
    vectors.push_back(std::move(coords));
  }
  std::vector<long long> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<long long>>();
  return VectorFamily(space, std::move(vectors), std::move(labels));
}

json family_to_json(const VectorFamily& family) {
  json j;
  j["space"] = space_to_json(family.space());
  json vs = json::array();
  for (const auto& v : family.vectors()) {
    json row = json::array();
    for (const auto& z : v) row.push_back(entry_to_json(z, family.space().field()));
    vs.push_back(std::move(row));
  }
  j["vectors"] = std::move(vs);
  if (!family.labels().empty()) j["labels"] = family.labels();
  return j;
}

VectorFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  return family_from_json(j);
}

}  // namespace calab::normed
