#include <nlohmann/json.hpp>

#include "bivalence/error.hpp"
#include "bivalence/lattice.hpp"

namespace bivalence {
namespace {

using nlohmann::json;

std::vector<std::pair<std::string, std::string>> read_pairs(const json& doc, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!doc.contains(key)) return out;
  const auto& list = doc.at(key);
  if (!list.is_array()) throw Error(Errc::MalformedInput, std::string("'") + key + "' must be a list");
  for (const auto& item : list) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw Error(Errc::MalformedInput, std::string("entries of '") + key + "' must be 2-element string lists");
    }
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

} // namespace

LatticeSpec parse_lattice_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::MalformedInput, std::string("lattice file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::MalformedInput, "lattice file must be an object");
  if (!doc.contains("elements") || !doc.at("elements").is_array()) {
    throw Error(Errc::MalformedInput, "lattice file needs an 'elements' list");
  }

  LatticeSpec spec;
  for (const auto& e : doc.at("elements")) {
    if (!e.is_string()) throw Error(Errc::MalformedInput, "element names must be strings");
    spec.elements.push_back(e.get<std::string>());
  }
  spec.order = read_pairs(doc, "order");
  spec.involution = read_pairs(doc, "involution");
  return spec;
}

std::string render_lattice_spec(const LatticeSpec& spec) {
  nlohmann::ordered_json doc;
  doc["elements"] = spec.elements;
  auto pairs = [](const auto& list) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [a, b] : list) arr.push_back({a, b});
    return arr;
  };
  doc["order"] = pairs(spec.order);
  doc["involution"] = pairs(spec.involution);
  return doc.dump(2) + "\n";
}

} // namespace bivalence
