#include "document.hpp"

#include <vector>

#include "dirichlet/text.hpp"

namespace lab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string csv_value(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null:
      return "";
    case Json::value_t::string:
      return csv_field(v.get<std::string>());
    case Json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case Json::value_t::number_float:
      return dirichlet::format_double(v.get<double>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
      return v.dump();
    default:
      return csv_field(v.dump());
  }
}

// Nested objects become dotted columns ("value.re"); arrays are skipped.
void flatten(const Json& object, const std::string& prefix,
             std::vector<std::pair<std::string, const Json*>>& out) {
  for (const auto& [key, value] : object.items()) {
    if (value.is_object()) {
      flatten(value, prefix + key + '.', out);
    } else if (!value.is_array()) {
      out.emplace_back(prefix + key, &value);
    }
  }
}

}  // namespace

void write_json(std::ostream& out, const Document& doc) {
  Json root;
  root["tool"] = "dirichlet-lab";
  root["version"] = DIRICHLET_VERSION;
  root["config"] = doc.config;
  for (const auto& [key, value] : doc.result.items()) root[key] = value;
  out << root.dump(2) << '\n';
}

void write_csv(std::ostream& out, const Document& doc) {
  if (!doc.columns.empty()) {
    for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i];
    out << '\n';
    for (const auto& row : doc.result.at("rows")) {
      for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        const auto cell = row.find(doc.columns[i]);
        out << (i ? "," : "") << (cell == row.end() ? "" : csv_value(*cell));
      }
      out << '\n';
    }
    return;
  }
  out << "field,value\n";
  std::vector<std::pair<std::string, const Json*>> cells;
  flatten(doc.result, "", cells);
  for (const auto& [key, value] : cells) out << key << ',' << csv_value(*value) << '\n';
}

}  // namespace lab
