#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace lab {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };

// A finished run: the echoed configuration and the result object.
// CSV is a projection: with `columns` set, the flat objects in result["rows"]
// as a table; otherwise a field,value listing of the scalar result fields
// (nested objects flattened to dotted names, arrays omitted).
struct Document {
  Json config = Json::object();
  Json result = Json::object();
  std::vector<std::string> columns;
};

void write_json(std::ostream& out, const Document& doc);
void write_csv(std::ostream& out, const Document& doc);

}  // namespace lab
