#include "packing/design_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace packing {

using nlohmann::json;
using nlohmann::ordered_json;

int DesignDocument::v() const {
  return std::visit([](const auto& d) { return d.v(); }, design);
}

DesignParams DesignDocument::params() const { return DesignParams(v(), k.value_or(v()), t, lambda); }

namespace {

int required_int(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  const auto& value = j.at(key);
  if (!value.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return value.get<int>();
}

}  // namespace

DesignDocument parse_design(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("design file must contain a JSON object");

  DesignDocument doc;
  const int v = required_int(j, "v");
  if (j.contains("k") && !j.at("k").is_null()) doc.k = required_int(j, "k");
  doc.t = j.contains("t") ? required_int(j, "t") : 2;
  doc.lambda = j.contains("lambda") ? required_int(j, "lambda") : 1;
  bool directed = false;
  if (j.contains("directed")) {
    if (!j.at("directed").is_boolean()) throw FormatError("field \"directed\" must be a boolean");
    directed = j.at("directed").get<bool>();
  }
  if (!j.contains("blocks") || !j.at("blocks").is_array()) throw FormatError("field \"blocks\" must be an array");

  std::vector<Block> blocks;
  for (const auto& jb : j.at("blocks")) {
    if (!jb.is_array()) throw FormatError("every block must be an array of integers");
    Block b;
    for (const auto& x : jb) {
      if (!x.is_number_integer()) throw FormatError("every point must be an integer");
      b.push_back(x.get<int>());
    }
    blocks.push_back(std::move(b));
  }
  if (directed) {
    doc.design = DirectedPackingDesign(v, std::move(blocks));
  } else {
    doc.design = PackingDesign(v, std::move(blocks));
  }
  return doc;
}

std::string serialize_design(const DesignDocument& doc) {
  ordered_json j;
  j["v"] = doc.v();
  j["k"] = doc.k ? ordered_json(*doc.k) : ordered_json(nullptr);
  j["t"] = doc.t;
  j["lambda"] = doc.lambda;
  j["directed"] = doc.directed();
  j["blocks"] = std::visit([](const auto& d) { return ordered_json(d.blocks()); }, doc.design);
  return j.dump() + "\n";
}

DesignDocument read_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_design(buffer.str());
}

void write_design(const DesignDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << serialize_design(doc);
}

}  // namespace packing
