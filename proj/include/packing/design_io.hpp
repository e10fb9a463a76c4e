#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "packing/core.hpp"

namespace packing {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk design: {"v", "k" (int or null), "t", "lambda", "directed", "blocks"}; points 0-based.
struct DesignDocument {
  std::optional<int> k;  // nullopt for variable block sizes
  int t = 2;
  int lambda = 1;
  std::variant<PackingDesign, DirectedPackingDesign> design;

  int v() const;
  bool directed() const { return std::holds_alternative<DirectedPackingDesign>(design); }
  /// Params for validation; for variable-size documents k is taken as v.
  DesignParams params() const;
};

/// Parse failures throw FormatError; structural violations throw DesignError.
DesignDocument parse_design(const std::string& text);
std::string serialize_design(const DesignDocument& doc);

DesignDocument read_design(const std::filesystem::path& path);
void write_design(const DesignDocument& doc, const std::filesystem::path& path);

}  // namespace packing
