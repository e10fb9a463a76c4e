#include "packing/codes.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include <json.hpp>

#include "packing/combinatorics.hpp"

namespace packing {

ConstantWeightCode to_constant_weight(const PackingDesign& design, const DesignParams& params) {
  if (params.lambda != 1) throw CodeError("constant-weight export needs lambda = 1");
  const auto report = validate_packing(design, params, BlockSizeMode::Uniform);
  if (!report.valid) throw CodeError("design is not a valid packing at lambda = 1");
  ConstantWeightCode code{params.v, params.k, {}};
  for (const auto& block : design.blocks()) {
    std::vector<std::uint8_t> word(params.v, 0);
    for (int x : block) word[x] = 1;
    code.words.push_back(std::move(word));
  }
  return code;
}

std::optional<int> min_hamming_distance(const ConstantWeightCode& code) {
  if (code.words.size() < 2) return std::nullopt;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    for (std::size_t j = i + 1; j < code.words.size(); ++j) {
      int d = 0;
      for (int x = 0; x < code.length; ++x) d += code.words[i][x] != code.words[j][x];
      best = std::min(best, d);
    }
  }
  return best;
}

bool has_distinct_words(const ConstantWeightCode& code) {
  std::set<std::vector<std::uint8_t>> seen(code.words.begin(), code.words.end());
  return seen.size() == code.words.size();
}

IndelCode to_indel_code(const DirectedPackingDesign& design, const DesignParams& params) {
  const auto report = validate_directed(design, params, BlockSizeMode::Uniform);
  if (!report.valid) throw CodeError("design is not a valid directed packing");
  IndelCode code;
  code.alphabet_size = params.v;
  code.word_length = params.k;
  code.words = design.blocks();
  code.deletion_capability = params.k - params.t;
  return code;
}

int lcs_length(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      cur[j + 1] = a[i] == b[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::optional<int> max_pairwise_lcs(const IndelCode& code) {
  if (code.words.size() < 2) return std::nullopt;
  int best = 0;
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    for (std::size_t j = i + 1; j < code.words.size(); ++j) {
      best = std::max(best, lcs_length(code.words[i], code.words[j]));
    }
  }
  return best;
}

bool deletion_check_enumerative(const IndelCode& code, int s) {
  if (s < 0 || s > code.word_length) throw CodeError("deletion count must lie in [0, k]");
  const int keep = code.word_length - s;
  std::map<std::vector<int>, std::size_t> owner;
  for (std::size_t w = 0; w < code.words.size(); ++w) {
    // Different deletion positions can leave the same residue; compare residue sets.
    std::set<std::vector<int>> residues;
    std::vector<int> positions(code.words[w].size());
    for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = static_cast<int>(i);
    for_each_combination(positions, keep, [&](std::span<const int> kept) {
      std::vector<int> residue;
      for (int p : kept) residue.push_back(code.words[w][p]);
      residues.insert(std::move(residue));
    });
    for (auto& residue : residues) {
      auto [it, inserted] = owner.emplace(residue, w);
      if (!inserted && it->second != w) return false;
    }
  }
  return true;
}

bool deletion_check_lcs(const IndelCode& code, int s) {
  if (s < 0 || s > code.word_length) throw CodeError("deletion count must lie in [0, k]");
  const auto lcs = max_pairwise_lcs(code);
  return !lcs || *lcs <= code.word_length - s - 1;
}

bool deletion_channel_check(const IndelCode& code, int s) {
  const bool by_lcs = deletion_check_lcs(code, s);
  if (code.word_length <= 8) {
    const bool by_enumeration = deletion_check_enumerative(code, s);
    if (by_enumeration != by_lcs) throw std::logic_error("enumerative and LCS deletion checks disagree");
  }
  return by_lcs;
}

IndelCode add_constant_words(const IndelCode& code) {
  IndelCode out = code;
  out.repeats_allowed = true;
  for (int c = 0; c < code.alphabet_size; ++c) out.words.emplace_back(code.word_length, c);
  return out;
}

std::string serialize_code(const ConstantWeightCode& code) {
  nlohmann::ordered_json j;
  j["type"] = "cw";
  j["length"] = code.length;
  j["weight"] = code.weight;
  auto words = nlohmann::ordered_json::array();
  for (const auto& w : code.words) {
    std::string bits;
    for (auto b : w) bits.push_back(b ? '1' : '0');
    words.push_back(bits);
  }
  j["words"] = words;
  return j.dump() + "\n";
}

std::string serialize_code(const IndelCode& code) {
  nlohmann::ordered_json j;
  j["type"] = "indel";
  j["length"] = code.word_length;
  j["alphabet"] = code.alphabet_size;
  j["words"] = code.words;
  return j.dump() + "\n";
}

}  // namespace packing
