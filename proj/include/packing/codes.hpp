#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packing/core.hpp"

namespace packing {

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Binary words of length `length` with exactly `weight` ones; word[x] == 1 iff point x is in the block.
struct ConstantWeightCode {
  int length = 0;
  int weight = 0;
  std::vector<std::vector<std::uint8_t>> words;
};

/// Words over the alphabet {0, ..., alphabet_size-1}, all of length word_length.
struct IndelCode {
  int alphabet_size = 0;
  int word_length = 0;
  std::vector<std::vector<int>> words;
  int deletion_capability = 0;
  bool repeats_allowed = false;
};

/// Requires a valid lambda = 1 packing with uniform block size k; minimum distance >= 2(k-t+1).
ConstantWeightCode to_constant_weight(const PackingDesign& design, const DesignParams& params);

/// nullopt for fewer than two words.
std::optional<int> min_hamming_distance(const ConstantWeightCode& code);
bool has_distinct_words(const ConstantWeightCode& code);

/// Requires a valid directed packing with uniform block length k; capability k - t.
IndelCode to_indel_code(const DirectedPackingDesign& design, const DesignParams& params);

int lcs_length(const std::vector<int>& a, const std::vector<int>& b);
/// Maximum LCS over pairs of distinct word positions; nullopt for fewer than two words.
std::optional<int> max_pairwise_lcs(const IndelCode& code);

/// Codewords stay distinguishable after s deletions: the sets of length-(k-s) subsequences
/// of different words are pairwise disjoint.
bool deletion_check_enumerative(const IndelCode& code, int s);
bool deletion_check_lcs(const IndelCode& code, int s);
/// Runs both checks when k <= 8 (they must agree; a mismatch throws std::logic_error),
/// otherwise the LCS check. Throws CodeError when s > k.
bool deletion_channel_check(const IndelCode& code, int s);

/// Appends the words (c, c, ..., c) for every symbol c. Input should have max LCS <= 1.
IndelCode add_constant_words(const IndelCode& code);

/// JSON export: {"type": "cw"|"indel", "length", "weight"|"alphabet", "words"}.
std::string serialize_code(const ConstantWeightCode& code);
std::string serialize_code(const IndelCode& code);

}  // namespace packing
