#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vulnscan::tok {

// Subword vocabulary: 5 specials, the 256 byte-level base tokens, then one
// token per learned merge, capped at 32768 entries. Word boundaries are
// carried by a leading space byte on every non-initial word, so decoding is
// plain concatenation.
class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;
  static constexpr int kCls = 2;
  static constexpr int kSep = 3;
  static constexpr int kMask = 4;
  static constexpr std::size_t kNumSpecials = 5;
  static constexpr std::size_t kBaseSize = kNumSpecials + 256;
  static constexpr std::size_t kMaxSize = 32768;

  static Vocabulary byte_base();

  std::size_t size() const { return tokens_.size(); }
  int id_of(const std::string& token) const;  // -1 when absent
  const std::string& token_of(int id) const;
  static bool is_special(int id) {
    return id >= 0 && id < static_cast<int>(kNumSpecials);
  }

  const std::vector<std::pair<std::string, std::string>>& merges() const {
    return merges_;
  }

  // Appends the merged token; both sides must already exist.
  void add_merge(const std::string& left, const std::string& right);

  // Rank and merged id for an adjacent id pair, or nullptr.
  const std::pair<int, int>* find_merge(int left, int right) const;

  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::map<std::pair<int, int>, std::pair<int, int>> merge_by_pair_;  // -> {rank, id}
};

// Splits on whitespace with every C syntax/operator character its own
// one-character word; identifier and number runs stay whole.
std::vector<std::string> pretokenize(std::string_view text);

// pretokenize joined by single spaces; the fixed point of encode/decode.
std::string ws_normalize(std::string_view text);

// Byte-pair merge construction over the pretokenized corpus: repeatedly
// merge the most frequent adjacent pair (ties to the lexicographically
// smaller pair) until max_size tokens exist or no pair occurs twice.
Vocabulary build_vocab(const std::vector<std::string>& corpus,
                       std::size_t max_size = 32000);

struct TokenSequence {
  std::vector<int> ids;
  std::vector<int> mask;  // 0 exactly where ids[i] == kPad
};

TokenSequence encode(std::string_view text, const Vocabulary& vocab);

// Inverse of encode up to whitespace normalization; specials are dropped.
// Throws on an id outside the vocabulary.
std::string decode(const std::vector<int>& ids, const Vocabulary& vocab);

// Fixed-length window: CLS then seg_len-1 payload ids, PAD-filled.
struct Segment {
  std::vector<int> ids;
  std::vector<int> mask;
};

// Non-overlapping chunks covering every id in order; empty input still
// yields one (all-PAD) segment.
std::vector<Segment> segment(const TokenSequence& seq,
                             std::size_t seg_len = 256);

enum class CountMode { WholeWord, Subword };

// WholeWord: distinct pretokenized words across the corpus.
// Subword: the vocabulary size (vocab required).
std::size_t count_unique_tokens(const std::vector<std::string>& corpus,
                                CountMode mode,
                                const Vocabulary* vocab = nullptr);

}  // namespace vulnscan::tok
