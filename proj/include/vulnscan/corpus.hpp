#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vulnscan::corpus {

enum class Variant { Vulnerable, Patched };
enum class Split { Train, Val, Test };

std::string_view split_name(Split s);
Split split_from_name(std::string_view name);

struct SourceFile {
  std::filesystem::path path;
  std::string raw_text;
  std::string cwe_tag;  // "CWE<digits>", empty when absent
  Variant variant = Variant::Patched;
  std::string pair_id;  // shared by the vulnerable/patched members of a pair
};

struct CleanRecord {
  std::string id;
  std::string text;
  int label = 0;  // 0 = non-vulnerable
  Split split = Split::Train;
  std::string pair_id;

  bool operator==(const CleanRecord&) const = default;
};

// Bijection between CWE tags (plus the reserved non-vulnerable entry at
// index 0) and dense label indices.
class LabelMap {
 public:
  static constexpr int kNonVulnIndex = 0;
  static constexpr const char* kNonVulnTag = "NONVULN";

  // Distinct tags, sorted lexicographically, numbered from 1; index 0 is the
  // non-vulnerable class.
  static LabelMap from_tags(std::vector<std::string> tags);
  static LabelMap load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  bool contains(const std::string& tag) const;
  int index_of(const std::string& tag) const;  // throws on unknown tag
  const std::string& tag_of(int index) const;
  std::size_t size() const { return tags_.size(); }

 private:
  std::vector<std::string> tags_;  // index -> tag
  std::unordered_map<std::string, int> index_;
};

struct ScanStats {
  std::size_t accepted = 0;
  std::size_t skipped_no_marker = 0;
  std::size_t skipped_ambiguous_marker = 0;
  std::size_t skipped_missing_cwe = 0;
  std::size_t skipped_unreadable = 0;

  std::size_t skipped() const {
    return skipped_no_marker + skipped_ambiguous_marker + skipped_missing_cwe +
           skipped_unreadable;
  }
};

struct ScanResult {
  std::vector<SourceFile> files;
  ScanStats stats;
};

// Walks root for .c/.cpp/.h files. The CWE tag comes from a leading
// "CWE<digits>" in the file name (or the nearest ancestor directory); the
// variant from a "good"/"bad" marker in the file name. Files with neither
// marker, both markers, or a "bad" marker without a CWE tag are skipped and
// counted. Throws only when root itself is unusable.
ScanResult scan_sard(const std::filesystem::path& root);

// Removes // and /* */ comments. Delimiters inside string and character
// literals are left alone; backslash-newline continues a line comment; an
// unterminated block comment runs to end of input. Comments occupying whole
// lines disappear with their lines; mid-line comments become a single space.
std::string strip_comments(std::string_view text);

// Renames every identifier whose name contains "good" or "bad" (any case):
// identifiers used like functions become func1, func2, ... in order of first
// appearance, the rest var1, var2, ...; the mapping is consistent within the
// file. Marker words inside string/char literals are overwritten with 'x'es
// so no case-insensitive "good"/"bad" survives anywhere.
std::string scrub_markers(std::string_view text);

// Canonical layout: LF line endings, tabs to 4 spaces, no trailing
// whitespace, blank-line runs collapsed to one, indentation re-derived from
// brace depth, and a block whose sole content is another block loses the
// inner braces. Content of string/char literals (and lines continuing them)
// is preserved byte for byte. Idempotent.
std::string normalize_format(std::string_view text);

// strip_comments, then scrub_markers, then normalize_format; label from the
// map for vulnerable files, 0 for patched ones. Throws on a vulnerable file
// whose tag is missing from the map.
CleanRecord preprocess(const SourceFile& file, const LabelMap& labels);

struct SplitRatios {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;
};

// Deterministic for a fixed seed. Records sharing a pair_id always land in
// the same split; within each vulnerable-label stratum the group counts
// follow the ratios by largest remainder.
std::vector<CleanRecord> split_dataset(std::vector<CleanRecord> records,
                                       SplitRatios ratios, std::uint64_t seed);

// One JSON object per line with keys id, text, label, split, pair_id.
void write_dataset(const std::vector<CleanRecord>& records,
                   const std::filesystem::path& path);
std::vector<CleanRecord> read_dataset(const std::filesystem::path& path);

// Case-insensitive search for "good" or "bad".
bool contains_marker(std::string_view text);

}  // namespace vulnscan::corpus
