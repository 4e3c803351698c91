#include "vulnscan/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "vulnscan/clexer.hpp"
#include "vulnscan/rng.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace vulnscan::corpus {

namespace {

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool imatch_at(std::string_view s, std::size_t pos, std::string_view word) {
  if (pos + word.size() > s.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (lower(s[pos + i]) != word[i]) return false;
  }
  return true;
}

}  // namespace

bool contains_marker(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (imatch_at(text, i, "good") || imatch_at(text, i, "bad")) return true;
  }
  return false;
}

std::string_view split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  return "train";
}

Split split_from_name(std::string_view name) {
  if (name == "train") return Split::Train;
  if (name == "val") return Split::Val;
  if (name == "test") return Split::Test;
  throw std::runtime_error("unknown split name: " + std::string(name));
}

// ---- LabelMap ---------------------------------------------------------------

LabelMap LabelMap::from_tags(std::vector<std::string> tags) {
  std::set<std::string> uniq(tags.begin(), tags.end());
  LabelMap m;
  m.tags_.push_back(kNonVulnTag);
  for (const auto& t : uniq) m.tags_.push_back(t);
  for (std::size_t i = 0; i < m.tags_.size(); ++i) {
    m.index_[m.tags_[i]] = static_cast<int>(i);
  }
  return m;
}

void LabelMap::save(const fs::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write label map: " + path.string());
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    out << tags_[i] << '\t' << i << '\n';
  }
  if (!out) throw std::runtime_error("label map write failed: " + path.string());
}

LabelMap LabelMap::load(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read label map: " + path.string());
  LabelMap m;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("label map " + path.string() + " line " +
                               std::to_string(lineno) + ": missing tab");
    }
    std::string tag = line.substr(0, tab);
    int idx = std::stoi(line.substr(tab + 1));
    if (static_cast<std::size_t>(idx) != m.tags_.size()) {
      throw std::runtime_error("label map " + path.string() + " line " +
                               std::to_string(lineno) +
                               ": indices must be consecutive from 0");
    }
    if (m.index_.count(tag) != 0) {
      throw std::runtime_error("label map " + path.string() +
                               ": duplicate tag " + tag);
    }
    m.index_[tag] = idx;
    m.tags_.push_back(std::move(tag));
  }
  if (m.tags_.empty() || m.tags_[0] != kNonVulnTag) {
    throw std::runtime_error("label map " + path.string() +
                             ": first entry must be NONVULN\t0");
  }
  return m;
}

bool LabelMap::contains(const std::string& tag) const {
  return index_.count(tag) != 0;
}

int LabelMap::index_of(const std::string& tag) const {
  auto it = index_.find(tag);
  if (it == index_.end()) {
    throw std::runtime_error("unknown CWE tag: " + tag);
  }
  return it->second;
}

const std::string& LabelMap::tag_of(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= tags_.size()) {
    throw std::out_of_range("label index " + std::to_string(index) +
                            " out of range");
  }
  return tags_[static_cast<std::size_t>(index)];
}

// ---- scan_sard ----------------------------------------------------------------

namespace {

bool utf8_valid(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      if (i + k >= s.size() ||
          (static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
        return false;
      }
    }
    i += 1 + extra;
  }
  return true;
}

std::string remove_markers(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (imatch_at(s, i, "good")) {
      i += 4;
    } else if (imatch_at(s, i, "bad")) {
      i += 3;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

// Leading "CWE<digits>" of a name, or empty.
std::string leading_cwe(std::string_view name) {
  if (name.size() < 4 || name.substr(0, 3) != "CWE") return "";
  std::size_t i = 3;
  while (i < name.size() &&
         std::isdigit(static_cast<unsigned char>(name[i])) != 0) {
    ++i;
  }
  if (i == 3) return "";
  return std::string(name.substr(0, i));
}

bool want_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), lower);
  return ext == ".c" || ext == ".cpp" || ext == ".h";
}

}  // namespace

ScanResult scan_sard(const fs::path& root) {
  std::error_code ec;
  if (!fs::exists(root, ec) || !fs::is_directory(root, ec)) {
    throw std::runtime_error("scan_sard: not a readable directory: " +
                             root.string());
  }
  std::vector<fs::path> paths;
  for (auto it = fs::recursive_directory_iterator(
           root, fs::directory_options::skip_permission_denied, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) throw std::runtime_error("scan_sard: " + ec.message());
    if (it->is_regular_file(ec) && want_extension(it->path())) {
      paths.push_back(it->path());
    }
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.generic_string() < b.generic_string();
            });

  ScanResult result;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      ++result.stats.skipped_unreadable;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string raw = std::move(buf).str();
    if (in.bad() || raw.find('\0') != std::string::npos || !utf8_valid(raw)) {
      ++result.stats.skipped_unreadable;
      continue;
    }

    const std::string stem = p.stem().string();
    bool has_bad = false, has_good = false;
    for (std::size_t i = 0; i < stem.size(); ++i) {
      if (imatch_at(stem, i, "bad")) has_bad = true;
      if (imatch_at(stem, i, "good")) has_good = true;
    }
    if (!has_bad && !has_good) {
      ++result.stats.skipped_no_marker;
      continue;
    }
    if (has_bad && has_good) {
      ++result.stats.skipped_ambiguous_marker;
      continue;
    }

    std::string tag = leading_cwe(stem);
    if (tag.empty()) {
      // nearest ancestor directory under root
      for (fs::path dir = p.parent_path();
           !dir.empty() && dir != root.parent_path() && tag.empty();
           dir = dir.parent_path()) {
        tag = leading_cwe(dir.filename().string());
        if (dir == root) break;
      }
    }

    SourceFile f;
    f.variant = has_bad ? Variant::Vulnerable : Variant::Patched;
    if (f.variant == Variant::Vulnerable && tag.empty()) {
      ++result.stats.skipped_missing_cwe;
      continue;
    }
    f.path = p;
    f.raw_text = std::move(raw);
    f.cwe_tag = tag;
    f.pair_id = remove_markers(fs::relative(p, root, ec).generic_string());
    ++result.stats.accepted;
    result.files.push_back(std::move(f));
  }
  return result;
}

// ---- strip_comments -----------------------------------------------------------

namespace {

std::size_t line_start_of(std::string_view s, std::size_t pos) {
  while (pos > 0 && s[pos - 1] != '\n' && s[pos - 1] != '\r') --pos;
  return pos;
}

bool ws_between(std::string_view s, std::size_t b, std::size_t e) {
  for (std::size_t i = b; i < e; ++i) {
    if (s[i] != ' ' && s[i] != '\t') return false;
  }
  return true;
}

struct Edit {
  std::size_t begin;
  std::size_t end;
  const char* repl;
};

std::string apply_edits(std::string_view s, std::vector<Edit> edits) {
  std::sort(edits.begin(), edits.end(),
            [](const Edit& a, const Edit& b) { return a.begin < b.begin; });
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  for (const Edit& e : edits) {
    const std::size_t b = std::max(e.begin, pos);
    if (b > pos) out.append(s.substr(pos, b - pos));
    out.append(e.repl);
    pos = std::max(pos, e.end);
  }
  out.append(s.substr(pos));
  return out;
}

}  // namespace

std::string strip_comments(std::string_view text) {
  const auto lexemes = lex::lex(text);
  std::vector<Edit> edits;
  for (const auto& l : lexemes) {
    if (l.kind != lex::Kind::LineComment && l.kind != lex::Kind::BlockComment) {
      continue;
    }
    const std::size_t ls = line_start_of(text, l.begin);
    const bool own_prefix = ws_between(text, ls, l.begin);
    if (l.kind == lex::Kind::LineComment) {
      if (own_prefix) {
        // whole-line comment: remove the line including its newline
        std::size_t e = l.end;
        if (e < text.size() && text[e] == '\r') ++e;
        if (e < text.size() && text[e] == '\n') ++e;
        edits.push_back({ls, e, ""});
      } else {
        edits.push_back({l.begin, l.end, ""});
      }
      continue;
    }
    // block comment
    std::size_t after = l.end;
    while (after < text.size() && (text[after] == ' ' || text[after] == '\t')) {
      ++after;
    }
    const bool own_suffix =
        after >= text.size() || text[after] == '\n' || text[after] == '\r';
    if (own_prefix && own_suffix) {
      std::size_t e = after;
      if (e < text.size() && text[e] == '\r') ++e;
      if (e < text.size() && text[e] == '\n') ++e;
      edits.push_back({ls, e, ""});
    } else {
      // mid-line: a single space keeps the neighboring tokens apart
      edits.push_back({l.begin, l.end, " "});
    }
  }
  return apply_edits(text, std::move(edits));
}

// ---- scrub_markers --------------------------------------------------------------

namespace {

std::string redact_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (imatch_at(s, i, "good")) {
      out.append("xxxx");
      i += 4;
    } else if (imatch_at(s, i, "bad")) {
      out.append("xxx");
      i += 3;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace

std::string scrub_markers(std::string_view text) {
  const auto lexemes = lex::lex(text);

  std::unordered_set<std::string> taken;  // existing + invented names
  for (const auto& l : lexemes) {
    if (l.kind == lex::Kind::Ident) taken.emplace(lex::slice(text, l));
  }

  std::unordered_map<std::string, std::string> mapping;
  int func_n = 0, var_n = 0;
  for (std::size_t i = 0; i < lexemes.size(); ++i) {
    if (lexemes[i].kind != lex::Kind::Ident) continue;
    std::string name(lex::slice(text, lexemes[i]));
    if (!contains_marker(name) || mapping.count(name) != 0) continue;
    bool fn_like = false;
    for (std::size_t j = i + 1; j < lexemes.size(); ++j) {
      if (!lex::is_significant(lexemes[j].kind)) continue;
      fn_like = lexemes[j].kind == lex::Kind::Punct &&
                text[lexemes[j].begin] == '(';
      break;
    }
    int& counter = fn_like ? func_n : var_n;
    std::string candidate;
    do {
      ++counter;
      candidate = (fn_like ? "func" : "var") + std::to_string(counter);
    } while (taken.count(candidate) != 0);
    taken.insert(candidate);
    mapping.emplace(std::move(name), std::move(candidate));
  }

  std::string out;
  out.reserve(text.size());
  for (const auto& l : lexemes) {
    const std::string_view s = lex::slice(text, l);
    if (l.kind == lex::Kind::Ident) {
      auto it = mapping.find(std::string(s));
      if (it != mapping.end()) {
        out.append(it->second);
        continue;
      }
    } else if (l.kind == lex::Kind::String || l.kind == lex::Kind::CharLit) {
      out.append(redact_literal(s));
      continue;
    }
    out.append(s);
  }
  return out;
}

// ---- normalize_format -------------------------------------------------------------

namespace {

// Byte spans of brace pairs that are the sole content of an enclosing
// statement block, whole lines included when a brace sits alone on its line.
std::vector<Edit> redundant_brace_spans(std::string_view s,
                                        const std::vector<lex::Lexeme>& lxs) {
  struct Open {
    std::size_t lex_idx;
    bool is_block;
    std::size_t direct_tokens = 0;
    std::size_t child_pairs = 0;
    std::size_t only_child_open = 0;
    std::size_t only_child_close = 0;
    bool only_child_block = false;
  };
  std::vector<Open> stack;
  std::vector<std::size_t> doomed;  // lexeme indices of braces to delete

  const lex::Lexeme* prev_sig = nullptr;
  for (std::size_t i = 0; i < lxs.size(); ++i) {
    const auto& l = lxs[i];
    if (!lex::is_significant(l.kind)) continue;
    const char ch = l.kind == lex::Kind::Punct ? s[l.begin] : '\0';
    if (ch == '{') {
      bool block = true;
      if (prev_sig != nullptr) {
        if (prev_sig->kind == lex::Kind::Punct) {
          const char pc = s[prev_sig->begin];
          if (pc == '{') {
            block = !stack.empty() && stack.back().is_block;
          } else {
            block = pc == ')' || pc == '}' || pc == ';' || pc == ':';
          }
        } else if (prev_sig->kind == lex::Kind::Ident) {
          const std::string_view id = lex::slice(s, *prev_sig);
          block = id == "else" || id == "do" || id == "try";
        } else {
          block = false;
        }
      }
      stack.push_back({i, block});
    } else if (ch == '}') {
      if (!stack.empty()) {
        Open done = stack.back();
        stack.pop_back();
        if (done.is_block && done.direct_tokens == 0 &&
            done.child_pairs == 1 && done.only_child_block) {
          doomed.push_back(done.only_child_open);
          doomed.push_back(done.only_child_close);
        }
        if (!stack.empty()) {
          Open& up = stack.back();
          ++up.child_pairs;
          up.only_child_open = done.lex_idx;
          up.only_child_close = i;
          up.only_child_block = done.is_block;
        }
      }
    } else if (!stack.empty()) {
      ++stack.back().direct_tokens;
    }
    prev_sig = &l;
  }

  // Promote to whole-line deletions where a line's only non-whitespace
  // content is doomed braces.
  std::sort(doomed.begin(), doomed.end());
  std::vector<Edit> edits;
  std::size_t gi = 0;
  while (gi < doomed.size()) {
    const std::size_t ls = line_start_of(s, lxs[doomed[gi]].begin);
    std::size_t line_end = lxs[doomed[gi]].begin;
    while (line_end < s.size() && s[line_end] != '\n' && s[line_end] != '\r') {
      ++line_end;
    }
    std::size_t gj = gi;
    while (gj + 1 < doomed.size() && lxs[doomed[gj + 1]].begin < line_end) {
      ++gj;
    }
    bool only_content = true;
    std::size_t pos = ls;
    for (std::size_t k = gi; k <= gj && only_content; ++k) {
      only_content = ws_between(s, pos, lxs[doomed[k]].begin);
      pos = lxs[doomed[k]].end;
    }
    if (only_content) only_content = ws_between(s, pos, line_end);
    if (only_content) {
      std::size_t e = line_end;
      if (e < s.size() && s[e] == '\r') ++e;
      if (e < s.size() && s[e] == '\n') ++e;
      edits.push_back({ls, e, ""});
    } else {
      for (std::size_t k = gi; k <= gj; ++k) {
        edits.push_back({lxs[doomed[k]].begin, lxs[doomed[k]].end, ""});
      }
    }
    gi = gj + 1;
  }
  return edits;
}

struct OutLine {
  std::string text;
  bool blank;
  bool newline_after;
};

std::string expand_tabs(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\t') {
      out.append("    ");
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string normalize_format(std::string_view text) {
  std::string s(text);
  for (;;) {
    const auto lxs = lex::lex(s);
    auto edits = redundant_brace_spans(s, lxs);
    if (edits.empty()) break;
    s = apply_edits(s, std::move(edits));
  }

  const auto lxs = lex::lex(s);
  std::vector<OutLine> lines;
  long depth = 0;
  std::size_t i = 0;
  while (i < lxs.size()) {
    // one line unit: lexemes up to and including the next Newline
    std::size_t j = i;
    while (j < lxs.size() && lxs[j].kind != lex::Kind::Newline) ++j;
    const bool has_newline = j < lxs.size();

    // trim leading/trailing Space lexemes
    std::size_t a = i, b = j;
    while (a < b && lxs[a].kind == lex::Kind::Space) ++a;
    while (b > a && lxs[b - 1].kind == lex::Kind::Space) --b;

    if (a == b) {
      lines.push_back({"", true, has_newline});
    } else {
      long leading_closers = 0;
      for (std::size_t k = a; k < b; ++k) {
        if (lxs[k].kind == lex::Kind::Space) continue;
        if (lxs[k].kind == lex::Kind::Punct && s[lxs[k].begin] == '}') {
          ++leading_closers;
          continue;
        }
        break;
      }
      const bool pp_line =
          lxs[a].kind == lex::Kind::Punct && s[lxs[a].begin] == '#';
      long indent = pp_line ? 0 : std::max(0L, depth - leading_closers);

      std::string content;
      for (std::size_t k = a; k < b; ++k) {
        const std::string_view sl = lex::slice(s, lxs[k]);
        if (lxs[k].kind == lex::Kind::String ||
            lxs[k].kind == lex::Kind::CharLit) {
          content.append(sl);
        } else {
          content.append(expand_tabs(sl));
        }
        if (!pp_line && lxs[k].kind == lex::Kind::Punct) {
          if (s[lxs[k].begin] == '{') ++depth;
          if (s[lxs[k].begin] == '}') depth = std::max(0L, depth - 1);
        }
      }
      lines.push_back(
          {std::string(static_cast<std::size_t>(indent) * 4, ' ') + content,
           false, has_newline});
    }
    i = has_newline ? j + 1 : j;
    if (!has_newline) break;
  }

  // drop leading blanks, collapse runs, drop trailing blanks
  std::vector<const OutLine*> kept;
  bool seen_content = false;
  bool prev_blank = false;
  for (const auto& ln : lines) {
    if (ln.blank) {
      if (!seen_content || prev_blank) continue;
      prev_blank = true;
      kept.push_back(&ln);
    } else {
      seen_content = true;
      prev_blank = false;
      kept.push_back(&ln);
    }
  }
  while (!kept.empty() && kept.back()->blank) kept.pop_back();
  if (kept.empty()) return "";

  std::string out;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    out.append(kept[k]->text);
    if (k + 1 < kept.size() || kept[k]->newline_after) out.push_back('\n');
  }
  return out;
}

// ---- preprocess / split / dataset io ------------------------------------------------

CleanRecord preprocess(const SourceFile& file, const LabelMap& labels) {
  CleanRecord r;
  if (file.variant == Variant::Vulnerable) {
    r.label = labels.index_of(file.cwe_tag);
  } else {
    r.label = LabelMap::kNonVulnIndex;
  }
  r.text = normalize_format(scrub_markers(strip_comments(file.raw_text)));
  r.pair_id = file.pair_id;
  r.id = file.pair_id + (file.variant == Variant::Vulnerable ? "#v" : "#p");
  r.split = Split::Train;
  return r;
}

std::vector<CleanRecord> split_dataset(std::vector<CleanRecord> records,
                                       SplitRatios ratios, std::uint64_t seed) {
  const double total = ratios.train + ratios.val + ratios.test;
  if (ratios.train < 0 || ratios.val < 0 || ratios.test < 0 ||
      std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("split_dataset: ratios must be >= 0 and sum to 1");
  }
  if (records.empty()) {
    throw std::invalid_argument("split_dataset: empty record list");
  }

  // groups keyed by pair_id (records without one form singleton groups)
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::string key = records[i].pair_id.empty()
                          ? "\x01" + std::to_string(i)
                          : records[i].pair_id;
    groups[key].push_back(i);
  }

  // strata by the group's vulnerable label (max label in the group)
  std::map<int, std::vector<const std::vector<std::size_t>*>> strata;
  for (const auto& [key, idxs] : groups) {
    int lab = 0;
    for (std::size_t i : idxs) lab = std::max(lab, records[i].label);
    strata[lab].push_back(&idxs);
  }

  for (auto& [lab, gs] : strata) {
    rng::Prng prng(rng::derive(seed, static_cast<std::uint64_t>(lab)));
    prng.shuffle(gs);
    const std::size_t n = gs.size();
    const double want[3] = {ratios.train * n, ratios.val * n, ratios.test * n};
    std::size_t counts[3];
    double fracs[3];
    std::size_t assigned = 0;
    for (int k = 0; k < 3; ++k) {
      counts[k] = static_cast<std::size_t>(want[k]);
      fracs[k] = want[k] - static_cast<double>(counts[k]);
      assigned += counts[k];
    }
    while (assigned < n) {
      int best = 0;
      for (int k = 1; k < 3; ++k) {
        if (fracs[k] > fracs[best]) best = k;
      }
      ++counts[best];
      fracs[best] = -1.0;
      ++assigned;
    }
    std::size_t gi = 0;
    for (int k = 0; k < 3; ++k) {
      const Split sp = k == 0 ? Split::Train : (k == 1 ? Split::Val : Split::Test);
      for (std::size_t c = 0; c < counts[k]; ++c, ++gi) {
        for (std::size_t ri : *gs[gi]) records[ri].split = sp;
      }
    }
  }
  return records;
}

void write_dataset(const std::vector<CleanRecord>& records,
                   const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset: " + path.string());
  for (const auto& r : records) {
    json j{{"id", r.id},
           {"text", r.text},
           {"label", r.label},
           {"split", std::string(split_name(r.split))},
           {"pair_id", r.pair_id}};
    out << j.dump() << '\n';
  }
  if (!out) throw std::runtime_error("dataset write failed: " + path.string());
}

std::vector<CleanRecord> read_dataset(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read dataset: " + path.string());
  std::vector<CleanRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
      CleanRecord r;
      r.id = j.at("id").get<std::string>();
      r.text = j.at("text").get<std::string>();
      r.label = j.at("label").get<int>();
      r.split = split_from_name(j.at("split").get<std::string>());
      r.pair_id = j.at("pair_id").get<std::string>();
      if (r.label < 0 || r.label > 123) {
        throw std::runtime_error("label out of range 0-123");
      }
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error("malformed dataset record at " + path.string() +
                               ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace vulnscan::corpus
