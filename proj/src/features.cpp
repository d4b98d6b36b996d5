#include "emogru/features.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "emogru/error.hpp"

namespace emogru {

namespace {

bool is_word_char(unsigned char c) {
  // Bytes >= 0x80 keep UTF-8 sequences glued into a single token.
  return std::isalnum(c) || c == '\'' || c >= 0x80;
}

bool all_caps(std::string_view s) {
  bool has_alpha = false;
  for (unsigned char c : s) {
    if (std::isalpha(c)) {
      has_alpha = true;
      if (!std::isupper(c)) return false;
    }
  }
  return has_alpha;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Collapses runs of the same character longer than max_run.
std::string collapse_runs(std::string_view s, std::size_t max_run, bool* changed) {
  std::string out;
  out.reserve(s.size());
  char prev = '\0';
  std::size_t run = 0;
  for (char c : s) {
    run = (c == prev) ? run + 1 : 1;
    prev = c;
    if (run <= max_run) {
      out += c;
    } else if (changed != nullptr) {
      *changed = true;
    }
  }
  return out;
}

// Emoticon surfaces recognized by the tokenizer. Mapping to emotion labels is
// a separate, configurable concern (EmoticonMap); this set only controls what
// gets kept together as one token. Checked longest-first.
const std::vector<std::string>& emoticon_patterns() {
  static const std::vector<std::string> patterns = [] {
    std::vector<std::string> p = {
        ":-)", ":)",  ":-(", ":(",  ":-D", ":D", ":-P", ":P", ":-p", ":p",
        ";-)", ";)",  ";-(", ";(",  ":'(", ":'-(", ":/", ":-/", ":\\",
        ":|",  ":-o", ":o",  ":-O", ":O",  "=)", "=(", "=D", "<3", "</3",
        ">:(", ">:-(", ">:)", ">.<", "xD",  "XD", "xd", ":3", "^^", "^_^",
        "-_-", "o_O", "O_o", "o.O", ":*",  ":-*"};
    std::sort(p.begin(), p.end(), [](const std::string& a, const std::string& b) {
      return a.size() > b.size() || (a.size() == b.size() && a < b);
    });
    return p;
  }();
  return patterns;
}

// Longest emoticon pattern starting at `pos`, or empty. Patterns ending in an
// alphanumeric character must also end at a word boundary so that e.g. "xd"
// never matches inside an ordinary word.
std::string_view match_emoticon(std::string_view chunk, std::size_t pos) {
  const std::string_view rest = chunk.substr(pos);
  for (const std::string& p : emoticon_patterns()) {
    if (rest.size() < p.size() || rest.compare(0, p.size(), p) != 0) continue;
    if (std::isalnum(static_cast<unsigned char>(p.back())) &&
        rest.size() > p.size() &&
        is_word_char(static_cast<unsigned char>(rest[p.size()]))) {
      continue;
    }
    return rest.substr(0, p.size());
  }
  return {};
}

bool looks_like_url(std::string_view s) {
  const std::string lower = to_lower(s.substr(0, 8));
  return lower.starts_with("http://") || lower.starts_with("https://") ||
         lower.starts_with("www.");
}

bool looks_like_image_url(std::string_view s) {
  const std::string lower = to_lower(s.substr(0, s.find('?')));
  for (std::string_view ext : {".jpg", ".jpeg", ".png", ".gif", ".bmp", ".webp"}) {
    if (lower.ends_with(ext)) return true;
  }
  return false;
}

Token word_token(std::string_view surface) {
  Token t;
  if (all_caps(surface)) t.flags.was_caps = true;
  t.surface = to_lower(surface);
  return t;
}

void tokenize_chunk(std::string_view chunk, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < chunk.size()) {
    // URLs absorb the rest of the whitespace-delimited chunk.
    if (looks_like_url(chunk.substr(i))) {
      Token t;
      if (looks_like_image_url(chunk.substr(i))) {
        t.surface = anchors::image;
        t.flags.was_image_url = true;
      } else {
        t.surface = anchors::url;
        t.flags.was_url = true;
      }
      out.push_back(std::move(t));
      return;
    }
    const std::string_view emoticon = match_emoticon(chunk, i);
    if (!emoticon.empty()) {
      Token t;
      t.surface = emoticon;
      t.flags.was_emoticon = true;
      out.push_back(std::move(t));
      i += emoticon.size();
      continue;
    }
    const unsigned char c = static_cast<unsigned char>(chunk[i]);
    if ((c == '#' || c == '@') && i + 1 < chunk.size() &&
        is_word_char(static_cast<unsigned char>(chunk[i + 1]))) {
      std::size_t j = i + 1;
      while (j < chunk.size() && is_word_char(static_cast<unsigned char>(chunk[j]))) ++j;
      Token t;
      if (c == '#') {
        t.surface = anchors::hashtag;
        t.flags.was_hashtag = true;
      } else {
        t.surface = anchors::user;
        t.flags.was_mention = true;
      }
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < chunk.size() && is_word_char(static_cast<unsigned char>(chunk[j]))) ++j;
      out.push_back(word_token(chunk.substr(i, j - i)));
      i = j;
      continue;
    }
    // Punctuation: a run of the same character forms one token.
    std::size_t j = i;
    while (j < chunk.size() && chunk[j] == chunk[i]) ++j;
    Token t;
    t.surface = chunk.substr(i, j - i);
    out.push_back(std::move(t));
    i = j;
  }
}

}  // namespace

namespace anchors {
std::string emotion(std::string_view label) {
  return "<emo_" + std::string(label) + ">";
}
}  // namespace anchors

std::vector<Token> tokenize(std::string_view raw) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    std::size_t j = i;
    while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
    if (j > i) tokenize_chunk(raw.substr(i, j - i), out);
    i = j;
  }
  return out;
}

std::vector<Token> normalize(std::vector<Token> tokens, const EmoticonMap& emoticons) {
  for (Token& t : tokens) {
    if (t.is_anchor()) continue;

    if (t.flags.was_emoticon) {
      // Try the surface as typed, then with repeats collapsed, then lowercased.
      bool reduced = false;
      const std::string c2 = collapse_runs(t.surface, 2, &reduced);
      const std::string c1 = collapse_runs(t.surface, 1, nullptr);
      const std::string lower = to_lower(t.surface);
      const std::string* label = nullptr;
      for (const std::string& candidate :
           {t.surface, c2, c1, lower, collapse_runs(lower, 2, nullptr),
            collapse_runs(lower, 1, nullptr)}) {
        label = emoticons.find(candidate);
        if (label != nullptr) break;
      }
      if (label != nullptr) {
        t.surface = anchors::emotion(*label);
      } else {
        t.flags.had_elongation = t.flags.had_elongation || reduced;
        t.surface = collapse_runs(lower, 2, nullptr);
      }
      continue;
    }

    bool reduced = false;
    std::string surface = collapse_runs(t.surface, 2, &reduced);
    t.flags.had_elongation = t.flags.had_elongation || reduced;
    if (all_caps(surface)) t.flags.was_caps = true;
    t.surface = to_lower(surface);
  }
  return tokens;
}

std::vector<Token> preprocess(std::string_view raw, const EmoticonMap& emoticons) {
  return normalize(tokenize(raw), emoticons);
}

void EmoticonMap::set(std::string emoticon, std::string label) {
  table_[std::move(emoticon)] = std::move(label);
}

const std::string* EmoticonMap::find(const std::string& emoticon) const {
  const auto it = table_.find(emoticon);
  return it == table_.end() ? nullptr : &it->second;
}

EmoticonMap EmoticonMap::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open emoticon map: " + path);
  EmoticonMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected `emoticon<TAB>label`");
    }
    map.set(line.substr(0, tab), line.substr(tab + 1));
  }
  return map;
}

EmoticonMap EmoticonMap::defaults() {
  EmoticonMap map;
  for (const char* e : {":)", ":-)", ":D", ":-D", "=)", "=D", ";)", ";-)", ":p",
                        ":P", ":-p", ":-P", "xd", "xD", "XD", "<3", "^^", "^_^",
                        ":3", ":*", ":-*"}) {
    map.set(e, "happy");
  }
  for (const char* e : {":(", ":-(", "=(", ":'(", ":'-(", ";(", ";-(", "</3",
                        ":/", ":-/"}) {
    map.set(e, "sad");
  }
  for (const char* e : {">:(", ">:-(", "-_-", ">.<"}) {
    map.set(e, "angry");
  }
  return map;
}

void SwnLexicon::add(const std::string& lemma, char pos_tag, double pos, double neg) {
  if (pos < 0.0 || neg < 0.0 || pos + neg > 1.0) {
    throw DataError("SentiWordNet sense for '" + lemma +
                    "' violates pos + neg <= 1");
  }
  entries_[lemma].push_back(Sense{pos_tag, pos, neg});
}

std::optional<SwnLexicon::Scores> SwnLexicon::lookup(const std::string& lemma) const {
  const auto it = entries_.find(lemma);
  if (it == entries_.end()) return std::nullopt;
  double sent = 0.0;
  double obj = 0.0;
  for (const Sense& s : it->second) {
    sent += s.pos - s.neg;
    obj += 1.0 - s.pos - s.neg;
  }
  const double n = static_cast<double>(it->second.size());
  return Scores{sent / n, obj / n};
}

SwnLexicon SwnLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open SentiWordNet file: " + path);
  SwnLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto fail = [&](const std::string& why) -> DataError {
      return DataError(path + ":" + std::to_string(lineno) + ": " + why);
    };
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (cols.size() < 5) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) break;
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    cols.push_back(line.substr(start));  // gloss, may contain anything
    if (cols.size() < 5) throw fail("expected POS, ID, PosScore, NegScore, SynsetTerms");
    double pos = 0.0;
    double neg = 0.0;
    try {
      std::size_t used = 0;
      pos = std::stod(cols[2], &used);
      if (used != cols[2].size()) throw std::invalid_argument("");
      neg = std::stod(cols[3], &used);
      if (used != cols[3].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw fail("scores are not numbers: '" + cols[2] + "', '" + cols[3] + "'");
    }
    if (pos < 0.0 || pos > 1.0 || neg < 0.0 || neg > 1.0 || pos + neg > 1.0) {
      throw fail("PosScore + NegScore must lie in [0,1] and sum to at most 1");
    }
    const char pos_tag = cols[0].empty() ? '?' : cols[0][0];
    std::istringstream terms(cols[4]);
    std::string term;
    bool any = false;
    while (terms >> term) {
      const std::size_t hash = term.rfind('#');
      if (hash == std::string::npos || hash == 0) {
        throw fail("synset term '" + term + "' is not of the form lemma#sense");
      }
      lex.add(to_lower(term.substr(0, hash)), pos_tag, pos, neg);
      any = true;
    }
    if (!any) throw fail("no synset terms");
  }
  return lex;
}

std::optional<std::size_t> NrcLexicon::category_index(std::string_view name) {
  for (std::size_t i = 0; i < kCategories.size(); ++i) {
    if (name == kCategories[i]) return i;
  }
  return std::nullopt;
}

void NrcLexicon::add(const std::string& word, std::size_t category) {
  assoc_[word] |= static_cast<std::uint8_t>(1u << category);
}

std::uint8_t NrcLexicon::associations(const std::string& word) const {
  const auto it = assoc_.find(word);
  return it == assoc_.end() ? 0 : it->second;
}

bool NrcLexicon::contains(const std::string& word) const {
  return assoc_.contains(word);
}

NrcLexicon NrcLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open NRC lexicon: " + path);
  NrcLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto fail = [&](const std::string& why) -> DataError {
      return DataError(path + ":" + std::to_string(lineno) + ": " + why);
    };
    std::istringstream fields(line);
    std::string word;
    std::string emotion;
    std::string flag;
    std::string extra;
    if (!std::getline(fields, word, '\t') || !std::getline(fields, emotion, '\t') ||
        !std::getline(fields, flag, '\t') || std::getline(fields, extra, '\t')) {
      throw fail("expected `word<TAB>emotion<TAB>{0|1}`");
    }
    if (flag != "0" && flag != "1") throw fail("association flag must be 0 or 1");
    if (emotion == "positive" || emotion == "negative") continue;  // polarity rows
    const auto category = category_index(emotion);
    if (!category) throw fail("unknown emotion category '" + emotion + "'");
    if (flag == "1") lex.add(to_lower(word), *category);
  }
  return lex;
}

std::pair<Vector, Vector> soi_features(const std::vector<Token>& tokens,
                                       const SwnLexicon& swn, std::size_t max_len) {
  Vector sent(max_len, kAbsentScore);
  Vector obj(max_len, kAbsentScore);
  const std::size_t n = std::min(tokens.size(), max_len);
  for (std::size_t t = 0; t < n; ++t) {
    if (const auto scores = swn.lookup(tokens[t].surface)) {
      sent[t] = scores->sent;
      obj[t] = scores->obj;
    }
  }
  return {std::move(sent), std::move(obj)};
}

Vector emo_features(const std::vector<Token>& tokens, const NrcLexicon& nrc) {
  Vector emo(NrcLexicon::kCategories.size(), kAbsentScore);
  for (const Token& t : tokens) {
    const std::uint8_t bits = nrc.associations(t.surface);
    for (std::size_t k = 0; k < emo.size(); ++k) {
      if (bits & (1u << k)) emo[k] = 1.0;
    }
  }
  return emo;
}

}  // namespace emogru
