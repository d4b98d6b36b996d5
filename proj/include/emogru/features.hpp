#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emogru/tensor.hpp"

namespace emogru {

// Score used wherever a lexicon has nothing to say: absent words, padding
// positions, absent emotion categories.
inline constexpr double kAbsentScore = 0.001;

struct TokenFlags {
  bool was_caps = false;
  bool was_url = false;
  bool was_image_url = false;
  bool was_hashtag = false;
  bool was_mention = false;
  bool was_emoticon = false;
  bool had_elongation = false;

  bool operator==(const TokenFlags&) const = default;
};

// One preprocessed token. The surface is lowercase unless it is an anchor
// (a "<...>" marker produced by preprocessing, never by user text).
struct Token {
  std::string surface;
  TokenFlags flags;

  bool is_anchor() const {
    return surface.size() >= 3 && surface.front() == '<' && surface.back() == '>';
  }
  bool operator==(const Token&) const = default;
};

namespace anchors {
inline constexpr std::string_view url = "<url>";
inline constexpr std::string_view image = "<image>";
inline constexpr std::string_view hashtag = "<hashtag>";
inline constexpr std::string_view user = "<user>";
inline constexpr std::string_view turn_sep = "<turn-sep>";
inline constexpr std::string_view pad = "<pad>";
inline constexpr std::string_view unk = "<unk>";
// Emotion anchors take the form "<emo_LABEL>" with LABEL from the emoticon map.
std::string emotion(std::string_view label);
}  // namespace anchors

// Emoticon surface -> emotion label ("happy", "sad", ...). File format:
// one `emoticon<TAB>label` pair per line, '#' starts a comment.
class EmoticonMap {
 public:
  static EmoticonMap load(const std::string& path);
  static EmoticonMap defaults();

  void set(std::string emoticon, std::string label);
  const std::string* find(const std::string& emoticon) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::string, std::string> table_;
};

std::vector<Token> tokenize(std::string_view raw);
std::vector<Token> normalize(std::vector<Token> tokens, const EmoticonMap& emoticons);
std::vector<Token> preprocess(std::string_view raw, const EmoticonMap& emoticons);

// SentiWordNet 3.0: per-synset positivity/negativity, keyed here by lemma.
// One lemma maps to every sense it appears in, across all parts of speech.
class SwnLexicon {
 public:
  struct Sense {
    char pos_tag;  // a/n/r/v/s from the source file
    double pos;
    double neg;
  };
  struct Scores {
    double sent;  // mean over senses of pos - neg
    double obj;   // mean over senses of 1 - pos - neg
  };

  static SwnLexicon load(const std::string& path);

  void add(const std::string& lemma, char pos_tag, double pos, double neg);
  std::optional<Scores> lookup(const std::string& lemma) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Sense>> entries_;
};

// NRC emotion lexicon: word -> binary associations over the 8 categories.
// File format: `word<TAB>emotion<TAB>{0|1}` triples; the distribution's
// positive/negative polarity rows are recognized and skipped.
class NrcLexicon {
 public:
  static constexpr std::array<std::string_view, 8> kCategories = {
      "joy",  "trust", "anticipation", "surprise",
      "anger", "fear",  "sadness",      "disgust"};

  static NrcLexicon load(const std::string& path);
  static std::optional<std::size_t> category_index(std::string_view name);

  void add(const std::string& word, std::size_t category);
  std::uint8_t associations(const std::string& word) const;  // bit k = category k
  bool contains(const std::string& word) const;
  std::size_t size() const { return assoc_.size(); }

 private:
  std::unordered_map<std::string, std::uint8_t> assoc_;
};

// Per-position sentiment/objectivity scores, padded or truncated to max_len.
// Tokens absent from the lexicon and padding positions get kAbsentScore.
std::pair<Vector, Vector> soi_features(const std::vector<Token>& tokens,
                                       const SwnLexicon& swn, std::size_t max_len);

// 8-dim presence vector in the fixed category order; 1 when any token carries
// the association, kAbsentScore otherwise.
Vector emo_features(const std::vector<Token>& tokens, const NrcLexicon& nrc);

// Everything the model consumes for one example.
struct FeatureBundle {
  std::vector<std::size_t> token_ids;  // max_len, <pad> at masked positions
  Vector mask;                         // max_len, 1 real / 0 padding
  Vector sent;                         // max_len
  Vector obj;                          // max_len
  Vector emo;                          // 8
};

}  // namespace emogru
