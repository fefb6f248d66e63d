#pragma once

// Treebank-lite corpus reader and verb extraction.
//
// A corpus file is a sequence of articles. Each article starts with a header
// line `#article <id>` and is followed by one bracketed constituency tree per
// sentence:
//
//   #article wsj_0001
//   (S (NP (NNP Prices)) (VP (VBD fell)))
//
// Leaves are `(POS form)`; every other node is `(LABEL child...)`.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace verbprof::corpus {

struct Token {
  std::string form;
  std::string pos;

  bool operator==(const Token&) const = default;
};

// Leaves carry a Token and use its POS as their label; internal nodes carry
// at least one child and no token.
struct SentenceTree {
  std::string label;
  std::vector<SentenceTree> children;
  std::optional<Token> token;

  static SentenceTree leaf(std::string pos, std::string form);
  static SentenceTree node(std::string label, std::vector<SentenceTree> children);

  bool is_leaf() const { return token.has_value(); }
  bool operator==(const SentenceTree&) const = default;
};

struct Article {
  std::string id;
  std::vector<SentenceTree> sentences;

  bool operator==(const Article&) const = default;
};

enum class VerbRole { Main, CommComplement };

std::string_view to_string(VerbRole role);

struct VerbOccurrence {
  std::string lemma;
  std::string form;
  std::size_t sentence_index = 0;
  VerbRole role = VerbRole::Main;

  bool operator==(const VerbOccurrence&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a treebank-lite document. Articles are returned in file order.
/// Throws ParseError (1-based line/column) on malformed input.
std::vector<Article> parse_treebank_lite(std::string_view text);

std::string to_treebank_lite(const SentenceTree& tree);
std::string to_treebank_lite(const Article& article);

bool is_verb_tag(std::string_view pos);

/// Citation form of a verb token: irregular table first, then suffix rules
/// selected by the tag. Base-form tags (VB, and VBP outside be) return the
/// lowercased form unchanged.
std::string lemmatize(std::string_view form, std::string_view pos);

/// Looks up the shipped irregular-verb table. `form` must be lowercase.
std::optional<std::string_view> irregular_lemma(std::string_view form);

using LemmaSet = std::set<std::string, std::less<>>;

/// Main verb of every sentence, plus the main verb of the first clausal
/// complement when the main verb's lemma is in `communication_lemmas`.
std::vector<VerbOccurrence> extract_verbs(const Article& article,
                                          const LemmaSet& communication_lemmas);

/// Main verb leaf of a clause, if any. Exposed for tests.
const Token* find_main_verb(const SentenceTree& clause);

}  // namespace verbprof::corpus
