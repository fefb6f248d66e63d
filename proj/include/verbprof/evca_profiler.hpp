#pragma once

// Verb-class lexicon and per-article class profiles.
//
// Lexicon format:
//
//   @class Communication coarse=Communication
//   @class Motion coarse=Content
//   say<TAB>Communication
//   rise<TAB>Motion
//
// Class declarations may appear anywhere before the entries that use them.
// '#' starts a comment line.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "verbprof/corpus.hpp"

namespace verbprof::evca {

enum class Coarse { Communication, Support, Content, Unknown };

std::string_view to_string(Coarse c);
std::optional<Coarse> parse_coarse(std::string_view s);

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class VerbClassLexicon {
 public:
  static VerbClassLexicon parse(std::string_view text);

  /// Declared classes in declaration order.
  const std::vector<std::string>& classes() const { return classes_; }
  bool has_class(std::string_view name) const;
  Coarse coarse_of_class(std::string_view name) const;

  std::optional<std::string> class_of(std::string_view lemma) const;
  std::size_t entry_count() const { return entries_.size(); }
  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

  corpus::LemmaSet lemmas_in(Coarse coarse) const;

 private:
  std::vector<std::string> classes_;
  std::map<std::string, Coarse, std::less<>> coarse_;
  std::map<std::string, std::string, std::less<>> entries_;
};

VerbClassLexicon load_lexicon(std::string_view text);

/// Class name, or nullopt for Unknown.
std::optional<std::string> classify_verb(const VerbClassLexicon& lex, std::string_view lemma);
Coarse coarse_category(const VerbClassLexicon& lex, std::string_view lemma);

struct ClassTally {
  std::string name;
  int count = 0;
  double share = 0.0;
};

struct EventProfile {
  std::string article_id;
  std::vector<ClassTally> classes;  // every declared class, declaration order
  int unknown_count = 0;
  int total_verbs = 0;
  std::optional<std::string> dominant;

  const ClassTally* find(std::string_view name) const;
  int count(std::string_view name) const;
  double share(std::string_view name) const;
  double unknown_share() const;
  /// Declared classes with no occurrence in the article.
  std::vector<std::string> absent_classes() const;
};

EventProfile profile_article(std::string article_id, std::span<const corpus::VerbOccurrence> occurrences,
                             const VerbClassLexicon& lex);

/// Integer percent, rounded down: 11 of 19 -> 57.
int percent_floor(int part, int whole);

/// Article ids by share of `class_name` (desc), ties by id (asc), at most n.
/// Throws std::invalid_argument for an undeclared class or n < 1.
std::vector<std::string> select_top_articles(std::span<const EventProfile> profiles, const VerbClassLexicon& lex,
                                             std::string_view class_name, int n);

struct ArticleTypeRule {
  std::string class_name;
  std::vector<std::string> types;
};

/// Parses a JSON array of {"class": name, "types": [..]}. Throws
/// std::invalid_argument on schema violations.
std::vector<ArticleTypeRule> load_rules(std::string_view json_text);

std::vector<std::string> suggest_article_types(const EventProfile& profile, std::span<const ArticleTypeRule> rules);

}  // namespace verbprof::evca
