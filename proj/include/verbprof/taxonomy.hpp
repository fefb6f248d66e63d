#pragma once

// Verb hypernym DAG and bounded common-ancestor queries.
//
// Synset file format, one synset per line, tab separated:
//
//   <id> \t <lemma,lemma,...> \t <hypernym_id,...> \t <optional gloss>
//
// An empty hypernym field marks a root. Lines starting with '#' are comments.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace verbprof::taxonomy {

struct Synset {
  std::string id;
  std::vector<std::string> lemmas;
  std::optional<std::string> gloss;
};

class TaxonomyError : public std::runtime_error {
 public:
  TaxonomyError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct AncestorMatch {
  std::string ancestor_id;
  std::string sense_a;
  std::string sense_b;
  int dist_a = 0;
  int dist_b = 0;

  bool operator==(const AncestorMatch&) const = default;
};

struct CommonAncestors {
  std::vector<AncestorMatch> matches;
  bool lemma_a_known = false;
  bool lemma_b_known = false;

  bool lemmas_known() const { return lemma_a_known && lemma_b_known; }
};

/// Immutable after construction. Synsets are addressed by dense indices in
/// file order; ids and lemmas map onto them.
class TaxonomyGraph {
 public:
  static TaxonomyGraph parse(std::string_view text);

  std::size_t size() const { return synsets_.size(); }
  std::size_t edge_count() const;

  const Synset& synset(std::size_t index) const { return synsets_[index]; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  const Synset* find(std::string_view id) const;

  std::span<const std::size_t> hypernyms(std::size_t index) const { return parents_[index]; }

  /// Senses of a lemma, ordered by synset id. Empty for unknown lemmas.
  std::span<const std::size_t> senses(std::string_view lemma) const;
  const std::map<std::string, std::vector<std::size_t>, std::less<>>& lemma_index() const { return lemma_index_; }

  /// Every synset reachable in at most `max_edges` hypernym steps, with its
  /// minimal distance (the start synset itself at distance 0). Sorted by index.
  std::vector<std::pair<std::size_t, int>> ancestors_within(std::size_t index, int max_edges) const;

 private:
  std::vector<Synset> synsets_;
  std::vector<std::vector<std::size_t>> parents_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> lemma_index_;
};

TaxonomyGraph load_taxonomy(std::string_view text);

/// All (sense_a, sense_b, ancestor) triples where the ancestor is within
/// `max_edges` hypernym steps of both senses, with minimal distances. Sorted
/// by (dist_a + dist_b, ancestor_id, sense_a, sense_b).
CommonAncestors common_ancestors(const TaxonomyGraph& graph, std::string_view lemma_a, std::string_view lemma_b,
                                 int max_edges);

}  // namespace verbprof::taxonomy
