#pragma once

// Synset-frequency profiles built from pairwise common ancestors.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "verbprof/corpus.hpp"
#include "verbprof/taxonomy.hpp"

namespace verbprof::wn {

struct SynsetProfile {
  std::string article_id;
  std::map<std::string, int> counts;  // synset id -> hits, all >= 1
  int total_verbs = 0;
};

/// Every unordered pair of occurrences contributes one hit per common
/// ancestor match (sense pair x ancestor) within `max_edges`.
SynsetProfile synset_profile(std::string article_id, std::span<const corpus::VerbOccurrence> occurrences,
                             const taxonomy::TaxonomyGraph& graph, int max_edges);

/// Highest count; ties go to the lexicographically smallest id.
std::optional<std::string> dominant_synset(const SynsetProfile& profile);

struct DominantTally {
  std::string synset_id;
  int articles = 0;
};

/// Synsets ranked by how many articles they dominate (count desc, id asc).
std::vector<DominantTally> rank_dominant_synsets(std::span<const SynsetProfile> profiles);

/// Fraction of articles (among those with a dominant synset) whose dominant
/// synset is one of the `top_k` most frequently dominant ones. Throws
/// std::invalid_argument if top_k < 1 or no article has a dominant synset.
double top_node_coverage(std::span<const SynsetProfile> profiles, int top_k);

}  // namespace verbprof::wn
