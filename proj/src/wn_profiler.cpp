#include "verbprof/wn_profiler.hpp"

#include <algorithm>
#include <stdexcept>

namespace verbprof::wn {

SynsetProfile synset_profile(std::string article_id, std::span<const corpus::VerbOccurrence> occurrences,
                             const taxonomy::TaxonomyGraph& graph, int max_edges) {
  if (max_edges < 0) throw std::invalid_argument("max_edges must be non-negative");
  SynsetProfile profile;
  profile.article_id = std::move(article_id);
  profile.total_verbs = static_cast<int>(occurrences.size());

  // Queries depend only on the lemma pair, so memoize on it.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> cache;
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    for (std::size_t j = i + 1; j < occurrences.size(); ++j) {
      const auto& a = occurrences[i].lemma;
      const auto& b = occurrences[j].lemma;
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      auto it = cache.find(key);
      if (it == cache.end()) {
        std::vector<std::string> hits;
        for (auto& m : taxonomy::common_ancestors(graph, key.first, key.second, max_edges).matches) {
          hits.push_back(std::move(m.ancestor_id));
        }
        it = cache.emplace(std::move(key), std::move(hits)).first;
      }
      for (const auto& ancestor : it->second) ++profile.counts[ancestor];
    }
  }
  return profile;
}

std::optional<std::string> dominant_synset(const SynsetProfile& profile) {
  // std::map iterates ids in ascending order, so a strict '>' keeps the smallest on ties.
  const std::pair<const std::string, int>* best = nullptr;
  for (const auto& entry : profile.counts) {
    if (best == nullptr || entry.second > best->second) best = &entry;
  }
  if (best == nullptr) return std::nullopt;
  return best->first;
}

std::vector<DominantTally> rank_dominant_synsets(std::span<const SynsetProfile> profiles) {
  std::map<std::string, int> tally;
  for (const auto& p : profiles) {
    if (auto d = dominant_synset(p)) ++tally[*d];
  }
  std::vector<DominantTally> ranked;
  for (auto& [id, n] : tally) ranked.push_back({id, n});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const DominantTally& a, const DominantTally& b) { return a.articles > b.articles; });
  return ranked;
}

double top_node_coverage(std::span<const SynsetProfile> profiles, int top_k) {
  if (top_k < 1) throw std::invalid_argument("top_k must be at least 1");
  auto ranked = rank_dominant_synsets(profiles);
  int with_dominant = 0;
  for (const auto& r : ranked) with_dominant += r.articles;
  if (with_dominant == 0) throw std::invalid_argument("no article has a dominant synset");
  int covered = 0;
  for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(top_k); ++i) covered += ranked[i].articles;
  return static_cast<double>(covered) / with_dominant;
}

}  // namespace verbprof::wn
