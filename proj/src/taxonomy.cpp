#include "verbprof/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace verbprof::taxonomy {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> split_list(std::string_view field) {
  std::vector<std::string> items;
  field = trim(field);
  if (field.empty()) return items;
  for (auto item : split(field, ',')) items.emplace_back(trim(item));
  return items;
}

}  // namespace

TaxonomyError::TaxonomyError(const std::string& message, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

TaxonomyGraph TaxonomyGraph::parse(std::string_view text) {
  TaxonomyGraph g;
  std::vector<std::vector<std::string>> parent_ids;
  std::vector<std::size_t> lines;

  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 4) {
      throw TaxonomyError("expected 2 to 4 tab-separated fields, got " + std::to_string(fields.size()), line_no);
    }
    Synset s;
    s.id = std::string(trim(fields[0]));
    if (s.id.empty()) throw TaxonomyError("empty synset id", line_no);
    if (g.by_id_.contains(s.id)) throw TaxonomyError("duplicate synset id '" + s.id + "'", line_no);
    for (auto& lemma : split_list(fields[1])) {
      if (lemma.empty()) throw TaxonomyError("empty lemma in synset '" + s.id + "'", line_no);
      if (std::find(s.lemmas.begin(), s.lemmas.end(), lemma) == s.lemmas.end()) s.lemmas.push_back(lemma);
    }
    if (s.lemmas.empty()) throw TaxonomyError("synset '" + s.id + "' has no lemmas", line_no);
    std::vector<std::string> parents = fields.size() > 2 ? split_list(fields[2]) : std::vector<std::string>{};
    for (const auto& p : parents) {
      if (p.empty()) throw TaxonomyError("empty hypernym id in synset '" + s.id + "'", line_no);
    }
    if (fields.size() > 3 && !trim(fields[3]).empty()) s.gloss = std::string(trim(fields[3]));

    g.by_id_.emplace(s.id, g.synsets_.size());
    g.synsets_.push_back(std::move(s));
    parent_ids.push_back(std::move(parents));
    lines.push_back(line_no);
  }

  g.parents_.resize(g.synsets_.size());
  for (std::size_t i = 0; i < g.synsets_.size(); ++i) {
    for (const auto& pid : parent_ids[i]) {
      auto it = g.by_id_.find(pid);
      if (it == g.by_id_.end()) {
        throw TaxonomyError("synset '" + g.synsets_[i].id + "' names unknown hypernym '" + pid + "'", lines[i]);
      }
      auto& ps = g.parents_[i];
      if (std::find(ps.begin(), ps.end(), it->second) == ps.end()) ps.push_back(it->second);
    }
  }

  // Iterative three-colour DFS; the grey stack is the current path.
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(g.synsets_.size(), kWhite);
  for (std::size_t start = 0; start < g.synsets_.size(); ++start) {
    if (colour[start] != kWhite) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
    colour[start] = kGrey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == g.parents_[node].size()) {
        colour[node] = kBlack;
        stack.pop_back();
        continue;
      }
      std::size_t parent = g.parents_[node][next++];
      if (colour[parent] == kGrey) {
        std::string cycle;
        auto from = std::find_if(stack.begin(), stack.end(), [&](const auto& e) { return e.first == parent; });
        for (auto it = from; it != stack.end(); ++it) cycle += g.synsets_[it->first].id + " -> ";
        cycle += g.synsets_[parent].id;
        throw TaxonomyError("hypernym cycle: " + cycle, lines[parent]);
      }
      if (colour[parent] == kWhite) {
        colour[parent] = kGrey;
        stack.emplace_back(parent, 0);
      }
    }
  }

  for (std::size_t i = 0; i < g.synsets_.size(); ++i) {
    for (const auto& lemma : g.synsets_[i].lemmas) g.lemma_index_[lemma].push_back(i);
  }
  for (auto& [lemma, senses] : g.lemma_index_) {
    std::sort(senses.begin(), senses.end(),
              [&](std::size_t a, std::size_t b) { return g.synsets_[a].id < g.synsets_[b].id; });
  }
  return g;
}

std::size_t TaxonomyGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& ps : parents_) n += ps.size();
  return n;
}

std::optional<std::size_t> TaxonomyGraph::index_of(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

const Synset* TaxonomyGraph::find(std::string_view id) const {
  auto idx = index_of(id);
  return idx ? &synsets_[*idx] : nullptr;
}

std::span<const std::size_t> TaxonomyGraph::senses(std::string_view lemma) const {
  auto it = lemma_index_.find(lemma);
  if (it == lemma_index_.end()) return {};
  return it->second;
}

std::vector<std::pair<std::size_t, int>> TaxonomyGraph::ancestors_within(std::size_t index, int max_edges) const {
  std::vector<std::pair<std::size_t, int>> found{{index, 0}};
  std::vector<int> dist(synsets_.size(), -1);
  dist[index] = 0;
  std::deque<std::size_t> queue{index};
  while (!queue.empty()) {
    std::size_t node = queue.front();
    queue.pop_front();
    if (dist[node] == max_edges) continue;
    for (std::size_t parent : parents_[node]) {
      if (dist[parent] >= 0) continue;
      dist[parent] = dist[node] + 1;
      found.emplace_back(parent, dist[parent]);
      queue.push_back(parent);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

TaxonomyGraph load_taxonomy(std::string_view text) { return TaxonomyGraph::parse(text); }

CommonAncestors common_ancestors(const TaxonomyGraph& graph, std::string_view lemma_a, std::string_view lemma_b,
                                 int max_edges) {
  if (max_edges < 0) throw std::invalid_argument("max_edges must be non-negative");
  CommonAncestors result;
  auto senses_a = graph.senses(lemma_a);
  auto senses_b = graph.senses(lemma_b);
  result.lemma_a_known = !senses_a.empty();
  result.lemma_b_known = !senses_b.empty();
  if (!result.lemmas_known()) return result;

  std::vector<std::vector<std::pair<std::size_t, int>>> up_b;
  up_b.reserve(senses_b.size());
  for (std::size_t sb : senses_b) up_b.push_back(graph.ancestors_within(sb, max_edges));

  for (std::size_t sa : senses_a) {
    auto up_a = graph.ancestors_within(sa, max_edges);
    for (std::size_t k = 0; k < senses_b.size(); ++k) {
      // Both lists are sorted by synset index: merge-intersect.
      auto ia = up_a.begin();
      auto ib = up_b[k].begin();
      while (ia != up_a.end() && ib != up_b[k].end()) {
        if (ia->first < ib->first) {
          ++ia;
        } else if (ib->first < ia->first) {
          ++ib;
        } else {
          result.matches.push_back(AncestorMatch{graph.synset(ia->first).id, graph.synset(sa).id,
                                                 graph.synset(senses_b[k]).id, ia->second, ib->second});
          ++ia;
          ++ib;
        }
      }
    }
  }

  std::sort(result.matches.begin(), result.matches.end(), [](const AncestorMatch& x, const AncestorMatch& y) {
    return std::forward_as_tuple(x.dist_a + x.dist_b, x.ancestor_id, x.sense_a, x.sense_b) <
           std::forward_as_tuple(y.dist_a + y.dist_b, y.ancestor_id, y.sense_a, y.sense_b);
  });
  return result;
}

}  // namespace verbprof::taxonomy
