#include "verbprof/corpus.hpp"

#include <deque>

namespace verbprof::corpus {

namespace {

// Function tags and indices are dropped: S-TPC-1 -> S, NP=2 -> NP. Labels
// that begin with '-' (-NONE-, -LRB-) are kept whole.
std::string_view base_label(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;
  auto cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

bool is_clause(std::string_view label) {
  auto base = base_label(label);
  return base == "S" || base == "SINV" || base == "SQ";
}

bool is_vp(const SentenceTree& t) { return !t.is_leaf() && base_label(t.label) == "VP"; }

bool is_verb_leaf(const SentenceTree& t) { return t.is_leaf() && is_verb_tag(t.token->pos); }

bool is_auxiliary(std::string_view lemma) { return lemma == "be" || lemma == "have" || lemma == "do"; }

// Breadth-first: the shallowest match wins, left to right within a level.
template <typename Pred>
const SentenceTree* find_first(const SentenceTree& root, Pred pred) {
  std::deque<const SentenceTree*> queue;
  for (const auto& child : root.children) queue.push_back(&child);
  while (!queue.empty()) {
    const SentenceTree* t = queue.front();
    queue.pop_front();
    if (pred(*t)) return t;
    for (const auto& child : t->children) queue.push_back(&child);
  }
  return nullptr;
}

struct MainVerb {
  const Token* token;
  const SentenceTree* vp;
};

// Walks a VP chain: the first verb leaf wins unless it is an auxiliary
// followed by a VP that itself yields a verb.
std::optional<MainVerb> walk_vp(const SentenceTree& vp) {
  const auto& kids = vp.children;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const SentenceTree& child = kids[i];
    if (is_verb_leaf(child)) {
      if (is_auxiliary(lemmatize(child.token->form, child.token->pos))) {
        for (std::size_t j = i + 1; j < kids.size(); ++j) {
          if (!is_vp(kids[j])) continue;
          if (auto inner = walk_vp(kids[j])) return inner;
          break;
        }
      }
      return MainVerb{&*child.token, &vp};
    }
    // Modals, infinitival "to" and coordinated VPs put the verb one level down.
    if (is_vp(child)) {
      if (auto inner = walk_vp(child)) return inner;
    }
  }
  return std::nullopt;
}

std::optional<MainVerb> main_verb_of_clause(const SentenceTree& clause) {
  const SentenceTree* vp = is_vp(clause) ? &clause : find_first(clause, is_vp);
  if (vp == nullptr) return std::nullopt;
  return walk_vp(*vp);
}

const SentenceTree* topmost_clause(const SentenceTree& root) {
  if (!root.is_leaf() && is_clause(root.label)) return &root;
  return find_first(root, [](const SentenceTree& t) { return !t.is_leaf() && is_clause(t.label); });
}

std::optional<MainVerb> complement_verb(const SentenceTree& vp) {
  for (const auto& child : vp.children) {
    if (child.is_leaf()) continue;
    auto base = base_label(child.label);
    if (base == "S") return main_verb_of_clause(child);
    if (base == "SBAR") {
      const SentenceTree* clause = topmost_clause(child);
      if (clause == nullptr) return std::nullopt;
      return main_verb_of_clause(*clause);
    }
  }
  return std::nullopt;
}

}  // namespace

const Token* find_main_verb(const SentenceTree& clause) {
  const SentenceTree* top = topmost_clause(clause);
  if (top == nullptr) return nullptr;
  auto found = main_verb_of_clause(*top);
  return found ? found->token : nullptr;
}

std::vector<VerbOccurrence> extract_verbs(const Article& article, const LemmaSet& communication_lemmas) {
  std::vector<VerbOccurrence> out;
  for (std::size_t s = 0; s < article.sentences.size(); ++s) {
    const SentenceTree* top = topmost_clause(article.sentences[s]);
    if (top == nullptr) continue;
    auto main = main_verb_of_clause(*top);
    if (!main) continue;
    std::string lemma = lemmatize(main->token->form, main->token->pos);
    const bool communicative = communication_lemmas.contains(lemma);
    out.push_back(VerbOccurrence{std::move(lemma), main->token->form, s, VerbRole::Main});
    if (!communicative) continue;
    if (auto sub = complement_verb(*main->vp)) {
      out.push_back(VerbOccurrence{lemmatize(sub->token->form, sub->token->pos), sub->token->form, s,
                                   VerbRole::CommComplement});
    }
  }
  return out;
}

}  // namespace verbprof::corpus
