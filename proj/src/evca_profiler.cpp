#include "verbprof/evca_profiler.hpp"

#include <algorithm>

#include "json.hpp"

namespace verbprof::evca {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(Coarse c) {
  switch (c) {
    case Coarse::Communication: return "Communication";
    case Coarse::Support: return "Support";
    case Coarse::Content: return "Content";
    case Coarse::Unknown: break;
  }
  return "Unknown";
}

std::optional<Coarse> parse_coarse(std::string_view s) {
  if (s == "Communication") return Coarse::Communication;
  if (s == "Support") return Coarse::Support;
  if (s == "Content") return Coarse::Content;
  return std::nullopt;
}

LexiconError::LexiconError(const std::string& message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

VerbClassLexicon VerbClassLexicon::parse(std::string_view text) {
  VerbClassLexicon lex;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '@') {
      constexpr std::string_view kDirective = "@class";
      if (line.substr(0, kDirective.size()) != kDirective) throw LexiconError("unknown directive", line_no);
      auto rest = trim(line.substr(kDirective.size()));
      auto space = rest.find_first_of(" \t");
      std::string name(rest.substr(0, space));
      if (name.empty()) throw LexiconError("class declaration without a name", line_no);
      auto attrs = space == std::string_view::npos ? std::string_view{} : trim(rest.substr(space));
      constexpr std::string_view kCoarse = "coarse=";
      if (attrs.substr(0, kCoarse.size()) != kCoarse) {
        throw LexiconError("class '" + name + "' is missing its coarse=<Communication|Support|Content> mapping",
                           line_no);
      }
      auto value = attrs.substr(kCoarse.size());
      auto coarse = parse_coarse(value);
      if (!coarse) throw LexiconError("class '" + name + "' has invalid coarse value '" + std::string(value) + "'", line_no);
      if (lex.coarse_.contains(name)) throw LexiconError("class '" + name + "' declared twice", line_no);
      lex.coarse_.emplace(name, *coarse);
      lex.classes_.push_back(std::move(name));
      continue;
    }

    auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw LexiconError("entry must be '<lemma>\\t<class>'", line_no);
    std::string lemma(trim(line.substr(0, tab)));
    std::string cls(trim(line.substr(tab + 1)));
    if (lemma.empty() || cls.empty()) throw LexiconError("entry must be '<lemma>\\t<class>'", line_no);
    if (!lex.coarse_.contains(cls)) throw LexiconError("lemma '" + lemma + "' uses undeclared class '" + cls + "'", line_no);
    if (lex.entries_.contains(lemma)) throw LexiconError("duplicate lemma '" + lemma + "'", line_no);
    lex.entries_.emplace(std::move(lemma), std::move(cls));
  }
  return lex;
}

bool VerbClassLexicon::has_class(std::string_view name) const { return coarse_.find(name) != coarse_.end(); }

Coarse VerbClassLexicon::coarse_of_class(std::string_view name) const {
  auto it = coarse_.find(name);
  return it == coarse_.end() ? Coarse::Unknown : it->second;
}

std::optional<std::string> VerbClassLexicon::class_of(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

corpus::LemmaSet VerbClassLexicon::lemmas_in(Coarse coarse) const {
  corpus::LemmaSet out;
  for (const auto& [lemma, cls] : entries_) {
    if (coarse_of_class(cls) == coarse) out.insert(lemma);
  }
  return out;
}

VerbClassLexicon load_lexicon(std::string_view text) { return VerbClassLexicon::parse(text); }

std::optional<std::string> classify_verb(const VerbClassLexicon& lex, std::string_view lemma) {
  return lex.class_of(lemma);
}

Coarse coarse_category(const VerbClassLexicon& lex, std::string_view lemma) {
  auto cls = lex.class_of(lemma);
  return cls ? lex.coarse_of_class(*cls) : Coarse::Unknown;
}

const ClassTally* EventProfile::find(std::string_view name) const {
  auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassTally& t) { return t.name == name; });
  return it == classes.end() ? nullptr : &*it;
}

int EventProfile::count(std::string_view name) const {
  const auto* t = find(name);
  return t ? t->count : 0;
}

double EventProfile::share(std::string_view name) const {
  const auto* t = find(name);
  return t ? t->share : 0.0;
}

double EventProfile::unknown_share() const {
  return total_verbs > 0 ? static_cast<double>(unknown_count) / total_verbs : 0.0;
}

std::vector<std::string> EventProfile::absent_classes() const {
  std::vector<std::string> out;
  for (const auto& t : classes) {
    if (t.count == 0) out.push_back(t.name);
  }
  return out;
}

EventProfile profile_article(std::string article_id, std::span<const corpus::VerbOccurrence> occurrences,
                             const VerbClassLexicon& lex) {
  EventProfile p;
  p.article_id = std::move(article_id);
  p.total_verbs = static_cast<int>(occurrences.size());
  for (const auto& name : lex.classes()) p.classes.push_back(ClassTally{name, 0, 0.0});

  for (const auto& occ : occurrences) {
    auto cls = lex.class_of(occ.lemma);
    if (!cls) {
      ++p.unknown_count;
      continue;
    }
    auto it = std::find_if(p.classes.begin(), p.classes.end(), [&](const ClassTally& t) { return t.name == *cls; });
    ++it->count;
  }

  const ClassTally* best = nullptr;
  for (auto& t : p.classes) {
    if (p.total_verbs > 0) t.share = static_cast<double>(t.count) / p.total_verbs;
    if (t.count == 0) continue;
    if (best == nullptr || t.count > best->count || (t.count == best->count && t.name < best->name)) best = &t;
  }
  if (best != nullptr) p.dominant = best->name;
  return p;
}

int percent_floor(int part, int whole) {
  if (whole <= 0) return 0;
  return static_cast<int>((100LL * part) / whole);
}

std::vector<std::string> select_top_articles(std::span<const EventProfile> profiles, const VerbClassLexicon& lex,
                                             std::string_view class_name, int n) {
  if (!lex.has_class(class_name)) throw std::invalid_argument("unknown class '" + std::string(class_name) + "'");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<std::pair<double, const std::string*>> ranked;
  ranked.reserve(profiles.size());
  for (const auto& p : profiles) ranked.emplace_back(p.share(class_name), &p.article_id);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return *a.second < *b.second;
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(n); ++i) out.push_back(*ranked[i].second);
  return out;
}

std::vector<ArticleTypeRule> load_rules(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("rules: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("rules: top level must be an array");
  std::vector<ArticleTypeRule> rules;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("class") || !item["class"].is_string() || !item.contains("types") ||
        !item["types"].is_array()) {
      throw std::invalid_argument("rules: each rule needs a string 'class' and an array 'types'");
    }
    ArticleTypeRule rule{item["class"].get<std::string>(), {}};
    for (const auto& t : item["types"]) {
      if (!t.is_string()) throw std::invalid_argument("rules: types must be strings");
      rule.types.push_back(t.get<std::string>());
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<std::string> suggest_article_types(const EventProfile& profile, std::span<const ArticleTypeRule> rules) {
  if (!profile.dominant) return {};
  for (const auto& r : rules) {
    if (r.class_name == *profile.dominant) return r.types;
  }
  return {};
}

}  // namespace verbprof::evca
