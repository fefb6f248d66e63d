#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "verbprof/cli.hpp"
#include "verbprof/corpus.hpp"
#include "verbprof/evca_profiler.hpp"
#include "verbprof/rank_stats.hpp"
#include "verbprof/report.hpp"
#include "verbprof/taxonomy.hpp"
#include "verbprof/wn_profiler.hpp"

namespace verbprof::cli {

namespace {

using report::Json;

std::string read_file(const std::string& path, std::string_view what) {
  if (path.empty()) throw UsageError("missing --" + std::string(what) + " path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + std::string(what) + " file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

evca::VerbClassLexicon load_lexicon_file(const RunConfig& cfg) {
  auto text = read_file(cfg.lexicon, "lexicon");
  try {
    return evca::load_lexicon(text);
  } catch (const evca::LexiconError& e) {
    throw InputError(cfg.lexicon + ": " + e.what());
  }
}

taxonomy::TaxonomyGraph load_taxonomy_file(const RunConfig& cfg) {
  auto text = read_file(cfg.taxonomy, "taxonomy");
  try {
    return taxonomy::load_taxonomy(text);
  } catch (const taxonomy::TaxonomyError& e) {
    throw InputError(cfg.taxonomy + ": " + e.what());
  }
}

std::vector<evca::ArticleTypeRule> load_rules_file(const RunConfig& cfg) {
  auto text = read_file(cfg.rules, "rules");
  try {
    return evca::load_rules(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(cfg.rules + ": " + e.what());
  }
}

struct ExtractedArticle {
  std::string id;
  std::size_t sentences = 0;
  std::vector<corpus::VerbOccurrence> verbs;
};

// Parses, filters by length, extracts, and orders by article id.
std::vector<ExtractedArticle> load_corpus(const RunConfig& cfg, const evca::VerbClassLexicon& lex, std::ostream& err) {
  auto text = read_file(cfg.corpus, "corpus");
  std::vector<corpus::Article> articles;
  try {
    articles = corpus::parse_treebank_lite(text);
  } catch (const corpus::ParseError& e) {
    throw InputError(cfg.corpus + ": " + e.what());
  }
  const auto comm = lex.lemmas_in(evca::Coarse::Communication);
  std::vector<ExtractedArticle> out;
  std::size_t skipped = 0;
  for (const auto& a : articles) {
    if (a.sentences.size() < static_cast<std::size_t>(cfg.min_sentences)) {
      ++skipped;
      continue;
    }
    out.push_back(ExtractedArticle{a.id, a.sentences.size(), corpus::extract_verbs(a, comm)});
  }
  if (skipped > 0) {
    err << "warning: skipped " << skipped << " article(s) with fewer than " << cfg.min_sentences << " sentences\n";
  }
  if (out.empty()) err << "warning: no article passed the filters\n";
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::vector<evca::EventProfile> evca_profiles(const std::vector<ExtractedArticle>& arts,
                                              const evca::VerbClassLexicon& lex) {
  std::vector<evca::EventProfile> out;
  out.reserve(arts.size());
  for (const auto& a : arts) out.push_back(evca::profile_article(a.id, a.verbs, lex));
  return out;
}

std::vector<wn::SynsetProfile> wn_profiles(const std::vector<ExtractedArticle>& arts,
                                           const taxonomy::TaxonomyGraph& graph, int max_edges) {
  std::vector<wn::SynsetProfile> out;
  out.reserve(arts.size());
  for (const auto& a : arts) out.push_back(wn::synset_profile(a.id, a.verbs, graph, max_edges));
  return out;
}

std::string percent(int part, int whole) { return std::to_string(evca::percent_floor(part, whole)) + "%"; }

std::string fixed3(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

// ---- extract ---------------------------------------------------------------

void emit_extract(const std::vector<ExtractedArticle>& arts, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      for (const auto& a : arts) out << report::extraction_record(a.id, a.verbs).dump() << '\n';
      break;
    case OutputFormat::Csv:
      report::write_extraction_csv_header(out);
      for (const auto& a : arts) report::write_extraction_csv(out, a.id, a.verbs);
      break;
    case OutputFormat::Table:
      for (const auto& a : arts) {
        out << a.id << " (" << a.sentences << " sentences, " << a.verbs.size() << " verbs)\n";
        for (const auto& v : a.verbs) {
          out << "  " << std::setw(4) << v.sentence_index << "  " << std::left << std::setw(15)
              << corpus::to_string(v.role) << std::setw(16) << v.form << v.lemma << std::right << '\n';
        }
      }
      break;
  }
}

// ---- profile (evca) ------------------------------------------------------------

Json evca_summary(const std::vector<evca::EventProfile>& profiles, const evca::VerbClassLexicon& lex) {
  std::map<std::string, int> totals;
  for (const auto& name : lex.classes()) totals[name] = 0;
  std::map<std::string, int> dominant;
  int total_verbs = 0;
  int unknown = 0;
  for (const auto& p : profiles) {
    total_verbs += p.total_verbs;
    unknown += p.unknown_count;
    for (const auto& t : p.classes) totals[t.name] += t.count;
    if (p.dominant) ++dominant[*p.dominant];
  }

  std::vector<std::pair<std::string, int>> ranking(totals.begin(), totals.end());
  std::stable_sort(ranking.begin(), ranking.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  Json class_ranking = Json::array();
  for (const auto& [name, n] : ranking) {
    class_ranking.push_back(Json{{"class", name},
                                 {"count", n},
                                 {"share", total_verbs > 0 ? static_cast<double>(n) / total_verbs : 0.0}});
  }

  std::vector<std::pair<std::string, int>> dom(dominant.begin(), dominant.end());
  std::stable_sort(dom.begin(), dom.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  Json dominant_articles = Json::array();
  for (const auto& [name, n] : dom) dominant_articles.push_back(Json{{"class", name}, {"articles", n}});

  Json coarse = Json::object();
  for (auto c : {evca::Coarse::Communication, evca::Coarse::Support, evca::Coarse::Content}) {
    int n = 0;
    for (const auto& [name, count] : totals) {
      if (lex.coarse_of_class(name) == c) n += count;
    }
    coarse[std::string(evca::to_string(c))] = n;
  }
  coarse["Unknown"] = unknown;

  const int classified = total_verbs - unknown;
  return Json{{"mode", "evca"},
              {"articles", profiles.size()},
              {"total_verbs", total_verbs},
              {"classified_verbs", classified},
              {"token_coverage", total_verbs > 0 ? static_cast<double>(classified) / total_verbs : 0.0},
              {"coarse", std::move(coarse)},
              {"class_ranking", std::move(class_ranking)},
              {"dominant_articles", std::move(dominant_articles)}};
}

void profile_evca(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto lex = load_lexicon_file(cfg);
  std::optional<std::vector<evca::ArticleTypeRule>> rules;
  if (!cfg.rules.empty()) rules = load_rules_file(cfg);
  auto arts = load_corpus(cfg, lex, err);
  auto profiles = evca_profiles(arts, lex);

  switch (cfg.format) {
    case OutputFormat::Json:
      for (const auto& p : profiles) {
        if (rules) {
          auto types = evca::suggest_article_types(p, *rules);
          out << report::evca_record(p, &types).dump() << '\n';
        } else {
          out << report::evca_record(p).dump() << '\n';
        }
      }
      out << Json{{"summary", evca_summary(profiles, lex)}}.dump() << '\n';
      break;
    case OutputFormat::Csv:
      report::write_evca_csv_header(out);
      for (const auto& p : profiles) report::write_evca_csv(out, p);
      break;
    case OutputFormat::Table: {
      for (const auto& p : profiles) {
        out << p.article_id << ": " << p.total_verbs << " verbs, dominant " << p.dominant.value_or("-");
        if (rules) {
          auto types = evca::suggest_article_types(p, *rules);
          if (!types.empty()) {
            out << " [";
            for (std::size_t i = 0; i < types.size(); ++i) out << (i ? ", " : "") << types[i];
            out << "]";
          }
        }
        out << '\n';
        for (const auto& t : p.classes) {
          if (t.count == 0) continue;
          out << "    " << std::left << std::setw(16) << t.name << std::right << std::setw(4) << t.count << "  "
              << percent(t.count, p.total_verbs) << '\n';
        }
        if (p.unknown_count > 0) {
          out << "    " << std::left << std::setw(16) << "(unknown)" << std::right << std::setw(4) << p.unknown_count
              << "  " << percent(p.unknown_count, p.total_verbs) << '\n';
        }
        auto absent = p.absent_classes();
        if (!absent.empty()) {
          out << "    absent:";
          for (const auto& a : absent) out << ' ' << a;
          out << '\n';
        }
      }
      auto s = evca_summary(profiles, lex);
      const int total = s["total_verbs"].get<int>();
      out << "-- " << profiles.size() << " articles, " << total << " verbs, " << s["classified_verbs"].get<int>()
          << " classified (" << percent(s["classified_verbs"].get<int>(), total) << ")\n";
      for (const auto& [name, n] : s["coarse"].items()) {
        out << "   " << std::left << std::setw(16) << name << std::right << std::setw(6) << n.get<int>() << "  "
            << percent(n.get<int>(), total) << '\n';
      }
      out << "-- class ranking\n";
      for (const auto& r : s["class_ranking"]) {
        out << "   " << std::left << std::setw(16) << r["class"].get<std::string>() << std::right << std::setw(6)
            << r["count"].get<int>() << "  " << percent(r["count"].get<int>(), total) << '\n';
      }
      out << "-- dominant classes\n";
      for (const auto& r : s["dominant_articles"]) {
        out << "   " << std::left << std::setw(16) << r["class"].get<std::string>() << std::right << std::setw(6)
            << r["articles"].get<int>() << " articles\n";
      }
      break;
    }
  }
}

// ---- profile (wn) ------------------------------------------------------------

Json wn_summary(const std::vector<wn::SynsetProfile>& profiles, const RunConfig& cfg, std::ostream& err) {
  std::map<std::string, long long> totals;
  for (const auto& p : profiles) {
    for (const auto& [id, n] : p.counts) totals[id] += n;
  }
  std::vector<std::pair<std::string, long long>> ranking(totals.begin(), totals.end());
  std::stable_sort(ranking.begin(), ranking.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  Json synset_ranking = Json::array();
  for (const auto& [id, n] : ranking) synset_ranking.push_back(Json{{"synset", id}, {"count", n}});

  Json dominant_ranking = Json::array();
  for (const auto& d : wn::rank_dominant_synsets(profiles)) {
    dominant_ranking.push_back(Json{{"synset", d.synset_id}, {"articles", d.articles}});
  }

  Json coverage = nullptr;
  if (!dominant_ranking.empty()) {
    coverage = wn::top_node_coverage(profiles, cfg.top_k);
  } else {
    err << "warning: no article has a dominant synset; coverage undefined\n";
  }
  return Json{{"mode", "wn"},
              {"articles", profiles.size()},
              {"max_edges", cfg.max_edges},
              {"synset_ranking", std::move(synset_ranking)},
              {"dominant_ranking", std::move(dominant_ranking)},
              {"top_k", cfg.top_k},
              {"coverage", std::move(coverage)}};
}

void profile_wn(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto lex = load_lexicon_file(cfg);
  auto graph = load_taxonomy_file(cfg);
  auto arts = load_corpus(cfg, lex, err);
  auto profiles = wn_profiles(arts, graph, cfg.max_edges);

  switch (cfg.format) {
    case OutputFormat::Json:
      for (const auto& p : profiles) out << report::wn_record(p).dump() << '\n';
      out << Json{{"summary", wn_summary(profiles, cfg, err)}}.dump() << '\n';
      break;
    case OutputFormat::Csv:
      report::write_wn_csv_header(out);
      for (const auto& p : profiles) report::write_wn_csv(out, p);
      break;
    case OutputFormat::Table: {
      for (const auto& p : profiles) {
        out << p.article_id << ": " << p.total_verbs << " verbs, dominant " << wn::dominant_synset(p).value_or("-")
            << '\n';
      }
      auto s = wn_summary(profiles, cfg, err);
      out << "-- synset ranking (hits)\n";
      for (const auto& r : s["synset_ranking"]) {
        const auto* syn = graph.find(r["synset"].get<std::string>());
        out << "   " << std::left << std::setw(24) << r["synset"].get<std::string>() << std::right << std::setw(8)
            << r["count"].get<long long>();
        if (syn != nullptr) {
          out << "  (";
          for (std::size_t i = 0; i < syn->lemmas.size(); ++i) out << (i ? ", " : "") << syn->lemmas[i];
          out << ")";
        }
        out << '\n';
      }
      out << "-- dominant synsets\n";
      for (const auto& r : s["dominant_ranking"]) {
        out << "   " << std::left << std::setw(24) << r["synset"].get<std::string>() << std::right << std::setw(8)
            << r["articles"].get<int>() << " articles\n";
      }
      out << "-- coverage of top " << cfg.top_k << ": ";
      if (s["coverage"].is_null()) {
        out << "undefined\n";
      } else {
        out << fixed3(s["coverage"].get<double>()) << '\n';
      }
      break;
    }
  }
}

// ---- correlate ------------------------------------------------------------

std::vector<std::string> top_categories(const stats::ObservationTable& table, int top) {
  std::vector<std::pair<std::string, double>> totals;
  for (const auto& [name, col] : table.columns) {
    double sum = 0;
    for (double v : col) sum += v;
    totals.emplace_back(name, sum);
  }
  std::stable_sort(totals.begin(), totals.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < totals.size() && i < static_cast<std::size_t>(top); ++i) out.push_back(totals[i].first);
  return out;
}

}  // namespace

void cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  auto lex = load_lexicon_file(cfg);
  emit_extract(load_corpus(cfg, lex, err), cfg.format, out);
}

void cmd_profile(const RunConfig& cfg, ProfileMode mode, std::ostream& out, std::ostream& err) {
  validate(cfg);
  if (mode == ProfileMode::Evca) {
    profile_evca(cfg, out, err);
  } else {
    profile_wn(cfg, out, err);
  }
}

void cmd_correlate(const RunConfig& cfg, CorrelateBy by, int top, ValueKind values, std::ostream& out,
                   std::ostream& err) {
  validate(cfg);
  if (top < 2) throw UsageError("correlate needs --top >= 2");
  auto lex = load_lexicon_file(cfg);
  std::optional<taxonomy::TaxonomyGraph> graph;
  if (by == CorrelateBy::Synset) graph = load_taxonomy_file(cfg);
  auto arts = load_corpus(cfg, lex, err);
  if (arts.size() < 2) {
    throw InputError("correlate needs at least 2 articles after filtering, got " + std::to_string(arts.size()));
  }

  stats::ObservationTable table;
  for (const auto& a : arts) table.row_ids.push_back(a.id);
  const bool shares = values == ValueKind::Shares;

  if (by == CorrelateBy::Class) {
    auto profiles = evca_profiles(arts, lex);
    for (const auto& name : lex.classes()) {
      std::vector<double> col;
      for (const auto& p : profiles) col.push_back(shares ? p.share(name) : p.count(name));
      table.add_column(name, std::move(col));
    }
  } else {
    auto profiles = wn_profiles(arts, *graph, cfg.max_edges);
    std::map<std::string, std::vector<double>> cols;
    for (std::size_t r = 0; r < profiles.size(); ++r) {
      for (const auto& [id, n] : profiles[r].counts) {
        auto& col = cols[id];
        col.resize(profiles.size(), 0.0);
        col[r] = n;
      }
    }
    if (shares) {
      for (std::size_t r = 0; r < profiles.size(); ++r) {
        long long hits = 0;
        for (const auto& [id, n] : profiles[r].counts) hits += n;
        if (hits == 0) continue;
        for (auto& [id, col] : cols) col[r] /= static_cast<double>(hits);
      }
    }
    for (auto& [id, col] : cols) table.add_column(id, std::move(col));
  }

  auto categories = top_categories(table, top);
  if (categories.size() < static_cast<std::size_t>(top)) {
    err << "warning: only " << categories.size() << " categories available (requested " << top << ")\n";
  }
  if (categories.size() < 2) throw InputError("correlate needs at least 2 categories");
  auto matrix = stats::correlation_matrix(table, categories);

  const char* by_name = by == CorrelateBy::Class ? "class" : "synset";
  const char* values_name = shares ? "shares" : "counts";
  switch (cfg.format) {
    case OutputFormat::Json: {
      Json doc{{"by", by_name}, {"values", values_name}, {"rows", table.row_ids.size()}};
      Json body = report::correlation_json(matrix);
      for (auto& [k, v] : body.items()) doc[k] = v;
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      report::write_correlation_csv(out, matrix);
      break;
    case OutputFormat::Table: {
      out << "Kendall tau-b by " << by_name << " (" << values_name << ", " << table.row_ids.size() << " articles)\n";
      std::size_t w = 8;
      for (const auto& c : matrix.categories) w = std::max(w, c.size() + 1);
      out << std::setw(static_cast<int>(w)) << "";
      for (std::size_t j = 0; j + 1 < matrix.categories.size(); ++j) {
        out << std::setw(static_cast<int>(w)) << matrix.categories[j];
      }
      out << '\n';
      for (std::size_t i = 1; i < matrix.categories.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(w)) << matrix.categories[i] << std::right;
        for (std::size_t j = 0; j < i; ++j) {
          const auto& v = matrix.values[i][j];
          out << std::setw(static_cast<int>(w)) << (v ? fixed3(*v) : std::string("NA"));
        }
        out << '\n';
      }
      break;
    }
  }
}

void cmd_top_articles(const RunConfig& cfg, const std::optional<std::string>& class_name, int n, std::ostream& out,
                      std::ostream& err) {
  validate(cfg);
  if (n < 1) throw UsageError("--n must be >= 1");
  auto lex = load_lexicon_file(cfg);
  if (class_name && !lex.has_class(*class_name)) {
    std::string valid;
    for (const auto& c : lex.classes()) valid += (valid.empty() ? "" : ", ") + c;
    throw UsageError("unknown class '" + *class_name + "'; declared classes: " + valid);
  }
  auto arts = load_corpus(cfg, lex, err);
  auto profiles = evca_profiles(arts, lex);
  std::map<std::string, const evca::EventProfile*> by_id;
  for (const auto& p : profiles) by_id[p.article_id] = &p;

  std::vector<std::string> classes = class_name ? std::vector<std::string>{*class_name} : lex.classes();
  if (cfg.format == OutputFormat::Csv) out << "class,rank,article_id,share\n";
  for (const auto& cls : classes) {
    auto ids = evca::select_top_articles(profiles, lex, cls, n);
    if (cfg.format == OutputFormat::Table) out << cls << '\n';
    for (std::size_t r = 0; r < ids.size(); ++r) {
      const double share = by_id[ids[r]]->share(cls);
      switch (cfg.format) {
        case OutputFormat::Json:
          out << Json{{"class", cls}, {"rank", r + 1}, {"article_id", ids[r]}, {"share", share}}.dump() << '\n';
          break;
        case OutputFormat::Csv:
          out << report::csv_field(cls) << ',' << r + 1 << ',' << report::csv_field(ids[r]) << ','
              << report::format_number(share) << '\n';
          break;
        case OutputFormat::Table: {
          const auto* p = by_id[ids[r]];
          out << "  " << std::setw(3) << r + 1 << ". " << std::left << std::setw(20) << ids[r] << std::right
              << percent(p->count(cls), p->total_verbs) << " (" << p->count(cls) << "/" << p->total_verbs << ")\n";
          break;
        }
      }
    }
  }
}

}  // namespace verbprof::cli
