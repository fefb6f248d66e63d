#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "verbprof/cli.hpp"

namespace verbprof::cli {

namespace {

std::string read_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verb event profiles for parsed news articles", "verbprof"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string config_path;
  std::string format = "json";
  auto* o_corpus = app.add_option("--corpus", flags.corpus, "Treebank-lite corpus file");
  auto* o_taxonomy = app.add_option("--taxonomy", flags.taxonomy, "Synset taxonomy file");
  auto* o_lexicon = app.add_option("--lexicon", flags.lexicon, "Verb-class lexicon file");
  auto* o_rules = app.add_option("--rules", flags.rules, "Article-type rules (JSON)");
  auto* o_min = app.add_option("--min-sentences", flags.min_sentences, "Skip articles shorter than this (default 11)");
  auto* o_edges = app.add_option("--max-edges", flags.max_edges, "Hypernym steps allowed to a common ancestor (default 2)");
  auto* o_top = app.add_option("--top", flags.top_k,
                               "profile: top-k nodes for coverage (default 5); correlate: categories (default 10)");
  auto* o_format = app.add_option("--format", format, "json, csv or table")
                       ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--config", config_path, "JSON config; flags given on the command line win");

  auto* extract = app.add_subcommand("extract", "List main and complement verbs per article");

  auto* profile = app.add_subcommand("profile", "Per-article class or synset profiles");
  std::string mode = "evca";
  profile->add_option("--mode", mode, "evca or wn")->check(CLI::IsMember({"evca", "wn"}));

  auto* correlate = app.add_subcommand("correlate", "Kendall tau-b matrix over the most frequent categories");
  std::string by = "class";
  std::string values = "counts";
  correlate->add_option("--by", by, "class or synset")->check(CLI::IsMember({"class", "synset"}));
  correlate->add_option("--values", values, "counts or shares")->check(CLI::IsMember({"counts", "shares"}));

  auto* top_articles = app.add_subcommand("top-articles", "Articles with the highest share of a class");
  std::string class_name;
  int n = 5;
  auto* o_class = top_articles->add_option("--class", class_name, "Class name (default: every declared class)");
  top_articles->add_option("--n", n, "Articles per class (default 5)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) apply_config_json(read_config(config_path), cfg);
    if (o_corpus->count()) cfg.corpus = flags.corpus;
    if (o_taxonomy->count()) cfg.taxonomy = flags.taxonomy;
    if (o_lexicon->count()) cfg.lexicon = flags.lexicon;
    if (o_rules->count()) cfg.rules = flags.rules;
    if (o_min->count()) cfg.min_sentences = flags.min_sentences;
    if (o_edges->count()) cfg.max_edges = flags.max_edges;
    if (o_top->count()) {
      cfg.top_k = flags.top_k;
      cfg.top_k_explicit = true;
    }
    if (o_format->count()) cfg.format = *parse_format(format);

    if (*extract) {
      cmd_extract(cfg, out, err);
    } else if (*profile) {
      cmd_profile(cfg, mode == "wn" ? ProfileMode::Wn : ProfileMode::Evca, out, err);
    } else if (*correlate) {
      validate(cfg);
      cmd_correlate(cfg, by == "synset" ? CorrelateBy::Synset : CorrelateBy::Class,
                    cfg.top_k_explicit ? cfg.top_k : kDefaultCorrelateTop, values == "shares" ? ValueKind::Shares : ValueKind::Counts,
                    out, err);
    } else if (*top_articles) {
      std::optional<std::string> cls;
      if (o_class->count()) cls = class_name;
      cmd_top_articles(cfg, cls, n, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace verbprof::cli
