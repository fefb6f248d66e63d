#include "json.hpp"
#include "verbprof/cli.hpp"

namespace verbprof::cli {

std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  return std::nullopt;
}

void apply_config_json(std::string_view json_text, RunConfig& cfg) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("config: top level must be an object");

  auto get_string = [&](const std::string& key, std::string& dst) {
    if (!doc[key].is_string()) throw UsageError("config: '" + key + "' must be a string");
    dst = doc[key].get<std::string>();
  };
  auto get_int = [&](const std::string& key, int& dst) {
    if (!doc[key].is_number_integer()) throw UsageError("config: '" + key + "' must be an integer");
    dst = doc[key].get<int>();
  };

  for (const auto& [key, value] : doc.items()) {
    if (key == "corpus") {
      get_string(key, cfg.corpus);
    } else if (key == "taxonomy") {
      get_string(key, cfg.taxonomy);
    } else if (key == "lexicon") {
      get_string(key, cfg.lexicon);
    } else if (key == "rules") {
      get_string(key, cfg.rules);
    } else if (key == "min_sentences") {
      get_int(key, cfg.min_sentences);
    } else if (key == "max_edges") {
      get_int(key, cfg.max_edges);
    } else if (key == "top_k") {
      get_int(key, cfg.top_k);
      cfg.top_k_explicit = true;
    } else if (key == "format") {
      std::string s;
      get_string(key, s);
      auto f = parse_format(s);
      if (!f) throw UsageError("config: format must be one of json, csv, table");
      cfg.format = *f;
    } else {
      throw UsageError("config: unknown field '" + key + "'");
    }
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.min_sentences < 0) throw UsageError("min_sentences must be >= 0");
  if (cfg.max_edges < 0) throw UsageError("max_edges must be >= 0");
  if (cfg.top_k < 1) throw UsageError("top_k must be >= 1");
}

}  // namespace verbprof::cli
