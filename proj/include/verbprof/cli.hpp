#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests drive it in-process with string streams.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace verbprof::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2 };

inline constexpr int kDefaultCorrelateTop = 10;

enum class OutputFormat { Json, Csv, Table };
enum class ProfileMode { Evca, Wn };
enum class CorrelateBy { Class, Synset };
enum class ValueKind { Counts, Shares };

struct RunConfig {
  std::string corpus;
  std::string taxonomy;
  std::string lexicon;
  std::string rules;
  int min_sentences = 11;
  int max_edges = 2;
  int top_k = 5;
  OutputFormat format = OutputFormat::Json;
  // Set when top_k came from the command line or a config file rather than
  // the default; correlate falls back to its own default otherwise.
  bool top_k_explicit = false;
};

/// Bad flags, out-of-range settings, unknown class names. Exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable files and malformed resources. Exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<OutputFormat> parse_format(std::string_view s);

/// Overlays the fields present in a JSON config object onto `cfg`.
void apply_config_json(std::string_view json_text, RunConfig& cfg);

/// Throws UsageError when a numeric setting is below its minimum.
void validate(const RunConfig& cfg);

void cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err);
void cmd_profile(const RunConfig& cfg, ProfileMode mode, std::ostream& out, std::ostream& err);
void cmd_correlate(const RunConfig& cfg, CorrelateBy by, int top, ValueKind values, std::ostream& out,
                   std::ostream& err);
/// Without a class, ranks articles for every declared class.
void cmd_top_articles(const RunConfig& cfg, const std::optional<std::string>& class_name, int n, std::ostream& out,
                      std::ostream& err);

/// Parses `args` (program name excluded), runs the subcommand and maps
/// errors onto exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verbprof::cli
