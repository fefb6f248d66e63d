#pragma once

// Machine-readable emission: JSON-lines records and CSV rows.

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "verbprof/corpus.hpp"
#include "verbprof/evca_profiler.hpp"
#include "verbprof/rank_stats.hpp"
#include "verbprof/wn_profiler.hpp"

namespace verbprof::report {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips the double.
std::string format_number(double v);

/// Quotes a CSV field when it contains a comma, quote, or line break.
std::string csv_field(std::string_view s);

Json extraction_record(std::string_view article_id, std::span<const corpus::VerbOccurrence> occurrences);
void write_extraction_csv_header(std::ostream& out);
void write_extraction_csv(std::ostream& out, std::string_view article_id,
                          std::span<const corpus::VerbOccurrence> occurrences);

/// {article_id, total_verbs, class_counts, unknown_count, shares, dominant},
/// plus suggested_types when rules are supplied.
Json evca_record(const evca::EventProfile& profile, const std::vector<std::string>* suggested_types = nullptr);
void write_evca_csv_header(std::ostream& out);
void write_evca_csv(std::ostream& out, const evca::EventProfile& profile);

/// {article_id, total_verbs, counts}
Json wn_record(const wn::SynsetProfile& profile);
void write_wn_csv_header(std::ostream& out);
void write_wn_csv(std::ostream& out, const wn::SynsetProfile& profile);

/// {categories, entries:[{a, b, tau}]}; tau is null when undefined.
Json correlation_json(const stats::CorrelationMatrix& m);

/// Header row `category,<c0>,...,<c(m-1)>`, then one row per category with
/// tau against every earlier category. Undefined entries print as NA.
void write_correlation_csv(std::ostream& out, const stats::CorrelationMatrix& m);

}  // namespace verbprof::report
