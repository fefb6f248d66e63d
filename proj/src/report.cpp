#include "verbprof/report.hpp"

#include <charconv>

namespace verbprof::report {

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Json extraction_record(std::string_view article_id, std::span<const corpus::VerbOccurrence> occurrences) {
  Json verbs = Json::array();
  for (const auto& o : occurrences) {
    verbs.push_back(Json{{"sentence_index", o.sentence_index},
                         {"role", corpus::to_string(o.role)},
                         {"form", o.form},
                         {"lemma", o.lemma}});
  }
  return Json{{"article_id", article_id}, {"verbs", std::move(verbs)}};
}

void write_extraction_csv_header(std::ostream& out) { out << "article_id,sentence_index,role,form,lemma\n"; }

void write_extraction_csv(std::ostream& out, std::string_view article_id,
                          std::span<const corpus::VerbOccurrence> occurrences) {
  for (const auto& o : occurrences) {
    out << csv_field(article_id) << ',' << o.sentence_index << ',' << corpus::to_string(o.role) << ','
        << csv_field(o.form) << ',' << csv_field(o.lemma) << '\n';
  }
}

Json evca_record(const evca::EventProfile& p, const std::vector<std::string>* suggested_types) {
  Json counts = Json::object();
  Json shares = Json::object();
  for (const auto& t : p.classes) {
    counts[t.name] = t.count;
    shares[t.name] = t.share;
  }
  Json rec{{"article_id", p.article_id},
           {"total_verbs", p.total_verbs},
           {"class_counts", std::move(counts)},
           {"unknown_count", p.unknown_count},
           {"shares", std::move(shares)},
           {"dominant", p.dominant ? Json(*p.dominant) : Json(nullptr)}};
  if (suggested_types != nullptr) rec["suggested_types"] = *suggested_types;
  return rec;
}

void write_evca_csv_header(std::ostream& out) { out << "article_id,class,count,share\n"; }

void write_evca_csv(std::ostream& out, const evca::EventProfile& p) {
  for (const auto& t : p.classes) {
    out << csv_field(p.article_id) << ',' << csv_field(t.name) << ',' << t.count << ',' << format_number(t.share)
        << '\n';
  }
  out << csv_field(p.article_id) << ",Unknown," << p.unknown_count << ',' << format_number(p.unknown_share()) << '\n';
}

Json wn_record(const wn::SynsetProfile& p) {
  Json counts = Json::object();
  for (const auto& [id, n] : p.counts) counts[id] = n;
  return Json{{"article_id", p.article_id}, {"total_verbs", p.total_verbs}, {"counts", std::move(counts)}};
}

void write_wn_csv_header(std::ostream& out) { out << "article_id,synset_id,count\n"; }

void write_wn_csv(std::ostream& out, const wn::SynsetProfile& p) {
  for (const auto& [id, n] : p.counts) out << csv_field(p.article_id) << ',' << csv_field(id) << ',' << n << '\n';
}

Json correlation_json(const stats::CorrelationMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    for (std::size_t j = 0; j < m.values[i].size(); ++j) {
      const auto& tau = m.values[i][j];
      entries.push_back(Json{{"a", m.categories[i]}, {"b", m.categories[j]}, {"tau", tau ? Json(*tau) : Json(nullptr)}});
    }
  }
  return Json{{"categories", m.categories}, {"entries", std::move(entries)}};
}

void write_correlation_csv(std::ostream& out, const stats::CorrelationMatrix& m) {
  out << "category";
  for (const auto& c : m.categories) out << ',' << csv_field(c);
  out << '\n';
  for (std::size_t i = 0; i < m.categories.size(); ++i) {
    out << csv_field(m.categories[i]);
    for (std::size_t j = 0; j < m.categories.size(); ++j) {
      out << ',';
      if (j < i) out << (m.values[i][j] ? format_number(*m.values[i][j]) : std::string("NA"));
    }
    out << '\n';
  }
}

}  // namespace verbprof::report
