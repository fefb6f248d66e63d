#include <sstream>

#include "doctest.h"
#include "support/schema.hpp"
#include "verbprof/report.hpp"

using namespace verbprof;

namespace {

const char* kLexicon =
    "@class Communication coarse=Communication\n"
    "@class Motion coarse=Content\n"
    "say\tCommunication\nrise\tMotion\n";

std::vector<corpus::VerbOccurrence> sample_occ() {
  return {{"say", "said", 0, corpus::VerbRole::Main},
          {"rise", "rose", 0, corpus::VerbRole::CommComplement},
          {"vow", "vowed", 1, corpus::VerbRole::Main}};
}

void check_valid(const report::Json& record, const std::string& schema) {
  auto errors = testing::schema_errors(nlohmann::json::parse(record.dump()), testing::load_schema(schema));
  for (const auto& e : errors) MESSAGE(e);
  CHECK(errors.empty());
}

}  // namespace

TEST_CASE("numbers round-trip through their shortest form") {
  CHECK(report::format_number(0.5) == "0.5");
  CHECK(report::format_number(1.0) == "1");
  CHECK(report::format_number(11.0 / 19.0) == "0.5789473684210527");
  CHECK(std::stod(report::format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("csv quoting") {
  CHECK(report::csv_field("plain") == "plain");
  CHECK(report::csv_field("a,b") == "\"a,b\"");
  CHECK(report::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(report::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("extraction record") {
  auto occ = sample_occ();
  auto rec = report::extraction_record("a1", occ);
  CHECK(rec.dump() ==
        R"({"article_id":"a1","verbs":[{"sentence_index":0,"role":"Main","form":"said","lemma":"say"},)"
        R"({"sentence_index":0,"role":"CommComplement","form":"rose","lemma":"rise"},)"
        R"({"sentence_index":1,"role":"Main","form":"vowed","lemma":"vow"}]})");
  check_valid(rec, "extract_record.schema.json");

  std::ostringstream csv;
  report::write_extraction_csv_header(csv);
  report::write_extraction_csv(csv, "a1", occ);
  CHECK(csv.str() ==
        "article_id,sentence_index,role,form,lemma\n"
        "a1,0,Main,said,say\n"
        "a1,0,CommComplement,rose,rise\n"
        "a1,1,Main,vowed,vow\n");
}

TEST_CASE("evca record and csv") {
  auto lex = evca::load_lexicon(kLexicon);
  auto occ = sample_occ();
  auto p = evca::profile_article("a1", occ, lex);
  auto rec = report::evca_record(p);
  CHECK(rec["class_counts"]["Communication"] == 1);
  CHECK(rec["unknown_count"] == 1);
  CHECK(rec["dominant"] == "Communication");
  CHECK_FALSE(rec.contains("suggested_types"));
  check_valid(rec, "evca_record.schema.json");

  std::vector<std::string> types{"reports"};
  auto with_types = report::evca_record(p, &types);
  CHECK(with_types["suggested_types"] == report::Json::array({"reports"}));
  check_valid(with_types, "evca_record.schema.json");

  auto empty = report::evca_record(evca::profile_article("e", {}, lex));
  CHECK(empty["dominant"].is_null());
  check_valid(empty, "evca_record.schema.json");

  std::ostringstream csv;
  report::write_evca_csv_header(csv);
  report::write_evca_csv(csv, p);
  CHECK(csv.str() ==
        "article_id,class,count,share\n"
        "a1,Communication,1,0.3333333333333333\n"
        "a1,Motion,1,0.3333333333333333\n"
        "a1,Unknown,1,0.3333333333333333\n");
}

TEST_CASE("wn record and csv") {
  wn::SynsetProfile p;
  p.article_id = "a,1";
  p.total_verbs = 2;
  p.counts = {{"inform.v.01", 1}};
  auto rec = report::wn_record(p);
  CHECK(rec.dump() == R"({"article_id":"a,1","total_verbs":2,"counts":{"inform.v.01":1}})");
  check_valid(rec, "wn_record.schema.json");
  std::ostringstream csv;
  report::write_wn_csv_header(csv);
  report::write_wn_csv(csv, p);
  CHECK(csv.str() == "article_id,synset_id,count\n\"a,1\",inform.v.01,1\n");
}

TEST_CASE("correlation json and csv") {
  stats::CorrelationMatrix m;
  m.categories = {"A", "B", "C"};
  m.values = {{}, {0.5}, {std::nullopt, -1.0}};
  auto j = report::correlation_json(m);
  CHECK(j.dump() ==
        R"({"categories":["A","B","C"],"entries":[{"a":"B","b":"A","tau":0.5},)"
        R"({"a":"C","b":"A","tau":null},{"a":"C","b":"B","tau":-1.0}]})");
  std::ostringstream csv;
  report::write_correlation_csv(csv, m);
  CHECK(csv.str() == "category,A,B,C\nA,,,\nB,0.5,,\nC,NA,-1,\n");
}

TEST_CASE("schema checker rejects what it should") {
  auto schema = testing::load_schema("top_articles_record.schema.json");
  CHECK(testing::schema_errors(R"({"class":"Motion","rank":1,"article_id":"x","share":0.5})"_json, schema).empty());
  CHECK_FALSE(testing::schema_errors(R"({"class":"Motion","rank":0,"article_id":"x","share":0.5})"_json, schema).empty());
  CHECK_FALSE(testing::schema_errors(R"({"class":"Motion","rank":1,"article_id":"x"})"_json, schema).empty());
  CHECK_FALSE(
      testing::schema_errors(R"({"class":"Motion","rank":1,"article_id":"x","share":0.5,"extra":1})"_json, schema)
          .empty());
  CHECK_FALSE(testing::schema_errors(R"({"class":3,"rank":1,"article_id":"x","share":0.5})"_json, schema).empty());
}
