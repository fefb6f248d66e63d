#include <algorithm>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/paths.hpp"
#include "verbprof/wn_profiler.hpp"

using namespace verbprof;
using corpus::VerbOccurrence;

namespace {

const taxonomy::TaxonomyGraph& fixture() {
  static const auto g = taxonomy::load_taxonomy(testing::read_file(testing::data_path("verb_taxonomy.tsv")));
  return g;
}

std::vector<VerbOccurrence> occurrences(std::initializer_list<const char*> lemmas) {
  std::vector<VerbOccurrence> out;
  std::size_t s = 0;
  for (auto l : lemmas) out.push_back({l, l, s++, corpus::VerbRole::Main});
  return out;
}

wn::SynsetProfile with_counts(std::string id, std::map<std::string, int> counts) {
  wn::SynsetProfile p;
  p.article_id = std::move(id);
  p.counts = std::move(counts);
  return p;
}

}  // namespace

TEST_CASE("cite and post add one hit at inform") {
  auto occ = occurrences({"cite", "post"});
  auto p = wn::synset_profile("a1", occ, fixture(), 2);
  CHECK(p.article_id == "a1");
  CHECK(p.total_verbs == 2);
  CHECK(p.counts == std::map<std::string, int>{{"inform.v.01", 1}});
  auto narrow = wn::synset_profile("a1", occ, fixture(), 1);
  CHECK(narrow.counts.empty());
}

TEST_CASE("empty and single-verb articles have no counts") {
  CHECK(wn::synset_profile("e", {}, fixture(), 2).counts.empty());
  auto one = occurrences({"say"});
  auto p = wn::synset_profile("s", one, fixture(), 2);
  CHECK(p.counts.empty());
  CHECK(p.total_verbs == 1);
  CHECK_FALSE(wn::dominant_synset(p));
}

TEST_CASE("a chain root collects one hit per pair") {
  auto g = taxonomy::load_taxonomy("leaf.v.01\tleaf\tmid.v.01\nmid.v.01\tmid\troot.v.01\nroot.v.01\troot\t\n");
  auto occ = occurrences({"leaf", "mid", "root"});
  auto p = wn::synset_profile("c", occ, g, 2);
  CHECK(p.counts.at("root.v.01") == 3);
  CHECK(p.counts.at("mid.v.01") == 1);
  CHECK(p.counts.size() == 2);
  CHECK(*wn::dominant_synset(p) == "root.v.01");
}

TEST_CASE("profiles equal the sum of oracle matches over occurrence pairs") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    auto dag = testing::random_dag(rng, 30, 3, 10);
    auto g = taxonomy::load_taxonomy(dag.to_taxonomy_text());
    testing::DagOracle oracle(dag);
    auto pool = dag.lemma_pool();
    pool.push_back("unlisted");
    std::vector<VerbOccurrence> occ;
    const int n = static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i) {
      const auto& l = pool[rng() % pool.size()];
      occ.push_back({l, l, static_cast<std::size_t>(i), corpus::VerbRole::Main});
    }
    const int k = static_cast<int>(rng() % 3);
    std::map<std::string, int> want;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      for (std::size_t j = i + 1; j < occ.size(); ++j) {
        for (const auto& t : oracle.common_ancestors(occ[i].lemma, occ[j].lemma, k)) ++want[std::get<0>(t)];
      }
    }
    auto p = wn::synset_profile("r", occ, g, k);
    CHECK(p.counts == want);
    CHECK(p.total_verbs == n);

    auto shuffled = occ;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(wn::synset_profile("r", shuffled, g, k).counts == p.counts);
  }
}

TEST_CASE("dominant synset ties go to the smallest id") {
  CHECK(*wn::dominant_synset(with_counts("a", {{"b.v.01", 2}, {"a.v.01", 2}, {"c.v.01", 1}})) == "a.v.01");
  CHECK(*wn::dominant_synset(with_counts("a", {{"b.v.01", 3}, {"a.v.01", 2}})) == "b.v.01");
  CHECK_FALSE(wn::dominant_synset(with_counts("a", {})));
}

TEST_CASE("dominant ranking and top-node coverage") {
  std::vector<wn::SynsetProfile> ps;
  auto add = [&](const std::string& dom, int n) {
    for (int i = 0; i < n; ++i) ps.push_back(with_counts(dom + std::to_string(i), {{dom, 5}, {"zz.v.01", 1}}));
  };
  add("d.v.01", 1);
  add("b.v.01", 3);
  add("a.v.01", 4);
  add("c.v.01", 2);
  ps.push_back(with_counts("none", {}));

  auto ranked = wn::rank_dominant_synsets(ps);
  REQUIRE(ranked.size() == 4);
  CHECK(ranked[0].synset_id == "a.v.01");
  CHECK(ranked[0].articles == 4);
  CHECK(ranked[3].synset_id == "d.v.01");

  CHECK(wn::top_node_coverage(ps, 2) == doctest::Approx(0.7));
  CHECK(wn::top_node_coverage(ps, 1) == doctest::Approx(0.4));
  CHECK(wn::top_node_coverage(ps, 4) == 1.0);
  CHECK(wn::top_node_coverage(ps, 50) == 1.0);
  CHECK_THROWS_AS(wn::top_node_coverage(ps, 0), std::invalid_argument);
  std::vector<wn::SynsetProfile> empty{with_counts("x", {})};
  CHECK_THROWS_AS(wn::top_node_coverage(empty, 3), std::invalid_argument);
}

TEST_CASE("ranking ties are ordered by id") {
  std::vector<wn::SynsetProfile> ps{with_counts("1", {{"b.v.01", 1}}), with_counts("2", {{"a.v.01", 1}})};
  auto ranked = wn::rank_dominant_synsets(ps);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].synset_id == "a.v.01");
  CHECK(ranked[1].synset_id == "b.v.01");
}

TEST_CASE("coverage is monotone in k") {
  std::mt19937_64 rng(5);
  std::vector<wn::SynsetProfile> ps;
  for (int i = 0; i < 50; ++i) {
    ps.push_back(with_counts(std::to_string(i), {{"s" + std::to_string(rng() % 12), 1 + static_cast<int>(rng() % 4)}}));
  }
  double prev = 0;
  for (int k = 1; k <= 13; ++k) {
    double c = wn::top_node_coverage(ps, k);
    CHECK(c >= prev);
    CHECK(c <= 1.0);
    prev = c;
  }
  CHECK(prev == 1.0);
}

TEST_CASE("negative max_edges is rejected") {
  auto occ = occurrences({"say", "tell"});
  CHECK_THROWS_AS(wn::synset_profile("x", occ, fixture(), -1), std::invalid_argument);
}
