#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/paths.hpp"
#include "verbprof/taxonomy.hpp"

using namespace verbprof::taxonomy;
using verbprof::testing::AncestorTuple;

namespace {

const TaxonomyGraph& fixture() {
  static const TaxonomyGraph g =
      load_taxonomy(verbprof::testing::read_file(verbprof::testing::data_path("verb_taxonomy.tsv")));
  return g;
}

std::set<AncestorTuple> as_set(const CommonAncestors& ca) {
  std::set<AncestorTuple> out;
  for (const auto& m : ca.matches) out.emplace(m.ancestor_id, m.sense_a, m.sense_b, m.dist_a, m.dist_b);
  return out;
}

bool has_ancestor(const CommonAncestors& ca, std::string_view id) {
  return std::any_of(ca.matches.begin(), ca.matches.end(), [&](const auto& m) { return m.ancestor_id == id; });
}

const char* kChain =
    "leaf.v.01\tleaf\tmid.v.01\n"
    "mid.v.01\tmid\troot.v.01\n"
    "root.v.01\troot\t\n";

}  // namespace

TEST_CASE("three-line chain") {
  auto g = load_taxonomy(kChain);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);
  REQUIRE(g.index_of("leaf.v.01"));
  auto up = g.ancestors_within(*g.index_of("leaf.v.01"), 5);
  REQUIRE(up.size() == 3);
  CHECK(up[0] == std::pair<std::size_t, int>{0, 0});
  CHECK(up[1] == std::pair<std::size_t, int>{1, 1});
  CHECK(up[2] == std::pair<std::size_t, int>{2, 2});
  CHECK(g.ancestors_within(0, 1).size() == 2);
  CHECK(g.ancestors_within(0, 0).size() == 1);
}

TEST_CASE("format details") {
  auto g = load_taxonomy(
      "# comment\n\n"
      "b.v.01\tbeta,second\ta.v.01\tgloss text\n"
      "a.v.01\talpha\n"
      "c.v.01\tgamma\ta.v.01,b.v.01\n");
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 3);
  const Synset* b = g.find("b.v.01");
  REQUIRE(b != nullptr);
  CHECK(b->lemmas == std::vector<std::string>{"beta", "second"});
  REQUIRE(b->gloss);
  CHECK(*b->gloss == "gloss text");
  CHECK_FALSE(g.find("a.v.01")->gloss);
  CHECK(g.find("zzz") == nullptr);
  CHECK(g.senses("second").size() == 1);
  CHECK(g.senses("nothing").empty());
  CHECK(g.lemma_index().size() == 4);
}

TEST_CASE("load errors") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      load_taxonomy(text);
    } catch (const TaxonomyError& e) {
      return e.line();
    }
    return 0;
  };
  SUBCASE("self loop is a cycle") { CHECK(line_of("a.v.01\ta\ta.v.01\n") == 1); }
  SUBCASE("longer cycle") {
    CHECK_THROWS_AS(load_taxonomy("a\tx\tb\nb\ty\tc\nc\tz\ta\n"), TaxonomyError);
  }
  SUBCASE("dangling hypernym") { CHECK(line_of("a.v.01\ta\t\nb.v.01\tb\tmissing.v.01\n") == 2); }
  SUBCASE("duplicate id") { CHECK(line_of("a.v.01\ta\t\na.v.01\tb\t\n") == 2); }
  SUBCASE("too few fields") { CHECK(line_of("a.v.01\n") == 1); }
  SUBCASE("no lemmas") { CHECK(line_of("a.v.01\t\t\n") == 1); }
}

TEST_CASE("fixture taxonomy shape") {
  const auto& g = fixture();
  CHECK(g.size() >= 80);
  REQUIRE(g.index_of("inform.v.01"));
  const auto inform = *g.index_of("inform.v.01");
  CHECK(g.hypernyms(inform).empty());
  CHECK(g.synset(inform).lemmas == std::vector<std::string>{"inform", "give_information", "let_know"});
  int children = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto h = g.hypernyms(i);
    children += std::count(h.begin(), h.end(), inform);
  }
  CHECK(children > 40);
  CHECK_FALSE(g.lemma_index().at("cite").empty());
  CHECK_FALSE(g.lemma_index().at("post").empty());
}

TEST_CASE("cite and post meet at inform within two edges") {
  const auto& g = fixture();
  auto two = common_ancestors(g, "cite", "post", 2);
  CHECK(two.lemmas_known());
  REQUIRE(has_ancestor(two, "inform.v.01"));
  for (const auto& m : two.matches) {
    if (m.ancestor_id != "inform.v.01") continue;
    CHECK(m.dist_a == 2);
    CHECK(m.dist_b == 2);
  }
  auto one = common_ancestors(g, "cite", "post", 1);
  CHECK_FALSE(has_ancestor(one, "inform.v.01"));
}

TEST_CASE("same lemma meets itself at distance zero") {
  auto ca = common_ancestors(fixture(), "say", "say", 2);
  REQUIRE_FALSE(ca.matches.empty());
  const auto& first = ca.matches.front();
  CHECK(first.dist_a == 0);
  CHECK(first.dist_b == 0);
  CHECK(first.ancestor_id == first.sense_a);
}

TEST_CASE("polysemy: have and drop share the birth sense") {
  auto ca = common_ancestors(fixture(), "have", "drop", 0);
  REQUIRE(ca.matches.size() == 1);
  CHECK(ca.matches[0].ancestor_id == "give_birth.v.01");
}

TEST_CASE("unknown lemmas are flagged, not errors") {
  auto ca = common_ancestors(fixture(), "say", "frobnicate", 2);
  CHECK(ca.matches.empty());
  CHECK(ca.lemma_a_known);
  CHECK_FALSE(ca.lemma_b_known);
  CHECK_FALSE(ca.lemmas_known());
  CHECK_THROWS_AS(common_ancestors(fixture(), "say", "say", -1), std::invalid_argument);
}

TEST_CASE("results are sorted by total distance, then ancestor id") {
  auto ca = common_ancestors(fixture(), "rise", "fall", 3);
  REQUIRE(ca.matches.size() > 1);
  for (std::size_t i = 1; i < ca.matches.size(); ++i) {
    const auto& a = ca.matches[i - 1];
    const auto& b = ca.matches[i];
    CHECK(std::make_tuple(a.dist_a + a.dist_b, a.ancestor_id, a.sense_a, a.sense_b) <
          std::make_tuple(b.dist_a + b.dist_b, b.ancestor_id, b.sense_a, b.sense_b));
  }
}

TEST_CASE("symmetry and monotonicity on the fixture") {
  const auto& g = fixture();
  const char* lemmas[] = {"say", "tell", "report", "cite", "post", "rise", "fall", "drop", "have", "get", "agree"};
  for (auto a : lemmas) {
    for (auto b : lemmas) {
      for (int k = 0; k <= 3; ++k) {
        auto ab = common_ancestors(g, a, b, k);
        auto ba = common_ancestors(g, b, a, k);
        std::set<AncestorTuple> swapped;
        for (const auto& [anc, sa, sb, da, db] : as_set(ba)) swapped.emplace(anc, sb, sa, db, da);
        CHECK(as_set(ab) == swapped);
        if (k > 0) {
          auto smaller = as_set(common_ancestors(g, a, b, k - 1));
          auto larger = as_set(ab);
          CHECK(std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end()));
        }
      }
    }
  }
}

TEST_CASE("common ancestors match an all-pairs shortest-path oracle on random DAGs") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 60; ++round) {
    auto dag = verbprof::testing::random_dag(rng, 40, 3, 12);
    auto g = load_taxonomy(dag.to_taxonomy_text());
    verbprof::testing::DagOracle oracle(dag);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto idx = *g.index_of(dag.ids[i]);
      for (auto [anc, d] : g.ancestors_within(idx, 3)) {
        CHECK(oracle.distance(static_cast<int>(i), static_cast<int>(std::find(dag.ids.begin(), dag.ids.end(),
                                                                              g.synset(anc).id) -
                                                                    dag.ids.begin())) == d);
      }
    }
    const auto pool = dag.lemma_pool();
    for (int q = 0; q < 20; ++q) {
      const auto& a = pool[rng() % pool.size()];
      const auto& b = pool[rng() % pool.size()];
      const int k = static_cast<int>(rng() % 4);
      CHECK(as_set(common_ancestors(g, a, b, k)) == oracle.common_ancestors(a, b, k));
    }
  }
}
