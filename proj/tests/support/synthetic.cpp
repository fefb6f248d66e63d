#include "support/synthetic.hpp"

#include <algorithm>
#include <stdexcept>

namespace verbprof::testing {

namespace {

const std::vector<VerbForms> kCommunication = {
    {"say", "said", "said", "says", "saying"},
    {"announce", "announced", "announced", "announces", "announcing"},
    {"report", "reported", "reported", "reports", "reporting"},
    {"tell", "told", "told", "tells", "telling"},
    {"add", "added", "added", "adds", "adding"},
    {"warn", "warned", "warned", "warns", "warning"},
};

const std::vector<VerbForms> kSupport = {
    {"have", "had", "had", "has", "having"},   {"get", "got", "gotten", "gets", "getting"},
    {"give", "gave", "given", "gives", "giving"}, {"make", "made", "made", "makes", "making"},
    {"take", "took", "taken", "takes", "taking"}, {"keep", "kept", "kept", "keeps", "keeping"},
};

const std::vector<VerbForms> kContent = {
    {"rise", "rose", "risen", "rises", "rising"},
    {"fall", "fell", "fallen", "falls", "falling"},
    {"agree", "agreed", "agreed", "agrees", "agreeing"},
    {"argue", "argued", "argued", "argues", "arguing"},
    {"cause", "caused", "caused", "causes", "causing"},
    {"expect", "expected", "expected", "expects", "expecting"},
    {"begin", "began", "begun", "begins", "beginning"},
    {"buy", "bought", "bought", "buys", "buying"},
    {"appear", "appeared", "appeared", "appears", "appearing"},
    {"plunge", "plunged", "plunged", "plunges", "plunging"},
    {"stop", "stopped", "stopped", "stops", "stopping"},
    {"carry", "carried", "carried", "carries", "carrying"},
};

const std::vector<std::string> kSubjects = {"(NP (DT The) (NN company))", "(NP (NNS Analysts))",
                                            "(NP (DT The) (NN index))", "(NP (NNP Acme))",
                                            "(NP (DT The) (NN board))"};
const std::vector<std::string> kObjects = {"(NP (DT the) (NN plan))", "(NP (DT a) (NN deal))",
                                           "(NP (DT the) (NNS results))", "(NP (CD 36) (NNS points))"};

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

struct Planned {
  evca::Coarse coarse;
  const VerbForms* verb;
};

// Bare clause (no final punctuation) whose main verb is `v`.
std::string clause(std::mt19937_64& rng, const VerbForms& v) {
  const std::string subj = pick(rng, kSubjects);
  const std::string obj = pick(rng, kObjects);
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
      return "(S " + subj + " (VP (VBD " + v.past + ") " + obj + "))";
    case 1:
      return "(S " + subj + " (VP (VBZ has) (VP (VBN " + v.participle + ") " + obj + ")))";
    case 2:
      return "(S " + subj + " (VP (MD will) (VP (VB " + v.lemma + ") " + obj + ")))";
    case 3:
      return "(S " + subj + " (VP (VBZ " + v.third + ") " + obj + "))";
    default:
      return "(S " + subj + " (VP (VBZ is) (VP (VBG " + v.gerund + ") " + obj + ")))";
  }
}

std::string with_period(const std::string& s) { return s.substr(0, s.size() - 1) + " (. .))"; }

}  // namespace

const std::vector<VerbForms>& inventory(evca::Coarse coarse) {
  switch (coarse) {
    case evca::Coarse::Communication:
      return kCommunication;
    case evca::Coarse::Support:
      return kSupport;
    case evca::Coarse::Content:
      return kContent;
    default:
      throw std::invalid_argument("no inventory for Unknown");
  }
}

PlantedCorpus planted_corpus(std::mt19937_64& rng, int articles, int communication, int support, int content,
                             int min_sentences) {
  PlantedCorpus out;
  out.articles = articles;
  for (int a = 0; a < articles; ++a) {
    const int unit = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Planned> plan;
    auto add = [&](evca::Coarse c, int n) {
      for (int i = 0; i < n * unit; ++i) plan.push_back({c, &pick(rng, inventory(c))});
      out.expected[c] += n * unit;
    };
    add(evca::Coarse::Communication, communication);
    add(evca::Coarse::Support, support);
    add(evca::Coarse::Content, content);
    std::shuffle(plan.begin(), plan.end(), rng);

    std::vector<std::string> sentences;
    for (std::size_t i = 0; i < plan.size(); ++i) {
      const VerbForms& v = *plan[i].verb;
      const bool pair = plan[i].coarse == evca::Coarse::Communication && i + 1 < plan.size() &&
                        std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      if (pair) {
        const VerbForms& c = *plan[i + 1].verb;
        sentences.push_back("(S " + pick(rng, kSubjects) + " (VP (VBD " + v.past + ") (SBAR (IN that) " +
                            clause(rng, c) + ")) (. .))");
        out.expected_lemmas.push_back(v.lemma);
        out.expected_lemmas.push_back(c.lemma);
        ++i;
      } else {
        sentences.push_back(with_period(clause(rng, v)));
        out.expected_lemmas.push_back(v.lemma);
      }
    }
    while (static_cast<int>(sentences.size()) < min_sentences) {
      auto pos = std::uniform_int_distribution<std::size_t>(0, sentences.size())(rng);
      sentences.insert(sentences.begin() + static_cast<std::ptrdiff_t>(pos), "(FRAG (NP (NN Comment)) (. .))");
    }
    out.text += "#article synth-" + std::to_string(a + 1) + "\n";
    for (const auto& s : sentences) out.text += s + "\n";
  }
  return out;
}

std::string article_with_lemmas(const std::string& id, const std::vector<std::pair<std::string, int>>& counts) {
  std::string out = "#article " + id + "\n";
  for (const auto& [lemma, n] : counts) {
    for (int i = 0; i < n; ++i) out += "(S (NP (PRP It)) (VP (VB " + lemma + ")))\n";
  }
  return out;
}

}  // namespace verbprof::testing
