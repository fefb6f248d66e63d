#include "verbprof/corpus.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace verbprof::corpus {

namespace {

using Entry = std::pair<std::string_view, std::string_view>;

// Inflected form -> citation form. Past and past-participle forms of common
// English irregular verbs, plus a handful of regular spellings the suffix
// rules get wrong (added, erred, dying, ...).
constexpr auto kTable = std::to_array<Entry>({
    {"'m", "be"},          {"'re", "be"},           {"'s", "be"},           {"added", "add"},
    {"adding", "add"},     {"am", "be"},            {"are", "be"},          {"arose", "arise"},
    {"arisen", "arise"},   {"ate", "eat"},          {"awoke", "awake"},     {"awoken", "awake"},
    {"been", "be"},        {"became", "become"},  {"becoming", "become"},  {"began", "begin"},     {"begun", "begin"},
    {"being", "be"},       {"bent", "bend"},        {"bet", "bet"},         {"bid", "bid"},
    {"bit", "bite"},       {"bitten", "bite"},      {"bled", "bleed"},      {"blew", "blow"},
    {"blown", "blow"},     {"bore", "bear"},        {"born", "bear"},       {"borne", "bear"},
    {"bought", "buy"},     {"bound", "bind"},       {"bred", "breed"},      {"broadcast", "broadcast"},
    {"broke", "break"},    {"broken", "break"},     {"brought", "bring"},   {"built", "build"},
    {"burnt", "burn"},     {"burst", "burst"},      {"came", "come"},       {"cast", "cast"},
    {"caught", "catch"},   {"chose", "choose"},     {"chosen", "choose"},   {"clung", "cling"},
    {"cost", "cost"},      {"created", "create"},  {"creating", "create"}, {"crept", "creep"},      {"cut", "cut"},         {"dealt", "deal"},
    {"did", "do"},         {"does", "do"},          {"done", "do"},         {"drank", "drink"},
    {"drawn", "draw"},     {"dreamt", "dream"},     {"drew", "draw"},       {"driven", "drive"},
    {"drove", "drive"},    {"drunk", "drink"},      {"dug", "dig"},         {"dwelt", "dwell"},
    {"dies", "die"},       {"dying", "die"},       {"focused", "focus"},   {"focusing", "focus"},
    {"lies", "lie"},       {"ties", "tie"},      {"eaten", "eat"},        {"erred", "err"},       {"erring", "err"},
    {"fallen", "fall"},    {"fed", "feed"},         {"fell", "fall"},       {"felt", "feel"},
    {"fled", "flee"},      {"flew", "fly"},         {"flown", "fly"},       {"flung", "fling"},
    {"forbade", "forbid"}, {"forbidden", "forbid"}, {"forecast", "forecast"}, {"foresaw", "foresee"},
    {"foreseen", "foresee"}, {"forgave", "forgive"}, {"forgiven", "forgive"}, {"forgot", "forget"},
    {"forgotten", "forget"}, {"fought", "fight"},   {"found", "find"},      {"froze", "freeze"},
    {"frozen", "freeze"},  {"gave", "give"},        {"given", "give"},      {"goes", "go"},
    {"gone", "go"},        {"got", "get"},          {"gotten", "get"},      {"grew", "grow"},
    {"ground", "grind"},   {"grown", "grow"},       {"had", "have"},        {"has", "have"},
    {"having", "have"},    {"heard", "hear"},       {"held", "hold"},       {"hid", "hide"},
    {"hidden", "hide"},    {"hit", "hit"},          {"hung", "hang"},       {"hurt", "hurt"},
    {"is", "be"},          {"kept", "keep"},        {"knelt", "kneel"},     {"knew", "know"},
    {"known", "know"},     {"laid", "lay"},         {"lain", "lie"},        {"lay", "lie"},
    {"led", "lead"},       {"leapt", "leap"},       {"learnt", "learn"},    {"left", "leave"},
    {"lent", "lend"},      {"let", "let"},          {"lit", "light"},       {"lost", "lose"},
    {"lying", "lie"},      {"made", "make"},        {"meant", "mean"},      {"met", "meet"},
    {"mistook", "mistake"}, {"mistaken", "mistake"}, {"outgrew", "outgrow"}, {"outgrown", "outgrow"},
    {"overcame", "overcome"}, {"overcome", "overcome"}, {"overran", "overrun"}, {"oversaw", "oversee"},
    {"overseen", "oversee"}, {"overtook", "overtake"}, {"overtaken", "overtake"}, {"paid", "pay"},
    {"put", "put"},        {"quit", "quit"},        {"ran", "run"},         {"rang", "ring"},
    {"read", "read"},      {"rebuilt", "rebuild"},  {"redid", "redo"},      {"redone", "redo"},
    {"referred", "refer"}, {"referring", "refer"},  {"rewrote", "rewrite"}, {"rewritten", "rewrite"},
    {"rid", "rid"},        {"ridden", "ride"},      {"risen", "rise"},      {"rode", "ride"},
    {"rose", "rise"},      {"rung", "ring"},        {"said", "say"},        {"sang", "sing"},
    {"sank", "sink"},      {"sat", "sit"},          {"saw", "see"},         {"seen", "see"},
    {"sent", "send"},      {"set", "set"},          {"shaken", "shake"},    {"shed", "shed"},
    {"shone", "shine"},    {"shook", "shake"},      {"shot", "shoot"},      {"shown", "show"},
    {"shrank", "shrink"},  {"shrunk", "shrink"},    {"shut", "shut"},       {"slid", "slide"},
    {"slept", "sleep"},    {"slung", "sling"},      {"sold", "sell"},       {"sought", "seek"},
    {"sped", "speed"},     {"spent", "spend"},      {"split", "split"},     {"spoke", "speak"},
    {"spoken", "speak"},   {"spread", "spread"},    {"sprang", "spring"},   {"sprung", "spring"},
    {"spun", "spin"},      {"stood", "stand"},      {"stole", "steal"},     {"stolen", "steal"},
    {"struck", "strike"},  {"stuck", "stick"},      {"stung", "sting"},     {"strove", "strive"},
    {"striven", "strive"}, {"sung", "sing"},        {"sunk", "sink"},       {"swept", "sweep"},
    {"swore", "swear"},    {"sworn", "swear"},      {"swam", "swim"},       {"swum", "swim"},
    {"swung", "swing"},    {"taken", "take"},       {"taught", "teach"},    {"tied", "tie"},
    {"threw", "throw"},    {"thrown", "throw"},     {"thought", "think"},   {"thrust", "thrust"},
    {"told", "tell"},      {"took", "take"},        {"tore", "tear"},       {"torn", "tear"},
    {"tying", "tie"},      {"underwent", "undergo"}, {"undergone", "undergo"}, {"understood", "understand"},
    {"undertook", "undertake"}, {"undertaken", "undertake"}, {"upheld", "uphold"}, {"upset", "upset"},
    {"was", "be"},         {"went", "go"},          {"were", "be"},         {"withdrew", "withdraw"},
    {"withdrawn", "withdraw"}, {"withheld", "withhold"}, {"woke", "wake"},  {"woken", "wake"},
    {"won", "win"},        {"wore", "wear"},        {"worn", "wear"},       {"wound", "wind"},
    {"wove", "weave"},     {"woven", "weave"},      {"wrote", "write"},     {"written", "write"},
});

constexpr auto kIrregular = [] {
  auto table = kTable;
  std::sort(table.begin(), table.end());
  return table;
}();

constexpr bool unique_forms() {
  for (std::size_t i = 1; i < kIrregular.size(); ++i) {
    if (!(kIrregular[i - 1].first < kIrregular[i].first)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string_view> irregular_lemma(std::string_view form) {
  static_assert(unique_forms(), "duplicate form in irregular verb table");
  auto it = std::lower_bound(kIrregular.begin(), kIrregular.end(), form,
                             [](const Entry& e, std::string_view f) { return e.first < f; });
  if (it != kIrregular.end() && it->first == form) return it->second;
  return std::nullopt;
}

}  // namespace verbprof::corpus
