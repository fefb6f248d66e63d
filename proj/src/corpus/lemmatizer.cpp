#include "verbprof/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace verbprof::corpus {

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_consonant(char c) { return std::isalpha(static_cast<unsigned char>(c)) && !is_vowel(c); }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

int vowel_groups(std::string_view s) {
  int groups = 0;
  bool in_group = false;
  for (char c : s) {
    bool v = is_vowel(c) || (c == 'y' && in_group);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Endings of a multi-syllable consonant-vowel-consonant stem that almost
// always lost a silent 'e' to -ed/-ing (execute, decide, conclude,
// ensure, combine, assume, manage, declare, describe, ...).
constexpr std::array<std::string_view, 14> kSilentEEndings = {
    "at", "ut", "id", "ir", "ur", "in", "ok", "um", "ot", "ud", "ag", "ap", "ar", "ib"};

// Stem endings whose citation form ends in 'e' regardless of syllable count:
// announce, move, judge, charge, bulge, change, challenge, plunge, acquire,
// negotiate, evaluate.
constexpr std::array<std::string_view, 11> kAlwaysEEndings = {"c",   "v",   "dg",  "rg",  "lg", "ang",
                                                              "eng", "ung", "uir", "iat", "uat"};

bool needs_silent_e(std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 2) return false;
  for (auto e : kAlwaysEEndings) {
    if (ends_with(stem, e)) return true;
  }
  // cause, use, raise, release, propose, collapse, reverse, realize, argue
  if (stem[n - 1] == 's' && stem[n - 2] != 's') return true;
  if (stem[n - 1] == 'z' && stem[n - 2] != 'z') return true;
  if (stem[n - 1] == 'u') return true;
  // settle, handle, couple, struggle; not hurl, crawl
  if (stem[n - 1] == 'l' && is_consonant(stem[n - 2]) && stem[n - 2] != 'l' && stem[n - 2] != 'r' &&
      stem[n - 2] != 'w') {
    return true;
  }

  const bool cvc = n >= 3 && is_consonant(stem[n - 3]) && is_vowel(stem[n - 2]) && is_consonant(stem[n - 1]) &&
                   stem[n - 1] != 'w' && stem[n - 1] != 'x' && stem[n - 1] != 'y';
  if (!cvc) return false;
  // A single short syllable would have doubled its consonant (stop/stopped),
  // so an undoubled one means the base had a silent 'e': hope, vote, cite.
  if (vowel_groups(stem) == 1) return true;
  for (auto e : kSilentEEndings) {
    if (ends_with(stem, e)) return true;
  }
  return false;
}

bool undoubles(std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 3) return false;
  char last = stem[n - 1];
  if (last != stem[n - 2] || !is_consonant(last)) return false;
  // compelled, travelled, controlled; but called, filled, installed
  if (last == 'l') return vowel_groups(stem) >= 2 && (stem[n - 3] == 'e' || stem[n - 3] == 'o');
  return last != 's' && last != 'z' && last != 'f';
}

std::string restore_stem(std::string stem) {
  if (undoubles(stem)) {
    stem.pop_back();
    return stem;
  }
  if (needs_silent_e(stem)) stem += 'e';
  return stem;
}

std::string strip_s(std::string form) {
  if (form.size() > 3 && ends_with(form, "ies")) return form.substr(0, form.size() - 3) + "y";
  if (form.size() > 3 && (ends_with(form, "sses") || ends_with(form, "xes") || ends_with(form, "zzes") ||
                          ends_with(form, "ches") || ends_with(form, "shes") || ends_with(form, "oes"))) {
    return form.substr(0, form.size() - 2);
  }
  if (form.size() > 2 && ends_with(form, "s") && !ends_with(form, "ss")) return form.substr(0, form.size() - 1);
  return form;
}

std::string strip_ed(std::string form) {
  if (form.size() > 3 && ends_with(form, "ied")) return form.substr(0, form.size() - 3) + "y";
  if (form.size() > 3 && ends_with(form, "eed")) return form.substr(0, form.size() - 1);  // agreed, guaranteed
  if (form.size() > 3 && ends_with(form, "ed")) return restore_stem(form.substr(0, form.size() - 2));
  return form;
}

std::string strip_ing(std::string form) {
  if (form.size() > 4 && ends_with(form, "ing")) {
    std::string stem = form.substr(0, form.size() - 3);
    if (ends_with(stem, "ee") || ends_with(stem, "ye") || ends_with(stem, "oe")) return stem;  // agreeing, seeing
    if (vowel_groups(stem) == 0) return form;  // thing, sting
    return restore_stem(std::move(stem));
  }
  return form;
}

}  // namespace

bool is_verb_tag(std::string_view pos) {
  return pos == "VB" || pos == "VBD" || pos == "VBG" || pos == "VBN" || pos == "VBP" || pos == "VBZ";
}

std::string lemmatize(std::string_view form, std::string_view pos) {
  std::string lower(form);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (pos == "VB") return lower;
  if (auto irregular = irregular_lemma(lower)) {
    // VBP is a base form except for the present tense of "be".
    if (pos != "VBP" || *irregular == "be") return std::string(*irregular);
  }
  if (pos == "VBZ") return strip_s(std::move(lower));
  if (pos == "VBD" || pos == "VBN") return strip_ed(std::move(lower));
  if (pos == "VBG") return strip_ing(std::move(lower));
  return lower;
}

}  // namespace verbprof::corpus
