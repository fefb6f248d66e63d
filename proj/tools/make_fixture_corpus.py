#!/usr/bin/env python3
"""Generate the synthetic news corpus shipped in data/fixture_corpus.tb.

Each article is built around one planted class that is the strict argmax of
its class counts; a few short articles fall below the default length filter.
Output is deterministic for a given seed.
"""

import argparse
import random
from collections import Counter

CLASS_VERBS = {
    "Communication": ["say", "announce", "report", "tell", "add", "cite", "confirm", "warn", "explain", "note"],
    "Motion": ["rise", "fall", "drop", "surge", "climb", "decline", "plunge", "slip", "rebound", "carry"],
    "Agreement": ["agree", "accept", "merge", "sign", "settle", "approve", "join", "concur"],
    "Argument": ["argue", "dispute", "claim", "contend", "challenge", "deny", "debate", "indicate"],
    "Causative": ["cause", "force", "prompt", "trigger", "produce", "spur", "compel"],
    "Experience": ["expect", "fear", "hope", "believe", "worry", "want", "feel"],
    "Aspectual": ["begin", "continue", "stop", "close", "end", "start", "finish"],
    "Appearance": ["appear", "emerge", "happen", "occur", "develop", "surface"],
    "Possession": ["buy", "sell", "earn", "pay", "offer", "receive", "acquire", "lose"],
    "Support": ["have", "get", "give", "make", "take", "keep", "come"],
}
UNKNOWN_VERBS = ["vow", "adapt", "recognize", "abuse"]

IRREGULAR = {
    "say": ("said", "said", "says", "saying"),
    "tell": ("told", "told", "tells", "telling"),
    "rise": ("rose", "risen", "rises", "rising"),
    "fall": ("fell", "fallen", "falls", "falling"),
    "begin": ("began", "begun", "begins", "beginning"),
    "sell": ("sold", "sold", "sells", "selling"),
    "buy": ("bought", "bought", "buys", "buying"),
    "pay": ("paid", "paid", "pays", "paying"),
    "lose": ("lost", "lost", "loses", "losing"),
    "feel": ("felt", "felt", "feels", "feeling"),
    "have": ("had", "had", "has", "having"),
    "get": ("got", "gotten", "gets", "getting"),
    "give": ("gave", "given", "gives", "giving"),
    "make": ("made", "made", "makes", "making"),
    "take": ("took", "taken", "takes", "taking"),
    "keep": ("kept", "kept", "keeps", "keeping"),
    "come": ("came", "come", "comes", "coming"),
    "drop": ("dropped", "dropped", "drops", "dropping"),
    "slip": ("slipped", "slipped", "slips", "slipping"),
    "stop": ("stopped", "stopped", "stops", "stopping"),
    "compel": ("compelled", "compelled", "compels", "compelling"),
    "occur": ("occurred", "occurred", "occurs", "occurring"),
    "concur": ("concurred", "concurred", "concurs", "concurring"),
    "carry": ("carried", "carried", "carries", "carrying"),
    "deny": ("denied", "denied", "denies", "denying"),
    "worry": ("worried", "worried", "worries", "worrying"),
    "spur": ("spurred", "spurred", "spurs", "spurring"),
    "vow": ("vowed", "vowed", "vows", "vowing"),
}


def inflect(lemma):
    """(past, participle, 3sg, gerund) for a regular or listed verb."""
    if lemma in IRREGULAR:
        return IRREGULAR[lemma]
    if lemma.endswith("e"):
        past, ger = lemma + "d", lemma[:-1] + "ing"
    else:
        past, ger = lemma + "ed", lemma + "ing"
    third = lemma + "es" if lemma.endswith(("s", "sh", "ch", "x", "z")) else lemma + "s"
    return past, past, third, ger


SUBJECTS = [
    ("DT The", "NN company"), ("DT The", "NN index"), ("DT The", "NN board"), ("DT The", "NN bank"),
    ("DT The", "NNS analysts"), ("DT The", "NN union"), ("DT The", "NN ministry"), ("DT The", "NNS shares"),
    ("DT The", "NN court"), ("DT The", "NN firm"), ("DT The", "NNS regulators"), ("DT The", "NN market"),
]
OBJECTS = [
    ("DT the", "NN plan"), ("DT the", "NN offer"), ("DT the", "NN deal"), ("DT the", "NN report"),
    ("DT the", "NN decision"), ("DT the", "NN forecast"), ("DT the", "NN proposal"), ("DT the", "NN loss"),
    ("DT the", "NN contract"), ("DT a", "NN change"), ("DT a", "NN review"), ("DT the", "NNS results"),
]
ADJECTIVES = ["skeptical", "cautious", "optimistic", "uncertain", "confident", "weak"]


def leaf(spec):
    pos, form = spec.split(" ", 1)
    return f"({pos} {form})"


def np(rng, pool):
    det, noun = rng.choice(pool)
    return f"(NP {leaf(det)} {leaf(noun)})"


def clause(rng, lemma, style):
    """A bare S (no final punctuation) whose main verb is `lemma`."""
    past, part, third, ger = inflect(lemma)
    subj, obj = np(rng, SUBJECTS), np(rng, OBJECTS)
    if style == "past":
        vp = f"(VP (VBD {past}) {obj})"
    elif style == "perfect":
        vp = f"(VP (VBZ has) (VP (VBN {part}) {obj}))"
    elif style == "modal":
        vp = f"(VP (MD will) (VP (VB {lemma}) {obj}))"
    elif style == "present":
        vp = f"(VP (VBZ {third}) {obj})"
    else:
        vp = f"(VP (VBZ is) (VP (VBG {ger}) {obj}))"
    return f"(S {subj} {vp})"


STYLES = ["past", "past", "perfect", "modal", "present", "progressive"]


def sentence(rng, lemma, complement):
    """Returns (tree, lemmas the extractor will emit)."""
    if lemma == "be":
        subj = np(rng, SUBJECTS)
        return f"(S {subj} (VP (VBD was) (ADJP (JJ {rng.choice(ADJECTIVES)}))) (. .))", ["be"]
    if complement is None:
        inner = clause(rng, lemma, rng.choice(STYLES))
        return inner[:-1] + " (. .))", [lemma]
    past = inflect(lemma)[0]
    subj = np(rng, SUBJECTS)
    comp = clause(rng, complement, rng.choice(["past", "perfect", "modal"]))
    return f"(S {subj} (VP (VBD {past}) (SBAR (IN that) {comp})) (. .))", [lemma, complement]


def class_of(lemma):
    for cls, verbs in CLASS_VERBS.items():
        if lemma in verbs:
            return cls
    if lemma == "be":
        return "Support"
    return None


def article(rng, planted, n_sentences):
    others = [c for c in CLASS_VERBS if c != planted]
    while True:
        sents, counts = [], Counter()
        for _ in range(n_sentences):
            r = rng.random()
            if r < 0.45:
                lemma = rng.choice(CLASS_VERBS[planted])
            elif r < 0.52:
                lemma = rng.choice(UNKNOWN_VERBS)
            elif r < 0.56:
                lemma = "be"
            else:
                lemma = rng.choice(CLASS_VERBS[rng.choice(others)])
            comp = None
            if class_of(lemma) == "Communication" and rng.random() < 0.7:
                pick = planted if rng.random() < 0.5 else rng.choice(others)
                comp = rng.choice(CLASS_VERBS[pick])
            tree, emitted = sentence(rng, lemma, comp)
            sents.append(tree)
            counts.update(c for c in map(class_of, emitted) if c)
        best = max(counts.values())
        if counts[planted] == best and sum(v == best for v in counts.values()) == 1:
            return sents


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--output", default="data/fixture_corpus.tb")
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--per-class", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    lines = []
    serial = 0
    for planted in CLASS_VERBS:
        for _ in range(args.per_class):
            serial += 1
            lines.append(f"#article nyt-{serial:04d}")
            lines.extend(article(rng, planted, rng.randint(11, 16)))
            lines.append("")
    for _ in range(3):
        serial += 1
        lines.append(f"#article brief-{serial:04d}")
        lines.extend(article(rng, rng.choice(list(CLASS_VERBS)), rng.randint(3, 8)))
        lines.append("")
    with open(args.output, "w", encoding="utf-8") as f:
        f.write("\n".join(lines))


if __name__ == "__main__":
    main()
