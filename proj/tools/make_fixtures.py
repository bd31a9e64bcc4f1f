#!/usr/bin/env python3
# Copyright 2026 The luxnorm Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate the fixture corpora, lexicons and variant dictionaries.

roundtrip/  500 sentences, a lexicon covering every word, and a dictionary in
            which each variant belongs to exactly one lemma and is not a
            lexicon word (case-insensitively).
eval/       a held-out gold split, a lexicon from a disjoint training split,
            and a dictionary with the usual mess: identity variants,
            variants shared by several lemmas, variants that are real words.

Everything derives from one seeded random.Random, so reruns are identical.
"""

import argparse
import collections
import json
import pathlib
import random

SUBJECTS_SG = [
    ["de", "Papp"], ["d'Mamm"], ["mäi", "Brudder"], ["meng", "Schwëster"], ["d'Kand"],
    ["den", "Noper"], ["de", "Bäcker"], ["d'Fra"], ["de", "Jong"], ["d'Meedchen"],
    ["eise", "Chef"], ["hien"], ["hatt"], ["d'Enseignante"], ["de", "Bopa"], ["d'Boma"],
]
SUBJECTS_PL = [
    ["d'Kanner"], ["mir"], ["si"], ["d'Leit"], ["eis", "Frënn"], ["d'Studenten"],
    ["d'Noperen"], ["meng", "Elteren"],
]
# (3rd singular, plural)
VERBS = [
    ("iesst", "iessen"), ("drénkt", "drénken"), ("kaaft", "kafen"), ("sicht", "sichen"),
    ("brauch", "brauchen"), ("mécht", "maachen"), ("bréngt", "bréngen"), ("gesäit", "gesinn"),
    ("hëlt", "huelen"), ("wëll", "wëllen"), ("kacht", "kachen"), ("verkeeft", "verkafen"),
]
OBJECTS = [
    ["e", "Stéck", "Kuch"], ["eng", "Taass", "Kaffi"], ["e", "Glas", "Waasser"],
    ["d'Zeitung"], ["e", "Buch"], ["frësch", "Brout"], ["Äppel"], ["de", "Schlëssel"],
    ["eng", "nei", "Wunneng"], ["en", "neien", "Auto"], ["Geméis"], ["Fleesch"], ["Fësch"],
    ["Kéis"], ["Mëllech"], ["eng", "Fläsch", "Wäin"], ["Bicher"], ["eng", "Kaart"],
    ["Zopp"], ["Gromperen"], ["e", "Kilo", "Miel"], ["Kiischten"], ["Schockela"],
    ["eng", "Biischt"], ["e", "Läffel"], ["de", "Vëlo"], ["e", "Cadeau"], ["Blummen"],
]
PLACES = [
    ["an", "der", "Stad"], ["am", "Gaart"], ["doheem"], ["an", "der", "Kichen"],
    ["um", "Maart"], ["an", "der", "Schoul"], ["am", "Bësch"], ["op", "der", "Aarbecht"],
    ["zu", "Lëtzebuerg"], ["zu", "Esch"], ["um", "Dësch"], ["am", "Keller"],
    ["beim", "Bäcker"], ["an", "der", "Bibliothéik"], ["um", "Duerf"], ["bei", "der", "Boma"],
]
TIMES = [
    ["haut"], ["muer"], ["moies"], ["owes"], ["samschdes"], ["sonndes"], ["all", "Dag"],
    ["dacks"], ["am", "Summer"], ["am", "Wanter"], ["elo"], ["um", "Mëtteg"],
]
NOUN_PHRASES = [
    ["d'Haus"], ["de", "Gaart"], ["d'Kichen"], ["d'Zopp"], ["de", "Kaffi"], ["d'Stad"],
    ["d'Wunneng"], ["de", "Bus"], ["den", "Zuch"], ["d'Wieder"], ["d'Waasser"], ["de", "Bësch"],
    ["d'Schoul"], ["d'Strooss"], ["d'Fënster"], ["de", "Kuch"], ["d'Kiischt"], ["de", "Maart"],
]
ADJECTIVES = [
    "grouss", "kleng", "waarm", "kal", "nei", "al", "schéin", "eidel", "voll", "séier",
    "lues", "propper", "rout", "gréng", "bëlleg", "deier", "roueg", "haart", "wichteg", "fäerdeg",
]
INTENSIFIERS = [[], ["ganz"], ["ze"], ["net"], ["nach"], ["immens"]]
QUESTIONS = [["wou", "ass"], ["wéini", "kënnt"], ["firwat", "ass"]]
N_RULE_WORDS = {"den", "en", "neien", "gesinn", "hunn", "sinn", "ginn", "wëllen", "kënnen"}
KEEP_N_BEFORE = set("aeiouäëéöüAEIOUÄËÉÖÜndtzhNDTZH")


def n_rule(words):
    """Drops a final n before consonants other than n, d, t, z, h."""
    out = list(words)
    for i in range(len(out) - 1):
        w, nxt = out[i], out[i + 1]
        body = nxt[2:] if len(nxt) > 2 and nxt[1] == "'" else nxt
        if w in N_RULE_WORDS and body and body[0] not in KEEP_N_BEFORE:
            out[i] = w[:-1]
    return out


def make_sentence(rng):
    kind = rng.randrange(5)
    if kind == 0:
        plural = rng.random() < 0.4
        subj = rng.choice(SUBJECTS_PL if plural else SUBJECTS_SG)
        verb = rng.choice(VERBS)[1 if plural else 0]
        words = subj + [verb] + rng.choice(OBJECTS) + rng.choice(PLACES)
        end = "."
    elif kind == 1:
        plural = rng.random() < 0.4
        subj = rng.choice(SUBJECTS_PL if plural else SUBJECTS_SG)
        verb = rng.choice(VERBS)[1 if plural else 0]
        words = rng.choice(TIMES) + [verb] + subj + rng.choice(OBJECTS)
        end = "."
    elif kind == 2:
        words = rng.choice(NOUN_PHRASES) + ["ass"] + rng.choice(INTENSIFIERS) + [rng.choice(ADJECTIVES)]
        end = rng.choice([".", ".", "!"])
    elif kind == 3:
        words = rng.choice(QUESTIONS) + rng.choice(NOUN_PHRASES)
        end = "?"
    else:
        plural = rng.random() < 0.5
        subj = rng.choice(SUBJECTS_PL if plural else SUBJECTS_SG)
        aux = "hunn" if plural else "huet"
        words = subj + [aux] + rng.choice(OBJECTS) + rng.choice(PLACES) + ["gesinn"]
        end = "."
    words = n_rule(words)
    return words, end


def render(words, end):
    first = words[0][0].upper() + words[0][1:]
    return " ".join([first] + words[1:]) + end


def bare(word):
    return word[2:] if len(word) > 2 and word[1] == "'" else word


def make_corpus(rng, count, exclude=()):
    seen = set(exclude)
    sentences = []
    lexicon = collections.Counter()
    while len(sentences) < count:
        words, end = make_sentence(rng)
        text = render(words, end)
        if text in seen:
            continue
        seen.add(text)
        sentences.append(text)
        for w in words:
            lexicon[bare(w)] += 1
    return sentences, lexicon


SUBSTITUTIONS = [
    ("ii", "i"), ("aa", "a"), ("ee", "e"), ("oo", "o"), ("uu", "u"), ("ë", "e"), ("é", "e"),
    ("ä", "e"), ("äi", "ei"), ("ue", "u"), ("ie", "i"), ("ou", "o"), ("ss", "s"), ("tt", "t"),
    ("ll", "l"), ("nn", "n"), ("mm", "m"), ("ff", "f"), ("ch", "g"), ("sch", "sh"),
]
VOWELS = set("aeiouäëéöü")


def spelling_variants(word):
    out = set()
    for old, new in SUBSTITUTIONS:
        start = word.find(old)
        while start != -1:
            out.add(word[:start] + new + word[start + len(old):])
            start = word.find(old, start + 1)
    if len(word) >= 3 and word[-1] in "dg":
        out.add(word[:-1] + {"d": "t", "g": "ch"}[word[-1]])
    for i in range(1, len(word) - 1):
        c = word[i]
        if c not in VOWELS and c.isalpha() and word[i - 1] in VOWELS and word[i + 1] in VOWELS:
            out.add(word[:i] + c + word[i:])
    out.discard(word)
    return sorted(out)


def unambiguous_dictionary(rng, lexicon):
    taken = {w.lower() for w in lexicon}
    rows = []
    lemmas = sorted(w for w in lexicon if len(w) >= 3)
    folded_lemmas = set()
    for lemma in lemmas:
        if lemma.lower() in folded_lemmas:
            continue
        folded_lemmas.add(lemma.lower())
        options = [v for v in spelling_variants(lemma) if v.lower() not in taken]
        if not options or rng.random() < 0.25:
            continue
        rng.shuffle(options)
        for variant in options[: rng.randint(1, 3)]:
            taken.add(variant.lower())
            rows.append((lemma, variant, rng.randint(1, 60)))
    return rows


def ambiguous_dictionary(rng, lexicon):
    rows = []
    for lemma in sorted(lexicon):
        options = spelling_variants(lemma)
        if not options or rng.random() < 0.2:
            continue
        rows.append((lemma, lemma, rng.randint(40, 200)))
        rng.shuffle(options)
        for variant in options[: rng.randint(1, 3)]:
            rows.append((lemma, variant, rng.randint(5, 80)))
    # Colloquial forms that are themselves words, and shared variants.
    extra = [
        ("den", "de", 90), ("en", "e", 60), ("si", "se", 70), ("mir", "mer", 120),
        ("dir", "der", 80), ("hien", "en", 40), ("ass", "as", 30), ("net", "nët", 25),
        ("eng", "en", 15), ("hatt", "et", 20), ("Schwëster", "Schwester", 30),
        ("Bäcker", "Becker", 35), ("Kéis", "Kees", 20), ("Bësch", "Besch", 25),
    ]
    rows.extend(r for r in extra if r[0] in lexicon)
    return rows


def write_tsv(path, rows):
    with path.open("w", encoding="utf-8", newline="\n") as f:
        for row in rows:
            f.write("\t".join(str(x) for x in row) + "\n")


def write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8", newline="\n")


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=pathlib.Path, default=root / "data/fixtures")
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    rt = args.out / "roundtrip"
    rt.mkdir(parents=True, exist_ok=True)
    corpus, lexicon = make_corpus(rng, 500)
    write_lines(rt / "corpus.txt", corpus)
    write_tsv(rt / "lexicon.tsv", sorted(lexicon.items()))
    write_tsv(rt / "dictionary.tsv", unambiguous_dictionary(rng, lexicon))

    ev = args.out / "eval"
    ev.mkdir(parents=True, exist_ok=True)
    train, train_lexicon = make_corpus(rng, 800)
    gold, gold_lexicon = make_corpus(rng, 200, exclude=train)
    write_lines(ev / "gold.txt", gold)
    write_tsv(ev / "lexicon.tsv", sorted(train_lexicon.items()))
    write_tsv(ev / "dictionary.tsv", ambiguous_dictionary(rng, train_lexicon + gold_lexicon))
    config = {
        "seed": 42,
        "normalizer": "pipeline",
        "dictionary": "dictionary.tsv",
        "lexicon": "lexicon.tsv",
        "gold": "gold.txt",
        "suite": "../../suite/mft_suite.tsv",
        "output_dir": "run",
    }
    (ev / "config.json").write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")
    print(f"roundtrip: {len(corpus)} sentences, {len(lexicon)} words; "
          f"eval: {len(gold)} gold sentences, {len(train_lexicon)} lexicon words")


if __name__ == "__main__":
    main()
