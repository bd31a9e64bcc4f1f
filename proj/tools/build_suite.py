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
"""Expand data/suite/mft_suite.src into the checklist TSV.

CORRECT lines mark the target as [wrong|right]; the target index is found by
tokenizing the sentence the same way the C++ tokenizer does.
"""

import argparse
import pathlib
import re
import sys
import unicodedata

PUNCT = set('.,!?;:„“"()')
CLITICS = set("dlmtzDLMTZ")
MARKER = re.compile(r"\[([^|\]]+)\|([^\]]+)\]")
PLACEHOLDER = "⁣TARGET⁣"  # no whitespace, no punctuation
HEADER = "category\tsetup\tsentence\ttarget_index\texpected\tgloss\tprovenance"


def clitic_length(word):
    return 2 if len(word) >= 2 and word[0] in CLITICS and word[1] in "'’" else 0


def tokenize(sentence):
    chunks = sentence.split()
    tokens = []
    i = 0
    while i < len(chunks):
        chunk = chunks[i]
        while len(chunk) == 2 and clitic_length(chunk) == 2 and i + 1 < len(chunks):
            i += 1
            chunk += chunks[i]
        begin, end = 0, len(chunk)
        while begin < end and chunk[begin] in PUNCT:
            tokens.append(chunk[begin])
            begin += 1
        tail = end
        while tail > begin and chunk[tail - 1] in PUNCT:
            tail -= 1
        if tail > begin:
            tokens.append(chunk[begin:tail])
        tokens.extend(chunk[tail:end])
        i += 1
    return tokens


def parse_source(path):
    units = []
    category = None
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        if line.startswith("@ "):
            category = line[2:].strip()
            continue
        fields = line.split("\t")
        if category is None or len(fields) not in (3, 4) or fields[0] not in ("C", "P"):
            sys.exit(f"{path}:{lineno}: malformed line")
        setup, text, gloss = fields[:3]
        provenance = fields[3] if len(fields) == 4 else "authored"
        text = unicodedata.normalize("NFC", text)
        if setup == "P":
            if MARKER.search(text):
                sys.exit(f"{path}:{lineno}: PRESERVE line carries a target marker")
            units.append((category, "PRESERVE", text, "", "", gloss, provenance))
            continue
        marks = MARKER.findall(text)
        if len(marks) != 1:
            sys.exit(f"{path}:{lineno}: need exactly one [wrong|right] marker")
        wrong, right = marks[0]
        tokens = tokenize(MARKER.sub(PLACEHOLDER, text))
        hits = [i for i, t in enumerate(tokens) if PLACEHOLDER in t]
        token = tokens[hits[0]] if len(hits) == 1 else ""
        prefix = token[: clitic_length(token)]
        if len(hits) != 1 or token not in (PLACEHOLDER, prefix + PLACEHOLDER):
            sys.exit(f"{path}:{lineno}: marker must cover a whole token")
        sentence = MARKER.sub(wrong, text)
        if tokenize(sentence)[hits[0]] != prefix + wrong:
            sys.exit(f"{path}:{lineno}: target does not survive tokenization")
        units.append((category, "CORRECT", sentence, str(hits[0]), right, gloss, provenance))
    return units


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--src", type=pathlib.Path, default=root / "data/suite/mft_suite.src")
    ap.add_argument("--out", type=pathlib.Path, default=root / "data/suite/mft_suite.tsv")
    args = ap.parse_args()

    units = parse_source(args.src)
    sentences = [u[2] for u in units]
    dupes = {s for s in sentences if sentences.count(s) > 1}
    if dupes:
        sys.exit("duplicate sentences: " + "; ".join(sorted(dupes)))
    with args.out.open("w", encoding="utf-8", newline="\n") as out:
        out.write("# Generated by tools/build_suite.py from mft_suite.src; do not edit.\n")
        out.write(HEADER + "\n")
        for unit in units:
            out.write("\t".join(unit) + "\n")
    print(f"wrote {len(units)} units to {args.out}")


if __name__ == "__main__":
    main()
