#!/usr/bin/env python3
"""Build the committed tokenizer fixtures.

This script is the *reference* BPE implementation: it trains the merge
tables shipped under src/superclass/assets/ and precomputes oracle
encodings for the fixture caption corpus. The package tokenizer is written
independently and must reproduce these outputs byte for byte.

Run from the repo root:  python scripts/make_bpe_fixtures.py
"""

import json
import re
import sys
import unicodedata
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from lexicon import (
    COLORS, COMMON_WORDS, DISTRACTORS, SHAPES, STOPWORDS, TEMPLATE_WORDS,
    caption_lexicon, full_lexicon,
)

ROOT = Path(__file__).resolve().parent.parent
ASSETS = ROOT / "src" / "superclass" / "assets"
FIXTURES = ROOT / "tests" / "fixtures"

END = "</w>"


# --- reference tokenizer -------------------------------------------------

def normalize(text):
    t = unicodedata.normalize("NFC", text).lower()
    t = "".join(
        ch for ch in t
        if ch.isspace() or unicodedata.category(ch) not in ("Cc", "Cf")
    )
    return re.sub(r"\s+", " ", t).strip()


def pretokenize(norm):
    return re.findall(r"\w+|[^\w\s]", norm)


def word_symbols(word):
    if not word:
        return []
    return list(word[:-1]) + [word[-1] + END]


def apply_merges(symbols, ranks):
    symbols = list(symbols)
    while len(symbols) >= 2:
        pairs = set(zip(symbols, symbols[1:]))
        best = min(pairs, key=lambda p: ranks.get(p, float("inf")))
        if best not in ranks:
            break
        merged = []
        i = 0
        while i < len(symbols):
            if (
                i + 1 < len(symbols)
                and symbols[i] == best[0]
                and symbols[i + 1] == best[1]
            ):
                merged.append(symbols[i] + symbols[i + 1])
                i += 2
            else:
                merged.append(symbols[i])
                i += 1
        symbols = merged
    return symbols


def encode(text, vocab_ids, ranks):
    ids = []
    for word in pretokenize(normalize(text)):
        for sym in apply_merges(word_symbols(word), ranks):
            if sym in vocab_ids:
                ids.append(vocab_ids[sym])
    return ids


# --- reference trainer ---------------------------------------------------

def train_bpe(word_counts, n_merges):
    """Greedy pair-frequency BPE. Ties break on lexicographically
    smallest pair so training is fully deterministic."""
    syms = {w: word_symbols(w) for w in word_counts}
    merges = []
    for _ in range(n_merges):
        pair_counts = Counter()
        for w, ss in syms.items():
            c = word_counts[w]
            for pair in zip(ss, ss[1:]):
                pair_counts[pair] += c
        if not pair_counts:
            break
        best = min(pair_counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]
        merges.append(best)
        ranks = {best: 0}
        syms = {w: apply_merges(ss, ranks) for w, ss in syms.items()}
    base = sorted({s for w in word_counts for s in word_symbols(w)})
    vocab = list(base)
    seen = set(base)
    for a, b in merges:
        tok = a + b
        if tok not in seen:
            vocab.append(tok)
            seen.add(tok)
    return vocab, merges


# --- corpora -------------------------------------------------------------

def inflect(word):
    """Cheap morphological variants; keeps the corpus subword-rich."""
    out = [word]
    if word.endswith(("s", "x", "z", "ch", "sh")):
        out.append(word + "es")
    elif word.endswith("y") and len(word) > 2 and word[-2] not in "aeiou":
        out.append(word[:-1] + "ies")
        out.append(word[:-1] + "ily")
    else:
        out.append(word + "s")
    if word.endswith("e"):
        out.append(word[:-1] + "ing")
        out.append(word + "d")
    else:
        out.append(word + "ing")
        out.append(word + "ed")
    out.append(word + "ly")
    out.append(word + "ness")
    return out


def main_corpus():
    """Word frequencies mimicking a caption stream over a general English
    vocabulary: Zipf-weighted filler plus the synthetic caption lexicon."""
    counts = Counter()
    base = sorted(set(COMMON_WORDS) | set(STOPWORDS))
    ordered = []
    for w in base:
        if w.isalpha():
            ordered.extend(inflect(w))
        else:
            ordered.append(w)
    ordered = sorted(set(ordered))
    # Deterministic pseudo-shuffle of ranks: sort by a cheap string hash.
    ranked = sorted(ordered, key=lambda w: (sum(ord(c) * 31 ** i for i, c in enumerate(w)) % 9973, w))
    for rank, w in enumerate(ranked):
        counts[w] += max(1, 60000 // (rank + 12))
    counts["a"] += 120000
    counts["photo"] += 40000
    counts["of"] += 40000
    for w in COLORS:
        counts[w] += 5000
    for w in SHAPES:
        counts[w] += 9000
    for rank, w in enumerate(DISTRACTORS):
        counts[w] += max(40, 12000 // (rank + 1) ** 2)
    return counts


def mini_corpus():
    counts = Counter()
    for w in TEMPLATE_WORDS:
        counts[w] += 1000
    for w in COLORS:
        counts[w] += 300
    for w in SHAPES:
        counts[w] += 500
    for rank, w in enumerate(DISTRACTORS):
        counts[w] += max(5, 200 // (rank + 1))
    return counts


FIXTURE_STRINGS = [
    "a photo of a red circle",
    "A Photo of a RED Circle",
    "a blue square outdoors",
    "the quick brown fox jumps over the lazy dog",
    "a green triangle, a yellow cross!",
    "  whitespace   collapse\ttest  ",
    "hyphen-ated and under_scored words",
    "numbers 123 and 2024 mixed",
    "unicode café naïve résumé",
    "emoji \U0001f642 should vanish",
    "",
    "punctuation... ellipsis!!!",
    "a purple cross on a dark background",
    "orange orange orange",
    "pink triangle closeup",
    "zzz qqq xxyyzz",
    "mixed CASE Words With Trailing Spaces   ",
    "tab\tseparated\nnewline text",
    "apostrophe don't it's",
    "single a",
    "a a a a",
    "brown circle brown square brown triangle",
    "control\x00char\x07stripped",
    "a vintage photo of a small shiny blue circle",
]


def write_vocab(dirpath, vocab, merges):
    dirpath.mkdir(parents=True, exist_ok=True)
    (dirpath / "vocab.txt").write_text(
        "\n".join(vocab) + "\n", encoding="utf-8"
    )
    lines = ["# merge pairs, priority = line order"]
    lines += [f"{a} {b}" for a, b in merges]
    (dirpath / "merges.txt").write_text(
        "\n".join(lines) + "\n", encoding="utf-8"
    )


def main():
    print("training main vocab ...")
    vocab, merges = train_bpe(main_corpus(), n_merges=3800)
    print(f"  main: V={len(vocab)} merges={len(merges)}")
    write_vocab(ASSETS / "bpe", vocab, merges)

    print("training mini vocab ...")
    mini_vocab, mini_merges = train_bpe(mini_corpus(), n_merges=100)
    print(f"  mini: V={len(mini_vocab)} merges={len(mini_merges)}")
    write_vocab(FIXTURES / "mini_bpe", mini_vocab, mini_merges)

    (ASSETS / "words.txt").write_text(
        "\n".join(full_lexicon()) + "\n", encoding="utf-8"
    )
    (ASSETS / "stopwords.txt").write_text(
        "\n".join(STOPWORDS) + "\n", encoding="utf-8"
    )

    oracle = []
    for name, (vv, mm) in {
        "assets": (vocab, merges),
        "mini": (mini_vocab, mini_merges),
    }.items():
        ids_of = {tok: i for i, tok in enumerate(vv)}
        ranks = {pair: i for i, pair in enumerate(mm)}
        for text in FIXTURE_STRINGS:
            oracle.append({
                "vocab": name,
                "text": text,
                "ids": encode(text, ids_of, ranks),
            })
    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / "bpe_oracle.json").write_text(
        json.dumps(oracle, indent=1, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {len(oracle)} oracle encodings")

    # Sanity: every caption word must encode to at least one id under both
    # vocabularies, and to a single whole-word token under the main one.
    ids_of = {tok: i for i, tok in enumerate(vocab)}
    ranks = {pair: i for i, pair in enumerate(merges)}
    for w in caption_lexicon():
        ids = encode(w, ids_of, ranks)
        assert ids, f"caption word {w!r} lost by main vocab"
    for w in COLORS + SHAPES:
        assert len(encode(w, ids_of, ranks)) == 1, f"{w} not fused"
    print("caption lexicon coverage ok")


if __name__ == "__main__":
    main()
