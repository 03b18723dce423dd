#!/usr/bin/env python3
"""Estimate the Bayes loss floor of the synthetic caption design.

Training loss cannot drop below the entropy of the normalized target given
the image class, so the acceptance bound (final <= 20% of step-1 loss,
step-1 loss = ln V) is only reachable if the caption design keeps that
entropy low. This script simulates the caption stream for each planned
ablation configuration and prints floor vs bound.
"""

import math
import sys
from collections import Counter
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))
from lexicon import COLORS, DISTRACTORS, SHAPES, STOPWORDS
from make_bpe_fixtures import apply_merges, normalize, pretokenize, word_symbols

ROOT = Path(__file__).resolve().parent.parent
ASSETS = ROOT / "src" / "superclass" / "assets"

TEMPLATES = [
    ("a {color} {shape}", 0.55),
    ("{color} {shape}", 0.45),
]
P_DISTRACT = 0.30
ZIPF_S = 2.5


def load_bpe():
    vocab = (ASSETS / "bpe" / "vocab.txt").read_text().splitlines()
    ids_of = {tok: i for i, tok in enumerate(vocab)}
    ranks = {}
    for line in (ASSETS / "bpe" / "merges.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        a, b = line.split(" ")
        ranks[(a, b)] = len(ranks)
    return ids_of, ranks, len(vocab)


def load_words():
    words = (ASSETS / "words.txt").read_text().split()
    return {w: i for i, w in enumerate(words)}, len(words)


def bpe_encode(text, ids_of, ranks):
    out = []
    for w in pretokenize(normalize(text)):
        out += [ids_of[s] for s in apply_merges(word_symbols(w), ranks) if s in ids_of]
    return out


def sample_captions(n, rng):
    t_words = [t for t, _ in TEMPLATES]
    t_probs = np.array([p for _, p in TEMPLATES])
    zipf = np.array([1.0 / (r + 1) ** ZIPF_S for r in range(len(DISTRACTORS))])
    zipf /= zipf.sum()
    caps = []
    for _ in range(n):
        color = COLORS[rng.integers(len(COLORS))]
        shape = SHAPES[rng.integers(len(SHAPES))]
        tmpl = t_words[rng.choice(len(t_words), p=t_probs)]
        cap = tmpl.format(color=color, shape=shape)
        if rng.random() < P_DISTRACT:
            k = 1 if rng.random() < 0.8 else 2
            for _ in range(k):
                cap += " " + DISTRACTORS[rng.choice(len(DISTRACTORS), p=zipf)]
        caps.append((cap, (color, shape)))
    return caps


def floor_for(label_sets, V, use_idf, n_docs):
    df = Counter()
    for ls, _ in label_sets:
        for c in ls:
            df[c] += 1
    if use_idf:
        w = {c: max(math.log(n_docs / (1 + df[c])), 0.0) for c in df}
    else:
        w = {c: 1.0 for c in df}
    by_class = {}
    for ls, cls in label_sets:
        tot = sum(w[c] for c in ls)
        if tot <= 0:
            continue
        mean = by_class.setdefault(cls, Counter())
        for c in ls:
            mean[c] += w[c] / tot
    hs = []
    counts = Counter(cls for _, cls in label_sets)
    for cls, mean in by_class.items():
        n = counts[cls]
        h = -sum((m / n) * math.log(m / n) for m in mean.values())
        hs.append(h)
    return float(np.mean(hs))


def main():
    rng = np.random.default_rng(123)
    n = 60000
    caps = sample_captions(n, rng)
    ids_of, ranks, Vb = load_bpe()
    word_ids, Vw = load_words()
    stop_bpe = set()
    for s in STOPWORDS:
        ids = bpe_encode(s, ids_of, ranks)
        if len(ids) == 1:
            stop_bpe.add(ids[0])

    bpe_sets = [(sorted(set(bpe_encode(c, ids_of, ranks))), cls) for c, cls in caps]
    bpe_nostop = [(sorted(set(s) - stop_bpe), cls) for s, cls in bpe_sets]
    word_sets = []
    for c, cls in caps:
        toks = [word_ids[w] for w in pretokenize(normalize(c)) if w in word_ids]
        word_sets.append((sorted(set(toks)), cls))

    runs = [
        ("bpe idf=on", bpe_sets, Vb, True),
        ("bpe idf=off", bpe_sets, Vb, False),
        ("bpe idf=on rm-stop", bpe_nostop, Vb, True),
        ("word idf=on", word_sets, Vw, True),
    ]
    for name, sets, V, idf in runs:
        fl = floor_for(sets, V, idf, n)
        bound = 0.2 * math.log(V)
        flag = "OK " if fl < bound - 0.25 else ("thin" if fl < bound else "FAIL")
        print(f"{name:22s} V={V:5d} floor={fl:.3f} bound={bound:.3f} slack={bound-fl:+.3f} [{flag}]")


if __name__ == "__main__":
    main()
