#!/usr/bin/env python3
"""Generate the synthetic fixture corpora under tests/fixtures/.

Three corpus directories plus a fixture registry:

* corpus_ds: 6 languages, the "dataset" side of the scoring fixtures.
  Includes one language written in a spaced logographic script (qaf)
  whose registry row carries script_scale 2.4.
* corpus_ref: 10 languages, the "reference" side, spanning a wider
  range of mean word lengths (roughly 2.5 to 8.5) so gap reports show
  both surplus and deficit bins.
* corpus_stability: 12 languages, at least 2000 tokens each, for
  sample-size stability checks.

Word shapes are synthetic: per-language vocabularies with normally
distributed lengths around a target mean, sampled with Zipf-like
weights. Every letter is a single code point and tokens are separated
by single spaces or newlines, so an independent checker can tokenize
with str.split() and measure length with len() and agree exactly with
the package's segmentation. Deterministic; rerunning reproduces the
committed files byte for byte.

    python3 tools/make_text_fixtures.py
"""
import random
import unicodedata
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

ALPHABETS = [
    "abcdefghijklmnop",
    "aeioubcdfglmnprs",
    "áéíóúbcdlmnprstz",
    "abdegiklmnoprstu",
    "äöübcdfghklmnrst",
    "aeioukpstmnrwhgl",
]

# iso -> target mean word length; None marks the logographic language
DS = [("qaa", 4.2), ("qab", 4.6), ("qac", 5.0), ("qad", 5.4), ("qae", 3.6), ("qaf", None)]
REF = [
    ("qba", 2.6), ("qbb", 3.3), ("qbc", 4.2), ("qbd", 4.7), ("qbe", 5.1),
    ("qbf", 5.7), ("qbg", 6.4), ("qbh", 6.9), ("qbi", 7.5), ("qbj", 8.3),
]
STAB = [(f"qc{c}", 3.0 + 0.5 * i) for i, c in enumerate("abcdefghijkl")]

FAMILIES = ["Arcadian", "Boreal", "Coastal", "Deltaic", "Eyrie"]


def make_vocab(rng, mean_len, n_types=260):
    alphabet = ALPHABETS[rng.randrange(len(ALPHABETS))]
    vocab = []
    seen = set()
    while len(vocab) < n_types:
        length = max(1, round(rng.gauss(mean_len, 1.1)))
        word = "".join(rng.choice(alphabet) for _ in range(length))
        if word not in seen:
            seen.add(word)
            vocab.append(word)
    return vocab


def make_han_vocab(rng, n_types=180):
    pool = [chr(0x4E00 + i) for i in range(600)]
    rng.shuffle(pool)
    vocab = []
    i = 0
    while len(vocab) < n_types:
        if rng.random() < 0.58:
            vocab.append(pool[i])
            i += 1
        else:
            vocab.append(pool[i] + pool[i + 1])
            i += 2
    return vocab


def write_corpus(directory, iso, mean_len, n_tokens):
    rng = random.Random(f"fixture:{iso}")
    vocab = make_han_vocab(rng) if mean_len is None else make_vocab(rng, mean_len)
    weights = [1.0 / (rank + 1) ** 1.05 for rank in range(len(vocab))]
    tokens = rng.choices(vocab, weights=weights, k=n_tokens)
    lines = [" ".join(tokens[i : i + 12]) for i in range(0, len(tokens), 12)]
    directory.mkdir(parents=True, exist_ok=True)
    (directory / f"{iso}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_registry(path):
    rows = ["iso,name,family,endangerment,script_scale"]
    everyone = [iso for iso, _ in DS + REF + STAB]
    for i, iso in enumerate(everyone):
        family = FAMILIES[i % len(FAMILIES)]
        endangerment = "endangered" if iso in ("qae", "qbj") else ""
        scale = "2.4" if iso == "qaf" else ""
        rows.append(f"{iso},Language {iso.upper()},{family},{endangerment},{scale}")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_normalization_pair():
    # Same accented text twice: composed code points in one file, fully
    # decomposed combining sequences in the other. Readers must collapse
    # the difference before any counting happens.
    text = (
        "café noël reçu très tôt año señal über così è già\n"
        "brûlé čaj žena šílený ďábel ťava ľud ŕěčí źleństwo\n"
        "piñata jalapeño crème fiancée naïve attaché résumé\n"
    )
    nfc = unicodedata.normalize("NFC", text)
    nfd = unicodedata.normalize("NFD", text)
    assert nfc != nfd and nfc.encode() != nfd.encode()
    for name, form in (("corpus_nfc", nfc), ("corpus_nfd", nfd)):
        directory = FIXTURES / name
        directory.mkdir(parents=True, exist_ok=True)
        (directory / "qna.txt").write_text(form, encoding="utf-8")


def main():
    for iso, mean_len in DS:
        write_corpus(FIXTURES / "corpus_ds", iso, mean_len, 1200)
    for iso, mean_len in REF:
        write_corpus(FIXTURES / "corpus_ref", iso, mean_len, 1600)
    for iso, mean_len in STAB:
        write_corpus(FIXTURES / "corpus_stability", iso, mean_len, 2600)
    write_registry(FIXTURES / "registry.csv")
    write_normalization_pair()
    print(f"fixtures written under {FIXTURES}")


if __name__ == "__main__":
    main()
