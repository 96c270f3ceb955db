"""Title text processing: tokenization, stopword removal, stemming.

A title becomes a set of stems in three stages: lowercase and split on
non-alphanumerics, drop stopwords, stem what remains.  Downstream counting
is strictly set-based, so a stem occurring three times in one title counts
once for that document.
"""

import re
from functools import lru_cache
from importlib import resources

from .porter import porter_stem

TokenSet = frozenset[str]

# runs of letters/digits; underscores separate tokens like any other symbol
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

# corpora reuse a small vocabulary over and over; stemming is pure
stem_token = lru_cache(maxsize=1 << 18)(porter_stem)


def tokenize(title: str) -> list[str]:
    """Lowercase *title* and split it into content-bearing tokens.

    Splits on every character that is not a letter or digit, then drops
    tokens shorter than two characters and tokens without any letter
    (bare numbers such as publication years carry no topical content,
    but mixed tokens like ``c60`` survive).
    """
    out = []
    for tok in _TOKEN_RE.findall(title.lower()):
        if len(tok) < 2:
            continue
        if not any(ch.isalpha() for ch in tok):
            continue
        out.append(tok)
    return out


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    text = resources.files("rfa.data").joinpath("stopwords.txt").read_text("utf-8")
    return _parse_stopword_text(text)


def load_stopwords(path: str) -> frozenset[str]:
    """Load a stopword file: one lowercase word per line, ``#`` comments."""
    with open(path, "r", encoding="utf-8") as f:
        return _parse_stopword_text(f.read())


def _parse_stopword_text(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line)
    return frozenset(words)


def remove_stopwords(tokens: list[str], stopwords: frozenset[str] | None = None) -> list[str]:
    """Filter *tokens* against a stopword set, preserving order.

    With ``stopwords=None`` the bundled default list (short, function
    words only) applies.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    return [t for t in tokens if t not in stopwords]


def title_to_tokenset(title: str, stopwords: frozenset[str] | None = None) -> TokenSet:
    """Full pipeline: tokenize, drop stopwords, stem, deduplicate."""
    return frozenset(stem_token(t) for t in remove_stopwords(tokenize(title), stopwords))
