"""Synthetic corpora with a tunable research-front signal.

The generative model couples title words and cited references through
time.  Both universes are partitioned into topic pools that drift: each
simulated year a fixed fraction of the members of every pool relocates to
other pools (a year-seeded partial reshuffle of the partition), and topic
popularity varies by year.  With probability ``kappa`` a document samples
its words and its references from one topic's current pools; otherwise it
samples both uniformly and independently.

Coupled documents make words and references mutually informative *within*
a year, while the drift makes those associations disagree across years,
which is exactly the structure that drives the three-way measure
negative.  ``kappa = 0`` gives independence (measure near zero up to
estimator bias); raising ``kappa`` drives it further negative.

Determinism: every random choice comes from a Philox counter-based
generator keyed by the 64-bit config seed with a counter encoding
(domain, year index, document index), so any document can be regenerated
from (seed, year, doc index) alone, in parallel, in any order.  Word
tokens (``tw0017``) and reference strings (``ref00042``) are fixed points
of the text pipeline: lowercase, longer than one character, not all
digits, ending in digits so no stemming rule touches them.
"""

from dataclasses import dataclass

import numpy as np

from .ingest import Corpus, DocumentRecord

BASE_YEAR = 2000

# fraction of each universe relocated between topic pools per year;
# fixed by calibration, not a config knob
DRIFT = 0.6

_DOM_WORD_POOL = 1
_DOM_REF_POOL = 2
_DOM_POPULARITY = 3
_DOM_DOC = 4


class SynthConfigError(ValueError):
    """A synthetic-corpus configuration that cannot be generated."""


@dataclass(frozen=True)
class SynthConfig:
    """Generator knobs.

    ``docs_per_year`` is the base count for the first year; ``growth`` is
    the multiplicative rate per year, so year i holds
    ``round(docs_per_year * growth**i)`` documents (at least 1).
    """

    years: int
    docs_per_year: int
    growth: float = 1.0
    n_words: int = 120
    n_refs: int = 120
    n_topics: int = 6
    kappa: float = 0.5
    words_per_doc: int = 6
    refs_per_doc: int = 8
    seed: int = 42

    def __post_init__(self) -> None:
        if self.years < 1:
            raise SynthConfigError("years must be >= 1")
        if self.docs_per_year < 1:
            raise SynthConfigError("docs_per_year must be >= 1")
        if self.growth <= 0:
            raise SynthConfigError("growth must be > 0")
        if not 0.0 <= self.kappa <= 1.0:
            raise SynthConfigError(f"kappa must lie in [0, 1], got {self.kappa}")
        if not 0 <= self.seed < 2**64:
            raise SynthConfigError("seed must be an unsigned 64-bit integer")
        if self.n_topics < 1:
            raise SynthConfigError("n_topics must be >= 1")
        if self.n_topics > min(self.n_words, self.n_refs):
            raise SynthConfigError("more topics than words or references")
        if self.words_per_doc < 1 or self.refs_per_doc < 1:
            raise SynthConfigError("per-document draw counts must be >= 1")
        if self.words_per_doc > self.n_words // self.n_topics:
            raise SynthConfigError(
                f"words_per_doc={self.words_per_doc} exceeds the smallest topic pool "
                f"({self.n_words} words / {self.n_topics} topics)"
            )
        if self.refs_per_doc > self.n_refs // self.n_topics:
            raise SynthConfigError(
                f"refs_per_doc={self.refs_per_doc} exceeds the smallest topic pool "
                f"({self.n_refs} refs / {self.n_topics} topics)"
            )

    def docs_in_year(self, year_index: int) -> int:
        return max(1, int(self.docs_per_year * self.growth**year_index + 0.5))


def _rng(seed: int, domain: int, a: int = 0, b: int = 0) -> np.random.Generator:
    # distinguishing words sit high in the 256-bit counter so the
    # low-word block increments of separate streams can never collide
    counter = np.array([0, b, a, domain], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=np.uint64(seed), counter=counter))


def _year_pools(seed: int, domain: int, n: int, n_topics: int, years: int) -> list[list[np.ndarray]]:
    """Topic pools per year: a permutation of range(n) split into
    ``n_topics`` blocks, with a DRIFT-sized random subset of positions
    re-shuffled between consecutive years."""
    pools = []
    perm = _rng(seed, domain, 0).permutation(n)
    pools.append(np.array_split(perm, n_topics))
    n_move = int(round(DRIFT * n))
    for yi in range(1, years):
        rng = _rng(seed, domain, yi)
        perm = perm.copy()
        if n_move >= 2:
            pos = rng.choice(n, size=n_move, replace=False)
            perm[pos] = perm[pos][rng.permutation(n_move)]
        pools.append(np.array_split(perm, n_topics))
    return pools


def generate(config: SynthConfig) -> Corpus:
    """Generate a corpus; byte-identical output for identical configs."""
    word_pools = _year_pools(config.seed, _DOM_WORD_POOL, config.n_words, config.n_topics, config.years)
    ref_pools = _year_pools(config.seed, _DOM_REF_POOL, config.n_refs, config.n_topics, config.years)
    records = []
    for yi in range(config.years):
        year = BASE_YEAR + yi
        weights = _rng(config.seed, _DOM_POPULARITY, yi).random(config.n_topics) + 0.5
        popularity = weights / weights.sum()
        wpools = word_pools[yi]
        rpools = ref_pools[yi]
        for d in range(config.docs_in_year(yi)):
            rng = _rng(config.seed, _DOM_DOC, yi, d)
            if rng.random() < config.kappa:
                topic = int(rng.choice(config.n_topics, p=popularity))
                word_ids = rng.choice(wpools[topic], size=config.words_per_doc, replace=False)
                ref_ids = rng.choice(rpools[topic], size=config.refs_per_doc, replace=False)
            else:
                word_ids = rng.choice(config.n_words, size=config.words_per_doc, replace=False)
                ref_ids = rng.choice(config.n_refs, size=config.refs_per_doc, replace=False)
            records.append(
                DocumentRecord(
                    id=f"d{year}n{d:06d}",
                    year=year,
                    title=" ".join(f"tw{int(i):04d}" for i in word_ids),
                    cited_refs=tuple(f"ref{int(i):05d}" for i in ref_ids),
                )
            )
    return Corpus(records=tuple(records))
