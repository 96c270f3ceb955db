"""Vocabulary construction over a whole corpus period.

Thresholds are document frequencies: a stem or normalized reference is
retained when at least ``min_df`` distinct documents contain it, counted
globally over the corpus rather than per window.  Ids are dense and
deterministic: descending document frequency, ties broken by term string,
so rebuilding on the same corpus reproduces the same index byte for byte.
"""

from collections import Counter
from dataclasses import dataclass

from .ingest import Corpus, DocumentRecord, normalize_reference
from .textpipe import TokenSet, remove_stopwords, stem_token, tokenize

WORD = "word"
REFERENCE = "reference"


class VocabError(ValueError):
    """Thresholding left nothing to analyze."""


@dataclass(frozen=True)
class VocabIndex:
    """Dense term index for one kind of unit (title stems or references).

    ``doc_freq`` covers retained terms only; every retained term meets the
    threshold.  ``seen_terms`` is the distinct-term count before
    thresholding; the word index also records the distinct raw-token and
    post-stopword token counts so the effect of each pipeline stage is
    visible in diagnostics.
    """

    kind: str
    threshold: int
    id_to_term: tuple[str, ...]
    term_to_id: dict[str, int]
    doc_freq: dict[str, int]
    seen_terms: int
    raw_tokens: int | None = None
    unstopped_tokens: int | None = None

    def __len__(self) -> int:
        return len(self.id_to_term)

    def __contains__(self, term: str) -> bool:
        return term in self.term_to_id

    def id_for(self, term: str) -> int | None:
        return self.term_to_id.get(term)


def document_terms(
    record: DocumentRecord, stopwords: frozenset[str] | None = None
) -> tuple[TokenSet, frozenset[str]]:
    """The two unit sets of one document: title stems, normalized ref keys.

    References normalizing to the empty string are discarded.
    """
    stems = frozenset(stem_token(t) for t in remove_stopwords(tokenize(record.title), stopwords))
    refs = frozenset(normalize_reference(r) for r in record.cited_refs) - {""}
    return stems, refs


def _index(kind: str, df: Counter, threshold: int, **stats) -> VocabIndex:
    retained = sorted(
        (term for term, n in df.items() if n >= threshold),
        key=lambda term: (-df[term], term),
    )
    return VocabIndex(
        kind=kind,
        threshold=threshold,
        id_to_term=tuple(retained),
        term_to_id={term: i for i, term in enumerate(retained)},
        doc_freq={term: df[term] for term in retained},
        seen_terms=len(df),
        **stats,
    )


def build_vocab(
    corpus: Corpus,
    word_min_df: int = 10,
    ref_min_df: int = 10,
    stopwords: frozenset[str] | None = None,
) -> tuple[VocabIndex, VocabIndex]:
    """Build the word and reference indexes for *corpus*.

    Raises :class:`VocabError` when either side retains nothing: one empty
    side already makes every window tensor empty, so there is nothing
    meaningful left to compute.
    """
    if word_min_df < 1 or ref_min_df < 1:
        raise ValueError("document-frequency thresholds must be >= 1")
    word_df: Counter = Counter()
    ref_df: Counter = Counter()
    raw_tokens: set[str] = set()
    unstopped: set[str] = set()
    for rec in corpus:
        toks = tokenize(rec.title)
        raw_tokens.update(toks)
        kept = remove_stopwords(toks, stopwords)
        unstopped.update(kept)
        word_df.update(frozenset(stem_token(t) for t in kept))
        ref_df.update(frozenset(normalize_reference(r) for r in rec.cited_refs) - {""})

    words = _index(
        WORD, word_df, word_min_df,
        raw_tokens=len(raw_tokens), unstopped_tokens=len(unstopped),
    )
    refs = _index(REFERENCE, ref_df, ref_min_df)
    if not words.id_to_term or not refs.id_to_term:
        raise VocabError(
            "no terms survive thresholds "
            f"(words: {len(words)} retained of {words.seen_terms}, "
            f"references: {len(refs)} retained of {refs.seen_terms})"
        )
    return words, refs


def dump_vocab_tsv(words: VocabIndex, refs: VocabIndex) -> str:
    """Serialize both indexes: ``kind<TAB>term<TAB>id<TAB>doc_freq``."""
    lines = ["kind\tterm\tid\tdoc_freq"]
    for vocab in (words, refs):
        for i, term in enumerate(vocab.id_to_term):
            lines.append(f"{vocab.kind}\t{term}\t{i}\t{vocab.doc_freq[term]}")
    return "\n".join(lines) + "\n"
