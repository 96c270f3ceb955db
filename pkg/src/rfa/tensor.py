"""Sparse three-way contingency counts for one sliding window.

Axes are (word, ref, slice): title stem id, normalized reference id, and
the position of the document's year inside a two-year window (0 = earlier
year, 1 = later year).  Every document contributes the full Cartesian
product of its retained stem set and retained reference set, each pair
exactly once per document, so counts stay integers until the single
normalization that turns a tensor into a distribution.
"""

import math
from dataclasses import dataclass, field

from .ingest import Corpus
from .vocab import VocabIndex, document_terms

AXES = ("word", "ref", "slice")

PROB_SUM_TOL = 1e-9


class EmptyWindowError(ValueError):
    """A window with no qualifying word-reference pairs."""


@dataclass
class SparseTensor3:
    """Integer counts over (word, ref, slice); zero cells are not stored.

    ``docs_present`` and ``docs_contributing`` count the documents found in
    each slice and the subset with non-empty retained stem and reference
    sets (only those generate pairs).
    """

    dims: tuple[int, int, int]
    cells: dict[tuple[int, int, int], int]
    total: int
    years: tuple[int, int] | None = None
    docs_present: tuple[int, int] = (0, 0)
    docs_contributing: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        if sum(self.cells.values()) != self.total:
            raise ValueError("total does not match cell sum")
        for cell, count in self.cells.items():
            if count <= 0:
                raise ValueError(f"non-positive count at {cell}")
            if any(not 0 <= cell[a] < self.dims[a] for a in range(3)):
                raise ValueError(f"cell {cell} outside dims {self.dims}")

    @property
    def nonzero_cells(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class JointDistribution:
    """A normalized distribution over a named subset of the tensor axes.

    Keys are index tuples in axis order; zero-probability cells are never
    stored.  When built from counts the integer counts are kept privately
    so nested marginals stay exact.
    """

    axes: tuple[str, ...]
    probs: dict[tuple[int, ...], float]
    _counts: dict[tuple[int, ...], int] | None = field(default=None, repr=False)
    _total: int | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if not self.axes:
            raise ValueError("distribution needs at least one axis")
        if not self.probs:
            raise ValueError("distribution has no mass")
        arity = len(self.axes)
        for key, p in self.probs.items():
            if len(key) != arity:
                raise ValueError(f"key {key} does not match axes {self.axes}")
            if p <= 0.0:
                raise ValueError(f"non-positive probability at {key}")
        if abs(math.fsum(self.probs.values()) - 1.0) > PROB_SUM_TOL:
            raise ValueError("probabilities do not sum to 1")

    @classmethod
    def from_counts(
        cls, axes: tuple[str, ...], counts: dict[tuple[int, ...], int], total: int | None = None
    ) -> "JointDistribution":
        if total is None:
            total = sum(counts.values())
        probs = {key: n / total for key, n in counts.items() if n}
        return cls(axes=axes, probs=probs, _counts=dict(counts), _total=total)

    @classmethod
    def from_probs(
        cls, axes: tuple[str, ...], probs: dict[tuple[int, ...], float]
    ) -> "JointDistribution":
        return cls(axes=axes, probs=dict(probs))

    def marginal(self, axes: tuple[str, ...] | str) -> "JointDistribution":
        """Marginal over a subset of axes, kept in this distribution's order.

        Sums integer counts when available (exact); falls back to
        compensated float sums otherwise.
        """
        if isinstance(axes, str):
            axes = (axes,)
        missing = [a for a in axes if a not in self.axes]
        if missing:
            raise ValueError(f"unknown axes {missing}; have {self.axes}")
        keep = tuple(a for a in self.axes if a in axes)
        if keep == self.axes:
            return self
        idx = tuple(self.axes.index(a) for a in keep)
        if self._counts is not None:
            counts: dict[tuple[int, ...], int] = {}
            for key, n in self._counts.items():
                sub = tuple(key[i] for i in idx)
                counts[sub] = counts.get(sub, 0) + n
            return JointDistribution.from_counts(keep, counts, self._total)
        groups: dict[tuple[int, ...], list[float]] = {}
        for key, p in self.probs.items():
            groups.setdefault(tuple(key[i] for i in idx), []).append(p)
        return JointDistribution.from_probs(
            keep, {key: math.fsum(ps) for key, ps in groups.items()}
        )


def marginalize(tensor: SparseTensor3, axes: tuple[str, ...] | str) -> JointDistribution:
    """Normalize *tensor* and marginalize onto *axes* (a non-empty subset
    of ``("word", "ref", "slice")``, treated as a set; output axes follow
    tensor order).  Counts are summed exactly before the one division per
    cell."""
    if isinstance(axes, str):
        axes = (axes,)
    unknown = [a for a in axes if a not in AXES]
    if unknown:
        raise ValueError(f"unknown axes {unknown}; valid axes are {AXES}")
    if not axes:
        raise ValueError("need at least one axis")
    if tensor.total == 0:
        raise EmptyWindowError("cannot normalize an empty tensor")
    keep = tuple(a for a in AXES if a in axes)
    idx = tuple(AXES.index(a) for a in keep)
    counts: dict[tuple[int, ...], int] = {}
    for cell, n in tensor.cells.items():
        key = tuple(cell[i] for i in idx)
        counts[key] = counts.get(key, 0) + n
    return JointDistribution.from_counts(keep, counts, tensor.total)


def build_window_tensor(
    corpus: Corpus,
    word_vocab: VocabIndex,
    ref_vocab: VocabIndex,
    year_prev: int,
    year_curr: int,
    stopwords: frozenset[str] | None = None,
) -> SparseTensor3:
    """Count retained (stem, ref, slice) pairs over a two-year window.

    ``year_curr`` must be ``year_prev + 1``.  Documents whose retained stem
    set or reference set is empty contribute nothing but are counted in
    the diagnostics.  A window with no qualifying pairs at all (whether or
    not documents exist) raises :class:`EmptyWindowError`; one empty slice
    is fine and simply leaves that slice without mass.
    """
    if year_curr != year_prev + 1:
        raise ValueError(f"window years must be adjacent, got {year_prev} and {year_curr}")
    cells: dict[tuple[int, int, int], int] = {}
    present = [0, 0]
    contributing = [0, 0]
    total = 0
    for rec in corpus:
        if rec.year == year_prev:
            z = 0
        elif rec.year == year_curr:
            z = 1
        else:
            continue
        present[z] += 1
        stems, refs = document_terms(rec, stopwords)
        wids = sorted(word_vocab.term_to_id[s] for s in stems if s in word_vocab.term_to_id)
        rids = sorted(ref_vocab.term_to_id[r] for r in refs if r in ref_vocab.term_to_id)
        if not wids or not rids:
            continue
        contributing[z] += 1
        for w in wids:
            for r in rids:
                key = (w, r, z)
                cells[key] = cells.get(key, 0) + 1
        total += len(wids) * len(rids)
    if total == 0:
        if present == [0, 0]:
            raise EmptyWindowError(
                f"empty window {year_prev}-{year_curr}: no documents in either year"
            )
        raise EmptyWindowError(
            f"empty window {year_prev}-{year_curr}: no qualifying word-reference pairs"
        )
    return SparseTensor3(
        dims=(len(word_vocab), len(ref_vocab), 2),
        cells=cells,
        total=total,
        years=(year_prev, year_curr),
        docs_present=(present[0], present[1]),
        docs_contributing=(contributing[0], contributing[1]),
    )


def dump_tensor_tsv(tensor: SparseTensor3) -> str:
    """Serialize sorted non-zero cells with a dims/total header line."""
    w, r, z = tensor.dims
    lines = [
        f"# dims={w}x{r}x{z} total={tensor.total}",
        "w_id\tr_id\tz\tcount",
    ]
    for cell in sorted(tensor.cells):
        lines.append(f"{cell[0]}\t{cell[1]}\t{cell[2]}\t{tensor.cells[cell]}")
    return "\n".join(lines) + "\n"
