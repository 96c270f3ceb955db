"""Information measures over windowed count tensors.

Everything is in bits (base-2 logs).  Entropies use the plug-in estimator
on observed proportions, accumulated with exactly rounded compensated
summation (``math.fsum``), so results do not depend on cell ordering.

For a two-axis joint, the transmission (mutual information)

    T_xy = H_x + H_y - H_xy

is non-negative up to rounding and is clamped at zero within a tight
tolerance.  For a three-axis joint, the configurational information

    mu* = H_x + H_y + H_z - H_xy - H_xz - H_yz + H_xyz

carries no sign restriction: negative values mean the third variable
mediates dependence between the other two (conditioning on it tightens
their joint), positive values mean redundancy.  Equivalently,
mu* = T_xy - T_xy|z for any choice of conditioning axis.

The yearly series slides a two-year window over a corpus and evaluates
the decomposition on each window's (word, ref, slice) tensor.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ingest import Corpus
from .tensor import EmptyWindowError, JointDistribution, build_window_tensor, marginalize
from .vocab import VocabIndex

NEG_TOL = 1e-12

SERIES_CSV_HEADER = (
    "year,n_docs_prev,n_docs_curr,total_pairs,nonzero_cells,"
    "h_w,h_r,h_z,h_wr,h_wz,h_rz,h_wrz,t_wr,mu_star"
)


def entropy(dist: JointDistribution) -> float:
    """Shannon entropy of *dist* in bits."""
    return -math.fsum(p * math.log2(p) for p in dist.probs.values())


def transmission(dist: JointDistribution) -> float:
    """Mutual information between the two axes of *dist*, in bits.

    Clamped to zero when within -1e-12; a more negative value cannot come
    from a consistent set of marginals and raises.
    """
    if len(dist.axes) != 2:
        raise ValueError(f"transmission needs exactly 2 axes, got {dist.axes}")
    x, y = dist.axes
    t = entropy(dist.marginal(x)) + entropy(dist.marginal(y)) - entropy(dist)
    if t < 0.0:
        if t < -NEG_TOL:
            raise ArithmeticError(f"transmission {t} below zero beyond tolerance")
        return 0.0
    return t


@dataclass(frozen=True)
class TriDecomposition:
    """The seven entropy terms of a three-axis joint plus the resulting
    configurational information, kept together for diagnostics."""

    axes: tuple[str, str, str]
    h_x: float
    h_y: float
    h_z: float
    h_xy: float
    h_xz: float
    h_yz: float
    h_xyz: float
    mu: float


def configurational_information(dist: JointDistribution) -> TriDecomposition:
    """Evaluate the three-way decomposition of a three-axis joint."""
    if len(dist.axes) != 3:
        raise ValueError(f"need exactly 3 axes, got {dist.axes}")
    x, y, z = dist.axes
    h_x = entropy(dist.marginal(x))
    h_y = entropy(dist.marginal(y))
    h_z = entropy(dist.marginal(z))
    h_xy = entropy(dist.marginal((x, y)))
    h_xz = entropy(dist.marginal((x, z)))
    h_yz = entropy(dist.marginal((y, z)))
    h_xyz = entropy(dist)
    mu = h_x + h_y + h_z - h_xy - h_xz - h_yz + h_xyz
    return TriDecomposition(
        axes=(x, y, z),
        h_x=h_x, h_y=h_y, h_z=h_z,
        h_xy=h_xy, h_xz=h_xz, h_yz=h_yz,
        h_xyz=h_xyz, mu=mu,
    )


def conditional_transmission(dist: JointDistribution, given: str) -> float:
    """T between the two remaining axes conditioned on axis *given*:
    H_xg + H_yg - H_xyg - H_g."""
    if len(dist.axes) != 3:
        raise ValueError(f"need exactly 3 axes, got {dist.axes}")
    if given not in dist.axes:
        raise ValueError(f"axis {given!r} not in {dist.axes}")
    x, y = (a for a in dist.axes if a != given)
    return (
        entropy(dist.marginal((x, given)))
        + entropy(dist.marginal((y, given)))
        - entropy(dist)
        - entropy(dist.marginal(given))
    )


@dataclass(frozen=True)
class SeriesPoint:
    """One window of the yearly series.

    ``year`` is the window's later year.  ``empty`` marks a gap: a window
    with no qualifying pairs, whose measure fields are all None.  The
    document counts are corpus counts per year and are always present.
    ``empty_slice`` flags windows where exactly one year contributed
    pairs (H_z is then 0; the point is still computed).
    """

    year: int
    n_docs_prev: int
    n_docs_curr: int
    total_pairs: int | None = None
    nonzero_cells: int | None = None
    h_w: float | None = None
    h_r: float | None = None
    h_z: float | None = None
    h_wr: float | None = None
    h_wz: float | None = None
    h_rz: float | None = None
    h_wrz: float | None = None
    t_wr: float | None = None
    mu_star: float | None = None
    empty: bool = False
    empty_slice: bool = False


def _window_point(
    corpus: Corpus,
    words: VocabIndex,
    refs: VocabIndex,
    year: int,
    stopwords: frozenset[str] | None,
) -> SeriesPoint:
    n_prev = sum(1 for rec in corpus if rec.year == year - 1)
    n_curr = sum(1 for rec in corpus if rec.year == year)
    try:
        tensor = build_window_tensor(corpus, words, refs, year - 1, year, stopwords)
    except EmptyWindowError:
        return SeriesPoint(year=year, n_docs_prev=n_prev, n_docs_curr=n_curr, empty=True)
    joint = marginalize(tensor, ("word", "ref", "slice"))
    dec = configurational_information(joint)
    t_wr = dec.h_x + dec.h_y - dec.h_xy
    if t_wr < 0.0:
        if t_wr < -NEG_TOL:
            raise ArithmeticError(f"transmission {t_wr} below zero beyond tolerance")
        t_wr = 0.0
    return SeriesPoint(
        year=year,
        n_docs_prev=n_prev,
        n_docs_curr=n_curr,
        total_pairs=tensor.total,
        nonzero_cells=tensor.nonzero_cells,
        h_w=dec.h_x, h_r=dec.h_y, h_z=dec.h_z,
        h_wr=dec.h_xy, h_wz=dec.h_xz, h_rz=dec.h_yz,
        h_wrz=dec.h_xyz,
        t_wr=t_wr,
        mu_star=dec.mu,
        empty_slice=0 in tensor.docs_contributing,
    )


def mu_star_series(
    corpus: Corpus,
    words: VocabIndex,
    refs: VocabIndex,
    stopwords: frozenset[str] | None = None,
    max_workers: int | None = None,
) -> list[SeriesPoint]:
    """Evaluate every two-year window (min_year+1 .. max_year), in order.

    Windows without qualifying pairs become gap points rather than
    fabricated zeros.  ``max_workers`` caps worker threads (None or 0
    picks a small default); results are identical for any worker count.
    """
    span = corpus.year_range
    if span is None:
        raise ValueError("empty corpus")
    y_min, y_max = span
    if y_min == y_max:
        raise ValueError(f"corpus spans a single year ({y_min}); need at least two")
    years = range(y_min + 1, y_max + 1)
    if not max_workers:
        max_workers = min(4, os.cpu_count() or 1)
    if max_workers == 1 or len(years) == 1:
        return [_window_point(corpus, words, refs, y, stopwords) for y in years]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        futures = [pool.submit(_window_point, corpus, words, refs, y, stopwords) for y in years]
        return [f.result() for f in futures]


def _fmt(value: float | int | None) -> str:
    if value is None:
        return "NA"
    if isinstance(value, int):
        return str(value)
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def write_series_csv(points: Sequence[SeriesPoint]) -> str:
    """Render series points as CSV, sorted by year, floats at 6 decimals,
    gaps carrying NA in the measure columns."""
    lines = [SERIES_CSV_HEADER]
    for p in sorted(points, key=lambda p: p.year):
        lines.append(
            ",".join(
                [
                    str(p.year),
                    str(p.n_docs_prev),
                    str(p.n_docs_curr),
                    _fmt(p.total_pairs),
                    _fmt(p.nonzero_cells),
                    _fmt(p.h_w), _fmt(p.h_r), _fmt(p.h_z),
                    _fmt(p.h_wr), _fmt(p.h_wz), _fmt(p.h_rz), _fmt(p.h_wrz),
                    _fmt(p.t_wr), _fmt(p.mu_star),
                ]
            )
        )
    return "\n".join(lines) + "\n"
