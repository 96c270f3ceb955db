"""Entropy, transmission, the three-way decomposition, and the series."""

import math

import pytest
from hypothesis import given, strategies as st

from conftest import dense_tri_oracle
from rfa.infodyn import (
    SERIES_CSV_HEADER,
    SeriesPoint,
    conditional_transmission,
    configurational_information,
    entropy,
    mu_star_series,
    transmission,
    write_series_csv,
)
from rfa.ingest import Corpus, DocumentRecord
from rfa.tensor import JointDistribution
from rfa.vocab import build_vocab

W, R, Z = ("word", "ref", "slice")


def tri(cells):
    return JointDistribution.from_counts((W, R, Z), cells)


# --- entropy and transmission ---------------------------------------------


def test_entropy_analytic_values():
    assert entropy(JointDistribution.from_probs((W,), {(i,): 0.25 for i in range(4)})) == 2.0
    assert entropy(
        JointDistribution.from_probs((W,), {(0,): 0.5, (1,): 0.25, (2,): 0.25})
    ) == 1.5
    assert entropy(JointDistribution.from_probs((W,), {(0,): 1.0})) == 0.0


def test_transmission_perfect_dependence():
    diag = JointDistribution.from_probs((W, R), {(0, 0): 0.5, (1, 1): 0.5})
    assert transmission(diag) == 1.0


def test_transmission_independent_is_zero():
    exact = JointDistribution.from_probs(
        (W, R), {(i, j): 0.25 for i in range(2) for j in range(2)}
    )
    assert transmission(exact) == 0.0
    px, py = {0: 0.2, 1: 0.8}, {0: 0.3, 1: 0.7}
    lopsided = JointDistribution.from_probs(
        (W, R), {(i, j): px[i] * py[j] for i in px for j in py}
    )
    t = transmission(lopsided)
    assert 0.0 <= t < 1e-12


def test_transmission_partial_dependence_fixture():
    dist = JointDistribution.from_probs(
        (W, R), {(0, 0): 0.4, (0, 1): 0.1, (1, 0): 0.1, (1, 1): 0.4}
    )
    t = transmission(dist)
    assert abs(t - 0.278072) < 1e-6
    expected = 2.0 + 0.8 * math.log2(0.4) + 0.2 * math.log2(0.1)
    assert abs(t - expected) < 1e-12


def test_transmission_requires_two_axes():
    with pytest.raises(ValueError, match="exactly 2 axes"):
        transmission(JointDistribution.from_probs((W,), {(0,): 1.0}))


def test_transmission_scales_with_counts():
    a = JointDistribution.from_counts((W, R), {(0, 0): 3, (0, 1): 1, (1, 1): 4})
    b = JointDistribution.from_counts((W, R), {(0, 0): 21, (0, 1): 7, (1, 1): 28})
    assert transmission(a) == transmission(b)


# --- configurational information -------------------------------------------

XOR_CELLS = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1}
REDUNDANT_CELLS = {(0, 0, 0): 1, (1, 1, 1): 1}
INDEPENDENT_CELLS = {(i, j, k): 1 for i in range(2) for j in range(2) for k in range(2)}


def test_mu_star_xor_is_minus_one():
    assert abs(configurational_information(tri(XOR_CELLS)).mu - (-1.0)) < 1e-12


def test_mu_star_redundant_is_plus_one():
    assert abs(configurational_information(tri(REDUNDANT_CELLS)).mu - 1.0) < 1e-12


def test_mu_star_independent_is_zero():
    assert abs(configurational_information(tri(INDEPENDENT_CELLS)).mu) < 1e-12


def test_decomposition_terms_for_xor():
    dec = configurational_information(tri(XOR_CELLS))
    assert dec.axes == (W, R, Z)
    assert (dec.h_x, dec.h_y, dec.h_z) == (1.0, 1.0, 1.0)
    assert (dec.h_xy, dec.h_xz, dec.h_yz, dec.h_xyz) == (2.0, 2.0, 2.0, 2.0)


def test_configurational_information_requires_three_axes():
    with pytest.raises(ValueError, match="exactly 3 axes"):
        configurational_information(
            JointDistribution.from_probs((W, R), {(0, 0): 1.0})
        )


def test_conditional_transmission_validation():
    dist = tri(XOR_CELLS)
    with pytest.raises(ValueError, match="not in"):
        conditional_transmission(dist, "year")
    with pytest.raises(ValueError, match="exactly 3 axes"):
        conditional_transmission(dist.marginal((W, R)), W)


cells_strategy = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 1)),
    st.integers(1, 9),
    min_size=1,
    max_size=18,
)


@given(cells_strategy)
def test_mu_star_is_transmission_gap_for_any_conditioner(cells):
    dist = tri(cells)
    mu = configurational_information(dist).mu
    pairs = {Z: (W, R), W: (R, Z), R: (W, Z)}
    for given_axis, (x, y) in pairs.items():
        t = (
            entropy(dist.marginal(x))
            + entropy(dist.marginal(y))
            - entropy(dist.marginal((x, y)))
        )
        t_given = conditional_transmission(dist, given_axis)
        assert abs(mu - (t - t_given)) < 1e-12


@given(cells_strategy)
def test_mu_star_matches_dense_oracle(cells):
    dims = (4, 4, 2)
    dec = configurational_information(tri(cells))
    want = dense_tri_oracle(cells, dims)
    for name, got in (
        ("h_w", dec.h_x), ("h_r", dec.h_y), ("h_z", dec.h_z),
        ("h_wr", dec.h_xy), ("h_wz", dec.h_xz), ("h_rz", dec.h_yz),
        ("h_wrz", dec.h_xyz), ("mu", dec.mu),
    ):
        assert abs(got - want[name]) < 1e-12, name


@given(cells_strategy, st.permutations([0, 1, 2]))
def test_mu_star_axis_permutation_symmetry(cells, perm):
    base = configurational_information(tri(cells)).mu
    permuted_cells = {}
    for key, n in cells.items():
        new = tuple(key[perm[i]] for i in range(3))
        permuted_cells[new] = permuted_cells.get(new, 0) + n
    permuted = configurational_information(tri(permuted_cells)).mu
    assert abs(base - permuted) < 1e-12


@given(cells_strategy, st.integers(2, 50))
def test_mu_star_invariant_under_count_scaling(cells, k):
    a = configurational_information(tri(cells)).mu
    b = configurational_information(tri({key: n * k for key, n in cells.items()})).mu
    assert a == b


# --- the yearly series ------------------------------------------------------


def _series_fixture():
    corpus = Corpus(
        records=(
            DocumentRecord(id="a", year=1991, title="alpha beta", cited_refs=("R1",)),
            DocumentRecord(id="b", year=1992, title="alpha", cited_refs=("R1", "R2")),
            DocumentRecord(id="c", year=1995, title="beta", cited_refs=("R2",)),
            DocumentRecord(id="d", year=1996, title="alpha beta", cited_refs=("R1", "R2")),
        )
    )
    words, refs = build_vocab(corpus, word_min_df=1, ref_min_df=1)
    return corpus, words, refs


def test_series_covers_every_window_and_marks_gaps():
    corpus, words, refs = _series_fixture()
    points = mu_star_series(corpus, words, refs)
    assert [p.year for p in points] == [1992, 1993, 1994, 1995, 1996]
    assert [p.empty for p in points] == [False, False, True, False, False]
    assert [p.empty_slice for p in points] == [False, True, False, True, False]
    assert [(p.n_docs_prev, p.n_docs_curr) for p in points] == [
        (1, 1), (1, 0), (0, 0), (0, 1), (1, 1),
    ]
    gap = points[2]
    assert gap.mu_star is None and gap.total_pairs is None


def test_series_single_slice_window_has_zero_slice_entropy():
    corpus, words, refs = _series_fixture()
    points = mu_star_series(corpus, words, refs)
    lone = points[1]  # 1993 window: only the earlier year has pairs
    assert lone.h_z == 0.0
    assert abs(lone.mu_star) < 1e-12


def test_series_point_matches_dense_oracle():
    corpus, words, refs = _series_fixture()
    point = mu_star_series(corpus, words, refs)[0]
    # 1992 window: ids alpha=0 beta=1, R1=0 R2=1
    cells = {(0, 0, 0): 1, (1, 0, 0): 1, (0, 0, 1): 1, (0, 1, 1): 1}
    want = dense_tri_oracle(cells, (2, 2, 2))
    assert point.total_pairs == 4 and point.nonzero_cells == 4
    for name in ("h_w", "h_r", "h_z", "h_wr", "h_wz", "h_rz", "h_wrz", "t_wr"):
        assert abs(getattr(point, name) - want[name]) < 1e-12, name
    assert abs(point.mu_star - want["mu"]) < 1e-12


def test_series_rejects_degenerate_corpora():
    corpus, words, refs = _series_fixture()
    with pytest.raises(ValueError, match="empty corpus"):
        mu_star_series(Corpus(records=()), words, refs)
    single = Corpus(records=(corpus.records[0],))
    with pytest.raises(ValueError, match="single year"):
        mu_star_series(single, words, refs)


def test_series_identical_for_any_worker_count():
    corpus, words, refs = _series_fixture()
    serial = mu_star_series(corpus, words, refs, max_workers=1)
    threaded = mu_star_series(corpus, words, refs, max_workers=8)
    assert serial == threaded


def test_duplicated_corpus_leaves_series_unchanged():
    corpus, words, refs = _series_fixture()
    doubled = Corpus(
        records=corpus.records
        + tuple(
            DocumentRecord(id=r.id + "'", year=r.year, title=r.title,
                           cited_refs=r.cited_refs)
            for r in corpus.records
        )
    )
    base = mu_star_series(corpus, words, refs)
    twice = mu_star_series(doubled, words, refs)
    for a, b in zip(base, twice):
        assert a.mu_star == b.mu_star
        assert b.n_docs_curr == 2 * a.n_docs_curr


# --- CSV rendering ----------------------------------------------------------


def test_csv_header_and_gap_row():
    corpus, words, refs = _series_fixture()
    text = write_series_csv(mu_star_series(corpus, words, refs))
    lines = text.splitlines()
    assert lines[0] == SERIES_CSV_HEADER
    assert lines[0] == (
        "year,n_docs_prev,n_docs_curr,total_pairs,nonzero_cells,"
        "h_w,h_r,h_z,h_wr,h_wz,h_rz,h_wrz,t_wr,mu_star"
    )
    assert len(lines) == 6
    assert lines[3] == "1994,0,0," + ",".join(["NA"] * 11)
    assert all(len(line.split(",")) == 14 for line in lines)


def test_csv_six_decimal_formatting_and_sorting():
    points = [
        SeriesPoint(year=1993, n_docs_prev=1, n_docs_curr=1, total_pairs=2,
                    nonzero_cells=2, h_w=1.0, h_r=0.5, h_z=0.0, h_wr=1.5,
                    h_wz=1.0, h_rz=0.5, h_wrz=1.5, t_wr=0.0, mu_star=-1e-9),
        SeriesPoint(year=1992, n_docs_prev=2, n_docs_curr=1, empty=True),
    ]
    lines = write_series_csv(points).splitlines()
    assert lines[1].startswith("1992,2,1,NA")
    row = lines[2].split(",")
    assert row[:5] == ["1993", "1", "1", "2", "2"]
    assert row[5] == "1.000000" and row[7] == "0.000000"
    # a tiny negative renders as plain zero, never "-0.000000"
    assert row[13] == "0.000000"
