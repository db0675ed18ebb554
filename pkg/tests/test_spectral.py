import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from layerline.errors import NotSquare
from layerline.graph import complete_graph, petersen_graph
from layerline.layers import build_line_b
from layerline.spectral import (
    adjacency_matrix,
    annihilation_check,
    eigenvalue_present,
    line_b1_spectrum_report,
    multiplicity,
    rank,
)

int_matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(int_matrices)
def test_rank_matches_sympy(M):
    assert rank(M) == sympy.Matrix(M).rank()


def test_rank_edge_cases():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[2, 4], [1, 2]]) == 1


def test_known_spectra():
    A = adjacency_matrix(petersen_graph())
    assert annihilation_check(A, [3, 1, -2])
    assert not annihilation_check(A, [3, 1])
    assert (multiplicity(A, 3), multiplicity(A, 1), multiplicity(A, -2)) == (1, 5, 4)
    assert not eigenvalue_present(adjacency_matrix(complete_graph(4)), 1)


def test_not_square():
    with pytest.raises(NotSquare):
        annihilation_check([[1, 2]], [0])


@pytest.mark.parametrize("n", range(4, 9))
def test_line_b1_report(n):
    rep = line_b1_spectrum_report(n)
    assert rep.annihilates and rep.all_present and rep.exact
    assert sum(rep.multiplicities.values()) == n * (n - 1)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_multiplicities_match_floating_point(n):
    A = np.array(adjacency_matrix(build_line_b(n, 1)[0]))
    vals = np.rint(np.linalg.eigvalsh(A)).astype(int)
    counts = {int(v): int((vals == v).sum()) for v in set(vals.tolist())}
    assert counts == line_b1_spectrum_report(n).multiplicities


def test_report_dict():
    d = line_b1_spectrum_report(4).as_dict()
    assert d["roots"] == [-2, -1, 0, 2, 3]
    assert d["multiplicities"] == {"-2": 3, "-1": 3, "0": 2, "2": 3, "3": 1}
