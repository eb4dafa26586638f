import pytest

import kschur


def test_klr():
    assert kschur.klr([1], [1], 2) == {(2,): 1, (1, 1): 1}


def test_cores():
    core, inner = kschur.to_core([4, 3, 2, 2, 1, 1], 4)
    assert core == [9, 5, 3, 2, 1, 1]
    assert inner == [5, 2, 1]
    assert kschur.from_core([8, 5, 2, 1], 3) == [3, 3, 2, 1]


def test_tableaux():
    ts = kschur.k_tableaux(3, [8, 5, 2, 1], [1, 3, 1, 2, 1, 1])
    assert len(ts) == 3
    assert kschur.count_k_tableaux(3, [3, 3, 2, 1], [1, 3, 1, 2, 1, 1]) == 3


def test_gw_and_fusion():
    assert kschur.gw_invariants([2, 2], [2, 2], 2, 4) == [((), 2, 1)]
    assert kschur.fusion([1], [1], 2, 4) == {(2,): 1, (): 1}


def test_dual():
    assert kschur.d_coefficients([1], [1], 2) == {(2,): 1, (1, 1): 1}
    assert kschur.cauchy_check(3, 5)
    assert kschur.skew_coproduct_check([2, 1], [1], 2)


def test_errors():
    with pytest.raises(ValueError):
        kschur.klr([3], [1], 2)
    with pytest.raises(ValueError):
        kschur.to_core([1, 2], 2)
