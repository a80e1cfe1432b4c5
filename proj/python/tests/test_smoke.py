from fractions import Fraction as F

import pytest

import qtsetlin as qt


def test_matrix_rows_sum_to_total_rate():
    states, rows = qt.transition_matrix("perm", n=3, q=2, rates=["1/2", "1/3", "1/6"])
    assert states[0] == "123"
    assert rows[0][0] == F(3, 8)
    assert all(sum(r) == 1 for r in rows)


def test_stationary_methods_agree():
    kw = dict(n=3, q=F(5, 2), rates=[F(1, 7), F(2, 7), F(4, 7)])
    formula = qt.stationary("perm", **kw)
    assert formula == qt.stationary("perm", method="oracle", **kw)
    assert sum(formula.values()) == 1
    assert qt.stationary("perm", n=3, q=2, rates=["1/2", "1/3", "1/6"])["321"] == F(1, 15)


def test_flags_three_ways():
    kw = dict(n=3, p=2, rates=["1/2", "1/3", "1/6"])
    f = qt.stationary("flag", **kw)
    assert len(f) == 21
    assert f == qt.stationary("flag", method="oracle", **kw)
    assert f == qt.stationary("flag", method="semigroup", **kw)


def test_word_example():
    a, b = F(2, 5), F(3, 5)
    q = F(2)
    psi = qt.stationary("word", m=[1, 2], q=q, rates=[a, b])
    c = 1 + 1 / q
    assert psi["122"] == a / (a + b)
    assert psi["221"] == b * b / ((a + b) * (c * a + b))


def test_spectrum_verification():
    rep = qt.verify_spectrum("word", m=[3, 3], q="5/3", rates=["2/7", "5/7"])
    assert rep["annihilates"]
    assert rep["predicted_total"] == rep["dimension"] == 20
    assert all(e["pass"] for e in rep["report"])
    assert len(qt.eigen_catalog("perm", n=3, q=2, rates=[1, 1, 1])) == 8


def test_diagrams_and_suite():
    assert qt.check_commuting("flags-perms-projection", p=3, rates=["1/5", "3/10", "1/2"])
    assert qt.check_commuting("perms-words-inclusion", q="5/2", m=[2, 2], rates=["1/3", "2/3"])
    assert "lumping" in qt.suite_names()
    assert qt.run_suite("hecke", n_max=3, primes=[2])["pass"]


def test_combinatorics():
    assert qt.inv([3, 2, 1]) == 3
    assert qt.lrm_positions([5, 4, 2, 6, 3, 1, 4]) == [1, 2, 3, 6]
    assert qt.destandardize(qt.standardize([2, 2, 1, 3]), [1, 2, 1]) == [2, 2, 1, 3]
    assert qt.derangement(4) == 9
    assert qt.q_int(3, 2) == 7
    assert qt.q_derangement(3, 1) == 2


def test_errors():
    with pytest.raises(ValueError):
        qt.transition_matrix("perm", n=3, q=2, rates=["1/0", "1", "1"])
    with pytest.raises(ValueError):
        qt.transition_matrix("cube", n=3, q=2, rates=[1, 1, 1])
    with pytest.raises(ValueError):
        qt.stationary("perm", n=3, q=2, rates=[1, 1, 1], method="semigroup")
