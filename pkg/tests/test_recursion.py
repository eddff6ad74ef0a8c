import random

from tevelev.params import TevelevProblem, derive_params
from tevelev.closed_form import tev_closed
from tevelev.recursion import _tev, tev_recursive


def R(g, ell, *profiles):
    return tev_recursive(TevelevProblem(g, ell, tuple(profiles))).value


def test_examples():
    assert R(2, 0, (1, 1)) == 3
    # summands of the first step, checked against the closed form
    assert R(1, 0, (1,)) == 2
    assert R(1, 1, (1, 1, 1)) == 1
    assert R(0, 5, (1, 1), (1,)) == 1


def test_invalid_is_zero():
    assert R(1, -1, (1, 1, 1)) == 0
    assert R(0, -2) == 0


def test_k0_unit_insertion():
    # k = 0 recursion goes through an inserted unit group
    for g in range(0, 8):
        for ell in range(-3, 4):
            prob = TevelevProblem(g, ell, ())
            assert tev_recursive(prob).value == tev_closed(prob).value


def test_agreement_with_closed_form():
    for g in range(0, 7):
        for ell in range(-3, 5):
            for sizes in [(), (1,), (2,), (3,), (4,), (2, 2), (3, 2),
                          (4, 1), (3, 3, 2), (2, 2, 2)]:
                prob = TevelevProblem(g, ell, tuple((s,) for s in sizes))
                assert tev_recursive(prob).value == tev_closed(prob).value, \
                    (g, ell, sizes)


def test_recursion_on_smallest_size_agrees():
    for g in range(0, 6):
        for ell in range(-2, 4):
            for sizes in [(2,), (3, 2), (4, 2, 1), (2, 2, 2)]:
                prob = TevelevProblem(g, ell, tuple((s,) for s in sizes))
                a = tev_recursive(prob).value
                b = tev_recursive(prob, recurse_on_smallest=True).value
                assert a == b == tev_closed(prob).value


def test_memo_soundness():
    rng = random.Random(13)
    for _ in range(30):
        g = rng.randint(0, 6)
        ell = rng.randint(-3, 4)
        sizes = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 3)))
        prob = TevelevProblem(g, ell, tuple((s,) for s in sizes))
        v1 = tev_recursive(prob).value
        _tev.cache_clear()
        assert tev_recursive(prob).value == v1


def test_termination_depth():
    # g strictly decreases: a deep case finishes and matches the closed form
    prob = TevelevProblem(12, 1, ((1, 1),))
    assert tev_recursive(prob).value == tev_closed(prob).value
