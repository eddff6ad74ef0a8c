import pytest

from tevelev.params import TevelevProblem, derive_params
from tevelev.closed_form import tev_closed
from tevelev.schubert_engine import (_eval_term, _ie_terms,
                                     tev_farkas_lian_single, tev_m_genus0,
                                     tev_schubert)


def S(g, ell, *profiles):
    return tev_schubert(TevelevProblem(g, ell, tuple(profiles))).value


def test_examples():
    assert S(2, 0, (2,)) == 3
    assert S(0, 1, (2,)) == 1
    assert S(1, 0) == 2


def test_hand_expanded_terms():
    # (g=2, ell=0, sizes=(2,)): the empty-subset term is 4, the full term -1
    terms = _ie_terms(2, 0, [2])
    by_subset = {t.J: _eval_term(t) for t in terms}
    assert by_subset[()] == 4
    assert by_subset[(0,)] == -1


def test_invalid_is_zero():
    assert S(1, -1, (1, 1, 1)) == 0
    assert S(0, -1) == 0


def test_unit_groups_dropped():
    assert S(3, 1, (1,), (2,)) == S(3, 1, (2,))
    assert S(2, 2, (1,), (1,), (1,)) == S(2, 2)


def test_agreement_with_closed_form():
    for g in range(0, 6):
        for ell in range(-3, 4):
            for sizes in [(), (2,), (3,), (4,), (2, 2), (3, 2), (4, 4),
                          (2, 2, 2), (1, 3)]:
                prob = TevelevProblem(g, ell, tuple((s,) for s in sizes))
                assert tev_schubert(prob).value == tev_closed(prob).value, \
                    (g, ell, sizes)


def test_dimension_audit():
    # factor degree + diagonal degree must fill dim Gr(2,N) exactly, else
    # the term integrates to zero
    for g in range(0, 5):
        for ell in range(-2, 4):
            for sizes in [(2,), (3, 2), (2, 2, 2)]:
                for t in _ie_terms(g, ell, list(sizes)):
                    total = sum(t.factor_degrees) + t.diag_degree
                    if t.context_N >= 2 and total != 2 * (t.context_N - 2):
                        assert _eval_term(t) == 0


def test_term_level_recursion():
    # each inclusion-exclusion summand separately satisfies the genus
    # recursion: modify the last size by -1 at the same ell and by +1 at
    # ell+1, keeping the subset fixed
    for g in range(1, 5):
        for ell in range(-2, 4):
            for sizes in [(2,), (3,), (3, 2), (4, 3), (2, 2, 2)]:
                prob = TevelevProblem(g, ell, tuple((s,) for s in sizes))
                if not derive_params(prob).valid:
                    continue
                base = {t.J: _eval_term(t) for t in _ie_terms(g, ell,
                                                              list(sizes))}
                down = list(sizes[:-1]) + [sizes[-1] - 1]
                up = list(sizes[:-1]) + [sizes[-1] + 1]
                d_terms = {t.J: _eval_term(t)
                           for t in _ie_terms(g - 1, ell, down)}
                u_terms = {t.J: _eval_term(t)
                           for t in _ie_terms(g - 1, ell + 1, up)}
                for J in base:
                    assert base[J] == d_terms[J] + u_terms[J], \
                        (g, ell, sizes, J)


def test_farkas_lian_examples():
    assert tev_farkas_lian_single(2, 0, 2).value == 3
    assert tev_farkas_lian_single(1, 0, 1).value == 2
    assert tev_farkas_lian_single(0, 0, 1).value == 1
    with pytest.raises(ValueError):
        tev_farkas_lian_single(1, 0, 0)


def test_farkas_lian_matches_closed():
    for g in range(0, 9):
        for ell in range(-4, 5):
            for r in range(1, 6):
                prob = TevelevProblem(g, ell, ((1,) * r,))
                assert tev_farkas_lian_single(g, ell, r).value \
                    == tev_closed(prob).value, (g, ell, r)


def test_tev_m_base_and_vanishing():
    # m = 0 always reproduces the plain degree (= 1 in genus 0), and for
    # m >= d every diagonal term is out of range, so the sum is 0
    for ell in range(0, 5):
        d = 1 + ell
        for sizes in [(), (1,), (2,), (2, 2), (3, 1), (4, 2, 1)]:
            prob = TevelevProblem(0, ell, tuple((1,) * r for r in sizes))
            if not derive_params(prob).valid:
                continue
            assert tev_m_genus0(0, ell, sizes).value == 1, (ell, sizes)
            for m in range(d, d + 3):
                assert tev_m_genus0(m, ell, sizes).value == 0, (m, ell, sizes)


def test_tev_m_plateau_single_group():
    # with at most one incidence group the restricted sum stays at 1 on
    # the whole range 0 <= m <= d-1
    for ell in range(0, 5):
        d = 1 + ell
        for sizes in [(), (1,), (2,), (3,), (4,)]:
            prob = TevelevProblem(0, ell, tuple((1,) * r for r in sizes))
            if not derive_params(prob).valid:
                continue
            for m in range(0, d):
                assert tev_m_genus0(m, ell, sizes).value == 1, \
                    (m, ell, sizes)


def test_tev_m_empty_diagonal_corners():
    # with several groups the truncation can empty every diagonal factor:
    # for ell=1, sizes=(2,2) the only surviving subset term has diagonal
    # degree 0, which the cut i >= 1 removes entirely, so the value is 0
    # rather than 1; similar corners can overshoot instead
    assert tev_m_genus0(1, 1, (2, 2)).value == 0
    assert tev_m_genus0(1, 2, (2, 2, 2)).value == 2
    assert tev_m_genus0(2, 2, (3, 3)).value == 0


def test_tev_m_rejects_invalid():
    with pytest.raises(ValueError):
        tev_m_genus0(0, -1, [])
    with pytest.raises(ValueError):
        tev_m_genus0(0, 0, [5])  # size exceeds d = 1
