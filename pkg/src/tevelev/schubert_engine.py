"""Counting engine via inclusion-exclusion over Schubert integrals.

For reduced profile sizes m_1..m_k (all > 1; size-1 groups are dropped,
which never changes the count) the value is

    sum over J subset of {1..k} of (-1)^{#J} *
        integral over Gr(2, d+1-#J) of
            prod_{h not in J} sigma_{m_h - 1} * prod_{h in J} sigma_{m_h - 2}
            * sigma_1^g * sum_{i+j = E_J} sigma_i sigma_j

with the dimension-forced diagonal exponent
E_J = g + 2*ell - sum_h m_h + k - #J.  Terms with d - #J <= 0 or E_J < 0
are zero.
"""

from dataclasses import dataclass
from itertools import combinations

from .params import TevelevProblem, derive_params
from .closed_form import TevValue
from .schubert import (SchubertClass, diagonal_sum, integrate, multiply,
                       pieri, power, sigma, unit)


@dataclass(frozen=True)
class IEterm:
    J: tuple
    context_N: int
    sign: int
    factor_degrees: tuple
    diag_degree: int


def _ie_terms(g, ell, sizes):
    """Enumerate the inclusion-exclusion terms for reduced sizes (all > 1)."""
    d = g + 1 + ell
    k = len(sizes)
    terms = []
    for nj in range(k + 1):
        for J in combinations(range(k), nj):
            E = g + 2 * ell - sum(sizes) + k - nj
            factors = [sizes[h] - 2 if h in J else sizes[h] - 1
                       for h in range(k)] + [1] * g
            terms.append(IEterm(J=J, context_N=d + 1 - nj, sign=(-1) ** nj,
                                factor_degrees=tuple(factors), diag_degree=E))
    return terms


def _eval_term(term: IEterm, min_i=0):
    if term.context_N < 2 or term.diag_degree < 0:
        return 0
    N = term.context_N
    acc = diagonal_sum(term.diag_degree, N, min_i=min_i)
    for i in term.factor_degrees:
        if i < 0:
            return 0
        acc = pieri(i, acc)
        if acc.is_zero():
            return 0
    return term.sign * integrate(acc)


def tev_schubert(problem: TevelevProblem) -> TevValue:
    """Count by the inclusion-exclusion Schubert formula."""
    if not derive_params(problem).valid:
        return TevValue(0, "schubert", problem)
    sizes = [sum(p) for p in problem.profiles if sum(p) > 1]
    value = sum(_eval_term(t)
                for t in _ie_terms(problem.g, problem.ell, sizes))
    return TevValue(value, "schubert", problem)


def tev_farkas_lian_single(g, ell, r) -> TevValue:
    """Two-integral difference for a single group of r unramified points:

        int_{Gr(2,d+1)} sigma_1^g sigma_{r-1} sum_{i+j=n-2-r} sigma_i sigma_j
      - int_{Gr(2,d)}   sigma_1^g sigma_{r-2} sum_{i+j=n-3-r} sigma_i sigma_j

    with n = g+3+2*ell, d = g+1+ell; the second term vanishes when r = 1.
    Integrals over Gr(2, N) with N < 2 and empty diagonal sums are zero.
    """
    if r < 1:
        raise ValueError("requires r >= 1")
    d = g + 1 + ell
    n = g + 3 + 2 * ell

    def part(N, row, E):
        if N < 2 or E < 0 or row < 0:
            return 0
        acc = diagonal_sum(E, N)
        acc = pieri(row, acc)
        for _ in range(g):
            acc = pieri(1, acc)
        return integrate(acc)

    value = part(d + 1, r - 1, n - 2 - r)
    if r > 1:
        value -= part(d, r - 2, n - 3 - r)
    return TevValue(value, "schubert")


def tev_m_genus0(m, ell, sizes) -> TevValue:
    """Genus-0 inclusion-exclusion sum with the diagonal restricted to
    i >= m.  Equals 1 for 0 <= m <= d - 1 and 0 for m >= d."""
    if m < 0:
        raise ValueError("requires m >= 0")
    if ell < 0:
        raise ValueError("requires ell >= 0")
    problem = TevelevProblem(0, ell, tuple((1,) * r for r in sizes))
    if not derive_params(problem).valid:
        raise ValueError("invalid genus-0 configuration")
    sizes = tuple(sizes)
    value = 0
    for nj in range(len(sizes) + 1):
        for J in combinations(range(len(sizes)), nj):
            E = 2 * ell - sum(sizes) + len(sizes) - nj
            factors = tuple(sizes[h] - 2 if h in J else sizes[h] - 1
                            for h in range(len(sizes)))
            term = IEterm(J=J, context_N=ell + 2 - nj, sign=(-1) ** nj,
                          factor_degrees=factors, diag_degree=E)
            value += _eval_term(term, min_i=m)
    return TevValue(value, "schubert", problem)
