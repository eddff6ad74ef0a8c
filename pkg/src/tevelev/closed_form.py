"""Closed binomial formulas for the counts.

Conventions used throughout: C(g, i) = 0 for i < 0 or i > g, and any sum
whose lower bound exceeds its upper bound is empty.  Invalid problems give 0.
"""

from dataclasses import dataclass
from math import comb

from .params import TevelevProblem, derive_params


@dataclass(frozen=True)
class TevValue:
    value: int
    engine: str  # "closed" | "recursion" | "schubert" | "oracle"
    problem_echo: TevelevProblem = None


def binom(g, i):
    if i < 0 or i > g:
        return 0
    return comb(g, i)


def tev_closed(problem: TevelevProblem) -> TevValue:
    """Master closed formula.

    value = 2^g - 2*sum_{i=0}^{-ell-2} C(g,i)
            + (-ell - k - 2 + mu_tot) * C(g, -ell-1)
            + (ell - k + #{h : |mu_h| = 1}) * C(g, -ell)
            - sum_h sum_{i=-ell+1}^{|mu_h|-ell-2} C(g,i)

    The formula depends only on the multiset {|mu_h|} and on k.
    """
    params = derive_params(problem)
    if not params.valid:
        return TevValue(0, "closed", problem)
    g, ell, k = problem.g, problem.ell, problem.k
    sizes = [sum(p) for p in problem.profiles]
    mu_tot = sum(sizes)
    value = 2 ** g
    value -= 2 * sum(binom(g, i) for i in range(0, -ell - 1))
    value += (-ell - k - 2 + mu_tot) * binom(g, -ell - 1)
    value += (ell - k + sum(1 for s in sizes if s == 1)) * binom(g, -ell)
    for s in sizes:
        value -= sum(binom(g, i) for i in range(-ell + 1, s - ell - 1))
    return TevValue(value, "closed", problem)


def tev_ell_nonneg(problem: TevelevProblem) -> TevValue:
    """Three-case formula valid for ell >= 0 and all-ones profiles.

    Exists purely as a cross-check oracle against tev_closed on its domain.
    """
    if problem.ell < 0:
        raise ValueError("requires ell >= 0")
    if any(any(e != 1 for e in p) for p in problem.profiles):
        raise ValueError("requires all-ones profiles")
    params = derive_params(problem)
    if not params.valid:
        return TevValue(0, "closed", problem)
    g, ell = problem.g, problem.ell
    rs = [len(p) for p in problem.profiles]
    r_max = max(rs, default=0)
    if ell >= r_max:
        value = 2 ** g
    elif ell == 0:
        value = 2 ** g - sum(sum(binom(g, j) for j in range(0, r - 1))
                             for r in rs)
    else:
        # shift to ell = 0, keeping only the profiles with r_h > ell
        sub = TevelevProblem(g, 0, tuple((1,) * (r - ell)
                                         for r in rs if r > ell))
        value = tev_ell_nonneg(sub).value
    return TevValue(value, "closed", problem)


def tev_cps_single(g, ell, r) -> TevValue:
    """Two-case formula for a single incidence group of r unramified points.

    Value is 0 when r > d or n - r + 1 < 3, with d = g + 1 + ell and
    n = g + 3 + 2*ell.
    """
    if r < 1:
        raise ValueError("requires r >= 1")
    d = g + 1 + ell
    n = g + 3 + 2 * ell
    if g < 0 or r > d or n - r + 1 < 3:
        return TevValue(0, "closed")
    value = 2 ** g - 2 * sum(binom(g, i) for i in range(0, -ell - 1))
    if r == 1:
        value += (-ell - 2) * binom(g, -ell - 1) + ell * binom(g, -ell)
    else:
        value += (-ell + r - 3) * binom(g, -ell - 1)
        value += (ell - 1) * binom(g, -ell)
        value -= sum(binom(g, i) for i in range(-ell + 1, r - ell - 1))
    return TevValue(value, "closed")
