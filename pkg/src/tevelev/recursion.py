"""Genus recursion engine.

After expanding every profile to all-ones, the count satisfies

    T(g, ell, r_1..r_k) = T(g-1, ell, r_1..r_{k-1}, r_k - 1)
                        + T(g-1, ell+1, r_1..r_{k-1}, r_k + 1)

with the genus-0 base case T(0, ell, r_1..r_k) = 1 on valid inputs.  A size
reaching 0 is dropped from the list; when k = 0 a unit size is inserted
before recursing (appending a size-1 group never changes the count).
Branches with invalid parameters contribute 0 without recursing further.
"""

from functools import lru_cache

from .params import TevelevProblem, derive_params, expand_to_unit_profiles
from .closed_form import TevValue


def _key(problem: TevelevProblem):
    sizes = tuple(sorted((sum(p) for p in problem.profiles), reverse=True))
    return problem.g, problem.ell, sizes


@lru_cache(maxsize=None)
def _tev(g, ell, sizes, recurse_on_smallest=False):
    problem = TevelevProblem(g, ell, tuple((1,) * s for s in sizes))
    if not derive_params(problem).valid:
        return 0
    if g == 0:
        return 1
    if not sizes:
        sizes = (1,)
    if recurse_on_smallest:
        rest, r = sizes[:-1], sizes[-1]
    else:
        r, rest = sizes[0], sizes[1:]
    down = tuple(sorted(rest + ((r - 1,) if r > 1 else ()), reverse=True))
    up = tuple(sorted(rest + (r + 1,), reverse=True))
    return (_tev(g - 1, ell, down, recurse_on_smallest)
            + _tev(g - 1, ell + 1, up, recurse_on_smallest))


def tev_recursive(problem: TevelevProblem, recurse_on_smallest=False) -> TevValue:
    """Count by the genus recursion, memoized over canonical sorted keys.

    recurse_on_smallest picks the smallest instead of the largest group for
    the recursion step; the result must not depend on the choice (asserted
    in the test suite).
    """
    g, ell, sizes = _key(expand_to_unit_profiles(problem))
    return TevValue(_tev(g, ell, sizes, recurse_on_smallest),
                    "recursion", problem)
