"""Problem data and derived numeric parameters.

A counting problem is a genus g, an integer ell, and a list of ramification
profiles mu_h = (e_{h,1}, ..., e_{h,r_h}).  Everything else (degree, marked
point counts, branch count, validity) is derived here; all engines consume
the output of this module.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class TevelevProblem:
    g: int
    ell: int
    profiles: tuple  # tuple of tuples of positive ints

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        profiles = tuple(tuple(p) for p in self.profiles)
        for p in profiles:
            if len(p) == 0:
                raise ValueError("empty profile")
            if any(e < 1 for e in p):
                raise ValueError("profile entries must be positive: %r" % (p,))
        object.__setattr__(self, "profiles", profiles)

    @property
    def k(self):
        return len(self.profiles)


@dataclass(frozen=True)
class DerivedParams:
    d: int
    n: int
    b: int
    r_tot: int
    mu_tot: int
    dim: int
    valid: bool
    violated: tuple  # subset of ("DEG", "SUMR", "TARGET3")


def derive_params(problem: TevelevProblem) -> DerivedParams:
    """Compute d, n, b, dim and the validity verdict for a problem.

    d = g + 1 + ell
    n = g + 3 + 2*ell - mu_tot + r_tot
    b = 2g + 2d - 2 - mu_tot + r_tot   (number of simple branch points)

    Validity requires |mu_h| <= d for every h (DEG), r_tot <= n (SUMR) and
    n - r_tot + k >= 3 (TARGET3).  Invalid problems are representable; every
    engine returns 0 for them.
    """
    g, ell = problem.g, problem.ell
    k = problem.k
    sizes = [sum(p) for p in problem.profiles]
    mu_tot = sum(sizes)
    r_tot = sum(len(p) for p in problem.profiles)
    d = g + 1 + ell
    n = g + 3 + 2 * ell - mu_tot + r_tot
    b = 2 * g + 2 * d - 2 - mu_tot + r_tot
    dim = 4 * g + 2 * ell + (k - 3) - mu_tot + n
    violated = []
    if any(s > d for s in sizes):
        violated.append("DEG")
    if r_tot > n:
        violated.append("SUMR")
    if n - r_tot + k < 3:
        violated.append("TARGET3")
    return DerivedParams(d=d, n=n, b=b, r_tot=r_tot, mu_tot=mu_tot, dim=dim,
                         valid=not violated, violated=tuple(violated))


def reduce_profiles(problem: TevelevProblem) -> TevelevProblem:
    """Replace each profile mu_h by the single-entry profile (|mu_h|).

    The count depends only on the total incidence order over each target
    point, so this transformation preserves it.
    """
    return TevelevProblem(problem.g, problem.ell,
                          tuple((sum(p),) for p in problem.profiles))


def expand_to_unit_profiles(problem: TevelevProblem) -> TevelevProblem:
    """Replace each profile mu_h by |mu_h| copies of 1."""
    return TevelevProblem(problem.g, problem.ell,
                          tuple((1,) * sum(p) for p in problem.profiles))


def canonical(problem: TevelevProblem) -> TevelevProblem:
    """Canonical form: entries sorted within each profile, profiles sorted
    by (|mu_h|, r_h, entries) descending.  The count is symmetric under
    relabeling, so engines may key caches on this form."""
    profiles = [tuple(sorted(p, reverse=True)) for p in problem.profiles]
    profiles.sort(key=lambda p: (sum(p), len(p), p), reverse=True)
    return TevelevProblem(problem.g, problem.ell, tuple(profiles))
