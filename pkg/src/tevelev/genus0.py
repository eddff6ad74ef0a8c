"""Genus-0 certification oracle.

A degree-d cover of the line by the line is a pair of polynomials
(s_0, s_1) of degree <= d up to scaling.  Each incidence condition
"p_i maps to q = [q0 : q1]" is the linear equation

    q1 * s_0(p_i) - q0 * s_1(p_i) = 0

in the 2d + 2 coefficients.  For a general configuration of n = 2d + 1
source points and their targets the system has a one-dimensional kernel,
whose generator is the unique cover; this module builds the system, solves
it with fraction-free Gaussian elimination, and certifies the solution
(coprimality, exact degree, simple branching via a squarefree Wronskian).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .params import TevelevProblem, derive_params


@dataclass(frozen=True)
class PointConfig:
    d: int
    p: tuple           # n distinct affine rationals on the source line
    q: tuple           # target points as (q0, q1) projective pairs
    grouping: tuple    # q-index for each p-index

    def __post_init__(self):
        if len(set(self.p)) != len(self.p):
            raise ValueError("source points must be distinct")
        if len(self.grouping) != len(self.p):
            raise ValueError("grouping must assign every source point")
        for a0, a1 in self.q:
            if a0 == 0 and a1 == 0:
                raise ValueError("(0:0) is not a projective point")
        for i in range(len(self.q)):
            for j in range(i + 1, len(self.q)):
                if self.q[i][0] * self.q[j][1] == self.q[j][0] * self.q[i][1]:
                    raise ValueError("target points must be distinct")


@dataclass(frozen=True)
class CoverCertificate:
    kernel_dim: int
    s0: tuple = None   # coefficient vectors, low degree first; set when
    s1: tuple = None   # kernel_dim == 1, normalized (first nonzero = 1)
    coprime: bool = False
    exact_degree: bool = False
    simple_branching: bool = False

    @property
    def full(self):
        return (self.kernel_dim == 1 and self.coprime
                and self.exact_degree and self.simple_branching)


def make_config(d, sizes, p, q):
    """Assemble a PointConfig for all-ones groups: the last sum(sizes)
    source points are grouped into blocks of the given sizes, each block
    sharing one of the last len(sizes) target points."""
    r_tot = sum(sizes)
    n = len(p)
    free = n - r_tot
    grouping = list(range(free))
    for h, r in enumerate(sizes):
        grouping += [free + h] * r
    return PointConfig(d=d, p=tuple(p), q=tuple(q), grouping=tuple(grouping))


def build_system(config: PointConfig):
    """Rows of the incidence system, one per source point, over exact
    rationals; columns are the d+1 coefficients of s_0 then of s_1."""
    d = config.d
    rows = []
    for i, pi in enumerate(config.p):
        q0, q1 = config.q[config.grouping[i]]
        powers = [Fraction(pi) ** j for j in range(d + 1)]
        rows.append([q1 * m for m in powers] + [-q0 * m for m in powers])
    return rows


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def nullspace(rows):
    """Kernel basis of an integer/rational matrix, computed by fraction-free
    (Bareiss) forward elimination followed by exact back-substitution.
    Returns a list of Fraction vectors."""
    m = _integer_rows(rows)
    if not m:
        return []
    ncols = len(m[0])
    piv_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        for i in range(r + 1, len(m)):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        piv_cols.append(c)
        r += 1
        if r == len(m):
            break
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i in range(len(piv_cols) - 1, -1, -1):
            c = piv_cols[i]
            s = sum((Fraction(m[i][j]) * v[j] for j in range(c + 1, ncols)),
                    Fraction(0))
            v[c] = -s / m[i][c]
        basis.append(v)
    return basis


def _deg(poly):
    for i in range(len(poly) - 1, -1, -1):
        if poly[i] != 0:
            return i
    return -1


def _derivative(poly):
    return [i * poly[i] for i in range(1, len(poly))]


def _poly_mod(a, b):
    a = list(a)
    db = _deg(b)
    while _deg(a) >= db:
        da = _deg(a)
        f = a[da] / b[db]
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        a[da] = 0
    return a


def _poly_gcd_deg(a, b):
    """Degree of gcd(a, b) over the rationals; -1 if both are zero."""
    a, b = list(a), list(b)
    while _deg(b) >= 0:
        a, b = b, _poly_mod(a, b)
    return _deg(a)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def certify(config: PointConfig) -> CoverCertificate:
    """Solve the incidence system exactly and certify the resulting cover."""
    basis = nullspace(build_system(config))
    if len(basis) != 1:
        return CoverCertificate(kernel_dim=len(basis))
    v = basis[0]
    lead = next(x for x in v if x != 0)
    v = [x / lead for x in v]
    d = config.d
    s0, s1 = v[:d + 1], v[d + 1:]
    coprime = _poly_gcd_deg(s0, s1) <= 0
    exact_degree = max(_deg(s0), _deg(s1)) == d
    w = [a - b for a, b in
         zip(_poly_mul(s0, _derivative(s1) + [Fraction(0)]),
             _poly_mul(s1, _derivative(s0) + [Fraction(0)]))]
    if _deg(w) < 0:
        simple = False  # dependent sections; not a degree-d cover
    elif _deg(w) == 0:
        simple = True   # constant Wronskian, no ramification at all
    else:
        simple = _poly_gcd_deg(w, _derivative(w)) <= 0
    return CoverCertificate(kernel_dim=1, s0=tuple(s0), s1=tuple(s1),
                            coprime=coprime, exact_degree=exact_degree,
                            simple_branching=simple)


@dataclass(frozen=True)
class TrialSummary:
    d: int
    sizes: tuple
    trials: int
    seed: int
    full: int
    kernel_dim_one: int


def _draw_config(d, sizes, rng, box):
    n = 2 * d + 1
    r_tot = sum(sizes)
    nq = n - r_tot + len(sizes)
    p = set()
    while len(p) < n:
        p.add(rng.randint(-box, box))
    q = []
    while len(q) < nq:
        cand = (rng.randint(-box, box), rng.randint(-box, box))
        if cand == (0, 0):
            continue
        if any(cand[0] * b - a * cand[1] == 0 for a, b in q):
            continue
        q.append(cand)
    return make_config(d, sizes, sorted(p), q)


def run_trials(d, sizes, trials, seed, box=10 ** 6) -> TrialSummary:
    """Certify `trials` pseudo-random configurations.  Deterministic given
    seed; per-trial generators are derived by counter so trials are
    order-independent."""
    sizes = tuple(sizes)
    problem = TevelevProblem(0, d - 1, tuple((1,) * r for r in sizes))
    if not derive_params(problem).valid:
        raise ValueError("invalid (d, sizes) configuration")
    full = kernel_one = 0
    for t in range(trials):
        rng = random.Random(seed * 1_000_003 + t)
        cert = certify(_draw_config(d, sizes, rng, box))
        if cert.kernel_dim == 1:
            kernel_one += 1
        if cert.full:
            full += 1
    return TrialSummary(d=d, sizes=sizes, trials=trials, seed=seed,
                        full=full, kernel_dim_one=kernel_one)
