"""Exact intersection theory on Gr(2, N).

Classes are sparse integer combinations of two-row partitions (a, b) with
a >= b >= 0; (a, b) with a > N - 2 is identically zero and never stored.
Products are computed by the two-row Pieri rule

    sigma_k . sigma_{a,b} = sum of sigma_{e,f} over e + f = a + b + k,
                            e >= a >= f >= b, e <= N - 2

together with the shift sigma_{1,1} . sigma_{c,d} = sigma_{c+1,d+1}
(truncated).  Integration extracts the coefficient of the point class
sigma_{N-2,N-2}.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SchubertClass:
    context_N: int
    terms: dict = field(default_factory=dict)  # (a, b) -> nonzero int

    def __post_init__(self):
        if self.context_N < 2:
            raise ValueError("context requires N >= 2")

    def is_zero(self):
        return not self.terms

    def degree_terms(self):
        return {ab: c for ab, c in self.terms.items()}

    def __mul__(self, other):
        return multiply(self, other)

    def __add__(self, other):
        if self.context_N != other.context_N:
            raise ValueError("mismatched Grassmannian contexts")
        terms = dict(self.terms)
        for ab, c in other.terms.items():
            c2 = terms.get(ab, 0) + c
            if c2:
                terms[ab] = c2
            else:
                terms.pop(ab, None)
        return SchubertClass(self.context_N, terms)


def _make(N, raw_terms):
    """Build a class, truncating keys outside the rectangle and dropping
    zero coefficients."""
    terms = {}
    for (a, b), c in raw_terms.items():
        if c == 0 or a > N - 2 or b < 0:
            continue
        assert a >= b >= 0
        terms[(a, b)] = c
    return SchubertClass(N, terms)


def zero(N):
    return SchubertClass(N, {})


def unit(N):
    return SchubertClass(N, {(0, 0): 1})


def sigma(i, N):
    """The single-row class sigma_i in Gr(2, N); zero for i > N - 2 or i < 0."""
    if N < 2:
        raise ValueError("N >= 2 required")
    if i < 0 or i > N - 2:
        return zero(N)
    return SchubertClass(N, {(i, 0): 1})


def pieri(k, c: SchubertClass) -> SchubertClass:
    """Product sigma_k . c by the two-row Pieri rule."""
    if k < 0:
        return zero(c.context_N)
    N = c.context_N
    out = {}
    for (a, b), coeff in c.terms.items():
        total = a + b + k
        for f in range(b, a + 1):
            e = total - f
            if e < a or e > N - 2:
                continue
            out[(e, f)] = out.get((e, f), 0) + coeff
    return _make(N, out)


def shift11(c: SchubertClass, times=1) -> SchubertClass:
    """Multiply by sigma_{1,1}^times: add (times, times) to every key,
    truncating past the rectangle."""
    N = c.context_N
    out = {}
    for (a, b), coeff in c.terms.items():
        if a + times <= N - 2:
            out[(a + times, b + times)] = coeff
    return SchubertClass(N, out)


def multiply(c1: SchubertClass, c2: SchubertClass) -> SchubertClass:
    """Product via the sigma_{1,1} factorization sigma_{a,b} =
    sigma_{1,1}^b . sigma_{a-b}."""
    if c1.context_N != c2.context_N:
        raise ValueError("mismatched Grassmannian contexts")
    N = c1.context_N
    acc = zero(N)
    for (a, b), coeff in c1.terms.items():
        part = shift11(pieri(a - b, c2), b)
        if part.is_zero():
            continue
        scaled = SchubertClass(N, {ab: coeff * c for ab, c in part.terms.items()})
        acc = acc + scaled
    return acc


def multiply_direct(c1: SchubertClass, c2: SchubertClass) -> SchubertClass:
    """Alternate product route: expand term pairs by
    sigma_p . sigma_q = sum_{j=0}^{min(p,q)} sigma_{p+q-j, j}
    and apply the sigma_{1,1} shifts afterwards.  Kept as an independent
    cross-check of multiply()."""
    if c1.context_N != c2.context_N:
        raise ValueError("mismatched Grassmannian contexts")
    N = c1.context_N
    out = {}
    for (a, b), ca in c1.terms.items():
        p = a - b
        for (cc, dd), cb in c2.terms.items():
            q = cc - dd
            shift = b + dd
            for j in range(min(p, q) + 1):
                e, f = p + q - j + shift, j + shift
                if e > N - 2:
                    continue
                out[(e, f)] = out.get((e, f), 0) + ca * cb
    return _make(N, out)


def power(c: SchubertClass, e: int) -> SchubertClass:
    if e < 0:
        raise ValueError("negative exponent")
    acc = unit(c.context_N)
    for _ in range(e):
        acc = multiply(acc, c)
    return acc


def integrate(c: SchubertClass) -> int:
    """Coefficient of the point class sigma_{N-2,N-2}."""
    N = c.context_N
    return c.terms.get((N - 2, N - 2), 0)


def integrate_product(factors, N) -> int:
    """Integrate the product of single-row classes sigma_i, i in factors,
    in Gr(2, N).  The factor list is context-free: the same list can be
    evaluated at N and at N - 1."""
    if N < 2:
        raise ValueError("N >= 2 required")
    acc = unit(N)
    for i in factors:
        acc = pieri(i, acc) if i >= 0 else zero(N)
        if acc.is_zero():
            return 0
    return integrate(acc)


def diagonal_sum(E, N, min_i=0) -> SchubertClass:
    """Sum of sigma_i . sigma_j over ordered pairs with i + j = E and
    i >= min_i."""
    acc = zero(N)
    for i in range(max(min_i, 0), E + 1):
        j = E - i
        acc = acc + multiply(sigma(i, N), sigma(j, N))
    return acc
