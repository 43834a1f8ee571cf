"""Independent line counts through Schubert calculus on the Grassmannian.

Lines in projective n-space are points of the Grassmannian G(2, n+1), of
dimension 2(n-1). Classes are integer combinations of Schubert symbols
s[a,b] with n-1 >= a >= b >= 0; multiplication by the two special classes
s[1,0] and s[1,1] follows the Pieri rule, and an integral reads off the
coefficient of the top class s[n-1,n-1].

The lines on a complete intersection are counted by the top Chern class of
a direct sum of symmetric powers of the dual tautological bundle. With
Chern roots y1, y2 of that dual bundle, the class is the product of
i*y1 + (d_j - i)*y2 over j and i = 0..d_j; it is symmetric in y1, y2, so it
rewrites in the elementary symmetric polynomials e1 -> s[1,0], e2 -> s[1,1]
and lands in the Schubert basis by Pieri alone. None of this shares any code
with the arc-space computation, which is the point: the two routes must
agree and are checked against each other, not against themselves.
"""

from __future__ import annotations

from math import comb

from .errors import DomainError
from .line_locus import CIType

SIGMA1 = "sigma1"
SIGMA11 = "sigma11"

SchubertCoeffs = dict[tuple[int, int], int]


class SchubertClass:
    """Integer combination of Schubert symbols on G(2, n+1)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: SchubertCoeffs):
        if n < 2:
            raise DomainError("lines need ambient dimension at least 2", n=n)
        for (a, b), c in coeffs.items():
            if not (n - 1 >= a >= b >= 0):
                raise DomainError("Schubert symbol out of range",
                                  symbol=(a, b), n=n)
        self.n = n
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b) in sorted(self.coeffs):
            c = self.coeffs[(a, b)]
            body = f"s[{a},{b}]"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SchubertClass(n={self.n}, {self})"


def sigma(n: int, a: int, b: int, c: int = 1) -> SchubertClass:
    return SchubertClass(n, {(a, b): c})


def pieri_mul(c: SchubertClass, gen: str) -> SchubertClass:
    """Multiply by s[1,0] or s[1,1]; symbols pushed past a = n-1 vanish."""
    if gen not in (SIGMA1, SIGMA11):
        raise DomainError("Pieri multiplication only handles the two special "
                          "classes", generator=gen)
    top = c.n - 1
    out: SchubertCoeffs = {}

    def bump(a: int, b: int, v: int):
        if top >= a >= b >= 0:
            s = out.get((a, b), 0) + v
            if s:
                out[(a, b)] = s
            else:
                del out[(a, b)]

    for (a, b), v in c.coeffs.items():
        if gen == SIGMA1:
            bump(a + 1, b, v)
            bump(a, b + 1, v)
        else:
            bump(a + 1, b + 1, v)
    return SchubertClass(c.n, out)


def integral(c: SchubertClass) -> int:
    """Coefficient of the point class s[n-1,n-1]."""
    return c.coeffs.get((c.n - 1, c.n - 1), 0)


def symmetric_expand(factors: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Rewrite prod(p*y1 + q*y2) as a polynomial in e1 = y1+y2, e2 = y1*y2.

    Returns {(i, j): c} meaning sum of c * e1^i * e2^j. The product must be
    symmetric under swapping y1 and y2; an asymmetric input is a hard error,
    never a silent truncation.
    """
    form = [1]
    for p, q in factors:
        nxt = [0] * (len(form) + 1)
        for k, v in enumerate(form):
            nxt[k] += p * v
            nxt[k + 1] += q * v
        form = nxt

    out: dict[tuple[int, int], int] = {}
    e2_power = 0
    while form:
        deg = len(form) - 1
        if all(v == 0 for v in form):
            break
        if form != form[::-1]:
            raise DomainError("binary form is not symmetric in the two Chern "
                              "roots", form=form)
        if deg == 0:
            out[(0, e2_power)] = out.get((0, e2_power), 0) + form[0]
            break
        lead = form[0]
        if lead:
            out[(deg, e2_power)] = out.get((deg, e2_power), 0) + lead
            form = [v - lead * comb(deg, k) for k, v in enumerate(form)]
        # both ends are now zero, so the rest is divisible by e2 = y1*y2
        if form[0] != 0 or form[-1] != 0:
            raise DomainError("symmetric reduction left a remainder",
                              form=form)
        form = form[1:-1]
        e2_power += 1
    return {k: v for k, v in out.items() if v}


def _chern_factors(t: CIType) -> list[tuple[int, int]]:
    return [(i, d - i) for d in t.degrees for i in range(d + 1)]


def _integrate_e_poly(n: int, epoly: dict[tuple[int, int], int],
                      extra_sigma1: int = 0) -> int:
    total = 0
    for (i, j), coeff in epoly.items():
        cls = sigma(n, 0, 0)
        for _ in range(i + extra_sigma1):
            cls = pieri_mul(cls, SIGMA1)
        for _ in range(j):
            cls = pieri_mul(cls, SIGMA11)
        total += coeff * integral(cls)
    return total


def oracle_count_lines(t: CIType) -> int:
    """Line count for type t, entirely inside the Grassmannian.

    The top Chern class has degree sum(d_j + 1); it integrates to a number
    exactly when that equals dim G(2, n+1) = 2(n-1).
    """
    degree = sum(d + 1 for d in t.degrees)
    if degree != 2 * (t.n - 1):
        raise DomainError("Chern class degree does not match the Grassmannian "
                          "dimension", class_degree=degree,
                          grassmannian_dim=2 * (t.n - 1), type=t.label())
    return _integrate_e_poly(t.n, symmetric_expand(_chern_factors(t)))


def expected_family_dim(t: CIType) -> int:
    """Expected dimension of the family of lines on a generic member."""
    return 2 * (t.n - 1) - t.r - sum(t.degrees)


def fano_degree(t: CIType) -> int:
    """Degree of the family of lines in the Pluecker embedding.

    Integrates the top Chern class against s[1,0]^k with k the expected
    family dimension; k < 0 is rejected (the family is generically empty).
    """
    k = expected_family_dim(t)
    if k < 0:
        raise DomainError("expected dimension of the family of lines is "
                          "negative", expected_dim=k, type=t.label())
    return _integrate_e_poly(t.n, symmetric_expand(_chern_factors(t)),
                             extra_sigma1=k)
