"""Intersection ring of the space of pointed lines over projective n-space.

The ring is Z[h0, h1] / (h0^(n+1), h0^n + h0^(n-1) h1 + ... + h1^n), where h0
is the hyperplane class pulled back from the base point and h1 the hyperplane
class of the line factor. Normal forms are integer combinations of the basis
monomials h0^a h1^b with 0 <= a <= n and 0 <= b <= n-1; the class of a point
is h0^n h1^(n-1), the unique top-degree basis monomial.

A second presentation uses generators j0 = h0 and j1 = h1 - h0, with
relations j0^(n+1) and sum_i binom(n+1, i) j0^i j1^(n-i). Both presentations
reduce through the same rewriting engine, and changing presentation is exact
in both directions.

All coefficients are arbitrary-precision integers; no arithmetic here is ever
approximate.
"""

from __future__ import annotations

from math import comb

from .errors import DomainError, InexactDivisionError

Coeffs = dict[tuple[int, int], int]


def _reduce(raw, n: int, rel: list[int]) -> Coeffs:
    """Rewrite v1^n -> -(rel[1] v0 v1^(n-1) + ... + rel[n] v0^n) and drop
    v0-exponents above n. Each step strictly lowers the v1-exponent, so this
    terminates; relations are homogeneous, so degrees never mix."""
    out: Coeffs = {}
    stack = list(raw.items() if isinstance(raw, dict) else raw)
    while stack:
        (a, b), c = stack.pop()
        if c == 0 or a > n:
            continue
        if b < n:
            s = out.get((a, b), 0) + c
            if s:
                out[(a, b)] = s
            else:
                del out[(a, b)]
            continue
        for i in range(1, n + 1):
            stack.append(((a + i, b - i), -c * rel[i]))
    return out


def _h_rel(n: int) -> list[int]:
    return [1] * (n + 1)


def _j_rel(n: int) -> list[int]:
    return [comb(n + 1, i) for i in range(n + 1)]


class ChowClass:
    """A ring element in normal form, tagged with its ambient dimension n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Coeffs):
        if n < 1:
            raise DomainError("ambient dimension must be at least 1", n=n)
        self.n = n
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    @classmethod
    def one(cls, n: int) -> ChowClass:
        return cls(n, {(0, 0): 1})

    @classmethod
    def monomial(cls, n: int, a: int, b: int, c: int = 1) -> ChowClass:
        return normal_form({(a, b): c}, n)

    def _check(self, other: ChowClass):
        if self.n != other.n:
            raise DomainError("classes live over different ambient dimensions",
                              left=self.n, right=other.n)

    def __add__(self, other: ChowClass) -> ChowClass:
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                del out[k]
        return ChowClass(self.n, out)

    def __sub__(self, other: ChowClass) -> ChowClass:
        return self + (-1) * other

    def __mul__(self, other: ChowClass | int) -> ChowClass:
        if isinstance(other, int):
            return ChowClass(self.n, {k: other * v for k, v in self.coeffs.items()})
        self._check(other)
        raw: Coeffs = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                k = (a1 + a2, b1 + b2)
                raw[k] = raw.get(k, 0) + c1 * c2
        return ChowClass(self.n, _reduce(raw, self.n, _h_rel(self.n)))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {a + b for a, b in self.coeffs}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b) in sorted(self.coeffs):
            c = self.coeffs[(a, b)]
            body = "*".join([f"h0^{a}" if a > 1 else "h0"] * (a > 0) +
                            [f"h1^{b}" if b > 1 else "h1"] * (b > 0))
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ChowClass(n={self.n}, {self})"


def normal_form(raw: Coeffs, n: int) -> ChowClass:
    """Reduce an arbitrary integer combination of h0^a h1^b monomials."""
    return ChowClass(n, _reduce(raw, n, _h_rel(n)))


def linear_product(factors: list[tuple[int, int]], n: int) -> ChowClass:
    """Product of linear forms p*h0 + q*h1, reduced after every step.

    This is the workhorse for locus classes: all intermediate results stay in
    normal form, so coefficient growth is bounded by the answer itself.
    """
    if not factors:
        raise DomainError("empty factor list has no well-defined product here")
    acc = ChowClass.one(n)
    for p, q in factors:
        raw: Coeffs = {}
        for (a, b), c in acc.coeffs.items():
            if p:
                raw[(a + 1, b)] = raw.get((a + 1, b), 0) + p * c
            if q:
                raw[(a, b + 1)] = raw.get((a, b + 1), 0) + q * c
        acc = ChowClass(n, _reduce(raw, n, _h_rel(n)))
    return acc


def coefficient(c: ChowClass, a: int, b: int) -> int:
    return c.coeffs.get((a, b), 0)


def point_class(n: int) -> ChowClass:
    """The class of a point: h0^n h1^(n-1)."""
    return ChowClass(n, {(n, n - 1): 1})


def divide_exact(c: ChowClass, k: int) -> ChowClass:
    """Checked division by a nonzero integer; raises unless every
    coefficient is divisible."""
    if k == 0:
        raise DomainError("division by zero")
    out: Coeffs = {}
    for key, v in c.coeffs.items():
        q, r = divmod(v, k)
        if r:
            raise InexactDivisionError("class is not divisible by the requested "
                                       "integer", divisor=k, monomial=key,
                                       coefficient=v)
        out[key] = q
    return ChowClass(c.n, out)


# Change of presentation. j-coordinates are plain dicts (j0-exp, j1-exp) -> int,
# reduced against j0^(n+1) and sum_i binom(n+1, i) j0^i j1^(n-i).

def j_normal_form(raw: Coeffs, n: int) -> Coeffs:
    return _reduce(raw, n, _j_rel(n))


def j_mul(a: Coeffs, b: Coeffs, n: int) -> Coeffs:
    raw: Coeffs = {}
    for (a1, b1), c1 in a.items():
        for (a2, b2), c2 in b.items():
            k = (a1 + a2, b1 + b2)
            raw[k] = raw.get(k, 0) + c1 * c2
    return _reduce(raw, n, _j_rel(n))


def to_j_basis(c: ChowClass) -> Coeffs:
    """Coordinates of c in the j-presentation: substitute h0 = j0,
    h1 = j0 + j1, expand, and reduce."""
    raw: Coeffs = {}
    for (a, b), v in c.coeffs.items():
        for k in range(b + 1):
            key = (a + b - k, k)
            raw[key] = raw.get(key, 0) + v * comb(b, k)
    return _reduce(raw, c.n, _j_rel(c.n))


def from_j_basis(jcoeffs: Coeffs, n: int) -> ChowClass:
    """Inverse substitution j0 = h0, j1 = h1 - h0, then h-reduction.

    Accepts any formal j-combination, reduced or not; to_j_basis and
    from_j_basis are mutually inverse on normal forms.
    """
    raw: Coeffs = {}
    for (a, b), v in jcoeffs.items():
        for k in range(b + 1):
            key = (a + b - k, k)
            raw[key] = raw.get(key, 0) + v * comb(b, k) * (-1) ** (b - k)
    return ChowClass(n, _reduce(raw, n, _h_rel(n)))
