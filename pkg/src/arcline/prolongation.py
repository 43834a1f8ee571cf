"""Jet substitution: replace each coordinate by a truncated arc.

Substituting ``x_j -> sum_i x(j,i) * t^i`` into a polynomial f and collecting
powers of the formal parameter t produces a sequence of polynomials in the
doubly indexed variables. The coefficient of ``t^i`` is weight-homogeneous of
weight i, and when f is homogeneous of degree d it is also homogeneous of
total degree d. :func:`arc_ideal` truncates the sequence at order m (the
equations cutting out m-jets on the hypersurface f = 0); for homogeneous f,
:func:`full_expansion` keeps every coefficient, of which there are exactly
``d*m + 1`` before they vanish identically.

An order-1 arc is a point p with a direction v; its coefficient sequence
evaluated at (p, v) detects the contact order of the line ``t -> p + t*v``
with the hypersurface, with infinite contact meaning containment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .polycore import SparsePoly

Series = list[SparsePoly]


@dataclass(frozen=True)
class ProlongedSystem:
    """Coefficient list of a jet substitution.

    degree: total degree of the source polynomial.
    order: truncation order m of the substituted arcs.
    coefficients: entry i is the coefficient of t^i, weight-homogeneous of
        weight i.
    """

    degree: int
    order: int
    coefficients: tuple[SparsePoly, ...]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> SparsePoly:
        return self.coefficients[i]


@dataclass(frozen=True)
class Arc:
    """A truncated arc in affine coordinates over projective n-space.

    coords[j][i] is the weight-i coefficient of coordinate j; row 0 (the
    base point) must not be identically zero.
    """

    n: int
    m: int
    coords: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise DomainError("arc needs n >= 1 and m >= 0", n=self.n, m=self.m)
        if len(self.coords) != self.n + 1:
            raise DomainError("arc needs one coordinate row per ambient coordinate",
                              expected_rows=self.n + 1, got=len(self.coords))
        for row in self.coords:
            if len(row) != self.m + 1:
                raise DomainError("each coordinate row needs m+1 entries",
                                  expected_entries=self.m + 1, got=len(row))
        if all(row[0] == 0 for row in self.coords):
            raise DomainError("arc base point must be a point of projective space "
                              "(weight-0 entries not all zero)")

    def assignment(self) -> dict[tuple[int, int], int]:
        return {(j, i): self.coords[j][i]
                for j in range(self.n + 1) for i in range(self.m + 1)}


@dataclass(frozen=True)
class ParamLine:
    """The line t -> base + t*direction attached to an order-1 arc."""

    base: tuple[int, ...]
    direction: tuple[int, ...]
    degenerate: bool


def _series_mul(a: Series, b: Series, cutoff: int | None) -> Series:
    top = len(a) + len(b) - 1
    if cutoff is not None:
        top = min(top, cutoff + 1)
    out: Series = [SparsePoly.zero() for _ in range(top)]
    for ia, pa in enumerate(a):
        if ia >= top or pa.is_zero():
            continue
        for ib, pb in enumerate(b):
            k = ia + ib
            if k >= top:
                break
            if pb.is_zero():
                continue
            out[k] = out[k] + pa * pb
    return out


def _substitute(f: SparsePoly, m: int, cutoff: int | None,
                length: int) -> tuple[SparsePoly, ...]:
    # Cauchy products of the per-coordinate series x(j,0) + x(j,1) t + ...
    base: dict[int, Series] = {}
    powers: dict[tuple[int, int], Series] = {}

    def power(j: int, e: int) -> Series:
        if j not in base:
            base[j] = [SparsePoly.variable(j, i) for i in range(m + 1)]
        if e == 1:
            return base[j]
        key = (j, e)
        if key not in powers:
            powers[key] = _series_mul(power(j, e - 1), base[j], cutoff)
        return powers[key]

    acc: Series = [SparsePoly.zero() for _ in range(length)]
    for mono, c in f.terms.items():
        series: Series = [SparsePoly.const(c)]
        for (j, i), e in mono:
            if i != 0:
                raise DomainError("substitution source must use only weight-0 "
                                  "variables", variable=f"x{j}_{i}")
            series = _series_mul(series, power(j, e), cutoff)
        for k, p in enumerate(series):
            if k < length:
                acc[k] = acc[k] + p
    return tuple(acc)


def arc_ideal(f: SparsePoly, m: int) -> ProlongedSystem:
    """Equations on m-jets: the t^0..t^m coefficients of the substitution.

    f may be any integer polynomial in weight-0 variables; the result always
    has exactly m+1 entries.
    """
    if m < 0:
        raise DomainError("truncation order must be non-negative", order=m)
    coeffs = _substitute(f, m, cutoff=m, length=m + 1)
    return ProlongedSystem(degree=f.total_degree(), order=m, coefficients=coeffs)


def full_expansion(f: SparsePoly, m: int) -> ProlongedSystem:
    """All t-coefficients of the substitution of a homogeneous f.

    Requires f homogeneous (of some degree d); the list has d*m + 1 entries
    and every higher coefficient would be identically zero.
    """
    if m < 0:
        raise DomainError("truncation order must be non-negative", order=m)
    d = f.homogeneous_degree()
    if d is None:
        raise DomainError("full expansion needs a homogeneous polynomial",
                          polynomial=str(f))
    coeffs = _substitute(f, m, cutoff=None, length=d * m + 1)
    return ProlongedSystem(degree=d, order=m, coefficients=coeffs)


def line_through(arc: Arc) -> ParamLine:
    """The line attached to the order-1 truncation of an arc.

    Degenerate when the direction row is proportional to the base row (all
    2x2 minors vanish), including a zero direction; then the arc stays inside
    a single point of projective space to first order.
    """
    if arc.m < 1:
        raise DomainError("a line needs an arc of order at least 1", order=arc.m)
    p = tuple(row[0] for row in arc.coords)
    v = tuple(row[1] for row in arc.coords)
    degenerate = all(p[a] * v[b] - p[b] * v[a] == 0
                     for a in range(len(p)) for b in range(a + 1, len(p)))
    return ParamLine(base=p, direction=v, degenerate=degenerate)


def line_contact_order(f: SparsePoly, arc: Arc) -> int | float:
    """Order of vanishing of f along the line of an order-1 arc.

    Returns the least i with the t^i coefficient nonzero at (base, direction),
    or math.inf when they all vanish (the line lies inside f = 0). Requires
    homogeneous f, so the answer only depends on the line, not its scaling.
    """
    line = line_through(arc)
    system = full_expansion(f, 1)
    assignment: dict[tuple[int, int], int] = {}
    for j in range(arc.n + 1):
        assignment[(j, 0)] = line.base[j]
        assignment[(j, 1)] = line.direction[j]
    for i, g in enumerate(system.coefficients):
        if g.evaluate(assignment) != 0:
            return i
    return math.inf
