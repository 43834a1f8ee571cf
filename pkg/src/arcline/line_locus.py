"""Classes and counts of lines on generic complete intersections.

For a generic complete intersection of hypersurface degrees d_1..d_r in
projective n-space, the locus of pointed lines inside it has class

    product over j of  product for i = 0..d_j of  ((d_j - i) h0 + i h1),

one linear factor per jet coefficient of each defining equation. When the
degrees satisfy sum d_j = 2(n-1) - r the family of lines is finite and the
class collapses to a multiple of h0^(n-1) h1^(n-1); that multiple is the
line count. Fixing the base point instead (sum d_j = n - 1) costs a further
h0^(n-r) and an exact division by prod d_j, and yields the number of lines
through a general point of the variety.

Every count is returned together with its certificate class; a count is
never reported unless the certificate is exactly an integer multiple of the
expected basis monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from . import chow_ring
from .chow_ring import ChowClass
from .errors import DomainError, NonPureClassError


@dataclass(frozen=True)
class CIType:
    """A complete-intersection type: ambient dimension and degree multiset.

    Degrees are stored sorted non-increasing; the codimension r is the number
    of degrees and must leave positive dimension, r <= n - 1.
    """

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees",
                           tuple(sorted(self.degrees, reverse=True)))
        if self.n < 2:
            raise DomainError("ambient dimension must be at least 2", n=self.n)
        if not self.degrees:
            raise DomainError("a complete intersection needs at least one degree")
        if any(d < 1 for d in self.degrees):
            raise DomainError("degrees must be positive", degrees=self.degrees)
        if len(self.degrees) > self.n - 1:
            raise DomainError("codimension must leave positive dimension",
                              n=self.n, codimension=len(self.degrees))

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.n - self.r

    def label(self) -> str:
        return f"({','.join(str(d) for d in self.degrees)}) in P^{self.n}"


@dataclass(frozen=True)
class LineCount:
    """An exact count with the Chow-side certificate class behind it."""

    value: int
    certificate: ChowClass = field(compare=False)


def line_locus_class(t: CIType) -> ChowClass:
    """Class of the locus of pointed lines on a generic member of type t."""
    factors = [(d - i, i) for d in t.degrees for i in range(d + 1)]
    return chow_ring.linear_product(factors, t.n)


def _require_counting_degrees(t: CIType):
    if any(d < 2 for d in t.degrees):
        raise DomainError("line counts need every degree at least 2; degree-1 "
                          "factors just cut the ambient space down",
                          degrees=t.degrees)


def _pure_multiple(c: ChowClass, a: int, b: int) -> int:
    extra = [k for k in c.coeffs if k != (a, b)]
    if extra or not c.coeffs:
        raise NonPureClassError(
            "class is not a nonzero multiple of the expected basis monomial",
            expected_monomial=(a, b), got=str(c))
    return c.coeffs[(a, b)]


def count_lines(t: CIType) -> LineCount:
    """Number of lines on a generic complete intersection of type t.

    Finiteness of the family needs sum(d_j) = 2(n-1) - r; any other total is
    rejected with the direction of the failure spelled out.
    """
    _require_counting_degrees(t)
    expected = 2 * (t.n - 1) - t.r
    actual = sum(t.degrees)
    if actual != expected:
        side = ("family of lines has positive expected dimension"
                if actual < expected else
                "family of lines is generically empty")
        raise DomainError(f"degrees do not cut a finite family of lines: {side}",
                          expected_sum=expected, actual_sum=actual,
                          type=t.label())
    locus = line_locus_class(t)
    value = _pure_multiple(locus, t.n - 1, t.n - 1)
    return LineCount(value=value, certificate=locus)


def contact_class(n: int, d: int, k: int) -> ChowClass:
    """Class of pointed lines meeting a generic degree-d hypersurface in
    projective n-space with contact order at least k at the marked point.

    One factor (d - i) h0 + i h1 per jet coefficient i = 0..k-1; k ranges
    from 1 (just incidence) to d + 1 (containment).
    """
    if n < 2:
        raise DomainError("ambient dimension must be at least 2", n=n)
    if d < 1:
        raise DomainError("hypersurface degree must be positive", degree=d)
    if not 1 <= k <= d + 1:
        raise DomainError("contact order must lie between 1 and degree + 1",
                          degree=d, contact_order=k)
    factors = [(d - i, i) for i in range(k)]
    return chow_ring.linear_product(factors, n)


def swept_degree(c: ChowClass, fiber_codim: int) -> int:
    """Degree of the locus swept in the base by a family of pointed lines.

    Multiplies by h0^fiber_codim (the number of base parameters the sweep
    loses) and demands the result be a nonzero integer multiple of the point
    class h0^n h1^(n-1); that integer is the degree. Anything else raises,
    since reading a number off a non-pure class would be meaningless.
    """
    if fiber_codim < 0:
        raise DomainError("fiber codimension must be non-negative",
                          fiber_codim=fiber_codim)
    swept = c * ChowClass.monomial(c.n, fiber_codim, 0)
    return _pure_multiple(swept, c.n, c.n - 1)


def lines_through_point(t: CIType) -> LineCount:
    """Number of lines through a general point of a generic member of type t.

    Requires sum(d_j) = n - 1, the exact balance at which finitely many lines
    pass through a general point. Off balance the failure is diagnosed, never
    silently converted to a number: a deficit means a positive-dimensional
    family through every point, an excess means a general point sees no lines
    at all (special members can still contain lines elsewhere).
    """
    _require_counting_degrees(t)
    expected = t.n - 1
    actual = sum(t.degrees)
    if actual < expected:
        raise DomainError("infinitely many lines through a general point "
                          "expected", expected_sum=expected, actual_sum=actual,
                          type=t.label())
    if actual > expected:
        raise DomainError("generically no lines through a general point; "
                          "special members may still contain lines",
                          expected_sum=expected, actual_sum=actual,
                          type=t.label())
    locus = line_locus_class(t)
    pinned = locus * ChowClass.monomial(t.n, t.n - t.r, 0)
    certificate = chow_ring.divide_exact(pinned, prod(t.degrees))
    value = _pure_multiple(certificate, t.n, t.n - 1)
    return LineCount(value=value, certificate=certificate)
