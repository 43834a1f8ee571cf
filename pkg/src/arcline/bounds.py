"""Largest line counts through a point, over all complete-intersection types.

Fix the variety dimension m. A type of codimension r lives in projective
(m+r)-space and admits finitely many lines through a general point exactly
when its degrees sum to m + r - 1; each such type contributes prod(d_j!)
lines. Enumerating all admissible degree tuples (optionally pinning the
codimension or raising the minimum degree) and taking the maximum gives a
sharp bound realized by generic complete intersections.

log-convexity of the factorial makes the most unbalanced admissible tuple
the winner, which is what the closed forms m! (hypersurfaces), 2(m-1)!
(codimension >= 2) and 3!(m-2)! (minimum degree 3) express; the enumeration
here does not assume any of that and the tests check the closed forms
against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .errors import DomainError


@dataclass(frozen=True)
class BoundQuery:
    """dim: dimension m of the variety. codim: exact codimension r, or None
    for all. min_degree: smallest allowed hypersurface degree (>= 2)."""

    dim: int
    codim: int | None = None
    min_degree: int = 2

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("variety dimension must be positive", dim=self.dim)
        if self.codim is not None and self.codim < 1:
            raise DomainError("codimension must be positive", codim=self.codim)
        if self.min_degree < 2:
            raise DomainError("minimum degree below 2 does not cut a hypersurface "
                              "type with finitely many lines through a point",
                              min_degree=self.min_degree)


def degree_partitions(total: int, parts: int, min_part: int,
                      max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of `parts` integers >= min_part summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    hi = total - min_part * (parts - 1)
    if max_part is not None:
        hi = min(hi, max_part)
    for first in range(hi, min_part - 1, -1):
        for rest in degree_partitions(total - first, parts - 1, min_part, first):
            yield (first,) + rest


def enumerate_types(q: BoundQuery) -> list[tuple[tuple[int, ...], int]]:
    """All admissible degree tuples with their counts, largest count first.

    Each entry is (degrees, prod(d_j!)) with ambient dimension m + len(degrees).
    Ties are broken by fewer degrees, then lexicographically, so the output
    order is deterministic.
    """
    m, dmin = q.dim, q.min_degree
    if q.codim is not None:
        r_values = [q.codim]
    else:
        # r*(dmin - 1) <= m - 1 bounds how many degrees can fit
        r_values = list(range(1, (m - 1) // (dmin - 1) + 1)) if m > 1 else []
    out: list[tuple[tuple[int, ...], int]] = []
    for r in r_values:
        for degs in degree_partitions(m + r - 1, r, dmin):
            count = 1
            for d in degs:
                count *= factorial(d)
            out.append((degs, count))
    out.sort(key=lambda item: (-item[1], len(item[0]), item[0]))
    return out


def bound(q: BoundQuery) -> int:
    """Sharp upper bound for lines through a general point at dimension q.dim."""
    types = enumerate_types(q)
    if not types:
        raise DomainError("no admissible complete-intersection type",
                          dim=q.dim, codim=q.codim, min_degree=q.min_degree)
    return types[0][1]
