"""Brute-force line search over a small prime field.

Lines in projective n-space over F_p are rank-2 row-reduced 2 x (n+1)
matrices; there are exactly

    (p^(n+1) - 1) (p^n - 1) / ((p^2 - 1) (p - 1))

of them, which :func:`line_space_size` computes and the enumeration then has
to reproduce. A line with basis rows (u, w) lies on the variety exactly when
every t-coefficient of every generator, substituted with the order-1 arc
(u, w), vanishes mod p; that system is compiled once into flat integer
arrays and evaluated for all candidate lines by one of two interchangeable
backends: a numba kernel (see ff_kernels) or a pure numpy loop. Set the
ARCLINE_FF_BACKEND environment variable to "numba" or "numpy" to force one;
unset means numba when importable, numpy otherwise.

Everything here counts F_p-rational lines. That is a lower bound for the
geometric count and depends on p; the classical cubic surface happens to
have all 27 lines rational over F_7, which is what makes it a good
cross-check against the intersection-theoretic count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .errors import DomainError
from .polycore import SparsePoly
from .prolongation import full_expansion

BACKEND_ENV = "ARCLINE_FF_BACKEND"

Compiled = tuple[np.ndarray, np.ndarray, np.ndarray]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FFConfig:
    """A search problem: prime p, ambient dimension n, generator list.

    Generators are reduced mod p on construction and must be homogeneous
    (after reduction) in the coordinates x0..xn; an empty list means the
    whole of projective space.
    """

    p: int
    n: int
    generators: tuple[SparsePoly, ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError("modulus must be prime", p=self.p)
        if self.n < 1:
            raise DomainError("ambient dimension must be at least 1", n=self.n)
        reduced = []
        for g in self.generators:
            if not g.is_weight_zero():
                raise DomainError("generators must use only plain coordinates",
                                  generator=str(g))
            if g.max_index() > self.n:
                raise DomainError("generator uses a coordinate beyond the "
                                  "ambient space", generator=str(g), n=self.n)
            r = g.reduce_coefficients_mod(self.p)
            if r.homogeneous_degree() is None:
                raise DomainError("generators must be homogeneous mod p",
                                  generator=str(g), p=self.p)
            reduced.append(r)
        object.__setattr__(self, "generators", tuple(reduced))


def line_space_size(n: int, p: int) -> int:
    """Closed form for the number of lines in projective n-space over F_p."""
    num = (p ** (n + 1) - 1) * (p ** n - 1)
    den = (p ** 2 - 1) * (p - 1)
    q, rem = divmod(num, den)
    if rem:
        raise DomainError("line-space size came out fractional; not a prime "
                          "power?", n=n, p=p)
    return q


def enumerate_lines(n: int, p: int) -> np.ndarray:
    """All lines as an (L, 2, n+1) int64 array of row-reduced bases.

    Grouped by pivot pair c1 < c2: row 0 has its pivot at c1 and free entries
    in the later non-pivot columns, row 1 likewise from c2. Every line
    appears exactly once.
    """
    blocks = []
    for c1 in range(n + 1):
        for c2 in range(c1 + 1, n + 1):
            free1 = [j for j in range(c1 + 1, n + 1) if j != c2]
            free2 = [j for j in range(c2 + 1, n + 1)]
            k = len(free1) + len(free2)
            count = p ** k
            digits = np.zeros((count, k), dtype=np.int64)
            idx = np.arange(count, dtype=np.int64)
            for pos in range(k):
                digits[:, pos] = idx % p
                idx //= p
            block = np.zeros((count, 2, n + 1), dtype=np.int64)
            block[:, 0, c1] = 1
            block[:, 1, c2] = 1
            if free1:
                block[:, 0, free1] = digits[:, :len(free1)]
            if free2:
                block[:, 1, free2] = digits[:, len(free1):]
            blocks.append(block)
    return np.concatenate(blocks, axis=0)


def compile_system(cfg: FFConfig) -> Compiled:
    """Flatten all t-coefficients of all generators into term arrays.

    Column layout matches a flattened (2, n+1) basis: column j is the weight-0
    value of coordinate j, column (n+1)+j its weight-1 value. Components that
    vanish identically mod p impose nothing and are dropped.
    """
    width = 2 * (cfg.n + 1)
    coeffs: list[int] = []
    rows: list[list[int]] = []
    offsets = [0]
    for g in cfg.generators:
        for comp in full_expansion(g, 1).coefficients:
            reduced = comp.reduce_coefficients_mod(cfg.p)
            if reduced.is_zero():
                continue
            for mono in sorted(reduced.terms):
                row = [0] * width
                for (j, i), e in mono:
                    row[j + i * (cfg.n + 1)] = e
                coeffs.append(reduced.terms[mono] % cfg.p)
                rows.append(row)
            offsets.append(len(coeffs))
    return (np.asarray(coeffs, dtype=np.int64),
            np.asarray(rows, dtype=np.int64).reshape(len(rows), width),
            np.asarray(offsets, dtype=np.int64))


def resolve_backend(backend: str | None = None) -> str:
    """Pick the evaluation backend: explicit argument, else the env var,
    else numba when available."""
    choice = (backend or os.environ.get(BACKEND_ENV, "") or "auto").strip().lower()
    if choice not in ("numba", "numpy", "auto"):
        raise DomainError("unknown finite-field backend", backend=choice,
                          allowed=["numba", "numpy", "auto"])
    if choice == "auto":
        try:
            import numba  # noqa: F401
        except ImportError:
            return "numpy"
        return "numba"
    return choice


def _mask_numpy(values: np.ndarray, compiled: Compiled, p: int) -> np.ndarray:
    coeffs, exps, offsets = compiled
    num = values.shape[0]
    mask = np.ones(num, dtype=bool)
    for q in range(len(offsets) - 1):
        acc = np.zeros(num, dtype=np.int64)
        for t in range(offsets[q], offsets[q + 1]):
            term = np.full(num, coeffs[t], dtype=np.int64)
            for c in np.nonzero(exps[t])[0]:
                col = values[:, c]
                for _ in range(int(exps[t, c])):
                    term = term * col % p
            acc = (acc + term) % p
        mask &= acc == 0
    return mask


def evaluate_mask(values: np.ndarray, compiled: Compiled, p: int,
                  backend: str | None = None) -> np.ndarray:
    """Rows of `values` where every compiled polynomial vanishes mod p."""
    if compiled[0].shape[0] == 0:
        return np.ones(values.shape[0], dtype=bool)
    name = resolve_backend(backend)
    if name == "numba":
        from . import ff_kernels
        return ff_kernels.containment_mask(values, compiled[0], compiled[1],
                                           compiled[2], p)
    return _mask_numpy(values, compiled, p)


def contained_lines(cfg: FFConfig, backend: str | None = None) -> np.ndarray:
    """The (K, 2, n+1) array of rational lines on the variety."""
    lines = enumerate_lines(cfg.n, cfg.p)
    values = lines.reshape(lines.shape[0], -1)
    mask = evaluate_mask(values, compile_system(cfg), cfg.p, backend)
    return lines[mask]


def count_lines_ff(cfg: FFConfig, backend: str | None = None) -> int:
    """Number of F_p-rational lines on the variety cut by cfg.generators."""
    lines = enumerate_lines(cfg.n, cfg.p)
    values = lines.reshape(lines.shape[0], -1)
    mask = evaluate_mask(values, compile_system(cfg), cfg.p, backend)
    return int(mask.sum())


def _rref2(u: tuple[int, ...], v: tuple[int, ...], p: int):
    """Row-reduce the 2-row matrix (u, v) mod p; None if rank < 2."""
    m = [[x % p for x in u], [x % p for x in v]]
    row = 0
    for col in range(len(u)):
        pivot = None
        for rr in range(row, 2):
            if m[rr][col]:
                pivot = rr
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(x * inv) % p for x in m[row]]
        other = 1 - row
        if m[other][col]:
            f = m[other][col]
            m[other] = [(a - f * b) % p for a, b in zip(m[other], m[row])]
        row += 1
        if row == 2:
            return (tuple(m[0]), tuple(m[1]))
    return None


def count_lines_through_point_ff(cfg: FFConfig, point: tuple[int, ...],
                                 backend: str | None = None) -> int:
    """Rational lines on the variety through a given rational point.

    The point must lie on the variety. Candidate directions run over all of
    projective n-space except the point itself; directions spanning the same
    2-plane are deduplicated through their row-reduced form, so each line is
    counted once.
    """
    p, n = cfg.p, cfg.n
    if len(point) != n + 1:
        raise DomainError("point needs n+1 coordinates", expected=n + 1,
                          got=len(point))
    pt = tuple(x % p for x in point)
    if all(x == 0 for x in pt):
        raise DomainError("zero vector is not a projective point")
    assignment = {(j, 0): pt[j] for j in range(n + 1)}
    for g in cfg.generators:
        if g.evaluate(assignment) % p != 0:
            raise DomainError("point does not lie on the variety",
                              point=list(pt), generator=str(g))

    reps: dict[tuple, tuple[int, ...]] = {}
    for lead in range(n + 1):
        for tail in iproduct(range(p), repeat=n - lead):
            v = (0,) * lead + (1,) + tail
            key = _rref2(pt, v, p)
            if key is not None:
                reps.setdefault(key, v)
    if not reps:
        return 0
    values = np.zeros((len(reps), 2 * (n + 1)), dtype=np.int64)
    for i, v in enumerate(reps.values()):
        values[i, :n + 1] = pt
        values[i, n + 1:] = v
    mask = evaluate_mask(values, compile_system(cfg), p, backend)
    return int(mask.sum())
