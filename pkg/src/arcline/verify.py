"""Cross-check bundle behind the `verify` CLI command.

Five checks, each comparing two routes that share no computation path:
count sweeps against the Grassmannian oracle, point counts against the
factorial closed form, jet coefficients against the weight grading,
presentation changes against round-trips and product compatibility, and the
classical 27 against a finite-field brute force. Fan-out over types honors
the ARCLINE_THREADS environment variable.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial, prod

from . import chow_ring, schubert
from .bounds import degree_partitions
from .ff_search import FFConfig, count_lines_ff, enumerate_lines, line_space_size
from .line_locus import CIType, count_lines, lines_through_point
from .polycore import SparsePoly, parse_poly, weight_components
from .prolongation import arc_ideal, full_expansion


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def thread_count() -> int:
    raw = os.environ.get("ARCLINE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map(fn, items, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def finite_count_types(n: int) -> list[tuple[int, ...]]:
    """Degree tuples with finitely many lines on the whole variety."""
    out = []
    for r in range(1, n):
        out.extend(degree_partitions(2 * (n - 1) - r, r, 2))
    return out


def point_count_types(n: int) -> list[tuple[int, ...]]:
    """Degree tuples with finitely many lines through a general point."""
    out = []
    for r in range(1, n):
        out.extend(degree_partitions(n - 1, r, 2))
    return out


def check_oracle_agreement(max_ambient: int, threads: int) -> CheckResult:
    tasks = [CIType(n, degs)
             for n in range(3, max_ambient + 1)
             for degs in finite_count_types(n)]

    def one(t: CIType) -> bool:
        return count_lines(t).value == schubert.oracle_count_lines(t)

    ok = _map(one, tasks, threads)
    return CheckResult("count-vs-grassmannian-oracle", all(ok), len(tasks),
                       f"ambient 3..{max_ambient}")


def check_point_closed_form(max_ambient: int, threads: int) -> CheckResult:
    top = max(8, max_ambient)
    tasks = [CIType(n, degs)
             for n in range(3, top + 1)
             for degs in point_count_types(n)]

    def one(t: CIType) -> bool:
        expected = prod(factorial(d) for d in t.degrees)
        return lines_through_point(t).value == expected

    ok = _map(one, tasks, threads)
    return CheckResult("point-count-vs-factorial-form", all(ok), len(tasks),
                       f"ambient 3..{top}")


def _random_poly(rng: random.Random, n: int, degree: int, terms: int,
                 homogeneous: bool) -> SparsePoly:
    p = SparsePoly.zero()
    for _ in range(terms):
        d = degree if homogeneous else rng.randint(0, degree)
        mono = SparsePoly.const(rng.randint(-4, 4))
        for _ in range(d):
            mono = mono * SparsePoly.variable(rng.randint(0, n), 0)
        p = p + mono
    return p


def check_weight_homogeneity(cases: int = 120, seed: int = 1103) -> CheckResult:
    rng = random.Random(seed)
    passed = True
    for k in range(cases):
        n = rng.randint(1, 3)
        m = rng.randint(1, 3)
        homogeneous = k % 2 == 0
        f = _random_poly(rng, n, rng.randint(1, 4), rng.randint(1, 5),
                         homogeneous)
        system = (full_expansion(f, m) if homogeneous and not f.is_zero()
                  else arc_ideal(f, m))
        for i, comp in enumerate(system.coefficients):
            parts = weight_components(comp)
            if comp.is_zero():
                continue
            if set(parts) != {i}:
                passed = False
    return CheckResult("jet-coefficients-weight-homogeneous", passed, cases)


def check_presentation_round_trip(cases: int = 120, seed: int = 2207) -> CheckResult:
    rng = random.Random(seed)
    passed = True
    for _ in range(cases):
        n = rng.randint(2, 5)
        a = _random_class(rng, n)
        b = _random_class(rng, n)
        if chow_ring.from_j_basis(chow_ring.to_j_basis(a), n) != a:
            passed = False
        via_j = chow_ring.from_j_basis(
            chow_ring.j_mul(chow_ring.to_j_basis(a), chow_ring.to_j_basis(b), n),
            n)
        if via_j != a * b:
            passed = False
    return CheckResult("presentation-round-trip-and-products", passed, cases)


def _random_class(rng: random.Random, n: int) -> chow_ring.ChowClass:
    raw = {}
    for _ in range(rng.randint(1, 4)):
        raw[(rng.randint(0, n), rng.randint(0, n - 1))] = rng.randint(-5, 5)
    return chow_ring.normal_form(raw, n)


def check_fermat_cubic() -> CheckResult:
    # all 27 lines of this surface are rational over F_7 (cube roots of -1
    # exist there), so the rational count must hit the geometric one
    f = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 3)
    cfg = FFConfig(p=7, n=3, generators=(f,))
    brute = count_lines_ff(cfg)
    chow = count_lines(CIType(3, (3,))).value
    sizes_ok = (enumerate_lines(3, 7).shape[0] == line_space_size(3, 7))
    passed = brute == chow == 27 and sizes_ok
    return CheckResult("fermat-cubic-brute-force-over-F7", passed, 1,
                       f"brute={brute}, chow={chow}")


def run_verify(max_ambient: int = 6, threads: int | None = None) -> list[CheckResult]:
    if max_ambient < 3:
        max_ambient = 3
    if threads is None:
        threads = thread_count()
    return [
        check_oracle_agreement(max_ambient, threads),
        check_point_closed_form(max_ambient, threads),
        check_weight_homogeneity(),
        check_presentation_round_trip(),
        check_fermat_cubic(),
    ]
