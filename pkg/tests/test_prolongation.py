"""Jet substitution against two independent oracles.

Oracle 1 (naive substitution): replace x_j by the plain sum of its jet
variables and split the expansion by weight; the t-power of any term equals
its weight, so the weight-k component is the t^k coefficient. Uses only
polycore arithmetic, never the series convolution under test.

Oracle 2 (univariate restriction): expand f(p + t*v) coefficient list by
binomial convolution over the integers; its first nonzero index is the
contact order of the line with f = 0.
"""

import math
import random

import pytest

from arcline.errors import DomainError
from arcline.polycore import SparsePoly, parse_poly, weight_components
from arcline.prolongation import (Arc, ProlongedSystem, arc_ideal,
                                  full_expansion, line_contact_order,
                                  line_through)


def naive_jet_coefficients(f, m, length):
    total = SparsePoly.zero()
    for mono, c in f.terms.items():
        term = SparsePoly.const(c)
        for (j, i), e in mono:
            assert i == 0
            s = SparsePoly.zero()
            for w in range(m + 1):
                s = s + SparsePoly.variable(j, w)
            term = term * s ** e
        total = total + term
    parts = weight_components(total)
    return [parts.get(k, SparsePoly.zero()) for k in range(length)], parts


def line_restriction(f, p, v):
    out = [0] * (f.total_degree() + 1)
    for mono, c in f.terms.items():
        cur = [c]
        for (j, i), e in mono:
            assert i == 0
            for _ in range(e):
                nxt = [0] * (len(cur) + 1)
                for k, a in enumerate(cur):
                    nxt[k] += a * p[j]
                    nxt[k + 1] += a * v[j]
                cur = nxt
        for k, a in enumerate(cur):
            out[k] += a
    return out


def random_weight0_poly(rng, n, degree, terms, homogeneous):
    p = SparsePoly.zero()
    for _ in range(terms):
        d = degree if homogeneous else rng.randint(0, degree)
        term = SparsePoly.const(rng.randint(-5, 5))
        for _ in range(d):
            term = term * SparsePoly.variable(rng.randint(0, n), 0)
        p = p + term
    return p


def test_arc_ideal_linear():
    system = arc_ideal(parse_poly("x0"), 1)
    assert [str(g) for g in system.coefficients] == ["x0", "x0_1"]
    assert system.degree == 1 and system.order == 1


def test_arc_ideal_square():
    system = arc_ideal(parse_poly("x0^2"), 1)
    assert [str(g) for g in system.coefficients] == ["x0^2", "2*x0*x0_1"]


def test_arc_ideal_length_is_order_plus_one():
    f = parse_poly("x0^2 + x1")
    for m in range(5):
        assert len(arc_ideal(f, m)) == m + 1
    assert len(arc_ideal(SparsePoly.zero(), 3)) == 4


def test_full_expansion_bilinear():
    system = full_expansion(parse_poly("x0*x1"), 1)
    assert [str(g) for g in system.coefficients] == \
        ["x0*x1", "x0*x1_1 + x0_1*x1", "x0_1*x1_1"]


def test_full_expansion_length():
    # degree d at order m always gives d*m + 1 coefficients
    rng = random.Random(11)
    for _ in range(30):
        n, d, m = rng.randint(1, 3), rng.randint(1, 4), rng.randint(1, 3)
        f = random_weight0_poly(rng, n, d, 4, homogeneous=True)
        if f.is_zero():
            continue
        assert len(full_expansion(f, m)) == d * m + 1
    assert len(full_expansion(SparsePoly.const(5), 2)) == 1


def test_arc_ideal_matches_naive_substitution():
    rng = random.Random(22)
    for _ in range(120):
        n, m = rng.randint(1, 3), rng.randint(0, 3)
        f = random_weight0_poly(rng, n, rng.randint(1, 4), rng.randint(1, 5),
                                homogeneous=False)
        system = arc_ideal(f, m)
        expected, _ = naive_jet_coefficients(f, m, m + 1)
        assert list(system.coefficients) == expected


def test_full_expansion_matches_naive_substitution():
    rng = random.Random(33)
    for _ in range(80):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        d = rng.randint(1, 4)
        f = random_weight0_poly(rng, n, d, rng.randint(1, 5), homogeneous=True)
        if f.is_zero():
            continue
        system = full_expansion(f, m)
        expected, parts = naive_jet_coefficients(f, m, d * m + 1)
        assert list(system.coefficients) == expected
        # nothing survives beyond weight d*m
        assert all(w <= d * m for w in parts)


def test_generic_cubic_order_three():
    # four coordinates, order 3: the classical jet system of a cubic
    rng = random.Random(44)
    f = random_weight0_poly(rng, 3, 3, 12, homogeneous=True)
    system = full_expansion(f, 3)
    expected, _ = naive_jet_coefficients(f, 3, 10)
    assert len(system) == 10
    assert list(system.coefficients) == expected


def test_coefficients_weight_and_degree_homogeneous():
    rng = random.Random(55)
    for _ in range(60):
        n, m, d = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 4)
        f = random_weight0_poly(rng, n, d, 4, homogeneous=True)
        if f.is_zero():
            continue
        for i, g in enumerate(full_expansion(f, m).coefficients):
            if g.is_zero():
                continue
            assert set(weight_components(g)) == {i}
            assert g.homogeneous_degree() == d


def test_cauchy_multiplicativity():
    rng = random.Random(66)
    for _ in range(40):
        n, m = rng.randint(1, 2), rng.randint(1, 2)
        f = random_weight0_poly(rng, n, rng.randint(1, 3), 3, homogeneous=True)
        g = random_weight0_poly(rng, n, rng.randint(1, 3), 3, homogeneous=True)
        if f.is_zero() or g.is_zero():
            continue
        ff = full_expansion(f, m).coefficients
        gg = full_expansion(g, m).coefficients
        pp = full_expansion(f * g, m).coefficients
        for k, coeff in enumerate(pp):
            conv = SparsePoly.zero()
            for i in range(max(0, k - len(gg) + 1), min(k, len(ff) - 1) + 1):
                conv = conv + ff[i] * gg[k - i]
            assert coeff == conv


def test_full_expansion_rejects_inhomogeneous():
    with pytest.raises(DomainError):
        full_expansion(parse_poly("x0^2 + x1"), 1)


def test_substitution_rejects_weighted_source():
    with pytest.raises(DomainError):
        arc_ideal(parse_poly("x0_1"), 1)


def test_negative_order_rejected():
    with pytest.raises(DomainError):
        arc_ideal(parse_poly("x0"), -1)


def test_arc_validation():
    with pytest.raises(DomainError):
        Arc(n=2, m=1, coords=((0, 1), (0, 0)))          # wrong row count
    with pytest.raises(DomainError):
        Arc(n=1, m=1, coords=((0,), (1,)))              # wrong row length
    with pytest.raises(DomainError):
        Arc(n=1, m=1, coords=((0, 1), (0, 2)))          # base point is zero
    Arc(n=1, m=1, coords=((1, 0), (0, 0)))


def test_line_through_coordinate_arc():
    arc = Arc(n=3, m=1, coords=((1, 0), (0, 1), (0, 0), (0, 0)))
    line = line_through(arc)
    assert line.base == (1, 0, 0, 0)
    assert line.direction == (0, 1, 0, 0)
    assert not line.degenerate


def test_line_through_degenerate_direction():
    arc = Arc(n=2, m=1, coords=((1, 1), (2, 2), (0, 0)))
    assert line_through(arc).degenerate
    arc = Arc(n=2, m=1, coords=((1, 0), (2, 0), (0, 0)))
    assert line_through(arc).degenerate  # zero direction
    with pytest.raises(DomainError):
        line_through(Arc(n=1, m=0, coords=((1,), (0,))))


def test_contact_order_of_nodal_cubic_branch():
    # branch direction of the node: the tangent line meets to order exactly 3
    f = parse_poly("x0*x2^2 - x1^3 - x1^2*x0", 2)
    arc = Arc(n=2, m=1, coords=((1, 0), (0, -2), (0, 2)))
    assert line_contact_order(f, arc) == 3
    assert line_restriction(f, (1, 0, 0), (0, -2, 2)) == [0, 0, 0, 8]


def test_contact_order_containment_is_infinite():
    rng = random.Random(77)
    for _ in range(20):
        g = random_weight0_poly(rng, 3, 2, 3, homogeneous=True)
        h = random_weight0_poly(rng, 3, 2, 3, homogeneous=True)
        f = parse_poly("x2") * g + parse_poly("x3") * h
        if f.is_zero():
            continue
        # any line inside {x2 = x3 = 0} lies on f = 0
        arc = Arc(n=3, m=1, coords=((rng.randint(-3, 3), rng.randint(-3, 3)),
                                    (1, rng.randint(-3, 3)), (0, 0), (0, 0)))
        assert line_contact_order(f, arc) == math.inf


def test_contact_order_matches_univariate_oracle():
    rng = random.Random(88)
    for _ in range(100):
        n = rng.randint(1, 3)
        f = random_weight0_poly(rng, n, rng.randint(1, 3), 4, homogeneous=True)
        if f.is_zero():
            continue
        coords = tuple((rng.randint(-3, 3), rng.randint(-3, 3))
                       for _ in range(n + 1))
        if all(row[0] == 0 for row in coords):
            continue
        arc = Arc(n=n, m=1, coords=coords)
        restricted = line_restriction(f, tuple(r[0] for r in coords),
                                      tuple(r[1] for r in coords))
        nonzero = [k for k, a in enumerate(restricted) if a]
        expected = nonzero[0] if nonzero else math.inf
        assert line_contact_order(f, arc) == expected


def test_reparameterization_scales_coefficients():
    # scaling the direction by u scales the t^i coefficient by u^i
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(1, 3)
        f = random_weight0_poly(rng, n, rng.randint(1, 3), 4, homogeneous=True)
        if f.is_zero():
            continue
        base = [rng.randint(-3, 3) for _ in range(n + 1)]
        direction = [rng.randint(-3, 3) for _ in range(n + 1)]
        u = rng.choice([-3, -2, 2, 3])
        system = full_expansion(f, 1)
        plain = {(j, 0): base[j] for j in range(n + 1)}
        plain.update({(j, 1): direction[j] for j in range(n + 1)})
        scaled = {(j, 0): base[j] for j in range(n + 1)}
        scaled.update({(j, 1): u * direction[j] for j in range(n + 1)})
        for i, g in enumerate(system.coefficients):
            assert g.evaluate(scaled) == u ** i * g.evaluate(plain)
