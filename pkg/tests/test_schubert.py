"""Grassmannian side: Pieri arithmetic, symmetric rewriting, oracle counts.

Oracles: the closed form binom(2k, k)/(k+1) for the self-intersection of the
hyperplane class, and direct reconstruction of the binary form from its
claimed elementary-symmetric coordinates.
"""

import random
from math import comb

import pytest

from arcline.errors import DomainError
from arcline.line_locus import CIType
from arcline.schubert import (SIGMA1, SIGMA11, SchubertClass, fano_degree,
                              integral, oracle_count_lines, pieri_mul, sigma,
                              symmetric_expand, expected_family_dim)


def product_form(factors):
    """Reconstruction oracle: multiply out the binary linear forms
    p*y1 + q*y2 directly, as a coefficient list in descending y1 power."""
    form = [1]
    for p, q in factors:
        nxt = [0] * (len(form) + 1)
        for k, v in enumerate(form):
            nxt[k] += p * v
            nxt[k + 1] += q * v
        form = nxt
    return form


def test_pieri_singletons():
    assert pieri_mul(sigma(3, 1, 0), SIGMA1) == \
        SchubertClass(3, {(2, 0): 1, (1, 1): 1})
    assert pieri_mul(sigma(3, 2, 1), SIGMA1) == sigma(3, 2, 2)
    assert pieri_mul(sigma(3, 2, 2), SIGMA1) == SchubertClass(3, {})
    assert pieri_mul(sigma(3, 1, 0), SIGMA11) == sigma(3, 2, 1)
    assert pieri_mul(sigma(3, 2, 0), SIGMA11) == SchubertClass(3, {})
    with pytest.raises(DomainError):
        pieri_mul(sigma(3, 1, 0), "sigma2")


def test_symbol_bounds_enforced():
    with pytest.raises(DomainError):
        SchubertClass(3, {(3, 0): 1})
    with pytest.raises(DomainError):
        SchubertClass(3, {(1, 2): 1})
    with pytest.raises(DomainError):
        SchubertClass(1, {(0, 0): 1})


def test_four_lines_in_p3():
    c = sigma(3, 0, 0)
    for _ in range(4):
        c = pieri_mul(c, SIGMA1)
    assert integral(c) == 2


def test_hyperplane_powers_integrate_to_catalan():
    for n in range(2, 9):
        k = n - 1
        c = sigma(n, 0, 0)
        for _ in range(2 * k):
            c = pieri_mul(c, SIGMA1)
        assert integral(c) == comb(2 * k, k) // (k + 1)


def test_symmetric_expand_basic():
    assert symmetric_expand([(1, 1), (1, 1)]) == {(2, 0): 1}
    assert symmetric_expand([(1, 0), (0, 1)]) == {(0, 1): 1}
    # (2y1 + y2)(y1 + 2y2) = 2(y1^2 + y2^2) + 5 y1 y2 = 2 e1^2 + e2
    assert symmetric_expand([(2, 1), (1, 2)]) == {(2, 0): 2, (0, 1): 1}
    assert symmetric_expand([]) == {(0, 0): 1}


def test_symmetric_expand_reconstruction():
    rng = random.Random(31)
    for _ in range(300):
        factors = []
        for _ in range(rng.randint(0, 3)):
            p, q = rng.randint(-3, 3), rng.randint(-3, 3)
            factors += [(p, q), (q, p)]
        for _ in range(rng.randint(0, 2)):
            c = rng.randint(-3, 3)
            factors.append((c, c))
        rng.shuffle(factors)
        epoly = symmetric_expand(factors)
        expected = product_form(factors)
        degree = len(expected) - 1
        form = [0] * (degree + 1)
        for (i, j), c in epoly.items():
            assert i + 2 * j == degree or c == 0 or not any(expected)
            for k in range(i + 1):
                form[k + j] += c * comb(i, k)
        assert form == expected


def test_symmetric_expand_rejects_asymmetric():
    with pytest.raises(DomainError):
        symmetric_expand([(1, 0)])
    with pytest.raises(DomainError):
        symmetric_expand([(2, 1), (1, 2), (1, 0)])


def test_oracle_counts_classical_values():
    assert oracle_count_lines(CIType(3, (3,))) == 27
    assert oracle_count_lines(CIType(4, (5,))) == 2875
    assert oracle_count_lines(CIType(4, (2, 2))) == 16


def test_oracle_dimension_check():
    with pytest.raises(DomainError) as err:
        oracle_count_lines(CIType(3, (4,)))
    assert err.value.details["grassmannian_dim"] == 4


def test_fano_degree_quartic_threefold():
    t = CIType(4, (4,))
    assert expected_family_dim(t) == 1
    assert fano_degree(t) == 320


def test_fano_degree_at_expected_dim_zero_is_the_count():
    for t in [CIType(3, (3,)), CIType(4, (5,)), CIType(4, (2, 2))]:
        assert expected_family_dim(t) == 0
        assert fano_degree(t) == oracle_count_lines(t)


def test_fano_degree_negative_dim_rejected():
    with pytest.raises(DomainError):
        fano_degree(CIType(3, (5,)))


def test_fano_degree_all_lines_in_p3():
    # no equations at all is not expressible as a CIType; the nearest check:
    # the two-plane family of a hyperplane has dimension 2 and degree the
    # Catalan value of its ambient space
    t = CIType(3, (2,))
    k = expected_family_dim(t)
    assert k == 1
    # quadric surface in P^3: the two rulings sweep a curve of degree 4 in
    # the Pluecker quadric: c_top = (2y1)(y1+y2)(2y2), times sigma1
    assert fano_degree(t) == 4
