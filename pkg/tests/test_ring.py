import random
from itertools import permutations

import pytest

from polycodes import (
    ProductRing,
    assemble,
    field_make,
    make_basis,
    parse_poly,
    project,
    quotient_splits_check,
    standard_basis,
    tensor_idempotents,
    verify_idempotent_basis,
)
from polycodes.errors import (
    IndexOutOfRange,
    InvalidFactorBasis,
    LengthMismatch,
    NotAUnit,
)


def test_componentwise_ops(F2, F5, F7):
    r2 = ProductRing(F2, 2)
    assert r2.mul((1, 0), (0, 1)) == (0, 0)
    r5 = ProductRing(F5, 2)
    assert not r5.is_unit((1, 0))
    r7 = ProductRing(F7, 2)
    assert r7.inv((2, 3)) == (4, 5)
    with pytest.raises(NotAUnit):
        r5.inv((1, 0))
    with pytest.raises(LengthMismatch):
        r5.add((1, 0), (1, 0, 0))


@pytest.mark.parametrize("q,l", [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 4), (7, 2)])
def test_unit_count_and_invertibility(q, l):
    # exhaustive for q^l <= 10^4: unit <=> an inverse exists; count = (q-1)^l
    F = field_make(q)
    ring = ProductRing(F, l)
    units = 0
    for x in ring.elements():
        has_inverse = any(ring.mul(x, y) == ring.one for y in ring.elements())
        assert has_inverse == ring.is_unit(x)
        if has_inverse:
            units += 1
            assert ring.mul(x, ring.inv(x)) == ring.one
    assert units == (q - 1) ** l


def test_standard_basis(F2, F3):
    assert standard_basis(ProductRing(F3, 2)).elements == ((1, 0), (0, 1))
    assert standard_basis(ProductRing(F3, 1)).elements == ((1,),)
    b4 = standard_basis(ProductRing(F2, 4))
    assert b4.elements == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert verify_idempotent_basis(ProductRing(F2, 4), b4.elements)


def test_verify_idempotent_basis_negatives(F2):
    r2 = ProductRing(F2, 2)
    assert not verify_idempotent_basis(r2, [(1, 1), (1, 0)])
    # the claimed second basis of F_2^4: pairwise products are nonzero,
    # so it fails the orthogonality requirement
    r4 = ProductRing(F2, 4)
    claimed = [(1, 1, 1, 0), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)]
    assert r4.mul(claimed[0], claimed[1]) == (0, 1, 1, 0)
    assert not verify_idempotent_basis(r4, claimed)
    # wrong count
    assert not verify_idempotent_basis(r4, claimed[:3])


def test_only_permutation_bases_exist(F3):
    # complete orthogonal idempotent bases of F_q^l are exactly the
    # permutations of the standard one
    ring = ProductRing(F3, 3)
    std = standard_basis(ring).elements
    found = set()
    for perm in permutations(std):
        assert verify_idempotent_basis(ring, list(perm))
        found.add(perm)
    assert len(found) == 6


def test_project_assemble_examples(F5, F2):
    b = standard_basis(ProductRing(F5, 2))
    v = ((1, 2), (3, 4))
    assert project(v, 2, b) == (2, 4)
    with pytest.raises(IndexOutOfRange):
        project(v, 3, b)
    b1 = standard_basis(ProductRing(F5, 1))
    assert project(((4,), (2,)), 1, b1) == (4, 2)
    b2 = standard_basis(ProductRing(F2, 2))
    assert assemble([(1, 1, 1), (0, 1, 0)], b2) == ((1, 0), (1, 1), (1, 0))
    assert assemble([(0, 0), (0, 0)], b2) == ((0, 0), (0, 0))
    with pytest.raises(LengthMismatch):
        assemble([(1, 1), (1,)], b2)


@pytest.mark.parametrize("q,l,n", [(2, 2, 4), (3, 2, 3), (5, 3, 2), (2, 4, 3)])
def test_project_assemble_roundtrip(q, l, n):
    F = field_make(q)
    ring = ProductRing(F, l)
    rng = random.Random(q * 100 + l)
    bases = [standard_basis(ring)]
    # a permuted basis exercises the change-of-basis path
    perm = list(range(l))
    rng.shuffle(perm)
    permuted = make_basis(ring, [standard_basis(ring).elements[i] for i in perm])
    bases.append(permuted)
    for basis in bases:
        for _ in range(20):
            comps = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(l)]
            v = assemble(comps, basis)
            assert [project(v, i, basis) for i in range(1, l + 1)] == list(map(tuple, comps))


def test_quotient_splits_check(F2, F3):
    assert quotient_splits_check([parse_poly(F3, "x^2-1")]) == 2
    assert quotient_splits_check([parse_poly(F3, "x^2-1"), parse_poly(F3, "x^3-x")]) == 6
    assert quotient_splits_check([parse_poly(F2, "x^2+x+1")]) is None


def test_tensor_idempotents_standard(F3):
    ring2 = ProductRing(F3, 2)
    std2 = standard_basis(ring2).elements
    result = tensor_idempotents([std2, std2], F3)
    assert result.elements == standard_basis(ProductRing(F3, 4)).elements
    # single-position factor leaves the other unchanged
    one = ((1,),)
    assert tensor_idempotents([one, std2], F3).elements == std2


def test_tensor_indexing_rule(F2):
    # e_i (x) f_j lands at position i + (j-1)m: build from permuted factors
    m, n = 2, 2
    fam_a = [(0, 1), (1, 0)]  # swapped standard
    fam_b = [(1, 0), (0, 1)]
    result = tensor_idempotents([fam_a, fam_b], F2)
    # index (i,j) -> flat i+(j-1)m; e_1=(0,1) tensor f_1=(1,0) puts support
    # at s=2,t=1 -> position 2
    assert result.elements[0] == (0, 1, 0, 0)
    assert verify_idempotent_basis(ProductRing(F2, m * n), result.elements)


@pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 2), (2, 2, 2), (3, 3)])
def test_tensor_property(dims):
    F = field_make(2)
    rng = random.Random(sum(dims))
    fams = []
    for d in dims:
        std = list(standard_basis(ProductRing(F, d)).elements)
        rng.shuffle(std)
        fams.append(std)
    total = 1
    for d in dims:
        total *= d
    result = tensor_idempotents(fams, F)
    assert verify_idempotent_basis(ProductRing(F, total), result.elements)


def test_tensor_invalid_factor(F2):
    with pytest.raises(InvalidFactorBasis):
        tensor_idempotents([[(1, 1), (1, 0)]], F2)


def test_ring_text_format_roundtrip(F5):
    from polycodes import format_element, format_vector, parse_ring_element, parse_ring_vector

    ring = ProductRing(F5, 2)
    assert format_element((1, 4)) == "(1,4)"
    assert parse_ring_element(ring, "(1,4)") == (1, 4)
    v = ((1, 2), (0, 3), (4, 4))
    assert format_vector(v) == "[(1,2),(0,3),(4,4)]"
    assert parse_ring_vector(ring, format_vector(v)) == v
    assert parse_ring_vector(ring, "[]") == ()
