import random

import pytest

from polycodes import classify, dual, field_make, from_rows, is_lcd, linalg, min_distance
from polycodes.errors import DistanceNotExact, EmptyInput, ZeroCode
from polycodes.lincode import (
    LinearCode,
    codewords,
    contains,
    intersection_dim,
    min_distance_gray_walk,
    weight_enumerator,
)

HAMMING_ROWS = [[1, 0, 0, 0, 0, 1, 1],
                [0, 1, 0, 0, 1, 0, 1],
                [0, 0, 1, 0, 1, 1, 0],
                [0, 0, 0, 1, 1, 1, 1]]


def random_code(rng, F, n, rows):
    return from_rows(F, [[rng.randrange(F.q) for _ in range(n)] for _ in range(rows)], n=n)


def test_from_rows(F2, F5):
    whole = from_rows(F2, [[1, 0], [0, 1]])
    assert whole.k == 2
    dep = from_rows(F5, [[1, 2, 3], [2, 4, 1], [3, 1, 4]])
    assert dep.k == linalg.rank(F5, [[1, 2, 3], [2, 4, 1], [3, 1, 4]])
    zero = from_rows(F2, [[0, 0, 0]])
    assert zero.k == 0 and zero.n == 3
    with pytest.raises(EmptyInput):
        from_rows(F2, [])
    assert from_rows(F2, [], n=4).n == 4


def test_dual(F2):
    ham = from_rows(F2, HAMMING_ROWS)
    d = dual(ham)
    assert d.k == 3
    # G . H^T = 0
    for g in ham.gen:
        for h in d.gen:
            assert sum(a * b for a, b in zip(g, h)) % 2 == 0
    whole = from_rows(F2, [[1, 0], [0, 1]])
    assert dual(whole).k == 0
    assert dual(dual(ham)) == ham


def test_double_dual_random(F3, F4):
    rng = random.Random(9)
    for F in (F3, F4):
        for _ in range(15):
            C = random_code(rng, F, 6, rng.randrange(1, 5))
            assert dual(dual(C)) == C
            assert C.k + dual(C).k == C.n


def test_min_distance_examples(F2, F7):
    ham = from_rows(F2, HAMMING_ROWS)
    assert min_distance(ham) == (3, True)
    rep = from_rows(F7, [[1] * 6])
    assert min_distance(rep) == (6, True)
    with pytest.raises(ZeroCode):
        min_distance(from_rows(F2, [], n=3))


def test_min_distance_matches_gray_walk():
    # the production sweep against the sequential Gray-code walk
    rng = random.Random(77)
    for q, m in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)]:
        F = field_make(q) if m == 1 else field_make(q, m)
        for _ in range(12):
            n = rng.randrange(4, 9)
            C = random_code(rng, F, n, rng.randrange(1, 5))
            if C.k == 0 or F.q ** C.k > 4096:
                continue
            assert min_distance(C)[0] == min_distance_gray_walk(C)


def test_min_distance_budget_lower_bound(F5):
    rng = random.Random(5)
    C = random_code(rng, F5, 10, 6)
    d_full, exact_full = min_distance(C, budget=1 << 30)
    assert exact_full
    # tiny budget: weight-limited search, possibly exact if the bound closes
    C2 = LinearCode(C.field, C.n, C.gen)
    d_small, exact_small = min_distance(C2, budget=C.n * 40)
    if exact_small:
        assert d_small == d_full
    else:
        assert d_small <= d_full


def test_weight_limited_closes_low_distance(F3):
    # distance-2 code: level-1 enumeration certifies exactness immediately
    C = from_rows(F3, [[1, 1, 0, 0], [0, 0, 1, 2]])
    d, exact = min_distance(C, budget=60)  # q^k * n = 36 > budget? 81*4=324 > 60
    assert (d, exact) == (2, True)


def test_is_lcd(F2, F5):
    whole = from_rows(F2, [[1, 0], [0, 1]])
    assert is_lcd(whole)
    rep = from_rows(F2, [[1, 1]])
    assert not is_lcd(rep)
    rng = random.Random(13)
    for _ in range(25):
        C = random_code(rng, F5, 6, 3)
        assert is_lcd(C) == (intersection_dim(C, dual(C)) == 0)


def test_classify(F7, F5, F2):
    mds = from_rows(F7, [[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 2, 3], [0, 0, 1, 1, 4, 2]])
    d, _ = min_distance(mds)
    if d == 4:
        assert classify(mds) == "mds"
    rep = from_rows(F2, [[1, 1]])
    min_distance(rep)
    assert classify(rep) == "mds"  # [2,1,2]: d = n-k+1
    square = from_rows(F5, [[1, 0, 1, 0], [0, 1, 0, 1]])
    min_distance(square)
    assert classify(square) == "amds"  # [4,2,2]
    fresh = from_rows(F2, HAMMING_ROWS)
    with pytest.raises(DistanceNotExact):
        classify(fresh)


def test_singleton_bound_random(F3, F9):
    rng = random.Random(31)
    for F in (F3, F9):
        for _ in range(20):
            C = random_code(rng, F, 7, rng.randrange(1, 5))
            if C.k == 0:
                continue
            d, exact = min_distance(C)
            assert exact and d <= C.n - C.k + 1


def test_parity_extension_does_not_decrease_distance(F2):
    rng = random.Random(17)
    for _ in range(15):
        C = random_code(rng, F2, 6, 3)
        if C.k == 0:
            continue
        extended = [list(r) + [sum(r) % 2] for r in C.gen]
        E = from_rows(F2, extended)
        assert min_distance(E)[0] >= min_distance(C)[0]


def test_weight_enumerator(F2, F4):
    ham = from_rows(F2, HAMMING_ROWS)
    we = weight_enumerator(ham)
    assert we == (1, 0, 0, 7, 7, 0, 0, 1)
    assert sum(we) == 2 ** 4
    rng = random.Random(23)
    C = random_code(rng, F4, 4, 2)
    we4 = weight_enumerator(C)
    assert sum(we4) == 4 ** C.k
    # manual count agrees
    manual = [0] * (C.n + 1)
    for w in codewords(C):
        manual[sum(1 for x in w if x)] += 1
    assert tuple(manual) == we4


def test_contains(F2):
    ham = from_rows(F2, HAMMING_ROWS)
    sub = from_rows(F2, [HAMMING_ROWS[0]])
    assert contains(ham, sub)
    assert not contains(sub, ham)
