"""Annihilator duality for polycyclic codes over GF(q)^l.

The bilinear form <f, h>_a is the constant term of f*h reduced modulo
x^n - a(x), evaluated componentwise in the product ring.  The production
dual is the check-polynomial code; everything else here (exhaustive
annihilator search, the bform null space, the Gram-matrix relation) exists
to cross-check it from independent directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import ceil
from typing import Sequence

from . import linalg
from .errors import BudgetExceeded
from .gf import Field
from .poly import Poly, factor, gcd
from .polycode import PolycyclicCode, codeword_count, codewords, from_modulus_divisors, spanning_vectors
from .ring import ProductRing, RingElt, RingVector


def flatten_vector(v: RingVector) -> tuple[int, ...]:
    """Standard-basis coordinate flattening (F_q^l)^n -> F_q^{nl}."""
    return tuple(c for elt in v for c in elt)


def unflatten_vector(ring: ProductRing, flat: Sequence[int]) -> RingVector:
    l = ring.l
    return tuple(tuple(flat[t * l: (t + 1) * l]) for t in range(len(flat) // l))


def bform(f1: RingVector, f2: RingVector, mod_comps: Sequence[Poly]) -> RingElt:
    """Constant term of (f1 * f2) mod (x^n - a), componentwise."""
    F = mod_comps[0].field
    out = []
    for i, mod in enumerate(mod_comps):
        p1 = Poly.make(F, [elt[i] for elt in f1])
        p2 = Poly.make(F, [elt[i] for elt in f2])
        rem = (p1 * p2) % mod
        out.append(rem.coeff(0))
    return tuple(out)


@dataclass(frozen=True)
class GramMatrix:
    """A[i][j] = <x^(i-1), x^(j-1)>_a, stored 0-based."""

    ring: ProductRing
    n: int
    mod_comps: tuple[Poly, ...]
    entries: tuple[tuple[RingElt, ...], ...]

    def component(self, k: int) -> list[list[int]]:
        """The k-th (1-based) component as a plain F_q matrix."""
        return [[elt[k - 1] for elt in row] for row in self.entries]


def gram(field: Field, l: int, n: int, a_comps: Sequence[Poly]) -> GramMatrix:
    ring = ProductRing(field, l)
    mods = []
    for a in a_comps:
        mods.append(Poly.make(field, [field.neg(a.coeff(t)) for t in range(n)] + [1]))
    # constant terms of x^e mod each component modulus, e = 0 .. 2n-2
    consts = []
    for mod in mods:
        cur = Poly.one(field)
        col = []
        for _ in range(2 * n - 1):
            col.append(cur.coeff(0))
            cur = (cur * Poly.x(field)) % mod
        consts.append(col)
    entries = tuple(
        tuple(tuple(consts[k][i + j] for k in range(l)) for j in range(n))
        for i in range(n))
    return GramMatrix(ring, n, tuple(mods), entries)


def gram_of(C: PolycyclicCode) -> GramMatrix:
    return gram(C.field, C.l, C.n, C.a_comps())


def gram_nondegenerate(A: GramMatrix) -> bool:
    F = A.ring.field
    return all(linalg.det(F, A.component(k)) != 0 for k in range(1, A.ring.l + 1))


def vec_times_gram(A: GramMatrix, v: RingVector) -> RingVector:
    ring = A.ring
    out = []
    for j in range(A.n):
        acc = ring.zero
        for t in range(A.n):
            acc = ring.add(acc, ring.mul(v[t], A.entries[t][j]))
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# the annihilator dual
# ---------------------------------------------------------------------------

def ann_dual(C: PolycyclicCode) -> PolycyclicCode:
    """C's annihilator dual: the code generated by the check polynomials."""
    return from_modulus_divisors(C.field, C.l, C.n, C.mod_comps, C.check_comps)


def ann_brute(C: PolycyclicCode, budget: int = 1 << 16) -> set[RingVector]:
    """Exhaustive annihilator: every ambient vector f with f*h = 0 mod
    (x^n - a) against an F_q-basis of C (the product is bilinear, so a
    basis suffices).  Test oracle only."""
    ring = C.ring
    ambient = C.field.q ** (C.n * C.l)
    if ambient > budget:
        raise BudgetExceeded(f"ambient size {ambient} exceeds budget {budget}")
    basis = spanning_vectors(C)
    F = C.field
    out = set()
    for flat in iproduct(F.elements(), repeat=C.n * C.l):
        cand = unflatten_vector(ring, flat)
        if all(bform_product_zero(cand, h, C.mod_comps) for h in basis):
            out.add(cand)
    return out


def bform_product_zero(f: RingVector, h: RingVector, mod_comps: Sequence[Poly]) -> bool:
    """Whether f*h reduces to 0 mod (x^n - a), componentwise."""
    F = mod_comps[0].field
    for i, mod in enumerate(mod_comps):
        p1 = Poly.make(F, [elt[i] for elt in f])
        p2 = Poly.make(F, [elt[i] for elt in h])
        if not ((p1 * p2) % mod).is_zero:
            return False
    return True


def ann_dual_space(C: PolycyclicCode) -> list[RingVector]:
    """F_q-basis of C^o computed from the bilinear form alone: the null
    space of the conditions <f, h>_a = 0 over a basis of C.  Independent
    of the check-polynomial route."""
    F = C.field
    n, l = C.n, C.l
    rows = []
    for h in spanning_vectors(C):
        h_comps = [Poly.make(F, [elt[i] for elt in h]) for i in range(l)]
        for c in range(l):
            # <f, h> component c depends only on f's component c
            row = [0] * (n * l)
            for t in range(n):
                val = ((Poly.x_pow(F, t) * h_comps[c]) % C.mod_comps[c]).coeff(0)
                row[t * l + c] = val
            rows.append(row)
    basis = linalg.null_space(F, rows, n * l)
    return [unflatten_vector(C.ring, v) for v in basis]


def dual_relation_check(C: PolycyclicCode, budget: int = 1 << 16) -> bool:
    """Verify C^o = (C . A)^perp by exhaustive computation (oracle)."""
    ring = C.ring
    ambient = C.field.q ** (C.n * C.l)
    if ambient > budget or codeword_count(C) > budget:
        raise BudgetExceeded("instance too large for the exhaustive relation check")
    A = gram_of(C)
    ca_basis = [vec_times_gram(A, v) for v in spanning_vectors(C)]
    F = C.field
    euclid_dual = set()
    for flat in iproduct(F.elements(), repeat=C.n * C.l):
        cand = unflatten_vector(ring, flat)
        ok = True
        for y in ca_basis:
            acc = ring.zero
            for cx, cy in zip(cand, y):
                acc = ring.add(acc, ring.mul(cx, cy))
            if acc != ring.zero:
                ok = False
                break
        if ok:
            euclid_dual.add(cand)
    return euclid_dual == set(codewords(ann_dual(C)))


# ---------------------------------------------------------------------------
# duality predicates and counts
# ---------------------------------------------------------------------------

def is_ann_self_orthogonal(C: PolycyclicCode) -> bool:
    """C subseteq C^o, i.e. each h_i divides g_i."""
    return all(h.divides(g) for g, h in zip(C.gen_comps, C.check_comps))


def is_ann_dual_containing(C: PolycyclicCode) -> bool:
    """C^o subseteq C, i.e. each g_i divides h_i."""
    return all(g.divides(h) for g, h in zip(C.gen_comps, C.check_comps))


def is_ann_self_dual(C: PolycyclicCode) -> bool:
    """C = C^o; with monic normalization this is g_i = h_i, equivalently
    x^n - a_i = (g_i)^2."""
    return all(g == h for g, h in zip(C.gen_comps, C.check_comps))


def is_ann_lcd(C: PolycyclicCode) -> bool:
    """C and C^o intersect trivially, i.e. gcd(g_i, h_i) = 1."""
    one = Poly.one(C.field)
    return all(gcd(g, h) == one for g, h in zip(C.gen_comps, C.check_comps))


def _multiplicity_grid(field: Field, n: int, a_comps: Sequence[Poly],
                       seed: int) -> list[list[int]]:
    grids = []
    for a in a_comps:
        if a.coeff(0) == 0:
            from .errors import NonUnitConstantTerm
            raise NonUnitConstantTerm("a(0) = 0")
        mod = Poly.make(field, [field.neg(a.coeff(t)) for t in range(n)] + [1])
        grids.append([mult for _, mult in factor(mod, seed).factors])
    return grids


def count_ann_self_orthogonal(field: Field, l: int, n: int,
                              a_comps: Sequence[Poly], seed: int = 0) -> int:
    total = 1
    for grid in _multiplicity_grid(field, n, a_comps, seed):
        for m in grid:
            total *= m - ceil(m / 2) + 1
    return total


def count_ann_self_dual(field: Field, l: int, n: int,
                        a_comps: Sequence[Poly], seed: int = 0) -> int:
    for grid in _multiplicity_grid(field, n, a_comps, seed):
        if any(m % 2 for m in grid):
            return 0
    return 1


def count_ann_lcd(field: Field, l: int, n: int,
                  a_comps: Sequence[Poly], seed: int = 0) -> int:
    s_total = sum(len(grid) for grid in
                  _multiplicity_grid(field, n, a_comps, seed))
    return 2 ** s_total
