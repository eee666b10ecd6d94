"""The product ring GF(q)^l and its orthogonal idempotent bases.

Ring elements are tuples of l field-element codes multiplied
componentwise.  All internal computation elsewhere in the package happens
in the standard basis; an arbitrary complete orthogonal idempotent basis
is converted at the boundary through its change-of-basis matrix, which is
exactly the algebra isomorphism sending e_i to the i-th unit tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Optional, Sequence

from . import linalg
from .errors import (
    IndexOutOfRange,
    InvalidFactorBasis,
    LengthMismatch,
    NotAUnit,
)
from .gf import Field
from .poly import Poly, splits_distinct_linear

RingElt = tuple[int, ...]
RingVector = tuple[RingElt, ...]


class ProductRing:
    """GF(q)^l with componentwise operations."""

    def __init__(self, field: Field, l: int):
        if l < 1:
            raise LengthMismatch("l must be >= 1")
        self.field = field
        self.l = l
        self.one: RingElt = (1,) * l
        self.zero: RingElt = (0,) * l

    def _check(self, x: Sequence[int]) -> None:
        if len(x) != self.l:
            raise LengthMismatch(f"expected {self.l} components, got {len(x)}")

    def add(self, x: RingElt, y: RingElt) -> RingElt:
        self._check(x)
        self._check(y)
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def neg(self, x: RingElt) -> RingElt:
        F = self.field
        return tuple(F.neg(a) for a in x)

    def sub(self, x: RingElt, y: RingElt) -> RingElt:
        return self.add(x, self.neg(y))

    def mul(self, x: RingElt, y: RingElt) -> RingElt:
        self._check(x)
        self._check(y)
        F = self.field
        return tuple(F.mul(a, b) for a, b in zip(x, y))

    def scale(self, c: int, x: RingElt) -> RingElt:
        F = self.field
        return tuple(F.mul(c, a) for a in x)

    def is_unit(self, x: RingElt) -> bool:
        self._check(x)
        return all(a != 0 for a in x)

    def inv(self, x: RingElt) -> RingElt:
        if not self.is_unit(x):
            raise NotAUnit(f"{x} has a zero component")
        F = self.field
        return tuple(F.inv(a) for a in x)

    def embed(self, c: int) -> RingElt:
        """The diagonal image of a field scalar."""
        return (c,) * self.l

    def elements(self):
        return (tuple(t) for t in product(self.field.elements(), repeat=self.l))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ProductRing)
                and self.field == other.field and self.l == other.l)

    def __hash__(self) -> int:
        return hash((self.field, self.l))

    def __repr__(self) -> str:
        return f"ProductRing(GF({self.field.q})^{self.l})"


@dataclass(frozen=True)
class IdempotentBasis:
    """A complete orthogonal idempotent basis {e_1, ..., e_l}.

    ``matrix`` has the e_i as rows; coordinates of an element with respect
    to the basis are recovered through its inverse.
    """

    ring: ProductRing
    elements: tuple[RingElt, ...]
    is_standard: bool = dc_field(default=False)

    def matrix(self) -> list[list[int]]:
        return [list(e) for e in self.elements]

    def inverse_matrix(self) -> list[list[int]]:
        return linalg.inverse(self.ring.field, self.matrix())

    def coords(self, x: RingElt) -> tuple[int, ...]:
        """Coordinates (a_1, ..., a_l) with x = sum a_i e_i."""
        if self.is_standard:
            return tuple(x)
        return tuple(linalg.vec_mat(self.ring.field, list(x), self.inverse_matrix()))

    def combine(self, coords: Sequence[int]) -> RingElt:
        """Inverse of :meth:`coords`."""
        if self.is_standard:
            return tuple(coords)
        return tuple(linalg.vec_mat(self.ring.field, list(coords), self.matrix()))


def standard_basis(ring: ProductRing) -> IdempotentBasis:
    elems = tuple(tuple(1 if j == i else 0 for j in range(ring.l))
                  for i in range(ring.l))
    return IdempotentBasis(ring, elems, is_standard=True)


def verify_idempotent_basis(ring: ProductRing, cands: Sequence[RingElt]) -> bool:
    """Check count, orthogonality, idempotency, sum = 1 and linear
    independence.  Independence is tested explicitly so degenerate inputs
    fail loudly rather than by accident of the count."""
    if len(cands) != ring.l:
        return False
    for x in cands:
        if len(x) != ring.l:
            return False
        if ring.mul(x, x) != tuple(x):
            return False
    for i, x in enumerate(cands):
        for j, y in enumerate(cands):
            if i != j and ring.mul(x, y) != ring.zero:
                return False
    total = ring.zero
    for x in cands:
        total = ring.add(total, x)
    if total != ring.one:
        return False
    return linalg.rank(ring.field, [list(x) for x in cands]) == ring.l


def make_basis(ring: ProductRing, cands: Sequence[RingElt]) -> IdempotentBasis:
    if not verify_idempotent_basis(ring, cands):
        raise InvalidFactorBasis("not a complete orthogonal idempotent basis")
    std = standard_basis(ring)
    if tuple(tuple(c) for c in cands) == std.elements:
        return std
    return IdempotentBasis(ring, tuple(tuple(c) for c in cands))


def project(vec: Sequence[RingElt], i: int, basis: IdempotentBasis) -> tuple[int, ...]:
    """Component vector a^(i) of a ring vector with respect to the basis
    (1-based i, matching the projection pi_i)."""
    if not 1 <= i <= basis.ring.l:
        raise IndexOutOfRange(f"component index {i} not in [1, {basis.ring.l}]")
    return tuple(basis.coords(x)[i - 1] for x in vec)


def assemble(components: Sequence[Sequence[int]], basis: IdempotentBasis) -> RingVector:
    """The unique ring vector whose i-th projection is components[i-1]."""
    ring = basis.ring
    if len(components) != ring.l:
        raise LengthMismatch(f"expected {ring.l} component vectors")
    n = len(components[0])
    if any(len(c) != n for c in components):
        raise LengthMismatch("component vectors differ in length")
    return tuple(basis.combine([comp[t] for comp in components]) for t in range(n))


def format_element(x: RingElt) -> str:
    """Text form '(c1,...,cl)' with field-element codes."""
    return "(" + ",".join(str(c) for c in x) + ")"


def format_vector(v: Sequence[RingElt]) -> str:
    return "[" + ",".join(format_element(x) for x in v) + "]"


def parse_ring_element(ring: ProductRing, text: str) -> RingElt:
    parts = text.strip().strip("()").split(",")
    elt = tuple(ring.field.parse_element(p) for p in parts)
    ring._check(elt)
    return elt


def parse_ring_vector(ring: ProductRing, text: str) -> RingVector:
    body = text.strip().strip("[]")
    if not body:
        return ()
    chunks = [c + ")" for c in body.split("),") if c]
    chunks[-1] = chunks[-1].rstrip(")") + ")"
    return tuple(parse_ring_element(ring, c) for c in chunks)


def quotient_splits_check(polys: Sequence[Poly]) -> Optional[int]:
    """If every f_i splits with simple roots over its field, the quotient
    by <f_1(x_1), ..., f_k(x_k)> is a product ring of size prod deg f_i."""
    l = 1
    for f in polys:
        if splits_distinct_linear(f.monic()) is None:
            return None
        l *= f.degree
    return l


def tensor_idempotents(ring_factories: Sequence[Sequence[RingElt]],
                       field: Field) -> IdempotentBasis:
    """Combine complete orthogonal idempotent families of GF(q)^{d_1}, ...
    into the family of GF(q)^{prod d_i}, indexed by the mixed-radix rule
    (e_i, f_j) -> position i + (j-1)*m, iterated left to right."""
    if not ring_factories:
        raise InvalidFactorBasis("need at least one factor basis")
    families = []
    for fam in ring_factories:
        d = len(fam)
        sub = ProductRing(field, d)
        if not verify_idempotent_basis(sub, [tuple(e) for e in fam]):
            raise InvalidFactorBasis("factor family is not a complete "
                                     "orthogonal idempotent basis")
        families.append([tuple(e) for e in fam])

    current = families[0]
    for fam in families[1:]:
        m, n = len(current), len(fam)
        combined: list[RingElt] = [()] * (m * n)
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                # tensor e_i (x) f_j laid out at flat position s + (t-1)m
                flat = [0] * (m * n)
                for s in range(1, m + 1):
                    for t in range(1, n + 1):
                        flat[(s - 1) + (t - 1) * m] = field.mul(
                            current[i - 1][s - 1], fam[j - 1][t - 1])
                combined[(i - 1) + (j - 1) * m] = tuple(flat)
        current = combined

    ring = ProductRing(field, len(current))
    return make_basis(ring, current)
