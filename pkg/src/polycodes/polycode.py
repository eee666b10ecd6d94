"""Polycyclic codes over GF(q)^l, held through their component codes.

A code is an ideal of GF(q)^l[x]/<x^n - a(x)>; with respect to the
standard idempotent basis it splits into l component polycyclic codes
<g_i(x)> of GF(q)[x]/<x^n - a_i(x)>, and that is the canonical stored
form: per-component moduli, monic generators and monic check polynomials.
Generators are normalized monic so structural equality is cheap.

Vector indexing note: a shift vector is stored 0-based as
(a_0, ..., a_{n-1}) with associated polynomial a_0 + a_1 x + ...; the
shift formulas below are the 0-based reading of the usual 1-based
displays.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterator, Optional, Sequence

from .errors import (
    BudgetExceeded,
    DegreeTooLarge,
    LengthMismatch,
    ModulusMismatch,
    NonUnitConstantTerm,
    NotADivisor,
)
from .gf import Field
from .poly import Factorization, Poly, divisors, factor, gcd
from .ring import IdempotentBasis, ProductRing, RingVector, assemble, project, standard_basis


@dataclass(frozen=True)
class PolycyclicCode:
    ring: ProductRing
    n: int
    mod_comps: tuple[Poly, ...]
    gen_comps: tuple[Poly, ...]
    check_comps: tuple[Poly, ...]

    @property
    def field(self) -> Field:
        return self.ring.field

    @property
    def l(self) -> int:
        return self.ring.l

    def a_comps(self) -> tuple[Poly, ...]:
        """The a_i with mod_i = x^n - a_i(x)."""
        F = self.field
        out = []
        for mod in self.mod_comps:
            coeffs = [F.neg(mod.coeff(t)) for t in range(self.n)]
            out.append(Poly.make(F, coeffs))
        return tuple(out)

    def shift_vector(self) -> RingVector:
        """The length-n ring vector a with components a_i padded to n."""
        comps = []
        for a in self.a_comps():
            comps.append([a.coeff(t) for t in range(self.n)])
        return assemble(comps, standard_basis(self.ring))

    def dims(self) -> tuple[int, ...]:
        return tuple(self.n - g.degree for g in self.gen_comps)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.gen_comps)
        return f"PolycyclicCode(q={self.field.q}, l={self.l}, n={self.n}; g=({gens}))"


def code_new(field: Field, l: int, n: int,
             a_comps: Sequence[Poly], g_comps: Sequence[Poly]) -> PolycyclicCode:
    """Validated construction from component shift and generator polys.

    g_i = 1 (full component) and g_i = x^n - a_i (zero component) are both
    legal; non-monic generators are normalized monic.
    """
    ring = ProductRing(field, l)
    if len(a_comps) != l or len(g_comps) != l:
        raise LengthMismatch(f"need {l} component polynomials")
    mods, gens, checks = [], [], []
    for a, g in zip(a_comps, g_comps):
        if a.degree >= n:
            raise DegreeTooLarge(f"deg a = {a.degree} must be < n = {n}")
        if a.coeff(0) == 0:
            raise NonUnitConstantTerm("a(0) = 0 makes the shift constant a non-unit")
        mod_coeffs = [field.neg(a.coeff(t)) for t in range(n)] + [1]
        mod = Poly.make(field, mod_coeffs)
        g = g.monic()
        if g.is_zero or not g.divides(mod):
            raise NotADivisor(f"{g} does not divide {mod}")
        mods.append(mod)
        gens.append(g)
        checks.append(mod // g)
    return PolycyclicCode(ring, n, tuple(mods), tuple(gens), tuple(checks))


def from_modulus_divisors(field: Field, l: int, n: int,
                          mod_comps: Sequence[Poly], g_comps: Sequence[Poly]) -> PolycyclicCode:
    """Internal constructor when the moduli are already validated."""
    ring = ProductRing(field, l)
    gens = tuple(g.monic() for g in g_comps)
    checks = tuple(m // g for m, g in zip(mod_comps, gens))
    return PolycyclicCode(ring, n, tuple(mod_comps), gens, checks)


# ---------------------------------------------------------------------------
# shifts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftSpec:
    """The defining tuple a = (a_0, ..., a_{n-1}) of a shift, a_0 a unit."""

    ring: ProductRing
    a_vec: RingVector

    def __post_init__(self):
        if not self.a_vec:
            raise LengthMismatch("shift vector must be nonempty")
        if not self.ring.is_unit(self.a_vec[0]):
            raise NonUnitConstantTerm(f"a_0 = {self.a_vec[0]} is not a unit")

    @property
    def n(self) -> int:
        return len(self.a_vec)


def shift_spec_of(C: PolycyclicCode) -> ShiftSpec:
    return ShiftSpec(C.ring, C.shift_vector())


def poly_shift(spec: ShiftSpec, v: RingVector) -> RingVector:
    """(0, c_0, ..., c_{n-2}) + c_{n-1} * a."""
    ring = spec.ring
    if len(v) != spec.n:
        raise LengthMismatch(f"vector length {len(v)} != {spec.n}")
    last = v[-1]
    shifted = (ring.zero,) + tuple(v[:-1])
    return tuple(ring.add(s, ring.mul(last, a)) for s, a in zip(shifted, spec.a_vec))


def seq_shift(spec: ShiftSpec, v: RingVector) -> RingVector:
    """(c_1, ..., c_{n-1}, c . a) with the Euclidean inner product in the ring."""
    ring = spec.ring
    if len(v) != spec.n:
        raise LengthMismatch(f"vector length {len(v)} != {spec.n}")
    acc = ring.zero
    for c, a in zip(v, spec.a_vec):
        acc = ring.add(acc, ring.mul(c, a))
    return tuple(v[1:]) + (acc,)


# ---------------------------------------------------------------------------
# codeword enumeration
# ---------------------------------------------------------------------------

def component_codewords(mod: Poly, g: Poly, n: int) -> Iterator[tuple[int, ...]]:
    """All codewords of <g> in GF(q)[x]/<mod> as coefficient tuples.

    deg(g * t) < n for every message t, so no reduction is ever needed.
    """
    F = g.field
    k = n - g.degree
    if k <= 0:
        yield (0,) * n
        return
    for msg in iproduct(F.elements(), repeat=k):
        t = Poly.make(F, list(msg))
        word = g * t
        yield tuple(word.coeff(i) for i in range(n))


def codeword_count(C: PolycyclicCode) -> int:
    total = 1
    for k in C.dims():
        total *= C.field.q ** k
    return total


def codewords(C: PolycyclicCode) -> Iterator[RingVector]:
    """Every codeword exactly once, assembled from component codewords."""
    basis = standard_basis(C.ring)
    comp_lists = [list(component_codewords(m, g, C.n))
                  for m, g in zip(C.mod_comps, C.gen_comps)]
    for combo in iproduct(*comp_lists):
        yield assemble(list(combo), basis)


def membership(C: PolycyclicCode, v: RingVector) -> bool:
    """v is a codeword iff each component polynomial is divisible by g_i."""
    if len(v) != C.n:
        raise LengthMismatch(f"vector length {len(v)} != {C.n}")
    basis = standard_basis(C.ring)
    for i in range(1, C.l + 1):
        comp = Poly.make(C.field, list(project(v, i, basis)))
        if not (comp % C.gen_comps[i - 1]).is_zero:
            return False
    return True


def is_shift_closed(C: PolycyclicCode, spec: ShiftSpec,
                    budget: int = 1 << 20) -> bool:
    """Exhaustive closure of the codeword set under the polycyclic shift."""
    return _closure_check(C, spec, poly_shift, budget)


def is_seq_closed(C: PolycyclicCode, spec: ShiftSpec,
                  budget: int = 1 << 20) -> bool:
    """Exhaustive closure of the codeword set under the sequential shift."""
    return _closure_check(C, spec, seq_shift, budget)


def _closure_check(C, spec, op, budget) -> bool:
    size = codeword_count(C)
    if size > budget:
        raise BudgetExceeded(f"|C| = {size} exceeds budget {budget}")
    words = set(codewords(C))
    return all(op(spec, w) in words for w in words)


# ---------------------------------------------------------------------------
# the code lattice
# ---------------------------------------------------------------------------

def _component_factorizations(field: Field, n: int, a_comps: Sequence[Poly],
                              seed: int) -> list[tuple[Poly, Factorization]]:
    out = []
    for a in a_comps:
        if a.degree >= n:
            raise DegreeTooLarge(f"deg a = {a.degree} must be < n = {n}")
        if a.coeff(0) == 0:
            raise NonUnitConstantTerm("a(0) = 0")
        mod_coeffs = [field.neg(a.coeff(t)) for t in range(n)] + [1]
        mod = Poly.make(field, mod_coeffs)
        out.append((mod, factor(mod, seed)))
    return out


def count_codes(field: Field, l: int, n: int, a_comps: Sequence[Poly],
                seed: int = 0) -> int:
    """prod_i prod_j (mult_ij + 1) over the component factorizations."""
    total = 1
    for _, fact in _component_factorizations(field, n, a_comps, seed):
        for _, mult in fact.factors:
            total *= mult + 1
    return total


def enumerate_codes(field: Field, l: int, n: int, a_comps: Sequence[Poly],
                    seed: int = 0) -> Iterator[PolycyclicCode]:
    """Every divisor combination exactly once, in sorted divisor order."""
    per_comp = []
    mods = []
    for mod, fact in _component_factorizations(field, n, a_comps, seed):
        per_comp.append(divisors(fact, field))
        mods.append(mod)
    for combo in iproduct(*per_comp):
        yield from_modulus_divisors(field, l, n, mods, list(combo))


def code_contains(C: PolycyclicCode, D: PolycyclicCode) -> bool:
    """D subseteq C, i.e. each g_C^(i) divides g_D^(i)."""
    if (C.ring, C.n, C.mod_comps) != (D.ring, D.n, D.mod_comps):
        raise ModulusMismatch("codes live in different ambient quotients")
    return all(gc.divides(gd) for gc, gd in zip(C.gen_comps, D.gen_comps))


def code_is_monic(C: PolycyclicCode) -> bool:
    """Whether the combined generator sum e_i g_i is monic, i.e. all
    component degrees agree."""
    degs = {g.degree for g in C.gen_comps}
    return len(degs) == 1


def code_rank(C: PolycyclicCode) -> Optional[int]:
    """Free rank n - deg over the ring; defined only in the monic case."""
    if not code_is_monic(C):
        return None
    return C.n - C.gen_comps[0].degree


def code_cardinality(C: PolycyclicCode) -> int:
    return codeword_count(C)


# ---------------------------------------------------------------------------
# decomposition with respect to an arbitrary idempotent basis
# ---------------------------------------------------------------------------

def spanning_vectors(C: PolycyclicCode) -> list[RingVector]:
    """An F_q-spanning set: the i-th component's monomial-multiple basis
    embedded on idempotent i."""
    basis = standard_basis(C.ring)
    out = []
    zero = [0] * C.n
    for i, g in enumerate(C.gen_comps):
        for t in range(C.n - g.degree):
            shifted = Poly.x_pow(C.field, t) * g
            comp = [shifted.coeff(j) for j in range(C.n)]
            comps = [list(zero) for _ in range(C.l)]
            comps[i] = comp
            out.append(assemble(comps, basis))
    return out


def decompose(C: PolycyclicCode,
              basis: Optional[IdempotentBasis] = None) -> list[tuple[Poly, Poly]]:
    """Component codes (g_i, x^n - a_i) with respect to the basis.

    For the standard basis this is the stored data; otherwise the
    components are recovered by projecting a spanning set and taking the
    gcd with the transformed modulus.
    """
    if basis is None or basis.is_standard:
        return list(zip(C.gen_comps, C.mod_comps))
    F = C.field
    a_vec = C.shift_vector()
    out = []
    span = spanning_vectors(C)
    for i in range(1, C.l + 1):
        a_i = Poly.make(F, list(project(a_vec, i, basis)))
        mod_coeffs = [F.neg(a_i.coeff(t)) for t in range(C.n)] + [1]
        mod = Poly.make(F, mod_coeffs)
        g = mod
        for vec in span:
            comp = Poly.make(F, list(project(vec, i, basis)))
            g = gcd(g, comp)
            if g.degree == 0:
                g = Poly.one(F)
                break
        out.append((g, mod))
    return out
