"""Gray maps from (GF(q)^l)^n to GF(q)^{nl} and quasi-shift operators.

Phi flattens per-position idempotent coordinates; the generalized map Psi
right-multiplies each l-block by an invertible matrix M.  The quasi-cyclic
and quasi-sequential operators are implemented by conjugation
Phi . shift . Phi^{-1}, which is exactly their displayed coordinate form;
tests pin the displayed formulas as vectors against this single code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .errors import BudgetExceeded, LengthMismatch, PreconditionViolated
from .gf import Field
from .lincode import LinearCode, from_rows
from .poly import Poly
from .polycode import PolycyclicCode, ShiftSpec, codeword_count, codewords, poly_shift, seq_shift
from .ring import IdempotentBasis, RingVector, standard_basis
from .duality import GramMatrix


@dataclass(frozen=True)
class GraySpec:
    """An invertible block map M acting on each l-block of Phi's output."""

    field: Field
    m_rows: tuple[tuple[int, ...], ...]
    m_inv: tuple[tuple[int, ...], ...]

    @property
    def l(self) -> int:
        return len(self.m_rows)


def gray_spec(field: Field, rows: Sequence[Sequence[int]]) -> GraySpec:
    m = [list(r) for r in rows]
    if any(len(r) != len(m) for r in m):
        raise LengthMismatch("M must be square")
    inv = linalg.inverse(field, m)  # raises on singular input
    return GraySpec(field,
                    tuple(tuple(r) for r in m),
                    tuple(tuple(r) for r in inv))


def identity_gray(field: Field, l: int) -> GraySpec:
    ident = tuple(tuple(1 if i == j else 0 for j in range(l)) for i in range(l))
    return GraySpec(field, ident, ident)


def phi(v: RingVector, basis: IdempotentBasis) -> tuple[int, ...]:
    """Concatenated per-position coordinates with respect to the basis."""
    out: list[int] = []
    for elt in v:
        out.extend(basis.coords(elt))
    return tuple(out)


def phi_inv(flat: Sequence[int], basis: IdempotentBasis) -> RingVector:
    l = basis.ring.l
    if len(flat) % l:
        raise LengthMismatch(f"length {len(flat)} is not a multiple of l = {l}")
    return tuple(basis.combine(flat[t * l:(t + 1) * l]) for t in range(len(flat) // l))


def psi(v: RingVector, g: GraySpec, basis: IdempotentBasis) -> tuple[int, ...]:
    """Phi followed by the blockwise right action of M."""
    F = g.field
    m = [list(r) for r in g.m_rows]
    out: list[int] = []
    for elt in v:
        out.extend(linalg.vec_mat(F, list(basis.coords(elt)), m))
    return tuple(out)


def psi_inv(flat: Sequence[int], g: GraySpec, basis: IdempotentBasis) -> RingVector:
    F = g.field
    l = g.l
    minv = [list(r) for r in g.m_inv]
    coords: list[int] = []
    for t in range(len(flat) // l):
        coords.extend(linalg.vec_mat(F, list(flat[t * l:(t + 1) * l]), minv))
    return phi_inv(coords, basis)


def gray_weight(v: RingVector, basis: IdempotentBasis) -> int:
    return sum(1 for c in phi(v, basis) if c)


def symbol_weight(v: RingVector) -> int:
    """Hamming weight over the alphabet GF(q)^l."""
    return sum(1 for elt in v if any(elt))


def gray_image(C: PolycyclicCode, g: GraySpec,
               basis: Optional[IdempotentBasis] = None) -> LinearCode:
    """Psi(C) as an explicit linear code; its generator rows are the Psi
    images of the monomial-multiple bases of the components, so the
    dimension is nl - sum(deg g_i)."""
    if basis is None:
        basis = standard_basis(C.ring)
    F = C.field
    rows = []
    m = [list(r) for r in g.m_rows]
    for i, gen in enumerate(C.gen_comps):
        for t in range(C.n - gen.degree):
            shifted = Poly.x_pow(F, t) * gen
            row: list[int] = []
            for pos in range(C.n):
                coords = [0] * C.l
                coords[i] = shifted.coeff(pos)
                row.extend(linalg.vec_mat(F, coords, m))
            rows.append(row)
    code = from_rows(F, rows, n=C.n * C.l) if rows else from_rows(F, [], n=C.n * C.l)
    assert code.k == C.n * C.l - sum(gen.degree for gen in C.gen_comps)
    return code


# ---------------------------------------------------------------------------
# quasi-shift operators
# ---------------------------------------------------------------------------

def quasi_shift(w: Sequence[int], spec: ShiftSpec,
                basis: Optional[IdempotentBasis] = None) -> tuple[int, ...]:
    """The index-l block operator conjugate to the polycyclic shift."""
    if basis is None:
        basis = standard_basis(spec.ring)
    if len(w) != spec.n * spec.ring.l:
        raise LengthMismatch(f"vector length {len(w)} != {spec.n * spec.ring.l}")
    return phi(poly_shift(spec, phi_inv(w, basis)), basis)


def quasi_seq_shift(w: Sequence[int], spec: ShiftSpec,
                    basis: Optional[IdempotentBasis] = None) -> tuple[int, ...]:
    """The index-l block operator conjugate to the sequential shift."""
    if basis is None:
        basis = standard_basis(spec.ring)
    if len(w) != spec.n * spec.ring.l:
        raise LengthMismatch(f"vector length {len(w)} != {spec.n * spec.ring.l}")
    return phi(seq_shift(spec, phi_inv(w, basis)), basis)


def _closed_under(code: LinearCode, op) -> bool:
    # linear operator, so closure on a generating set suffices
    return all(linalg.in_row_space(code.field, list(code.gen), list(op(row)))
               for row in code.gen)


def is_quasi_cyclic(code: LinearCode, spec: ShiftSpec,
                    basis: Optional[IdempotentBasis] = None) -> bool:
    return _closed_under(code, lambda w: quasi_shift(w, spec, basis))


def is_quasi_sequential(code: LinearCode, spec: ShiftSpec,
                        basis: Optional[IdempotentBasis] = None) -> bool:
    return _closed_under(code, lambda w: quasi_seq_shift(w, spec, basis))


# ---------------------------------------------------------------------------
# the block Gram matrix
# ---------------------------------------------------------------------------

def block_gram(A: GramMatrix) -> list[list[int]]:
    """The nl x nl matrix with block (i, j) = diag of A[i][j]'s components."""
    n, l = A.n, A.ring.l
    size = n * l
    out = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            elt = A.entries[i][j]
            for c in range(l):
                out[i * l + c][j * l + c] = elt[c]
    return out


def psi_gram_identity_check(C: PolycyclicCode, g: GraySpec,
                            budget: int = 1 << 16) -> bool:
    """Oracle for Psi(C.A) = Psi(C).Abar; requires every coefficient of a
    to be a constant tuple."""
    from .duality import gram_of, vec_times_gram

    a_vec = C.shift_vector()
    for elt in a_vec:
        if any(c != elt[0] for c in elt):
            raise PreconditionViolated(f"coefficient {elt} is not a constant tuple")
    if codeword_count(C) > budget:
        raise BudgetExceeded("code too large for the set-identity check")
    basis = standard_basis(C.ring)
    A = gram_of(C)
    abar = block_gram(A)
    F = C.field
    left = set()
    right = set()
    for c in codewords(C):
        left.add(psi(vec_times_gram(A, c), g, basis))
        right.add(tuple(linalg.vec_mat(F, list(psi(c, g, basis)), abar)))
    return left == right
