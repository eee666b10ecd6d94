"""CSS quantum-code parameters from dual-containing classical codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg, lincode
from .errors import MNotScaledOrthogonal, NotDualContaining, NotNested
from .duality import is_ann_dual_containing
from .gray import GraySpec, gray_image
from .lincode import DEFAULT_BUDGET, LinearCode
from .polycode import PolycyclicCode
from .ring import IdempotentBasis


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    d_exact: bool  # False: d is a certified lower bound
    lam: Optional[int] = None

    def __str__(self) -> str:
        rel = "" if self.d_exact else ">="
        return f"[[{self.n},{self.k},{rel}{self.d}]]"


def css(C1: LinearCode, C2: LinearCode, budget: int = DEFAULT_BUDGET) -> QuantumParams:
    """[[n, k1+k2-n, d]] from nested C2^perp subseteq C1.

    d is the minimum weight over (C1 \\ C2^perp) union (C2 \\ C1^perp)
    when full enumeration fits the budget, otherwise the lower bound
    min(d(C1), d(C2)), flagged.
    """
    if C1.field != C2.field or C1.n != C2.n:
        raise NotNested("codes must share field and length")
    n = C1.n
    d2perp = lincode.dual(C2)
    if not lincode.contains(C1, d2perp):
        raise NotNested("C2^perp is not contained in C1")
    k = C1.k + C2.k - n
    q = C1.field.q
    cost = (q ** C1.k + q ** C2.k) * n
    if cost <= budget and q ** max(C1.k, C2.k) <= (1 << 22):
        d1perp = lincode.dual(C1)
        best = n + 1
        for code, skip in ((C1, d2perp), (C2, d1perp)):
            skip_set = set(lincode.codewords(skip))
            for w in lincode.codewords(code):
                if w in skip_set:
                    continue
                wt = sum(1 for x in w if x)
                if 0 < wt < best:
                    best = wt
        return QuantumParams(n, k, best, True)
    d1, e1 = lincode.min_distance(C1, budget)
    d2, e2 = lincode.min_distance(C2, budget)
    return QuantumParams(n, k, min(d1, d2), False)


def scaled_orthogonality(g: GraySpec) -> int:
    """lambda with M M^T = lambda I; raises if there is none or it is 0."""
    F = g.field
    m = [list(r) for r in g.m_rows]
    mmt = linalg.mat_mul(F, m, [list(col) for col in zip(*m)])
    lam = mmt[0][0]
    ident = linalg.identity(len(m))
    expected = [[F.mul(lam, e) for e in row] for row in ident]
    if lam == 0 or mmt != expected:
        raise MNotScaledOrthogonal("M M^T is not a unit multiple of the identity")
    return lam


def quantum_from_polycyclic(C: PolycyclicCode, g: GraySpec,
                            budget: int = DEFAULT_BUDGET,
                            basis: Optional[IdempotentBasis] = None) -> QuantumParams:
    """[[nl, nl - 2 sum deg g_i, >= d(Psi(C))]] for an annihilator
    dual-containing code and M with M M^T = lambda I."""
    if not is_ann_dual_containing(C):
        raise NotDualContaining("the code is not annihilator dual-containing")
    lam = scaled_orthogonality(g)
    image = gray_image(C, g, basis)
    d, _ = lincode.min_distance(image, budget)
    n = C.n * C.l
    k = n - 2 * sum(gen.degree for gen in C.gen_comps)
    return QuantumParams(n, k, d, False, lam)
