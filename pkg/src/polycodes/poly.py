"""Dense univariate polynomials over GF(q) and their factorization.

Coefficients are stored ascending with no trailing zeros; the zero
polynomial has an empty coefficient tuple.  Factorization runs squarefree
decomposition (with p-th-root extraction when the derivative collapses in
characteristic p), then distinct-degree splitting, then seeded
Cantor-Zassenhaus equal-degree splitting, so results are deterministic for
a given seed.  An independent trial-division factorizer lives in
:func:`factor_trial_division` and serves as the test oracle for moduli
with q^deg small.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    DivisionByZero,
    DuplicateRoots,
    FieldMismatch,
    NotMonic,
    ZeroPolynomial,
)
from .gf import Field


@dataclass(frozen=True)
class Poly:
    field: Field
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: Field, coeffs: Iterable[int]) -> "Poly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def x(field: Field) -> "Poly":
        return Poly(field, (0, 1))

    @staticmethod
    def x_pow(field: Field, k: int) -> "Poly":
        return Poly(field, (0,) * k + (1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.make(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly.make(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        if c == 0:
            return Poly.zero(F)
        return Poly(F, tuple(F.mul(c, a) for a in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        num = list(self.coeffs)
        den = other.coeffs
        dn = len(den) - 1
        inv_lead = F.inv(den[-1])
        quot = [0] * max(len(num) - dn, 0)
        for i in range(len(num) - 1, dn - 1, -1):
            c = num[i]
            if c:
                f = F.mul(c, inv_lead)
                quot[i - dn] = f
                for j, d in enumerate(den):
                    num[i - dn + j] = F.sub(num[i - dn + j], F.mul(f, d))
        return Poly.make(F, quot), Poly.make(F, num)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def evaluate(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            k = i % F.p
            out.append(F.mul(k, self.coeffs[i]) if k else 0)
        return Poly.make(F, out)

    def pow_mod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return " + ".join(terms)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a._check(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


_TERM_RE = re.compile(
    r"^(?:(?P<coef>u(?:\^\d+)?|\d+)\*?)?(?P<var>x(?:\^(?P<exp>\d+))?)?$")


def parse_poly(field: Field, text: str) -> Poly:
    """Parse '[c0,c1,...]' coefficient lists or human 'x^2 + 3x + 1' forms."""
    text = text.strip()
    if text.startswith("["):
        items = text.strip("[]").split(",")
        coeffs = [field.parse_element(t) for t in items if t.strip() != ""]
        return Poly.make(field, coeffs)
    text = text.replace("-", "+-").replace(" ", "")
    coeffs: dict[int, int] = {}
    for raw in text.split("+"):
        if not raw:
            continue
        negate = raw.startswith("-")
        if negate:
            raw = raw[1:]
        m = _TERM_RE.match(raw)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial term {raw!r}")
        coef = field.parse_element(m.group("coef")) if m.group("coef") else 1
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        if negate:
            coef = field.neg(coef)
        coeffs[exp] = field.add(coeffs.get(exp, 0), coef)
    size = max(coeffs) + 1 if coeffs else 0
    return Poly.make(field, [coeffs.get(i, 0) for i in range(size)])


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity), factors monic irreducible and
    sorted by (degree, coefficient tuple)."""

    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def reconstruct(self, field: Field) -> Poly:
        out = Poly(field, (self.unit,))
        for f, mult in self.factors:
            for _ in range(mult):
                out = out * f
        return out

    def __str__(self) -> str:
        parts = [str(self.unit)]
        for f, mult in self.factors:
            parts.append(f"({f})" if mult == 1 else f"({f})^{mult}")
        return " * ".join(parts)


def _pth_root(f: Poly) -> Poly:
    """Inverse of Frobenius on coefficients: g with g(x)^p = f(x), for f
    of the shape sum c_i x^{p*i}."""
    F = f.field
    p = F.p
    root_exp = F.p ** (F.m - 1)  # c -> c^{p^{m-1}} inverts c -> c^p
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(F.pow(f.coeffs[i], root_exp))
    return Poly.make(F, out)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic f -> [(g_i, i)] with f = prod g_i^i, the g_i squarefree and
    pairwise coprime.  Handles derivative collapse in characteristic p."""
    F = f.field
    p = F.p
    one = Poly.one(F)
    if f.degree < 1:
        return []
    result: list[tuple[Poly, int]] = []
    d = f.derivative()
    if d.is_zero:
        inner = squarefree_decomposition(_pth_root(f))
        return [(g, p * m) for g, m in inner]
    c = gcd(f, d)
    w = f // c
    i = 1
    while w != one:
        y = gcd(w, c)
        z = w // y
        if z != one:
            result.append((z, i))
        w = y
        c = c // y
        i += 1
    if c != one:
        inner = squarefree_decomposition(_pth_root(c))
        result.extend((g, p * m) for g, m in inner)
    return result


def distinct_degree_split(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree monic f -> [(product of irreducibles of degree d, d)]."""
    F = f.field
    q = F.q
    out = []
    h = Poly.x(F) % f
    d = 0
    rest = f
    while rest.degree > 2 * (d + 1) - 1 and rest.degree > 0:
        d += 1
        h = h.pow_mod(q, rest)
        g = gcd(h - Poly.x(F), rest)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _equal_degree_factor(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus: f squarefree monic, all factors of degree d."""
    F = f.field
    if f.degree == d:
        return [f]
    while True:
        a = Poly.make(F, [rng.randrange(F.q) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = gcd(a, f)
        if 0 < g.degree < f.degree:
            break
        if F.p == 2:
            # trace map over F_2 splits in characteristic 2
            t = Poly.zero(F)
            b = a % f
            for _ in range(F.m * d):
                t = (t + b) % f
                b = (b * b) % f
            g = gcd(t, f)
        else:
            b = a.pow_mod((F.q ** d - 1) // 2, f)
            g = gcd(b - Poly.one(F), f)
        if 0 < g.degree < f.degree:
            break
    left = _equal_degree_factor(g, d, rng)
    right = _equal_degree_factor(f // g, d, rng)
    return left + right


def factor(f: Poly, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles, deterministic per seed."""
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = f.coeffs[-1]
    work = f.monic()
    rng = random.Random(seed)
    found: list[tuple[Poly, int]] = []
    for sqfree, mult in squarefree_decomposition(work):
        for prod, d in distinct_degree_split(sqfree):
            for irr in _equal_degree_factor(prod, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda fm: fm[0].sort_key())
    return Factorization(unit, tuple(found))


def factor_trial_division(f: Poly) -> Factorization:
    """Independent factorizer: divide out monic irreducibles by increasing
    degree.  Only sensible when q^deg(f) is small; used as a test oracle."""
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    F = f.field
    unit = f.coeffs[-1]
    rest = f.monic()
    found: list[tuple[Poly, int]] = []
    d = 1
    while rest.degree >= 1:
        if d > rest.degree // 2:
            found.append((rest, 1))
            break
        for cand in _monic_irreducibles(F, d):
            mult = 0
            while (rest % cand).is_zero:
                rest = rest // cand
                mult += 1
            if mult:
                found.append((cand, mult))
        d += 1
    found.sort(key=lambda fm: fm[0].sort_key())
    return Factorization(unit, tuple(found))


_IRRED_CACHE: dict[tuple[Field, int], list[Poly]] = {}


def _monic_irreducibles(field: Field, d: int) -> list[Poly]:
    key = (field, d)
    cached = _IRRED_CACHE.get(key)
    if cached is not None:
        return cached
    smaller = [p for e in range(1, d // 2 + 1) for p in _monic_irreducibles(field, e)]
    out = []
    for code in range(field.q ** d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % field.q)
            c //= field.q
        cand = Poly(field, tuple(coeffs) + (1,))
        if all(not (cand % p).is_zero for p in smaller):
            out.append(cand)
    _IRRED_CACHE[key] = out
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin test: x^{q^n} = x mod f and gcd(x^{q^{n/r}} - x, f) = 1 for
    prime r | n."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    F = f.field
    q = F.q
    x = Poly.x(F)
    primes = set()
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.add(m)
    for r in primes:
        h = x.pow_mod(q ** (n // r), f)
        if gcd(h - x, f).degree != 0:
            return False
    return x.pow_mod(q ** n, f) == x % f


def is_squarefree(f: Poly, seed: int = 0) -> bool:
    """True iff no irreducible factor repeats.  Derived from the full
    factorization: the gcd(f, f') criterion alone misreads p-th powers."""
    if f.is_zero:
        raise ZeroPolynomial("squarefreeness undefined for 0")
    if f.degree < 1:
        raise ZeroPolynomial("squarefreeness requires degree >= 1")
    return all(m == 1 for _, m in factor(f, seed).factors)


def divisors(fact: Factorization, field: Field) -> list[Poly]:
    """All monic divisors, sorted by (degree, coefficient codes)."""
    divs = [Poly.one(field)]
    for f, mult in fact.factors:
        powers = [Poly.one(field)]
        for _ in range(mult):
            powers.append(powers[-1] * f)
        divs = [d * p for d in divs for p in powers]
    divs.sort(key=lambda d: d.sort_key())
    return divs


def splits_distinct_linear(f: Poly) -> Optional[list[int]]:
    """The deg-f distinct roots when f = prod (x - r_j) with r_j distinct,
    else None."""
    if not f.is_monic:
        raise NotMonic("splitting test requires a monic polynomial")
    F = f.field
    if f.degree > F.q:
        return None
    roots = [r for r in F.elements() if f.evaluate(r) == 0]
    if len(roots) != f.degree:
        return None
    check = Poly.one(F)
    for r in roots:
        check = check * Poly.make(F, [F.neg(r), 1])
    return roots if check == f else None


def lagrange_idempotents(field: Field, roots: Sequence[int]) -> list[Poly]:
    """e_i(x) = prod_{j!=i} (x - r_j)/(r_i - r_j); e_i(r_j) = delta_ij."""
    if len(set(roots)) != len(roots):
        raise DuplicateRoots(f"roots must be pairwise distinct, got {list(roots)}")
    out = []
    for i, ri in enumerate(roots):
        num = Poly.one(field)
        den = 1
        for j, rj in enumerate(roots):
            if j != i:
                num = num * Poly.make(field, [field.neg(rj), 1])
                den = field.mul(den, field.sub(ri, rj))
        out.append(num.scale(field.inv(den)))
    return out
