"""Exact arithmetic in GF(q), q = p^m.

Elements are plain Python ints in ``[0, q)``: writing an element as
``c_0 + c_1*u + ... + c_{m-1}*u^{m-1}`` in the power basis of the residue
class ``u`` of x, its code is the base-p number ``c_0 + c_1*p + ...``.
Code 0 is the additive identity, code 1 the multiplicative identity, and
for extension fields code p is ``u`` itself.

Multiplication and inversion run off log/antilog tables built once at
construction (q is capped at 2^16), addition is digit arithmetic mod p.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
    UnsupportedSize,
)

MAX_Q = 1 << 16

# Default defining polynomials (ascending coefficients over F_p) for the
# extension fields that actually occur in the bundled corpus.  F_4's is the
# unique irreducible quadratic; the F_8 and F_9 choices make the residue
# class u primitive.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),       # u^2 + u + 1
    (2, 3): (1, 1, 0, 1),    # u^3 + u + 1
    (3, 2): (2, 2, 1),       # u^2 + 2u + 2
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Long division of dense ascending-coefficient polys over F_p."""
    num = list(num)
    dn = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    quot = [0] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] % p
        if c:
            f = (c * inv_lead) % p
            quot[i - dn] = f
            for j, d in enumerate(den):
                num[i - dn + j] = (num[i - dn + j] - f * d) % p
    while num and num[-1] % p == 0:
        num.pop()
    return quot, num


def _fp_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility over F_p by trial division against all monic polys
    of degree <= deg/2 (degrees here are tiny)."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        # all monic polynomials of degree d: low coefficients in base-p order
        for code in range(p ** d):
            cand = []
            c = code
            for _ in range(d):
                cand.append(c % p)
                c //= p
            cand.append(1)
            _, rem = _fp_poly_divmod(list(coeffs), cand, p)
            if not rem:
                return False
    return True


class Field:
    """The finite field GF(p^m) with a fixed defining polynomial.

    Immutable after construction; all element operations are pure, so a
    Field may be shared freely across threads.
    """

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if m < 1:
            raise UnsupportedSize(f"extension degree m={m} must be >= 1")
        q = p ** m
        if q > MAX_Q:
            raise UnsupportedSize(f"q={q} exceeds the supported maximum {MAX_Q}")
        self.p = p
        self.m = m
        self.q = q

        if m == 1:
            self.modulus: tuple[int, ...] = (0, 1)  # placeholder, unused
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI.get((p, m)) or self._find_modulus(p, m)
            mod = tuple(c % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ReducibleModulus(
                    f"modulus must be monic of degree {m} over F_{p}, got {list(modulus)}")
            if not _fp_irreducible(mod, p):
                raise ReducibleModulus(f"modulus {list(mod)} is reducible over F_{p}")
            self.modulus = mod

        self._build_tables()

    @staticmethod
    def _find_modulus(p: int, m: int) -> tuple[int, ...]:
        # deterministic fallback for (p, m) without a pinned default:
        # smallest integer-encoded monic irreducible of degree m
        for code in range(p ** m):
            cand = []
            c = code
            for _ in range(m):
                cand.append(c % p)
                c //= p
            cand.append(1)
            if _fp_irreducible(cand, p):
                return tuple(cand)
        raise ReducibleModulus(f"no irreducible polynomial of degree {m} over F_{p}")

    # --- encoding helpers ---

    def _digits(self, code: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(code % p)
            code //= p
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.p + (d % self.p)
        return code

    def _mul_raw(self, a: int, b: int) -> int:
        """Table-free product: polynomial multiplication mod the modulus."""
        if self.m == 1:
            return (a * b) % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        _, rem = _fp_poly_divmod(prod, list(self.modulus), p)
        rem += [0] * (self.m - len(rem))
        return self._encode(rem)

    def _build_tables(self) -> None:
        q = self.q
        self.primitive = self._find_primitive()
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, self.primitive)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log

    def _find_primitive(self) -> int:
        q = self.q
        if q == 2:
            return 1
        # prime factors of q-1
        fac = []
        n = q - 1
        d = 2
        while d * d <= n:
            if n % d == 0:
                fac.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            fac.append(n)
        for cand in range(2, q):
            if all(self._pow_raw(cand, (q - 1) // r) != 1 for r in fac):
                return cand
        raise AssertionError("no primitive element found")  # unreachable

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    # --- element operations ---

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self._encode([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._encode([-x for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def u_power(self, k: int) -> int:
        """Code of u^k where u is the residue class of x (code p)."""
        if self.m == 1:
            raise FieldMismatch("u is only defined for extension fields")
        return self._pow_raw(self.p, k)

    def parse_element(self, text: str) -> int:
        """Parse an element: a decimal code, or 'u' / 'u^k' for extensions."""
        text = text.strip()
        if text.startswith("u"):
            if text == "u":
                return self.u_power(1)
            if text.startswith("u^"):
                return self.u_power(int(text[2:]))
            raise ValueError(f"cannot parse field element {text!r}")
        code = int(text)
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} out of range [0, {self.q})")
        return code

    # --- identity / comparison ---

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.q}; {list(self.modulus)})"


_FIELD_CACHE: dict[tuple, Field] = {}


def field_make(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> Field:
    """Construct (and cache) a validated field."""
    key = (p, m, tuple(modulus) if modulus is not None else None)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = Field(p, m, modulus)
        _FIELD_CACHE[key] = f
    return f


def field_from_order(q: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """Field of order q, factoring q as p^m."""
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1:
                raise NotPrime(f"q={q} is not a prime power")
            return field_make(p, m, modulus)
    raise NotPrime(f"q={q} is not a prime power")
