"""Table-driven arithmetic in GF(p^m) for small orders.

Elements are integers in ``[0, q)``.  The integer ``e = sum(a_i * p**i)``
encodes the polynomial ``a_0 + a_1 x + ... + a_{m-1} x^{m-1}`` reduced
modulo a fixed monic irreducible polynomial of degree ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import FieldTooLarge, InvOfZero, NonPrimeP

MAX_ORDER = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def to_digits(e: int, p: int, m: int) -> list[int]:
    """Base-p digits of ``e``, least significant first, padded to ``m``."""
    out = []
    for _ in range(m):
        out.append(e % p)
        e //= p
    return out


def from_digits(digits, p: int) -> int:
    e = 0
    for d in reversed(list(digits)):
        e = e * p + int(d)
    return e


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``f`` (coefficient lists, low first)."""
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        coef = a[i] % p
        if coef:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - coef * f[j]) % p
    rem = [x % p for x in a[:df]]
    return rem + [0] * (df - len(rem))


def _monic_polys(degree: int, p: int):
    """Monic polynomials of ``degree`` in increasing encoding order."""
    for low in range(p**degree):
        yield to_digits(low, p, degree) + [1]


def is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if f[0] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(d, p):
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Monic irreducible of degree ``m`` with the smallest encoded lower part."""
    for f in _monic_polys(m, p):
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^m) with precomputed addition, multiplication, negation and inverse tables."""

    p: int
    m: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    inv_table: np.ndarray = field(repr=False)
    primitive: int = 0

    @property
    def q(self) -> int:
        return self.p**self.m

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise InvOfZero("0 has no multiplicative inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        for _ in range(e):
            out = self.mul_table[out, a]
        return int(out)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise InvOfZero("0 has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = int(self.mul_table[x, a])
            k += 1
        return k

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m}


def _build_tables(p: int, m: int, f: list[int]):
    q = p**m
    digits = np.array([to_digits(e, p, m) for e in range(q)], dtype=np.int64)
    weights = p ** np.arange(m, dtype=np.int64)

    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg = ((-digits) % p) @ weights

    # xpow[i][a] = digits of a * x^i, built by repeated multiplication by x.
    xpow = [digits.copy()]
    for _ in range(1, m):
        cur = xpow[-1]
        top = cur[:, m - 1].copy()
        shifted = np.zeros_like(cur)
        shifted[:, 1:] = cur[:, :-1]
        shifted = (shifted - top[:, None] * np.array(f[:m], dtype=np.int64)[None, :]) % p
        xpow.append(shifted)
    stack = np.stack(xpow)  # (m, q, m): stack[i, a] = a * x^i
    prod = np.einsum("bi,iad->abd", digits, stack) % p
    mul = prod @ weights

    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        hits = np.nonzero(mul[a] == 1)[0]
        if len(hits) != 1:
            raise AssertionError(f"modulus {f} does not define a field")
        inv[a] = hits[0]
    return add, mul, neg, inv


@lru_cache(maxsize=None)
def field_new(p: int, m: int = 1) -> FieldSpec:
    """Construct GF(p^m) with a deterministic modulus and primitive element.

    The modulus is the monic irreducible polynomial whose lower coefficients
    encode to the smallest integer; the primitive element is the smallest
    integer-encoded generator of the multiplicative group.
    """
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the order cap {MAX_ORDER}")
    f = smallest_irreducible(p, m)
    add, mul, neg, inv = _build_tables(p, m, f)
    for tab in (add, mul, neg, inv):
        tab.setflags(write=False)
    q = p**m
    spec = FieldSpec(p, m, tuple(f), add, mul, neg, inv, 0)
    for g in range(1, q):
        if spec.order(g) == q - 1:
            object.__setattr__(spec, "primitive", g)
            break
    return spec


def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power ``q``."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                break
            return field_new(p, m)
    raise NonPrimeP(f"{q} is not a prime power")
