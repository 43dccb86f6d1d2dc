"""Exact arithmetic in GF(p^m).

A field element is an integer code in [0, q), q = p^m: the coefficient
vector (c_0, ..., c_{m-1}) over GF(p) packs into code = sum(c_i * p**i).
Code 0 is the additive identity, code 1 the multiplicative identity, and
for m = 1 codes coincide with the usual residues mod p.

Construction is deterministic: the modulus is the lexicographically
smallest monic irreducible polynomial of degree m (coefficient tuples
(c_0, ..., c_{m-1}) compared as base-p integers) and gamma is the smallest
element code of multiplicative order q - 1.  Two fields built from the
same (p, m) are identical, so element codes are portable across runs.

Multiplication goes through log/antilog tables keyed by gamma while
q <= table_limit, and falls back to polynomial reduction above it.
"""

from __future__ import annotations

import functools

from .errors import (
    CapExceeded,
    FieldDivisionError,
    NonPrime,
    NotADivisor,
    NotASquareField,
    UnsupportedParams,
)
from .limits import cap


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# Polynomials over GF(p) are little-endian coefficient lists.

def _poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    # g monic
    r = list(f)
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            for j in range(dg):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
    while r and r[-1] == 0:
        r.pop()
    return r


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, mod, p)


def _is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for t in range(p**d):
            g = _digits(t, p, d) + [1]
            if not _poly_rem(f, g, p):
                return False
    return True


def _digits(t: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(t % p)
        t //= p
    return out


class FieldSpec:
    """GF(p^m) with a fixed modulus and primitive element gamma.

    Immutable after construction (lookup tables included); every operation
    is a pure function of its arguments, so instances are safe to share
    across threads.
    """

    __slots__ = ("p", "m", "q", "modulus", "gamma", "_exp", "_log", "_ktables")

    def __init__(self, p: int, m: int, *, order_cap: int | None = None,
                 table_limit: int | None = None):
        if m < 1:
            raise UnsupportedParams(f"extension degree must be >= 1, got {m}")
        if not _is_prime(p):
            raise NonPrime(f"{p} is not prime")
        q = p**m
        limit = order_cap if order_cap is not None else cap("field")
        if q > limit:
            raise CapExceeded(f"field order {q} exceeds cap {limit}")
        self.p = p
        self.m = m
        self.q = q

        for t in range(q):
            f = _digits(t, p, m) + [1]
            if _is_irreducible(f, p):
                self.modulus = tuple(f)
                break

        self.gamma = self._find_primitive()
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._ktables = None
        if q <= (table_limit if table_limit is not None else limit):
            self._build_log_tables()

    # -- construction helpers -------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _poly_mulmod(self._to_poly(a), self._to_poly(b),
                            list(self.modulus), self.p)
        return self._from_poly(prod)

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        base = a
        while e:
            if e & 1:
                r = self._raw_mul(r, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return r

    def _find_primitive(self) -> int:
        order = self.q - 1
        checks = [order // r for r in _prime_factors(order)]
        for g in range(1, self.q):
            if all(self._raw_pow(g, e) != 1 for e in checks):
                return g
        raise AssertionError("no primitive element found")  # pragma: no cover

    def _build_log_tables(self) -> None:
        order = self.q - 1
        exp = [1] * order
        cur = 1
        for i in range(1, order):
            cur = self._raw_mul(cur, self.gamma)
            exp[i] = cur
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _to_poly(self, a: int) -> list[int]:
        return _digits(a, self.p, self.m)

    def _from_poly(self, coeffs: list[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    # -- element coercion ------------------------------------------------

    def felt(self, x: int) -> int:
        """Validate and canonicalize an element code.

        Negative integers are accepted for prime fields only (-1 means p-1).
        """
        if self.m == 1:
            return x % self.p
        if not 0 <= x < self.q:
            raise UnsupportedParams(f"element code {x} out of range for q={self.q}")
        return x

    def from_int(self, t: int) -> int:
        """Image of the integer t in the prime subfield (t mod p copies of 1)."""
        return t % self.p

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        res = 0
        mult = 1
        while a or b:
            res += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return res

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        res = 0
        mult = 1
        while a:
            res += (-a % p) * mult
            a //= p
            mult *= p
        return res

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionError("0 has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldDivisionError("0 has no negative powers")
            return 0
        e %= self.q - 1
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._raw_pow(a, e)

    # -- field automorphisms ----------------------------------------------

    def frobenius(self, a: int, i: int) -> int:
        """a ** (p**i)."""
        if i < 0:
            raise UnsupportedParams("frobenius exponent must be >= 0")
        if a == 0 or self.q == 2:
            return a
        return self.pow(a, pow(self.p, i, self.q - 1))

    @property
    def subfield_order(self) -> int:
        """q0 with q = q0**2, for fields of even extension degree."""
        if self.m % 2:
            raise NotASquareField(f"GF({self.p}^{self.m}) is not a square field")
        return self.p ** (self.m // 2)

    def conjugate(self, a: int) -> int:
        """a ** q0 over GF(q0**2); the involution behind Hermitian duality."""
        return self.pow(a, self.subfield_order)

    # -- multiplicative subgroups -------------------------------------------

    def subgroup_elements(self, k: int) -> list[int]:
        """The order-k subgroup of the nonzero elements, as powers of gamma.

        Element j is gamma**(j*(q-1)/k), so the list starts with 1.
        """
        if k < 1 or (self.q - 1) % k:
            raise NotADivisor(f"{k} does not divide q-1 = {self.q - 1}")
        step = self.pow(self.gamma, (self.q - 1) // k)
        out = [1]
        cur = 1
        for _ in range(k - 1):
            cur = self.mul(cur, step)
            out.append(cur)
        return out

    def power_sum(self, elements: list[int], t: int) -> int:
        """Sum of x**t over the given elements."""
        acc = 0
        for x in elements:
            acc = self.add(acc, self.pow(x, t))
        return acc

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus, self.gamma)
                == (other.p, other.m, other.modulus, other.gamma))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus, self.gamma))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, q={self.q}, gamma={self.gamma})"


@functools.lru_cache(maxsize=None)
def field_new(p: int, m: int) -> FieldSpec:
    """Deterministic GF(p^m) constructor (cached; same (p, m) -> same field)."""
    return FieldSpec(p, m)


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with q = p^m, or raise."""
    if q < 2:
        raise UnsupportedParams(f"{q} is not a prime power")
    for p in _prime_factors(q):
        m = 0
        t = q
        while t % p == 0:
            t //= p
            m += 1
        if t == 1:
            return p, m
    raise UnsupportedParams(f"{q} is not a prime power")
