"""Exact arithmetic in GF(p^m).

Elements are encoded by their integer index in [0, q): the polynomial
sum(c_i x^i) with digits c_i in [0, p) is stored as sum(c_i p^i).  Index 0
is the additive zero and index 1 the multiplicative one.  The canonical
enumeration of the field is simply ascending index, so alpha_1 = 0 and
alpha_2 = 1; every construction downstream inherits reproducibility from
this order.

Vectorized operations work on numpy arrays of indices.  Addition is done
digit-wise in base p (XOR for p = 2); multiplication, inversion and powers
go through discrete log/antilog tables built from a primitive element.
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero, FieldTooLarge, NotPrime, ZeroToNegativePower

MAX_Q = 1 << 16

# Irreducible moduli for the extension fields with q <= 64, as coefficient
# tuples (c_0, c_1, ..., c_m) with c_m = 1.  Each is the least monic
# irreducible of its degree under the integer encoding sum(c_i p^i) of the
# non-leading coefficients.
MODULUS_TABLE = {
    (2, 2): (1, 1, 1),            # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),         # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),      # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),   # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
    (3, 2): (1, 0, 1),            # x^2 + 1
    (3, 3): (1, 2, 0, 1),         # x^3 + 2x + 1
    (5, 2): (2, 0, 1),            # x^2 + 2
    (7, 2): (1, 0, 1),            # x^2 + 1
    (2, 1): (0, 1),
    (3, 1): (0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(_poly_trim(a)) - 1 >= dm:
        a = _poly_trim(a)
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, ci in enumerate(mod):
            a[shift + i] = (a[shift + i] - factor * ci) % p
    return _poly_trim(a)


def _poly_from_index(idx: int, p: int):
    digits = []
    while idx:
        digits.append(idx % p)
        idx //= p
    return digits


def _poly_to_index(c, p: int) -> int:
    idx = 0
    for ci in reversed(_poly_trim(list(c))):
        idx = idx * p + ci
    return idx


def _is_irreducible(mod, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(mod) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for tail in range(p**d):
            cand = _poly_from_index(tail, p) + [0] * (d - len(_poly_from_index(tail, p)))
            cand = cand[:d] + [1]
            if not _poly_mod(mod, cand, p):
                return False
    return True


def _search_modulus(p: int, m: int):
    """Least monic irreducible of degree m by integer encoding of the tail."""
    if m == 1:
        return (0, 1)
    for tail in range(p**m):
        digits = _poly_from_index(tail, p)
        digits += [0] * (m - len(digits))
        cand = digits[:m] + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _factorize(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """GF(p^m) with a fixed element enumeration and vectorized arithmetic."""

    def __init__(self, p: int, m: int, modulus=None):
        if not _is_prime(p):
            raise NotPrime(f"p = {p} is not prime")
        if m < 1:
            raise FieldTooLarge(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_Q:
            raise FieldTooLarge(f"q = {q} exceeds the cap {MAX_Q}")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = MODULUS_TABLE.get((p, m))
        if modulus is None:
            modulus = _search_modulus(p, m)
        modulus = tuple(int(c) % p for c in modulus[:-1]) + (1,)
        if len(modulus) != m + 1:
            raise FieldTooLarge(f"modulus degree {len(modulus) - 1} != {m}")
        if not _is_irreducible(list(modulus), p):
            raise FieldTooLarge(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        # base-p digit matrix for vectorized addition
        idx = np.arange(q, dtype=np.int64)
        digits = np.empty((q, m), dtype=np.int64)
        rest = idx.copy()
        for i in range(m):
            digits[:, i] = rest % p
            rest //= p
        self._digits = digits
        self._weights = p ** np.arange(m, dtype=np.int64)
        # discrete log / antilog from a primitive element
        g = self._find_generator()
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_slow(acc, g)
        assert acc == 1
        self._exp = exp
        self._log = log
        self.generator = g

    def _mul_slow(self, x: int, y: int) -> int:
        a = _poly_from_index(x, self.p)
        b = _poly_from_index(y, self.p)
        if not a or not b:
            return 0
        return _poly_to_index(_poly_mod(_poly_mul(a, b, self.p), list(self.modulus), self.p), self.p)

    def _order(self, x: int) -> int:
        k, acc = 1, x
        while acc != 1:
            acc = self._mul_slow(acc, x)
            k += 1
        return k

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        n = self.q - 1
        primes = _factorize(n)
        for g in range(2, self.q):
            if all(self._pow_slow(g, n // r) != 1 for r in primes):
                return g
        raise AssertionError("no generator found")  # unreachable

    def _pow_slow(self, x: int, k: int) -> int:
        acc = 1
        base = x
        while k:
            if k & 1:
                acc = self._mul_slow(acc, base)
            base = self._mul_slow(base, base)
            k >>= 1
        return acc

    # -- element enumeration --------------------------------------------------

    @property
    def element_order(self) -> np.ndarray:
        """alpha_1, ..., alpha_q in canonical order (ascending index)."""
        return np.arange(self.q, dtype=np.int64)

    def alpha(self, i: int) -> int:
        """alpha_i for i in [1, q]."""
        return i - 1

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return int(self.add_arr(np.int64(x), np.int64(y)))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def neg(self, x: int) -> int:
        return int(self.neg_arr(np.int64(x)))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self._exp[(self._log[x] + self._log[y]) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return int(self._exp[(-self._log[x]) % (self.q - 1)])

    def pow_conv(self, x: int, k: int) -> int:
        """x**k with the convention 0**0 = 1."""
        if x == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroToNegativePower("0 raised to a negative power")
            return 0
        return int(self._exp[(self._log[x] * k) % (self.q - 1)])

    # -- vectorized arithmetic ------------------------------------------------

    def add_arr(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.p == 2:
            return x ^ y
        if self.m == 1:
            return (x + y) % self.p
        d = (self._digits[x] + self._digits[y]) % self.p
        return d @ self._weights

    def neg_arr(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.p == 2:
            return x.copy()
        if self.m == 1:
            return (-x) % self.p
        d = (-self._digits[x]) % self.p
        return d @ self._weights

    def mul_arr(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        nz = (x != 0) & (y != 0)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        if np.any(nz):
            xs = np.broadcast_to(x, out.shape)[nz]
            ys = np.broadcast_to(y, out.shape)[nz]
            out[nz] = self._exp[(self._log[xs] + self._log[ys]) % (self.q - 1)]
        return out

    def inv_arr(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[x]) % (self.q - 1)]

    def pow_arr(self, x, k: int):
        """Elementwise x**k with 0**0 = 1."""
        x = np.asarray(x, dtype=np.int64)
        if k == 0:
            return np.ones_like(x)
        nz = x != 0
        if k < 0 and not np.all(nz):
            raise ZeroToNegativePower("0 raised to a negative power")
        out = np.zeros_like(x)
        out[nz] = self._exp[(self._log[x[nz]] * k) % (self.q - 1)]
        return out

    # -- misc -----------------------------------------------------------------

    def serialize(self) -> str:
        return f"{self.p} {self.m} " + "-".join(str(c) for c in self.modulus)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m}, q={self.q})"


_FIELD_CACHE: dict = {}


def field_new(p: int, m: int) -> Field:
    """Construct (and cache) GF(p^m)."""
    key = (p, m)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, m)
    return _FIELD_CACHE[key]


def field_of_size(q: int) -> Field:
    """GF(q) for a prime power q."""
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1:
                break
            return field_new(p, m)
    raise NotPrime(f"{q} is not a prime power")
