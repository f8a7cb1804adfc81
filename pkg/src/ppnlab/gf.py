"""Exact arithmetic in GF(p^n) for small prime powers.

An element is an integer index in [0, p^n): the base-p packing of its
coefficient vector in the polynomial basis, constant coefficient in the
least significant digit.  For p = 2 this is the usual bit-string
encoding, and addition is XOR.

Multiplication runs through discrete log/antilog tables built once per
context from a cached primitive element (the least index that generates
the multiplicative group).  Everything on a FieldCtx is immutable after
construction, so contexts are safe to share between threads/workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    NotADivisor,
    NotPrime,
    Reducible,
    SizeLimit,
    ZeroInput,
)

Elt = int  # element index in [0, p^n)

#: hard cap on the order of any constructed field
MAX_FIELD_ORDER = 1 << 20
#: below this order an odd-characteristic context keeps a full q x q addition table
_ADD_TABLE_MAX = 2400


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _prime_factors(x: int) -> list[int]:
    out = []
    f = 2
    while f * f <= x:
        if x % f == 0:
            out.append(f)
            while x % f == 0:
                x //= f
        f += 1
    if x > 1:
        out.append(x)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, ascending degree)
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            f = (c * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * mod[j]) % p
    return _poly_trim([c % p for c in a[:dm]] or [0])


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_mod(out, mod, p)


def _poly_divisible(a, b, p):
    """Whether monic b divides a over F_p."""
    r = _poly_mod(a, b, p)
    return all(c == 0 for c in r)


def _int_to_poly(code: int, p: int) -> list[int]:
    digits = []
    while code:
        digits.append(code % p)
        code //= p
    return digits or [0]


def _poly_to_int(poly, p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(poly))


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    n = len(poly) - 1
    if n < 1 or poly[-1] % p != 1:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for code in range(p**d, 2 * p**d):
            div = _int_to_poly(code, p)
            if _poly_divisible(poly, div, p):
                return False
    return True


def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Monic irreducible of degree n with the least base-p integer encoding."""
    for code in range(p**n, 2 * p**n):
        cand = _int_to_poly(code, p)
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    modulus: tuple[int, ...]  # n+1 base-p coefficients, constant first, monic

    @property
    def order(self) -> int:
        return self.p**self.n

    def descriptor(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}


class FieldCtx:
    """A concrete GF(p^n) with precomputed arithmetic tables."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.q = spec.order
        p, n, q = self.p, self.n, self.q

        self._weights = (p ** np.arange(n)).astype(np.int64)
        idx = np.arange(q, dtype=np.int64)
        digs = np.empty((q, n), dtype=np.int32)
        rem = idx.copy()
        for i in range(n):
            digs[:, i] = rem % p
            rem //= p
        self._digits = digs

        self._neg = self._encode((-digs) % p)
        self._add_table = None
        if p > 2 and q <= _ADD_TABLE_MAX:
            full = self._encode((digs[:, None, :] + digs[None, :, :]) % p)
            self._add_table = full.astype(np.int32)

        # x*d for each prime-field digit d (used to build linear maps)
        self._pm = [self._encode((digs * d) % p) for d in range(p)]

        # multiplication-by-x table, vectorized through the digit arrays
        red = [[(d * (p - m)) % p for m in spec.modulus[:n]] for d in range(p)]
        shifted = np.zeros_like(digs)
        shifted[:, 1:] = digs[:, : n - 1]
        top = digs[:, n - 1]
        corr = np.array(red, dtype=np.int32)[top]
        self._mulx = self._encode((shifted + corr) % p)

        self.g = self._find_primitive()
        self._build_log_tables()
        self._trace_cache: dict[int, np.ndarray] = {}
        self._subfield_cache: dict[int, np.ndarray] = {}

    # -- construction helpers ------------------------------------------------

    def _encode(self, digit_rows: np.ndarray) -> np.ndarray:
        return (digit_rows.astype(np.int64) @ self._weights).astype(np.int32)

    def _slow_mul(self, a: int, b: int) -> int:
        """Digit-fold multiply; only used before the log tables exist."""
        acc = 0
        t = a
        for i in range(self.n):
            d = int(self._digits[b, i])
            if d:
                acc = self._add_scalar(acc, int(self._pm[d][t]))
            t = int(self._mulx[t])
        return acc

    def _slow_pow(self, x: int, e: int) -> int:
        r = 1
        b = x
        while e:
            if e & 1:
                r = self._slow_mul(r, b)
            b = self._slow_mul(b, b)
            e >>= 1
        return r

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        primes = _prime_factors(self.q - 1)
        for cand in range(2, self.q):
            if all(self._slow_pow(cand, (self.q - 1) // r) != 1 for r in primes):
                return cand
        raise AssertionError("no primitive element found")  # unreachable

    def _build_log_tables(self):
        q = self.q
        # mul-by-g as one table, then walk it q-1 times for the exp table
        gd = self._digits[self.g]
        acc = np.zeros(q, dtype=np.int32)
        t = np.arange(q, dtype=np.int32)
        for i in range(self.n):
            d = int(gd[i])
            if d:
                acc = self.add_vec(acc, self._pm[d][t])
            t = self._mulx[t]
        mulg = acc.tolist()

        exp = np.empty(2 * (q - 1), dtype=np.int32)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = mulg[x]
        if x != 1:
            raise AssertionError("primitive element has wrong order")
        exp[q - 1 :] = exp[: q - 1]
        self._exp = exp
        self._log = log

    # -- basic queries ---------------------------------------------------------

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int32)

    def digits(self, x: Elt) -> tuple[int, ...]:
        return tuple(int(v) for v in self._digits[x])

    def encode(self, digits) -> Elt:
        return int(sum(int(d) % self.p * self.p**i for i, d in enumerate(digits)))

    def descriptor(self) -> dict:
        d = self.spec.descriptor()
        d["primitive"] = int(self.g)
        return d

    # -- scalar arithmetic -------------------------------------------------------

    def _add_scalar(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        dsum = (self._digits[x] + self._digits[y]) % self.p
        return int(dsum.astype(np.int64) @ self._weights)

    def add(self, x: Elt, y: Elt) -> Elt:
        if self.p == 2:
            return x ^ y
        if self._add_table is not None:
            return int(self._add_table[x, y])
        return self._add_scalar(x, y)

    def neg(self, x: Elt) -> Elt:
        return int(self._neg[x])

    def sub(self, x: Elt, y: Elt) -> Elt:
        return self.add(x, self.neg(y))

    def mul(self, x: Elt, y: Elt) -> Elt:
        if x == 0 or y == 0:
            return 0
        return int(self._exp[self._log[x] + self._log[y]])

    def inv(self, x: Elt) -> Elt:
        if x == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return int(self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)])

    def pow(self, x: Elt, e: int) -> Elt:
        if x == 0:
            if e == 0:
                return 1  # 0^0 := 1 so monomial tables are total
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return 0
        return int(self._exp[(self._log[x] * e) % (self.q - 1)])

    # -- vector arithmetic (int32 arrays of element indices) ---------------------

    def add_vec(self, xs, ys):
        if self.p == 2:
            return np.bitwise_xor(xs, ys)
        if self._add_table is not None:
            return self._add_table[xs, ys]
        dsum = (self._digits[xs] + self._digits[ys]) % self.p
        return (dsum.astype(np.int64) @ self._weights).astype(np.int32)

    def neg_vec(self, xs):
        return self._neg[xs]

    def sub_vec(self, xs, ys):
        if self.p == 2:
            return np.bitwise_xor(xs, ys)
        return self.add_vec(xs, self._neg[ys])

    def mul_vec(self, xs, ys):
        xs = np.asarray(xs, dtype=np.int32)
        ys = np.asarray(ys, dtype=np.int32)
        xs, ys = np.broadcast_arrays(xs, ys)
        out = np.zeros(xs.shape, dtype=np.int32)
        nz = (xs != 0) & (ys != 0)
        out[nz] = self._exp[self._log[xs[nz]] + self._log[ys[nz]]]
        return out

    def scalar_mul_vec(self, c: Elt, xs):
        if c == 0:
            return np.zeros(np.shape(xs), dtype=np.int32)
        if c == 1:
            return np.asarray(xs, dtype=np.int32).copy()
        xs = np.asarray(xs, dtype=np.int32)
        out = np.zeros(xs.shape, dtype=np.int32)
        nz = xs != 0
        out[nz] = self._exp[self._log[xs[nz]] + self._log[c]]
        return out

    def pow_vec(self, xs, e: int):
        xs = np.asarray(xs, dtype=np.int32)
        out = np.zeros(xs.shape, dtype=np.int32)
        nz = xs != 0
        if e == 0:
            out[:] = 1
            return out
        if e < 0 and not nz.all():
            raise DivisionByZero("negative power of 0")
        out[nz] = self._exp[(self._log[xs[nz]] * e) % (self.q - 1)]
        return out

    def digit_mul_vec(self, d: int, xs):
        """Multiply by the prime-field scalar d (a digit in [0, p))."""
        return self._pm[d % self.p][xs]

    # -- traces, subfields, characters -----------------------------------------

    def trace_table(self, m: int) -> np.ndarray:
        """Tr^n_m as a table over all field elements; result lies in F_{p^m}."""
        if self.n % m != 0:
            raise NotADivisor(f"{m} does not divide {self.n}")
        tab = self._trace_cache.get(m)
        if tab is None:
            acc = np.arange(self.q, dtype=np.int32)
            y = acc
            for _ in range(self.n // m - 1):
                y = self.pow_vec(y, self.p**m)
                acc = self.add_vec(acc, y)
            if not np.array_equal(self.pow_vec(acc, self.p**m), acc):
                raise AssertionError("trace values escaped the subfield")
            acc.flags.writeable = False
            self._trace_cache[m] = acc
            tab = acc
        return tab

    def rel_trace(self, m: int, x: Elt) -> Elt:
        return int(self.trace_table(m)[x])

    def rel_trace_vec(self, m: int, xs):
        return self.trace_table(m)[xs]

    def subfield_elements(self, m: int) -> np.ndarray:
        """Indices of the fixed field of x -> x^(p^m), sorted ascending."""
        if self.n % m != 0:
            raise NotADivisor(f"{m} does not divide {self.n}")
        tab = self._subfield_cache.get(m)
        if tab is None:
            xs = np.arange(self.q, dtype=np.int32)
            tab = xs[self.pow_vec(xs, self.p**m) == xs]
            if tab.size != self.p**m:
                raise AssertionError("subfield has wrong size")
            tab.flags.writeable = False
            self._subfield_cache[m] = tab
        return tab

    def in_subfield(self, m: int, x: Elt) -> bool:
        return self.pow(x, self.p**m) == x

    def is_kth_power(self, x: Elt, k: int) -> bool:
        if x == 0:
            raise ZeroInput("0 is excluded from power-residue tests")
        e = (self.q - 1) // math.gcd(k, self.q - 1)
        return self.pow(x, e) == 1

    def quadratic_character(self, x: Elt) -> int:
        if self.p == 2:
            raise EvenCharacteristic("quadratic character needs odd p")
        if x == 0:
            return 0
        t = self.pow(x, (self.q - 1) // 2)
        if t == 1:
            return 1
        if t != self.neg(1):
            raise AssertionError("x^((q-1)/2) outside {1,-1}")
        return -1

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.n}), modulus={list(self.spec.modulus)})"


_CTX_CACHE: dict[tuple, FieldCtx] = {}


def field_new(p: int, n: int, modulus=None) -> FieldCtx:
    """Construct (or fetch the cached) GF(p^n) context.

    When no modulus is given, the monic irreducible of degree n with the
    least base-p integer encoding is selected, so identical parameters
    always give identical arithmetic.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(n, int) or n < 1:
        raise SizeLimit(f"extension degree must be >= 1, got {n}")
    if p**n > MAX_FIELD_ORDER:
        raise SizeLimit(f"p^n = {p**n} exceeds the limit {MAX_FIELD_ORDER}")
    if modulus is not None:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != n + 1 or mod[-1] != 1:
            raise Reducible(f"modulus must be monic of degree {n}")
        if not is_irreducible(list(mod), p):
            raise Reducible(f"modulus {list(mod)} factors over F_{p}")
    else:
        mod = least_irreducible(p, n)
    key = (p, n, mod)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(FieldSpec(p, n, mod))
        _CTX_CACHE[key] = ctx
    return ctx


def product_order(sizes) -> int:
    return reduce(lambda a, b: a * b, sizes, 1)
