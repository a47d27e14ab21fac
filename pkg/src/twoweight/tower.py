"""Finite-field towers F_p < F_q < F_r with full log/antilog tables.

An element of F_r = F_p[x]/(f) is encoded as the integer whose base-p digits
are its coefficients on the basis 1, x, ..., x^(m-1), where x is the residue
of the indeterminate.  The defining polynomial f is the lexicographically
smallest monic primitive polynomial of degree m over F_p (coefficient tuples
compared low-degree first), so the designated primitive element gamma = x and
every table derived from it are reproducible bit for bit.

Multiplication goes through the log/antilog tables; addition is digitwise
mod p.  Towers are immutable after construction and safe to share across
threads or processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import config
from .errors import BaseNotCoprimeError, NotPrimeError, TowerTooLargeError

_TOWER_CACHE: dict[tuple[int, int, int], "FieldTower"] = {}


def is_prime(n: int) -> bool:
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


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
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


def cyclotomic_coset(a: int, base: int, modulus: int) -> tuple[int, ...]:
    """Orbit {a * base^j mod modulus}, sorted ascending.

    The minimal element is the canonical representative.  Raises
    BaseNotCoprimeError unless gcd(base, modulus) = 1.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if math.gcd(base, modulus) != 1:
        raise BaseNotCoprimeError(f"gcd({base}, {modulus}) != 1")
    a %= modulus
    seen = {a}
    cur = (a * base) % modulus
    while cur != a:
        seen.add(cur)
        cur = (cur * base) % modulus
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, ascending degree)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce mod the monic polynomial `mod`
    dm = len(mod) - 1
    for i in range(len(prod) - 1, dm - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(dm):
                prod[i - dm + j] = (prod[i - dm + j] - c * mod[j]) % p
    return _poly_trim(prod[:dm])


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    cur = base[:]
    while e:
        if e & 1:
            result = _poly_mulmod(result, cur, mod, p)
        cur = _poly_mulmod(cur, cur, mod, p)
        e >>= 1
    return result


def _x_has_order(f: list[int], p: int, order: int, order_factors: list[int]) -> bool:
    """True iff the residue of x mod f has multiplicative order exactly `order`.

    With deg f = m and order = p^m - 1 this certifies both irreducibility and
    primitivity: a unit of order p^m - 1 forces the quotient ring to be a field.
    """
    x = [0, 1]
    if _poly_powmod(x, order, f, p) != [1]:
        return False
    for ell in order_factors:
        if _poly_powmod(x, order // ell, f, p) == [1]:
            return False
    return True


def smallest_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree m over F_p.

    Tuples (c_0, ..., c_{m-1}, 1) are compared low-degree first.  c_0 = 0 is
    skipped: x divides such a polynomial, so it is never primitive.
    """
    order = p**m - 1
    factors = prime_factors(order)
    if m == 1:
        # x - g for the smallest generator g of F_p*; c_0 = -g, smallest c_0 wins.
        for c0 in range(1, p):
            f = [c0, 1]
            if _x_has_order(f, p, order, factors):
                return tuple(f)
        raise AssertionError("no degree-1 primitive polynomial found")

    def rec(prefix: list[int]):
        if len(prefix) == m:
            f = prefix + [1]
            if _x_has_order(f, p, order, factors):
                return f
            return None
        # constant term must be nonzero, else x | f
        start = 1 if not prefix else 0
        for c in range(start, p):
            got = rec(prefix + [c])
            if got is not None:
                return got
        return None

    f = rec([])
    if f is None:
        raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")
    return tuple(f)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubfieldPolynomial:
    """Monic polynomial over F_q, coefficients ascending, as subfield codes."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms) if terms else "0"


class FieldTower:
    """The tower F_p < F_q < F_r with q = p^m0, r = q^k, and full tables.

    Use :func:`build_field_tower`; constructing directly bypasses the cache.
    """

    def __init__(self, p: int, m0: int, k: int):
        self.p = p
        self.m0 = m0
        self.k = k
        self.q = p**m0
        self.r = self.q**k
        self.m = m0 * k
        self.n1 = self.r - 1  # order of gamma
        self.delta = (self.r - 1) // (self.q - 1)

        self.prim_poly = smallest_primitive_polynomial(p, self.m)
        self._build_tables()
        self._build_subfield()
        self._build_traces()
        for arr in (
            self.exp,
            self.log,
            self.embed_sub,
            self.extract_sub,
            self.trace_table,
            self.trace_nonzero,
            self.trace_zero_exp,
            self.abs_trace_sub,
            self.abs_trace_exp,
            self.log1p,
        ):
            arr.setflags(write=False)

    # -- construction ------------------------------------------------------

    def _build_tables(self):
        p, r, m = self.p, self.r, self.m
        n1 = self.n1
        # reduction of h * x^m for h in 0..p-1, as element codes
        xm = [(-c) % p for c in self.prim_poly[:m]]
        red = [0] * p
        for h in range(1, p):
            red[h] = sum(((h * c) % p) * p**i for i, c in enumerate(xm))

        exp = np.zeros(n1, dtype=np.int64)
        log = np.full(r, -1, dtype=np.int64)
        cur = 1
        if p == 2:
            for e in range(n1):
                exp[e] = cur
                log[cur] = e
                cur <<= 1
                if cur >= r:
                    cur = (cur - r) ^ red[1]
        else:
            powers = [p**i for i in range(m)]
            for e in range(n1):
                exp[e] = cur
                log[cur] = e
                nxt = cur * p
                hi, lo = divmod(nxt, r)
                if hi:
                    # digitwise add lo + red[hi]
                    acc = 0
                    x, y = lo, red[hi]
                    for pw in powers:
                        acc += ((x % p + y % p) % p) * pw
                        x //= p
                        y //= p
                    nxt = acc
                cur = nxt
        if cur != 1:
            raise AssertionError("gamma does not have order r - 1")
        self.exp = exp
        self.log = log

    def _build_subfield(self):
        p, m0, k, q = self.p, self.m0, self.k, self.q
        if k == 1:
            self.subfield = self
            self.embed_sub = np.arange(q, dtype=np.int64)
            self.extract_sub = np.arange(q, dtype=np.int64)
            return
        sub = build_field_tower(p, m0, 1)
        self.subfield = sub
        embed = np.zeros(q, dtype=np.int64)
        extract = np.full(self.r, -1, dtype=np.int64)
        if m0 == 1:
            # prime subfield: codes 0..p-1 are already the F_p scalars
            embed = np.arange(q, dtype=np.int64)
        else:
            # image of gamma_sub: the smallest gamma^(delta*j) killed by
            # the subfield's defining polynomial
            root = None
            for j in range(1, q - 1):
                cand = int(self.exp[(self.delta * j) % self.n1])
                if self._eval_fp_poly(sub.prim_poly, cand) == 0:
                    root = cand
                    break
            if root is None:
                raise AssertionError("subfield embedding root not found")
            embed[0] = 0
            cur = 1
            for t in range(q - 1):
                embed[sub.exp[t]] = cur
                cur = self.mul(cur, root)
        for y in range(q):
            extract[embed[y]] = y
        self.embed_sub = embed
        self.extract_sub = extract

    def _eval_fp_poly(self, coeffs, x: int) -> int:
        """Evaluate a polynomial with F_p coefficients at an F_r element."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.mul(acc, x)
            acc = self.add(acc, c % self.p)
        return acc

    def _build_traces(self):
        r, q, k, n1 = self.r, self.q, self.k, self.n1
        codes = np.arange(r, dtype=np.int64)
        # Tr_{F_r/F_q}(x) = sum of x^(q^i), i < k, computed on embedded codes
        tr = codes.copy()
        cur = codes.copy()
        for _ in range(k - 1):
            cur = self.np_pow_q(cur)
            tr = self.np_add(tr, cur)
        embedded_trace = tr
        ext = self.extract_sub[embedded_trace]
        if np.any(ext < 0):
            raise AssertionError("trace left the subfield")
        self.trace_table = ext  # code in F_r -> subfield code of Tr(x)
        self.trace_nonzero = embedded_trace != 0
        self.trace_zero_exp = (
            (embedded_trace[self.exp] == 0).astype(np.uint8)
        )  # indexed by exponent e: Tr(gamma^e) == 0

        # absolute trace on the subfield, as integers in [0, p)
        sub = self.subfield
        ycodes = np.arange(q, dtype=np.int64)
        ta = ycodes.copy()
        cur = ycodes.copy()
        for _ in range(self.m0 - 1):
            cur = sub.np_pow_p(cur)
            ta = sub.np_add(ta, cur)
        if np.any(ta >= self.p):
            raise AssertionError("absolute trace left the prime field")
        self.abs_trace_sub = ta  # subfield code -> int mod p
        self.abs_trace_exp = ta[self.trace_table[self.exp]]  # exponent e -> Tr_abs(Tr(gamma^e))

        # log(1 + gamma^f), with -1 where 1 + gamma^f = 0
        elems = self.exp.copy()
        d0 = elems % self.p
        plus_one = elems - d0 + (d0 + 1) % self.p
        self.log1p = self.log[plus_one]

    # -- scalar element arithmetic (codes in [0, r)) ------------------------

    def add(self, x: int, y: int) -> int:
        p = self.p
        if p == 2:
            return x ^ y
        acc, pw = 0, 1
        while x or y:
            acc += ((x % p + y % p) % p) * pw
            x //= p
            y //= p
            pw *= p
        return acc

    def neg(self, x: int) -> int:
        p = self.p
        if p == 2:
            return x
        acc, pw = 0, 1
        while x:
            acc += ((p - x % p) % p) * pw
            x //= p
            pw *= p
        return acc

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(int(self.log[x]) + int(self.log[y])) % self.n1])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.exp[(-int(self.log[x])) % self.n1])

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0 if e else 1
        return int(self.exp[(int(self.log[x]) * e) % self.n1])

    def gamma_pow(self, e: int) -> int:
        return int(self.exp[e % self.n1])

    # -- vectorized arithmetic ----------------------------------------------

    def np_add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        p = self.p
        if p == 2:
            return x ^ y
        xx, yy = np.broadcast_arrays(x, y)
        xx, yy = xx.copy(), yy.copy()
        acc = np.zeros_like(xx)
        pw = 1
        for _ in range(self.m):
            acc += ((xx % p + yy % p) % p) * pw
            xx //= p
            yy //= p
            pw *= p
        return acc

    def np_pow_q(self, x: np.ndarray) -> np.ndarray:
        """Frobenius x -> x^q, elementwise on codes."""
        out = np.zeros_like(x)
        nz = x != 0
        out[nz] = self.exp[(self.log[x[nz]] * self.q) % self.n1]
        return out

    def np_pow_p(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros_like(x)
        nz = x != 0
        out[nz] = self.exp[(self.log[x[nz]] * self.p) % self.n1]
        return out

    # -- tower-level operations ---------------------------------------------

    def trace_to_q(self, x: int) -> int:
        """Tr_{F_r/F_q}(x) as a subfield code."""
        return int(self.trace_table[x])

    def absolute_trace(self, y: int) -> int:
        """Tr_{F_q/F_p}(y) for a subfield code y, as an integer in [0, p)."""
        return int(self.abs_trace_sub[y])

    def order_of_exponent(self, a: int) -> int:
        """Multiplicative order of gamma^a."""
        return self.n1 // math.gcd(a % self.n1, self.n1)

    def subfield_exponents(self) -> np.ndarray:
        """Logs of F_q*: exactly the multiples of delta."""
        return np.arange(0, self.n1, self.delta, dtype=np.int64)

    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "m0": self.m0,
            "k": self.k,
            "q": self.q,
            "r": self.r,
            "delta": self.delta,
            "primitive_poly": list(self.prim_poly),
        }

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m0={self.m0}, k={self.k}, r={self.r})"


def build_field_tower(p: int, m0: int, k: int, *, r_cap: int | None = None) -> FieldTower:
    """Construct (or fetch from cache) the tower F_p < F_{p^m0} < F_{p^(m0*k)}.

    Raises NotPrimeError for composite p and TowerTooLargeError when r
    exceeds the table cap (default 2^20, overridable per call).
    """
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")
    if m0 < 1 or k < 1:
        raise ValueError("m0 and k must be positive")
    cap = config.r_cap(r_cap)
    if p ** (m0 * k) > cap:
        raise TowerTooLargeError(f"r = {p}^{m0 * k} exceeds cap {cap}")
    key = (p, m0, k)
    tower = _TOWER_CACHE.get(key)
    if tower is None:
        tower = FieldTower(p, m0, k)
        _TOWER_CACHE[key] = tower
    return tower


def minimal_polynomial(tower: FieldTower, a: int) -> SubfieldPolynomial:
    """Minimal polynomial of gamma^a over F_q, monic, coefficients as subfield codes."""
    n1 = tower.n1
    a %= n1
    coset = cyclotomic_coset(a, tower.q, n1)
    # product of (x - gamma^(a*q^j)) over the coset, in F_r[x]
    coeffs = [1]
    for e in coset:
        root = tower.gamma_pow(e)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = tower.add(nxt[i + 1], c)
            nxt[i] = tower.add(nxt[i], tower.mul(c, tower.neg(root)))
        coeffs = nxt
    out = []
    for c in coeffs:
        sc = int(tower.extract_sub[c])
        if sc < 0:
            raise AssertionError("minimal polynomial coefficient left F_q")
        out.append(sc)
    return SubfieldPolynomial(tuple(out))


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_q (subfield codes, ascending coefficients)


def poly_mul_q(tower: FieldTower, a: list[int], b: list[int]) -> list[int]:
    sub = tower.subfield
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = sub.add(out[i + j], sub.mul(ai, bj))
    return _poly_trim(out) or [0]


def poly_divmod_q(tower: FieldTower, num: list[int], den: list[int]):
    sub = tower.subfield
    num = num[:]
    dd = len(den) - 1
    lead_inv = sub.inv(den[-1])
    quot = [0] * max(1, len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = sub.mul(c, lead_inv)
            quot[i - dd] = f
            for j, dj in enumerate(den):
                num[i - dd + j] = sub.add(num[i - dd + j], sub.neg(sub.mul(f, dj)))
    rem = _poly_trim(num[:dd]) or [0]
    return (_poly_trim(quot) or [0]), rem


def xn_minus_1(tower: FieldTower, n: int) -> list[int]:
    sub = tower.subfield
    out = [0] * (n + 1)
    out[0] = sub.neg(1)
    out[n] = 1
    return out


def multiplicative_order(base: int, modulus: int) -> int:
    """Order of base in Z_modulus*; raises if not coprime."""
    if math.gcd(base, modulus) != 1:
        raise BaseNotCoprimeError(f"gcd({base}, {modulus}) != 1")
    if modulus == 1:
        return 1
    t, cur = 1, base % modulus
    while cur != 1:
        cur = (cur * base) % modulus
        t += 1
    return t


def lcm(*vals: int) -> int:
    return reduce(math.lcm, vals, 1)
