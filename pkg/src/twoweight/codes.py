"""Two-zero cyclic codes in trace form and their exact weight distributions.

The central object is the code with check polynomial h_{a1} * h_{a2} whose
codewords are

    c_{a,b} = (Tr(a*beta^(i*a1) + b*beta^(i*a2)))_{i=0..n-1},   beta = gamma^(-1),

for message pairs (a, b) in F_r x F_r.  Weight counting is exact 64-bit
integer arithmetic throughout; the enumeration itself lives in _kernels.
General cyclic codes of length n | r-1 are also supported through their
generator matrices, which provides an independent route to the same
distributions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config
from ._kernels import irreducible_counts, two_zero_counts
from .errors import BudgetExceededError
from .tower import (
    FieldTower,
    cyclotomic_coset,
    minimal_polynomial,
    poly_divmod_q,
    poly_mul_q,
    xn_minus_1,
)


@dataclass(frozen=True)
class TwoZeroCodeSpec:
    """Parameters (tower, a1, a2, n) of a two-zero cyclic code.

    Invariants enforced on construction: n | r-1; gamma^(a1*n) =
    gamma^(a2*n) = 1 (the check polynomial divides x^n - 1); a1 and a2 lie
    in distinct q-cyclotomic cosets mod r-1.
    """

    tower: FieldTower
    a1: int
    a2: int
    n: int

    def __post_init__(self):
        N = self.tower.n1
        object.__setattr__(self, "a1", self.a1 % N)
        object.__setattr__(self, "a2", self.a2 % N)
        if not (1 <= self.n <= N) or N % self.n:
            raise ValueError(f"n = {self.n} does not divide r - 1 = {N}")
        for a in (self.a1, self.a2):
            if (a * self.n) % N:
                raise ValueError(f"gamma^({a}*{self.n}) != 1: h_a does not divide x^n - 1")
        if self.a2 in cyclotomic_coset(self.a1, self.tower.q, N):
            raise ValueError(f"a1 = {self.a1} and a2 = {self.a2} share a q-cyclotomic coset")

    @property
    def dim_expected(self) -> int:
        N = self.tower.n1
        q = self.tower.q
        return len(cyclotomic_coset(self.a1, q, N)) + len(cyclotomic_coset(self.a2, q, N))


def default_length(tower: FieldTower, a1: int, a2: int) -> int:
    """Canonical code length lcm(ord(gamma^a1), ord(gamma^a2)).

    For pairs that are units mod delta this equals (r-1)/gcd(a1, a2, q-1):
    a longer code only repeats columns and a shorter one is impossible.
    """
    N = tower.n1
    return math.lcm(tower.order_of_exponent(a1), tower.order_of_exponent(a2))


@dataclass(frozen=True)
class DerivedParameters:
    """Quantities attached to a spec: v, g, ell, lambda, mu, a2_inv, w.

    Fields that are undefined for a nonconforming spec (non-integral ell or
    lambda, a2 not a unit mod delta) are None.
    """

    delta: int
    v: int
    g: int
    ell: int | None
    lam: int | None
    mu: int | None
    a2_inv: int | None
    w: int | None

    @property
    def v_delta(self) -> int:
        return self.v * self.delta


def derive_parameters(spec: TwoZeroCodeSpec) -> DerivedParameters:
    t = spec.tower
    q, N, delta = t.q, t.n1, t.delta
    g = math.gcd(math.gcd(spec.a1, spec.a2), q - 1)
    v = math.gcd(spec.a1 - spec.a2, q - 1)
    ell = spec.n * g // N if (spec.n * g) % N == 0 else None
    lam = spec.n // delta if spec.n % delta == 0 else None
    mu = (q - 1) // lam if lam and (q - 1) % lam == 0 else None
    if math.gcd(spec.a2, delta) == 1:
        a2_inv = pow(spec.a2, -1, delta) if delta > 1 else 0
        w = (1 + a2_inv * (spec.a1 - spec.a2)) % (v * delta)
    else:
        a2_inv = None
        w = None
    return DerivedParameters(delta, v, g, ell, lam, mu, a2_inv, w)


@dataclass(frozen=True)
class WeightDistribution:
    """Exact map weight -> codeword count for a q-ary [n, dim] code."""

    n: int
    dim: int
    q: int
    counts: dict[int, int]

    def __post_init__(self):
        total = sum(self.counts.values())
        if total != self.q**self.dim:
            raise ValueError(f"counts sum to {total}, expected q^dim = {self.q ** self.dim}")
        if self.counts.get(0, 0) != 1:
            raise ValueError("weight 0 must have count exactly 1")

    def nonzero_weights(self) -> tuple[int, ...]:
        return tuple(sorted(w for w in self.counts if w != 0))

    def is_two_weight(self) -> bool:
        return len(self.nonzero_weights()) == 2

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "weights": {str(w): self.counts[w] for w in sorted(self.counts)},
        }


def codeword(spec: TwoZeroCodeSpec, a: int, b: int) -> np.ndarray:
    """c_{a,b} as an array of subfield codes of length n."""
    t = spec.tower
    N = t.n1
    i = np.arange(spec.n, dtype=np.int64)
    term1 = np.zeros(spec.n, dtype=np.int64)
    term2 = np.zeros(spec.n, dtype=np.int64)
    if a:
        term1 = t.exp[(int(t.log[a]) - i * spec.a1) % N]
    if b:
        term2 = t.exp[(int(t.log[b]) - i * spec.a2) % N]
    return t.trace_table[t.np_add(term1, term2)]


def codeword_weight(spec: TwoZeroCodeSpec, a: int, b: int) -> int:
    return int(np.count_nonzero(codeword(spec, a, b)))


def _reduce_raw(raw: np.ndarray, n: int, q: int, r: int) -> WeightDistribution:
    """Divide the raw r^2 histogram by the codeword multiplicity."""
    total = int(raw.sum())
    if total != r * r:
        raise AssertionError("raw histogram does not cover all message pairs")
    mult = int(raw[0])
    size, rem = divmod(r * r, mult)
    if rem:
        raise AssertionError("multiplicity does not divide the pair count")
    dim = 0
    s = size
    while s > 1:
        s, rem = divmod(s, q)
        if rem:
            raise AssertionError("code size is not a power of q")
        dim += 1
    counts = {}
    for w in np.nonzero(raw)[0]:
        c, rem = divmod(int(raw[w]), mult)
        if rem:
            raise AssertionError("count not divisible by multiplicity")
        counts[int(w)] = c
    return WeightDistribution(n, dim, q, counts)


def weight_distribution(spec: TwoZeroCodeSpec, *, budget: int | None = None) -> WeightDistribution:
    """Exact weight distribution from enumerating all (a, b) in F_r x F_r.

    Raises BudgetExceededError when r^2 * n exceeds the compute budget
    (TWL_BUDGET or the `budget` argument override the default).
    """
    t = spec.tower
    cost = t.r * t.r * spec.n
    limit = config.ops_budget(budget)
    if cost > limit:
        raise BudgetExceededError(f"r^2*n = {cost} exceeds budget {limit}")
    raw = two_zero_counts(
        t.n1, t.delta, spec.n, spec.a1, spec.a2, t.trace_zero_exp, t.log1p
    )
    dist = _reduce_raw(raw, spec.n, t.q, t.r)
    if dist.dim != spec.dim_expected:
        raise AssertionError(
            f"dimension {dist.dim} does not match coset degree sum {spec.dim_expected}"
        )
    return dist


def irreducible_weight_distribution(
    tower: FieldTower, a: int, n: int | None = None
) -> WeightDistribution:
    """Weight distribution of the irreducible cyclic code with check polynomial h_a.

    Default length is ord(gamma^a).  Exact, O(r-1) work.
    """
    N = tower.n1
    a %= N
    if n is None:
        n = tower.order_of_exponent(a)
    raw = irreducible_counts(N, n, a, tower.trace_zero_exp)
    total = int(raw.sum())
    if total != tower.r:
        raise AssertionError("irreducible histogram does not cover F_r")
    mult = int(raw[0])
    deg = len(cyclotomic_coset(a, tower.q, N)) if a else 1
    if mult * tower.q**deg != tower.r:
        raise AssertionError("codeword multiplicity mismatch for irreducible code")
    counts = {int(w): int(raw[w]) // mult for w in np.nonzero(raw)[0]}
    return WeightDistribution(n, deg, tower.q, counts)


def is_one_weight_check_poly(tower: FieldTower, a: int) -> bool:
    """Criterion for h_a to generate (as check polynomial) a one-weight code:
    gcd(a, delta) = 1."""
    return math.gcd(a % tower.n1, tower.delta) == 1


def verify_one_weight(tower: FieldTower, a: int) -> tuple[bool, tuple[int, ...]]:
    """Companion brute-force check: enumerate the irreducible code and report
    whether it has exactly one nonzero weight (and the weights found)."""
    dist = irreducible_weight_distribution(tower, a)
    weights = dist.nonzero_weights()
    return len(weights) == 1, weights


def is_projective(spec: TwoZeroCodeSpec) -> tuple[bool, tuple[int, int, int] | None]:
    """Column check: are the n columns (beta^(i*a1), beta^(i*a2)) pairwise
    non-proportional over F_q*?

    Returns (True, None) or (False, (i, j, y)) where column i = y * column j
    with 0 <= i < j < n and y in F_q* (as a subfield code).  All columns are
    powers of gamma, hence nonzero.
    """
    t = spec.tower
    N, delta = t.n1, t.delta
    i = np.arange(spec.n, dtype=np.int64)
    # columns i, j proportional iff log(u_i) = log(u_j) mod delta and
    # log(w_i) - log(u_i) = log(w_j) - log(u_j) mod N
    keys = ((-i * spec.a1) % delta) * N + ((i * (spec.a1 - spec.a2)) % N)
    uniq, inverse, counts = np.unique(keys, return_inverse=True, return_counts=True)
    if len(uniq) == spec.n:
        return True, None
    first = np.full(len(uniq), spec.n, dtype=np.int64)
    np.minimum.at(first, inverse, i)
    dup_mask = i > first[inverse]
    j = int(i[dup_mask].min())
    ii = int(first[inverse[j]])
    # column ii = y * column j  =>  y = beta^((ii-j)*a1) = gamma^((j-ii)*a1)
    y_code = t.gamma_pow((j - ii) * spec.a1)
    y = int(t.extract_sub[y_code])
    if y < 0:
        raise AssertionError("proportionality factor not in F_q")
    return False, (ii, j, y)


def general_cyclic_code_weights(
    tower: FieldTower,
    n: int,
    coset_reps: set[int] | frozenset[int] | tuple[int, ...],
    *,
    budget: int | None = None,
) -> WeightDistribution:
    """Weight distribution of the cyclic code of length n | r-1 whose check
    polynomial is the product of the minimal polynomials of
    gamma^((r-1)/n * b), b in coset_reps.

    Enumerates the row span of the generator matrix (cyclic shifts of
    (x^n - 1)/h(x)); exact integer counting, independent of the trace-form
    route.
    """
    N = tower.n1
    q = tower.q
    if n < 1 or N % n:
        raise ValueError(f"n = {n} does not divide r - 1 = {N}")
    reps = sorted({min(cyclotomic_coset(b % n, q, n)) for b in coset_reps})
    if len(reps) != len({b % n for b in coset_reps}):
        raise ValueError("coset_reps contains two representatives of one coset")
    if not reps:
        return WeightDistribution(n, 0, q, {0: 1})
    dim = sum(len(cyclotomic_coset(b, q, n)) for b in reps)
    cost = q**dim * n
    limit = config.ops_budget(budget)
    if cost > limit:
        raise BudgetExceededError(f"q^dim*n = {cost} exceeds budget {limit}")

    h = [1]
    scale = N // n
    for b in reps:
        h = poly_mul_q(tower, h, list(minimal_polynomial(tower, scale * b).coeffs))
    gen, rem = poly_divmod_q(tower, xn_minus_1(tower, n), h)
    if rem != [0]:
        raise AssertionError("check polynomial does not divide x^n - 1")
    if len(gen) - 1 != n - dim:
        raise AssertionError("generator degree mismatch")

    rows = np.zeros((dim, n), dtype=np.int64)
    for j in range(dim):
        rows[j, j : j + len(gen)] = gen
    sub = tower.subfield
    words = np.zeros((1, n), dtype=np.int64)
    for j in range(dim):
        stacked = [words]
        row = rows[j]
        for c in range(1, q):
            crow = np.array([sub.mul(c, int(x)) for x in row], dtype=np.int64)
            stacked.append(sub.np_add(words, crow[None, :]))
        words = np.concatenate(stacked, axis=0)
    weights = np.count_nonzero(words, axis=1)
    raw = np.bincount(weights, minlength=n + 1)
    if raw[0] != 1:
        raise AssertionError("generator rows are not independent")
    counts = {int(w): int(raw[w]) for w in np.nonzero(raw)[0]}
    return WeightDistribution(n, dim, q, counts)
