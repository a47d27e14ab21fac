"""Group-ring arithmetic over G = F_r*/F_q* = Z_delta and the classical
Singer difference set.

Group-ring elements are dense integer vectors of length delta indexed by the
coset of gamma^i; multiplication is exact integer cyclic convolution (direct,
no FFT).  The difference set D is the image of the trace-one hyperplane, its
product identity D*D^(-1) = q^(k-2) + q^(k-2)(q-1)*G is checked
coefficientwise, character values use angle-exact roots of unity, and the
multiplier set is found by brute force over all exponents coprime to delta
with no multiplier theory assumed.
"""

from __future__ import annotations

import math

import numpy as np

from .characters import gauss_sum
from .errors import DegenerateTowerError, NotCoprimeError
from .tower import FieldTower


class GroupRingElement:
    """Integer coefficient vector over Z_delta with cyclic multiplication."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=np.int64)

    @property
    def delta(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_set(cls, indices, delta: int) -> "GroupRingElement":
        c = np.zeros(delta, dtype=np.int64)
        for i in indices:
            c[i % delta] += 1
        return cls(c)

    @classmethod
    def all_ones(cls, delta: int) -> "GroupRingElement":
        return cls(np.ones(delta, dtype=np.int64))

    @classmethod
    def unit(cls, delta: int, g: int = 0) -> "GroupRingElement":
        c = np.zeros(delta, dtype=np.int64)
        c[g % delta] = 1
        return cls(c)

    def __add__(self, other):
        return GroupRingElement(self.coeffs + other.coeffs)

    def __sub__(self, other):
        return GroupRingElement(self.coeffs - other.coeffs)

    def scale(self, c: int) -> "GroupRingElement":
        return GroupRingElement(self.coeffs * c)

    def __mul__(self, other):
        # exact O(delta^2) cyclic convolution
        full = np.convolve(self.coeffs, other.coeffs)
        d = self.delta
        out = full[:d].copy()
        out[: len(full) - d] += full[d:]
        return GroupRingElement(out)

    def power_map(self, m: int) -> "GroupRingElement":
        """A^(m): send each group element g to g^m (indices i -> m*i mod delta)."""
        d = self.delta
        out = np.zeros(d, dtype=np.int64)
        idx = (np.arange(d, dtype=np.int64) * m) % d
        np.add.at(out, idx, self.coeffs)
        return GroupRingElement(out)

    def translate(self, g: int) -> "GroupRingElement":
        return GroupRingElement(np.roll(self.coeffs, g % self.delta))

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and np.array_equal(
            self.coeffs, other.coeffs
        )

    def __repr__(self):
        return f"GroupRingElement({self.coeffs.tolist()})"


class SingerSet:
    """The classical Singer difference set in Z_delta."""

    def __init__(self, tower: FieldTower, indices: tuple[int, ...]):
        self.tower = tower
        self.indices = indices
        self.delta = tower.delta

    def element(self) -> GroupRingElement:
        return GroupRingElement.from_set(self.indices, self.delta)

    def __len__(self):
        return len(self.indices)


def singer_set(tower: FieldTower) -> SingerSet:
    """Image of {x in F_r* : Tr(x) = 1} in Z_delta: the cosets gamma^i F_q*
    with Tr(gamma^i) != 0.  |D| = q^(k-1)."""
    if tower.k < 2:
        raise DegenerateTowerError("k >= 2 required: q^(k-2) must be an integer")
    idx = tuple(
        int(i)
        for i in range(tower.delta)
        if tower.trace_zero_exp[i] == 0
    )
    D = SingerSet(tower, idx)
    if len(D) != tower.q ** (tower.k - 1):
        raise AssertionError("Singer set has wrong cardinality")
    return D


def verify_dd_identity(tower: FieldTower) -> bool:
    """Exact check of D*D^(-1) = q^(k-2) + q^(k-2)(q-1)*G, coefficientwise."""
    D = singer_set(tower).element()
    prod = D * D.power_map(-1)
    c = tower.q ** (tower.k - 2)
    expected = GroupRingElement.all_ones(tower.delta).scale(c * (tower.q - 1))
    expected.coeffs[0] += c
    return prod == expected


def character_value_of_set(tower: FieldTower, A: GroupRingElement, j: int) -> complex:
    """chi_j(A) = sum_i coeff_i * xi_delta^(i*j), angle-exact."""
    d = A.delta
    i = np.arange(d, dtype=np.int64)
    return complex((A.coeffs * np.exp(2j * np.pi * ((i * j) % d) / d)).sum())


def singer_character_matches_gauss(tower: FieldTower, j: int, tol: float = 1e-6) -> bool:
    """chi_j(D) = -G(phi^((q-1)j))/q for j != 0 mod delta."""
    D = singer_set(tower).element()
    lhs = character_value_of_set(tower, D, j)
    rhs = -gauss_sum(tower, (tower.q - 1) * j) / tower.q
    return abs(lhs - rhs) <= tol


def _gap_string(indices: np.ndarray, delta: int) -> str:
    """Circular gap sequence of a subset of Z_delta, as a comma string."""
    s = np.sort(indices)
    gaps = np.diff(np.concatenate([s, [s[0] + delta]]))
    return ",".join(map(str, gaps.tolist()))


def _is_translate(sorted_d: np.ndarray, gaps_doubled: str, cand: np.ndarray, delta: int) -> bool:
    """Is cand a translate D + g of the set with doubled gap string gaps_doubled?

    Translates of a set are exactly the sets whose circular gap sequence is a
    rotation of the original's, so one substring search over the doubled gap
    string answers the brute-force question over all delta shifts at once.
    """
    g = "," + _gap_string(cand, delta) + ","
    return g in gaps_doubled


def multipliers(tower: FieldTower) -> tuple[int, ...]:
    """All t in Z_delta* with D^(t) a translate of D, by brute force over t.

    No multiplier theorems are assumed; the expected answer {p^j mod delta}
    is re-derived empirically by the caller.
    """
    D = singer_set(tower)
    delta = tower.delta
    idx = np.array(D.indices, dtype=np.int64)
    base = "," + _gap_string(idx, delta) + ","
    doubled = base + base[1:]
    out = []
    for t in range(1, delta):
        if math.gcd(t, delta) != 1:
            continue
        cand = (idx * t) % delta
        if _is_translate(idx, doubled, cand, delta):
            out.append(t)
    return tuple(out)


def expected_multipliers(tower: FieldTower) -> tuple[int, ...]:
    """{p^j mod delta : 0 <= j < m}, the powers of the characteristic."""
    return tuple(sorted({pow(tower.p, j, tower.delta) for j in range(tower.m)}))


def lemma4_F_object(tower: FieldTower, w: int):
    """F = D^(w)*D^(-1) - q^(k-2)(q-1)*G and its classification.

    Returns (F, ("translate", g)) when F = q^(k-2) * g for a single group
    element g (so D^(w) = D*g and w is a multiplier), else
    (F, ("not_translate", None)).
    """
    if tower.k < 2:
        raise DegenerateTowerError("k >= 2 required")
    if math.gcd(w, tower.delta) != 1:
        raise NotCoprimeError(f"gcd({w}, {tower.delta}) != 1")
    D = singer_set(tower).element()
    c = tower.q ** (tower.k - 2)
    F = D.power_map(w) * D.power_map(-1) - GroupRingElement.all_ones(tower.delta).scale(
        c * (tower.q - 1)
    )
    nz = np.nonzero(F.coeffs)[0]
    if len(nz) == 1 and F.coeffs[nz[0]] == c:
        return F, ("translate", int(nz[0]))
    return F, ("not_translate", None)
