"""Vectorial functions GF(2^n) -> F_2^k and the group-ring form of hyper-bentness.

Output words are k-bit integers; bit j-1 holds the coordinate function f_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .gf2n import ContextMismatch, FieldContext, _bits
from .walsh import BooleanFunction, hyperbent_mask

if TYPE_CHECKING:
    from .psap import UGroup


class DimensionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class VectorialFunction:
    ctx: FieldContext
    k: int
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (self.ctx.size,):
            raise ValueError(f"table length {t.shape} != 2^{self.ctx.n}")
        if not 1 <= self.k <= self.ctx.n:
            raise ValueError(f"output dimension k={self.k} must satisfy 1 <= k <= n={self.ctx.n}")
        if np.any((t < 0) | (t >= 1 << self.k)):
            raise ValueError(f"table entries must be {self.k}-bit words")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)

    def __eq__(self, other):
        return (isinstance(other, VectorialFunction) and self.ctx == other.ctx
                and self.k == other.k and np.array_equal(self.table, other.table))

    def __call__(self, x) -> int:
        return int(self.table[_bits(self.ctx, x)])

    @classmethod
    def zero(cls, ctx: FieldContext, k: int) -> VectorialFunction:
        return cls(ctx, k, np.zeros(ctx.size, dtype=np.int64))

    @classmethod
    def from_components(cls, fs: list[BooleanFunction]) -> VectorialFunction:
        ctx = fs[0].ctx
        table = np.zeros(ctx.size, dtype=np.int64)
        for j, f in enumerate(fs):
            if f.ctx != ctx:
                raise ContextMismatch("components live on different fields")
            table |= f.table.astype(np.int64) << j
        return cls(ctx, len(fs), table)

    def coordinate(self, j: int) -> BooleanFunction:
        """f_j, 1-based."""
        return BooleanFunction(self.ctx, (self.table >> (j - 1)) & 1)

    def translate(self, r: int) -> VectorialFunction:
        return VectorialFunction(self.ctx, self.k, self.table ^ r)


def _dot(v, words):
    return (np.bitwise_count(np.asarray(words, dtype=np.int64) & v) & 1).astype(np.int64)


def component(F: VectorialFunction, v: int) -> BooleanFunction:
    """x -> <v, F(x)> for a nonzero k-bit word v."""
    if not 0 < v < 1 << F.k:
        raise ValueError(f"v={v} must be a nonzero {F.k}-bit word")
    return BooleanFunction(F.ctx, _dot(v, F.table))


def component_tables(F: VectorialFunction) -> np.ndarray:
    """Rows v = 1 .. 2^k - 1 of <v, F(x)>."""
    vs = np.arange(1, 1 << F.k, dtype=np.int64)
    return _dot(vs[:, None], F.table[None, :]).astype(np.uint8)


# --- group ring Z[F_2^k] ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    k: int
    coeffs: np.ndarray  # coeffs[b] = coefficient of b in F_2^k

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64)
        if c.shape != (1 << self.k,):
            raise ValueError(f"need {1 << self.k} coefficients, got {c.shape}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def identity(cls, k: int) -> GroupRingElement:
        """0_H, the group identity as a ring element."""
        c = np.zeros(1 << k, dtype=np.int64)
        c[0] = 1
        return cls(k, c)

    @classmethod
    def whole_group(cls, k: int) -> GroupRingElement:
        """H, the sum of all group elements."""
        return cls(k, np.ones(1 << k, dtype=np.int64))

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement) and self.k == other.k
                and np.array_equal(self.coeffs, other.coeffs))

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        if other.k != self.k:
            raise DimensionError("group ring dimension mismatch")
        return GroupRingElement(self.k, self.coeffs + other.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.k, self.coeffs * int(other))
        if other.k != self.k:
            raise DimensionError("group ring dimension mismatch")
        # convolution over XOR
        out = np.zeros_like(self.coeffs)
        for g, a in enumerate(self.coeffs):
            if a:
                out += a * other.coeffs[np.arange(1 << self.k) ^ g]
        return GroupRingElement(self.k, out)

    __rmul__ = __mul__

    def __repr__(self):
        terms = {int(b): int(c) for b, c in enumerate(self.coeffs) if c}
        return f"GroupRingElement(k={self.k}, {terms})"


def character_matrix(k: int) -> np.ndarray:
    """chi[v, b] = (-1)^<v, b>."""
    idx = np.arange(1 << k, dtype=np.int64)
    return 1 - 2 * _dot(idx[:, None], idx[None, :])


def character_sum(A: GroupRingElement, v: int) -> int:
    """chi_v(A) = sum_b A_b (-1)^<v, b>."""
    if not 0 <= v < 1 << A.k:
        raise ValueError(f"v={v} is not a {A.k}-bit word")
    b = np.arange(1 << A.k, dtype=np.int64)
    return int(np.sum(A.coeffs * (1 - 2 * _dot(v, b))))


def invert_characters(values, k: int) -> GroupRingElement:
    """Recover A from its character sums: A_b = 2^-k sum_v chi_v(A) (-1)^<v, b>."""
    vals = np.asarray(values, dtype=np.int64)
    if vals.shape != (1 << k,):
        raise ValueError(f"need {1 << k} character values, got {vals.shape}")
    raw = character_matrix(k).T @ vals
    if np.any(raw % (1 << k)):
        raise ValueError("character values do not come from an integer group ring element")
    return GroupRingElement(k, raw >> k)


# --- hyper-bentness conditions read off U ---------------------------------


def _check_same_field(F: VectorialFunction, U: UGroup) -> None:
    if F.ctx != U.ctx:
        raise ContextMismatch(f"function on {F.ctx}, U in {U.ctx}")


def restriction_multiset(F: VectorialFunction, U: UGroup) -> GroupRingElement:
    """sum_{u in U} F(u) in Z[F_2^k]."""
    _check_same_field(F, U)
    return GroupRingElement(F.k, np.bincount(F.table[U.elements], minlength=1 << F.k))


def condition3_target(m: int, k: int) -> GroupRingElement:
    """2^(m-k) H + 0_H."""
    if k > m:
        raise DimensionError(f"dimension exceeds m (k={k}, m={m})")
    return GroupRingElement.whole_group(k) * (1 << (m - k)) + GroupRingElement.identity(k)


def check_condition2(F: VectorialFunction, U: UGroup) -> bool:
    """sum_{u in U} (-1)^<v, F(u)> == 1 for every nonzero v, summed directly."""
    _check_same_field(F, U)
    vals = F.table[U.elements]
    for v in range(1, 1 << F.k):
        if int(np.sum(1 - 2 * _dot(v, vals))) != 1:
            return False
    return True


def check_condition3(F: VectorialFunction, U: UGroup) -> bool:
    """Exact coefficient comparison of the U-multiset with 2^(m-k) H + 0_H."""
    target = condition3_target(U.m, F.k)
    return restriction_multiset(F, U) == target


def is_vectorial_hyperbent_oracle(F: VectorialFunction, *, override: bool = False, workers: int = 1) -> bool:
    """Every nonzero component combination passes the definitional hyper-bent oracle."""
    return bool(np.all(hyperbent_mask(F.ctx, component_tables(F), override=override, workers=workers)))
