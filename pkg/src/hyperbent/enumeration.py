"""Counting vectorial hyper-bent functions of trace form over GF(2^(2m)).

A function with F(0) = 0 is hyper-bent exactly when its core g: U -> F_2^k
hits 0 exactly 2^(m-k) + 1 times and every nonzero word 2^(m-k) times, so
the count is a product of binomials; each such function has 2^k translates.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._guards import check_guard
from .gf2n import make_field
from .psap import GFunction, lift_g_to_f, make_ugroup
from .vectorial import DimensionError, component_tables
from .walsh import hyperbent_mask

EXHAUSTIVE_LIMIT = 1 << 30
DEFAULT_CAP = 1 << 20
_CHUNK = 1 << 18


@dataclass(frozen=True)
class CountReport:
    m: int
    k: int
    formula_count: int
    core_count: int
    method: str  # "formula" | "exhaustive" | "generated"

    def __post_init__(self):
        if self.formula_count != self.core_count << self.k:
            raise AssertionError("formula_count must equal core_count * 2^k")


def _check_dims(m: int, k: int) -> None:
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    if k > m:
        raise DimensionError(f"k exceeds m (k={k}, m={m})")


def core_count_formula(m: int, k: int) -> int:
    _check_dims(m, k)
    q, fiber = 1 << m, 1 << (m - k)
    out = math.comb(q + 1, fiber + 1)
    for i in range(1, 1 << k):
        out *= math.comb(q - i * fiber, fiber)
    return out


def count_formula(m: int, k: int) -> CountReport:
    """N = 2^k C(2^m+1, 2^(m-k)+1) prod_{i=1}^{2^k-1} C(2^m - i 2^(m-k), 2^(m-k))."""
    core = core_count_formula(m, k)
    return CountReport(m, k, core << k, core, "formula")


def enumerate_g_functions(m: int, k: int, cap: int = DEFAULT_CAP) -> Iterator[GFunction]:
    """Every core g: U -> F_2^k with the hyper-bent fiber sizes, in canonical order.

    The 0-fiber is chosen first, then the fibers of words 1, 2, ... in turn;
    each fiber is a combination of U-indices in lexicographic order.
    """
    total = core_count_formula(m, k)
    if total > cap:
        raise ValueError(f"{total} functions exceed the enumeration cap {cap}")
    U = make_ugroup(make_field(2 * m))
    size, fiber = U.order, 1 << (m - k)
    sizes = [fiber + 1] + [fiber] * ((1 << k) - 1)

    def fill(word: int, free: tuple[int, ...], values: list[int]):
        if word == len(sizes):
            yield GFunction(U, k, np.array(values, dtype=np.int64))
            return
        for chosen in itertools.combinations(free, sizes[word]):
            for j in chosen:
                values[j] = word
            rest = tuple(j for j in free if j not in chosen)
            yield from fill(word + 1, rest, values)

    yield from fill(0, tuple(range(size)), [0] * size)


def _all_maps(size: int, k: int, start: int, stop: int) -> np.ndarray:
    # rows start..stop-1 of the lexicographic list of maps {0..size-1} -> k-bit words
    idx = np.arange(start, stop, dtype=np.int64)
    shifts = k * np.arange(size - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] >> shifts[None, :]) & ((1 << k) - 1)


def exhaustive_count_oracle(m: int, k: int, *, override: bool = False, reverify: bool = True) -> CountReport:
    """Loop over all (2^k)^(2^m+1) maps g: U -> F_2^k and count the ones with the right fiber sizes on U.

    With ``reverify`` the hits are checked again: at m = 2 by the definitional
    hyper-bent oracle on the lifted function, otherwise by the restriction
    sum of every component.
    """
    _check_dims(m, k)
    size = (1 << m) + 1
    total = 1 << (k * size)
    check_guard(total <= EXHAUSTIVE_LIMIT, f"(2^k)^(2^m+1) = {total} maps exceed {EXHAUSTIVE_LIMIT}", override)
    fiber = 1 << (m - k)
    target = np.full(1 << k, fiber, dtype=np.int64)
    target[0] += 1
    U = make_ugroup(make_field(2 * m))
    hits = 0
    for start in range(0, total, _CHUNK):
        maps = _all_maps(size, k, start, min(total, start + _CHUNK))
        counts = np.stack([(maps == b).sum(axis=1) for b in range(1 << k)], axis=1)
        good = maps[np.all(counts == target, axis=1)]
        hits += len(good)
        if reverify and len(good):
            _reverify(U, k, good)
    return CountReport(m, k, hits << k, hits, "exhaustive")


def _reverify(U, k: int, cores: np.ndarray) -> None:
    if U.m == 2:
        for values in cores:
            F = lift_g_to_f(GFunction(U, k, values))
            if not np.all(hyperbent_mask(U.ctx, component_tables(F))):
                raise AssertionError(f"counted core {values.tolist()} is not hyper-bent")
        return
    # F(u) for the lifted F, read through the core
    on_u = cores[:, U.core_index()[U.elements]]
    vs = np.arange(1, 1 << k, dtype=np.int64)
    dots = np.bitwise_count(on_u[:, None, :] & vs[None, :, None]) & 1
    sums = np.sum(1 - 2 * dots.astype(np.int64), axis=2)
    if np.any(sums != 1):
        raise AssertionError("counted core fails the restriction-sum criterion")
