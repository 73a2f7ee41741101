"""Crosscorrelation of binary m-sequences and hyper-bent functions built from it."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .gf2n import FieldContext, FieldElement, make_field, subfield_embedding
from .psap import GFunction, lift_boolean, make_ugroup, restriction_sum, t_core
from .walsh import BooleanFunction, hyperbent_mask

ORACLE_REVERIFY_MAX_N = 12


@dataclass(frozen=True)
class CrosscorrSpectrum:
    m: int
    d: int
    values: dict[int, int]  # C_d(t) -> number of shifts t in 0..2^m-2

    def __post_init__(self):
        if sum(self.values.values()) != (1 << self.m) - 1:
            raise AssertionError("multiplicities must add up to 2^m - 1")

    @property
    def distinct(self) -> int:
        return len(self.values)

    @property
    def is_three_valued(self) -> bool:
        return self.distinct == 3

    @property
    def contains_minus_one(self) -> bool:
        return -1 in self.values


@dataclass(frozen=True)
class DecimationEntry:
    family: str
    d: int
    note: str
    param: int | None = None
    excluded: str | None = field(default=None, compare=False)


FAMILIES = (
    "gold",
    "kasami",
    "cusick_dobbertin_a",
    "cusick_dobbertin_b",
    "canteaut_charpin_dobbertin",
    "dobbertin_hollmann_xiang",
)


def _check_decimation(ctx_m: FieldContext, d: int) -> None:
    if d < 1 or math.gcd(d, ctx_m.order) != 1:
        raise ValueError(f"gcd(d, 2^{ctx_m.n}-1) != 1 for d={d}")


def _correlations(ctx_m: FieldContext, d: int) -> np.ndarray:
    # C_d(t) for t = 0..2^m-2 at once: rows t, columns nonzero x
    xs = np.arange(1, ctx_m.size, dtype=np.int64)
    base = ctx_m.abs_trace(ctx_m.power_table(d)[xs])
    cs = ctx_m.gamma_power(np.arange(ctx_m.order, dtype=np.int64))
    lin = ctx_m.abs_trace(ctx_m.mul(cs[:, None], xs[None, :]))
    return np.sum(1 - 2 * (base[None, :] ^ lin), axis=1)


def crosscorrelation(ctx_m: FieldContext, d: int, t: int) -> int:
    """C_d(t) = sum_{x != 0} (-1)^Tr(x^d + gamma^t x)."""
    _check_decimation(ctx_m, d)
    xs = np.arange(1, ctx_m.size, dtype=np.int64)
    c = ctx_m.gamma_power(t)
    vals = ctx_m.abs_trace(ctx_m.power_table(d)[xs] ^ ctx_m.mul(c, xs))
    return int(np.sum(1 - 2 * vals))


def spectrum(ctx_m: FieldContext, d: int) -> CrosscorrSpectrum:
    _check_decimation(ctx_m, d)
    counts = Counter(_correlations(ctx_m, d).tolist())
    return CrosscorrSpectrum(ctx_m.n, d, dict(sorted(counts.items())))


def _cyclotomic_class(d: int, m: int) -> set[int]:
    order = (1 << m) - 1
    return {(d << i) % order for i in range(m)}


def decimation_catalogue(m: int) -> list[DecimationEntry]:
    """Every family instance whose condition on m holds, excluded ones carrying a reason.

    Gold and Kasami are instantiated for each k in 1..m-1. An instance is
    excluded when the reduced d is not coprime to 2^m - 1, or when it is
    cyclotomically equivalent to 1 (the decimated sequence is the same
    m-sequence, so the correlation is two-valued).
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    order = (1 << m) - 1
    raw: list[tuple[str, int, str, int | None]] = []
    for k in range(1, m):
        if (m // math.gcd(k, m)) % 2:
            raw.append(("gold", (1 << k) + 1, f"d = 2^{k}+1, m/gcd(k,m) odd", k))
            raw.append(("kasami", (1 << (2 * k)) - (1 << k) + 1, f"d = 2^{2 * k}-2^{k}+1, m/gcd(k,m) odd", k))
    if m % 4 == 2:
        raw.append(("cusick_dobbertin_a", (1 << (m // 2)) + (1 << ((m + 2) // 4)) + 1,
                    "d = 2^(m/2)+2^((m+2)/4)+1, m = 2 mod 4", None))
        raw.append(("cusick_dobbertin_b", (1 << ((m + 2) // 2)) + 3, "d = 2^((m+2)/2)+3, m = 2 mod 4", None))
    if m % 2:
        raw.append(("canteaut_charpin_dobbertin", (1 << ((m - 1) // 2)) + 3, "d = 2^((m-1)/2)+3, m odd", None))
    if m % 4 == 1:
        raw.append(("dobbertin_hollmann_xiang", (1 << ((m - 1) // 2)) + (1 << ((m - 1) // 4)) - 1,
                    "d = 2^((m-1)/2)+2^((m-1)/4)-1, m = 1 mod 4", None))
    elif m % 4 == 3:
        raw.append(("dobbertin_hollmann_xiang", (1 << ((m - 1) // 2)) + (1 << ((3 * m - 1) // 4)) - 1,
                    "d = 2^((m-1)/2)+2^((3m-1)/4)-1, m = 3 mod 4", None))
    out = []
    for family, d, note, param in raw:
        dr = d % order
        excluded = None
        if math.gcd(dr, order) != 1:
            excluded = f"gcd({dr}, {order}) = {math.gcd(dr, order)}"
        elif dr in _cyclotomic_class(1, m):
            excluded = f"d = {dr} is a power of 2 mod {order}: the decimation is trivial"
        out.append(DecimationEntry(family, dr, note, param, excluded))
    return out


def known_decimations(m: int) -> list[DecimationEntry]:
    """Catalogue instances valid at m (see :func:`decimation_catalogue`)."""
    return [e for e in decimation_catalogue(m) if e.excluded is None]


# --- hyper-bent functions from three-valued crosscorrelation ----------------------


def corollary2_core(ctx: FieldContext, u0, d: int, lam: int) -> GFunction:
    """g(u) = Tr_1^m(G(u)^d + lam G(u)), G the field-valued T_{u0} core; lam an m-bit word."""
    m = ctx.n // 2
    small = make_field(m)
    G = t_core(ctx, u0).values
    vals = small.abs_trace(small.pow(G, d) ^ small.mul(lam, G))
    return GFunction(make_ugroup(ctx), 1, vals)


def corollary2_function(ctx: FieldContext, u0, d: int, lam) -> BooleanFunction:
    """x -> Tr_1^m(T_{u0}(x)^d) + Tr_1^n(lam u0 sum_{i=1}^{2^(m-1)} x^(i(2^m-1))), lam in the subfield."""
    emb = subfield_embedding(ctx, ctx.n // 2)
    lam_bits = lam.bits if isinstance(lam, FieldElement) else int(lam)
    word = int(emb.to_small[lam_bits])
    if word < 0:
        raise ValueError("lambda must lie in F_{2^m}")
    return lift_boolean(corollary2_core(ctx, u0, d, word))


def corollary2_search(ctx: FieldContext, u0, d: int, *, verify: bool = True) -> FieldElement:
    """First lam in F*_{2^m} (increasing word order) whose function has restriction sum 1.

    The hit is re-checked with the definitional oracle when n <= 12 and
    ``verify`` is set. Returns lam as an element of the degree-m subfield of ctx.
    """
    m = ctx.n // 2
    small = make_field(m)
    _check_decimation(small, d)
    spec = spectrum(small, d)
    if not spec.is_three_valued:
        raise ValueError(f"C_d(t) is {spec.distinct}-valued for d={d}, m={m}; need three-valued")
    U = make_ugroup(ctx)
    emb = subfield_embedding(ctx, m)
    for lam in range(1, small.size):
        f = lift_boolean(corollary2_core(ctx, u0, d, lam))
        if restriction_sum(f, U) == 1:
            if verify and ctx.n <= ORACLE_REVERIFY_MAX_N and not hyperbent_mask(ctx, f.table)[0]:
                raise AssertionError(f"lambda word {lam} passes the U-sum but not the oracle")
            return FieldElement(ctx, int(emb.to_big[lam]))
    raise RuntimeError(f"no lambda found for u0={int(u0)}, d={d}: contradicts the existence claim")
