"""Truth tables, (extended) Walsh-Hadamard spectra and the bent / hyper-bent oracles."""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._guards import check_guard
from .gf2n import FieldContext, FieldElement, _bits

ORACLE_MAX_N = 16
# rows * 2^n budget per batched transform
_BATCH_CELLS = 1 << 22


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    ctx: FieldContext
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.uint8)
        if t.shape != (self.ctx.size,):
            raise ValueError(f"truth table length {t.shape} != 2^{self.ctx.n}")
        if np.any(t > 1):
            raise ValueError("truth table entries must be 0 or 1")
        object.__setattr__(self, "table", t)

    def __eq__(self, other):
        return (isinstance(other, BooleanFunction) and self.ctx == other.ctx
                and np.array_equal(self.table, other.table))

    def __call__(self, x) -> int:
        return int(self.table[_bits(self.ctx, x)])

    @classmethod
    def zero(cls, ctx: FieldContext) -> BooleanFunction:
        return cls(ctx, np.zeros(ctx.size, dtype=np.uint8))

    @classmethod
    def trace_monomial(cls, ctx: FieldContext, a: int, e: int = 1) -> BooleanFunction:
        """x -> Tr_1^n(a x^e)."""
        return cls(ctx, ctx.abs_trace(ctx.mul(a, ctx.power_table(e))))

    def signs(self) -> np.ndarray:
        return 1 - 2 * self.table.astype(np.int64)


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    values: np.ndarray  # values[lam], lam indexed by field element

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.values.tolist()).items()))

    def parseval_ok(self) -> bool:
        n2 = len(self.values)
        return int(np.sum(self.values.astype(np.int64) ** 2)) == n2 * n2


def coprime_exponents(n: int) -> list[int]:
    """All t in [1, 2^n - 2] with gcd(t, 2^n - 1) = 1 (t = 1 when n = 1)."""
    order = (1 << n) - 1
    if order == 1:
        return [1]
    return [t for t in range(1, order) if math.gcd(t, order) == 1]


def cyclotomic_representatives(n: int) -> list[int]:
    """Smallest member of each 2-cyclotomic coset mod 2^n - 1 among the coprime exponents."""
    order = (1 << n) - 1
    seen: set[int] = set()
    reps = []
    for t in coprime_exponents(n):
        if t in seen:
            continue
        reps.append(t)
        c = t
        for _ in range(n):
            seen.add(c)
            c = (2 * c) % order
    return reps


def _check_exponent(ctx: FieldContext, t: int) -> None:
    if t < 1 or math.gcd(t, ctx.order) != 1:
        raise ValueError(f"exponent t={t} is not a positive integer coprime to 2^{ctx.n}-1")


def extended_walsh(f: BooleanFunction, lam, t: int) -> int:
    """sum_x (-1)^(f(x) + Tr(lam x^t)), summed directly over all 2^n inputs."""
    ctx = f.ctx
    _check_exponent(ctx, t)
    lam = _bits(ctx, lam)
    lin = ctx.abs_trace(ctx.mul(lam, ctx.power_table(t)))
    return int(np.sum(1 - 2 * (f.table.astype(np.int64) ^ lin)))


def fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalised Walsh-Hadamard butterfly along the last axis (returns a new array)."""
    a = np.array(a, dtype=np.int64)
    size = a.shape[-1]
    if size & (size - 1):
        raise ValueError("length must be a power of two")
    lead = a.shape[:-1]
    h = 1
    while h < size:
        v = a.reshape(lead + (size // (2 * h), 2, h))
        x = v[..., 0, :].copy()
        y = v[..., 1, :]
        v[..., 0, :] += y
        v[..., 1, :] = x - y
        h *= 2
    return a


def _dual_index(ctx: FieldContext) -> np.ndarray:
    # Tr(lam y) = <w(lam), y> with w(lam)_i = Tr(lam x^i); returns w as an index array
    els = ctx.elements()
    w = np.zeros(ctx.size, dtype=np.int64)
    for i in range(ctx.n):
        w |= ctx.abs_trace(ctx.mul(els, 1 << i)) << i
    return w


def _inverse_exponent(ctx: FieldContext, t: int) -> int:
    return pow(t, -1, ctx.order) if ctx.order > 1 else 1


def batch_spectra(ctx: FieldContext, tables: np.ndarray, t: int) -> np.ndarray:
    """Extended spectra lam -> chi_f(lam, t) for a stack of truth tables (shape (..., 2^n)).

    Substituting y = x^t turns the sum into an ordinary Walsh transform of
    f(y^(1/t)); the transform is indexed by dot-product masks, mapped back to
    lam through the trace dual.
    """
    _check_exponent(ctx, t)
    perm = ctx.power_table(_inverse_exponent(ctx, t))
    signs = 1 - 2 * np.asarray(tables, dtype=np.int64)[..., perm]
    return fwht(signs)[..., _dual_cache(ctx)]


_DUALS: dict[FieldContext, np.ndarray] = {}


def _dual_cache(ctx: FieldContext) -> np.ndarray:
    if ctx not in _DUALS:
        _DUALS[ctx] = _dual_index(ctx)
    return _DUALS[ctx]


def full_spectrum(f: BooleanFunction, t: int = 1) -> WalshSpectrum:
    return WalshSpectrum(batch_spectra(f.ctx, f.table, t))


def naive_spectrum(f: BooleanFunction, t: int = 1) -> np.ndarray:
    """Definitional double sum over (lam, x); O(4^n), reference only."""
    ctx = f.ctx
    _check_exponent(ctx, t)
    els = ctx.elements()
    xt = ctx.power_table(t)
    lin = ctx.abs_trace(ctx.mul(els[:, None], xt[None, :]))
    return np.sum(1 - 2 * (f.table[None, :].astype(np.int64) ^ lin), axis=1)


def _require_even(ctx: FieldContext) -> None:
    if ctx.n % 2:
        raise ValueError(f"n={ctx.n} is odd; bentness needs even n")


def is_bent(f: BooleanFunction) -> bool:
    _require_even(f.ctx)
    target = 1 << (f.ctx.n // 2)
    return bool(np.all(np.abs(full_spectrum(f, 1).values) == target))


def _failures(ctx: FieldContext, tables: np.ndarray, exponents: list[int]) -> np.ndarray:
    """Per table: does any t in exponents give a spectral value other than +-2^(n/2)."""
    tables = np.atleast_2d(tables)
    target = 1 << (ctx.n // 2)
    dual = _dual_cache(ctx)
    bad = np.zeros(len(tables), dtype=bool)
    rows = max(1, _BATCH_CELLS // ctx.size)
    for start in range(0, len(tables), rows):
        alive = ~bad[start:start + rows]
        chunk = tables[start:start + rows]
        # several exponents per transform when the chunk is small
        per = max(1, rows // len(chunk))
        for g in range(0, len(exponents), per):
            if not alive.any():
                break
            idx = np.flatnonzero(alive)
            for t in exponents[g:g + per]:
                _check_exponent(ctx, t)
            perms = np.stack([ctx.power_table(_inverse_exponent(ctx, t)) for t in exponents[g:g + per]])
            signs = 1 - 2 * chunk[idx][:, perms].astype(np.int64)
            spec = fwht(signs)[..., dual]
            hit = np.any(np.abs(spec) != target, axis=(-2, -1))
            alive[idx[hit]] = False
        bad[start:start + rows] = ~alive
    return bad


def hyperbent_mask(ctx: FieldContext, tables: np.ndarray, *, exponents: list[int] | None = None,
                   override: bool = False, workers: int = 1) -> np.ndarray:
    """Definitional hyper-bent verdict for each row of ``tables``.

    Every t coprime to 2^n - 1 in [1, 2^n - 2] is tried unless ``exponents``
    is given. ``workers`` > 1 splits the t range across threads.
    """
    _require_even(ctx)
    check_guard(ctx.n <= ORACLE_MAX_N, f"hyper-bent oracle capped at n <= {ORACLE_MAX_N}", override)
    ts = coprime_exponents(ctx.n) if exponents is None else list(exponents)
    tables = np.atleast_2d(np.asarray(tables, dtype=np.uint8))
    if workers <= 1 or len(ts) < 2:
        return ~_failures(ctx, tables, ts)
    parts = [ts[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        bad = list(pool.map(lambda p: _failures(ctx, tables, p), parts))
    return ~np.logical_or.reduce(bad)


def is_hyperbent_oracle(f: BooleanFunction, *, override: bool = False, workers: int = 1) -> bool:
    return bool(hyperbent_mask(f.ctx, f.table, override=override, workers=workers)[0])


def is_hyperbent_fast(f: BooleanFunction, *, override: bool = False) -> bool:
    """Same verdict as the oracle, one t per cyclotomic coset (chi(lam, 2t) = chi(lam^2, t))."""
    return bool(hyperbent_mask(f.ctx, f.table, exponents=cyclotomic_representatives(f.ctx.n),
                               override=override)[0])


def hyperbent_witness(f: BooleanFunction, *, override: bool = False):
    """First (lam, t, value) with value != +-2^(n/2), scanning t then lam in index order; None if hyper-bent."""
    ctx = f.ctx
    _require_even(ctx)
    check_guard(ctx.n <= ORACLE_MAX_N, f"hyper-bent oracle capped at n <= {ORACLE_MAX_N}", override)
    target = 1 << (ctx.n // 2)
    for t in coprime_exponents(ctx.n):
        spec = batch_spectra(ctx, f.table, t)
        bad = np.flatnonzero(np.abs(spec) != target)
        if len(bad):
            lam = int(bad[0])
            return FieldElement(ctx, lam), t, int(spec[lam])
    return None
