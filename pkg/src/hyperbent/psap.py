"""The PS_ap^# machinery over GF(2^(2m)).

A function constant on every coset u F*_{2^m} is determined by its values on
the cyclic group U of order 2^m + 1.  This module moves between the full
truth table and that "core" g: U -> F_2^k, and builds the explicit
constructions on top of it.

Values of F_{2^m} are encoded as m-bit words through
:func:`hyperbent.gf2n.subfield_embedding`, i.e. coordinates in the basis
1, z, ..., z^(m-1) of the degree-m subfield, z the embedded generator of
``make_field(m)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2n import ContextMismatch, DualBasisPair, FieldContext, _bits, subfield_embedding
from .vectorial import DimensionError, VectorialFunction
from .walsh import BooleanFunction


class SymmetryError(ValueError):
    """f(gamma^(2^m+1) x) = f(x) or f(0) = 0 fails."""


@dataclass(frozen=True, eq=False)
class UGroup:
    ctx: FieldContext
    m: int
    elements: np.ndarray  # elements[j] = (gamma^(2^m - 1))^j
    s: int                # (2^m - 1)^-1 mod 2^m + 1

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, u) -> int:
        """j with u = u_j."""
        u = _bits(self.ctx, u)
        if u == 0 or self.ctx.pow(u, self.order) != 1:
            raise ValueError(f"{u:#x} is not in U")
        return int(self.ctx.log[u]) // ((1 << self.m) - 1)

    def core_index(self) -> np.ndarray:
        """For every nonzero x, the j with x^(2^m - 1) = u_j (entry 0 unused)."""
        return self.ctx.log.astype(np.int64) % self.order


def make_ugroup(ctx: FieldContext) -> UGroup:
    if ctx.n % 2:
        raise ValueError(f"n={ctx.n} is odd")
    m = ctx.n // 2
    q = 1 << m
    elements = ctx.gamma_power(np.arange(q + 1, dtype=np.int64) * (q - 1))
    elements.flags.writeable = False
    return UGroup(ctx, m, elements, pow(q - 1, -1, q + 1))


@dataclass(frozen=True, eq=False)
class GFunction:
    U: UGroup
    k: int
    values: np.ndarray  # values[j] = g(u_j)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64)
        if v.shape != (self.U.order,):
            raise ValueError(f"need {self.U.order} values, got {v.shape}")
        if np.any((v < 0) | (v >= 1 << self.k)):
            raise ValueError(f"values must be {self.k}-bit words")
        object.__setattr__(self, "values", v)

    def __eq__(self, other):
        return (isinstance(other, GFunction) and self.U.ctx == other.U.ctx and self.k == other.k
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.U.ctx, self.k, self.values.tobytes()))


def restriction_sum(f: BooleanFunction, U: UGroup) -> int:
    """sum_{u in U} (-1)^f(u)."""
    if f.ctx != U.ctx:
        raise ContextMismatch(f"function on {f.ctx}, U in {U.ctx}")
    return int(np.sum(1 - 2 * f.table[U.elements].astype(np.int64)))


def check_psap_symmetry(f) -> bool:
    """f(gamma^(2^m+1) x) = f(x) for all x, and f(0) = 0.

    Accepts a BooleanFunction or a VectorialFunction; for the latter, word
    equality is equivalent to every component combination being symmetric.
    """
    ctx = f.ctx
    if ctx.n % 2:
        raise ValueError(f"n={ctx.n} is odd")
    shift = ctx.gamma_power((1 << (ctx.n // 2)) + 1)
    moved = f.table[ctx.mul(shift, ctx.elements())]
    return bool(f.table[0] == 0 and np.array_equal(moved, f.table))


def lift_g_to_f(g: GFunction) -> VectorialFunction:
    """F(0) = 0, F(x) = g(x^(2^m - 1))."""
    U = g.U
    table = g.values[U.core_index()]
    table[0] = 0
    return VectorialFunction(U.ctx, g.k, table)


def lift_boolean(g: GFunction) -> BooleanFunction:
    if g.k != 1:
        raise DimensionError(f"expected a 1-bit core, got k={g.k}")
    return lift_g_to_f(g).coordinate(1)


def restrict_f_to_g(F, U: UGroup | None = None) -> GFunction:
    """g(u) = F(u^s), s the inverse of 2^m - 1 modulo 2^m + 1."""
    if isinstance(F, BooleanFunction):
        F = VectorialFunction(F.ctx, 1, F.table)
    U = make_ugroup(F.ctx) if U is None else U
    if F.ctx != U.ctx:
        raise ContextMismatch(f"function on {F.ctx}, U in {U.ctx}")
    if not check_psap_symmetry(F):
        raise SymmetryError("symmetry precondition failed")
    return GFunction(U, F.k, F.table[U.ctx.pow(U.elements, U.s)])


# --- T_{u0} -----------------------------------------------------------------


def _check_u0(U: UGroup, u0) -> int:
    u0 = _bits(U.ctx, u0)
    if u0 == 0 or U.ctx.pow(u0, U.order) != 1:
        raise ValueError(f"u0={u0:#x} is not in U")
    if u0 == 1:
        raise ValueError("u0 must differ from 1")
    return u0


def t_core_field(ctx: FieldContext, u0, method: str = "direct") -> np.ndarray:
    """g(u_j) = Tr_m^n(u0 sum_{i=1}^{2^(m-1)} u_j^i) as subfield elements of ctx.

    ``method="squared"`` uses g(u)^2 = u0^2/(1 + 1/u) + u0^-2/(1 + u) for
    u != 1, g(1) = 0, then takes the square root z -> z^(2^(m-1)) in F_{2^m}.
    """
    U = make_ugroup(ctx)
    if U.m < 2:
        raise ValueError("T_{u0} needs m >= 2 (for m = 1 the geometric sum at u = 1 is nonzero)")
    u0 = _check_u0(U, u0)
    m, order = U.m, U.order
    j = np.arange(order, dtype=np.int64)
    if method == "direct":
        acc = np.zeros(order, dtype=np.int64)
        for i in range(1, (1 << (m - 1)) + 1):
            acc ^= U.elements[(j * i) % order]
        return ctx.trace(ctx.mul(u0, acc), m)
    if method == "squared":
        u = U.elements[1:]
        a = ctx.pow(u0, 2)
        b = ctx.pow(u0, -2)
        sq = ctx.div(a, 1 ^ ctx.inv(u)) ^ ctx.div(b, 1 ^ u)
        if not np.all(ctx.in_subfield(sq, m)):
            raise AssertionError("squared T value left F_{2^m}")
        out = np.zeros(order, dtype=np.int64)
        out[1:] = ctx.pow(sq, 1 << (m - 1))
        return out
    raise ValueError(f"unknown method {method!r}")


def t_core(ctx: FieldContext, u0, method: str = "direct") -> GFunction:
    emb = subfield_embedding(ctx, ctx.n // 2)
    return GFunction(make_ugroup(ctx), ctx.n // 2, emb.to_small[t_core_field(ctx, u0, method)])


def t_construction(ctx: FieldContext, u0, method: str = "direct") -> VectorialFunction:
    """T_{u0}(x) = Tr_m^n(u0 sum_{i=1}^{2^(m-1)} x^(i(2^m-1))) as m-bit words."""
    return lift_g_to_f(t_core(ctx, u0, method))


# --- balanced composition ------------------------------------------------------


def _table_degree(h) -> int:
    size = len(h)
    m = size.bit_length() - 1
    if size != 1 << m:
        raise ValueError("h must have 2^m entries")
    return m


def is_balanced(h, k: int) -> bool:
    """Every k-bit word has exactly 2^(m-k) preimages under h: F_{2^m} -> F_2^k."""
    h = np.asarray(h, dtype=np.int64)
    m = _table_degree(h)
    if k > m:
        raise DimensionError(f"dimension exceeds m (k={k}, m={m})")
    if np.any((h < 0) | (h >= 1 << k)):
        return False
    return bool(np.all(np.bincount(h, minlength=1 << k) == 1 << (m - k)))


def balanced_compose(h, T: VectorialFunction, k: int) -> VectorialFunction:
    """x -> h(T(x)) for balanced h with h(0) = 0."""
    h = np.asarray(h, dtype=np.int64)
    m = _table_degree(h)
    if T.k != m or T.ctx.n != 2 * m:
        raise DimensionError(f"T must map GF(2^{2 * m}) to {m}-bit words")
    if not is_balanced(h, k):
        raise ValueError("h is not balanced")
    if h[0] != 0:
        raise ValueError("h(0) must be 0")
    return VectorialFunction(T.ctx, k, h[T.table])


# --- trace form ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TraceForm:
    """Rows i = 1..k of Tr_1^n(sum_{j=1}^{2^m} a_ij x^(j(2^m-1)) + a_i0)."""
    ctx: FieldContext
    k: int
    coefficients: np.ndarray  # shape (k, 2^m + 1); column j holds a_{i,j}

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=np.int64)
        q1 = (1 << (self.ctx.n // 2)) + 1
        if c.shape != (self.k, q1):
            raise ValueError(f"coefficients must have shape ({self.k}, {q1}), got {c.shape}")
        if np.any((c < 0) | (c >= self.ctx.size)):
            raise ValueError("coefficients must be field elements")
        object.__setattr__(self, "coefficients", c)


def trace_form_eval(tf: TraceForm) -> VectorialFunction:
    """Evaluate at every x; only a_i0 survives at x = 0 since every other exponent is >= 1."""
    ctx = tf.ctx
    if ctx.n % 2:
        raise ValueError(f"n={ctx.n} is odd")
    q = 1 << (ctx.n // 2)
    xs = ctx.elements()
    powers = [ctx.pow(xs, j * (q - 1)) for j in range(1, q + 1)]
    table = np.zeros(ctx.size, dtype=np.int64)
    for i, row in enumerate(tf.coefficients):
        acc = np.full(ctx.size, row[0], dtype=np.int64)
        for j in range(1, q + 1):
            if row[j]:
                acc ^= ctx.mul(int(row[j]), powers[j - 1])
        table |= ctx.abs_trace(acc) << i
    return VectorialFunction(ctx, tf.k, table)


# --- dual-basis maps between F_2^k words and F_{2^k} values ---------------------


def pi_map(F: VectorialFunction, pair: DualBasisPair) -> np.ndarray:
    """x -> sum_j f_j(x) alpha_j, values in the field of ``pair``."""
    if pair.k != F.k:
        raise DimensionError(f"basis dimension {pair.k} != function dimension {F.k}")
    out = np.zeros(F.ctx.size, dtype=np.int64)
    for j, alpha in enumerate(pair.A):
        out ^= ((F.table >> j) & 1) * alpha.bits
    return out


def sigma_map(values, pair: DualBasisPair, domain: FieldContext) -> VectorialFunction:
    """x -> (Tr_1^k(beta_1 F(x)), ..., Tr_1^k(beta_k F(x)))."""
    vctx = pair.A[0].ctx
    values = np.asarray(values, dtype=np.int64)
    if values.shape != (domain.size,):
        raise ValueError("value table does not match the domain")
    if not np.all(vctx.in_subfield(values, pair.k)):
        raise DimensionError(f"values must lie in the degree-{pair.k} subfield")
    table = np.zeros(domain.size, dtype=np.int64)
    for j, beta in enumerate(pair.B):
        table |= vctx.trace(vctx.mul(beta.bits, values), 1, from_degree=pair.k) << j
    return VectorialFunction(domain, pair.k, table)


def pi_sigma_maps(F: VectorialFunction, pair: DualBasisPair):
    """(pi(F), sigma(pi(F))); the second equals F."""
    tilde = pi_map(F, pair)
    return tilde, sigma_map(tilde, pair, F.ctx)
