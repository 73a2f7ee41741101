"""Binary Dickson polynomials and the Dickson-permutation construction.

Polynomials over F_2 are Python ints, bit i = coefficient of x^i.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._guards import check_guard
from .gf2n import FieldContext, make_field
from .psap import t_construction
from .vectorial import VectorialFunction

MAX_INDEX = 1 << 20


@dataclass(frozen=True)
class DicksonPoly:
    r: int
    coeffs: int

    @property
    def degree(self) -> int:
        return self.coeffs.bit_length() - 1

    def exponents(self) -> list[int]:
        return [i for i in range(self.coeffs.bit_length()) if (self.coeffs >> i) & 1]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in reversed(self.exponents()):
            parts.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(parts)

    def __call__(self, ctx: FieldContext, x):
        return poly_eval(ctx, self.coeffs, x)


def dickson_poly(r: int, *, override: bool = False) -> DicksonPoly:
    """D_r via D_0 = 0, D_1 = x, D_{r+2} = x D_{r+1} + D_r."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    check_guard(r <= MAX_INDEX, f"Dickson index capped at {MAX_INDEX}", override)
    prev, cur = 0, 0b10
    if r == 0:
        return DicksonPoly(0, 0)
    for _ in range(r - 1):
        prev, cur = cur, (cur << 1) ^ prev
    return DicksonPoly(r, cur)


def dickson_closed_form(r: int) -> int:
    """sum_{i <= r/2} r/(r-i) C(r-i, i) x^(r-2i) reduced mod 2; D_0 = 0."""
    if r == 0:
        return 0
    out = 0
    for i in range(r // 2 + 1):
        c = Fraction(r, r - i) * math.comb(r - i, i)
        if c.denominator != 1:
            raise AssertionError(f"non-integral Dickson coefficient at r={r}, i={i}")
        if c.numerator % 2:
            out |= 1 << (r - 2 * i)
    return out


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_compose(outer: int, inner: int) -> int:
    """outer(inner(x)) over F_2, Horner."""
    out = 0
    for i in range(outer.bit_length() - 1, -1, -1):
        out = poly_mul(out, inner) ^ ((outer >> i) & 1)
    return out


def poly_eval(ctx: FieldContext, poly: int, x):
    """Horner evaluation of an F_2-polynomial at field elements of ctx."""
    x_ = np.asarray(x, dtype=np.int64)
    acc = np.zeros_like(x_)
    for i in range(poly.bit_length() - 1, -1, -1):
        acc = np.asarray(ctx.mul(acc, x_)) ^ ((poly >> i) & 1)
    return int(acc) if np.ndim(x) == 0 else acc


def dickson_is_pp(r: int, m: int) -> bool:
    """D_r permutes F_{2^m} iff gcd(r, 2^(2m) - 1) = 1."""
    if r < 1:
        raise ValueError("r must be positive")
    return math.gcd(r, (1 << (2 * m)) - 1) == 1


def permutes(ctx: FieldContext, poly: int) -> bool:
    """Exhaustive check that the polynomial map is a bijection of ctx."""
    vals = poly_eval(ctx, poly, ctx.elements())
    return len(np.unique(vals)) == ctx.size


def dickson_table(r: int, m: int) -> np.ndarray:
    """D_r on make_field(m), as an m-bit word table."""
    ctx = make_field(m)
    return poly_eval(ctx, dickson_poly(r).coeffs, ctx.elements())


def dickson_construction(ctx: FieldContext, u0, r: int) -> VectorialFunction:
    """x -> D_r(T_{u0}(x)), evaluated in F_{2^m} through the word encoding of T."""
    m = ctx.n // 2
    if not dickson_is_pp(r, m):
        raise ValueError(f"gcd(r, 2^(2m)-1) != 1 (r={r}, m={m})")
    T = t_construction(ctx, u0)
    return VectorialFunction(ctx, m, dickson_table(r, m)[T.table])
