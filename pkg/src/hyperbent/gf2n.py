"""Arithmetic in GF(2^n) for 1 <= n <= 24.

Elements are integers in the polynomial basis: bit i is the coefficient of
x^i modulo a fixed primitive polynomial. Every per-element operation on a
:class:`FieldContext` accepts a Python int or a numpy integer array and is
applied elementwise.

Shipped moduli (hex, bit i = coefficient of x^i); x is primitive for each:

    n   modulus        n   modulus
    1   0x3            13  0x201b
    2   0x7            14  0x4443
    3   0xb            15  0x8003
    4   0x13           16  0x1100b
    5   0x25           17  0x20009
    6   0x43           18  0x40081
    7   0x83           19  0x80027
    8   0x11d          20  0x100009
    9   0x211          21  0x200005
    10  0x409          22  0x400003
    11  0x805          23  0x800021
    12  0x1053         24  0x1000087
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_DEGREE = 24

MODULI = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11D,
    9: 0x211, 10: 0x409, 11: 0x805, 12: 0x1053, 13: 0x201B, 14: 0x4443,
    15: 0x8003, 16: 0x1100B, 17: 0x20009, 18: 0x40081, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x1000087,
}


class ContextMismatch(ValueError):
    pass


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2 over F_2."""
    n = poly.bit_length() - 1
    if n < 1:
        return False
    for d in range(2, 1 << (n // 2 + 1)):
        if _poly_mod(poly, d) == 0:
            return False
    return True


def _times_const(a: np.ndarray, c: int, modulus: int, n: int) -> np.ndarray:
    # carry-less a * c mod modulus, vectorised over a
    out = np.zeros_like(a)
    cur = a.copy()
    top = np.int64(1 << n)
    for bit in range(n):
        if (c >> bit) & 1:
            out ^= cur
        cur <<= 1
        cur ^= np.where(cur & top, modulus, 0)
    return out


def _powers_of_x(modulus: int, n: int, count: int) -> np.ndarray:
    """[x^0, x^1, ..., x^(count-1)] mod modulus, by repeated doubling of the prefix."""
    out = np.ones(1, dtype=np.int64)
    xpow = 2 % modulus if n > 1 else 1  # x mod (x+1) = 1
    step = xpow
    while len(out) < count:
        out = np.concatenate([out, _times_const(out, step, modulus, n)])
        step = int(_times_const(np.array([step]), step, modulus, n)[0])
    return out[:count]


@dataclass(frozen=True, eq=False)
class FieldContext:
    n: int
    modulus: int
    antilog: np.ndarray  # length 2*(2^n - 1): antilog[i] = gamma^i, doubled to skip a mod
    log: np.ndarray      # log[x] for x != 0; log[0] is a placeholder 0

    def __eq__(self, other):
        return isinstance(other, FieldContext) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __repr__(self):
        return f"GF(2^{self.n}, modulus={self.modulus:#x})"

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def order(self) -> int:
        """Order of the multiplicative group, 2^n - 1."""
        return (1 << self.n) - 1

    @property
    def gamma(self) -> int:
        return int(self.antilog[1 % self.order]) if self.order > 1 else 1

    @property
    def gamma_index(self) -> int:
        return self.gamma

    @property
    def m(self) -> int:
        if self.n % 2:
            raise ValueError(f"n={self.n} is odd; m = n/2 undefined")
        return self.n // 2

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, int(value))

    def gamma_power(self, e):
        return _out(self.antilog[np.asarray(e, dtype=np.int64) % self.order].astype(np.int64), e)

    # elementwise arithmetic on ints / int arrays

    def add(self, a, b):
        return _out(np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)), a, b)

    def mul(self, a, b):
        a_ = np.asarray(a, dtype=np.int64)
        b_ = np.asarray(b, dtype=np.int64)
        r = self.antilog[self.log[a_] + self.log[b_]].astype(np.int64)
        return _out(np.where((a_ == 0) | (b_ == 0), 0, r), a, b)

    def pow(self, a, e: int):
        a_ = np.asarray(a, dtype=np.int64)
        e = int(e)
        if e == 0:
            return _out(np.ones_like(a_), a)
        if e < 0 and np.any(a_ == 0):
            raise ZeroDivisionError("negative power of zero")
        r = self.antilog[(self.log[a_].astype(np.int64) * (e % self.order)) % self.order].astype(np.int64)
        return _out(np.where(a_ == 0, 0, r), a)

    def inv(self, a):
        a_ = np.asarray(a, dtype=np.int64)
        if np.any(a_ == 0):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, -1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power_table(self, e: int) -> np.ndarray:
        """p[x] = x^e for every field element x."""
        return self.pow(self.elements(), e)

    @functools.cached_property
    def trace_mask(self) -> int:
        # bit i = Tr_1^n(x^i), computed from the definition sum of conjugates
        mask = 0
        for i in range(self.n):
            z = 1 << i
            t, c = 0, z
            for _ in range(self.n):
                t ^= c
                c = int(self.mul(c, c))
            if t not in (0, 1):
                raise AssertionError("absolute trace left the prime field")
            mask |= t << i
        return mask

    @functools.cached_property
    def trace_table(self) -> np.ndarray:
        t = (np.bitwise_count(self.elements() & self.trace_mask) & 1).astype(np.uint8)
        t.flags.writeable = False
        return t

    def abs_trace(self, x):
        """Tr_1^n(x) in {0, 1}."""
        x_ = np.asarray(x, dtype=np.int64)
        return _out((np.bitwise_count(x_ & self.trace_mask) & 1).astype(np.int64), x)

    def trace(self, x, k: int = 1, from_degree: int | None = None):
        """Relative trace Tr_k^d(x) = sum_{i < d/k} x^(2^(k i)), d = from_degree or n.

        With from_degree < n, x must lie in the degree-d subfield.
        """
        d = self.n if from_degree is None else from_degree
        if k < 1 or d % k or self.n % d:
            raise ValueError(f"trace degree {k} does not divide {d} (field degree {self.n})")
        if k == 1 and d == self.n:
            return self.abs_trace(x)
        x_ = np.asarray(x, dtype=np.int64)
        acc = np.zeros_like(x_)
        cur = x_
        for _ in range(d // k):
            acc = acc ^ cur
            cur = self.pow(cur, 1 << k)
        return _out(acc, x)

    def in_subfield(self, x, k: int):
        if self.n % k:
            raise ValueError(f"{k} does not divide {self.n}")
        x_ = np.asarray(x, dtype=np.int64)
        return _out(self.pow(x_, 1 << k) == x_, x)

    def subfield_elements(self, k: int) -> np.ndarray:
        """Degree-k subfield as the fixed field of z -> z^(2^k), increasing order."""
        els = self.elements()
        return els[self.in_subfield(els, k)]


def _out(arr, *inputs):
    if all(np.ndim(i) == 0 for i in inputs):
        v = np.asarray(arr).item()
        return bool(v) if isinstance(v, bool) else int(v)
    return arr


@functools.lru_cache(maxsize=None)
def make_field(n: int) -> FieldContext:
    """Build GF(2^n) over the shipped modulus for n; cached, deterministic."""
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"field degree n={n} outside 1..{MAX_DEGREE}")
    n = int(n)
    if n not in MODULI:
        raise KeyError(f"no shipped modulus for n={n}")
    modulus = MODULI[n]
    if not is_irreducible(modulus):
        raise AssertionError(f"modulus {modulus:#x} is reducible")
    order = (1 << n) - 1
    powers = _powers_of_x(modulus, n, order)
    if np.count_nonzero(powers == 1) != 1:
        raise AssertionError(f"x does not have order {order} modulo {modulus:#x}")
    log = np.zeros(1 << n, dtype=np.int32)
    log[powers] = np.arange(order, dtype=np.int32)
    if not np.array_equal(powers[log[powers]], powers):
        raise AssertionError("log/antilog tables inconsistent")
    antilog = np.concatenate([powers, powers]).astype(np.int32)
    antilog.flags.writeable = False
    log.flags.writeable = False
    return FieldContext(n=n, modulus=modulus, antilog=antilog, log=log)


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldContext
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.ctx.size:
            raise ValueError(f"{self.bits} is not an element of {self.ctx}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{other.ctx} vs {self.ctx}")
            return other.bits
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.bits ^ o)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.bits, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.div(self.bits, o))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.bits, e))

    def __int__(self):
        return self.bits

    def __index__(self):
        return self.bits

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.bits))

    def trace(self, k: int = 1) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.trace(self.bits, k))

    def log(self) -> int:
        if self.bits == 0:
            raise ValueError("log of zero")
        return int(self.ctx.log[self.bits])

    def __repr__(self):
        return f"FieldElement({self.bits:#x} in GF(2^{self.ctx.n}))"


def _bits(ctx: FieldContext, x) -> int:
    if isinstance(x, FieldElement):
        if x.ctx != ctx:
            raise ContextMismatch(f"{x.ctx} vs {ctx}")
        return x.bits
    return int(x)


def field_arith(ctx: FieldContext, op: str, *operands) -> FieldElement:
    """Dispatch ``add``, ``mul``, ``inv`` or ``pow`` (second operand an int exponent)."""
    if op == "add":
        a, b = (_bits(ctx, o) for o in operands)
        return FieldElement(ctx, a ^ b)
    if op == "mul":
        a, b = (_bits(ctx, o) for o in operands)
        return FieldElement(ctx, ctx.mul(a, b))
    if op == "inv":
        (a,) = operands
        return FieldElement(ctx, ctx.inv(_bits(ctx, a)))
    if op == "pow":
        a, e = operands
        return FieldElement(ctx, ctx.pow(_bits(ctx, a), int(e)))
    raise ValueError(f"unknown field operation {op!r}")


def trace(ctx: FieldContext, x, k: int = 1) -> FieldElement:
    """Tr_k^n(x) as an element of the big field (lands in the degree-k subfield)."""
    return FieldElement(ctx, ctx.trace(_bits(ctx, x), k))


def subfield_trace(ctx: FieldContext, z, k: int) -> FieldElement:
    """Tr_1^k(z) for z in the degree-k subfield of ctx."""
    zb = _bits(ctx, z)
    if not ctx.in_subfield(zb, k):
        raise ValueError(f"{zb:#x} is not in the degree-{k} subfield")
    return FieldElement(ctx, ctx.trace(zb, 1, from_degree=k))


# --- subfields as standalone fields ---------------------------------------


@dataclass(frozen=True, eq=False)
class SubfieldEmbedding:
    """Isomorphism between make_field(k) and the degree-k subfield of ``big``.

    The standalone generator x of make_field(k) is sent to the smallest root
    (by integer value) of its minimal polynomial inside ``big``; the standalone
    integer encoding is then the coordinate vector in the basis
    1, z, ..., z^(k-1) of the subfield.
    """
    big: FieldContext
    small: FieldContext
    root: int
    to_big: np.ndarray    # length 2^k
    to_small: np.ndarray  # length 2^n, -1 off the subfield


def _eval_f2_poly(ctx: FieldContext, poly: int, x):
    # Horner with coefficients in F_2
    x_ = np.asarray(x, dtype=np.int64)
    acc = np.zeros_like(x_)
    for i in range(poly.bit_length() - 1, -1, -1):
        acc = ctx.mul(acc, x_) ^ ((poly >> i) & 1)
    return acc


@functools.lru_cache(maxsize=None)
def subfield_embedding(big: FieldContext, k: int) -> SubfieldEmbedding:
    if big.n % k:
        raise ValueError(f"{k} does not divide {big.n}")
    small = make_field(k)
    sub = big.subfield_elements(k)
    roots = sub[_eval_f2_poly(big, small.modulus, sub) == 0]
    root = int(roots.min())
    powers = np.ones(k, dtype=np.int64)
    for i in range(1, k):
        powers[i] = big.mul(int(powers[i - 1]), root)
    to_big = np.zeros(small.size, dtype=np.int64)
    for w in range(small.size):
        v = 0
        for i in range(k):
            if (w >> i) & 1:
                v ^= int(powers[i])
        to_big[w] = v
    to_small = np.full(big.size, -1, dtype=np.int64)
    to_small[to_big] = np.arange(small.size)
    if np.count_nonzero(to_small >= 0) != small.size:
        raise AssertionError("subfield embedding is not injective")
    to_big.flags.writeable = False
    to_small.flags.writeable = False
    return SubfieldEmbedding(big, small, root, to_big, to_small)


# --- dual bases -----------------------------------------------------------


@dataclass(frozen=True)
class DualBasisPair:
    A: tuple
    B: tuple
    k: int


def _f2_rank(vectors: Sequence[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _f2_inverse(rows: list[list[int]]) -> list[list[int]]:
    k = len(rows)
    aug = [r[:] + [int(i == j) for j in range(k)] for i, r in enumerate(rows)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix over F_2")
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(k):
            if r != col and aug[r][col]:
                aug[r] = [a ^ b for a, b in zip(aug[r], aug[col])]
    return [r[k:] for r in aug]


def dual_basis(ctx: FieldContext, A: Sequence) -> DualBasisPair:
    """The unique B with Tr_1^k(A[i] B[j]) = delta_ij, k = len(A).

    A must be an F_2-basis of the degree-k subfield of ctx.
    """
    k = len(A)
    if k == 0 or ctx.n % k:
        raise ValueError(f"basis length {k} does not divide n={ctx.n}")
    a = [_bits(ctx, x) for x in A]
    for x in a:
        if not ctx.in_subfield(x, k):
            raise ValueError(f"{x:#x} is not in the degree-{k} subfield")
    if _f2_rank(a) != k:
        raise ValueError("basis elements are linearly dependent over F_2")
    gram = [[int(ctx.trace(ctx.mul(x, y), 1, from_degree=k)) for y in a] for x in a]
    c = _f2_inverse(gram)
    b = []
    for j in range(k):
        v = 0
        for l in range(k):
            if c[l][j]:
                v ^= a[l]
        b.append(v)
    return DualBasisPair(A=tuple(FieldElement(ctx, x) for x in a),
                         B=tuple(FieldElement(ctx, x) for x in b), k=k)
