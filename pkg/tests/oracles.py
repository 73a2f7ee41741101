"""Reference computations that share no code with the package under test."""
import itertools

import numpy as np

from hyperbent.gf2n import MODULI


def clmul_mod(a: int, b: int, n: int) -> int:
    modulus = MODULI[n]
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> n & 1:
            a ^= modulus
    return out


def mul_table(n: int) -> np.ndarray:
    size = 1 << n
    return np.array([[clmul_mod(a, b, n) for b in range(size)] for a in range(size)], dtype=np.int64)


def power(a: int, e: int, n: int) -> int:
    out = 1
    for _ in range(e):
        out = clmul_mod(out, a, n)
    return out


def trace(a: int, n: int, k: int = 1) -> int:
    """Tr_k^n by summing the conjugates a^(2^(k i))."""
    out, c = 0, a
    for _ in range(n // k):
        out ^= c
        for _ in range(k):
            c = clmul_mod(c, c, n)
    return out


def walsh_naive(table, n: int, t: int, mul: np.ndarray, tr: np.ndarray) -> np.ndarray:
    """sum_x (-1)^(f(x) + Tr(lam x^t)) for every lam, straight from the definition."""
    size = 1 << n
    xt = [power(x, t, n) for x in range(size)]
    out = np.zeros(size, dtype=np.int64)
    for lam in range(size):
        s = 0
        for x in range(size):
            s += 1 - 2 * ((int(table[x]) + int(tr[mul[lam, xt[x]]])) & 1)
        out[lam] = s
    return out


def all_bases(elements, k):
    """Ordered F_2-bases drawn from ``elements`` (ints), k vectors each."""
    def rank(vs):
        basis = []
        for v in vs:
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
        return len(basis)
    for combo in itertools.permutations(elements, k):
        if rank(combo) == k:
            yield combo
