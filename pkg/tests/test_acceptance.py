"""Acceptance gate: one test per criterion, each with its time budget.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import itertools
import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

import oracles
from hyperbent.dickson import (dickson_closed_form, dickson_construction, dickson_is_pp, dickson_poly,
                               permutes, poly_compose, poly_eval)
from hyperbent.enumeration import count_formula, exhaustive_count_oracle
from hyperbent.gf2n import make_field
from hyperbent.msequence import (corollary2_function, corollary2_search, known_decimations, spectrum)
from hyperbent.psap import GFunction, lift_g_to_f, make_ugroup, restrict_f_to_g, restriction_sum, t_construction, \
    t_core
from hyperbent.vectorial import (VectorialFunction, check_condition2, check_condition3, component_tables,
                                 is_vectorial_hyperbent_oracle)
from hyperbent.walsh import BooleanFunction, coprime_exponents, full_spectrum, hyperbent_mask, is_hyperbent_oracle


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            elapsed = time.perf_counter() - self.start
            assert elapsed < self.seconds, f"took {elapsed:.1f}s, budget {self.seconds}s"


def test_1_counts():
    """1 counts: exhaustive enumeration equals the closed formula (< 10 s)"""
    expected = {(2, 1): 20, (2, 2): 240, (3, 1): 252, (3, 2): None}
    with Budget(10):
        for (m, k), value in expected.items():
            exhaustive = exhaustive_count_oracle(m, k).formula_count
            formula = count_formula(m, k).formula_count
            assert exhaustive == formula
            if value is not None:
                assert formula == value
    assert count_formula(3, 2).formula_count == 30240


def test_2_condition_equivalence():
    """2 equivalence: oracle, direct sums and multiset agree on every core at m = 2 (< 60 s)"""
    ctx = make_field(4)
    U = make_ugroup(ctx)
    with Budget(60):
        for k in (1, 2):
            funcs = [lift_g_to_f(GFunction(U, k, np.array(v))) for v in itertools.product(range(1 << k), repeat=5)]
            assert len(funcs) == (1 << k) ** 5
            comps = np.stack([component_tables(F) for F in funcs])
            oracle = hyperbent_mask(ctx, comps.reshape(-1, ctx.size)).reshape(len(funcs), -1).all(axis=1)
            c2 = np.array([check_condition2(F, U) for F in funcs])
            c3 = np.array([check_condition3(F, U) for F in funcs])
            assert np.array_equal(oracle, c2) and np.array_equal(c2, c3)
            assert oracle.sum() == count_formula(2, k).core_count


def test_3_t_construction():
    """3 T_u0: multiset condition, g(1) = 0, bijective on U minus 1; oracle at m = 2, 3 (< 5 min)"""
    with Budget(300):
        for m in (2, 3, 4, 5):
            ctx = make_field(2 * m)
            U = make_ugroup(ctx)
            assert U.elements[0] == 1
            for u0 in U.elements[1:]:
                F = t_construction(ctx, u0)
                g = t_core(ctx, u0)
                assert check_condition3(F, U)
                assert g.values[0] == 0
                assert len(set(g.values[1:].tolist())) == U.order - 1
                if m <= 3:
                    assert is_vectorial_hyperbent_oracle(F)


def _random_symmetric(ctx, k, rng):
    # assign a random word to each orbit of x -> gamma^(q+1) x on the nonzero elements
    q = 1 << (ctx.n // 2)
    shift = ctx.gamma_power(q + 1)
    table = np.full(ctx.size, -1, dtype=np.int64)
    table[0] = 0
    for x in range(1, ctx.size):
        if table[x] >= 0:
            continue
        w, y = int(rng.integers(1 << k)), x
        while table[y] < 0:
            table[y] = w
            y = ctx.mul(shift, y)
    return VectorialFunction(ctx, k, table)


def test_4_lift_restrict_roundtrip():
    """4 lift/restrict: both compositions are the identity (m = 2 exhaustive, m = 3 sampled)"""
    ctx = make_field(4)
    U = make_ugroup(ctx)
    for k in (1, 2):
        for v in itertools.product(range(1 << k), repeat=U.order):
            g = GFunction(U, k, np.array(v))
            F = lift_g_to_f(g)
            assert restrict_f_to_g(F, U) == g
            assert lift_g_to_f(restrict_f_to_g(F, U)) == F
    ctx = make_field(6)
    U = make_ugroup(ctx)
    rng = np.random.default_rng(4)
    for _ in range(1000):
        k = int(rng.integers(1, 4))
        g = GFunction(U, k, rng.integers(0, 1 << k, U.order))
        assert restrict_f_to_g(lift_g_to_f(g), U) == g
        F = _random_symmetric(ctx, k, rng)
        assert lift_g_to_f(restrict_f_to_g(F, U)) == F


def test_5_dickson():
    """5 Dickson: coefficients, composition, functional equation, permutation criterion (< 2 min)"""
    with Budget(120):
        polys = [dickson_poly(r).coeffs for r in range(201)]
        for r in range(201):
            assert polys[r] == dickson_closed_form(r)
        for r in range(1, 201):
            for s in range(1, 200 // r + 1):
                assert poly_compose(polys[r], polys[s]) == polys[r * s]
        for m in (1, 2, 3, 4):
            n = 2 * m
            ctx = make_field(n)
            ys = np.arange(1, ctx.size)
            inv = np.array([next(z for z in range(1, ctx.size) if oracles.clmul_mod(int(y), z, n) == 1)
                            for y in ys])
            for r in range(1, 21):
                lhs = poly_eval(ctx, polys[r], ys ^ inv)
                rhs = np.array([oracles.power(int(y), r, n) ^ oracles.power(int(z), r, n) for y, z in zip(ys, inv)])
                assert np.array_equal(lhs, rhs)
        for m in range(1, 6):
            ctx = make_field(m)
            for r in range(1, 101):
                assert permutes(ctx, polys[r]) == dickson_is_pp(r, m)


def test_6_dickson_composition_hyperbent():
    """6 D_r(T_u0): vectorial oracle for m = 2, 3, every valid r <= 30 and every u0 (< 5 min)"""
    with Budget(300):
        for m in (2, 3):
            ctx = make_field(2 * m)
            U = make_ugroup(ctx)
            rs = [r for r in range(1, 31) if math.gcd(r, (1 << (2 * m)) - 1) == 1]
            assert rs
            for r in rs:
                for u0 in U.elements[1:]:
                    assert is_vectorial_hyperbent_oracle(dickson_construction(ctx, u0, r))


def test_7_crosscorrelation_functions():
    """7 three-valued decimations: a lambda exists for every u0 and d at m = 3, 5 (< 10 min)"""
    with Budget(600):
        for m in (3, 5):
            ctx = make_field(2 * m)
            U = make_ugroup(ctx)
            ds = sorted({e.d for e in known_decimations(m)})
            assert ds
            for d in ds:
                for u0 in U.elements[1:]:
                    lam = corollary2_search(ctx, u0, d, verify=False)
                    f = corollary2_function(ctx, u0, d, lam)
                    assert restriction_sum(f, U) == 1
                    if m == 3:
                        assert is_hyperbent_oracle(f)


def test_8_msequence_spectra():
    """8 crosscorrelation: catalogue entries three-valued with -1, d = 1 two-valued, conservation (< 2 min)"""
    with Budget(120):
        for m in range(2, 9):
            ctx = make_field(m)
            tested = {1} | {e.d for e in known_decimations(m)}
            for d in tested:
                spec = spectrum(ctx, d)
                assert sum((c + 1) * mult for c, mult in spec.values.items()) == 1 << m
                if d == 1:
                    assert spec.distinct == 2
                else:
                    assert spec.is_three_valued and spec.contains_minus_one


def test_9_walsh_kernel():
    """9 Walsh kernel: permuted FWHT equals the definitional double sum, n = 8, all coprime t (< 2 min)"""
    n = 8
    with Budget(120):
        mul = oracles.mul_table(n)
        tr = np.array([oracles.trace(x, n) for x in range(1 << n)])
        rng = np.random.default_rng(9)
        tables = rng.integers(0, 2, (100, 1 << n))
        signs = 1 - 2 * tables
        ctx = make_field(n)
        ts = coprime_exponents(n)
        assert len(ts) == 128
        for t in ts:
            xt = np.array([oracles.power(x, t, n) for x in range(1 << n)])
            chars = 1 - 2 * tr[mul[:, xt]]          # chars[lam, x] = (-1)^Tr(lam x^t)
            naive = signs @ chars.T
            for row, f in enumerate(tables):
                assert np.array_equal(full_spectrum(BooleanFunction(ctx, f), t).values, naive[row])


COMMANDS = [
    ["construct", "tconstruction", "--n", "6", "--u0-exp", "2", "--out", "{dir}/t.hbf"],
    ["verify", "{dir}/t.hbf", "--mode", "oracle"],
    ["verify", "{dir}/t.hbf", "--mode", "condition3"],
    ["construct", "dickson", "--n", "6", "--u0-exp", "5", "--r", "2", "--out", "{dir}/d.hbf"],
    ["verify", "{dir}/d.hbf", "--mode", "condition2"],
    ["construct", "corollary2", "--n", "6", "--u0-exp", "3", "--d", "5", "--out", "{dir}/c.hbf"],
    ["verify", "{dir}/c.hbf", "--mode", "psap"],
    ["verify", "{dir}/c.hbf", "--mode", "oracle"],
]


def _pipeline(directory):
    reports = []
    for i, cmd in enumerate(COMMANDS):
        report = directory / f"report{i}.json"
        argv = [sys.executable, "-m", "hyperbent.cli", "--report", str(report)]
        argv += [a.format(dir=directory) for a in cmd]
        proc = subprocess.run(argv, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        data = json.loads(report.read_text())
        if cmd[0] == "verify":
            assert data["verdict"] is True
        else:
            assert data["verdicts"]["hyperbent"] is True
        reports.append(report.read_bytes())
    return reports


def test_10_cli_pipeline(tmp_path):
    """10 CLI: construct -> file -> verify gives true verdicts and byte-identical reports on rerun"""
    a, b = tmp_path / "a", tmp_path / "b"
    a.mkdir()
    b.mkdir()
    assert _pipeline(a) == _pipeline(b)
    for name in ("t.hbf", "d.hbf", "c.hbf"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
