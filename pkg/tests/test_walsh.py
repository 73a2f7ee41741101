import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from hyperbent.gf2n import make_field
from hyperbent.psap import GFunction, lift_boolean, make_ugroup
from hyperbent.walsh import (BooleanFunction, batch_spectra, coprime_exponents, cyclotomic_representatives,
                             extended_walsh, full_spectrum, fwht, hyperbent_mask, hyperbent_witness, is_bent,
                             is_hyperbent_fast, is_hyperbent_oracle, naive_spectrum)


def _random_f(ctx, rng):
    return BooleanFunction(ctx, rng.integers(0, 2, ctx.size))


def test_coprime_exponents():
    assert coprime_exponents(4) == [1, 2, 4, 7, 8, 11, 13, 14]
    assert len(coprime_exponents(8)) == 128
    assert cyclotomic_representatives(4) == [1, 7]


def test_fwht_matches_matrix():
    rng = np.random.default_rng(1)
    a = rng.integers(-5, 5, (3, 16))
    H = np.array([[(-1) ** bin(i & j).count("1") for j in range(16)] for i in range(16)])
    assert np.array_equal(fwht(a), a @ H.T)
    with pytest.raises(ValueError):
        fwht(np.zeros(6))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_spectrum_against_independent_oracle(n, rng):
    ctx = make_field(n)
    mul = oracles.mul_table(n)
    tr = np.array([oracles.trace(x, n) for x in range(ctx.size)])
    for _ in range(3):
        f = _random_f(ctx, rng)
        for t in coprime_exponents(n):
            expect = oracles.walsh_naive(f.table, n, t, mul, tr)
            assert np.array_equal(full_spectrum(f, t).values, expect)
            assert np.array_equal(naive_spectrum(f, t), expect)
            lam = int(rng.integers(ctx.size))
            assert extended_walsh(f, lam, t) == expect[lam]


@given(st.integers(2, 8), st.data())
def test_parseval(n, data):
    ctx = make_field(n)
    table = np.array(data.draw(st.lists(st.integers(0, 1), min_size=ctx.size, max_size=ctx.size)))
    f = BooleanFunction(ctx, table)
    t = data.draw(st.sampled_from(coprime_exponents(n)))
    assert full_spectrum(f, t).parseval_ok()


def test_trace_is_not_bent():
    ctx = make_field(4)
    f = BooleanFunction.trace_monomial(ctx, 1)
    spec = full_spectrum(f, 1)
    assert spec.histogram() == {0: 15, 16: 1}
    assert not is_bent(f)
    with pytest.raises(ValueError):
        is_bent(BooleanFunction.zero(make_field(3)))


def test_zero_function_witness():
    f = BooleanFunction.zero(make_field(4))
    assert not is_hyperbent_oracle(f)
    lam, t, value = hyperbent_witness(f)
    assert (lam.bits, t, value) == (0, 1, 16)


def test_psap_functions_at_n4():
    """Of the 32 cores on U at m = 2, exactly those with sum 1 lift to hyper-bent functions."""
    ctx = make_field(4)
    U = make_ugroup(ctx)
    verdicts = {}
    for vals in itertools.product([0, 1], repeat=5):
        f = lift_boolean(GFunction(U, 1, np.array(vals)))
        verdicts[vals] = is_hyperbent_oracle(f)
        assert is_hyperbent_fast(f) == verdicts[vals]
        if verdicts[vals]:
            assert hyperbent_witness(f) is None
            assert is_bent(f)
            assert int(f.table.sum()) in (8 - 2, 8 + 2)
    assert sorted(v for v, ok in verdicts.items() if ok) == sorted(
        v for v in verdicts if sum(1 - 2 * x for x in v) == 1)
    assert sum(verdicts.values()) == 10


def test_full_spectrum_agrees_pointwise_t7():
    ctx = make_field(4)
    f = _random_f(ctx, np.random.default_rng(7))
    spec = full_spectrum(f, 7).values
    assert [extended_walsh(f, lam, 7) for lam in range(16)] == spec.tolist()


def test_bad_exponent():
    ctx = make_field(4)
    with pytest.raises(ValueError):
        full_spectrum(BooleanFunction.zero(ctx), 3)
    with pytest.raises(ValueError):
        extended_walsh(BooleanFunction.zero(ctx), 1, 0)


def test_fast_path_and_workers_agree_with_mask(rng):
    ctx = make_field(6)
    U = make_ugroup(ctx)
    tables = []
    for _ in range(60):
        g = GFunction(U, 1, rng.integers(0, 2, U.order))
        tables.append(lift_boolean(g).table)
    tables += [rng.integers(0, 2, ctx.size) for _ in range(20)]
    tables = np.array(tables)
    full = hyperbent_mask(ctx, tables)
    assert np.array_equal(hyperbent_mask(ctx, tables, workers=3), full)
    assert np.array_equal(hyperbent_mask(ctx, tables, exponents=cyclotomic_representatives(6)), full)
    naive = [all(np.all(np.abs(naive_spectrum(BooleanFunction(ctx, t), e)) == 8) for e in coprime_exponents(6))
             for t in tables]
    assert full.tolist() == naive
    assert full.any()


def test_batch_spectra_shape():
    ctx = make_field(5)
    tables = np.random.default_rng(0).integers(0, 2, (2, 3, 32))
    out = batch_spectra(ctx, tables, 3)
    assert out.shape == (2, 3, 32)
    assert np.array_equal(out[1, 2], full_spectrum(BooleanFunction(ctx, tables[1, 2]), 3).values)


def test_oracle_guard():
    from hyperbent._guards import GuardError
    with pytest.raises(GuardError):
        hyperbent_mask(make_field(18), np.zeros((1, 1 << 18), dtype=np.uint8))
