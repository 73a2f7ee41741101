import numpy as np
import pytest

import oracles
from hyperbent.dickson import (dickson_closed_form, dickson_construction, dickson_is_pp, dickson_poly,
                               dickson_table, permutes, poly_compose, poly_eval, poly_mul)
from hyperbent.gf2n import make_field
from hyperbent.psap import make_ugroup, t_construction
from hyperbent.vectorial import is_vectorial_hyperbent_oracle


def test_small_polys():
    assert str(dickson_poly(3)) == "x^3 + x"
    assert str(dickson_poly(7)) == "x^7 + x^5 + x"
    assert dickson_poly(0).coeffs == 0 and dickson_poly(1).coeffs == 0b10
    assert dickson_poly(2).coeffs == 0b100
    assert poly_compose(dickson_poly(2).coeffs, dickson_poly(3).coeffs) == (1 << 6) | (1 << 2)
    assert poly_mul(0b11, 0b11) == 0b101


def test_closed_form_matches_recurrence():
    for r in range(201):
        assert dickson_poly(r).coeffs == dickson_closed_form(r), r


def test_composition():
    for r in range(1, 201):
        for s in range(1, 200 // r + 1):
            assert poly_compose(dickson_poly(r).coeffs, dickson_poly(s).coeffs) == dickson_poly(r * s).coeffs


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_functional_equation(m):
    n = 2 * m
    ctx = make_field(n)
    ys = np.arange(1, ctx.size)
    arg = ys ^ ctx.inv(ys)
    for r in range(1, 21):
        assert np.array_equal(poly_eval(ctx, dickson_poly(r).coeffs, arg), ctx.pow(ys, r) ^ ctx.pow(ys, -r))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_permutation_criterion(m):
    ctx = make_field(m)
    for r in range(1, 101):
        assert permutes(ctx, dickson_poly(r).coeffs) == dickson_is_pp(r, m), (r, m)


def test_poly_eval_scalar():
    ctx = make_field(3)
    assert poly_eval(ctx, 0b1010, 3) == oracles.power(3, 3, 3) ^ 3


def test_dickson_construction():
    ctx = make_field(4)
    U = make_ugroup(ctx)
    u0 = U.elements[2]
    assert dickson_construction(ctx, u0, 1) == t_construction(ctx, u0)
    F = dickson_construction(ctx, u0, 7)
    assert np.array_equal(F.table, dickson_table(7, 2)[t_construction(ctx, u0).table])
    assert is_vectorial_hyperbent_oracle(F)
    with pytest.raises(ValueError, match=r"gcd\(r, 2\^\(2m\)-1\) != 1"):
        dickson_construction(make_field(6), make_ugroup(make_field(6)).elements[1], 7)
    with pytest.raises(ValueError):
        dickson_construction(ctx, u0, 5)
