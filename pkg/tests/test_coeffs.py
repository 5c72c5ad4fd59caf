"""Exact-arithmetic identities of the coefficient tables (zero tolerance)."""

from fractions import Fraction as F

import pytest

from parcyl.coeffs import gen_Ebar, gen_G, get_tables, modified_coeff
from parcyl.errors import OrderError, TurningPointError

S_MAX = 12


@pytest.fixture(scope="module")
def tables():
    return get_tables()


def test_seed_values(tables):
    # first coefficients in closed form
    assert tables.Ebar[1](F(1)) == F(1, 24)
    assert tables.Ebar[1](F(1, 2)) == F(1, 2) * (6 - F(5, 4)) / 24
    assert tables.Etilde[1](F(1)) == F(1, 24)
    assert tables.E[1](F(1)) == F(-1, 24)
    assert tables.Ebar[2](F(0)) == F(-2, 16)
    assert tables.E[2](F(0)) == F(-2, 16)


def test_parity_and_normalization(tables):
    for fam in (tables.Ebar, tables.Etilde, tables.E):
        for s in range(1, S_MAX + 1):
            assert fam[s].parity() == s % 2
            if s % 2 == 0:
                assert fam[s](F(1)) == 0
            else:
                assert fam[s](F(0)) == 0


def test_reflection_identity(tables):
    # E_s = (-1)^s Ebar_s, exactly, all generated orders
    for s in range(1, S_MAX + 1):
        assert tables.E[s].coeffs == tables.Ebar[s].scale(F((-1) ** s)).coeffs


def test_chi_series_termwise(tables):
    # the two odd-coefficient-at-1 series agree exactly term by term
    for s in range(0, S_MAX // 2):
        assert tables.Etilde[2 * s + 1](F(1)) == tables.Ebar[2 * s + 1](F(1))


def test_degree_bound(tables):
    for s in range(1, S_MAX + 1):
        assert tables.Ebar[s].degree <= 3 * s


def test_airy_sequences(tables):
    a, at = tables.airy.a, tables.airy.a_tilde
    assert a[1] == F(5, 72) and a[2] == F(5, 72)
    assert at[1] == F(-7, 72) and at[2] == F(-7, 72)
    # one recursion step by hand
    assert a[3] == F(3, 2) * a[2] + F(1, 2) * a[1] * a[1]
    assert a[3] == F(1105, 10368)


def test_G_generation(tables):
    g = gen_G(6, 0, "plus")
    assert g[0](F(0)) == F(-1)              # Gbar_{0,0}(0) = -1
    assert g[1](F(0)) == F(2)               # (2 - 6 z^2)/(z^2+1)^4 at 0
    # full check of the printed form of Gbar_{1,0}
    assert g[1].numerator.coeffs == (F(2), F(0), F(-6))
    assert g[1].pole_power == 4
    gm = gen_G(6, 1, "minus")
    assert gm[0](F(0)) == 0                 # numerator z vanishes
    for s, gs in enumerate(g):
        assert gs.pole_power == 3 * s + 1
        assert gs.decay_order() <= 0 - 2 - 4 * s


def test_analytic_part(tables):
    # s=0, R=0: analytic part of -1/(z^2-1) at z=1 is 1/(2(z+1))
    gstar = tables.G_star(0, 0)
    assert gstar(F(1)) == F(1, 4)
    assert gstar(F(3)) == F(1, 8)
    # residue removal: G - G* equals the principal part -1/(2(z-1))
    g = tables.G(0, "minus")[0]
    z = F(7, 5)
    assert g(z) - gstar(z) == -F(1, 2) / (z - 1)


def test_analytic_part_higher_order(tables):
    # pole removal at higher s: value stays finite approaching z = 1
    gstar = tables.G_star(1, 0)
    near = gstar(F(1) + F(1, 10 ** 8))
    at = gstar(F(1))
    assert abs(float(near - at)) < 1e-6


def test_modified_coeff_assembly(tables):
    from parcyl.plane import beta_map, xi_zeta

    z = 2.0
    xi, _ = xi_zeta(z)
    val = modified_coeff(1, z, "E")
    beta = beta_map(z, "PCF-")
    expect = tables.E[1](complex(beta)) - float(tables.airy.a[1]) / xi
    assert val == pytest.approx(expect, rel=1e-14)
    # real on the real axis beyond the turning point
    assert abs(modified_coeff(2, 3.0, "E").imag) < 1e-14


def test_modified_coeff_guard():
    with pytest.raises(TurningPointError):
        modified_coeff(1, 1.0 + 1e-12, "E")
    with pytest.raises(OrderError):
        modified_coeff(99, 2.0, "E")


def test_generation_depth_guard():
    with pytest.raises(OrderError):
        gen_Ebar(0)


def test_airy_seq_matches_poincare_constants(tables):
    """The scalar sequence reproduces the classical Airy asymptotic
    constants through the exponent/product correspondence
    exp(sum (-1)^s a_s/(s xi^s)) = sum (-1)^k u_k xi^{-k} + O(xi^{-8}),
    with u_k from their own independent recursion."""
    uk = [1.0]
    for k in range(1, 8):
        uk.append(uk[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1)
                  / ((2 * k - 1) * 216.0 * k))
    import math

    def exp_form(xi):
        return math.exp(sum((-1) ** s * float(tables.airy.a[s]) / (s * xi ** s)
                            for s in range(1, 8)))

    def u_form(xi):
        return sum((-1) ** k * uk[k] / xi ** k for k in range(8))

    d30 = abs(exp_form(30.0) - u_form(30.0))
    d60 = abs(exp_form(60.0) - u_form(60.0))
    assert d30 < 1e-12
    # the residual decays at least like xi^{-8}
    assert d60 < d30 / 2 ** 7
