"""Particular solutions of the inhomogeneous equations.

Elementary series away from the turning points with the certified error
majorant, Scorer-function expansions valid at the turning point, and the
connection constants Lambda_R, gamma_{m,R} (both kinds), alpha_R, c0, c3.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import loggamma, rgamma

from . import plane
from .airy import wi, wi_prime
from .coeffs import get_tables
from .errors import DomainError, OrderError, PairError, PoleError
from .lg import BOUND_SAFETY, CertifiedValue, _gauss
from .scaled import ScaledComplex
from .tp import _mod_sums, _root_A, tp_coeff_funcs

#: empirical margin for the dropped contour-remainder of the Scorer
#: expansions; the u=10 worst case measured by scripts/calibration_sweep.py
#: is 0.028, pinned with a generous safety factor
SCORER_MARGIN = 0.5


@dataclass(frozen=True)
class ConnectionConstant:
    value: ScaledComplex
    kind: str


# ----------------------------------------------------------------------
# terminating scaled hypergeometric and the connection constants
# ----------------------------------------------------------------------

def hyp_terminating(R: int, c: complex) -> complex:
    """F(1/2 - R/2, -R/2; c; 1/2) / Gamma-normalized: exactly floor(R/2)+1
    nonzero terms; entire in c through the 1/Gamma(c+s) scaling."""
    if R < 0:
        raise ValueError("R must be a nonnegative integer")
    a = 0.5 - 0.5 * R
    b = -0.5 * R
    total = 0j
    poch = 1.0
    half = 1.0
    fact = 1.0
    for s in range(R // 2 + 1):
        if s > 0:
            poch *= (a + s - 1) * (b + s - 1)
            half *= 0.5
            fact *= s
        total += poch * half / fact * complex(rgamma(complex(c) + s))
    return complex(total)


def lambda_R(a: float, R: int, sign: str = "+a") -> ConnectionConstant:
    """Lambda_R(a) or Lambda_R(-a); PoleError at the excluded parameters."""
    if sign not in ("+a", "-a"):
        raise ValueError("sign must be '+a' or '-a'")
    F = hyp_terminating(R, 0.5 * a - 0.5 * R + 0.75)
    if sign == "+a":
        if abs((a + 0.5) - round(a + 0.5)) < 1e-12 and round(a + 0.5) <= 0:
            raise PoleError("a + 1/2 at a nonpositive integer")
        lg = complex(loggamma(a + 0.5))
        logmag = (-0.5 * a + 1.5 * R + 0.25) * math.log(2.0) \
            + 0.5 * math.log(math.pi) + lg.real
        phase = math.pi * (0.5 * a + 0.5 * R - 0.75)
        val = ScaledComplex.from_log(logmag, phase) * cmath.exp(1j * lg.imag)
        return ConnectionConstant(val * F, "Lambda(+a)")
    # -a branch: the trigonometric prefactor, with the removable case
    # handled exactly: tan(pi a) + (-1)^R sec(pi a) = -(cos(pi t) + mu)/sin(pi t)
    # near a = N + 1/2, t = a - N - 1/2, mu = (-1)^{R-N}
    N = round(a - 0.5)
    t = a - (N + 0.5)
    if abs(t) < 1e-9:
        if (N - R) % 2 == 0:
            raise PoleError("Lambda_R(-a) undefined at a = N + 1/2, N-R even")
        trig = math.tan(math.pi * t / 2.0)
    else:
        trig = math.tan(math.pi * a) + (-1) ** R / math.cos(math.pi * a)
    logmag = (-0.5 * a + 1.5 * R - 0.25) * math.log(2.0) + math.log(math.pi)
    val = ScaledComplex.from_log(logmag) * (-(trig + 1j))
    return ConnectionConstant(val * F, "Lambda(-a)")


def gamma_mR(u: float, m: int, R: int) -> ConnectionConstant:
    """The turning-point connection constant for the z^2-1 equation."""
    t = get_tables()
    odd1 = sum(float(c) / u ** (2 * s + 1) for s, c in enumerate(t.E_odd_at_1(m)))
    F = hyp_terminating(R, 0.25 * u - 0.5 * R + 0.75)
    logmag = (-0.5 * u + R - 0.5) * math.log(2.0) \
        + (0.25 * u - 0.5 * R - 13.0 / 12.0) * math.log(u) \
        + 0.5 * math.log(math.pi) - 0.25 * u + odd1
    return ConnectionConstant(ScaledComplex.from_log(logmag) * F, "gamma_mR")


def gamma_W_mR(u: float, m: int, R: int) -> ConnectionConstant:
    """The Weber analogue, complex valued."""
    from .lg import chi_m

    F = hyp_terminating(R, 0.75 - 0.5 * R + 0.25j * u)
    lg = complex(loggamma(0.5 + 0.5j * u))
    logmag = (R - 1.0) * math.log(2.0) \
        + (-0.5 * R - 13.0 / 12.0) * math.log(u) + math.pi * u / 8.0 + lg.real
    phase = -0.25 * u * math.log(2.0) + chi_m(u, m) - 0.25 * math.pi * R \
        + math.pi / 8.0 + lg.imag
    return ConnectionConstant(ScaledComplex.from_log(logmag, phase) * F, "gamma_W")


def alpha_R(u: float, R: int) -> ConnectionConstant:
    """The left-half-plane Stokes constant of the negative-parameter Weber
    inhomogeneous solution."""
    F = hyp_terminating(R, 0.75 - 0.5 * R - 0.25j * u)
    lg = complex(loggamma(0.5 - 0.5j * u))
    logmag = 0.5 * math.log(math.pi) - 0.25 * math.pi * u \
        + (1.5 * R + 0.25) * math.log(2.0) + lg.real
    phase = 0.25 * (1.0 - R) * math.pi + 0.25 * u * math.log(2.0) + lg.imag
    return ConnectionConstant(ScaledComplex.from_log(logmag, phase) * F, "alpha_R")


def c0_const(u: float) -> complex:
    return -1j * math.exp(-math.pi * u / 2.0)


def c3_const(u: float) -> ScaledComplex:
    lg = complex(loggamma(0.5 - 0.5j * u))
    return ScaledComplex.from_log(
        0.5 * math.log(2.0 * math.pi) - math.pi * u / 4.0 - lg.real,
        math.pi / 4.0 - lg.imag)


# ----------------------------------------------------------------------
# elementary inhomogeneous series with certified bounds
# ----------------------------------------------------------------------

_PAIR_ENDPOINTS_PLUS = {0: "+inf", 1: "+iinf", 2: "-inf", 3: "-iinf"}
_PAIR_ENDPOINTS_WEBM = {0: "e+ipi/4", 1: "e+3ipi/4", 2: "e-3ipi/4", 3: "e-ipi/4"}


def _check_n_constraint(n: int, R: int) -> None:
    if not n > 0.25 * R - 0.375:
        raise OrderError(f"n={n} violates n > R/4 - 3/8 for R={R}")


def _series_value(u: float, z: complex, n: int, R: int, variant: str) -> complex:
    t = get_tables()
    gvariant = "minus" if variant == "minus" else "plus"
    G = t.G(R, gvariant, s_max=n)
    acc = 0j
    for s in range(n):
        term = G[s](complex(z)) / u ** (2 * s)
        if variant == "weber-":
            term *= (-1) ** (s + 1)
        acc += term
    return acc / u ** 2


def _bound_integrals(u: float, z: complex, n: int, R: int, variant: str,
                     pair: tuple[int, int]) -> float:
    """Certified error majorant along the progressive two-leg path through z."""
    t = get_tables()
    gvariant = "minus" if variant == "minus" else "plus"
    sgn = -1.0 if variant == "minus" else 1.0  # z^2 - 1 vs z^2 + 1
    G = t.G(R, gvariant, s_max=n + 1)
    gn = G[n]
    gnd = gn.deriv()

    if variant == "minus":
        eps = {0: "+inf", 1: "+iinf", -1: "-iinf"}
        legs = [plane.monotone_path(z, eps[pair[0]], "PCF-"),
                plane.monotone_path(z, eps[pair[1]], "PCF-")]
    elif variant == "weber-":
        legs = [plane.monotone_path(z, _PAIR_ENDPOINTS_WEBM[pair[0]], "WEB-"),
                plane.monotone_path(z, _PAIR_ENDPOINTS_WEBM[pair[1]], "WEB-")]
    else:
        legs = [plane.monotone_path(z, _PAIR_ENDPOINTS_PLUS[pair[0]], "PCF+"),
                plane.monotone_path(z, _PAIR_ENDPOINTS_PLUS[pair[1]], "PCF+")]

    x, w = _gauss()
    I1 = 0.0
    I2 = 0.0
    sup_g = 0.0
    for leg in legs:
        for zs, ze in leg.segments():
            tt = 0.5 * x + 0.5
            zn = zs + (ze - zs) * tt
            dz = abs(ze - zs) * 0.5 * w
            base = np.abs(zn * zn + sgn)
            gv = np.array([gn(complex(v)) for v in zn])
            gdv = np.array([gnd(complex(v)) for v in zn])
            comb = np.abs(gdv + zn * gv / (2.0 * (zn * zn + sgn)))
            I1 += float(np.sum(base ** 0.25 * comb * dz))
            # 4 |Phi f^{1/2}|: numerator |2-3t^2| for the z^2+1 equations,
            # |3t^2+2| for the z^2-1 one
            phi_num = np.abs(3.0 * zn * zn + 2.0) if variant == "minus" \
                else np.abs(2.0 - 3.0 * zn * zn)
            I2 += float(np.sum(phi_num / base ** 2.5 * dz))
            sup_g = max(sup_g, float(np.max(base ** 0.25 * np.abs(gv))))

    wz = abs(z * z + sgn) ** 0.25
    Lbar = sup_g + 0.5 * I1
    denom = 1.0 - I2 / (8.0 * u)
    if denom <= 0:
        raise DomainError("bound integral too large: path passes too close "
                          "to a turning point")
    bound = u ** (-2 * n - 2) * (abs(gn(complex(z))) + I1 / (2.0 * wz)) \
        + Lbar / (8.0 * u ** (2 * n + 3) * wz) / denom * I2
    return bound * BOUND_SAFETY


def _check_pair_domain(z: complex, variant: str, pair: tuple[int, int]) -> None:
    j, k = pair
    if variant == "plus":
        if (j, k) == (1, 3):
            raise PairError("the (1,3) recession pair has an empty domain")
        tag = f"Z{j}{k}"
        if tag not in plane.DOMAIN_TAGS:
            raise PairError(f"unsupported pair {pair}")
        if not plane.domain_contains(z, plane.DomainId(tag)):
            raise DomainError(f"z={z} outside the validity domain {tag}")
    elif variant == "minus":
        if pair not in ((0, 1), (-1, 0)):
            raise PairError("minus-variant series supports pairs (0,1), (-1,0)")
        if not plane.domain_contains(z, plane.DomainId("Z")):
            raise DomainError("z outside the turning-point domain")
        if pair == (0, 1) and z.imag < -1e-12:
            raise DomainError("pair (0,1) valid in the upper half plane")
        if pair == (-1, 0) and z.imag > 1e-12:
            raise DomainError("pair (-1,0) valid in the lower half plane")
    elif variant == "weber-":
        if pair != (0, 3):
            raise PairError("the negative-parameter Weber series is provided "
                            "for the (0,3) pair")
        if not plane.domain_contains(z, plane.DomainId("Zb03")):
            raise DomainError("z outside the (0,3) validity domain")
    else:
        raise ValueError(variant)


def inhom_series(u: float, z: complex, n: int, R: int, variant: str = "plus",
                 pair: tuple[int, int] = (0, 2)) -> CertifiedValue:
    """Scaled particular solution (2u)^{R/2+1} w with the certified bound.

    variant 'plus': U_R^{(j,k)}(u/2, sqrt(2u) z); 'minus': the negative
    parameter analogue; 'weber-': W_R^{(0,3)}(-u/2, sqrt(2u) z) (switches
    automatically to the reflection assembly for Re z < 0).
    """
    z = complex(z)
    _check_n_constraint(n, R)
    if variant == "weber-" and z.real < -1e-12:
        return _weber_left_assembly(u, z, n, R)
    _check_pair_domain(z, variant, pair)
    w = _series_value(u, z, n, R, variant)
    bound = _bound_integrals(u, z, n, R, variant, pair)
    scale = ScaledComplex.from_log((0.5 * R + 1.0) * math.log(2.0 * u))
    rel = bound / abs(w) if w != 0 else math.inf
    val = scale * w
    return CertifiedValue(val, rel, n)


def _weber_left_assembly(u: float, z: complex, n: int, R: int) -> CertifiedValue:
    """Sharper left-half-plane evaluation through the reflection connection."""
    from .lg import weber_neg_Wj

    zr = -z
    base = inhom_series(u, zr, n, R, "weber-", (0, 3))
    al = alpha_R(u, R).value
    e = math.exp(-math.pi * u / 2.0)
    c_plus = ((-1) ** (R + 1) - 1j * e)
    c_minus = ((-1) ** (R + 1) + 1j * e)
    w0 = weber_neg_Wj(u, zr, min(n, 5), 0)
    w3 = weber_neg_Wj(u, zr, min(n, 5), 3)
    term0 = al * c_plus * w0.value
    term3 = al.conj() * c_minus * w3.value
    val = base.value * float((-1) ** R) + term0 + term3
    lv = val.log_abs
    rel = base.rel_bound * math.exp(min(base.value.log_abs - lv, 50.0)) \
        + w0.rel_bound * math.exp(min(term0.log_abs - lv, 50.0)) \
        + w3.rel_bound * math.exp(min(term3.log_abs - lv, 50.0))
    return CertifiedValue(val, rel, n, noncertified=("reflection_terms",))


# ----------------------------------------------------------------------
# Scorer-function expansions at the turning point
# ----------------------------------------------------------------------

def _J_m(u: float, z: complex, m: int, variant: str) -> complex:
    """the ring integrand factor built from the modified-coefficient sums
    and the factorial tails (upper-side conventions; Im z >= 0)."""
    even_t, odd_t, even_p, odd_p = _mod_sums(u, z, m, variant)
    _, zeta = plane.xi_zeta(z)
    if variant == "WEB+":
        zc = -zeta
        z32 = 1j * (zeta ** 1.5)  # (-zeta)^{3/2} continued from (-1,1)
        if z.imag == 0.0 and -1.0 < z.real < 1.0:
            z32 = complex((-zeta.real) ** 1.5)
    else:
        zc = zeta
        z32 = zeta ** 1.5
        if z.imag == 0.0 and -1.0 < z.real < 1.0:
            z32 = -1j * ((-zeta.real) ** 1.5)
    s1 = sum(math.factorial(3 * k) / math.factorial(k) / (3.0 * u * u * zc ** 3) ** k
             for k in range(m + 1))
    s2 = sum(math.factorial(3 * k + 1) / math.factorial(k) / (3.0 * u * u * zc ** 3) ** k
             for k in range(m + 1))
    return -cmath.exp(even_t) * cmath.cosh(odd_t) * s1 \
        + cmath.exp(even_p) * cmath.sinh(odd_p) * s2 / (u * z32)


_RING_CACHE: dict = {}


def _scorer_ring(u: float, m: int, variant: str, r0: float = None):
    from .tp import CAUCHY_NODES, CAUCHY_RADIUS

    if r0 is None:
        r0 = CAUCHY_RADIUS
    key = (u, m, variant, r0)
    if key not in _RING_CACHE:
        th = (np.arange(CAUCHY_NODES) + 0.5) * (2.0 * math.pi / CAUCHY_NODES)
        tk = 1.0 + r0 * np.exp(1j * th)
        vals = np.empty(CAUCHY_NODES, dtype=complex)
        for i, t in enumerate(tk):
            t = complex(t)
            tt = t if t.imag >= 0 else t.conjugate()
            _, zeta = plane.xi_zeta(tt)
            zc = -zeta if variant == "WEB+" else zeta
            v = _root_A(tt) * _J_m(u, tt, m, variant) / zc
            vals[i] = v if t.imag >= 0 else v.conjugate()
        _RING_CACHE[key] = (tk, vals)
    return _RING_CACHE[key]


def _scorer_contour(u: float, z: complex, m: int, variant: str) -> complex:
    """(1/2 pi i) contour integral of root_A J_m / (zeta (t - z)) dt on a
    ring around the turning point enclosing z.

    The radius grows with |z-1| (snapped to a grid so rings are shared) but
    stays below 2 and clear of the second turning point.
    """
    d = abs(z - 1.0)
    if d > 1.15:
        raise DomainError("Scorer form provided for |z-1| <= 1.15; use the "
                          "elementary series farther out")
    r0 = min(max(0.5, 0.05 * math.ceil((d + 0.4) / 0.05)), 1.55)
    tk, vals = _scorer_ring(u, m, variant, r0)
    return complex(np.sum(vals * (tk - 1.0) / (tk - z)) / len(tk))


def _gstar_sum(u: float, z: complex, m: int, R: int, weber: bool) -> complex:
    t = get_tables()
    acc = 0j
    for s in range(m + 1):
        term = t.G_star(s, R)(complex(z)) / u ** (2 * s)
        if weber:
            term *= (-1) ** (s + 1)
        acc += term
    return acc / u ** 2


def inhom_scorer(u: float, z: complex, m: int, R: int, variant: str = "PCF-",
                 pair: tuple[int, int] = (-1, 1)) -> CertifiedValue:
    """Turning-point expansion of the scaled particular solution
    (2u)^{R/2+1} w_R^{(j,k)}; Scorer-function based, valid at z = 1.

    For variant 'WEB+' the assembly uses the Weber connection constant
    and sign-flipped analytic parts is used.
    """
    z = complex(z)
    if variant not in ("PCF-", "WEB+"):
        raise ValueError("variant must be 'PCF-' or 'WEB+'")
    if pair not in ((-1, 1), (0, 1), (-1, 0)):
        raise PairError("pair must be one of (-1,1), (0,1), (-1,0)")
    if m > 4:
        raise OrderError("m <= 4 for the Scorer expansions")
    if variant == "PCF-" and not plane.domain_contains(z, plane.DomainId("Z")):
        raise DomainError("z outside the turning-point domain")
    if variant == "WEB+" and z.imag == 0.0 and z.real <= -1.0:
        raise DomainError("on the cut (-inf,-1]")
    if z.imag < 0:
        flipped = {(-1, 1): (-1, 1), (0, 1): (-1, 0), (-1, 0): (0, 1)}[pair]
        v = inhom_scorer(u, z.conjugate(), m, R, variant, flipped)
        return CertifiedValue(v.value.conj(), v.rel_bound, m, v.domain_ok,
                              v.noncertified)

    weber = variant == "WEB+"
    gamma = (gamma_W_mR(u, m, R) if weber else gamma_mR(u, m, R)).value.to_complex()
    _, zeta = plane.xi_zeta(z)
    arg = -u ** (2.0 / 3.0) * zeta if weber else u ** (2.0 / 3.0) * zeta
    co = tp_coeff_funcs(u, z, m, variant)
    # the solution pair labels recession sectors (0 <-> +inf, +-1 <-> +-i inf
    # of the z plane); the bounded Scorer companion for sectors {0,1} is the
    # e^{+2 pi i/3}-rotated one (verified against the quadrature oracle)
    wi_key = {(0, 1): (-1, 0), (-1, 0): (0, 1), (-1, 1): (-1, 1)}[pair]
    hom = gamma * (wi(arg, wi_key) * co.A + wi_prime(arg, wi_key) * co.B)
    contour = _scorer_contour(u, z, m, variant)
    g_part = _gstar_sum(u, z, m, R, weber) - gamma * contour / u ** (2.0 / 3.0)
    w = hom + g_part
    scale = ScaledComplex.from_log((0.5 * R + 1.0) * math.log(2.0 * u))
    est = SCORER_MARGIN * (10.0 / u) ** (2 * m + 4) + co.est_err
    rel = est  # envelope-relative figure
    return CertifiedValue(scale * w, rel, m, noncertified=("contour_remainder",))


# ----------------------------------------------------------------------
# assembled connections
# ----------------------------------------------------------------------

def connect_inhom(variant: str, R: int, u: float, z: complex,
                  order: int = 3) -> CertifiedValue:
    """Assembled left-half-plane/connection values of the distinguished
    particular solutions: the half-sum form for the z^2-1 equation and the
    reflection form for the negative-parameter Weber equation."""
    if variant in ("PCF-", "minus"):
        return connect_inhom_pcfm(u, z, order, R)
    if variant in ("WEB-", "weber-"):
        return _weber_left_assembly(u, complex(z), order, R)
    raise ValueError("variant must be 'PCF-' or 'WEB-'")


def connect_inhom_pcfm(u: float, z: complex, m: int, R: int) -> CertifiedValue:
    """U_R^{(0,2)}(-u/2, sqrt(2u) z) via the half-sum connection with the
    real part of Lambda_R(-a)."""
    from .tp import pcf_U_neg

    z = complex(z)
    a = u / 2.0
    u01 = inhom_scorer(u, z, m, R, "PCF-", (0, 1))
    u03 = inhom_scorer(u, z, m, R, "PCF-", (-1, 0))
    lam = lambda_R(a, R, "-a").value
    re_lam = ScaledComplex.from_complex(complex(lam.to_complex().real))
    uneg = pcf_U_neg(u, z, m)
    val = (u01.value + u03.value) * 0.5 + re_lam * uneg.value
    rel = max(u01.rel_bound, u03.rel_bound, uneg.rel_bound) * 3.0
    return CertifiedValue(val, rel, m, noncertified=("contour_remainder",))
