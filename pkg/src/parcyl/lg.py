"""Liouville-Green expansions with certified error bounds.

Homogeneous solutions of w'' = u^2 (z^2+1) w matched to the parabolic
cylinder function (positive parameter), and the negative-parameter real
Weber functions, all with computable truncation-error majorants: the error
factor (1 + eta) obeys

    |eta_{n,j}| <= u^{-n} omega exp{ u^{-1} varpi + u^{-n} omega },

with omega, varpi integrals of exact coefficient derivatives along the
monotone progressive path in the rational Liouville variable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import plane
from .coeffs import get_tables
from .errors import DomainError, OrderError
from .scaled import ScaledComplex

#: discretized paths slightly shorten the true progressive chain
BOUND_SAFETY = 1.05

#: refusal radius around the turning points +-i (no Airy variant in scope
#: for the z^2+1 equations; the bounds blow up inside this disk)
TP_REFUSAL = 0.15

_GLN = 32
_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss(n: int = _GLN):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


@dataclass(frozen=True)
class CertifiedValue:
    value: ScaledComplex
    rel_bound: float
    order: int
    domain_ok: bool = True
    noncertified: tuple[str, ...] = ()

    def to_complex(self) -> complex:
        return self.value.to_complex()


# ----------------------------------------------------------------------
# path mapping into the rational variable
# ----------------------------------------------------------------------

def _beta_image(path: plane.PathPolyline):
    """Gauss nodes of the continuous beta_bar image of a z-plane path.

    Tracks the sheet: crossing a cut of beta_bar (imaginary axis beyond the
    turning points) flips the sign of the principal branch.  Returns a list
    of (p_nodes, dp_nodes) arrays ordered from the far endpoint towards z,
    plus the continuously-continued value at the far end.
    """
    x, w = _gauss()
    segs = []
    sign = 1.0
    first_p = None
    for zs, ze in path.segments():
        # a segment crosses a beta_bar cut (imaginary axis beyond +-i) at
        # most once for the paths constructed here
        crossings = []
        if (zs.real) * (ze.real) < 0 and min(abs(zs.imag), abs(ze.imag)) >= 1.0:
            crossings = [zs.real / (zs.real - ze.real)]
        t_edges = [0.0] + crossings + [1.0]
        for t0, t1 in zip(t_edges[:-1], t_edges[1:]):
            t = 0.5 * (t1 - t0) * x + 0.5 * (t0 + t1)
            zn = zs + (ze - zs) * t
            sq = np.sqrt((zn * zn + 1.0).astype(complex))
            p = sign * zn / sq
            dp = sign / sq ** 3 * (ze - zs) * 0.5 * (t1 - t0)
            segs.append((p, dp * w))
            if first_p is None:
                a = zs + (ze - zs) * t0
                first_p = sign * a / np.sqrt(complex(a * a + 1.0))
            if t1 in crossings:
                sign = -sign
    return segs, first_p


def _append_endpoint_tail(segs, first_p):
    """Prepend the straight p-plane run from the exact endpoint +-1 to the
    image of the truncated far vertex."""
    target = 1.0 if first_p.real >= 0 else -1.0
    x, w = _gauss()
    t = 0.5 * x + 0.5
    p = target + (first_p - target) * t
    dp = (first_p - target) * 0.5 * np.ones_like(t)
    return [(p, dp * w)] + segs


def omega_varpi(n: int, u: float, segs, family_d) -> tuple[float, float]:
    """The two bound integrals along the mapped path.

    omega = 2 int |E_n'(p) dp|
          + sum_{s=1}^{n-1} u^{-s} int | sum_{k=s}^{n-1} W(p) E_k' E_{s+n-k-1}' dp |
    varpi = 4 sum_{s=0}^{n-2} u^{-s} int |E_{s+1}'(p) dp|

    family_d: list of derivative polynomials (index by subscript).
    """
    if n >= len(family_d):
        raise OrderError(f"order n={n} beyond generated tables")
    omega = 0.0
    varpi = 0.0
    for p, dpw in segs:
        absdp = np.abs(dpw)
        wfac = np.abs(1.0 - p * p) ** 2
        en = np.abs(_polyval(family_d[n], p))
        omega += 2.0 * float(np.sum(en * absdp))
        for s in range(1, n):
            inner = np.zeros_like(p)
            for k in range(s, n):
                inner = inner + _polyval(family_d[k], p) * _polyval(family_d[s + n - k - 1], p)
            omega += u ** (-s) * float(np.sum(np.abs(inner) * wfac * absdp))
        for s in range(0, n - 1):
            varpi += 4.0 * u ** (-s) * float(np.sum(np.abs(_polyval(family_d[s + 1], p)) * absdp))
    return omega, varpi


_POLY_FLOAT_CACHE: dict[int, np.ndarray] = {}


def _polyval(poly, p):
    key = id(poly)
    c = _POLY_FLOAT_CACHE.get(key)
    if c is None:
        c = np.array([float(x) for x in poly.coeffs], dtype=float)
        _POLY_FLOAT_CACHE[key] = c
    out = np.zeros_like(p)
    for ck in c[::-1]:
        out = out * p + ck
    return out


def eta_bound(n: int, u: float, omega: float, varpi: float) -> float:
    return u ** (-n) * omega * math.exp(varpi / u + omega * u ** (-n)) * BOUND_SAFETY


def _lg_bound(u: float, z: complex, n: int, endpoint: str, family: str) -> float:
    path = plane.monotone_path(z, endpoint, "PCF+")
    segs, first_p = _beta_image(path)
    segs = _append_endpoint_tail(segs, first_p)
    t = get_tables()
    fam = {"Ebar": t.Ebar_d, "Etilde": t.Etilde_d}[family]
    om, vp = omega_varpi(n, u, segs, fam)
    return eta_bound(n, u, om, vp)


def _check_pcfp_domain(z: complex, which: str) -> None:
    if abs(z - 1j) < TP_REFUSAL or abs(z + 1j) < TP_REFUSAL:
        raise DomainError(f"z={z} within refusal radius of a turning point")
    side = "left" if which == "W2" else "right"
    if plane._on_pcfp_critical_curve(z, side):
        raise DomainError(f"z={z} on an excluded level curve")


# ----------------------------------------------------------------------
# homogeneous solutions, positive parameter
# ----------------------------------------------------------------------

def lg_W(u: float, z: complex, n: int, which: str) -> CertifiedValue:
    """The two exponent-form solutions of w'' = u^2(z^2+1) w.

    W1 = exp{ u xi_bar + sum (Ebar_s(beta)-Ebar_s(-1))/u^s } (1+eta_1),
    W2 = exp{ -u xi_bar + sum (-1)^s (Ebar_s(beta)-Ebar_s(1))/u^s } (1+eta_2).
    """
    if which not in ("W1", "W2"):
        raise ValueError("which must be 'W1' or 'W2'")
    if not 1 <= n <= get_tables().s_max // 2:
        raise OrderError(f"n={n} outside the supported order range")
    z = complex(z)
    _check_pcfp_domain(z, which)
    t = get_tables()
    xb = plane.xi_bar(z)
    bb = plane.beta_bar(z)
    expo = 0j
    if which == "W1":
        expo += u * xb
        for s in range(1, n):
            expo += (t.Ebar[s](bb) - float(t.Ebar[s](-1))) / u ** s
        endpoint = "-inf"
    else:
        expo += -u * xb
        for s in range(1, n):
            expo += (-1) ** s * (t.Ebar[s](bb) - float(t.Ebar[s](1))) / u ** s
        endpoint = "+inf"
    bound = _lg_bound(u, z, n, endpoint, "Ebar")
    return CertifiedValue(ScaledComplex.from_log_complex(expo), bound, n)


def _pcfp_prefactor(u: float, z: complex) -> ScaledComplex:
    # (2e/u)^{u/4} {2u(1+z^2)}^{-1/4}
    log_pref = (u / 4.0) * (math.log(2.0 / u) + 1.0)
    root = (2.0 * u * (1.0 + z * z)) ** 0.25
    return ScaledComplex.from_log(log_pref) * (1.0 / root)


def pcf_U_pos(u: float, z: complex, n: int, sign: str = "+z") -> CertifiedValue:
    """U(u/2, +-sqrt(2u) z) via the exponent-form expansions."""
    z = complex(z)
    if sign == "+z":
        w = lg_W(u, z, n, "W2")
    elif sign == "-z":
        w = lg_W(u, z, n, "W1")
    else:
        raise ValueError("sign must be '+z' or '-z'")
    val = _pcfp_prefactor(u, z) * w.value
    if z.imag == 0.0:
        val = ScaledComplex(complex(val.mantissa.real, 0.0), val.log_scale)
    return CertifiedValue(val, w.rel_bound, n)


def pcf_Uprime_pos(u: float, z: complex, n: int, sign: str = "+z") -> CertifiedValue:
    """U'(u/2, +-sqrt(2u) z): derivative-equation expansion with the tilde
    coefficient family and the inverted quarter-power weight."""
    z = complex(z)
    which = "W2" if sign == "+z" else "W1"
    if sign not in ("+z", "-z"):
        raise ValueError("sign must be '+z' or '-z'")
    if not 1 <= n <= get_tables().s_max // 2:
        raise OrderError(f"n={n} outside the supported order range")
    _check_pcfp_domain(z, which)
    t = get_tables()
    xb = plane.xi_bar(z)
    bb = plane.beta_bar(z)
    expo = 0j
    if which == "W1":
        expo += u * xb
        for s in range(1, n):
            expo += (t.Etilde[s](bb) - float(t.Etilde[s](-1))) / u ** s
        endpoint = "-inf"
    else:
        expo += -u * xb
        for s in range(1, n):
            expo += (-1) ** s * (t.Etilde[s](bb) - float(t.Etilde[s](1))) / u ** s
        endpoint = "+inf"
    bound = _lg_bound(u, z, n, endpoint, "Etilde")
    log_pref = (u / 4.0) * (math.log(2.0 / u) + 1.0)
    root = (2.0 * u * (1.0 + z * z)) ** 0.25
    val = ScaledComplex.from_log(log_pref) * (-0.5 * root) * \
        ScaledComplex.from_log_complex(expo)
    if z.imag == 0.0:
        val = ScaledComplex(complex(val.mantissa.real, 0.0), val.log_scale)
    return CertifiedValue(val, bound, n)


# ----------------------------------------------------------------------
# negative-parameter Weber functions
# ----------------------------------------------------------------------

def chi_m(u: float, m: int) -> float:
    """(u/4) ln(2e/u) - sum (-1)^s Ebar_{2s+1}(1) u^{-2s-1}."""
    t = get_tables()
    acc = (u / 4.0) * (math.log(2.0 / u) + 1.0)
    for s, c in enumerate(t.Ebar_odd_at_1(m)):
        acc -= (-1) ** s * float(c) / u ** (2 * s + 1)
    return acc


def _weber_bound(u: float, z: complex, m: int, j: int, family: str) -> float:
    endpoint = "e+ipi/4" if j == 0 else "e-ipi/4"
    zz = z
    path = plane.monotone_path(zz, endpoint, "WEB-")
    segs, first_p = _beta_image(path)
    segs = _append_endpoint_tail(segs, first_p)
    t = get_tables()
    fam = {"Ebar": t.Ebar_d, "Etilde": t.Etilde_d}[family]
    n = 2 * m + 2
    om, vp = omega_varpi(n, u, segs, fam)
    return eta_bound(n, u, om, vp)


def _check_webm_domain(z: complex) -> None:
    if abs(z - 1j) < TP_REFUSAL or abs(z + 1j) < TP_REFUSAL:
        raise DomainError(f"z={z} within refusal radius of a turning point")
    if z.real < -1e-12:
        raise DomainError("negative-parameter Weber expansions restricted to "
                          "the right half plane")


def weber_neg_Wj(u: float, z: complex, m: int, j: int,
                 derivative: bool = False) -> CertifiedValue:
    """W_j(-u/2, sqrt(2u) z) for j in {0, 3} (and the derivative variant)."""
    if j not in (0, 3):
        raise ValueError("j must be 0 or 3")
    z = complex(z)
    _check_webm_domain(z)
    t = get_tables()
    if 2 * m + 2 > t.s_max:
        raise OrderError(f"m={m} beyond generated depth")
    xb = plane.xi_bar(z)
    bb = plane.beta_bar(z)
    sgn = 1.0 if j == 0 else -1.0
    cm = chi_m(u, m)
    if derivative:
        fam_poly = t.Etilde
        # chi-tilde equals chi termwise (exact identity on the tables)
        phase = -sgn * (cm - 5.0 * math.pi / 8.0)
        pref = ScaledComplex.from_log(math.pi * u / 8.0) * \
            (0.5 * (2.0 * u) ** 0.25 * (1.0 + z * z) ** 0.25)
        fam = "Etilde"
    else:
        fam_poly = t.Ebar
        phase = -sgn * (cm - math.pi / 8.0)
        pref = ScaledComplex.from_log(math.pi * u / 8.0) * \
            (1.0 / ((2.0 * u) ** 0.25 * (1.0 + z * z) ** 0.25))
        fam = "Ebar"
    even = sum((-1) ** s * fam_poly[2 * s](bb) / u ** (2 * s)
               for s in range(1, m + 1))
    odd = sum((-1) ** s * fam_poly[2 * s + 1](bb) / u ** (2 * s + 1)
              for s in range(m + 1))
    expo = even + sgn * 1j * (u * xb) - sgn * 1j * odd
    val = pref * cmath.exp(1j * phase) * ScaledComplex.from_log_complex(expo)
    bound = _weber_bound(u, z, m, j, fam)
    return CertifiedValue(val, bound, m)


def weber_neg_real(u: float, x: float, m: int, sign: str = "+x") -> CertifiedValue:
    """W(-u/2, +-sqrt(2u) x) for x >= 0: cosine/sine forms with the exact
    elementary phase constant; the residual phase of (1+eta) is folded into
    the certified envelope-relative bound."""
    from .tp import weber_constants

    if x < 0:
        raise DomainError("x must be >= 0; use the sign argument")
    if sign not in ("+x", "-x"):
        raise ValueError("sign must be '+x' or '-x'")
    t = get_tables()
    if 2 * m + 2 > t.s_max:
        raise OrderError(f"m={m} beyond generated depth")
    z = complex(x)
    xb = plane.xi_bar(z).real
    bb = plane.beta_bar(z).real
    kbar = math.sqrt(1.0 + math.exp(-math.pi * u)) - math.exp(-math.pi * u / 2.0)
    wc = weber_constants(u, m)
    even = sum((-1) ** s * float(t.Ebar[2 * s](bb)) / u ** (2 * s)
               for s in range(1, m + 1))
    odd = sum((-1) ** s * float(t.Ebar[2 * s + 1](bb)) / u ** (2 * s + 1)
              for s in range(m + 1))
    theta = u * xb + math.pi / 4.0 - odd - wc.eps_m
    if sign == "+x":
        pref = (2.0 * kbar ** 2 / (u * (1.0 + x * x))) ** 0.25
        trig = math.cos(theta)
    else:
        pref = (2.0 / (u * kbar ** 2 * (1.0 + x * x))) ** 0.25
        trig = math.sin(theta)
    val = ScaledComplex.from_complex(pref * math.exp(even) * trig)
    eta = _weber_bound(u, z if x > 0 else complex(1e-9), m, 0, "Ebar")
    # dropped |1+eta| modulus and arg(1+eta) phase each contribute <= eta
    bound = 2.0 * eta
    return CertifiedValue(val, bound, m, noncertified=("eps_tilde_phase",))
