"""Offline accuracy sweep fixing the Airy evaluation-layer radii.

Maps the worst relative error of each layer (Maclaurin series in extended
precision, the non-oscillatory integral representation, the Poincare
expansion) over circles of increasing radius, and reports the radii at
which each layer stops delivering ~1e-13.  The constants MACLAURIN_RADIUS,
ASYMPTOTIC_RADIUS and HI_QUAD_RADIUS in parcyl.airy are pinned from this
sweep.

Run:  python scripts/airy_sweep.py
"""

import cmath

import mpmath
import numpy as np

import importlib

pa = importlib.import_module("parcyl.airy")

mpmath.mp.dps = 40


def layer_error(fn, r, arg_max, nth=24):
    """Worst relative Ai error of one layer inside its valid sector."""
    worst = 0.0
    for th in np.linspace(-arg_max, arg_max, nth):
        z = r * cmath.exp(1j * th)
        try:
            mine = fn(z)[0]
        except Exception:
            return float("inf")
        ref = complex(mpmath.airyai(mpmath.mpc(z)))
        worst = max(worst, abs(mine - ref) / abs(ref))
    return worst


def hi_error(r, nth=16):
    worst = 0.0
    for th in np.linspace(-np.pi + 0.1, np.pi - 0.1, nth):
        z = r * cmath.exp(1j * th)
        mine = pa.scorer_hi(z)
        ref = complex(mpmath.scorerhi(mpmath.mpc(z)))
        worst = max(worst, abs(mine - ref) / abs(ref))
    return worst


def main():
    print("r      maclaurin    quadrature   asymptotic")
    for r in (1.0, 2.0, 3.0, 4.0, 4.5, 5.0, 5.5, 6.0, 7.0, 8.0, 9.0, 9.5,
              10.0, 12.0):
        em = layer_error(pa._maclaurin_pair, r, np.pi - 0.05)
        eq = layer_error(pa._quad_pair, r, 2.4) if r > 2.0 else float("nan")
        ea = layer_error(pa._asym_pair, r, 2 * np.pi / 3 + 0.15) \
            if r > 6.0 else float("nan")
        print(f"{r:5.1f}  {em:10.2e}  {eq:10.2e}  {ea:10.2e}")
    print("\npinned: maclaurin <= %.1f, quadrature <= %.1f, asymptotic beyond"
          % (pa.MACLAURIN_RADIUS, pa.ASYMPTOTIC_RADIUS))
    print("\nScorer Hi: quadrature vs reference")
    for r in (2.0, 8.0, 15.0, 25.0, 30.0, 35.0):
        print(f"{r:5.1f}  {hi_error(r):10.2e}")
    print("pinned: Hi quadrature <= %.1f, Poincare forms beyond" % pa.HI_QUAD_RADIUS)


if __name__ == "__main__":
    main()
