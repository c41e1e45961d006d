#!/usr/bin/env python3
"""Closed forms against the brute-force grid, side by side.

Every analytic ingredient has an independent numerical twin: trapezoid
quadrature for overlaps, purity for concurrence, finite-differenced density
matrices plus the spectral SLD sum for the QFIM.  This script prints the
relative disagreements; they should sit many orders below the 1e-6
acceptance line.
"""

import math

from superres import (
    ModelParams,
    concurrence_normalized,
    make_sources,
    numeric_concurrence,
    numeric_qfim,
    overlap,
    qfim,
)

print("overlap d: closed form vs trapezoid quadrature")
for s in (0.5, 1.0, 2.0, 4.0):
    hp, hm = make_sources(s, 1.0)
    exact = overlap(s, 1.0).d
    print(f"  s={s:<4} d={exact:.12f}  |delta|={abs(hp.inner(hm) - exact):.2e}")

print("\nconcurrence: closed form vs purity of the literal (grid x 2) state")
for theta, phi in ((math.pi / 2, 0.0), (math.pi / 4, 0.0), (math.pi / 4, 1.1)):
    p = ModelParams(2.0, 1.0, theta, phi)
    a, n = concurrence_normalized(p), numeric_concurrence(p)
    print(f"  theta={theta:.3f} phi={phi:<4} C={a:.10f}  |delta|={abs(a - n):.2e}")

print("\nQFIM: element formulas vs finite differences + spectral sum")
print(f"{'s':>5} {'theta':>7} {'rel dF_ss':>11} {'rel dF_tt':>11} {'rel dF_st':>11}")
worst = 0.0
for s in (0.5, 1.0, 2.0, 3.0):
    for theta in (math.pi / 8, math.pi / 4, 3 * math.pi / 8, math.pi / 2):
        p = ModelParams(s, 1.0, theta)
        ana, num = qfim(p), numeric_qfim(p)
        rels = [abs(a - n) / abs(n) for a, n in
                ((ana.f_ss, num.f_ss), (ana.f_tt, num.f_tt), (ana.f_st, num.f_st))]
        worst = max(worst, *rels)
        print(f"{s:5.1f} {theta:7.4f} {rels[0]:11.2e} {rels[1]:11.2e} {rels[2]:11.2e}")

print(f"\nworst relative QFIM delta: {worst:.2e}  (acceptance line: 1e-06)")
