"""
Strongly regular graphs: closed form against the numeric spectrum
================================================================

The closed form gives r once and two roots of x^2 - Bx - C with
multiplicities solved from the trace.  We compare it with Jacobi
eigenvalues for the three SRGs we can build.
"""

import numpy as np

from alphaspec import SrgParams, srg_alpha_spectrum, spectrum
from alphaspec.graph import complete_bipartite, cycle, petersen

cases = {
    "C5": (SrgParams(5, 2, 0, 1), cycle(5)),
    "Petersen": (SrgParams(10, 3, 0, 1), petersen()),
    "K3,3": (SrgParams(6, 3, 0, 3), complete_bipartite(3, 3)),
}

for name, (params, g) in cases.items():
    worst = 0.0
    for alpha in np.arange(10) / 10:
        closed = np.array(srg_alpha_spectrum(params, alpha).multiset())
        worst = max(worst, np.abs(closed - spectrum(g, alpha).p).max())
    res = srg_alpha_spectrum(params, 0.3)
    pretty = ", ".join(f"{v:.4f} x{k}" for v, k in res.eigenvalues())
    print(f"{name:9s} alpha=0.3: {pretty}   max deviation over grid {worst:.1e}")

# a parameter set that passes the counting identity but has no integral multiplicities
try:
    srg_alpha_spectrum(SrgParams(5, 3, 1, 3), 0.0)
except Exception as exc:
    print(type(exc).__name__ + ":", exc)
