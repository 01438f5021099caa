"""
A_alpha spectra of a few small graphs
=====================================

Walks from the adjacency matrix (alpha = 0) towards the degree matrix
(alpha -> 1) on a cycle, a star and the Petersen graph, and prints the
energy at each step.
"""

import numpy as np

from alphaspec import generate, spectrum, distinct_eigenvalues

# the 5-cycle: eigenvalues 2*alpha + (1 - alpha) * 2cos(2 pi j / 5)
c5 = generate("cycle:5")
for alpha in (0.0, 0.25, 0.5, 0.75):
    sp = spectrum(c5, alpha)
    print(f"C5   alpha={alpha:.2f}  p={np.round(sp.p, 4)}  E={sp.energy:.4f}")

# a star is not regular, so the top eigenvalue moves between delta and Delta
k13 = generate("star:3")
for alpha in (0.0, 0.5, 0.9):
    sp = spectrum(k13, alpha)
    print(f"K1,3 alpha={alpha:.1f}  p1={sp.radius:.4f}  (delta={k13.min_degree}, Delta={k13.max_degree})")

# Petersen keeps three distinct eigenvalues for every alpha
pet = generate("petersen")
for alpha in (0.0, 0.3, 0.6):
    clusters = distinct_eigenvalues(spectrum(pet, alpha))
    print(f"Petersen alpha={alpha}:", [(round(v, 4), k) for v, k in clusters])

# at alpha = 1/2 the matrix is half the signless Laplacian
g = generate("path:5")
A = g.adjacency.astype(float)
q = np.linalg.eigvalsh(np.diag(A.sum(1)) + A)
qe = np.abs(q - 2 * g.m / g.n).sum()
print("P5: E(A_1/2) =", round(spectrum(g, 0.5).energy, 10), " QE/2 =", round(qe / 2, 10))
