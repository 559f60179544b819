"""Tight frames, the simplex construction, and Naimark complements.

A tight frame spreads k unit vectors through R^n so evenly that the frame
operator F F^T is a multiple of the identity.  The prototype with one
redundant vector is the simplex frame: n+1 unit vectors pairwise at the
same obtuse angle.  Its Gram matrix is the Naimark complement of the
all-ones rank-1 Gram matrix, and complementation is an involution.
"""

import numpy as np

import framelab as fl

n = 4
F = fl.simplex_frame(n)
print(f"simplex frame, {n + 1} vectors in R^{n}:")
print(np.round(F.entries, 4))

b = fl.frame_bounds(F)
tight, bound = fl.is_tight(F)
print(f"\nframe bounds: ({b.lower:.6f}, {b.upper:.6f})  tight={tight}  "
      f"common bound {bound:.6f}  (expected {(n + 1) / n:.6f})")

G = fl.gram(F)
print("\nGram matrix (unit diagonal, every off-diagonal entry = -1/n):")
print(np.round(G.entries, 4))

ones = fl.Frame("R", np.ones((1, n + 1)))
comp = fl.complement(fl.gram(ones))
print("\nNaimark complement of the all-ones Gram point minus the simplex Gram:",
      np.max(np.abs(comp.entries - G.entries)))

round_trip = fl.complement(fl.complement(G))
print("complement is an involution, round-trip gap:",
      np.max(np.abs(round_trip.entries - G.entries)))

print("\nall one-redundant real Gram points, with orbit counts:")
for m in range(1, 6):
    res = fl.enumerate_one_redundant(m)
    print(f"  n={m}: {len(res.points)} points, "
          f"{res.permutation_orbits} permutation orbits, "
          f"{res.sign_orbits} sign orbit(s)")

# recovering a frame from its Gram point lands in the same orbit
R = fl.gram(fl.simplex_frame(3))
recovered = fl.frame_from_gram(R)
witness = fl.same_orbit(recovered, fl.simplex_frame(3))
print(f"\nframe recovered from the Gram point matches up to an orthogonal map, "
      f"residual {witness.residual:.2e}")
