"""How the space of tight-frame Gram points splits into strata.

The support pattern of a Gram matrix partitions the vector indices into
minimal blocks; a single block means the frame cannot be split into tight
frames for orthogonal subspaces.  At such points the diagonal-extraction
map has full rank k-1 and the stratum is a manifold whose dimension has a
closed form.  When k and n share a divisor, lower strata appear whose
block sizes are multiples of k/gcd(k,n).
"""

import numpy as np

import framelab as fl

# an orthodecomposable frame: two orthonormal bases interleaved
F = fl.Frame("R", np.array([[1, 0, -1, 0], [0, 1, 0, -1]], dtype=float))
dec, part = fl.is_orthodecomposable(F)
print("two interleaved bases decompose:", dec, "blocks:", part.blocks)
rep = fl.tangent_report(fl.gram(F))
print(f"tangent rank {rep.rank} (regular needs {F.k - 1}); "
      f"stratum dimension {rep.stratum_dim}")

# a regular point with the same (k, n) = (4, 2): connected support
S = fl.construct_regular_point(4, 2)
print("\nconstructed regular point, support partition:",
      fl.commutant_partition(S.entries).blocks)
print("tangent report:", fl.tangent_report(S))

# coprime (k, n): every valid Gram point is regular
for (k, n) in [(5, 2), (7, 3)]:
    for field in ("R", "C"):
        rng = np.random.default_rng(7)
        R = fl.gram(fl.random_tight_frame(k, n, field, rng, spread=0.05))
        rep = fl.tangent_report(R)
        dims = fl.expected_dimensions(k, n, field)
        print(f"({k},{n},{field}): regular={rep.regular} "
              f"stratum dim {rep.stratum_dim} = closed form {dims['dimG']}")

# block sizes are always multiples of k' = k/gcd(k, n)
F6 = fl.random_tight_frame(6, 3, "R", np.random.default_rng(1))
_, p6 = fl.is_orthodecomposable(F6)
print("\n(6,3) frame block sizes:", [len(b) for b in p6.blocks],
      "all multiples of k' = 2:", fl.check_block_cardinalities(p6, 6, 3))
