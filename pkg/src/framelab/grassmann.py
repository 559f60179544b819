"""Gram points of spherical tight frames and the frame <-> projection bridge.

The Gram matrix R = F*F of a spherical tight frame of k vectors in n
dimensions equals (k/n) P for a rank-n projection P with constant diagonal
n/k.  R is a complete invariant for the orbit of F under orthogonal
(unitary) transformations, so the set of such matrices serves as the orbit
space.  This module provides the invariant map and its local inverse, the
Naimark complement R -> (k/(k-n))(I - (n/k)R), the finite enumeration for
one redundant vector, and the holonomy sign of a loop of Gram points
(the determinant picked up when lifting the loop back to frames).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frames import DEFAULT_TOL, Frame, frame_operator, is_spherical, is_tight

#: maximum allowed max-norm gap between consecutive Gram points in a loop
DEFAULT_LOOP_STEP = 0.2

#: required spectral gap between the n-th and (n+1)-th eigenvalue of P
RANK_GAP = 0.5


@dataclass(frozen=True)
class GramPoint:
    """A k-by-k self-adjoint matrix R = (k/n) P, P a rank-n projection
    with unit diagonal (equivalently P_ii = n/k)."""

    field: str
    n: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("Gram point entries must be square")
        if self.field == "R":
            if np.iscomplexobj(a):
                if a.size and np.max(np.abs(a.imag)) > 0:
                    raise ValueError("real Gram point with complex entries")
                a = a.real
            a = np.array(a, dtype=np.float64)
        elif self.field == "C":
            a = np.array(a, dtype=np.complex128)
        else:
            raise ValueError(f"field must be 'R' or 'C', got {self.field!r}")
        if not np.all(np.isfinite(a)):
            raise ValueError("non-finite entries")
        if not (0 < self.n < a.shape[0]):
            raise ValueError(f"need 0 < n < k, got n={self.n}, k={a.shape[0]}")
        a.flags.writeable = False
        object.__setattr__(self, "entries", a)

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    def projection(self) -> np.ndarray:
        """The projection P = (n/k) R."""
        return (self.n / self.k) * self.entries


@dataclass(frozen=True)
class OrbitWitness:
    """An orthogonal/unitary U with G = U F, plus the achieved residual."""

    U: np.ndarray
    residual: float


@dataclass(frozen=True)
class GramCheck:
    """Per-invariant diagnostics for a Gram-point candidate."""

    self_adjoint: bool
    idempotent: bool
    unit_diagonal: bool
    rank_ok: bool

    @property
    def ok(self) -> bool:
        return self.self_adjoint and self.idempotent and self.unit_diagonal and self.rank_ok


def gram(F: Frame, tol: float = DEFAULT_TOL) -> GramPoint:
    """The orbit invariant F*F of a spherical tight frame.

    Raises ValueError naming the violated precondition when F is not
    unit-norm or not tight within tol.
    """
    problems = []
    if F.k <= F.n:
        problems.append(f"k={F.k} <= n={F.n} (no redundancy)")
    if not is_spherical(F, tol):
        problems.append("columns are not unit vectors")
    tight, _ = is_tight(F, tol)
    if not tight:
        problems.append("frame is not tight")
    if problems:
        raise ValueError("not a spherical tight frame: " + "; ".join(problems))
    return GramPoint(F.field, F.n, F.conj_transpose() @ F.entries)


def is_gram_point(M, n: int, tol: float = DEFAULT_TOL) -> GramCheck:
    """Check the Gram-point invariants of a square matrix.

    Verifies M* = M, idempotency of P = (n/k) M, unit diagonal, and that
    the spectrum of P splits into n eigenvalues near 1 and k-n near 0 with
    a gap of at least RANK_GAP.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("expected a square matrix")
    k = M.shape[0]
    scale = max(1.0, float(np.max(np.abs(M))))
    sa = bool(np.max(np.abs(M - M.conj().T)) <= tol * scale)
    P = (n / k) * M
    idem = bool(np.max(np.abs(P @ P - P)) <= tol * scale)
    diag = bool(np.max(np.abs(np.diag(M) - 1.0)) <= tol)
    Psym = (P + P.conj().T) / 2
    ev = np.linalg.eigvalsh(Psym)[::-1]
    rank_ok = bool(0 < n < k and ev[n - 1] - ev[n] >= RANK_GAP
                   and abs(ev[0] - 1.0) <= 0.25 and abs(ev[-1]) <= 0.25)
    return GramCheck(sa, idem, diag, rank_ok)


def complement(R: GramPoint) -> GramPoint:
    """Naimark complement: (k/(k-n)) (I - (n/k) R), a Gram point with rank k-n.

    An involution: complement(complement(R)) == R.
    """
    k, n = R.k, R.n
    I = np.eye(k, dtype=R.entries.dtype)
    return GramPoint(R.field, k - n, (k / (k - n)) * (I - R.projection()))


def frame_from_gram(R: GramPoint) -> Frame:
    """Recover a spherical tight frame F with F*F = R.

    The projection P = (n/k) R is eigendecomposed; the n eigenvectors with
    eigenvalue near 1 are stacked (conjugate-transposed) and scaled by
    sqrt(k/n).  Requires the spectrum of P to split with a gap of at least
    RANK_GAP between the n-th and (n+1)-th eigenvalues.
    """
    k, n = R.k, R.n
    P = R.projection()
    P = (P + P.conj().T) / 2
    ev, V = np.linalg.eigh(P)
    ev, V = ev[::-1], V[:, ::-1]
    if ev[n - 1] - ev[n] < RANK_GAP:
        raise ValueError(
            f"eigenvalues not clustered at 0 and 1 (gap {ev[n-1]-ev[n]:.3g} < {RANK_GAP})")
    F = np.sqrt(k / n) * V[:, :n].conj().T
    return Frame(R.field, F)


def same_orbit(F: Frame, G: Frame, tol: float = DEFAULT_TOL):
    """Witness that F and G differ by an orthogonal (unitary) map, or None.

    If the Gram matrices agree entrywise within tol, returns an
    OrbitWitness with U = (n/k) G F*, which satisfies G = U F.
    """
    if (F.n, F.k, F.field) != (G.n, G.k, G.field):
        raise ValueError("frames have mismatched shape or field")
    RF = F.conj_transpose() @ F.entries
    RG = G.conj_transpose() @ G.entries
    if np.max(np.abs(RF - RG)) > tol:
        return None
    U = (F.n / F.k) * (G.entries @ F.conj_transpose())
    residual = float(np.max(np.abs(U @ F.entries - G.entries)))
    return OrbitWitness(U, residual)


def torus_point(zetas) -> GramPoint:
    """The rank-1 complex Gram point with entries zeta_{i-1} * conj(zeta_{j-1}).

    ``zetas`` are n unimodular scalars; zeta_0 = 1 is prepended, giving a
    (n+1)-by-(n+1) matrix: k = n+1 times the projection onto the span of
    (1, zeta_1, ..., zeta_n)/sqrt(n+1).
    """
    z = np.asarray(zetas, dtype=np.complex128).ravel()
    if z.size == 0:
        raise ValueError("need at least one phase")
    if np.max(np.abs(np.abs(z) - 1.0)) > 1e-12:
        raise ValueError("phases must be unimodular")
    v = np.concatenate(([1.0 + 0j], z))
    return GramPoint("C", 1, np.outer(v, v.conj()))


@dataclass(frozen=True)
class OneRedundantEnumeration:
    """The finite set of rank-1 real Gram points on n+1 coordinates,
    together with orbit counts under vector permutation and sign flips."""

    points: tuple
    permutation_orbits: int
    sign_orbits: int


def enumerate_one_redundant(n: int) -> OneRedundantEnumeration:
    """All 2^n real Gram points for one redundant vector, with orbit counts.

    The points are R = (n+1) v v^T for v = (1, e_1, ..., e_n)/sqrt(n+1),
    e_j = +-1 (the leading sign is fixed because v and -v give the same R).
    Orbit counting uses canonical forms: a permutation orbit is determined
    by the sorted sign pattern up to a global flip, a sign orbit by the
    all-plus form.  The counts come out as 2^n points, ceil(n/2) + 1
    permutation orbits and a single sign orbit; the orbit canonicalisation
    is cross-checked against literal group enumeration in the tests.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    points = []
    perm_canon = set()
    sign_canon = set()
    for bits in range(2 ** n):
        signs = [1] + [1 - 2 * ((bits >> j) & 1) for j in range(n)]
        v = np.array(signs, dtype=np.float64) / np.sqrt(n + 1)
        points.append(GramPoint("R", 1, (n + 1) * np.outer(v, v)))
        flipped = tuple(-s for s in signs)
        perm_canon.add(max(tuple(sorted(signs)), tuple(sorted(flipped))))
        # diag(s) R diag(s) realises any off-diagonal sign pattern: one orbit
        sign_canon.add((1,) * (n + 1))
    return OneRedundantEnumeration(tuple(points), len(perm_canon), len(sign_canon))


def _procrustes(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Orthogonal V minimizing ||V B - A||_F (V may have det -1)."""
    U, _, Wt = np.linalg.svd(A @ B.conj().T)
    return U @ Wt


def holonomy_sign(loop, tol: float = DEFAULT_TOL,
                  max_step: float = DEFAULT_LOOP_STEP) -> int:
    """Sign of the orthogonal transformation picked up around a Gram loop.

    The loop (first point == last point, consecutive points within
    ``max_step`` in max norm) is lifted to frames by continuation: each
    recovered frame is aligned to its predecessor with an orthogonal
    Procrustes fit.  Returns sign(det U) for the final U with F_N = U F_0.
    Refuses (ValueError) when a step is too large to track reliably.
    """
    pts = list(loop)
    if len(pts) < 2:
        raise ValueError("loop needs at least two points")
    if any(p.field != "R" for p in pts):
        raise ValueError("holonomy sign is defined for real Gram points")
    k, n = pts[0].k, pts[0].n
    if any((p.k, p.n) != (k, n) for p in pts):
        raise ValueError("loop points have mismatched (k, n)")
    if np.max(np.abs(pts[0].entries - pts[-1].entries)) > tol:
        raise ValueError("loop is not closed (first != last)")
    F0 = frame_from_gram(pts[0])
    F_prev = F0.entries
    for i, R in enumerate(pts[1:], start=1):
        gap = float(np.max(np.abs(R.entries - pts[i - 1].entries)))
        if gap > max_step:
            raise ValueError(f"gram step {gap:.3g} at index {i} exceeds {max_step}")
        G = frame_from_gram(R).entries
        V = _procrustes(F_prev, G)
        F_next = V @ G
        resid = float(np.max(np.abs(F_next - F_prev)))
        if resid > 2.5 * max_step + 1e-6:
            raise ValueError(
                f"alignment residual {resid:.3g} at index {i}: step too large")
        F_prev = F_next
    U = (n / k) * (F_prev @ F0.entries.T)
    if np.max(np.abs(U @ U.T - np.eye(n))) > 1e-6:
        raise ValueError("final alignment is not orthogonal; refine the loop")
    det = float(np.linalg.det(U))
    if abs(abs(det) - 1.0) > 1e-6:
        raise ValueError("unreliable holonomy determinant; refine the loop")
    return 1 if det > 0 else -1


def nearest_gram_point(M, n: int, max_iter: int = 200, tol: float = 1e-13) -> GramPoint:
    """Project a nearby matrix onto the Gram-point set.

    Alternates the spectral projection onto rank-n projections with the
    unit-diagonal correction; converges quickly for inputs close to a
    valid Gram point (used to refine interpolated loop points).
    """
    M = np.asarray(M)
    field = "C" if np.iscomplexobj(M) else "R"
    k = M.shape[0]
    R = (M + M.conj().T) / 2
    for _ in range(max_iter):
        ev, V = np.linalg.eigh((n / k) * R)
        P = V[:, -n:] @ V[:, -n:].conj().T
        R = (k / n) * P
        d = np.real(np.diag(R)) - 1.0
        err_diag = float(np.max(np.abs(d)))
        R = R - np.diag(d.astype(R.dtype))
        PP = (n / k) * R
        err_idem = float(np.max(np.abs(PP @ PP - PP)))
        if err_diag <= tol and err_idem <= tol:
            break
    else:
        raise ValueError("projection onto the Gram-point set did not converge")
    return GramPoint(field, n, R)


def refine_loop(loop, rounds: int = 1):
    """Insert reprojected midpoints between consecutive loop points."""
    pts = list(loop)
    for _ in range(rounds):
        out = [pts[0]]
        for a, b in zip(pts, pts[1:]):
            mid = nearest_gram_point((a.entries + b.entries) / 2, a.n)
            out.extend([mid, b])
        pts = out
    return pts
