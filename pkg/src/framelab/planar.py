"""Planar frames as unit complex k-tuples, chains, and connectivity paths.

A tight frame of k unit vectors in the plane is encoded as z in T^k with
sum(z_j^2) = 0; squaring coordinates maps it onto the space of closed unit
chains (w in T^k with sum(w_j) = 0), a 2^k-fold covering.  This module
constructs explicit paths: chains are straightened to a standard form by
collapsing pairs of links into antipodal position while a reserved triple
absorbs the slack, the straightening is lifted through the covering by
continuation, and the finitely many lift endpoints over the standard chain
are connected to a canonical frame by rotations of zero-square-sum
coordinate subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frames import DEFAULT_TOL, Frame, is_spherical, is_tight
from .grassmann import GramPoint, gram

MODULUS_TOL = 1e-12
DEFAULT_MAX_STEP = 0.05

_OMEGA = np.exp(2j * np.pi / 3)


def _unit_tuple(values, constraint, tol, what):
    z = np.asarray(values, dtype=np.complex128).ravel()
    if z.size < 1:
        raise ValueError(f"{what} must be nonempty")
    if np.max(np.abs(np.abs(z) - 1.0)) > MODULUS_TOL:
        raise ValueError(f"{what} entries must be unimodular")
    if abs(constraint(z)) > tol:
        raise ValueError(f"{what} constraint violated by {abs(constraint(z)):.3g}")
    z.flags.writeable = False
    return z


@dataclass(frozen=True)
class PlanarFrame:
    """k unit complex numbers with sum of squares zero."""

    z: np.ndarray

    def __post_init__(self, tol: float = DEFAULT_TOL):
        object.__setattr__(self, "z", _unit_tuple(
            self.z, lambda v: np.sum(v ** 2), tol, "planar frame"))

    @property
    def k(self) -> int:
        return self.z.size


@dataclass(frozen=True)
class Chain:
    """k unit complex numbers summing to zero (a closed unit-link chain)."""

    w: np.ndarray

    def __post_init__(self, tol: float = DEFAULT_TOL):
        object.__setattr__(self, "w", _unit_tuple(
            self.w, np.sum, tol, "chain"))

    @property
    def k(self) -> int:
        return self.w.size


@dataclass(frozen=True)
class FramePath:
    """A sampled path of planar frames or chains.

    ``points[i]`` is the complex k-vector at parameter ``ts[i]``; the
    parameters increase strictly from 0 to 1 and consecutive points stay
    within ``max_step`` in the max norm.
    """

    kind: str
    ts: tuple
    points: tuple
    max_step: float

    def __post_init__(self):
        if self.kind not in ("planar", "chain"):
            raise ValueError(f"kind must be 'planar' or 'chain', got {self.kind!r}")
        ts = tuple(float(t) for t in self.ts)
        pts = tuple(np.asarray(p, dtype=np.complex128) for p in self.points)
        if len(ts) != len(pts) or len(ts) < 2:
            raise ValueError("path needs matching ts/points with at least two samples")
        if abs(ts[0]) > 1e-15 or abs(ts[-1] - 1.0) > 1e-15:
            raise ValueError("path parameter must run from 0 to 1")
        if any(t1 - t0 <= 0 for t0, t1 in zip(ts, ts[1:])):
            raise ValueError("path parameter must be strictly increasing")
        for p in pts:
            p.flags.writeable = False
        object.__setattr__(self, "ts", ts)
        object.__setattr__(self, "points", pts)

    @property
    def k(self) -> int:
        return self.points[0].size

    @property
    def start(self) -> np.ndarray:
        return self.points[0]

    @property
    def end(self) -> np.ndarray:
        return self.points[-1]


@dataclass(frozen=True)
class PathReport:
    """validate_path outcome with the worst violation and its location."""

    ok: bool
    max_modulus_error: float
    max_constraint_error: float
    max_step_seen: float
    step_bound: float
    start_error: float
    end_error: float
    worst_violation: float
    worst_t: float
    worst_index: int


def to_planar(F: Frame, tol: float = DEFAULT_TOL) -> PlanarFrame:
    """Encode a spherical tight frame in R^2 as z_j = x_j + i y_j."""
    if F.field != "R" or F.n != 2:
        raise ValueError("to_planar needs a real frame in dimension 2")
    if not is_spherical(F, tol):
        raise ValueError("columns are not unit vectors")
    tight, _ = is_tight(F, tol)
    if not tight:
        raise ValueError("frame is not tight")
    return PlanarFrame(F.entries[0] + 1j * F.entries[1])


def from_planar(z) -> Frame:
    """Decode unit complex numbers into a 2-row real synthesis matrix."""
    z = np.asarray(z, dtype=np.complex128).ravel()
    return Frame("R", np.vstack([z.real, z.imag]))


def square_map(pf: PlanarFrame) -> Chain:
    """The covering map z -> z^2 (coordinatewise); the image sums to zero."""
    return Chain(pf.z ** 2)


def to_gram_loop(path: FramePath, tol: float = DEFAULT_TOL):
    """Project a planar path to Gram points (loop when endpoints share a Gram)."""
    if path.kind != "planar":
        raise ValueError("need a planar path")
    return [gram(from_planar(p), tol) for p in path.points]


def standard_chain(k: int) -> Chain:
    """The straightening target: (1,-1,1,-1,...) for even k; for odd k the
    zero-sum triple (w, conj(w), 1) with w = exp(2*pi*i/3), followed by
    (1,-1) pairs."""
    if k < 4:
        raise ValueError("need k >= 4")
    if k % 2 == 0:
        w = [1.0, -1.0] * (k // 2)
    else:
        w = [_OMEGA, np.conj(_OMEGA), 1.0, 1.0, -1.0] + [1.0, -1.0] * ((k - 5) // 2)
    return Chain(np.asarray(w, dtype=np.complex128))


def canonical_planar(k: int) -> PlanarFrame:
    """The canonical frame b over the standard chain: (1, i, 1, i, ...) for
    even k; (e^{i pi/3}, e^{-i pi/3}, 1, 1, i, 1, i, ...) for odd k."""
    if k < 4:
        raise ValueError("need k >= 4")
    if k % 2 == 0:
        z = [1.0, 1j] * (k // 2)
    else:
        r = np.exp(1j * np.pi / 3)
        z = [r, np.conj(r), 1.0, 1.0, 1j] + [1.0, 1j] * ((k - 5) // 2)
    return PlanarFrame(np.asarray(z, dtype=np.complex128))


# ---------------------------------------------------------------------------
# path assembly


def _sample_leg(fn, max_step: float, atol: float = 1e-12):
    """Sample fn: [0,1] -> C^k adaptively until consecutive max-norm steps
    are below max_step.  Returns the list of sampled points."""
    ts = [0.0, 0.5, 1.0]
    pts = [fn(t) for t in ts]
    for _ in range(40):
        new_ts = []
        new_pts = []
        refined = False
        for (t0, p0), (t1, p1) in zip(zip(ts, pts), zip(ts[1:], pts[1:])):
            new_ts.append(t0)
            new_pts.append(p0)
            if np.max(np.abs(p1 - p0)) > max_step - atol:
                tm = (t0 + t1) / 2
                new_ts.append(tm)
                new_pts.append(fn(tm))
                refined = True
        new_ts.append(ts[-1])
        new_pts.append(pts[-1])
        ts, pts = new_ts, new_pts
        if not refined:
            return pts
    raise ValueError("leg sampling did not meet the step bound (discontinuous leg?)")


def _concat_legs(legs, kind: str, max_step: float) -> FramePath:
    pts = [legs[0][0]]
    for leg in legs:
        if np.max(np.abs(leg[0] - pts[-1])) > 1e-9:
            raise AssertionError("legs are not contiguous")
        pts.extend(leg[1:])
    # collapse consecutive duplicates so the parameter stays strictly monotone
    cleaned = [pts[0]]
    for p in pts[1:]:
        if np.max(np.abs(p - cleaned[-1])) > 0:
            cleaned.append(p)
    if len(cleaned) == 1:
        cleaned.append(cleaned[0].copy())
    ts = np.linspace(0.0, 1.0, len(cleaned))
    return FramePath(kind, tuple(ts), tuple(cleaned), max_step)


def _rotation_leg(state: np.ndarray, idxs, angle: float, max_step: float, check=True):
    """Rotate coordinates ``idxs`` of a planar frame by a common phase.

    Valid whenever the squares of the rotated coordinates sum to zero,
    which the common rotation then preserves.
    """
    state = np.asarray(state, dtype=np.complex128)
    if check and abs(np.sum(state[list(idxs)] ** 2)) > 1e-9:
        raise AssertionError(f"subset {idxs} has nonzero square sum; rotation invalid")
    idxs = list(idxs)

    def fn(t):
        out = state.copy()
        out[idxs] = out[idxs] * np.exp(1j * angle * t)
        return out

    return _sample_leg(fn, max_step)


# ---------------------------------------------------------------------------
# covering-space lifting


def lift_path(cp: FramePath, start: PlanarFrame, tol: float = DEFAULT_TOL) -> FramePath:
    """Lift a chain path through the squaring covering map.

    ``start`` must square to the chain at t = 0; at every step each
    coordinate picks the square root nearest its predecessor.  Raises
    ValueError naming the coordinate and parameter when the two roots are
    too close to equidistant to choose reliably (step too large).
    """
    if cp.kind != "chain":
        raise ValueError("lift_path needs a chain path")
    if np.max(np.abs(start.z ** 2 - cp.points[0])) > max(tol, 1e-9):
        raise ValueError("start does not lie over the chain path's first point")
    prev = np.array(start.z)
    lifted = [prev.copy()]
    for i, w in enumerate(cp.points[1:], start=1):
        if np.max(np.abs(w - cp.points[i - 1])) >= 1.0:
            raise ValueError(f"chain step at index {i} moves a coordinate by >= 1")
        root = np.exp(0.5j * np.angle(w)) * np.sqrt(np.abs(w))
        pick = np.where(np.abs(root - prev) <= np.abs(-root - prev), root, -root)
        margin = np.abs(np.abs(root - prev) - np.abs(root + prev))
        j = int(np.argmin(margin))
        if margin[j] < 1e-6:
            raise ValueError(
                f"ambiguous square root for coordinate {j} at t={cp.ts[i]:.6g}; "
                "refine the chain path")
        prev = pick
        lifted.append(prev.copy())
    return FramePath("planar", cp.ts, tuple(lifted), cp.max_step)


# ---------------------------------------------------------------------------
# chain straightening


def _pair_initial_sign(w_first: complex, rho0: complex, uhat: complex) -> float:
    v = w_first - rho0 / 2
    s = np.real(np.conj(1j * uhat) * v)
    return 1.0 if s >= 0 else -1.0


def _segment_pair_tracker(w_first: complex, rho0: complex, rho1: complex):
    """Continuous elbow solutions (w_a, w_b) with w_a + w_b = rho(t) along
    the straight segment rho(t) = (1-t) rho0 + t rho1.

    The elbow sign flips exactly where the segment passes through zero;
    there the perpendicular direction is taken from the segment direction,
    which keeps the branch continuous.  Returns (pre_target, track) where
    pre_target is a required re-orientation of an initially antipodal pair
    (or None) and track maps t to the pair.
    """
    d = rho1 - rho0
    seg_len = abs(d)
    cross_t = None
    if seg_len > 1e-14:
        t_star = -np.real(np.conj(d) * rho0) / seg_len ** 2
        if 0.0 < t_star < 1.0 and abs(rho0 + t_star * d) < 1e-12:
            cross_t = t_star
        dhat = d / seg_len
    else:
        dhat = 1.0 + 0j

    pre_target = None
    if abs(rho0) > 1e-13:
        u0 = rho0 / abs(rho0)
        s0 = _pair_initial_sign(w_first, rho0, u0)
    else:
        # antipodal start: the elbow leaves zero perpendicular to the
        # segment, so the pair must sit at +-i*dhat before tracking begins
        comp = np.real(np.conj(1j * dhat) * w_first)
        if abs(abs(comp) - 1.0) > 1e-9:
            pre_target = (1.0 if comp >= 0 else -1.0) * 1j * dhat
            w_start = pre_target
        else:
            w_start = w_first
        s0 = 1.0 if np.real(np.conj(1j * dhat) * w_start) >= 0 else -1.0

    def track(t):
        rho = (1 - t) * rho0 + t * rho1
        r = abs(rho)
        if r > 1e-13:
            u = rho / r
        else:
            u = dhat if (cross_t is None or t >= cross_t) else -dhat
        s = s0
        if cross_t is not None and t >= cross_t:
            s = -s0
        h = np.sqrt(max(0.0, 1.0 - r * r / 4))
        wa = rho / 2 + s * 1j * u * h
        return wa, rho - wa

    return pre_target, track


def chain_straighten(c: Chain, max_step: float = DEFAULT_MAX_STEP) -> FramePath:
    """A path in chain space from c to the standard chain.

    Even k: opposite links are paired (1,2), (3,4), ...; every pair sum is
    shrunk radially to zero (the total stays zero because the pair sums
    already summed to zero), then each antipodal pair is rotated to
    (1, -1).  Odd k: links 1-3 are reserved; the remaining pairs collapse
    as before while the reserved triple absorbs the complementary sum (its
    third link stays fixed and its first two links track the required pair
    sum along a segment); the zero-sum triple is then rotated to the
    standard orientation, with a bounded elbow-flip cycle when it lands
    mirror-reversed.
    """
    k = c.k
    if k < 4:
        raise ValueError("chain straightening needs k >= 4")
    w0 = np.array(c.w)
    legs = []
    state = w0.copy()

    if k % 2 == 0:
        pair_starts = list(range(0, k, 2))
        reserved = ()
    else:
        pair_starts = list(range(3, k, 2))
        reserved = (0, 1, 2)

    # stage 1: collapse pair sums, the reserved triple absorbing the slack
    trackers = []
    for p in pair_starts:
        sigma0 = state[p] + state[p + 1]
        if abs(sigma0) < 1e-14:
            trackers.append((p, None))
            continue
        u = sigma0 / abs(sigma0)
        s = _pair_initial_sign(state[p], sigma0, u)

        def make(p=p, sigma0=sigma0, u=u, s=s):
            def track(t):
                sig = (1 - t) * sigma0
                h = np.sqrt(max(0.0, 1.0 - abs(sig) ** 2 / 4))
                wa = sig / 2 + s * 1j * u * h
                return wa, sig - wa
            return track

        trackers.append((p, make()))

    triple_track = None
    if reserved:
        fixed = state[2]
        tau0 = state[0] + state[1] + state[2]
        pre_target, triple_track = _segment_pair_tracker(
            state[0], tau0 - fixed, -fixed)
        if pre_target is not None:
            # re-orient the antipodal pair (links 1,2) before collapsing;
            # the pair sums to zero so the common rotation keeps the chain closed
            delta = float(np.angle(pre_target / state[0]))
            legs.append(_rotation_leg(state, (0, 1), delta, max_step, check=False))
            state = legs[-1][-1].copy()

    base = state.copy()

    def collapse(t):
        out = base.copy()
        for p, track in trackers:
            if track is None:
                continue
            out[p], out[p + 1] = track(t)
        if triple_track is not None:
            out[0], out[1] = triple_track(t)
        return out

    legs.append(_sample_leg(collapse, max_step))
    state = legs[-1][-1].copy()

    # stage 2: rotate every antipodal pair onto (1, -1)
    base2 = state.copy()
    deltas = {p: -float(np.angle(base2[p])) for p in pair_starts}

    def pairs_home(t):
        out = base2.copy()
        for p in pair_starts:
            ph = np.exp(1j * deltas[p] * t)
            out[p] = base2[p] * ph
            out[p + 1] = -out[p]
        return out

    legs.append(_sample_leg(pairs_home, max_step))
    state = legs[-1][-1].copy()

    if reserved:
        # stage 3: rotate the zero-sum triple so its third link is 1
        delta = -float(np.angle(state[2]))
        base3 = state.copy()

        def triple_home(t):
            out = base3.copy()
            out[:3] = base3[:3] * np.exp(1j * delta * t)
            return out

        legs.append(_sample_leg(triple_home, max_step))
        state = legs[-1][-1].copy()

        if abs(state[0] - np.conj(_OMEGA)) < 1e-6:
            legs.extend(_mirror_fix_legs(state, max_step))
            state = legs[-1][-1].copy()
        elif abs(state[0] - _OMEGA) > 1e-6:
            raise AssertionError("triple did not land on a third root of unity")

    path = _concat_legs(legs, "chain", max_step)
    if np.max(np.abs(path.end - standard_chain(k).w)) > 1e-9:
        raise AssertionError("straightening missed the standard chain")
    return path


def _mirror_fix_legs(state: np.ndarray, max_step: float):
    """Flip a mirror-reversed zero-sum triple (w-bar, w, 1, ...) into
    (w, w-bar, 1, ...) by stretching links 1-2 through collinearity while
    the pair (4, 5) absorbs; needs that pair to sit at (1, -1)."""
    if np.max(np.abs(state[3:5] - np.array([1.0, -1.0]))) > 1e-9:
        raise AssertionError("mirror fix expects links 4,5 at (1,-1)")
    legs = []
    # swing the absorber pair perpendicular so it can open along the real axis
    legs.append(_rotation_leg(state, (3, 4), np.pi / 2, max_step, check=False))
    state = legs[-1][-1].copy()

    base = state.copy()

    def cycle(t):
        g = 1.0 - abs(2.0 * t - 1.0)
        s = 1.0 if t < 0.5 else -1.0
        out = base.copy()
        sig12 = -(1.0 + g)
        h12 = np.sqrt(max(0.0, 1.0 - sig12 * sig12 / 4))
        out[0] = sig12 / 2 - s * 1j * h12
        out[1] = sig12 - out[0]
        out[3] = g / 2 + 1j * np.sqrt(max(0.0, 1.0 - g * g / 4))
        out[4] = g - out[3]
        return out

    legs.append(_sample_leg(cycle, max_step))
    state = legs[-1][-1].copy()

    legs.append(_rotation_leg(state, (3, 4), -np.pi / 2, max_step, check=False))
    return legs


# ---------------------------------------------------------------------------
# fiber moves over the standard chain


def _fiber_generators(k: int):
    """Sign-flip generators over the standard chain, each a list of
    (subset, rotation angle) stages with zero square sum at every stage.

    Returns a list of (pattern, stages) where pattern is the flipped index
    set realised once the stages complete (the chain returns to the
    standard form; coordinates rotated by a total odd multiple of pi have
    their lift sign flipped).
    """
    gens = []
    if k % 2 == 0:
        plus = list(range(0, k, 2))
        minus = list(range(1, k, 2))
        for p in plus:
            for q in minus:
                gens.append((frozenset((p, q)), [((p, q), np.pi)]))
        gens.append((frozenset((0, 2, 3)), [
            ((0, 3), np.pi / 2), ((0, 2), np.pi / 2), ((2, 3), np.pi / 2)]))
    else:
        plus = [2, 3] + list(range(5, k, 2))
        minus = list(range(4, k, 2))
        for p in plus:
            for q in minus:
                gens.append((frozenset((p, q)), [((p, q), np.pi)]))
        gens.append((frozenset((0, 1, 2)), [((0, 1, 2), np.pi)]))
        gens.append((frozenset(range(k)), [(tuple(range(k)), np.pi)]))
        gens.append((frozenset((1,)), [
            ((2, 4), -np.pi / 3), ((1, 4), np.pi / 2),
            ((1, 2), np.pi / 2), ((2, 4), -np.pi / 6)]))
        gens.append((frozenset((0, 2, 4)), [
            ((2, 4), np.pi / 3), ((0, 4), np.pi / 2),
            ((0, 2), np.pi / 2), ((2, 4), np.pi / 6)]))
    return gens


def _solve_flip_pattern(k: int, want: frozenset):
    """Pick generators whose combined flip pattern equals ``want`` (GF(2))."""
    gens = _fiber_generators(k)
    cols = np.zeros((k, len(gens)), dtype=np.uint8)
    for j, (pat, _) in enumerate(gens):
        for i in pat:
            cols[i, j] = 1
    target = np.zeros(k, dtype=np.uint8)
    for i in want:
        target[i] = 1
    A = np.concatenate([cols, target[:, None]], axis=1).astype(np.uint8)
    m = len(gens)
    pivots = []
    row = 0
    for col in range(m):
        hit = None
        for r in range(row, k):
            if A[r, col]:
                hit = r
                break
        if hit is None:
            continue
        A[[row, hit]] = A[[hit, row]]
        for r in range(k):
            if r != row and A[r, col]:
                A[r] ^= A[row]
        pivots.append(col)
        row += 1
    if any(A[r, m] for r in range(row, k)):
        raise AssertionError(f"flip pattern {sorted(want)} is outside the move span")
    chosen = [c for r, c in enumerate(pivots) if A[r, m]]
    return [gens[c] for c in chosen]


# ---------------------------------------------------------------------------
# the explicit connecting homotopies for four and five vectors


def case1_explicit_path(max_step: float = DEFAULT_MAX_STEP) -> FramePath:
    """The two-stage homotopy from (1, i, 1, i) to (1, -i, 1, -i).

    First coordinates 1-2 rotate together by pi, then coordinates 1 and 4;
    each stage rotates a pair with cancelling squares.
    """
    b = canonical_planar(4).z

    def leg1(t):
        th = np.pi * t
        return np.array([np.exp(1j * th), 1j * np.exp(1j * th), 1.0, 1j])

    def leg2(t):
        th = np.pi * t
        return np.array([-np.exp(1j * th), -1j, 1.0, 1j * np.exp(1j * th)])

    legs = [_sample_leg(leg1, max_step), _sample_leg(leg2, max_step)]
    path = _concat_legs(legs, "planar", max_step)
    assert np.max(np.abs(path.start - b)) < 1e-12
    return path


#: waypoints reached by the two stages of case1_explicit_path
CASE1_WAYPOINTS = (
    np.array([1.0, 1j, 1.0, 1j]),
    np.array([-1.0, -1j, 1.0, 1j]),
    np.array([1.0, -1j, 1.0, -1j]),
)


def case3_explicit_path(max_step: float = DEFAULT_MAX_STEP) -> FramePath:
    """The five-stage homotopy from (e^{i pi/3}, e^{-i pi/3}, 1, 1, i) to
    its coordinatewise conjugate, rotating one cancelling pair per stage."""
    p3 = np.pi / 3

    def leg(start, idxs, offs, span):
        def fn(t):
            th = span * t
            out = np.array(start, dtype=np.complex128)
            for j, off in zip(idxs, offs):
                out[j] = np.exp(1j * (th + off))
            return out
        return fn

    w1 = [np.exp(1j * p3), np.exp(-1j * p3), 1.0, 1.0, 1j]
    f1 = leg(w1, (2, 4), (0.0, np.pi / 2), p3)
    w2 = f1(1.0)
    f2 = leg(w2, (0, 4), (p3, 5 * np.pi / 6), 4 * np.pi / 3)
    w3 = f2(1.0)
    f3 = leg(w3, (1, 4), (-p3, np.pi / 6), np.pi / 6)
    w4 = f3(1.0)
    f4 = leg(w4, (1, 2), (-np.pi / 6, p3), np.pi / 2)
    w5 = f4(1.0)
    f5 = leg(w5, (2, 4), (5 * np.pi / 6, p3), 7 * np.pi / 6)
    legs = [_sample_leg(f, max_step) for f in (f1, f2, f3, f4, f5)]
    return _concat_legs(legs, "planar", max_step)


#: waypoints reached after each stage of case3_explicit_path
CASE3_WAYPOINTS = tuple(np.array(v) for v in (
    [np.exp(1j * np.pi / 3), np.exp(-1j * np.pi / 3), 1.0, 1.0, 1j],
    [np.exp(1j * np.pi / 3), np.exp(-1j * np.pi / 3),
     np.exp(1j * np.pi / 3), 1.0, np.exp(5j * np.pi / 6)],
    [np.exp(-1j * np.pi / 3), np.exp(-1j * np.pi / 3),
     np.exp(1j * np.pi / 3), 1.0, np.exp(1j * np.pi / 6)],
    [np.exp(-1j * np.pi / 3), np.exp(-1j * np.pi / 6),
     np.exp(1j * np.pi / 3), 1.0, np.exp(1j * np.pi / 3)],
    [np.exp(-1j * np.pi / 3), np.exp(1j * np.pi / 3),
     np.exp(5j * np.pi / 6), 1.0, np.exp(1j * np.pi / 3)],
    [np.exp(-1j * np.pi / 3), np.exp(1j * np.pi / 3), 1.0, 1.0, -1j],
))


# ---------------------------------------------------------------------------
# full connectivity


def connect_to_standard(z: PlanarFrame, max_step: float = DEFAULT_MAX_STEP) -> FramePath:
    """A validated path from z to the canonical frame canonical_planar(k).

    Composes (1) chain straightening of the squared chain, (2) the lift of
    that straightening starting at z, and (3) finitely many subset
    rotations connecting the lift endpoint to the canonical frame inside
    the fiber over the standard chain.
    """
    k = z.k
    if k < 4:
        raise ValueError("need k >= 4")
    cp = chain_straighten(square_map(z), max_step)
    zp = lift_path(cp, z)
    legs = [list(zp.points)]
    state = np.array(zp.end)
    b = canonical_planar(k).z
    ratio = state / b
    signs = np.round(ratio.real)
    if np.max(np.abs(ratio - signs)) > 1e-6 or not np.all(np.abs(signs) == 1):
        raise AssertionError("lift endpoint is not a sign pattern over the canonical frame")
    want = frozenset(int(i) for i in np.flatnonzero(signs < 0))
    if want:
        for _, stages in _solve_flip_pattern(k, want):
            for idxs, ang in stages:
                leg = _rotation_leg(state, idxs, ang, max_step)
                legs.append(leg)
                state = leg[-1].copy()
    if np.max(np.abs(state - b)) > 1e-6:
        raise AssertionError("fiber moves missed the canonical frame")
    legs.append([state, b.copy()])  # snap the tail rounding error
    return _concat_legs(legs, "planar", max_step)


def random_planar_frame(k: int, rng) -> PlanarFrame:
    """Sample a planar frame by drawing k-2 phases and solving the last two
    squares to cancel the partial sum (resampling while its modulus
    exceeds 2)."""
    if k < 3:
        raise ValueError("need k >= 3")
    for _ in range(1000):
        z = np.exp(2j * np.pi * rng.random(k - 2))
        s = np.sum(z ** 2)
        if abs(s) > 2 - 1e-9:
            continue
        if abs(s) < 1e-12:
            u = np.exp(2j * np.pi * rng.random())
            pair = np.array([u, -u])
        else:
            uhat = -s / abs(s)
            h = np.sqrt(max(0.0, 1.0 - abs(s) ** 2 / 4))
            sign = rng.choice([-1.0, 1.0])
            wa = -s / 2 + sign * 1j * uhat * h
            pair = np.array([wa, -s - wa])
        roots = np.exp(0.5j * np.angle(pair)) * rng.choice([-1.0, 1.0], size=2)
        return PlanarFrame(np.concatenate([z, roots]))
    raise ValueError("sampling failed to find a closable configuration")


def validate_path(p: FramePath, tol: float = DEFAULT_TOL,
                  expect_start=None, expect_end=None) -> PathReport:
    """Check unit modulus, the defining constraint, the step bound, and
    (optionally) the declared endpoints; reports the worst violation."""
    constraint = (lambda v: np.sum(v ** 2)) if p.kind == "planar" else np.sum
    worst = -1.0
    worst_t, worst_idx = 0.0, 0
    max_mod = 0.0
    max_con = 0.0
    for t, pt in zip(p.ts, p.points):
        mod_err = np.abs(np.abs(pt) - 1.0)
        j = int(np.argmax(mod_err))
        if mod_err[j] > worst:
            worst, worst_t, worst_idx = float(mod_err[j]), t, j
        max_mod = max(max_mod, float(mod_err[j]))
        con = abs(constraint(pt))
        if con > worst:
            worst, worst_t, worst_idx = float(con), t, -1
        max_con = max(max_con, float(con))
    steps = [float(np.max(np.abs(b - a))) for a, b in zip(p.points, p.points[1:])]
    max_step_seen = max(steps)
    start_err = float(np.max(np.abs(p.start - expect_start))) if expect_start is not None else 0.0
    end_err = float(np.max(np.abs(p.end - expect_end))) if expect_end is not None else 0.0
    ok = (max_mod <= tol and max_con <= tol
          and max_step_seen <= p.max_step + 1e-12
          and start_err <= tol and end_err <= tol)
    return PathReport(ok, max_mod, max_con, max_step_seen, p.max_step,
                      start_err, end_err, worst, worst_t, worst_idx)
