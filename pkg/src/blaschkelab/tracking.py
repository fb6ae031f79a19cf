"""Fiber computation and certified path continuation for Blaschke products.

B is an n-to-1 branched cover of the disc; away from the branch values each
w has a fiber of n distinct preimages.  This module computes initial fibers,
builds a lollipop loop system around the branch values, and continues whole
fibers along paths with an Euler predictor (dz = dw / B'(z)) plus a Newton
corrector, halving the step until every corrector run is certified: few
iterations, small residual, and corrections an order of magnitude smaller
than the fiber separation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULTS
from .cpoly import Poly, roots
from .errors import (
    AmbiguousMatching,
    FiberCollision,
    LoopConstructionFailed,
    StepFloorReached,
)

__all__ = [
    "Line",
    "Arc",
    "PathSpec",
    "Fiber",
    "LoopSystem",
    "initial_fiber",
    "choose_base_point",
    "build_loops",
    "track",
    "track_with_trace",
    "loop_permutation",
    "winding_number",
    "separation_slope",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Line:
    """Straight segment from `start` to `end`, parametrized on [0, 1]."""

    start: complex
    end: complex

    def point(self, t: float) -> complex:
        return self.start + t * (self.end - self.start)

    def reversed(self) -> "Line":
        return Line(self.end, self.start)

    def distance_to(self, p: complex) -> float:
        d = self.end - self.start
        denom = abs(d) ** 2
        if denom == 0.0:
            return abs(p - self.start)
        t = ((p - self.start) * d.conjugate()).real / denom
        t = min(1.0, max(0.0, t))
        return abs(p - self.point(t))


@dataclass(frozen=True)
class Arc:
    """Circular arc around `center`: angle sweeps from a0 to a1 (signed)."""

    center: complex
    radius: float
    a0: float
    a1: float

    def point(self, t: float) -> complex:
        ang = self.a0 + t * (self.a1 - self.a0)
        return self.center + self.radius * cmath.exp(1j * ang)

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.a1, self.a0)

    def distance_to(self, p: complex) -> float:
        v = p - self.center
        r = abs(v)
        if r == 0.0:
            return self.radius
        phi = cmath.phase(v)
        lo, hi = min(self.a0, self.a1), max(self.a0, self.a1)
        # Does phi + 2*pi*k land inside the swept interval for some integer k?
        k0 = math.floor((lo - phi) / _TWO_PI)
        inside = any(
            lo <= phi + _TWO_PI * k <= hi for k in (k0, k0 + 1, k0 + 2)
        )
        if inside:
            return abs(r - self.radius)
        return min(abs(p - self.point(0.0)), abs(p - self.point(1.0)))


@dataclass(frozen=True)
class PathSpec:
    """Piecewise path (lines and arcs) with a recorded obstacle clearance.

    `clearance` is the analytic minimum distance from the path to the branch
    values it was built against (0.0 when built against none).
    """

    segments: tuple
    clearance: float = 0.0

    def __post_init__(self):
        for a, b in zip(self.segments, self.segments[1:]):
            if abs(a.point(1.0) - b.point(0.0)) > 1e-9:
                raise ValueError("path segments are not contiguous")

    @property
    def start(self) -> complex:
        return self.segments[0].point(0.0)

    @property
    def end(self) -> complex:
        return self.segments[-1].point(1.0)

    @property
    def is_closed(self) -> bool:
        return abs(self.start - self.end) < 1e-12

    def reversed(self) -> "PathSpec":
        segs = tuple(s.reversed() for s in reversed(self.segments))
        return PathSpec(segments=segs, clearance=self.clearance)

    def min_distance_to(self, p: complex) -> float:
        return min(s.distance_to(p) for s in self.segments)


@dataclass(frozen=True)
class Fiber:
    """The n preimages of a regular value w.

    `initial_fiber` orders points lexicographically by (re, im); fibers
    returned by `track` keep the slot order of the input fiber (slot i is the
    continuation of input point i).
    """

    w: complex
    points: tuple
    separation: float


@dataclass(frozen=True)
class LoopSystem:
    """One lollipop loop per branch value plus the outer boundary loop.

    `branch_values` and `loops` share their order: ascending argument of
    (branch value - base).
    """

    base: complex
    branch_values: tuple
    loops: tuple
    boundary_loop: PathSpec


def _min_separation(points) -> float:
    pts = np.asarray(points)
    if len(pts) < 2:
        return math.inf
    d = np.abs(pts[:, None] - pts[None, :])
    np.fill_diagonal(d, np.inf)
    return float(d.min())


def initial_fiber(b, w, newton_tol=None, roots_tol=None, seed=None) -> Fiber:
    """Solve B(z) = w from scratch; points sorted lexicographically.

    Raises FiberCollision when w is (numerically) a branch value: repeated
    roots or separation below collision_factor * newton_tol.
    """
    newton_tol = DEFAULTS.newton_tol if newton_tol is None else newton_tol
    w = complex(w)
    g = b.P - w * b.Q
    clusters = roots(g, tol=roots_tol, seed=seed)
    if any(c.multiplicity > 1 for c in clusters):
        raise FiberCollision(f"fiber over {w} contains a multiple point")
    pts = np.array([c.center for c in clusters])
    # Newton polish on B(z) - w down to machine-level residuals.
    for _ in range(4):
        num, dnum = b.P.eval_with_derivative(pts)
        den, dden = b.Q.eval_with_derivative(pts)
        resid = num / den - w
        deriv = (dnum * den - num * dden) / (den * den)
        step = resid / deriv
        pts = pts - step
        if np.max(np.abs(resid)) < 1e-15:
            break
    order = np.lexsort((pts.imag, pts.real))
    pts = pts[order]
    sep = _min_separation(pts)
    if sep <= DEFAULTS.collision_factor * newton_tol:
        raise FiberCollision(f"fiber separation {sep:.3e} at w={w} is below threshold")
    return Fiber(w=w, points=tuple(pts.tolist()), separation=sep)


def choose_base_point(b, branch_values=None, grid=None) -> complex:
    """Grid-search base point maximizing clearance from branch values and the rim.

    Deterministic: scans a grid x grid lattice of cell centers over the
    bounding square and returns the first maximizer in scan order.
    """
    grid = DEFAULTS.grid if grid is None else grid
    if branch_values is None:
        branch_values = b.branch_data().branch_values
    if len(branch_values) == 0:
        return 0j
    best, best_score = 0j, -1.0
    for i in range(grid):
        x = -1.0 + (2.0 * i + 1.0) / grid
        for j in range(grid):
            y = -1.0 + (2.0 * j + 1.0) / grid
            w = complex(x, y)
            rim = 1.0 - abs(w)
            if rim <= 0.0:
                continue
            score = min(rim, min(abs(w - beta) for beta in branch_values))
            if score > best_score:
                best, best_score = w, score
    return best


def _chord_params(a, b, center, radius):
    """Parameters where segment a->b crosses the circle, or None."""
    d = b - a
    dd = abs(d) ** 2
    if dd == 0.0:
        return None
    f = a - center
    t_mid = -(f * d.conjugate()).real / dd
    disc = radius**2 - abs(f + t_mid * d) ** 2
    if disc <= 0.0:
        return None
    half = math.sqrt(disc / dd)
    t1, t2 = t_mid - half, t_mid + half
    if t2 <= 0.0 or t1 >= 1.0:
        return None
    if t1 < 0.0 or t2 > 1.0:
        # Endpoint inside the obstacle circle: caller geometry is broken.
        raise LoopConstructionFailed("path endpoint inside a detour circle")
    return t1, t2


def _detour_segments(a, b, obstacles):
    """Straight run from a to b with semicircular detours around every
    obstacle circle the chord crosses.

    Each obstacle is (center, radius, pass_left); `pass_left` selects the
    side of the obstacle the detour bulges to (relative to the direction of
    travel), which fixes the homotopy class of the resulting path in the
    punctured disc.
    """
    hits = []
    for center, radius, pass_left in obstacles:
        params = _chord_params(a, b, center, radius)
        if params is not None:
            hits.append((params[0], params[1], center, radius, pass_left))
    hits.sort(key=lambda h: h[0])
    for (s0, s1, *_), (t0, t1, *_) in zip(hits, hits[1:]):
        if t0 < s1:
            raise LoopConstructionFailed("overlapping detour circles on one stem")
    segs = []
    cur = a
    for t1, t2, center, radius, pass_left in hits:
        p1 = a + t1 * (b - a)
        p2 = a + t2 * (b - a)
        segs.append(Line(cur, p1))
        a1 = cmath.phase(p1 - center)
        a2 = cmath.phase(p2 - center)
        if pass_left:
            while a2 >= a1:
                a2 -= _TWO_PI
        else:
            while a2 <= a1:
                a2 += _TWO_PI
        segs.append(Arc(center, radius, a1, a2))
        cur = p2
    segs.append(Line(cur, b))
    return [s for s in segs if not (isinstance(s, Line) and abs(s.end - s.start) < 1e-15)]


def _loop_radii(branch_values, base):
    radii = []
    for i, beta in enumerate(branch_values):
        others = [abs(beta - other) for j, other in enumerate(branch_values) if j != i]
        nearest = min(others) if others else math.inf
        radii.append(min(nearest, 1.0 - abs(beta), abs(base - beta)) / 3.0)
    return radii


def build_loops(b, base, branch_values=None) -> LoopSystem:
    """Lollipop loop system: per-branch-value loops plus the boundary loop.

    Each loop runs from the base straight toward its branch value (detouring
    around any other branch value whose guard circle blocks the stem), once
    counterclockwise around the head circle, and back along the same stem.
    The boundary loop is a circle at radius (1 + max|branch value|)/2 reached
    by a radial stem, enclosing every branch value exactly once.

    Detour sides are chosen so that every stem stays homotopic (in the disc
    punctured at the branch values) to the straight ray toward its target: a
    detour around an obstructing value passes on the side of the obstruction
    that the ideal ray passes, i.e. on its left exactly when the obstruction
    sits clockwise of the stem direction.  This is what makes the boundary
    permutation equal the sweep-ordered product of the generators.
    """
    if branch_values is None:
        branch_values = b.branch_data().branch_values

    def _pass_left(obstacle_angle, stem_angle):
        return (obstacle_angle - stem_angle) % _TWO_PI > math.pi

    betas = sorted(branch_values, key=lambda v: cmath.phase(v - base))
    angles = [cmath.phase(v - base) for v in betas]
    radii = _loop_radii(betas, base)
    loops = []
    for i, beta in enumerate(betas):
        r = radii[i]
        entry = beta + r * (base - beta) / abs(base - beta)
        obstacles = [
            (betas[j], radii[j] / 2.0, _pass_left(angles[j], angles[i]))
            for j in range(len(betas))
            if j != i
        ]
        stem = _detour_segments(base, entry, obstacles)
        a0 = cmath.phase(entry - beta)
        head = Arc(beta, r, a0, a0 + _TWO_PI)
        segs = tuple(stem + [head] + [s.reversed() for s in reversed(stem)])
        clearance = min(
            min(s.distance_to(v) for s in segs) for v in betas
        )
        loops.append(PathSpec(segments=segs, clearance=clearance))
    rc = (1.0 + max((abs(v) for v in betas), default=0.0)) / 2.0
    direction = base / abs(base) if abs(base) > 0 else 1.0 + 0j
    rim_point = rc * direction
    phi0 = cmath.phase(direction)
    obstacles = [
        (betas[j], radii[j] / 2.0, _pass_left(angles[j], phi0))
        for j in range(len(betas))
    ]
    stem = _detour_segments(base, rim_point, obstacles)
    a0 = cmath.phase(rim_point)
    head = Arc(0j, rc, a0, a0 + _TWO_PI)
    segs = tuple(stem + [head] + [s.reversed() for s in reversed(stem)])
    clearance = (
        min(min(s.distance_to(v) for s in segs) for v in betas) if betas else rc
    )
    boundary = PathSpec(segments=segs, clearance=clearance)
    return LoopSystem(
        base=base, branch_values=tuple(betas), loops=tuple(loops), boundary_loop=boundary
    )


def _correct(b, pts, w, newton_tol, max_iters):
    """Newton-correct all fiber points onto B(z) = w.

    Returns (corrected points, converged flag, largest net correction).
    A diverging iterate (non-finite values from evaluating far outside the
    disc) fails the step immediately so the caller can halve and retry.
    """
    z = pts.copy()
    for _ in range(max_iters):
        if not np.all(np.isfinite(z)):
            return pts, False, math.inf
        num, dnum = b.P.eval_with_derivative(z)
        den, dden = b.Q.eval_with_derivative(z)
        with np.errstate(all="ignore"):
            resid = num / den - w
            deriv = (dnum * den - num * dden) / (den * den)
        if not (np.all(np.isfinite(resid)) and np.all(np.isfinite(deriv))):
            return pts, False, math.inf
        if np.max(np.abs(resid)) <= newton_tol:
            break
        if np.any(deriv == 0):
            return z, False, math.inf
        z = z - resid / deriv
    if not np.all(np.isfinite(z)):
        return pts, False, math.inf
    num = b.P(z)
    den = b.Q(z)
    with np.errstate(all="ignore"):
        resid = np.abs(num / den - w)
    ok = bool(np.all(np.isfinite(resid)) and np.max(resid) <= newton_tol)
    return z, ok, float(np.max(np.abs(z - pts)))


def track(
    b,
    fiber,
    path,
    newton_tol=None,
    step_floor=None,
    max_newton_iters=None,
    collision_factor=None,
    record=None,
) -> Fiber:
    """Continue a whole fiber along `path`; slot i follows input point i.

    A step from w to w_next is accepted only if the corrector converges for
    every point within the iteration cap, the corrected fiber stays separated
    (FiberCollision otherwise), and the separation exceeds ten times the
    largest Newton correction; otherwise the step is halved down to the floor
    (StepFloorReached).

    `record`, if given, is called as record(t, w, points) at the start node
    and after every accepted step, with t the global path parameter in [0, 1].
    """
    newton_tol = DEFAULTS.newton_tol if newton_tol is None else newton_tol
    step_floor = DEFAULTS.step_floor if step_floor is None else step_floor
    max_newton_iters = (
        DEFAULTS.max_newton_iters if max_newton_iters is None else max_newton_iters
    )
    collision_factor = (
        DEFAULTS.collision_factor if collision_factor is None else collision_factor
    )
    if abs(fiber.w - path.start) > 1e-9:
        raise ValueError("fiber base does not match path start")
    pts = np.array(fiber.points, dtype=complex)
    w = complex(path.start)
    nseg = len(path.segments)
    if record is not None:
        record(0.0, w, pts.copy())
    for iseg, seg in enumerate(path.segments):
        s, h, streak = 0.0, 0.25, 0
        while s < 1.0:
            target = min(s + h, 1.0)
            w_next = complex(seg.point(target))
            num, dnum = b.P.eval_with_derivative(pts)
            den, dden = b.Q.eval_with_derivative(pts)
            deriv = (dnum * den - num * dden) / (den * den)
            accepted = False
            if np.all(np.abs(deriv) > 1e-30):
                pred = pts + (w_next - w) / deriv
                corrected, ok, max_corr = _correct(
                    b, pred, w_next, newton_tol, max_newton_iters
                )
                if ok:
                    sep = _min_separation(corrected)
                    if sep <= collision_factor * newton_tol:
                        raise FiberCollision(
                            f"fiber separation {sep:.3e} under threshold near w={w_next}"
                        )
                    if sep > 10.0 * max_corr:
                        pts, w, s = corrected, w_next, target
                        streak += 1
                        if streak >= 2:
                            h = min(2.0 * h, 0.25)
                        accepted = True
                        if record is not None:
                            record((iseg + s) / nseg, w, pts.copy())
            if not accepted:
                h *= 0.5
                streak = 0
                if h < step_floor:
                    raise StepFloorReached(
                        f"step floor reached on segment {iseg} near w={w_next}"
                    )
    return Fiber(w=w, points=tuple(pts.tolist()), separation=_min_separation(pts))


def track_with_trace(b, fiber, path, **kwargs):
    """Like `track` but also returns the list of (t, w, points) nodes."""
    rows = []

    def record(t, w, pts):
        rows.append((t, w, tuple(pts.tolist())))

    end = track(b, fiber, path, record=record, **kwargs)
    return end, rows


def loop_permutation(b, fiber0, loop, **kwargs):
    """Permutation induced by continuing `fiber0` around the closed `loop`.

    Returns the Permutation tau with end.points[i] = fiber0.points[tau(i)],
    matching endpoints to start points by nearest neighbour within a third of
    the starting separation (AmbiguousMatching otherwise).
    """
    from .monodromy import Permutation

    if not loop.is_closed:
        raise ValueError("loop_permutation needs a closed path")
    end = track(b, fiber0, loop, **kwargs)
    start_pts = np.array(fiber0.points)
    end_pts = np.array(end.points)
    images = []
    bound = fiber0.separation / 3.0
    for e in end_pts:
        dists = np.abs(start_pts - e)
        j = int(np.argmin(dists))
        if dists[j] >= bound:
            raise AmbiguousMatching(
                f"endpoint {e} is {dists[j]:.3e} from its nearest start point "
                f"(bound {bound:.3e})"
            )
        images.append(j)
    if len(set(images)) != len(images):
        raise AmbiguousMatching("endpoint matching is not a bijection")
    return Permutation(tuple(images))


def winding_number(path, point, samples_per_segment=512) -> float:
    """Total argument increment of (path - point) in turns (independent check)."""
    total = 0.0
    for seg in path.segments:
        prev = cmath.phase(seg.point(0.0) - point)
        for k in range(1, samples_per_segment + 1):
            cur = cmath.phase(seg.point(k / samples_per_segment) - point)
            delta = cur - prev
            while delta > math.pi:
                delta -= _TWO_PI
            while delta < -math.pi:
                delta += _TWO_PI
            total += delta
            prev = cur
    return total / _TWO_PI


def separation_slope(b, beta, radii=(1e-2, 1e-3, 1e-4), samples_per_circle=8):
    """Log-log slope of the minimal fiber separation on circles around `beta`.

    Near a simple branch value the two colliding sheets separate like the
    square root of the distance, so the fitted slope is 0.5.
    """
    min_seps = []
    for r in radii:
        seps = []
        for k in range(samples_per_circle):
            w = beta + r * cmath.exp(2j * math.pi * (k + 0.37) / samples_per_circle)
            seps.append(initial_fiber(b, w).separation)
        min_seps.append(min(seps))
    coef = np.polyfit(np.log(np.asarray(radii)), np.log(np.asarray(min_seps)), 1)
    return float(coef[0])
