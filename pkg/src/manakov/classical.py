"""Classical energy-momentum diagram of the Manakov top.

The classical phase space is the product of two unit spheres; the pair of
commuting functions (X, Y) maps it onto a curved triangular region of the
plane whose boundary and internal strata consist of four straight lines,

    L1: Y = 2ab(X-1)            L5: Y = 2(1-a)(1-b)(X-1)
    L6: Y = 2a(1-a)(X+1)        L7: Y = 2b(1-b)(X+1)

six isolated critical values A..F, and one parabola arc (the image of the
rank-deficiency curves on two of the three invariant tori).  For a > b > 1
the regular values split into four regions: the rhomb AFDE (region I), the
small curved triangle at the parabola (region II), and two triangles CDF
and AFB (regions III, IV).  A regular value has two torus components in
its fiber in regions I, III, IV and four in region II.

Invariant tori are parameterized by two angles: on torus ``i`` the ``i``-th
components vanish and the remaining two (in ascending index order) are the
cosine and sine of the angle.  The eight invariant spheres are the graphs
``t = (e1*s1, e2*s2, e3*s3)`` with the sign patterns in
:data:`INVARIANT_SPHERE_SIGNS`; the dynamically invariant ones (1, 5, 6, 7)
have one-dimensional images, namely the critical lines of the same name.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from .model import ParameterError, xy_coefficients

PARAM_TOL = 1e-9
BOUNDARY_BAND = 1e-9

INVARIANT_SPHERE_SIGNS = {
    1: (1, 1, 1), 2: (1, 1, -1), 3: (1, -1, 1), 4: (-1, 1, 1),
    5: (1, -1, -1), 6: (-1, 1, -1), 7: (-1, -1, 1), 8: (-1, -1, -1),
}

REGION_NAMES = ("I", "II", "III", "IV")
COMPONENT_COUNT = {"I": 2, "II": 4, "III": 2, "IV": 2, "boundary": 0, "outside": 0}


class InconclusiveSampleError(RuntimeError):
    """Too few Monte Carlo samples survived the level-set window."""


# ---------------------------------------------------------------------------
# classical evaluation and critical geometry
# ---------------------------------------------------------------------------

def classical_xy(a: float, b: float, s, t) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate (X, Y) on classical configurations.

    ``s`` and ``t`` are arrays of shape (..., 3) of components on the two
    unit spheres.
    """
    c2, c3 = xy_coefficients(a, b)
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    s1, s2, s3 = s[..., 0], s[..., 1], s[..., 2]
    t1, t2, t3 = t[..., 0], t[..., 1], t[..., 2]
    X = s1 * t1 + c2 * s2 * t2 + c3 * s3 * t3
    Y = (b * (1 - a) * (s2**2 + t2**2) + 2 * b * (1 - a) * c3 * s2 * t2
         + a * (1 - b) * (s3**2 + t3**2) + 2 * a * (1 - b) * c2 * s3 * t3)
    return X, Y


@dataclass(frozen=True)
class CriticalValues:
    """The six isolated critical values of the energy-momentum map."""

    A: tuple[float, float]
    B: tuple[float, float]
    C: tuple[float, float]
    D: tuple[float, float]
    E: tuple[float, float]
    F: tuple[float, float]

    def as_dict(self) -> dict[str, tuple[float, float]]:
        return {k: getattr(self, k) for k in "ABCDEF"}


def critical_values(a: float, b: float) -> CriticalValues:
    """Closed-form critical values; B and C are parameter independent."""
    den = 1.0 - a - b
    if abs(den) <= PARAM_TOL:
        raise ParameterError(f"singular denominator 1-a-b=0 at a={a}, b={b}")
    c2, c3 = xy_coefficients(a, b)
    return CriticalValues(
        A=(c3, -4 * a * b * (1 - b) / den),
        B=(1.0, 0.0),
        C=(-1.0, 0.0),
        D=(-c3, 4 * a * (1 - a) * (1 - b) / den),
        E=(c2, -4 * a * b * (1 - a) / den),
        F=(-c2, 4 * b * (1 - a) * (1 - b) / den),
    )


@dataclass(frozen=True)
class CriticalLines:
    """The four critical lines, keyed by the invariant sphere they image.

    Each entry is (slope, anchor_x): the line Y = slope * (X - anchor_x).
    L1 and L5 pass through (1, 0); L6 and L7 pass through (-1, 0).
    """

    L1: tuple[float, float]
    L5: tuple[float, float]
    L6: tuple[float, float]
    L7: tuple[float, float]

    def as_dict(self) -> dict[str, tuple[float, float]]:
        return {k: getattr(self, k) for k in ("L1", "L5", "L6", "L7")}

    def y_at(self, name: str, x) -> np.ndarray:
        slope, anchor = getattr(self, name)
        return slope * (np.asarray(x, dtype=float) - anchor)

    def signed_distance(self, name: str, x, y) -> np.ndarray:
        """Euclidean distance to the full line, signed by side (+ above)."""
        slope, anchor = getattr(self, name)
        return (np.asarray(y, dtype=float) - slope * (np.asarray(x) - anchor)) \
            / np.hypot(1.0, slope)


def critical_lines(a: float, b: float) -> CriticalLines:
    if abs(1.0 - a - b) <= PARAM_TOL:
        raise ParameterError(f"singular denominator 1-a-b=0 at a={a}, b={b}")
    return CriticalLines(
        L1=(2 * a * b, 1.0),
        L5=(2 * (1 - a) * (1 - b), 1.0),
        L6=(2 * a * (1 - a), -1.0),
        L7=(2 * b * (1 - b), -1.0),
    )


# ---------------------------------------------------------------------------
# invariant tori
# ---------------------------------------------------------------------------

_TORUS_AXES = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


@dataclass(frozen=True)
class TorusChart:
    """Angle chart on invariant torus ``index`` (components ``index`` vanish)."""

    index: int

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError(f"torus index must be 1, 2 or 3, got {self.index}")

    @property
    def cos_axis(self) -> int:
        return _TORUS_AXES[self.index][0]

    @property
    def sin_axis(self) -> int:
        return _TORUS_AXES[self.index][1]


def torus_point(index: int, phis, phit) -> tuple[np.ndarray, np.ndarray]:
    """Sphere components (s, t) of a torus chart point; shape (..., 3)."""
    chart = TorusChart(index)
    phis = np.asarray(phis, dtype=float)
    phit = np.asarray(phit, dtype=float)
    s = np.zeros(phis.shape + (3,))
    t = np.zeros(phit.shape + (3,))
    j, k = chart.cos_axis - 1, chart.sin_axis - 1
    s[..., j], s[..., k] = np.cos(phis), np.sin(phis)
    t[..., j], t[..., k] = np.cos(phit), np.sin(phit)
    return s, t


def restrict_to_torus(index: int, a: float, b: float, phis, phit):
    """(X, Y) values at torus chart points."""
    s, t = torus_point(index, phis, phit)
    return classical_xy(a, b, s, t)


def torus_jacobian_det(index: int, a: float, b: float, phis, phit) -> np.ndarray:
    """det d(X,Y)/d(phis,phit) on the torus chart (analytic partials).

    Zeros of this determinant are the critical points of the restricted
    energy-momentum map: the four symmetry lines phis = +-phit, pi +- phit
    plus (for suitable parameters) two parameter-dependent curves.
    """
    chart = TorusChart(index)
    c2, c3 = xy_coefficients(a, b)
    phis = np.asarray(phis, dtype=float)
    phit = np.asarray(phit, dtype=float)

    # per-axis components and their angle derivatives on each factor
    def comps(phi):
        vals = {chart.cos_axis: np.cos(phi), chart.sin_axis: np.sin(phi)}
        ders = {chart.cos_axis: -np.sin(phi), chart.sin_axis: np.cos(phi)}
        for axis in (1, 2, 3):
            vals.setdefault(axis, np.zeros_like(phi))
            ders.setdefault(axis, np.zeros_like(phi))
        return vals, ders

    sv, sd = comps(phis)
    tv, td = comps(phit)

    cx = {1: 1.0, 2: c2, 3: c3}
    dx_ds = sum(cx[n] * sd[n] * tv[n] for n in (1, 2, 3))
    dx_dt = sum(cx[n] * sv[n] * td[n] for n in (1, 2, 3))

    q = {2: b * (1 - a), 3: a * (1 - b)}
    cross = {2: c3, 3: c2}
    dy_ds = sum(2 * q[n] * (sv[n] * sd[n] + cross[n] * sd[n] * tv[n]) for n in (2, 3))
    dy_dt = sum(2 * q[n] * (tv[n] * td[n] + cross[n] * sv[n] * td[n]) for n in (2, 3))
    return dx_ds * dy_dt - dx_dt * dy_ds


def _curve_quadratic(index: int, a: float, b: float, tau: np.ndarray):
    """Coefficients A s^2 + B s + C = 0 for the parameter-dependent critical
    curves in half-angle variables s = tan(phis/2), tau = tan(phit/2)."""
    if index == 1:
        return (1 - b) - a * tau**2, 2 * (a - b - 1) * tau, (1 - b) * tau**2 - a
    if index == 2:
        return (a - b) - tau**2, 2 * (1 - a - b) * tau, (a - b) * tau**2 - 1
    return (b - a) - tau**2, 2 * (1 - a - b) * tau, (b - a) * tau**2 - 1


@dataclass(frozen=True)
class TorusCurve:
    """One branch of a parameter-dependent critical curve on a torus."""

    index: int
    phis: np.ndarray
    phit: np.ndarray
    xy: np.ndarray  # (n, 2) energy-momentum images


def torus_critical_curves(a: float, b: float, index: int,
                          n_samples: int = 2048,
                          det_tol: float = 1e-9) -> list[TorusCurve]:
    """Parameter-dependent critical curves on torus ``index``.

    Solves the rank condition branch-wise in half-angle variables with a
    cancellation-safe quadratic solver, then keeps only points that satisfy
    the Jacobian condition to ``det_tol``.  An empty list is a valid result
    (for a > b > 1 only tori 2 and 3 carry real curves).
    """
    TorusChart(index)
    xy_coefficients(a, b)  # parameter guard
    phit = np.linspace(-np.pi, np.pi, n_samples, endpoint=False) + 1e-7
    tau = np.tan(phit / 2.0)
    A, B, C = _curve_quadratic(index, a, b, tau)
    disc = B * B - 4 * A * C

    branches = [[], []]  # (phis, phit) per sign branch
    ok = disc >= 0
    sq = np.sqrt(np.where(ok, disc, 0.0))
    qq = -(B + np.sign(np.where(B == 0, 1.0, B)) * sq) / 2.0
    with np.errstate(divide="ignore", invalid="ignore"):
        r1 = np.where(np.abs(A) > 1e-14, qq / A, np.where(np.abs(B) > 1e-14, -C / B, np.nan))
        r2 = np.where(np.abs(qq) > 1e-14, C / qq, np.nan)
    for br, roots in zip(branches, (r1, r2)):
        good = ok & np.isfinite(roots)
        br.append((2.0 * np.arctan(roots[good]), phit[good]))

    curves = []
    for br in branches:
        phis_b, phit_b = br[0]
        if phis_b.size == 0:
            continue
        det = torus_jacobian_det(index, a, b, phis_b, phit_b)
        keep = np.abs(det) <= det_tol
        if not np.any(keep):
            continue
        phis_b, phit_b = phis_b[keep], phit_b[keep]
        x, y = restrict_to_torus(index, a, b, phis_b, phit_b)
        curves.append(TorusCurve(index=index, phis=phis_b, phit=phit_b,
                                 xy=np.column_stack([x, y])))
    return curves


# ---------------------------------------------------------------------------
# the assembled diagram: regions, classification, probes
# ---------------------------------------------------------------------------

def _parabola_polyline(a: float, b: float, n_arc: int) -> np.ndarray:
    """Image of the torus critical curves, as an x-sorted polyline."""
    pts = [c.xy for i in (2, 3) for c in torus_critical_curves(a, b, i, n_arc)]
    if not pts:
        return np.zeros((0, 2))
    xy = np.vstack(pts)
    xy = xy[np.argsort(xy[:, 0])]
    # collapse duplicates (the two tori trace the same arc)
    keep = np.ones(len(xy), dtype=bool)
    keep[1:] = np.diff(xy[:, 0]) > 1e-12
    return xy[keep]


@dataclass(frozen=True)
class EMDiagram:
    """Critical geometry of the energy-momentum map for one (a, b)."""

    a: float
    b: float
    values: CriticalValues
    lines: CriticalLines
    parabola: np.ndarray
    _boundary_tree: cKDTree = field(repr=False, compare=False, default=None)
    _cache: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def y_scale(self) -> float:
        """Depth of the diagram, used to normalize the anisotropic chart."""
        ys = [p[1] for p in self.values.as_dict().values()]
        return max(1.0, float(np.max(np.abs(ys))))

    # -- region predicates --------------------------------------------------

    def _gap(self, name: str, x, y):
        return self.lines.signed_distance(name, x, y)

    def _arc_gap(self, x, y):
        """Signed vertical-ish gap below the parabola arc; NaN off the arc."""
        arc = self.parabola
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if arc.shape[0] < 2:
            return np.full(np.broadcast(x, y).shape, np.nan)
        inside = (x >= arc[0, 0]) & (x <= arc[-1, 0])
        yarc = np.interp(x, arc[:, 0], arc[:, 1])
        slope = np.gradient(arc[:, 1], arc[:, 0])
        local = np.interp(x, arc[:, 0], slope)
        gap = (yarc - y) / np.hypot(1.0, local)
        return np.where(inside, gap, np.nan)

    def region_tests(self, x, y, band: float = 0.0):
        """Boolean membership of the four open regions, shrunk by ``band``."""
        g1 = self._gap("L1", x, y)
        g5 = self._gap("L5", x, y)
        g6 = self._gap("L6", x, y)
        g7 = self._gap("L7", x, y)
        ga = self._arc_gap(x, y)
        on_arc = np.nan_to_num(ga, nan=-np.inf) > band
        return {
            "I": (g1 > band) & (g6 > band) & (g5 < -band) & (g7 < -band),
            "II": (g5 > band) & (g7 > band) & on_arc,
            "III": (g5 > band) & (g6 > band) & (g7 < -band),
            "IV": (g1 > band) & (g5 < -band) & (g7 > band),
        }

    def classify(self, x: float, y: float) -> str:
        """Region label at one point: I..IV, 'boundary', or 'outside'."""
        strict = self.region_tests(x, y, band=BOUNDARY_BAND)
        for name in REGION_NAMES:
            if bool(strict[name]):
                return name
        slack = self.region_tests(x, y, band=-BOUNDARY_BAND)
        if any(bool(v) for v in slack.values()):
            return "boundary"
        return "outside"

    def component_count(self, x: float, y: float) -> int:
        return COMPONENT_COUNT[self.classify(x, y)]

    # -- derived geometry ---------------------------------------------------

    def region_vertices(self, name: str) -> list[tuple[float, float]]:
        v = self.values
        if name == "I":
            return [v.A, v.F, v.D, v.E]
        if name == "III":
            return [v.C, v.D, v.F]
        if name == "IV":
            return [v.A, v.F, v.B]
        if name == "II":
            arc = self.parabola
            if arc.shape[0] < 2:
                return [v.F]
            k = (float(arc[0, 0]), float(arc[0, 1]))
            l = (float(arc[-1, 0]), float(arc[-1, 1]))
            return [k, l, v.F]
        raise ValueError(f"unknown region {name!r}")

    def region_diameter(self, name: str, normalized: bool = True) -> float:
        """Largest vertex separation; by default in the (x, y/y_scale) chart."""
        pts = np.array(self.region_vertices(name), dtype=float)
        if len(pts) < 2:
            return 0.0
        if normalized:
            pts = pts / np.array([1.0, self.y_scale])
        d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
        return float(d.max())

    def region_probe(self, name: str) -> tuple[float, float]:
        """A reference point well inside the region."""
        v = self.values
        if name == "II":
            arc = self.parabola
            if arc.shape[0] < 2:
                raise ParameterError("region II is degenerate for these parameters")
            apex = arc[np.argmin(arc[:, 1])]
            return ((v.F[0] + float(apex[0])) / 2, (v.F[1] + float(apex[1])) / 2)
        pts = np.array(self.region_vertices(name))
        return (float(pts[:, 0].mean()), float(pts[:, 1].mean()))

    def region_margin(self, name: str, x: float, y: float,
                      normalized: bool = True) -> float:
        """Distance from an interior point to the region's bounding strata.

        Computed in the normalized (x, y/y_scale) chart by default, where
        the regions have aspect ratio of order one.
        """
        bounding = {"I": ("L1", "L5", "L6", "L7"), "III": ("L5", "L6", "L7"),
                    "IV": ("L1", "L5", "L7"), "II": ("L5", "L7")}[name]
        ys = self.y_scale if normalized else 1.0
        dists = []
        for nm in bounding:
            slope, anchor = getattr(self.lines, nm)
            dists.append(abs(y / ys - (slope / ys) * (x - anchor))
                         / np.hypot(1.0, slope / ys))
        if name == "II" and self.parabola.shape[0] >= 2:
            dists.append(float(np.min(np.hypot(
                self.parabola[:, 0] - x, (self.parabola[:, 1] - y) / ys))))
        return float(min(dists))

    def region_inradius(self, name: str, n_grid: int = 96) -> float:
        """Largest interior margin attainable inside a region (grid estimate).

        Thin regions (notably II) cannot host points 5% of their diameter
        away from every stratum; interior filters cap their margin with
        half this value.
        """
        key = ("inradius", name, n_grid)
        if key not in self._cache:
            pts = np.array(self.region_vertices(name), dtype=float)
            if len(pts) < 3:
                self._cache[key] = 0.0
                return 0.0
            xs = np.linspace(pts[:, 0].min(), pts[:, 0].max(), n_grid)
            ys_ = np.linspace(pts[:, 1].min(), pts[:, 1].max(), n_grid)
            best = 0.0
            gx, gy = np.meshgrid(xs, ys_)
            member = self.region_tests(gx, gy)[name]
            for x, y in zip(gx[member], gy[member]):
                best = max(best, self.region_margin(name, float(x), float(y)))
            self._cache[key] = best
        return self._cache[key]

    def interior_margin(self, name: str, fraction: float = 0.05) -> float:
        """Margin used by 'deep interior' filters for one region."""
        return min(fraction * self.region_diameter(name),
                   0.5 * self.region_inradius(name))

    def boundary_polyline(self, n_per_piece: int = 2048) -> np.ndarray:
        """Dense sampling of the outer boundary B-E-C-K-arc-L-B."""
        v = self.values
        arc = self.parabola
        k = tuple(arc[0]) if arc.shape[0] >= 2 else v.F
        l = tuple(arc[-1]) if arc.shape[0] >= 2 else v.F
        pieces = []
        for p, q in ((v.B, v.E), (v.E, v.C), (v.C, k), (l, v.B)):
            ts = np.linspace(0.0, 1.0, n_per_piece)
            pieces.append(np.column_stack([p[0] + ts * (q[0] - p[0]),
                                           p[1] + ts * (q[1] - p[1])]))
        if arc.shape[0] >= 2:
            pieces.append(arc)
        return np.vstack(pieces)

    def distance_outside(self, x, y) -> np.ndarray:
        """Normalized-chart distance to the diagram for outside points.

        Zero for points inside or on the boundary; otherwise the Euclidean
        distance in (x, y / y_scale) coordinates to the outer boundary.
        """
        tree = self._ensure_boundary_tree()
        x = np.atleast_1d(np.asarray(x, dtype=float))
        y = np.atleast_1d(np.asarray(y, dtype=float))
        tests = self.region_tests(x, y, band=-BOUNDARY_BAND)
        inside = np.zeros(x.shape, dtype=bool)
        for name in REGION_NAMES:
            inside |= tests[name]
        d, _ = tree.query(np.column_stack([x, y / self.y_scale]))
        return np.where(inside, 0.0, d)

    def _ensure_boundary_tree(self) -> cKDTree:
        if self._boundary_tree is None:
            pts = self.boundary_polyline()
            pts = pts / np.array([1.0, self.y_scale])
            object.__setattr__(self, "_boundary_tree", cKDTree(pts))
        return self._boundary_tree


def em_diagram(a: float, b: float, n_arc: int = 4096) -> EMDiagram:
    return EMDiagram(a=a, b=b, values=critical_values(a, b),
                     lines=critical_lines(a, b),
                     parabola=_parabola_polyline(a, b, n_arc))


# ---------------------------------------------------------------------------
# Monte Carlo fiber-component oracle
# ---------------------------------------------------------------------------

def _sample_sphere(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.uniform(-1.0, 1.0, n)
    phi = rng.uniform(0.0, 2.0 * np.pi, n)
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def fiber_component_oracle(x: float, y: float, a: float, b: float,
                           n_samples: int = 2_000_000,
                           delta: float = 0.01,
                           eps_factor: float = 4.0,
                           seed: int = 0,
                           min_retained: int = 200,
                           check_regular: bool = True) -> dict:
    """Estimate the number of connected fiber components over (x, y).

    Samples the product of spheres uniformly, retains configurations whose
    (X, Y) values fall within a window of half-width ``delta`` (relative to
    the per-axis extent of the diagram), links retained points closer than
    ``eps_factor`` times the median nearest-neighbour distance, and counts
    components holding at least 1% of the retained points.
    """
    diagram = em_diagram(a, b)
    ys = diagram.y_scale
    dx, dy = delta * 1.0, delta * ys

    if check_regular:
        # distances in the normalized chart: lines, arc, isolated values
        margin = 3.0 * delta
        near = []
        xn = np.array([x, y / ys])
        for nm in ("L1", "L5", "L6", "L7"):
            slope, anchor = getattr(diagram.lines, nm)
            p = np.array([anchor, 0.0])
            d = np.array([1.0, slope / ys])
            d /= np.linalg.norm(d)
            v = xn - p
            near.append(float(np.linalg.norm(v - (v @ d) * d)))
        if diagram.parabola.shape[0] >= 2:
            arcn = diagram.parabola / np.array([1.0, ys])
            near.append(float(np.min(np.linalg.norm(arcn - xn, axis=1))))
        for p in diagram.values.as_dict().values():
            near.append(float(np.linalg.norm(np.array([p[0], p[1] / ys]) - xn)))
        if min(near) < margin:
            raise ParameterError(
                f"probe ({x}, {y}) is within 3*delta of a critical stratum; "
                "the component count is not defined there")

    rng = np.random.default_rng(seed)
    chunk = 500_000
    kept = []
    remaining = int(n_samples)
    while remaining > 0:
        n = min(chunk, remaining)
        remaining -= n
        s = _sample_sphere(rng, n)
        t = _sample_sphere(rng, n)
        X, Y = classical_xy(a, b, s, t)
        mask = (np.abs(X - x) < dx) & (np.abs(Y - y) < dy)
        if np.any(mask):
            kept.append(np.hstack([s[mask], t[mask]]))
    retained = np.vstack(kept) if kept else np.zeros((0, 6))

    if retained.shape[0] < min_retained:
        raise InconclusiveSampleError(
            f"only {retained.shape[0]} samples retained near ({x}, {y}); "
            f"need at least {min_retained}")

    tree = cKDTree(retained)
    dists, _ = tree.query(retained, k=2)
    eps = eps_factor * float(np.median(dists[:, 1]))
    pairs = tree.query_pairs(eps, output_type="ndarray")
    n = retained.shape[0]
    adj = sparse.coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])),
                            shape=(n, n))
    ncomp, labels = connected_components(adj, directed=False)
    sizes = np.bincount(labels)
    floor = max(1, int(0.01 * n))
    count = int(np.count_nonzero(sizes >= floor))
    return {"count": count, "retained": int(n), "eps": eps,
            "component_sizes": sorted((int(c) for c in sizes if c >= floor),
                                      reverse=True)}


# ---------------------------------------------------------------------------
# parameter-space classification
# ---------------------------------------------------------------------------

DEGENERACY_CONDITIONS = ("a=0", "a=1", "b=0", "b=1", "a=b", "a+b=1")
SYMMETRY_CONDITIONS = ("b=a-1", "b=a+1")


@dataclass(frozen=True)
class ParameterClass:
    regular: bool
    conditions: tuple[str, ...]
    degenerate: bool
    symmetric_diagram: bool


def parameter_classification(a: float, b: float,
                             tol: float = PARAM_TOL) -> ParameterClass:
    """Detect critical parameter values (degenerate or merely symmetric).

    Degeneracies collapse regions or merge boundary lines; the conditions
    b = a -+ 1 only make the diagram symmetric about the Y axis.
    """
    if not (np.isfinite(a) and np.isfinite(b)):
        raise ParameterError("parameters must be finite")
    hits = []
    checks = {
        "a=0": abs(a), "a=1": abs(a - 1), "b=0": abs(b), "b=1": abs(b - 1),
        "a=b": abs(a - b), "a+b=1": abs(a + b - 1),
        "b=a-1": abs(b - (a - 1)), "b=a+1": abs(b - (a + 1)),
    }
    for name in (*DEGENERACY_CONDITIONS, *SYMMETRY_CONDITIONS):
        if checks[name] <= tol:
            hits.append(name)
    degenerate = any(h in DEGENERACY_CONDITIONS for h in hits)
    symmetric = any(h in SYMMETRY_CONDITIONS for h in hits)
    return ParameterClass(regular=not hits, conditions=tuple(hits),
                          degenerate=degenerate, symmetric_diagram=symmetric)
