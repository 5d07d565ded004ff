"""Joint-spectrum lattices and monodromy of transported elementary cells.

A closed path in the base of the fibration is walked in small steps while
an elementary cell (a lattice point with two basis vectors ending on
lattice points) is re-snapped to the lattice after every step.  Comparing
the returned cell with the initial one in the initial basis yields an
integer change-of-basis matrix; its rows expand the transported basis
vectors in the original ones.

Two lattices are supported:

* the unfolded lattice of the limiting case, chart (x, y'), where y' is
  the global momentum projection.  A loop encircling the isolated
  singular value at the origin picks up the shear
  ``(b1, b2) -> (b1, b2 + 2 b1)`` when ``b1`` is the step inside a column
  of constant y' (the invariant direction) and ``b2`` a step to the
  neighbouring column;
* a single-irrep sublattice of the generic joint spectrum, chart
  (x, y / y_scale).  Those sublattices stay regular across the internal
  strata, so a closed path through regions I-III-II-IV is passable and
  returns the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import Delaunay, cKDTree

from .classical import em_diagram, parameter_classification
from .model import ModelParams, ParameterError, build_limiting, pair_operators
from .spins import spin_matrices
from .spectrum import JointEigenvalue, joint_spectrum
from .symmetry import IrrepLabel

STEP_FACTOR = 0.4          # path step / shortest basis vector
BASIS_SNAP_TOL = 0.5       # basis-endpoint snap displacement, local units
BASIS_SNAP_SOFT = 0.9      # accepted beyond the hard limit when unambiguous
BASIS_SNAP_MARGIN = 0.25   # required lead over the runner-up in soft accepts
ANCHOR_SNAP_TOL = 0.75     # anchor-to-cursor distance, local units
REFINE_TOL = 0.25          # interior-point detection for cell splitting
COARSEN_TOL = 0.45         # doubled-continuation detection for cell fusing
AMBIGUITY_TOL = 1e-9
FORBIDDEN_MARGIN = 2.0     # multiples of the local lattice spacing


class TransportError(RuntimeError):
    """Cell transport failed (snap ambiguity, lost lattice, open support)."""


@dataclass(frozen=True)
class JointLattice:
    """Lattice of joint values in a two-dimensional chart."""

    points: np.ndarray
    chart: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("lattice points must form an (n, 2) array")
        tree = cKDTree(pts)
        d, _ = tree.query(pts, k=2)
        if pts.shape[0] > 1 and float(d[:, 1].min()) < 1e-9:
            raise ValueError("lattice contains (near-)duplicate points")

    @property
    def size(self) -> int:
        return self.points.shape[0]

    def nearest(self, xy) -> int:
        return int(np.argmin(np.linalg.norm(self.points - np.asarray(xy), axis=1)))

    def local_spacing(self, xy, k: int = 9) -> float:
        """Median nearest-neighbour distance among the k points closest to xy."""
        tree = cKDTree(self.points)
        _, idx = tree.query(np.asarray(xy, dtype=float), k=min(k, self.size))
        sub = self.points[np.atleast_1d(idx)]
        dd, _ = cKDTree(self.points).query(sub, k=2)
        return float(np.median(dd[:, 1]))


@dataclass(frozen=True)
class LatticeCell:
    """Anchor point plus two basis vectors ending on lattice points.

    ``p1``/``p2`` are the indices of the basis endpoints; ``b1``/``b2``
    the corresponding chart vectors.
    """

    anchor: int
    p1: int
    p2: int
    b1: np.ndarray
    b2: np.ndarray

    def matrix(self) -> np.ndarray:
        return np.column_stack([self.b1, self.b2])


@dataclass(frozen=True)
class MonodromyResult:
    matrix: np.ndarray
    path: np.ndarray
    basis_convention: str
    initial_cell: LatticeCell
    final_cell: LatticeCell
    snap_log: list | None = None

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(2, dtype=int)))


# ---------------------------------------------------------------------------
# lattice constructors
# ---------------------------------------------------------------------------

def limiting_lattice(S: int) -> JointLattice:
    """Joint (x, y') lattice of the unfolded limiting case.

    y' is a good quantum number with exact eigenvalues n/2 (unscaled),
    n = -2S..2S, so the lattice is built column by column: X is restricted
    to each exact y' eigenspace and diagonalized there.  Chart values
    carry the unit-Casimir scaling; the integer column index is kept in
    the metadata.
    """
    if S != int(S) or S < 4:
        raise ParameterError(
            f"limiting lattice needs S >= 4 for transportable columns, got {S}")
    S = int(S)
    ops = spin_matrices(S)
    w, v = np.linalg.eigh(1j * ops.a2)
    m = np.rint(w).astype(int)
    if np.max(np.abs(w - m)) > 1e-9:
        raise AssertionError("momentum spectrum not integral")
    f = 1.0 / np.sqrt(S * (S + 1))
    s1t = v.conj().T @ (ops.s1 * f) @ v
    s3t = v.conj().T @ (ops.s3 * f) @ v

    dim = 2 * S + 1
    cols: dict[int, list[tuple[int, int]]] = {}
    for i in range(dim):
        for j in range(dim):
            cols.setdefault(m[i] + m[j], []).append((i, j))

    points, bins = [], []
    for n in sorted(cols):
        idx = cols[n]
        I = np.array([p[0] for p in idx])
        J = np.array([p[1] for p in idx])
        block = (s1t[np.ix_(I, I)] * s1t[np.ix_(J, J)]
                 + s3t[np.ix_(I, I)] * s3t[np.ix_(J, J)])
        herm = np.max(np.abs(block - block.conj().T))
        if herm > 1e-10:
            raise AssertionError(f"column block n={n} is not hermitian ({herm})")
        xs = np.linalg.eigvalsh(block)
        vcoord = f * n / 2.0
        points.extend((float(x), vcoord) for x in xs)
        bins.extend([n] * len(xs))

    order = np.lexsort(np.array(points).T[::-1])  # sort by (x, v)
    pts = np.array(points)[order]
    bins = np.array(bins)[order]
    return JointLattice(points=pts, chart="(x, y') unfolded limiting case",
                        meta={"S": S, "bins": bins, "column_spacing": f / 2.0,
                              "y_scale": 1.0})


def irrep_lattice(params: ModelParams, irrep: IrrepLabel, seed: int = 0,
                  spectrum: list[JointEigenvalue] | None = None) -> JointLattice:
    """Single-symmetry-type sublattice of the generic joint spectrum.

    Chart coordinates are (x, y / y_scale): the depth of the diagram is
    divided out so the transport chart has aspect ratio of order one.
    """
    spec = spectrum if spectrum is not None else joint_spectrum(params, seed=seed)
    ys = em_diagram(params.a, params.b).y_scale
    pts = np.array([(e.x, e.y / ys) for e in spec if e.irrep == irrep])
    if pts.size == 0:
        raise ValueError(f"no joint values carry irrep {irrep}")
    return JointLattice(points=pts, chart=f"(x, y/{ys:g}) irrep {irrep.name}",
                        meta={"params": params, "irrep": irrep.name,
                              "y_scale": ys})


# ---------------------------------------------------------------------------
# cells
# ---------------------------------------------------------------------------

def _nearest2(points: np.ndarray, minv: np.ndarray, target: np.ndarray
              ) -> tuple[int, float, float]:
    """Nearest lattice point to ``target`` in the local cell metric.

    Returns (index, distance, lead of the runner-up over the winner).
    """
    d = np.linalg.norm((points - target) @ minv.T, axis=1)
    if len(d) == 1:
        return 0, float(d[0]), np.inf
    order = np.argpartition(d, 1)[:2]
    best, second = sorted((float(d[order[0]]), float(d[order[1]])))
    i = int(order[0] if d[order[0]] <= d[order[1]] else order[1])
    return i, best, second - best


def _snap(points: np.ndarray, minv: np.ndarray, target: np.ndarray,
          tol: float, what: str) -> tuple[int, float]:
    """Snap ``target`` to the lattice, aborting on ties or large jumps."""
    i, best, lead = _nearest2(points, minv, target)
    if lead < AMBIGUITY_TOL:
        raise TransportError(
            f"ambiguous {what} snap: two lattice points at local distance "
            f"{best:.6f} vs {best + lead:.6f}")
    if best > tol:
        raise TransportError(
            f"{what} snap displacement {best:.3f} exceeds {tol} local units; "
            "the path lost the lattice")
    return i, best


def cell_from_indices(lattice: JointLattice, anchor: int, p1: int, p2: int,
                      check: bool = True) -> LatticeCell:
    pts = lattice.points
    b1 = pts[p1] - pts[anchor]
    b2 = pts[p2] - pts[anchor]
    cell = LatticeCell(anchor=anchor, p1=p1, p2=p2, b1=b1, b2=b2)
    if check:
        validate_cell(lattice, cell)
    return cell


def validate_cell(lattice: JointLattice, cell: LatticeCell,
                  tol: float = 0.25) -> None:
    """All four implied vertices must be lattice points (snap tolerance)."""
    m = cell.matrix()
    if abs(np.linalg.det(m)) < 1e-12:
        raise ValueError("cell basis vectors are collinear")
    minv = np.linalg.inv(m)
    base = lattice.points[cell.anchor]
    for corner in (cell.b1, cell.b2, cell.b1 + cell.b2):
        _snap(lattice.points, minv, base + corner, tol, "cell-vertex")


def auto_cell(lattice: JointLattice, at, max_candidates: int = 12) -> LatticeCell:
    """Elementary cell anchored at the lattice point nearest ``at``.

    The first basis vector points to the nearest neighbour; the second to
    the nearest sufficiently non-collinear neighbour that closes a cell
    whose fourth vertex is again a lattice point.
    """
    pts = lattice.points
    anchor = lattice.nearest(at)
    d = np.linalg.norm(pts - pts[anchor], axis=1)
    order = np.argsort(d)[1:max_candidates + 1]
    p1 = int(order[0])
    b1 = pts[p1] - pts[anchor]
    for cand in order[1:]:
        b2 = pts[cand] - pts[anchor]
        cross = abs(b1[0] * b2[1] - b1[1] * b2[0])
        if cross < 0.3 * np.linalg.norm(b1) * np.linalg.norm(b2):
            continue
        try:
            return cell_from_indices(lattice, anchor, p1, int(cand))
        except (ValueError, TransportError):
            continue
    raise TransportError(f"no elementary cell found near {at}")


def limiting_default_cell(lattice: JointLattice, at) -> LatticeCell:
    """The reference cell of the unfolded lattice at a point ``at``.

    b1 steps inside the column of constant y' (towards larger x) and is
    the direction invariant under the monodromy; b2 steps to the adjacent
    column above.
    """
    pts = lattice.points
    colsp = lattice.meta["column_spacing"]
    anchor = lattice.nearest(at)
    base = pts[anchor]
    same = np.abs(pts[:, 1] - base[1]) < 1e-12
    up = np.abs(pts[:, 1] - (base[1] + colsp)) < 1e-12
    right = same & (pts[:, 0] > base[0] + 1e-12)
    if not np.any(right) or not np.any(up):
        raise TransportError(f"no column neighbours at {base}; "
                             "anchor too close to the lattice edge")
    p1 = int(np.nonzero(right)[0][np.argmin(pts[right, 0])])
    cand = np.nonzero(up)[0]
    p2 = int(cand[np.argmin(np.linalg.norm(pts[cand] - base, axis=1))])
    return cell_from_indices(lattice, anchor, p1, p2)


def alternate_cell(lattice: JointLattice, cell: LatticeCell) -> LatticeCell:
    """The second basis convention: (b1, b2) -> (b2, b1 - b2)."""
    pts = lattice.points
    base = pts[cell.anchor]
    m = cell.matrix()
    minv = np.linalg.inv(m)
    p1, _ = _snap(pts, minv, base + cell.b2, 0.25, "cell-vertex")
    p2, _ = _snap(pts, minv, base + cell.b1 - cell.b2, 0.25, "cell-vertex")
    return cell_from_indices(lattice, cell.anchor, p1, p2)


# ---------------------------------------------------------------------------
# transport
# ---------------------------------------------------------------------------

def _integer_coords(lattice: JointLattice, anchor: int, frame,
                    targets, radius: int = 6) -> dict[int, tuple[int, int]]:
    """Integer coordinates of lattice points around an anchor.

    Grows a local chart outward from the anchor by unit steps of the cell
    frame, re-snapping the frame at every new point; this assigns integer
    coordinates combinatorially, so smooth distortion of the lattice does
    not leak into the change-of-basis arithmetic.
    """
    from collections import deque

    pts = lattice.points
    targets = set(int(t) for t in targets)
    coords: dict[int, tuple[int, int]] = {anchor: (0, 0)}
    frames = {anchor: (np.asarray(frame[0], dtype=float),
                       np.asarray(frame[1], dtype=float))}
    queue = deque([anchor])
    while queue and not targets <= coords.keys():
        i = queue.popleft()
        u, v = frames[i]
        ci = coords[i]
        if abs(ci[0]) + abs(ci[1]) >= radius:
            continue
        minv = np.linalg.inv(np.column_stack([u, v]))
        base = pts[i]
        for du, dv, step in ((1, 0, u), (-1, 0, -u), (0, 1, v), (0, -1, -v)):
            try:
                j, _ = _snap(pts, minv, base + step, BASIS_SNAP_TOL, "chart")
            except TransportError:
                continue
            cj = (ci[0] + du, ci[1] + dv)
            if j in coords:
                if coords[j] != cj:
                    raise TransportError(
                        "local integer chart around the anchor is inconsistent")
                continue
            try:
                ju, _ = _snap(pts, minv, pts[j] + u, BASIS_SNAP_TOL, "chart")
                jv, _ = _snap(pts, minv, pts[j] + v, BASIS_SNAP_TOL, "chart")
            except TransportError:
                coords[j] = cj  # labeled, but the chart cannot grow from here
                continue
            coords[j] = cj
            frames[j] = (pts[ju] - pts[j], pts[jv] - pts[j])
            queue.append(j)
    missing = targets - coords.keys()
    if missing:
        raise TransportError(
            f"local chart did not reach the transported basis endpoints {missing}")
    return coords


def _densify(waypoints: np.ndarray, res: float) -> np.ndarray:
    out = [waypoints[0]]
    for p, q in zip(waypoints[:-1], waypoints[1:]):
        seg = np.linalg.norm(q - p)
        n = max(1, int(np.ceil(seg / res)))
        for k in range(1, n + 1):
            out.append(p + (q - p) * (k / n))
    return np.array(out)


def transport_cell(lattice: JointLattice, path, cell: LatticeCell,
                   forbidden=(), step_factor: float = STEP_FACTOR,
                   margin_factor: float = FORBIDDEN_MARGIN,
                   collect_log: bool = False) -> MonodromyResult:
    """Transport an elementary cell along a closed path; return the basis map.

    The path is walked in steps shorter than ``step_factor`` times the
    current shortest basis vector.  After each step the anchor is snapped
    to the lattice point nearest the cursor and both basis endpoints are
    re-snapped in the metric of the current cell; ambiguous snaps or
    displacements beyond the tolerances abort the transport.

    Two lattice rearrangements are handled along the way.  Where the
    sublattice refines (new points appear inside the cell, as happens on
    entering the four-component region, where the two leaves interleave),
    the cell splits to the refined sublattice; where the continuation of a
    basis vector only exists at twice its length, the cell fuses back.
    Splits and fusions must balance over a closed path, otherwise the path
    is not passable for this cell and an error is raised.

    The returned matrix M satisfies (b1', b2')^T = M (b1, b2)^T with
    integer entries and det +-1; its rows are read off combinatorially
    from a local integer chart around the anchor.
    """
    pts = lattice.points
    waypoints = np.asarray(path, dtype=float)
    if waypoints.ndim != 2 or waypoints.shape[1] != 2 or len(waypoints) < 2:
        raise ValueError("path must be a polyline of at least two (u, v) points")
    if np.linalg.norm(waypoints[0] - waypoints[-1]) > 1e-12:
        raise ValueError("transport needs a closed path "
                         "(first and last waypoints must coincide)")
    # walk the loop from the anchor itself: a short spur to the first
    # waypoint, traversed both ways, keeps the homotopy class and makes
    # the start/end snaps symmetric
    anchor_pos = pts[cell.anchor]
    if np.linalg.norm(anchor_pos - waypoints[0]) > 1e-12:
        waypoints = np.vstack([anchor_pos, waypoints, anchor_pos])

    # the path must stay on the lattice's convex support
    probe = _densify(waypoints, res=0.25 * lattice.local_spacing(waypoints[0]))
    hull = Delaunay(pts)
    if np.any(hull.find_simplex(probe) < 0):
        raise TransportError("path exits the convex support of the lattice")

    for fp in np.atleast_2d(np.asarray(forbidden, dtype=float)) if len(forbidden) else []:
        spacing = lattice.local_spacing(fp)
        dist = float(np.min(np.linalg.norm(probe - fp, axis=1)))
        if dist < margin_factor * spacing:
            raise TransportError(
                f"path passes {dist:.4f} from forbidden point {tuple(fp)}; "
                f"needs {margin_factor} x local spacing {spacing:.4f}")

    validate_cell(lattice, cell)
    a_idx, i1, i2 = cell.anchor, cell.p1, cell.p2
    b1, b2 = cell.b1.copy(), cell.b2.copy()
    start_pos = pts[a_idx]
    if np.linalg.norm(waypoints[0] - start_pos) > 2.0 * lattice.local_spacing(start_pos):
        raise TransportError("initial cell is not at the path start")

    log = [] if collect_log else None
    area_exp = 0  # net count of cell fusions minus splits
    cursor = waypoints[0]
    for seg_end in waypoints[1:]:
        while np.linalg.norm(seg_end - cursor) > 1e-14:
            minv = np.linalg.inv(np.column_stack([b1, b2]))
            stepmax = step_factor * min(np.linalg.norm(b1), np.linalg.norm(b2))
            to_go = seg_end - cursor
            dist = np.linalg.norm(to_go)
            cursor = seg_end if dist <= stepmax else cursor + to_go / dist * stepmax
            a_idx, da = _snap(pts, minv, cursor, ANCHOR_SNAP_TOL, "anchor")
            base = pts[a_idx]

            # refinement: a lattice point strictly inside the cell means the
            # sublattice got denser; split the cell onto the refined lattice
            event = None
            patterns = ((0.5, 0.0, "b1"), (0.0, 0.5, "b2"), (0.5, 0.5, "b2"))
            found = []
            for c1, c2, slot in patterns:
                j, dj, _ = _nearest2(pts, minv, base + c1 * b1 + c2 * b2)
                if dj < REFINE_TOL and j != a_idx:
                    found.append((dj, j, slot))
            if found:
                dj, j, slot = min(found)
                if slot == "b1":
                    b1 = pts[j] - base
                else:
                    b2 = pts[j] - base
                area_exp -= 1
                event = f"split:{slot}"
                minv = np.linalg.inv(np.column_stack([b1, b2]))

            snaps = [da]
            newb = {}
            for slot, b, other in (("b1", b1, b2), ("b2", b2, b1)):
                j, dj, lead = _nearest2(pts, minv, base + b)
                if lead < AMBIGUITY_TOL:
                    raise TransportError(
                        f"ambiguous {slot} snap at {cursor}: ties at {dj:.4f}")
                ok = dj <= BASIS_SNAP_TOL or (dj <= BASIS_SNAP_SOFT
                                              and lead >= BASIS_SNAP_MARGIN)
                if not ok:
                    # coarsening: the continuation may only exist at twice
                    # the vector (the refined lattice ended); try to fuse
                    cands = [2 * b, 2 * b - other, 2 * b + other]
                    snapped = [_nearest2(pts, minv, base + c) for c in cands]
                    kbest = int(np.argmin([s[1] for s in snapped]))
                    j2, dj2, lead2 = snapped[kbest]
                    if dj2 <= COARSEN_TOL and lead2 >= AMBIGUITY_TOL:
                        j, dj = j2, dj2
                        area_exp += 1
                        event = f"fuse:{slot}"
                    else:
                        raise TransportError(
                            f"{slot} snap displacement {dj:.3f} exceeds "
                            f"{BASIS_SNAP_TOL} local units near {cursor}; "
                            "the path lost the lattice")
                newb[slot] = pts[j] - base
                snaps.append(dj)
            b1, b2 = newb["b1"], newb["b2"]
            i1 = int(np.argmin(np.linalg.norm(pts - (base + b1), axis=1)))
            i2 = int(np.argmin(np.linalg.norm(pts - (base + b2), axis=1)))
            if collect_log:
                log.append({"cursor": cursor.tolist(), "anchor": int(a_idx),
                            "snaps": snaps, "event": event})

    if a_idx != cell.anchor:
        raise TransportError(
            "closed path did not return the anchor to its starting point")
    if area_exp != 0:
        raise TransportError(
            f"cell splits and fusions do not balance along the closed path "
            f"(net {area_exp}); the path is not passable for this cell")

    final = LatticeCell(anchor=a_idx, p1=i1, p2=i2, b1=b1, b2=b2)
    # read off integer coordinates of the transported endpoints in the
    # initial cell's combinatorial chart (chart distortion cancels there)
    coords = _integer_coords(lattice, cell.anchor, (cell.b1, cell.b2), {i1, i2})
    matrix = np.array([coords[i1], coords[i2]], dtype=int)
    if abs(int(round(np.linalg.det(matrix)))) != 1:
        raise TransportError(f"monodromy matrix is not unimodular: {matrix}")
    return MonodromyResult(matrix=matrix, path=waypoints,
                           basis_convention="rows expand transported basis "
                                            "vectors in the initial basis",
                           initial_cell=cell, final_cell=final, snap_log=log)


# ---------------------------------------------------------------------------
# preset loops and high-level drivers
# ---------------------------------------------------------------------------

def circle_loop(center, radius: float, n: int = 96, ccw: bool = True) -> np.ndarray:
    th = np.linspace(0.0, 2.0 * np.pi, n + 1)
    if not ccw:
        th = th[::-1]
    return np.column_stack([center[0] + radius * np.cos(th),
                            center[1] + radius * np.sin(th)])


def limiting_monodromy(S: int, basis: str = "default", radius: float = 0.4,
                       ccw: bool = False,
                       lattice: JointLattice | None = None,
                       collect_log: bool = False) -> MonodromyResult:
    """Transport around the isolated singular value of the unfolded lattice.

    With the default (clockwise) orientation the column-crossing basis
    vector shears by +2 invariant vectors, giving [[1, 0], [2, 1]]; the
    reversed loop gives the inverse.
    """
    lat = lattice if lattice is not None else limiting_lattice(S)
    loop = circle_loop((0.0, 0.0), radius, ccw=ccw)
    cell = limiting_default_cell(lat, loop[0])
    if basis == "alt":
        cell = alternate_cell(lat, cell)
    elif basis != "default":
        raise ValueError(f"unknown basis convention {basis!r}")
    result = transport_cell(lat, loop, cell, forbidden=[(0.0, 0.0)],
                            collect_log=collect_log)
    conv = ("b1 = step inside a constant-y' column (+x), b2 = step to the "
            "next column" if basis == "default" else
            "b1 = next-column step, b2 = (column step) - (next-column step)")
    return MonodromyResult(matrix=result.matrix, path=result.path,
                           basis_convention=conv,
                           initial_cell=result.initial_cell,
                           final_cell=result.final_cell,
                           snap_log=result.snap_log)


def generic_loop_waypoints(a: float, b: float) -> np.ndarray:
    """Closed path through regions I -> III -> II -> IV -> I around F.

    Crossings of the four strata happen at the midpoints of DF, KF, FL
    and AF; rest points sit deep inside the regions.  On-axis stops are
    nudged sideways: for b = a - 1 the diagram is mirror symmetric and a
    path on the symmetry axis produces exactly tied lattice snaps.
    Coordinates are raw (x, y).
    """
    d = em_diagram(a, b)
    v = d.values
    if d.parabola.shape[0] < 2:
        raise ParameterError("parabola region is degenerate; no generic loop")
    arc = d.parabola
    k, l = arc[0], arc[-1]
    apex = arc[np.argmin(arc[:, 1])]
    mid = lambda p, q: ((p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0)
    start = (v.F[0] + 0.15 * (v.A[0] - v.F[0]),
             d.region_probe("I")[1])
    stop_ii = (0.75 * apex[0] + 0.25 * v.F[0] + 0.1 * (l[0] - apex[0]),
               0.75 * apex[1] + 0.25 * v.F[1])
    w = [start, mid(v.D, v.F), d.region_probe("III"),
         mid(k, v.F), stop_ii, mid(v.F, l),
         d.region_probe("IV"), mid(v.A, v.F), start]
    return np.array(w)


def generic_monodromy(params: ModelParams, irrep: IrrepLabel, seed: int = 0,
                      spectrum: list[JointEigenvalue] | None = None,
                      lattice: JointLattice | None = None,
                      collect_log: bool = False) -> MonodromyResult:
    """Quadruple-cell transport along the four-region loop; expect identity."""
    pc = parameter_classification(params.a, params.b)
    if pc.degenerate:
        raise ParameterError(
            f"parameters (a={params.a}, b={params.b}) give a degenerate "
            f"diagram ({', '.join(pc.conditions)}); the four-region loop "
            "does not exist")
    if params.S < 10:
        raise ParameterError("generic transport needs S >= 10 for lattice density")
    lat = lattice if lattice is not None else irrep_lattice(
        params, irrep, seed=seed, spectrum=spectrum)
    ys = lat.meta["y_scale"]
    d = em_diagram(params.a, params.b)
    w = generic_loop_waypoints(params.a, params.b) / np.array([1.0, ys])
    v = d.values
    arc = d.parabola
    forbidden = np.array([v.A, v.D, v.F, tuple(arc[0]), tuple(arc[-1])])
    forbidden = forbidden / np.array([1.0, ys])
    cell = auto_cell(lat, w[0])
    return transport_cell(lat, w, cell, forbidden=forbidden,
                          collect_log=collect_log)
