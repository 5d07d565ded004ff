"""Joint spectrum of the commuting pair, organized by symmetry type.

Each irrep block is diagonalized through a generic real mixing
``X_block + mu * Y_block``; the joint values are recovered as Rayleigh
quotients and certified by residuals.  Quasi-degenerate joint values form
clusters whose size matches the number of classical fiber components of
the region the cluster sits in (2 in regions I, III, IV and 4 in region
II), and whose irrep content rearranges across the singular strata.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from .classical import EMDiagram, em_diagram
from .model import ModelOperators, ModelParams, build_xy, pair_operators
from .symmetry import IRREP_LABELS, IrrepLabel, irrep_blocks

RESIDUAL_TOL = 1e-8
MAX_REDRAWS = 5
INTERIOR_MARGIN = 0.05  # fraction of region diameter


class DegeneracyError(RuntimeError):
    """Residuals kept failing after the allowed number of mixing redraws."""


@dataclass(frozen=True)
class JointEigenvalue:
    x: float
    y: float
    irrep: IrrepLabel
    residual: float


@dataclass(frozen=True)
class Cluster:
    members: tuple[JointEigenvalue, ...]
    centroid: tuple[float, float]
    spread: float

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def irrep_pattern(self) -> tuple[str, ...]:
        return tuple(sorted(m.irrep.name for m in self.members))


def _block_joint_values(Xb, Yb, mu_scale, rng):
    """Joint (x, y) values of one symmetry block, with residual certificates."""
    nx = np.linalg.norm(Xb, 2)
    ny = np.linalg.norm(Yb, 2)
    last = None
    for _ in range(1 + MAX_REDRAWS):
        mu = rng.uniform(0.3, 0.7) * mu_scale
        _, v = np.linalg.eigh(Xb + mu * Yb)
        xs = np.einsum("ij,ij->j", v, Xb @ v)
        ys = np.einsum("ij,ij->j", v, Yb @ v)
        rx = np.linalg.norm(Xb @ v - v * xs, axis=0)
        ry = np.linalg.norm(Yb @ v - v * ys, axis=0)
        last = (xs, ys, np.maximum(rx, ry))
        if np.all(rx <= RESIDUAL_TOL * nx) and np.all(ry <= RESIDUAL_TOL * ny):
            return last
    raise DegeneracyError(
        f"residuals failed after {MAX_REDRAWS} mixing redraws "
        f"(worst {float(last[2].max()):.3e}); the block appears jointly degenerate")


def joint_spectrum(params: ModelParams, seed: int = 0,
                   operators: ModelOperators | None = None) -> list[JointEigenvalue]:
    """All (2S+1)^2 joint eigenvalues with their symmetry labels."""
    mo = operators if operators is not None else build_xy(
        params, pair_operators(params.S))
    bases = irrep_blocks(params.S)
    mu_scale = np.linalg.norm(mo.X) / np.linalg.norm(mo.Y)
    rng = np.random.default_rng(seed)
    out: list[JointEigenvalue] = []
    for lab in IRREP_LABELS:
        basis = bases[lab]
        Xb = basis.T @ mo.X @ basis
        Yb = basis.T @ mo.Y @ basis
        Xb = (Xb + Xb.T) / 2.0
        Yb = (Yb + Yb.T) / 2.0
        xs, ys, res = _block_joint_values(Xb, Yb, mu_scale, rng)
        out.extend(JointEigenvalue(float(x), float(y), lab, float(r))
                   for x, y, r in zip(xs, ys, res))
    out.sort(key=lambda e: (e.x, e.y, e.irrep.name))
    return out


def irrep_census(spectrum: list[JointEigenvalue]) -> dict[str, int]:
    counts = {lab.name: 0 for lab in IRREP_LABELS}
    for e in spectrum:
        counts[e.irrep.name] += 1
    return counts


def default_cluster_tol(params: ModelParams) -> float:
    """1e-3 times the diagram diameter (its bounding-box diagonal)."""
    from .classical import critical_values
    pts = np.array(list(critical_values(params.a, params.b).as_dict().values()))
    span = pts.max(axis=0) - pts.min(axis=0)
    return 1e-3 * float(np.hypot(*span))


def find_clusters(spectrum: list[JointEigenvalue], tol: float) -> list[Cluster]:
    """Single-linkage grouping of joint values at distance ``tol``."""
    if not spectrum:
        raise ValueError("empty spectrum")
    if tol <= 0:
        raise ValueError(f"cluster tolerance must be positive, got {tol}")
    pts = np.array([(e.x, e.y) for e in spectrum])
    tree = cKDTree(pts)
    pairs = tree.query_pairs(tol, output_type="ndarray")
    n = len(spectrum)
    adj = sparse.coo_matrix(
        (np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(n, n))
    _, labels = connected_components(adj, directed=False)
    clusters = []
    for lbl in np.unique(labels):
        idx = np.nonzero(labels == lbl)[0]
        members = tuple(spectrum[i] for i in idx)
        sub = pts[idx]
        centroid = sub.mean(axis=0)
        spread = 0.0
        if len(idx) > 1:
            d = np.linalg.norm(sub[:, None, :] - sub[None, :, :], axis=-1)
            spread = float(d.max())
        clusters.append(Cluster(members=members,
                                centroid=(float(centroid[0]), float(centroid[1])),
                                spread=spread))
    clusters.sort(key=lambda c: c.centroid)
    return clusters


def interior_clusters(clusters: list[Cluster], diagram: EMDiagram,
                      region: str, margin_fraction: float = INTERIOR_MARGIN):
    """Clusters whose centroid lies well inside one region."""
    margin = diagram.interior_margin(region, margin_fraction)
    picked = []
    for c in clusters:
        x, y = c.centroid
        if diagram.classify(x, y) != region:
            continue
        if diagram.region_margin(region, x, y) >= margin:
            picked.append(c)
    return picked


def region_multiplicity_report(params: ModelParams, tol: float | None = None,
                               seed: int = 0,
                               spectrum: list[JointEigenvalue] | None = None
                               ) -> dict[str, int | None]:
    """Modal cluster size per region interior (None when no cluster qualifies)."""
    if tol is None:
        tol = default_cluster_tol(params)
    spec = spectrum if spectrum is not None else joint_spectrum(params, seed=seed)
    clusters = find_clusters(spec, tol)
    diagram = em_diagram(params.a, params.b)
    report: dict[str, int | None] = {}
    for region in ("I", "II", "III", "IV"):
        inside = interior_clusters(clusters, diagram, region)
        if not inside:
            report[region] = None
            continue
        sizes = np.array([c.size for c in inside])
        vals, counts = np.unique(sizes, return_counts=True)
        report[region] = int(vals[np.argmax(counts)])
    return report


def strata_pairing_report(params: ModelParams, tol: float | None = None,
                          seed: int = 0,
                          spectrum: list[JointEigenvalue] | None = None
                          ) -> dict[str, dict[tuple[str, ...], int]]:
    """Irrep-content patterns of interior clusters, tabulated per region.

    The pattern sets differ between regions (the rearrangement across the
    strata DF/AF/KF/FL), which is what obstructs transporting mixed-irrep
    elementary cells; single-irrep sublattices stay regular throughout.
    """
    if tol is None:
        tol = default_cluster_tol(params)
    spec = spectrum if spectrum is not None else joint_spectrum(params, seed=seed)
    clusters = find_clusters(spec, tol)
    diagram = em_diagram(params.a, params.b)
    report: dict[str, dict[tuple[str, ...], int]] = {}
    for region in ("I", "II", "III", "IV"):
        patterns: dict[tuple[str, ...], int] = {}
        for c in interior_clusters(clusters, diagram, region):
            patterns[c.irrep_pattern] = patterns.get(c.irrep_pattern, 0) + 1
        report[region] = patterns
    return report
