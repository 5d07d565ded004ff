"""The order-8 symmetry group of the two-spin model and its projectors.

For integer spin the classical reflections act on the angular momenta
exactly like pi-rotations, so the faithful quantum group is abelian of
order 8: the three pi-rotations ``C2(k) = exp(-i pi s_k) x exp(-i pi t_k)``
together with the factor swap ``P``.  All eight elements are real
orthogonal involutions and commute with X and Y for every (a, b).

The eight one-dimensional irreducible representations are labeled
``A`` (character +1 under every rotation) or ``Bk`` (character +1 under
``C2(k)`` only), with a subscript ``s``/``a`` for the swap character +1/-1.
Which ``Bk`` the literature attaches to which axis is a convention; the
one above is fixed here and used consistently by the lattice and cluster
reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .spins import spin_matrices

ROTATION_LABELS = ("A", "B1", "B2", "B3")
SWAP_LABELS = ("s", "a")


@dataclass(frozen=True, order=True)
class IrrepLabel:
    rotation_label: str
    swap_label: str

    def __post_init__(self):
        if self.rotation_label not in ROTATION_LABELS:
            raise ValueError(f"unknown rotation label {self.rotation_label!r}")
        if self.swap_label not in SWAP_LABELS:
            raise ValueError(f"unknown swap label {self.swap_label!r}")

    @property
    def name(self) -> str:
        return f"{self.rotation_label}_{self.swap_label}"

    @property
    def rotation_characters(self) -> tuple[int, int, int]:
        """Characters under C2(1), C2(2), C2(3)."""
        if self.rotation_label == "A":
            return (1, 1, 1)
        k = int(self.rotation_label[1])
        return tuple(1 if i == k else -1 for i in (1, 2, 3))

    @property
    def swap_character(self) -> int:
        return 1 if self.swap_label == "s" else -1

    def __str__(self) -> str:
        return self.name


IRREP_LABELS = tuple(IrrepLabel(r, p) for r in ROTATION_LABELS for p in SWAP_LABELS)


def irrep_from_name(name: str) -> IrrepLabel:
    for lab in IRREP_LABELS:
        if lab.name == name:
            return lab
    raise ValueError(f"unknown irrep {name!r}; expected one of "
                     f"{[l.name for l in IRREP_LABELS]}")


def _pi_rotation(generator: np.ndarray) -> np.ndarray:
    """exp(-i pi g) for a spin generator with integer spectrum.

    Built from the spectral decomposition (eigenvalue m -> phase (-1)^m)
    rather than a generic matrix exponential: the result is exactly real
    for integer spin and an involution up to round-off.
    """
    w, v = np.linalg.eigh(generator)
    m = np.rint(w)
    if np.max(np.abs(w - m)) > 1e-9:
        raise ValueError("generator spectrum is not integral; "
                         "pass unscaled spin matrices")
    phases = np.where(m.astype(int) % 2 == 0, 1.0, -1.0)
    rot = (v * phases) @ v.conj().T
    if np.max(np.abs(rot.imag)) > 1e-12:
        raise AssertionError("pi-rotation came out non-real")
    return np.real(rot)


def swap_matrix(n: int) -> np.ndarray:
    """Permutation exchanging the two factors of an n x n tensor product."""
    perm = np.zeros((n * n, n * n))
    idx = np.arange(n * n)
    i, j = divmod(idx, n)
    perm[idx, j * n + i] = 1.0
    return perm


ELEMENT_NAMES = ("E", "C2(1)", "C2(2)", "C2(3)",
                 "P", "P.C2(1)", "P.C2(2)", "P.C2(3)")


@dataclass(frozen=True)
class SymmetryGroup:
    """Eight real orthogonal matrices on the product space, with characters.

    ``elements`` follows :data:`ELEMENT_NAMES`; ``character_table`` has one
    row per irrep in :data:`IRREP_LABELS` order, one column per element.
    """

    S: int
    elements: tuple
    character_table: np.ndarray

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def characters(self, irrep: IrrepLabel) -> np.ndarray:
        return self.character_table[IRREP_LABELS.index(irrep)]


def _character_table() -> np.ndarray:
    rows = []
    for lab in IRREP_LABELS:
        r = lab.rotation_characters
        p = lab.swap_character
        rows.append([1, r[0], r[1], r[2], p, p * r[0], p * r[1], p * r[2]])
    return np.array(rows, dtype=float)


@lru_cache(maxsize=8)
def build_group(S: int) -> SymmetryGroup:
    """Realize the order-8 group on the (2S+1)^2-dimensional product space."""
    ops = spin_matrices(S)  # rotations need the integer (unscaled) spectrum
    singles = [_pi_rotation(ops.s1), _pi_rotation(1j * ops.a2),
               _pi_rotation(ops.s3)]
    rotations = [np.kron(r, r) for r in singles]
    n2 = (2 * S + 1) ** 2
    identity = np.eye(n2)
    perm = swap_matrix(2 * S + 1)
    elements = [identity, *rotations, perm] + [perm @ r for r in rotations]
    return SymmetryGroup(S=S, elements=tuple(elements),
                         character_table=_character_table())


@dataclass(frozen=True)
class Projector:
    irrep: IrrepLabel
    matrix: np.ndarray
    dimension_count: int


def projectors(group: SymmetryGroup) -> tuple[Projector, ...]:
    """Spectral projectors P = (1/8) sum_g chi(g) U(g), one per irrep.

    Traces are the per-irrep state counts; they must come out integral.
    """
    out = []
    for lab in IRREP_LABELS:
        chi = group.characters(lab)
        mat = sum(c * u for c, u in zip(chi, group.elements)) / 8.0
        tr = float(np.trace(mat))
        count = int(round(tr))
        if abs(tr - count) > 1e-8:
            raise AssertionError(f"projector trace for {lab} is not integral: {tr}")
        out.append(Projector(irrep=lab, matrix=mat, dimension_count=count))
    return tuple(out)


def block_basis(projector: Projector) -> np.ndarray:
    """Orthonormal basis of the projector's range, one column per state.

    Uses the eigendecomposition of the (idempotent symmetric) projector;
    eigenvalues cluster at 0 and 1, and the count of near-1 eigenvalues
    must agree with the rounded trace.
    """
    w, v = np.linalg.eigh(projector.matrix)
    keep = w > 0.5
    rank = int(np.count_nonzero(keep))
    if rank != projector.dimension_count:
        raise RuntimeError(
            f"numerical rank {rank} of projector {projector.irrep} disagrees "
            f"with its trace {projector.dimension_count}")
    return v[:, keep]


def irrep_blocks(S: int) -> dict[IrrepLabel, np.ndarray]:
    """Block bases for all eight irreps, keyed by label."""
    return {p.irrep: block_basis(p) for p in projectors(build_group(S))}
