"""Angular-momentum matrices for one integer spin, and their two-spin embeddings.

Conventions used throughout the package:

* the basis is the eigenbasis of the third component, ordered
  ``m = S, S-1, ..., -S``;
* the second component is purely imaginary, ``s2 = i*a2`` with ``a2`` real
  antisymmetric, and only ``a2`` is stored.  Every operator the package
  assembles from these generators involves ``s2`` in even combinations, so
  downstream matrices stay real symmetric;
* ``scale`` records the normalization factor applied to the generators.
  After :func:`unit_casimir_scale` the Casimir ``s1^2 + s2^2 + s3^2`` equals
  the identity, matching the classical convention of unit-length vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SpinOperators:
    """Generator matrices for a single spin ``S``.

    ``s2`` is available as a complex matrix through the property below;
    the stored field is its real antisymmetric part ``a2``.
    """

    S: int
    s1: np.ndarray
    a2: np.ndarray
    s3: np.ndarray
    scale: float = 1.0

    @property
    def dim(self) -> int:
        return 2 * self.S + 1

    @property
    def s2(self) -> np.ndarray:
        return 1j * self.a2

    def casimir(self) -> np.ndarray:
        """s1^2 + s2^2 + s3^2 as a real matrix (s2^2 = -a2 @ a2)."""
        return self.s1 @ self.s1 - self.a2 @ self.a2 + self.s3 @ self.s3


def _check_spin(S) -> int:
    if isinstance(S, bool) or S != int(S):
        raise ValueError(f"spin must be an integer, got {S!r} "
                         "(half-integer spins are not supported)")
    S = int(S)
    if S < 0:
        raise ValueError(f"spin must be non-negative, got {S}")
    return S


def spin_matrices(S) -> SpinOperators:
    """Build the standard ladder representation for integer spin ``S``.

    The raising amplitudes are ``<m+1|s+|m> = sqrt(S(S+1) - m(m+1))``,
    giving ``<m±1|s1|m> = sqrt(S(S+1) - m(m±1)) / 2``.
    """
    S = _check_spin(S)
    m = np.arange(S, -S - 1, -1, dtype=float)
    dim = 2 * S + 1
    splus = np.zeros((dim, dim))
    if dim > 1:
        amp = np.sqrt(S * (S + 1) - m[1:] * (m[1:] + 1))
        splus[np.arange(dim - 1), np.arange(1, dim)] = amp
    sminus = splus.T
    s1 = (splus + sminus) / 2.0
    # s2 = (s+ - s-)/(2i) = i * a2  with  a2 = (s- - s+)/2
    a2 = (sminus - splus) / 2.0
    s3 = np.diag(m)
    return SpinOperators(S=S, s1=s1, a2=a2, s3=s3, scale=1.0)


def unit_casimir_scale(ops: SpinOperators) -> SpinOperators:
    """Rescale the generators so the Casimir becomes exactly the identity.

    Division by sqrt(S(S+1)) maps the spectrum of each component into
    (-1, 1) and makes the quantum normalization match the classical
    unit-sphere convention.  S = 0 has a vanishing Casimir and is rejected.
    """
    if ops.S < 1:
        raise ValueError("unit-Casimir scaling is degenerate for S = 0")
    f = 1.0 / np.sqrt(ops.S * (ops.S + 1))
    return SpinOperators(S=ops.S, s1=ops.s1 * f, a2=ops.a2 * f,
                         s3=ops.s3 * f, scale=ops.scale * f)


@dataclass(frozen=True)
class EmbeddedPair:
    """The six generators on the two-spin product space.

    ``s`` operators act on the first tensor factor (``s_i x 1``), ``t``
    operators on the second (``1 x t_i``); numerically the two spins are
    identical copies.  Fields ``a2s``/``a2t`` store the real parts of the
    imaginary components, as in :class:`SpinOperators`.
    """

    S: int
    s1: np.ndarray
    a2s: np.ndarray
    s3: np.ndarray
    t1: np.ndarray
    a2t: np.ndarray
    t3: np.ndarray
    scale: float

    @property
    def dim(self) -> int:
        return (2 * self.S + 1) ** 2


def embed_pair(ops: SpinOperators) -> EmbeddedPair:
    """Embed single-spin generators on the product space of two equal spins."""
    eye = np.eye(ops.dim)
    return EmbeddedPair(
        S=ops.S,
        s1=np.kron(ops.s1, eye),
        a2s=np.kron(ops.a2, eye),
        s3=np.kron(ops.s3, eye),
        t1=np.kron(eye, ops.s1),
        a2t=np.kron(eye, ops.a2),
        t3=np.kron(eye, ops.s3),
        scale=ops.scale,
    )


def scaled_spin(S) -> SpinOperators:
    """Convenience: ladder construction followed by unit-Casimir scaling."""
    return unit_casimir_scale(spin_matrices(S))
