"""The commuting integrals of the Manakov top on the two-spin product space.

The pair (X, Y) is quadratic in the generators of two unit-Casimir spins,

    X = s1 t1 + c2 s2 t2 + c3 s3 t3,
    Y = b(1-a) (s2^2 + t2^2) + 2 b(1-a) c3 s2 t2
      + a(1-b) (s3^2 + t3^2) + 2 a(1-b) c2 s3 t3,

with c2 = (a-b-1)/(1-a-b), c3 = (b-a-1)/(1-a-b).  Both matrices are real
symmetric in our convention (s2 t2 = -a2s a2t and s2^2 = -a2^2), and they
commute for every admissible (a, b).

At (a, b) = (2, 1) the pair degenerates to X = s1 t1 + s3 t3 and
Y proportional to -(s2 + t2)^2; the square-root unfolding replaces Y by the
momentum projection Y' = (s2 + t2)/2, which is a global action with
equally spaced eigenvalues.  :func:`build_limiting` assembles that
unfolded pair directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spins import EmbeddedPair, embed_pair, scaled_spin

SINGULAR_GUARD = 1e-9


class ParameterError(ValueError):
    """Model parameters violate a precondition (e.g. 1 - a - b = 0)."""


def xy_coefficients(a: float, b: float) -> tuple[float, float]:
    """Coefficients (c2, c3) of the s2t2 / s3t3 terms of X."""
    den = 1.0 - a - b
    if abs(den) <= SINGULAR_GUARD:
        raise ParameterError(
            f"parameters a={a}, b={b} hit the singular denominator 1-a-b=0")
    return (a - b - 1.0) / den, (b - a - 1.0) / den


@dataclass(frozen=True)
class ModelParams:
    a: float
    b: float
    S: int

    def __post_init__(self):
        xy_coefficients(self.a, self.b)  # singular-denominator guard
        if self.S != int(self.S) or self.S < 1:
            raise ParameterError(f"spin must be a positive integer, got {self.S!r}")

    @property
    def dim(self) -> int:
        return (2 * self.S + 1) ** 2


@dataclass(frozen=True)
class ModelOperators:
    X: np.ndarray
    Y: np.ndarray
    params: ModelParams

    @property
    def dim(self) -> int:
        return self.X.shape[0]


@dataclass(frozen=True)
class LimitingOperators:
    """Unfolded operators of the (a, b) = (2, 1) limit.

    ``yprime`` stores the real antisymmetric part W of the unfolded
    integral; the physical operator is Y' = i W = (s2 + t2)/2.  ``Y`` is
    the folded integral -Y'^2 = W @ W (negative semidefinite).
    """

    X: np.ndarray
    yprime: np.ndarray
    Y: np.ndarray
    S: int

    @property
    def dim(self) -> int:
        return self.X.shape[0]


def pair_operators(S: int) -> EmbeddedPair:
    """Unit-Casimir generators for two equal spins S on the product space."""
    return embed_pair(scaled_spin(S))


def build_xy(params: ModelParams, pair: EmbeddedPair | None = None) -> ModelOperators:
    """Assemble the commuting pair (X, Y) as real symmetric matrices."""
    a, b = params.a, params.b
    c2, c3 = xy_coefficients(a, b)
    p = pair if pair is not None else pair_operators(params.S)

    s1t1 = p.s1 @ p.t1
    s2t2 = -(p.a2s @ p.a2t)          # (i a2s)(i a2t)
    s3t3 = p.s3 @ p.t3
    s2sq = -(p.a2s @ p.a2s)
    t2sq = -(p.a2t @ p.a2t)
    s3sq = p.s3 @ p.s3
    t3sq = p.t3 @ p.t3

    X = s1t1 + c2 * s2t2 + c3 * s3t3
    Y = (b * (1 - a) * (s2sq + t2sq) + 2 * b * (1 - a) * c3 * s2t2
         + a * (1 - b) * (s3sq + t3sq) + 2 * a * (1 - b) * c2 * s3t3)
    return ModelOperators(X=X, Y=Y, params=params)


def build_limiting(S: int, pair: EmbeddedPair | None = None) -> LimitingOperators:
    """Assemble X = s1 t1 + s3 t3 together with the unfolded Y' = (s2+t2)/2.

    Unscaled, i W = (s2 + t2)/2 has eigenvalues (ms + mt)/2, i.e. the
    half-integer ladder -S, -S+1/2, ..., S; unit-Casimir scaling divides
    them by sqrt(S(S+1)).  Y = W @ W reproduces the folded integral, so
    Y'^2 = -Y holds as an operator identity by construction.
    """
    if S != int(S) or S < 1:
        raise ParameterError(f"spin must be a positive integer, got {S!r}")
    p = pair if pair is not None else pair_operators(int(S))
    X = p.s1 @ p.t1 + p.s3 @ p.t3
    W = (p.a2s + p.a2t) / 2.0
    return LimitingOperators(X=X, yprime=W, Y=W @ W, S=int(S))
