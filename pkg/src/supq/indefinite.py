"""Signature-(p, q) geometry on C^n.

The sesquilinear pairing <x, y> = sum_{i<=p} x_i conj(y_i) - sum_{j>p} x_j conj(y_j),
the induced dagger involution A -> J A* J, the timelike / null / spacelike
cone trichotomy, and reproducible sampling from each cone component.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DimensionMismatch, ZeroVector
from .kernel import DEFAULT_TOL, as_cmatrix, as_cvector


@dataclass(frozen=True)
class Signature:
    """The pair (p, q), p >= 1 and q >= 1, fixing the form diag(+1 x p, -1 x q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"signature needs p >= 1 and q >= 1, got ({self.p}, {self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @cached_property
    def j_diag(self) -> np.ndarray:
        """Diagonal of J as a real vector (+1 x p, -1 x q). Read-only."""
        j = np.ones(self.n)
        j[self.p :] = -1.0
        j.setflags(write=False)
        return j

    @cached_property
    def J(self) -> np.ndarray:
        """The matrix J = diag(+1 x p, -1 x q) as complex128. Read-only."""
        J = np.diag(self.j_diag).astype(np.complex128)
        J.setflags(write=False)
        return J


class ConeClass(enum.Enum):
    TIMELIKE = "timelike"
    NULL = "null"
    SPACELIKE = "spacelike"


def _check_vector(x, sig: Signature) -> np.ndarray:
    v = as_cvector(x)
    if v.shape[0] != sig.n:
        raise DimensionMismatch(f"vector of length {v.shape[0]} does not match n={sig.n}")
    return v


def pairing(x, y, sig: Signature) -> complex:
    """The indefinite pairing <x, y>, linear in x and conjugate-linear in y."""
    x = _check_vector(x, sig)
    y = _check_vector(y, sig)
    return complex(np.sum(sig.j_diag * x * np.conj(y)))


def norm_sq(x, sig: Signature) -> float:
    """<x, x> as a real number: ||x[:p]||^2 - ||x[p:]||^2."""
    x = _check_vector(x, sig)
    mags = x.real**2 + x.imag**2
    return float(np.sum(mags[: sig.p]) - np.sum(mags[sig.p :]))


def classify(x, sig: Signature, tol: float = DEFAULT_TOL) -> ConeClass:
    """Cone trichotomy of a nonzero vector.

    The comparison is scale-relative: x is Null when
    ``|norm_sq(x)| <= tol * ||x||_2^2``, so the verdict does not change
    under rescaling of x.
    """
    x = _check_vector(x, sig)
    e2 = float(np.sum(x.real**2 + x.imag**2))
    if e2 == 0.0:
        raise ZeroVector("cannot classify the zero vector")
    ns = norm_sq(x, sig)
    if ns > tol * e2:
        return ConeClass.TIMELIKE
    if ns < -tol * e2:
        return ConeClass.SPACELIKE
    return ConeClass.NULL


def dagger(A, sig: Signature) -> np.ndarray:
    """The involution A -> J A* J, the adjoint for the indefinite pairing.

    Satisfies pairing(A x, y) = pairing(x, dagger(A) y).
    """
    A = as_cmatrix(A, square=True)
    if A.shape[0] != sig.n:
        raise DimensionMismatch(f"matrix of size {A.shape[0]} does not match n={sig.n}")
    j = sig.j_diag
    return (j[:, None] * A.conj().T) * j[None, :]


def _sample_cone(cls: ConeClass, sig: Signature, rng: np.random.Generator) -> np.ndarray:
    """Draw one vector of the requested cone class using ``rng``."""
    p = sig.p
    z = rng.standard_normal(sig.n) + 1j * rng.standard_normal(sig.n)
    mags = z.real**2 + z.imag**2
    pos = float(np.sum(mags[:p]))
    neg = float(np.sum(mags[p:]))
    if cls is ConeClass.NULL:
        # timelike part + spacelike part rescaled to exact cancellation
        z[p:] *= np.sqrt(pos / neg)
        return z / np.linalg.norm(z)
    margin = rng.uniform(0.1, 0.6) * (pos + neg)
    if cls is ConeClass.TIMELIKE:
        z[:p] *= np.sqrt((margin + neg) / pos)
    else:
        z[p:] *= np.sqrt((margin + pos) / neg)
    return z


def sample_cone(cls: ConeClass, sig: Signature, rng_seed: int) -> np.ndarray:
    """Reproducibly sample one vector of cone class ``cls``.

    Null vectors are returned with unit Euclidean norm and satisfy
    ``|norm_sq(x)| <= 1e-12``; timelike and spacelike samples sit well away
    from the cone boundary.
    """
    return _sample_cone(cls, sig, np.random.default_rng(rng_seed))
