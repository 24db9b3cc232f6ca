"""Membership predicates for the subgroups of SL(n, C) tied to a signature,
and reproducible random generation of test elements.

Sets
----
G   SL(n, C)
G0  SU(p, q): dagger(M) M = I, det 1
A   positive real diagonal, det 1
N   unit upper triangular
AN  upper triangular with positive real diagonal, det 1
Q   dagger-fixed (dagger(M) = M), det 1
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .indefinite import Signature, dagger
from .kernel import DEFAULT_TOL, as_cmatrix, mat_exp


class GroupTag(enum.Enum):
    G = "g"
    G0 = "g0"
    A = "a"
    N = "n"
    AN = "an"
    Q = "q"


def _det_is_one(M: np.ndarray, tol: float) -> bool:
    """Whether det(M) = 1, allowing for the accuracy a determinant can
    actually be computed to: the LU determinant of a matrix with condition
    number kappa carries a relative error of order eps * kappa, so the
    acceptance window widens with conditioning (capped so that clearly
    wrong determinants are still rejected)."""
    try:
        cond = float(np.linalg.cond(M))
    except np.linalg.LinAlgError:
        cond = np.inf
    allowance = tol * float(np.clip(cond, 1.0, 1e6))
    return abs(np.linalg.det(M) - 1.0) <= allowance


def is_member(M, tag: GroupTag, sig: Signature, tol: float = DEFAULT_TOL) -> bool:
    """Tolerance-based membership test for ``tag``.

    Structural zeros (below-diagonal entries for the triangular family) and
    symmetry defects are compared against ``tol * max(1, ||M||_F)``; the
    determinant against a conditioning-aware window around 1.
    """
    M = as_cmatrix(M, square=True)
    n = sig.n
    if M.shape[0] != n:
        raise DimensionMismatch(f"matrix of size {M.shape[0]} does not match n={n}")
    scale = max(1.0, float(np.linalg.norm(M)))
    det_ok = _det_is_one(M, tol)

    if tag is GroupTag.G:
        return det_ok
    if tag is GroupTag.G0:
        defect = np.linalg.norm(dagger(M, sig) @ M - np.eye(n))
        return det_ok and defect <= tol * scale
    if tag is GroupTag.Q:
        return det_ok and np.linalg.norm(dagger(M, sig) - M) <= tol * scale

    strictly_lower_ok = np.linalg.norm(np.tril(M, -1)) <= tol * scale
    diag = np.diagonal(M)
    diag_real = bool(np.all(np.abs(diag.imag) <= tol * (1.0 + np.abs(diag.real))))
    diag_pos = diag_real and bool(np.all(diag.real > tol))

    if tag is GroupTag.N:
        return strictly_lower_ok and bool(np.all(np.abs(diag - 1.0) <= tol))
    if tag is GroupTag.A:
        off = np.linalg.norm(M - np.diag(diag))
        return off <= tol * scale and diag_pos and det_ok
    if tag is GroupTag.AN:
        return strictly_lower_ok and diag_pos and det_ok
    raise ValueError(f"unknown group tag {tag!r}")


@dataclass(frozen=True)
class AdmissibleDiagonal:
    """Exponent vector (lambda_1..lambda_p, mu_1..mu_q).

    Both blocks are non-increasing, min(lambda) > max(mu) strictly, and the
    entries sum to zero, so exp of the corresponding diagonal matrix lands
    in A and is admissible.
    """

    lambdas: tuple[float, ...]
    mus: tuple[float, ...]

    def __post_init__(self):
        lam = np.asarray(self.lambdas, dtype=float)
        mu = np.asarray(self.mus, dtype=float)
        if lam.size < 1 or mu.size < 1:
            raise ValueError("need at least one entry in each block")
        if np.any(np.diff(lam) > 0) or np.any(np.diff(mu) > 0):
            raise ValueError("blocks must be non-increasing")
        if not lam.min() > mu.max():
            raise ValueError("min(lambda) must strictly exceed max(mu)")
        total = float(lam.sum() + mu.sum())
        span = max(1.0, float(np.abs(lam).max()), float(np.abs(mu).max()))
        if abs(total) > 1e-9 * span:
            raise ValueError(f"entries must sum to zero, got {total}")
        object.__setattr__(self, "lambdas", tuple(float(v) for v in lam))
        object.__setattr__(self, "mus", tuple(float(v) for v in mu))

    @property
    def entries(self) -> np.ndarray:
        return np.asarray(self.lambdas + self.mus, dtype=float)

    @property
    def gap(self) -> float:
        return min(self.lambdas) - max(self.mus)

    def matrix(self) -> np.ndarray:
        """diag(lambda, mu) as a complex matrix (an element of the Lie algebra of A)."""
        return np.diag(self.entries).astype(np.complex128)

    def exp_matrix(self) -> np.ndarray:
        """exp of :meth:`matrix`: the corresponding element of A."""
        return np.diag(np.exp(self.entries)).astype(np.complex128)


def _random_g0(sig: Signature, rng: np.random.Generator, spread: float = 1.0) -> np.ndarray:
    n = sig.n
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    X = 0.5 * (Z - dagger(Z, sig))
    # trace of a dagger-antisymmetric matrix is imaginary, so this recentering
    # keeps dagger(X) = -X while making X traceless
    X -= (np.trace(X) / n) * np.eye(n)
    nrm = np.linalg.norm(X)
    if nrm > 0:
        X *= spread / nrm
    return mat_exp(X)


def random_g0(sig: Signature, seed: int, spread: float = 1.0) -> np.ndarray:
    """Random element of SU(p, q): exp of a traceless dagger-antisymmetric X
    with ||X||_F = spread."""
    return _random_g0(sig, np.random.default_rng(seed), spread)


def _random_an(sig: Signature, rng: np.random.Generator, spread: float = 1.0) -> np.ndarray:
    n = sig.n
    diag = np.exp(rng.uniform(-spread, spread, n))
    diag /= np.prod(diag) ** (1.0 / n)
    M = np.diag(diag).astype(np.complex128)
    rows, cols = np.triu_indices(n, 1)
    vals = rng.standard_normal(rows.size) + 1j * rng.standard_normal(rows.size)
    M[rows, cols] = spread * vals / np.sqrt(2.0)
    return M


def random_an(sig: Signature, seed: int, spread: float = 1.0) -> np.ndarray:
    """Random element of AN: log-uniform diagonal renormalized to det 1,
    Gaussian strict upper part scaled by ``spread``.  Below-diagonal zeros
    are exact."""
    return _random_an(sig, np.random.default_rng(seed), spread)


def _random_admissible_diag(
    sig: Signature, rng: np.random.Generator, gap: float = 1e-3, scale: float = 1.0
) -> AdmissibleDiagonal:
    lam = np.sort(rng.normal(0.0, scale, sig.p))[::-1]
    mu = np.sort(rng.normal(0.0, scale, sig.q))[::-1]
    need = gap - (lam.min() - mu.max())
    if need > 0:
        lam += 0.5 * need
        mu -= 0.5 * need
    center = (lam.sum() + mu.sum()) / sig.n
    lam -= center
    mu -= center
    return AdmissibleDiagonal(tuple(lam), tuple(mu))


def random_admissible_diag(sig: Signature, seed: int, gap: float = 1e-3) -> AdmissibleDiagonal:
    """Random admissible exponent vector with min(lambda) - max(mu) >= gap
    and zero sum."""
    if gap <= 0:
        raise ValueError("gap must be positive")
    return _random_admissible_diag(sig, np.random.default_rng(seed), gap)
