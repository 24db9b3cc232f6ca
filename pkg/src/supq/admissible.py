"""Admissibility: strict spectral-gap predicates.

A diagonal exponent vector is admissible when every timelike exponent
strictly exceeds every spacelike exponent.  A dagger-fixed matrix is
admissible when its spectrum is real, positive, and splits into p values
carried by timelike eigenvectors and q values carried by spacelike ones,
with min(timelike) > max(spacelike).  A triangular factor b is admissible
exactly when its symmetrization dagger(b) b is.

Also here: the Monte-Carlo cone-preservation check (admissible elements map
the closed timelike cone minus the origin into the open timelike cone), the
pseudo Rayleigh quotient, and leading principal minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotInAN, NotInQ, NotTimelike
from .groups import GroupTag, is_member
from .indefinite import ConeClass, Signature, _sample_cone, classify, dagger, norm_sq, pairing
from .kernel import DEFAULT_TOL, as_cmatrix, as_cvector, eig

#: Floor for the relative "eigendirection is pairing-null" threshold.  A
#: defective eigenvalue splits numerically by about sqrt(eps), leaving each
#: computed eigenvector with an indefinite norm of that same noise order, so
#: verdicts below this floor would be read off rounding error.  Genuinely
#: definite directions of a bounded element keep their indefinite norm
#: above (spectral gap) / ||s||, orders of magnitude larger.
NULL_FLOOR = 1e-7


@dataclass
class AdmissibilityReport:
    """Outcome of an admissibility check.

    ``eigenvalues`` holds the full spectrum (descending).  When the spectrum
    is real positive, ``timelike_values`` / ``spacelike_values`` list the
    eigenvalues attached to timelike / spacelike eigenvectors (repeated
    eigenvalues appear once per attached eigenvector).  ``margin`` is
    min(timelike) - max(spacelike) when both families are present, else 0.
    """

    admissible: bool
    eigenvalues: np.ndarray
    timelike_values: list[float] = field(default_factory=list)
    spacelike_values: list[float] = field(default_factory=list)
    margin: float = 0.0
    reason: str = ""


def is_admissible_diag(d, sig: Signature) -> bool:
    """True when min of the first p entries strictly exceeds max of the rest."""
    v = np.asarray(d, dtype=float)
    if v.ndim != 1 or v.shape[0] != sig.n:
        raise DimensionMismatch(f"expected {sig.n} real entries")
    return bool(v[: sig.p].min() > v[sig.p :].max())


def _cluster_indices(lam: np.ndarray, tol: float) -> list[list[int]]:
    """Group a descending real spectrum into near-degenerate clusters."""
    clusters = [[0]]
    for i in range(1, lam.size):
        if lam[i - 1] - lam[i] <= tol * (1.0 + abs(lam[i])):
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


def check_admissible_q(s, sig: Signature, tol: float = DEFAULT_TOL) -> AdmissibilityReport:
    """Admissibility of a dagger-fixed matrix.

    Eigenvalues count as real when ``|imag| <= tol * (1 + |real|)``.  Within
    a near-degenerate cluster the eigenvectors are re-diagonalized against
    the indefinite pairing (via the small Hermitian Gram matrix), so each
    eigenvalue is attached to pairing-definite directions; a pairing-null
    direction makes the element inadmissible with margin 0.  The null test
    compares the indefinite norm of each direction against
    ``max(tol, NULL_FLOOR)`` times its Euclidean norm, so that the noise
    left by a defective (non-diagonalizable) element is reported as a null
    direction rather than as a spurious spectral gap.

    Raises
    ------
    NotInQ
        If ``s`` is not dagger-fixed with unit determinant to tolerance.
    """
    s = as_cmatrix(s, square=True)
    if not is_member(s, GroupTag.Q, sig, tol):
        raise NotInQ()
    result = eig(s)
    vals = result.values

    if np.any(np.abs(vals.imag) > tol * (1.0 + np.abs(vals.real))):
        return AdmissibilityReport(False, vals, reason="complex eigenvalues")
    lam = vals.real
    if np.any(lam <= tol):
        return AdmissibilityReport(False, vals, reason="nonpositive eigenvalues")

    timelike: list[float] = []
    spacelike: list[float] = []
    for idx in _cluster_indices(lam, tol):
        V = result.vectors[:, idx]
        gram = V.conj().T @ (sig.j_diag[:, None] * V)
        gamma, U = np.linalg.eigh(0.5 * (gram + gram.conj().T))
        W = V @ U
        wnorms = np.sum(W.real**2 + W.imag**2, axis=0)
        value = float(lam[idx].mean())
        for g, w2 in zip(gamma, wnorms):
            if abs(g) <= max(tol, NULL_FLOOR) * w2:
                return AdmissibilityReport(
                    False, vals, timelike, spacelike, 0.0, "null eigenvector"
                )
            (timelike if g > 0 else spacelike).append(value)

    if len(timelike) != sig.p:
        return AdmissibilityReport(
            False,
            vals,
            timelike,
            spacelike,
            0.0,
            f"inertia mismatch: {len(timelike)} timelike directions, expected {sig.p}",
        )
    margin = min(timelike) - max(spacelike)
    admissible = margin > tol
    return AdmissibilityReport(
        admissible,
        vals,
        timelike,
        spacelike,
        float(margin),
        "admissible" if admissible else "gap violated",
    )


def check_admissible_an(b, sig: Signature, tol: float = DEFAULT_TOL) -> AdmissibilityReport:
    """Admissibility of a triangular factor, via its symmetrization dagger(b) b.

    Raises
    ------
    NotInAN
        If ``b`` is not upper triangular with positive real diagonal and
        unit determinant to tolerance.
    """
    b = as_cmatrix(b, square=True)
    if not is_member(b, GroupTag.AN, sig, tol):
        raise NotInAN()
    return check_admissible_q(dagger(b, sig) @ b, sig, tol)


def cone_preservation_check(
    s, sig: Signature, trials: int = 1000, seed: int = 0, tol: float = DEFAULT_TOL
) -> bool:
    """Monte-Carlo necessary condition for admissibility.

    Draws ``trials`` vectors, alternating timelike and null, and returns
    False as soon as some image ``s @ x`` fails to classify as timelike.
    A True verdict is probabilistic evidence, not a proof.
    """
    s = as_cmatrix(s, square=True)
    if s.shape[0] != sig.n:
        raise DimensionMismatch(f"matrix of size {s.shape[0]} does not match n={sig.n}")
    rng = np.random.default_rng(seed)
    for i in range(trials):
        cls = ConeClass.TIMELIKE if i % 2 == 0 else ConeClass.NULL
        x = _sample_cone(cls, sig, rng)
        if classify(s @ x, sig, tol) is not ConeClass.TIMELIKE:
            return False
    return True


def pseudo_rayleigh(s, x, sig: Signature, tol: float = DEFAULT_TOL) -> float:
    """The ratio <s x, x> / <x, x> for a timelike vector x.

    For dagger-fixed s the ratio is real; the imaginary part (of size tol at
    most) is discarded.

    Raises
    ------
    NotTimelike
        If x does not classify as timelike.
    """
    s = as_cmatrix(s, square=True)
    x = as_cvector(x)
    if classify(x, sig, tol) is not ConeClass.TIMELIKE:
        raise NotTimelike("pseudo_rayleigh needs a timelike vector")
    num = pairing(s @ x, x, sig)
    return num.real / norm_sq(x, sig)


def leading_minors(s) -> np.ndarray:
    """All n leading principal minors det(s[:k, :k]), k = 1..n."""
    s = as_cmatrix(s, square=True)
    n = s.shape[0]
    return np.array([np.linalg.det(s[: k + 1, : k + 1]) for k in range(n)])
