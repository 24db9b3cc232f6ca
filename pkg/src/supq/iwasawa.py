"""Factorization of SL(n, C) elements into SU(p, q) times the triangular
subgroup AN, and the operations built on top of it.

Two independent routes compute the same factors (the factorization is
unique when it exists):

* :func:`decompose_gs` runs modified Gram-Schmidt on the columns against
  the indefinite pairing, demanding a timelike residual on the first p
  columns and a spacelike one afterwards.
* :func:`decompose_gauss` forms h = dagger(g) g, takes the unpivoted
  signed LDL* of J h, and reads the triangular factor off the pivots.
  The pivot sign pattern (+ for the first p, - for the rest) is exactly
  the obstruction; a wrong sign raises :class:`~supq.errors.WrongInertia`.

The Gauss route is the default everywhere a decomposition is consumed
(dressing, admissibility of general elements) because its failure taxonomy
is sharper.  All functions are deterministic in their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .admissible import AdmissibilityReport, check_admissible_an, check_admissible_q
from .errors import NoConvergence, NotAdmissible, NotDecomposable, NotInAN, NotInG, NotInG0, WrongInertia
from .groups import GroupTag, is_member
from .indefinite import Signature, dagger
from .kernel import DEFAULT_TOL, as_cmatrix, eig, mat_exp, signed_ldl, solve_upper_triangular


@dataclass
class DecompPair:
    """A factorization g = s @ b.

    ``s`` is pseudo-unitary, ``b`` upper triangular with positive real
    diagonal ``a`` and unit-triangular part ``n_factor`` (b = diag(a) @
    n_factor).  ``residual`` is ||g - s b||_F.
    """

    s: np.ndarray
    b: np.ndarray
    a: np.ndarray
    n_factor: np.ndarray
    residual: float


@dataclass
class DressResult:
    """Outcome of the dressing action: b g = g_prime b_prime."""

    g_prime: np.ndarray
    b_prime: np.ndarray


def sym(b, sig: Signature, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Symmetrization dagger(b) b of a triangular factor.

    Maps AN into the dagger-fixed set Q, is injective there, and turns the
    dressing action into conjugation.
    """
    b = as_cmatrix(b, square=True)
    if not is_member(b, GroupTag.AN, sig, tol):
        raise NotInAN()
    return dagger(b, sig) @ b


def decompose_gs(g, sig: Signature, tol: float = DEFAULT_TOL) -> DecompPair:
    """Factor g = s b by pseudo-orthonormalizing the columns of g.

    Modified Gram-Schmidt against the indefinite pairing.  Column k is
    reduced against the accepted directions u_1..u_{k-1}; the coefficient
    for u_l is <v, u_l> divided by <u_l, u_l> = +1 (l <= p) or -1 (l > p).
    The residual must be strictly timelike for k <= p and strictly
    spacelike afterwards; its indefinite length becomes the diagonal entry
    b_kk > 0.

    Raises
    ------
    NotInG
        If det(g) is not 1 to tolerance.
    NotDecomposable
        With ``kind="null_boundary"`` when a residual is null to tolerance
        (|norm_sq| <= tol * ||r||_2^2), or ``kind="wrong_cone"`` when it has
        the wrong causal type.  ``index`` is the offending column, 1-based.
    """
    g = as_cmatrix(g, square=True)
    n, p = sig.n, sig.p
    if g.shape[0] != n:
        raise NotInG(f"matrix of size {g.shape[0]} does not match n={n}")
    if not is_member(g, GroupTag.G, sig, tol):
        raise NotInG()
    j = sig.j_diag
    S = np.zeros((n, n), dtype=np.complex128)
    B = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        r = g[:, k].copy()
        for l in range(k):
            u = S[:, l]
            c = np.sum(j * r * u.conj())
            if l >= p:
                c = -c
            r -= c * u
            B[l, k] = c
        mags = r.real**2 + r.imag**2
        ns = float(np.sum(mags[:p]) - np.sum(mags[p:]))
        e2 = float(np.sum(mags))
        if abs(ns) <= tol * e2:
            raise NotDecomposable(
                f"column {k + 1}: residual is null to tolerance (factorization boundary)",
                index=k + 1,
                kind="null_boundary",
            )
        if (ns > 0) != (k < p):
            raise NotDecomposable(
                f"column {k + 1}: residual has the wrong causal type",
                index=k + 1,
                kind="wrong_cone",
            )
        rk = float(np.sqrt(abs(ns)))
        B[k, k] = rk
        S[:, k] = r / rk
    a = np.diagonal(B).real.copy()
    n_factor = B / a[:, None]
    np.fill_diagonal(n_factor, 1.0)
    residual = float(np.linalg.norm(g - S @ B))
    return DecompPair(s=S, b=B, a=a, n_factor=n_factor, residual=residual)


def decompose_gauss(g, sig: Signature, tol: float = DEFAULT_TOL) -> DecompPair:
    """Factor g = s b through the triangular factorization of dagger(g) g.

    With h = dagger(g) g, the matrix J h is Hermitian; its unpivoted signed
    LDL* gives h = dagger(n) a^2 n with n = L* unit upper triangular and
    a_k = sqrt(|d_k|).  Existence demands d_k > 0 for k <= p and d_k < 0
    after, i.e. the running pivot products match the leading principal
    minors of J h in the inertia forced by J.  Then b = diag(a) n, and
    s = g b^{-1} is recovered with a triangular back-substitution (never a
    general inverse) and verified to be pseudo-unitary.

    Raises
    ------
    NotInG
        If det(g) is not 1 to tolerance.
    SingularMinor
        If a pivot of J h vanishes to tolerance (boundary case).
    WrongInertia
        If a pivot has the wrong sign (g lies in another cell).
    """
    g = as_cmatrix(g, square=True)
    n, p = sig.n, sig.p
    if g.shape[0] != n:
        raise NotInG(f"matrix of size {g.shape[0]} does not match n={n}")
    if not is_member(g, GroupTag.G, sig, tol):
        raise NotInG()
    h = dagger(g, sig) @ g
    jh = sig.j_diag[:, None] * h
    L, d = signed_ldl(jh, tol)
    for k in range(n):
        if (d[k] > 0) != (k < p):
            raise WrongInertia(k + 1)
    a = np.sqrt(np.abs(d))
    n_factor = L.conj().T
    b = a[:, None] * n_factor
    b_inv = solve_upper_triangular(b, np.eye(n, dtype=np.complex128), tol)
    s = g @ b_inv
    # A wrong factorization leaves an O(1) pseudo-unitarity defect; an
    # honest one leaves roughly eps * cond(b)^2, so the acceptance window
    # widens with the conditioning of the triangular factor (capped well
    # below O(1)).
    cond_b = float(np.linalg.norm(b)) * float(np.linalg.norm(b_inv))
    eps = float(np.finfo(np.float64).eps)
    unitary_tol = min(max(100.0 * tol, 64.0 * eps * cond_b**2), 1e-2)
    if not is_member(s, GroupTag.G0, sig, unitary_tol):
        raise NotDecomposable(
            "recovered factor failed the pseudo-unitarity check", kind="unitary_check"
        )
    residual = float(np.linalg.norm(g - s @ b))
    return DecompPair(s=s, b=b, a=a, n_factor=n_factor, residual=residual)


def dress(b, g, sig: Signature, tol: float = DEFAULT_TOL) -> DressResult:
    """Right dressing action: factor b g = g_prime b_prime.

    Defined whenever b g is decomposable; for admissible b it always is.

    Raises
    ------
    NotInAN, NotInG0
        If the inputs fail their membership preconditions.
    NotDecomposable
        If b g lies outside the identity cell.
    """
    b = as_cmatrix(b, square=True)
    g = as_cmatrix(g, square=True)
    if not is_member(b, GroupTag.AN, sig, tol):
        raise NotInAN()
    if not is_member(g, GroupTag.G0, sig, tol):
        raise NotInG0()
    pair = decompose_gauss(b @ g, sig, tol)
    return DressResult(g_prime=pair.s, b_prime=pair.b)


def q_log(s, sig: Signature, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Logarithm of an admissible dagger-fixed matrix.

    Computed through the eigendecomposition (admissible implies real
    positive spectrum and a well-conditioned eigenbasis), then projected
    back onto the traceless dagger-fixed subspace to clear rounding.

    Raises
    ------
    NotAdmissible
        If the admissibility check fails; the report is attached.
    NoConvergence
        If exp of the result does not reproduce ``s`` to tolerance.
    """
    s = as_cmatrix(s, square=True)
    report = check_admissible_q(s, sig, tol)
    if not report.admissible:
        raise NotAdmissible(f"q_log needs an admissible element: {report.reason}", report)
    n = sig.n
    result = eig(s)
    V = result.vectors
    logw = np.log(result.values.real)
    X = np.linalg.solve(V.T, (V * logw).T).T
    X = 0.5 * (X + dagger(X, sig))
    X -= (np.trace(X).real / n) * np.eye(n)
    defect = np.linalg.norm(mat_exp(X) - s)
    if defect > 10.0 * tol * max(1.0, float(np.linalg.norm(s))):
        raise NoConvergence(f"log reconstruction defect {defect:.3e} exceeds tolerance")
    return X


def decompose_g_admissible(
    g, sig: Signature, tol: float = DEFAULT_TOL
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Admissible factorization g = s b of a general element.

    Succeeds when g is decomposable *and* the triangular factor is
    admissible.  Returns ``(s, b, singular_spectrum)`` where the singular
    spectrum lists the square roots of the eigenvalues of dagger(g) g in
    descending order (real and positive in the admissible case).

    Raises
    ------
    NotDecomposable
        If g lies outside the identity cell.
    NotAdmissible
        If the triangular factor fails the admissibility check.
    """
    g = as_cmatrix(g, square=True)
    pair = decompose_gauss(g, sig, tol)
    report = check_admissible_an(pair.b, sig, tol)
    if not report.admissible:
        raise NotAdmissible(f"triangular factor is not admissible: {report.reason}", report)
    h_vals = eig(dagger(g, sig) @ g).values
    spectrum = np.sqrt(np.maximum(h_vals.real, 0.0))
    return pair.s, pair.b, spectrum
