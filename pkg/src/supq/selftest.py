"""Property suites behind the ``selftest`` CLI command and the acceptance
tests, plus the random generators they share.

Every suite draws its randomness per trial from ``(seed, suite id, trial
index)``, so results are reproducible and independent of any execution
order or fan-out over workers.  Failures are reported as data in the
returned :class:`SuiteResult`, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .admissible import (
    check_admissible_an,
    check_admissible_q,
    cone_preservation_check,
    leading_minors,
)
from .errors import NotDecomposable, SupqError, WrongInertia
from .groups import GroupTag, _random_admissible_diag, _random_an, _random_g0, is_member
from .indefinite import ConeClass, Signature, _sample_cone, dagger
from .iwasawa import decompose_gauss, decompose_gs, dress, q_log
from .kernel import eig, mat_exp
from .su11 import Sl2Element, Su11ANElement, Su11QElement, su11_an_admissible, su11_decompose, su11_q_admissible

_SIG11 = Signature(1, 1)


@dataclass
class SuiteResult:
    """One property suite's verdict.

    ``worst`` is the suite's tightest observed margin or largest observed
    error, whichever the suite tracks; ``detail`` says which.
    """

    name: str
    passed: bool
    trials: int
    worst: float
    detail: str


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng([int(seed) % 2**63, *key])


# ---------------------------------------------------------------------------
# shared generators


def random_signature(rng: np.random.Generator, n_max: int) -> Signature:
    """Uniform signature with 2 <= n <= n_max and p, q >= 1."""
    n = int(rng.integers(2, n_max + 1))
    p = int(rng.integers(1, n))
    return Signature(p, n - p)


def random_decomposable(sig: Signature, rng: np.random.Generator,
                        gap: float = 1e-3, spread: float = 2.0) -> np.ndarray:
    """exp(admissible diagonal) times a pseudo-unitary element: always
    decomposable, with an admissible triangular factor."""
    d = _random_admissible_diag(sig, rng, gap=gap)
    g0 = _random_g0(sig, rng, spread=rng.uniform(0.1, spread))
    return d.exp_matrix() @ g0


def random_admissible_q(sig: Signature, rng: np.random.Generator,
                        gap: float = 1e-3, spread: float = 1.0,
                        scale: float = 1.0) -> np.ndarray:
    """Admissible dagger-fixed element: a conjugated admissible exp-diagonal."""
    d = _random_admissible_diag(sig, rng, gap=gap, scale=scale)
    g = _random_g0(sig, rng, spread=spread)
    return dagger(g, sig) @ d.exp_matrix() @ g


def random_nonadmissible_q(sig: Signature, rng: np.random.Generator,
                           spread: float = 1.0) -> np.ndarray:
    """Dagger-fixed element with real positive spectrum whose gap condition
    fails strictly: the largest spacelike exponent exceeds the smallest
    timelike one."""
    lam = np.sort(rng.normal(0.0, 1.0, sig.p))[::-1]
    mu = np.sort(rng.normal(0.0, 1.0, sig.q))[::-1]
    mu[0] = lam.min() + rng.uniform(0.1, 1.5)
    mu = np.sort(mu)[::-1]
    d = np.concatenate([lam, mu])
    d -= d.mean()
    g = _random_g0(sig, rng, spread=spread)
    return dagger(g, sig) @ np.diag(np.exp(d)).astype(np.complex128) @ g


def random_admissible_an(sig: Signature, rng: np.random.Generator,
                         gap: float = 1e-3, spread: float = 1.0,
                         scale: float = 1.0) -> np.ndarray:
    """Admissible triangular factor, generated by dressing an admissible
    element of A by a random pseudo-unitary element.

    ``scale`` controls the spread of the diagonal exponents; suites that
    multiply or chain these factors pass a reduced value so that the
    condition number of the product stays inside the range where the
    identities under test are verifiable in double precision.
    """
    d = _random_admissible_diag(sig, rng, gap=gap, scale=scale)
    g = _random_g0(sig, rng, spread=spread)
    return dress(d.exp_matrix(), g, sig).b_prime


def random_sl2_decomposable(rng: np.random.Generator, safety: float = 1e-3) -> Sl2Element:
    """Random SL(2, C) element with |a| > |c| by a relative safety margin."""
    while True:
        a = complex(rng.standard_normal() + 1j * rng.standard_normal())
        c = complex(rng.standard_normal() + 1j * rng.standard_normal())
        if abs(a) ** 2 - abs(c) ** 2 > safety * (abs(a) ** 2 + abs(c) ** 2):
            b = complex(rng.standard_normal() + 1j * rng.standard_normal())
            return Sl2Element(a, b, c, (1.0 + b * c) / a)


def random_su11_q(rng: np.random.Generator, boundary_fraction: float = 0.3) -> Su11QElement:
    """Random dagger-fixed 2x2 element; a fraction of draws sit within
    1e-4 of the admissibility boundary t1 = 1 + |m|."""
    m = complex(0.5 * (rng.standard_normal() + 1j * rng.standard_normal()))
    if rng.uniform() < boundary_fraction:
        delta = 10.0 ** rng.uniform(-8, -4) * rng.choice([-1.0, 1.0])
        t1 = 1.0 + abs(m) + delta
    else:
        t1 = float(np.exp(rng.normal(0.0, 0.6)))
    t2 = (1.0 - abs(m) ** 2) / t1
    return Su11QElement(t1, t2, m)


def random_su11_an(rng: np.random.Generator, boundary_fraction: float = 0.3) -> Su11ANElement:
    """Random triangular 2x2 element; a fraction of draws sit within 1e-4
    of the boundary |n| = |r - 1/r|."""
    r = float(np.exp(rng.normal(0.0, 0.5)))
    base = (r - 1.0 / r) ** 2
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    if rng.uniform() < boundary_fraction and base > 2e-4:
        delta = 10.0 ** rng.uniform(-8, -4) * rng.choice([-1.0, 1.0])
        n = complex(np.sqrt(base - delta) * phase)
    else:
        n = complex(0.7 * (rng.standard_normal() + 1j * rng.standard_normal()))
    return Su11ANElement(r, n)


def random_cell_crossed(rng: np.random.Generator, n_max: int = 4):
    """Element of SL(n, C) outside the identity cell: a 2x2 block with
    |a| < |c| bridging a timelike and a spacelike index, optionally hidden
    inside benign pseudo-unitary and triangular cosets.

    Returns ``(matrix, sig, pivot)`` where ``pivot`` is the 1-based index at
    which the triangular route must detect the wrong inertia.
    """
    n = int(rng.integers(2, n_max + 1))
    p = int(rng.integers(1, n))
    sig = Signature(p, n - p)
    a = complex(0.7 * (rng.standard_normal() + 1j * rng.standard_normal()))
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    c = complex((abs(a) + 0.3 + abs(rng.standard_normal())) * phase)
    b = complex(rng.standard_normal() + 1j * rng.standard_normal())
    d = (1.0 + b * c) / a
    i0 = int(rng.integers(0, p))
    j0 = int(rng.integers(p, n))
    E = np.eye(n, dtype=np.complex128)
    E[i0, i0], E[i0, j0], E[j0, i0], E[j0, j0] = a, b, c, d
    dressed = _random_g0(sig, rng, 0.5) @ E @ _random_an(sig, rng, 0.5)
    return (E if rng.uniform() < 0.5 else dressed), sig, i0 + 1


# ---------------------------------------------------------------------------
# suites


def suite_global_decomposition(n_max: int = 6, trials: int = 1000, seed: int = 42,
                               resid_tol: float = 1e-9, agree_tol: float = 1e-8,
                               corrupt: bool = False) -> SuiteResult:
    """Both decomposition routes succeed on exp(admissible diagonal) times a
    pseudo-unitary element, reconstruct to ``resid_tol`` relative, and agree
    with each other to ``agree_tol`` relative."""
    worst = 0.0
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 1, t)
        sig = random_signature(rng, n_max)
        g = random_decomposable(sig, rng)
        scale = max(1.0, float(np.linalg.norm(g)))
        try:
            p_gauss = decompose_gauss(g, sig)
            p_gs = decompose_gs(g, sig)
        except SupqError as exc:
            failures += 1
            detail = detail or f"trial {t}: unexpected {type(exc).__name__}: {exc}"
            continue
        resid = max(p_gauss.residual, p_gs.residual) / scale
        if corrupt:
            resid += 1.0
        agree = max(
            float(np.linalg.norm(p_gauss.s - p_gs.s)),
            float(np.linalg.norm(p_gauss.b - p_gs.b)),
        ) / scale
        worst = max(worst, resid, agree)
        if resid > resid_tol or agree > agree_tol:
            failures += 1
            detail = detail or f"trial {t}: residual {resid:.3e}, agreement {agree:.3e}"
    return SuiteResult(
        "global_decomposition",
        failures == 0,
        trials,
        worst,
        detail or f"worst relative residual/agreement {worst:.3e}",
    )


def suite_timelike_preservation(n_max: int = 6, s_trials: int = 1000, x_per_s: int = 100,
                                seed: int = 42, tol: float = 1e-9) -> SuiteResult:
    """Admissible dagger-fixed elements map timelike vectors to timelike
    vectors; tracks the smallest relative indefinite norm of the images."""
    worst = np.inf
    failures = 0
    detail = ""
    for t in range(s_trials):
        rng = _rng(seed, 2, t)
        sig = random_signature(rng, n_max)
        s = random_admissible_q(sig, rng)
        p = sig.p
        for _ in range(x_per_s):
            x = _sample_cone(ConeClass.TIMELIKE, sig, rng)
            y = s @ x
            mags = y.real**2 + y.imag**2
            margin = float((np.sum(mags[:p]) - np.sum(mags[p:])) / np.sum(mags))
            worst = min(worst, margin)
            if margin <= tol:
                failures += 1
                detail = detail or f"trial {t}: image margin {margin:.3e}"
    return SuiteResult(
        "timelike_preservation",
        failures == 0,
        s_trials * x_per_s,
        float(worst),
        detail or f"smallest relative image margin {worst:.3e}",
    )


def suite_multiplicativity(n_max: int = 6, trials: int = 1000, seed: int = 42) -> SuiteResult:
    """Products of admissible triangular factors stay admissible."""
    worst = np.inf
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 3, t)
        sig = random_signature(rng, n_max)
        b1 = random_admissible_an(sig, rng)
        b2 = random_admissible_an(sig, rng)
        try:
            report = check_admissible_an(b1 @ b2, sig)
        except SupqError as exc:
            failures += 1
            detail = detail or f"trial {t}: unexpected {type(exc).__name__}: {exc}"
            continue
        worst = min(worst, report.margin)
        if not report.admissible:
            failures += 1
            detail = detail or f"trial {t}: product not admissible ({report.reason})"
    return SuiteResult(
        "multiplicativity",
        failures == 0,
        trials,
        float(worst),
        detail or f"smallest product margin {worst:.3e}",
    )


def suite_cone_characterization(n_max: int = 6, forward: int = 100, converse: int = 100,
                                forward_samples: int = 1000, converse_samples: int = 10000,
                                min_found: int = 95, seed: int = 42) -> SuiteResult:
    """Admissible elements pass the Monte-Carlo cone check (timelike and null
    samples); strict gap violations are caught, with at least ``min_found``
    of the ``converse`` constructed counterexamples detected."""
    forward_failures = 0
    for t in range(forward):
        rng = _rng(seed, 4, t)
        sig = random_signature(rng, n_max)
        s = random_admissible_q(sig, rng)
        if not cone_preservation_check(s, sig, trials=forward_samples,
                                       seed=int(rng.integers(2**32))):
            forward_failures += 1
    found = 0
    for t in range(converse):
        rng = _rng(seed, 5, t)
        sig = random_signature(rng, n_max)
        s = random_nonadmissible_q(sig, rng)
        if not cone_preservation_check(s, sig, trials=converse_samples,
                                       seed=int(rng.integers(2**32))):
            found += 1
    passed = forward_failures == 0 and found >= min_found
    return SuiteResult(
        "cone_characterization",
        passed,
        forward + converse,
        float(found),
        f"{forward_failures} forward failures; violations found in {found}/{converse} "
        f"constructed gap violators (the converse direction is probabilistic)",
    )


def suite_dressing_cocycle(n_max: int = 6, trials: int = 500, seed: int = 42,
                           rel: float = 1e-8) -> SuiteResult:
    """Dressing by a product equals dressing in two steps, for both the
    pseudo-unitary part and the triangular part."""
    worst = 0.0
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 6, t)
        sig = random_signature(rng, n_max)
        b1 = random_admissible_an(sig, rng, spread=0.5, scale=0.5)
        b2 = random_admissible_an(sig, rng, spread=0.5, scale=0.5)
        g = _random_g0(sig, rng, spread=rng.uniform(0.1, 1.0))
        try:
            full = dress(b1 @ b2, g, sig)
            step2 = dress(b2, g, sig)
            step1 = dress(b1, step2.g_prime, sig)
        except SupqError as exc:
            failures += 1
            detail = detail or f"trial {t}: unexpected {type(exc).__name__}: {exc}"
            continue
        err_g = float(np.linalg.norm(full.g_prime - step1.g_prime)) / max(
            1.0, float(np.linalg.norm(full.g_prime))
        )
        err_b = float(np.linalg.norm(full.b_prime - step1.b_prime @ step2.b_prime)) / max(
            1.0, float(np.linalg.norm(full.b_prime))
        )
        worst = max(worst, err_g, err_b)
        if err_g > rel or err_b > rel:
            failures += 1
            detail = detail or f"trial {t}: cocycle errors {err_g:.3e}, {err_b:.3e}"
    return SuiteResult(
        "dressing_cocycle",
        failures == 0,
        trials,
        worst,
        detail or f"largest relative cocycle defect {worst:.3e}",
    )


def suite_rayleigh_monotonicity(n_max: int = 6, trials: int = 500, seed: int = 42,
                                rel_margin: float = 1e-10) -> SuiteResult:
    """Sandwiching an admissible symmetrization by an admissible exp-diagonal
    strictly increases the top eigenvalue."""
    worst = np.inf
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 7, t)
        sig = random_signature(rng, n_max)
        amat = _random_admissible_diag(sig, rng, gap=1e-3).exp_matrix()
        b = random_admissible_an(sig, rng)
        s = dagger(b, sig) @ b
        top_s = float(eig(s).values[0].real)
        top_asa = float(eig(amat @ s @ amat).values[0].real)
        margin = (top_asa - top_s) / top_s
        worst = min(worst, margin)
        if margin <= rel_margin:
            failures += 1
            detail = detail or f"trial {t}: relative increase {margin:.3e}"
    return SuiteResult(
        "rayleigh_monotonicity",
        failures == 0,
        trials,
        float(worst),
        detail or f"smallest relative top-eigenvalue increase {worst:.3e}",
    )


def suite_su11_oracle(trials: int = 10000, seed: int = 42, rel: float = 1e-10,
                      band: float = 1e-8) -> SuiteResult:
    """The general algorithms agree with the 2x2 closed form, and the
    numeric admissibility predicates agree with the exact inequalities
    outside a ``band`` around equality."""
    worst = 0.0
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 8, t)
        el = random_sl2_decomposable(rng)
        k, bo = su11_decompose(el)
        M = el.as_matrix()
        scale = max(1.0, float(np.linalg.norm(M)))
        k_mat, b_mat = k.as_matrix(), bo.as_matrix()
        try:
            for pair in (decompose_gs(M, _SIG11), decompose_gauss(M, _SIG11)):
                err = max(
                    float(np.linalg.norm(pair.s - k_mat)),
                    float(np.linalg.norm(pair.b - b_mat)),
                ) / scale
                worst = max(worst, err)
                if err > rel:
                    failures += 1
                    detail = detail or f"trial {t}: oracle distance {err:.3e}"
        except SupqError as exc:
            failures += 1
            detail = detail or f"trial {t}: unexpected {type(exc).__name__}: {exc}"

    compared = 0
    for t in range(trials):
        rng = _rng(seed, 9, t)
        s = random_su11_q(rng)
        if abs(s.t1 + s.t2 - 2.0) <= band or abs(s.t1 - 1.0) <= band:
            continue
        compared += 1
        if check_admissible_q(s.as_matrix(), _SIG11).admissible != su11_q_admissible(s):
            failures += 1
            detail = detail or f"trial {t}: Q predicate mismatch at {s}"
        b = random_su11_an(rng)
        if abs(b.r - 1.0) <= band or abs(b.r**2 + b.r**-2 - abs(b.n) ** 2 - 2.0) <= band:
            continue
        if check_admissible_an(b.as_matrix(), _SIG11).admissible != su11_an_admissible(b):
            failures += 1
            detail = detail or f"trial {t}: AN predicate mismatch at {b}"
    return SuiteResult(
        "su11_oracle",
        failures == 0,
        trials,
        worst,
        detail
        or f"largest oracle distance {worst:.3e}; {compared} predicate pairs compared "
        f"outside the {band:.0e} band",
    )


def suite_minor_ratios(n_max: int = 6, trials: int = 500, seed: int = 42,
                       rel: float = 1e-9) -> SuiteResult:
    """On successful triangular-route decompositions, a_k^2 equals the k-th
    leading-minor ratio of dagger(g) g, and reweighting those minors by J
    flips their signs exactly on the spacelike indices."""
    worst = 0.0
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 10, t)
        sig = random_signature(rng, n_max)
        g = random_decomposable(sig, rng)
        try:
            pair = decompose_gauss(g, sig)
        except SupqError as exc:
            failures += 1
            detail = detail or f"trial {t}: unexpected {type(exc).__name__}: {exc}"
            continue
        h = dagger(g, sig) @ g
        minors = leading_minors(h)
        signed = leading_minors(sig.j_diag[:, None] * h)
        prev = 1.0 + 0.0j
        for k in range(sig.n):
            ratio = minors[k] / prev
            prev = minors[k]
            err = abs(pair.a[k] ** 2 - ratio) / pair.a[k] ** 2
            worst = max(worst, float(err))
            if err > rel:
                failures += 1
                detail = detail or f"trial {t}: minor ratio error {err:.3e} at k={k + 1}"
            expected_sign = -1.0 if k >= sig.p else 1.0
            if np.sign(signed[k].real) != np.sign(signed[k - 1].real if k else 1.0) * expected_sign:
                failures += 1
                detail = detail or f"trial {t}: J-weighted minor sign wrong at k={k + 1}"
    return SuiteResult(
        "minor_ratios",
        failures == 0,
        trials,
        worst,
        detail or f"largest relative minor-ratio error {worst:.3e}",
    )


def suite_exp_log(n_max: int = 6, trials: int = 500, seed: int = 42,
                  rel: float = 1e-9) -> SuiteResult:
    """exp and the admissible log invert each other on the admissible cone."""
    worst = 0.0
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 11, t)
        sig = random_signature(rng, n_max)
        s = random_admissible_q(sig, rng)
        try:
            X = q_log(s, sig)
            err1 = float(np.linalg.norm(mat_exp(X) - s)) / max(1.0, float(np.linalg.norm(s)))
            d = _random_admissible_diag(sig, rng, gap=1e-3)
            g = _random_g0(sig, rng)
            X2 = dagger(g, sig) @ d.matrix() @ g
            X2 = 0.5 * (X2 + dagger(X2, sig))
            back = q_log(mat_exp(X2), sig)
            err2 = float(np.linalg.norm(back - X2)) / max(1.0, float(np.linalg.norm(X2)))
        except SupqError as exc:
            failures += 1
            detail = detail or f"trial {t}: unexpected {type(exc).__name__}: {exc}"
            continue
        worst = max(worst, err1, err2)
        if err1 > rel or err2 > rel:
            failures += 1
            detail = detail or f"trial {t}: round-trip errors {err1:.3e}, {err2:.3e}"
    return SuiteResult(
        "exp_log_roundtrip",
        failures == 0,
        trials,
        worst,
        detail or f"largest relative round-trip error {worst:.3e}",
    )


def suite_failure_taxonomy(trials: int = 100, seed: int = 42) -> SuiteResult:
    """Elements built outside the identity cell make both routes raise
    (wrong inertia on the triangular route), never return a factorization."""
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _rng(seed, 12, t)
        M, sig, _pivot = random_cell_crossed(rng)
        try:
            decompose_gauss(M, sig)
            failures += 1
            detail = detail or f"trial {t}: triangular route returned a factorization"
        except WrongInertia:
            pass
        except NotDecomposable:
            pass
        try:
            decompose_gs(M, sig)
            failures += 1
            detail = detail or f"trial {t}: orthogonalization route returned a factorization"
        except NotDecomposable:
            pass
    return SuiteResult(
        "failure_taxonomy",
        failures == 0,
        trials,
        float(failures),
        detail or "every out-of-cell element was rejected by both routes",
    )


def run_selftest(n_max: int = 4, trials: int = 200, seed: int = 42,
                 corrupt: bool = False) -> list[SuiteResult]:
    """Run every suite at a size scaled from ``trials``.

    ``corrupt`` is a test hook: it deliberately falsifies the residuals of
    the first suite so downstream reporting of failures can be exercised.
    """
    t = max(1, int(trials))
    small = max(5, t // 10)
    return [
        suite_global_decomposition(n_max, t, seed, corrupt=corrupt),
        suite_timelike_preservation(n_max, s_trials=max(5, t // 5), x_per_s=20, seed=seed),
        suite_multiplicativity(n_max, t, seed),
        suite_cone_characterization(
            n_max,
            forward=small,
            converse=small,
            forward_samples=min(1000, 10 * t),
            converse_samples=min(10000, 100 * t),
            min_found=int(0.95 * small),
            seed=seed,
        ),
        suite_dressing_cocycle(n_max, max(5, t // 2), seed),
        suite_rayleigh_monotonicity(n_max, max(5, t // 2), seed),
        suite_su11_oracle(min(10000, 10 * t), seed),
        suite_minor_ratios(n_max, max(5, t // 2), seed),
        suite_exp_log(n_max, max(5, t // 2), seed),
        suite_failure_taxonomy(min(t, 100), seed),
    ]
