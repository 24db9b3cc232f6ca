"""Signature geometry: pairing, dagger, cone trichotomy, cone sampling."""

import numpy as np
import pytest

from supq.errors import DimensionMismatch, ZeroVector
from supq.groups import random_g0
from supq.indefinite import (
    ConeClass,
    Signature,
    classify,
    dagger,
    norm_sq,
    pairing,
    sample_cone,
)

SIG11 = Signature(1, 1)
SIG21 = Signature(2, 1)


# ---------------------------------------------------------------------------
# Signature


@pytest.mark.parametrize("p,q", [(0, 1), (1, 0), (-1, 2)])
def test_signature_rejects_degenerate(p, q):
    with pytest.raises(ValueError):
        Signature(p, q)


def test_signature_j_matrix():
    sig = Signature(2, 3)
    assert sig.n == 5
    np.testing.assert_array_equal(sig.j_diag, [1, 1, -1, -1, -1])
    np.testing.assert_array_equal(sig.J @ sig.J, np.eye(5))


def test_signature_arrays_are_read_only():
    sig = Signature(1, 2)
    with pytest.raises(ValueError):
        sig.j_diag[0] = -1.0
    with pytest.raises(ValueError):
        sig.J[0, 0] = 0.0


# ---------------------------------------------------------------------------
# pairing and norm


def test_pairing_basis_vectors():
    e1 = [1, 0, 0]
    e3 = [0, 0, 1]
    assert pairing(e1, e1, SIG21) == 1.0
    assert pairing(e3, e3, SIG21) == -1.0
    assert pairing(e1, e3, SIG21) == 0.0


def test_pairing_sesquilinearity():
    rng = np.random.default_rng(31)
    for _ in range(200):
        p, q = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        sig = Signature(p, q)
        n = sig.n
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        a = complex(rng.standard_normal(), rng.standard_normal())
        # linear in the first slot
        assert pairing(a * x + z, y, sig) == pytest.approx(
            a * pairing(x, y, sig) + pairing(z, y, sig), rel=1e-12, abs=1e-12
        )
        # conjugate-linear in the second slot
        assert pairing(x, a * y, sig) == pytest.approx(
            np.conj(a) * pairing(x, y, sig), rel=1e-12, abs=1e-12
        )
        # Hermitian symmetry
        assert pairing(y, x, sig) == pytest.approx(np.conj(pairing(x, y, sig)), rel=1e-12)


def test_norm_sq_matches_pairing():
    rng = np.random.default_rng(37)
    for _ in range(100):
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        assert norm_sq(x, SIG21) == pytest.approx(pairing(x, x, SIG21).real, rel=1e-13)


def test_vector_length_checked():
    with pytest.raises(DimensionMismatch):
        pairing([1, 0], [0, 1], SIG21)
    with pytest.raises(DimensionMismatch):
        norm_sq([1, 0, 0, 0], SIG21)


# ---------------------------------------------------------------------------
# classify


def test_classify_trivials():
    assert classify([1, 0], SIG11) is ConeClass.TIMELIKE
    assert classify([0, 1], SIG11) is ConeClass.SPACELIKE
    assert classify([1, 1], SIG11) is ConeClass.NULL
    assert classify([1j, 1], SIG11) is ConeClass.NULL


def test_classify_is_scale_invariant():
    x = np.array([1.0, 1.0 + 1e-12])
    assert classify(x, SIG11) is classify(1e8 * x, SIG11)


def test_classify_rejects_zero():
    with pytest.raises(ZeroVector):
        classify([0, 0], SIG11)


# ---------------------------------------------------------------------------
# dagger


def test_dagger_on_basis():
    A = np.array([[0, 1], [0, 0]], dtype=complex)
    expected = np.array([[0, 0], [-1, 0]], dtype=complex)
    np.testing.assert_array_equal(dagger(A, SIG11), expected)


def test_dagger_is_involution_and_adjoint():
    rng = np.random.default_rng(41)
    for _ in range(200):
        p, q = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        sig = Signature(p, q)
        n = sig.n
        A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        np.testing.assert_allclose(dagger(dagger(A, sig), sig), A, rtol=1e-15, atol=1e-15)
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        assert pairing(A @ x, y, sig) == pytest.approx(
            pairing(x, dagger(A, sig) @ y, sig), rel=1e-11, abs=1e-11
        )


def test_dagger_antihomomorphism():
    rng = np.random.default_rng(43)
    sig = Signature(2, 2)
    A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    B = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    np.testing.assert_allclose(
        dagger(A @ B, sig), dagger(B, sig) @ dagger(A, sig), rtol=1e-12, atol=1e-12
    )


def test_dagger_dimension_check():
    with pytest.raises(DimensionMismatch):
        dagger(np.eye(3), SIG11)


# ---------------------------------------------------------------------------
# cone sampling


@pytest.mark.parametrize("cls", list(ConeClass))
def test_sample_cone_lands_in_requested_class(cls):
    for seed in range(100):
        sig = Signature(1 + seed % 3, 1 + seed % 2)
        x = sample_cone(cls, sig, seed)
        assert classify(x, sig) is cls


def test_sample_cone_null_contract():
    for seed in range(100):
        sig = Signature(2, 2)
        x = sample_cone(ConeClass.NULL, sig, seed)
        assert np.linalg.norm(x) == pytest.approx(1.0, rel=1e-12)
        assert abs(norm_sq(x, sig)) <= 1e-12


def test_sample_cone_deterministic():
    a = sample_cone(ConeClass.TIMELIKE, SIG21, 12345)
    b = sample_cone(ConeClass.TIMELIKE, SIG21, 12345)
    np.testing.assert_array_equal(a, b)


# ---------------------------------------------------------------------------
# invariance under the pseudo-unitary group


def test_pairing_invariant_under_pseudo_unitary():
    rng = np.random.default_rng(47)
    for trial in range(1000):
        p, q = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        sig = Signature(p, q)
        n = sig.n
        g = random_g0(sig, int(rng.integers(2**32)))
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        lhs = pairing(g @ x, g @ y, sig)
        rhs = pairing(x, y, sig)
        scale = float(np.linalg.norm(g @ x) * np.linalg.norm(g @ y))
        assert lhs == pytest.approx(rhs, abs=1e-10 * max(1.0, scale))
