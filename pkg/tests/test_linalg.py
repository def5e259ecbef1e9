import numpy as np
import pytest

from rankrelax import compose, svd


def test_identity_spectrum():
    f = svd(np.eye(2))
    assert np.allclose(f.spectrum, [1.0, 1.0])


def test_diagonal_spectrum_and_factors():
    f = svd(np.diag([3.0, 1.0]))
    assert np.allclose(f.spectrum, [3.0, 1.0])
    # factors are axis-aligned up to sign
    assert np.allclose(np.abs(f.u), np.eye(2), atol=1e-12)
    assert np.allclose(np.abs(f.v), np.eye(2), atol=1e-12)


def test_reconstruction_random():
    rng = np.random.default_rng(0)
    x = rng.standard_normal((3, 5))
    f = svd(x)
    err = np.linalg.norm(compose(f.u, f.spectrum, f.v) - x)
    assert err <= 1e-8 * (1.0 + f.spectrum[0])


def test_orthonormal_factors():
    rng = np.random.default_rng(1)
    x = rng.standard_normal((4, 6))
    f = svd(x)
    assert np.allclose(f.u.T @ f.u, np.eye(4), atol=1e-10)
    assert np.allclose(f.v.T @ f.v, np.eye(4), atol=1e-10)
    assert np.all(np.diff(f.spectrum) <= 0)
    assert np.all(f.spectrum >= 0)


def test_compose_diagonal_cases():
    eye = np.eye(2)
    assert np.allclose(compose(eye, np.array([2.0, 1.0]), eye), np.diag([2.0, 1.0]))
    assert np.allclose(compose(eye, np.zeros(2), eye), np.zeros((2, 2)))


def test_compose_svd_roundtrip_spectrum():
    rng = np.random.default_rng(2)
    q1, _ = np.linalg.qr(rng.standard_normal((5, 3)))
    q2, _ = np.linalg.qr(rng.standard_normal((4, 3)))
    s = np.array([2.5, 1.0, 0.3])
    f = svd(compose(q1, s, q2))
    assert np.allclose(f.spectrum[:3], s, atol=1e-10)
    assert f.spectrum[3] <= 1e-10


def test_frobenius_matches_spectrum():
    rng = np.random.default_rng(3)
    x = rng.standard_normal((6, 4))
    f = svd(x)
    lhs = np.sum(x**2)
    rhs = np.sum(f.spectrum**2)
    assert abs(lhs - rhs) <= 1e-8 * lhs


def test_svd_rejects_nonfinite():
    bad = np.array([[1.0, np.nan], [0.0, 1.0]])
    with pytest.raises(ValueError):
        svd(bad)


def test_compose_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        compose(np.eye(2), np.array([1.0, 2.0, 3.0]), np.eye(2))
