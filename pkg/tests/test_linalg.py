import numpy as np
import pytest
from hypothesis import given, strategies as st

from quadmod.linalg import (
    MARGINAL,
    NO,
    YES,
    NotHermitian,
    hermitian_eig,
    operator_norm,
    psd_status,
    random_hermitian,
)


def test_eig_examples():
    w, _ = hermitian_eig(np.eye(3))
    assert np.allclose(w, 1)
    w, _ = hermitian_eig(np.diag([3.0, -4.0]))
    assert np.allclose(w, [-4, 3])
    w, _ = hermitian_eig(np.array([[0, 1], [1, 0]]))
    assert np.allclose(w, [-1, 1])
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0, 1], [0, 0]]))


def test_norm_examples():
    assert operator_norm(np.zeros((3, 3))) == 0
    assert operator_norm(np.diag([3.0, -4.0])) == pytest.approx(4, rel=1e-12)
    assert operator_norm(np.array([[0, 2], [0, 0]])) == pytest.approx(2, rel=1e-12)


@given(st.integers(1, 12), st.integers(0, 2 ** 32 - 1))
def test_eig_reconstruction(d, seed):
    m = random_hermitian(d, np.random.default_rng(seed))
    w, v = hermitian_eig(m)
    assert np.all(np.diff(w) >= 0)
    scale = np.abs(m).max()
    assert np.abs(m - v @ np.diag(w) @ v.conj().T).max() <= 1e-9 * scale
    assert np.abs(v.conj().T @ v - np.eye(d)).max() <= 1e-9
    assert operator_norm(m) == pytest.approx(np.abs(w).max(), rel=1e-8)


def test_psd_status_bands():
    assert psd_status(0.0) == YES
    assert psd_status(-1e-9) == YES
    assert psd_status(-5e-8) == MARGINAL
    assert psd_status(-1e-6) == NO
