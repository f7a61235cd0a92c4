import numpy as np
import pytest

from esdkit.density import DensityMatrix, PureState
from esdkit.tolerances import DEFAULT_TOLERANCES
from esdkit.entanglement import concurrence, concurrence_pure_d2
from esdkit.states import (
    basis_state,
    bell_phi_plus,
    ghz,
    product_state,
    random_density,
    random_pure,
    random_unitary,
    schmidt_pure,
    schmidt_state,
    w_state,
    x_state,
)


def almost_equal(a, b, tol: float = 1e-12) -> bool:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) < tol


def test_bell_phi_plus():
    bell = bell_phi_plus()
    assert almost_equal(np.linalg.norm(bell.vec), 1.0)
    rho = bell.to_density()
    assert almost_equal(concurrence(rho), 1.0, tol=1e-10)
    assert almost_equal(rho.partial_trace([0]).mat, np.eye(2) / 2)
    assert almost_equal(rho.partial_trace([1]).mat, np.eye(2) / 2)


def test_schmidt_pure():
    assert almost_equal(schmidt_pure(0.5).vec, bell_phi_plus().vec)

    chi = schmidt_pure(0.3, d=3)
    assert chi.dims == (3, 2)
    assert almost_equal(np.linalg.norm(chi.vec), 1.0)
    assert almost_equal(concurrence_pure_d2(chi), 2 * np.sqrt(0.21))

    qubit_side = chi.to_density().partial_trace([1])
    assert almost_equal(qubit_side.eigvals(), [0.3, 0.7])


@pytest.mark.parametrize("p", [0.0, 1.0, -0.2, 1.5])
def test_schmidt_pure_rejects_weight_outside_open_interval(p):
    with pytest.raises(ValueError):
        schmidt_pure(p)


def test_schmidt_state():
    chi = schmidt_state([0.5, 0.3, 0.2])
    assert chi.dims == (3, 3)
    assert almost_equal(np.sort(chi.to_density().partial_trace([0]).eigvals()), [0.2, 0.3, 0.5])
    with pytest.raises(ValueError):
        schmidt_state([0.5, 0.6])


def test_product_and_basis_states():
    plus = np.array([1, 1]) / np.sqrt(2)
    psi = product_state([1, 0], plus)
    assert psi.dims == (2, 2)
    assert almost_equal(psi.vec, [1 / np.sqrt(2), 1 / np.sqrt(2), 0, 0])
    assert almost_equal(concurrence(psi.to_density()), 0.0, tol=1e-10)

    e = basis_state((2, 3), 4)
    assert e.vec[4] == 1 and np.count_nonzero(e.vec) == 1
    with pytest.raises(ValueError):
        basis_state((2, 2), 4)


def test_ghz_and_w():
    g = ghz(3)
    assert almost_equal(np.abs(g.vec[[0, 7]]), [1 / np.sqrt(2)] * 2)
    w = w_state(3)
    assert almost_equal(np.abs(w.vec[[1, 2, 4]]), [1 / np.sqrt(3)] * 3)
    assert almost_equal(np.linalg.norm(w.vec), 1.0)
    with pytest.raises(ValueError):
        ghz(1)


def test_x_state():
    assert almost_equal(x_state([0.25] * 4, [0, 0]).mat, np.eye(4) / 4)
    assert almost_equal(x_state([0.5, 0, 0, 0.5], [0, 0.5]).mat, bell_phi_plus().to_density().mat)

    rng = np.random.default_rng(11)
    for _ in range(20):
        diag = rng.dirichlet(np.ones(4))
        inner = np.sqrt(diag[1] * diag[2]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
        outer = np.sqrt(diag[0] * diag[3]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
        rho = x_state(diag, [inner, outer])
        assert rho.eigvals()[0] >= -1e-9


def test_x_state_rejects_positivity_violation():
    with pytest.raises(ValueError, match="positivity"):
        x_state([0.5, 0, 0, 0.5], [0.1, 0])
    with pytest.raises(ValueError, match="positivity"):
        x_state([0.25] * 4, [0, 0.3])


def test_random_states_are_deterministic():
    a = random_pure((2, 3), seed=42)
    b = random_pure((2, 3), seed=42)
    assert np.array_equal(a.vec, b.vec)
    assert almost_equal(np.linalg.norm(a.vec), 1.0)

    ra = random_density((2, 2), seed=42)
    rb = random_density((2, 2), seed=42)
    assert np.array_equal(ra.mat, rb.mat)
    assert almost_equal(np.trace(ra.mat), 1.0)

    assert np.array_equal(random_unitary(3, seed=1), random_unitary(3, seed=1))


def test_random_density_purity():
    purities = [random_density((2, 2), seed=k).purity() for k in range(100)]
    mean = float(np.mean(purities))
    assert 0.0 < mean <= 1.0
    assert min(purities) >= 0.25 - 1e-12


def test_random_unitary_is_unitary():
    u = random_unitary(4, seed=3)
    assert almost_equal(u @ u.conj().T, np.eye(4), tol=1e-12)


def test_density_matrix_validation():
    with pytest.raises(ValueError, match="Hermitian"):
        DensityMatrix((2,), [[0.5, 0.5], [0.0, 0.5]])
    with pytest.raises(ValueError, match="trace"):
        DensityMatrix((2,), np.eye(2))
    with pytest.raises(ValueError, match="positive"):
        DensityMatrix((2,), [[1.5, 0], [0, -0.5]])
    with pytest.raises(ValueError):
        DensityMatrix((2, 2), np.eye(2) / 2)


def test_pure_state_validation():
    with pytest.raises(ValueError, match="unit norm"):
        PureState((2,), [1.0, 1.0])
    with pytest.raises(ValueError):
        PureState((2, 2), [1.0, 0.0])


def test_custom_tolerances():
    loose = DEFAULT_TOLERANCES.with_overrides(unit_trace=1e-3)
    assert loose.hermitian == DEFAULT_TOLERANCES.hermitian
    rho = DensityMatrix((2,), np.diag([0.5, 0.5005]), tolerances=loose)
    assert rho.tolerances is loose
    with pytest.raises(ValueError, match="trace"):
        DensityMatrix((2,), np.diag([0.5, 0.5005]))
    with pytest.raises(TypeError):
        DEFAULT_TOLERANCES.with_overrides(concurrence_zero=1e-9)
