import math

import numpy as np
import pytest

from esdkit import matlin
from esdkit.channels import (
    BathParams,
    QndBath,
    SqueezedBath,
    Superoperator,
    ThermalBath,
    apply_to_all,
    apply_to_subsystem,
    bath_model,
    choi,
    depolarizing,
    free_rotation,
    identity_channel,
    is_entanglement_breaking,
    lindblad_squeezed,
    lindblad_thermal,
    planck_occupation,
    power_profile,
    propagator,
    qnd_v,
    schmidt_filtered_choi,
    squeezed_v_closed,
    thermal_v_closed,
)
from esdkit.entanglement import concurrence, separability_margin, x_state_ppt_margin
from esdkit.states import bell_phi_plus, random_density, schmidt_state


def almost_equal(a, b, tol: float = 1e-12) -> bool:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) < tol


def ket(*amps) -> np.ndarray:
    v = np.asarray(amps, dtype=complex)
    return np.outer(v, v.conj())


# ------------------------------------------------------------
# BathParams
# ------------------------------------------------------------
def test_bath_params_relation():
    p = BathParams.squeezed(gamma=1.0, n_th=0.2, r=0.5)
    assert almost_equal(2 * p.n_mean + 1, math.cosh(1.0) * 1.4)
    assert p.a <= 2 * p.n_mean + 1
    assert BathParams.thermal(1.0, 0.7).n_th == 0.7

    with pytest.raises(ValueError, match=r"2N\+1 = cosh\(2r\)\(2N_th\+1\)"):
        BathParams(gamma=1.0, n_mean=1.0, n_th=0.5, r=0.3)


def test_bath_params_from_mean():
    p = BathParams.from_mean(gamma=1.0, n_mean=0.5, r=0.3)
    assert almost_equal(p.n_th, (2 / math.cosh(0.6) - 1) / 2)
    with pytest.raises(ValueError, match="N_th >= 0"):
        BathParams.from_mean(gamma=1.0, n_mean=0.1, r=1.0)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(gamma=0.0),
        dict(gamma=1.0, n_mean=-0.1, n_th=-0.1),
        dict(gamma=1.0, r=-0.2),
    ],
)
def test_bath_params_rejects_invalid(kwargs):
    with pytest.raises(ValueError):
        BathParams(**kwargs)


def test_planck_occupation():
    assert planck_occupation(1.0, 0.0) == 0.0
    assert almost_equal(planck_occupation(1.0, 1.0), 1 / (math.e - 1))
    p = BathParams.from_temperature(gamma=1.0, omega=2.0, temperature=1.0)
    assert almost_equal(p.n_th, 1 / (math.exp(2.0) - 1))


# ------------------------------------------------------------
# Generators
# ------------------------------------------------------------
def test_thermal_generator_vacuum_fixed_point():
    l = lindblad_thermal(BathParams.thermal(1.0, 0.0))
    assert almost_equal(l.apply(ket(1, 0)), np.zeros((2, 2)))


def test_thermal_generator_preserves_trace():
    for n in (0.0, 0.5, 2.0):
        l = lindblad_thermal(BathParams.thermal(1.3, n))
        assert almost_equal(np.eye(2).reshape(-1) @ l.mat, np.zeros(4))


def test_thermal_generator_matches_rate_equations():
    g, n = 1.0, 1.0
    l = lindblad_thermal(BathParams.thermal(g, n))
    rho = random_density((2,), seed=3).mat
    expected = np.empty((2, 2), dtype=complex)
    expected[1, 1] = -g * (n + 1) * rho[1, 1] + g * n * rho[0, 0]
    expected[0, 0] = -expected[1, 1]
    expected[0, 1] = -0.5 * g * (2 * n + 1) * rho[0, 1]
    expected[1, 0] = -0.5 * g * (2 * n + 1) * rho[1, 0]
    assert almost_equal(l.apply(rho), expected)


def test_squeezed_generator_anomalous_terms():
    p = BathParams.squeezed(1.0, 0.2, 0.5, phi=0.7)
    l = lindblad_squeezed(p)
    # the coherence rho01 feeds rho10 at rate -gamma M
    out = l.apply([[0, 1], [0, 0]])
    assert almost_equal(out[1, 0], -p.gamma * p.m)
    assert almost_equal(out[0, 1], -0.5 * p.gamma * (2 * p.n_mean + 1))


# ------------------------------------------------------------
# Propagators
# ------------------------------------------------------------
def test_propagator_identity_and_semigroup():
    l = lindblad_thermal(BathParams.thermal(1.0, 0.5))
    assert almost_equal(propagator(l, 0.0).mat, np.eye(4))
    lhs = propagator(l, 0.9).mat
    rhs = (propagator(l, 0.7) @ propagator(l, 0.2)).mat
    assert almost_equal(lhs, rhs, tol=1e-11)
    with pytest.raises(ValueError):
        propagator(l, -0.1)


@pytest.mark.parametrize("gamma", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("n", [0.0, 0.5, 1.0, 3.0])
def test_thermal_closed_form_matches_expm(gamma, n):
    params = BathParams.thermal(gamma, n)
    l = lindblad_thermal(params)
    for t in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
        assert almost_equal(thermal_v_closed(params, t).mat, propagator(l, t).mat, tol=1e-10)


def test_thermal_closed_form_limits():
    params = BathParams.thermal(1.0, 0.0)
    assert almost_equal(thermal_v_closed(params, 0.0).mat, np.eye(4))
    v = thermal_v_closed(params, 80.0)
    assert almost_equal(v.apply(ket(0, 1)), ket(1, 0))
    assert almost_equal(v.apply(ket(1, 1) / 2), ket(1, 0))


@pytest.mark.parametrize("n", [0.25, 1.0, 3.0])
def test_thermal_fixed_point_is_gibbs(n):
    params = BathParams.thermal(1.0, n)
    v = thermal_v_closed(params, 50.0 / (2 * n + 1))
    out = v.apply(ket(1, 0))
    assert almost_equal(out[1, 1].real, n / (2 * n + 1), tol=1e-8)


def test_squeezed_closed_form_degenerates_to_thermal():
    for n_th in (0.0, 0.3, 2.0):
        sq = BathParams.squeezed(1.0, n_th, 0.0)
        th = BathParams.thermal(1.0, n_th)
        for t in (0.2, 1.0, 4.0):
            assert almost_equal(squeezed_v_closed(sq, t).mat, thermal_v_closed(th, t).mat)


@pytest.mark.parametrize("phi", [0.0, 0.7])
def test_squeezed_closed_form_matches_expm(phi):
    params = BathParams.squeezed(1.0, 0.2, 0.5, phi=phi)
    assert almost_equal(squeezed_v_closed(params, 0.0).mat, np.eye(4))
    for t in (0.4, 1.0, 3.0):
        expected = propagator(lindblad_squeezed(params), t).mat
        assert almost_equal(squeezed_v_closed(params, t).mat, expected, tol=1e-10)


def test_squeezed_rotation_phases():
    params = BathParams.squeezed(1.0, 0.2, 0.5, omega=2.0)
    bare = BathParams.squeezed(1.0, 0.2, 0.5)
    t = 0.6
    expected = free_rotation(2.0, t) @ squeezed_v_closed(bare, t)
    assert almost_equal(squeezed_v_closed(params, t).mat, expected.mat)
    assert almost_equal(SqueezedBath(params, method="expm").propagator(t).mat, expected.mat, tol=1e-10)


def test_families_are_trace_preserving_and_cp():
    models = [
        ThermalBath(BathParams.thermal(1.0, 0.5)),
        SqueezedBath(BathParams.squeezed(1.0, 0.3, 0.4, phi=1.1)),
        QndBath(0.5, power_profile(1.0, 2.0)),
    ]
    for model in models:
        for t in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
            v = model.propagator(t)
            assert v.trace_preservation_error() <= 1e-11
            assert choi(v).eigvals()[0] >= -1e-9


# ------------------------------------------------------------
# QND
# ------------------------------------------------------------
def test_qnd_v():
    assert almost_equal(qnd_v(0.0, lambda t: 0.0, 1.0).mat, np.eye(4))

    rho = random_density((2,), seed=4).mat
    out = qnd_v(1.5, lambda t: t * t, 1.0).apply(rho)
    assert np.array_equal(np.diag(out), np.diag(rho))
    assert almost_equal(abs(out[0, 1]), math.exp(-1.0) * abs(rho[0, 1]))

    with pytest.raises(ValueError):
        qnd_v(0.0, lambda t: -1.0, 1.0)


# ------------------------------------------------------------
# Choi states
# ------------------------------------------------------------
def test_choi_of_identity_is_bell_state():
    assert almost_equal(choi(identity_channel()).mat, bell_phi_plus().to_density().mat)


def test_choi_of_amplitude_damping():
    params = BathParams.thermal(1.0, 0.0)
    for t in (0.1, 1.0, 5.0):
        c = choi(thermal_v_closed(params, t))
        assert abs(np.trace(c.mat) - 1.0) < 1e-12
        assert almost_equal(concurrence(c), math.exp(-t / 2), tol=1e-9)


def test_choi_of_qnd():
    g = 0.8
    c = choi(qnd_v(0.3, lambda t: g, 1.0)).mat
    assert almost_equal(np.diag(c).real, [0.5, 0, 0, 0.5])
    assert almost_equal(abs(c[0, 3]), 0.5 * math.exp(-g))


def test_schmidt_filtered_choi():
    weights = [0.5, 0.3, 0.2]
    v = depolarizing(3, 0.4)
    direct = apply_to_subsystem(v, schmidt_state(weights).to_density(), 1)
    assert almost_equal(schmidt_filtered_choi(v, weights).mat, direct.mat)


# ------------------------------------------------------------
# Local application
# ------------------------------------------------------------
def test_apply_identity_leaves_state_unchanged():
    rho = random_density((2, 3), seed=5)
    assert almost_equal(apply_to_subsystem(identity_channel(2), rho, 0).mat, rho.mat)
    assert almost_equal(apply_to_subsystem(identity_channel(3), rho, 1).mat, rho.mat)


def test_apply_to_bell_state_gives_choi():
    v = thermal_v_closed(BathParams.thermal(1.0, 1.0), 0.4)
    out = apply_to_subsystem(v, bell_phi_plus().to_density(), 1)
    assert almost_equal(out.mat, choi(v).mat)


def test_sequential_application_equals_product_channel():
    v = squeezed_v_closed(BathParams.squeezed(1.0, 0.3, 0.4, phi=0.5), 0.7)
    rho = random_density((2, 2, 2), seed=6)

    sequential = apply_to_all(v, rho).mat

    # reorder vec(rho) from (i1 i2 i3, j1 j2 j3) to (i1 j1, i2 j2, i3 j3)
    paired = rho.mat.reshape((2,) * 6).transpose(0, 3, 1, 4, 2, 5).reshape(-1)
    joint = (matlin.kron_all(v.mat, v.mat, v.mat) @ paired).reshape((2,) * 6)
    joint = joint.transpose(0, 2, 4, 1, 3, 5).reshape(8, 8)

    assert almost_equal(sequential, joint)


def test_apply_rejects_dimension_mismatch():
    rho = random_density((2, 3), seed=7)
    with pytest.raises(ValueError):
        apply_to_subsystem(identity_channel(2), rho, 1)
    with pytest.raises(ValueError):
        apply_to_subsystem(identity_channel(2), rho, 2)


# ------------------------------------------------------------
# Entanglement breaking
# ------------------------------------------------------------
def test_is_entanglement_breaking():
    assert is_entanglement_breaking(depolarizing(2, 1.0))
    assert not is_entanglement_breaking(identity_channel())
    assert is_entanglement_breaking(thermal_v_closed(BathParams.thermal(1.0, 1.0), 5.0))
    with pytest.raises(ValueError):
        is_entanglement_breaking(identity_channel(3))


def test_superoperator_composition_and_shape():
    v = depolarizing(2, 0.3)
    assert almost_equal((v @ Superoperator.identity(2)).mat, v.mat)
    assert v.is_trace_preserving()
    with pytest.raises(ValueError):
        Superoperator(2, np.eye(3))


# ------------------------------------------------------------
# Bath models
# ------------------------------------------------------------
def test_bath_model_lookup():
    params = BathParams.thermal(1.0, 0.5)
    assert isinstance(bath_model("thermal", params), ThermalBath)
    assert isinstance(bath_model("squeezed", params), SqueezedBath)
    assert isinstance(bath_model("qnd", params, gamma_fn=power_profile()), QndBath)
    with pytest.raises(NotImplementedError):
        bath_model("ohmic", params)
    with pytest.raises(ValueError):
        ThermalBath(BathParams.squeezed(1.0, 0.0, 0.3))


def test_thermal_bath_methods_agree():
    params = BathParams.thermal(2.0, 1.0)
    closed = ThermalBath(params)
    exact = ThermalBath(params, method="expm")
    for t in (0.3, 1.7):
        assert almost_equal(closed.propagator(t).mat, exact.propagator(t).mat, tol=1e-10)


def test_qnd_choi_margin_is_negative_for_finite_decay():
    model = QndBath(0.3, power_profile(1.0, 2.0))
    for t in np.linspace(0.0, 25.0, 26):
        c = model.choi(float(t))
        assert x_state_ppt_margin(c) == -1.0
        assert model.choi_margin(float(t)) == separability_margin(c)

    # e^{-g} underflows to 0 here and the computed Choi state looks separable
    late = model.choi(30.0)
    assert x_state_ppt_margin(late) == 0.0
    assert model.choi_margin(30.0) == -1.0

    assert QndBath(0.0, lambda t: math.inf).choi_margin(1.0) == 0.0
