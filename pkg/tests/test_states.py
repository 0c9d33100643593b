"""Ground-truth oracles, fidelity, and sampled expectations."""

import numpy as np
import pytest

from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.pauli import PauliString, PauliSum, expectation, to_dense_matrix
from vqekit.states import (
    dump_csv,
    exact_ground,
    expectation_sampled,
    fidelity,
    ground_energy_inverse_iteration,
    init_basis_state,
    sector_ground,
)


def small_models():
    return [
        ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 6}),
        ModelSpec("tfim_2d", {"J": -1.0, "h": -1.2}, {"rows": 2, "cols": 3}),
        ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 6}),
        ModelSpec("hubbard", {"t": 1.0, "U": 2.0}, {"sites": 4}),
    ]


def test_init_basis_state():
    psi = init_basis_state(3, 5)
    assert psi[5] == 1.0 and np.linalg.norm(psi) == 1.0


@pytest.mark.parametrize("spec", small_models(), ids=lambda s: s.family)
def test_ground_oracles_cross_check(spec):
    # [DERIVED] two independent solve paths agree on the ground energy
    h = build_hamiltonian(spec)
    dense = exact_ground(h)
    inverse = ground_energy_inverse_iteration(h)
    assert dense.energy == pytest.approx(inverse, abs=1e-9)
    # the subspace really is an eigenspace at that energy
    mat = to_dense_matrix(h)
    resid = mat @ dense.subspace - dense.energy * dense.subspace
    assert np.max(np.abs(resid)) < 1e-8


def test_fidelity_bounds_and_extremes():
    rng = np.random.default_rng(0)
    spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 4})
    truth = exact_ground(build_hamiltonian(spec))
    # in-subspace state -> 1  [TRIVIAL]
    assert fidelity(truth.subspace[:, 0], truth) == pytest.approx(1.0, abs=1e-12)
    # orthogonal state -> 0  [TRIVIAL]
    ortho = rng.normal(size=16) + 1j * rng.normal(size=16)
    ortho -= truth.subspace @ (truth.subspace.conj().T @ ortho)
    ortho /= np.linalg.norm(ortho)
    assert fidelity(ortho, truth) == pytest.approx(0.0, abs=1e-12)
    for _ in range(50):
        psi = rng.normal(size=16) + 1j * rng.normal(size=16)
        psi /= np.linalg.norm(psi)
        assert 0.0 <= fidelity(psi, truth) <= 1.0 + 1e-12


def test_fidelity_of_zero_state_matches_projection():
    # [DERIVED] |0000> overlap with the exact 4-qubit ground subspace
    spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 4})
    truth = exact_ground(build_hamiltonian(spec))
    psi = init_basis_state(4, 0)
    expected = float(np.sum(np.abs(truth.subspace.conj().T @ psi) ** 2))
    assert fidelity(psi, truth) == pytest.approx(expected, abs=1e-12)


def test_sector_ground_embeds_into_full_space():
    spec = ModelSpec("hubbard", {"t": 1.0, "U": 2.0}, {"sites": 3})
    h = build_hamiltonian(spec)
    sector = np.array([3, 5, 6, 9, 10, 12])  # not physical, just a subspace
    truth = sector_ground(h, sector)
    mat = to_dense_matrix(h)[np.ix_(sector, sector)]
    assert truth.energy == pytest.approx(float(np.linalg.eigvalsh(mat)[0]),
                                         abs=1e-12)
    outside = np.setdiff1d(np.arange(1 << 6), sector)
    assert np.all(truth.subspace[outside, :] == 0)


def test_sampled_expectation_zero_variance():
    # |0> with H=Z0 -> exactly +1 regardless of shots  [TRIVIAL]
    h = PauliSum(1, [(1.0, PauliString(1, {0: "Z"}))])
    psi = init_basis_state(1, 0)
    rng = np.random.default_rng(0)
    assert expectation_sampled(psi, h, 100, rng) == pytest.approx(1.0)


def test_sampled_expectation_symmetric_case():
    # |+> with H=Z0 -> 0 within 3 sigma at 1e6 shots  [TRIVIAL]
    h = PauliSum(1, [(1.0, PauliString(1, {0: "Z"}))])
    plus = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2)
    rng = np.random.default_rng(1)
    assert abs(expectation_sampled(plus, h, 10 ** 6, rng)) < 3e-3 * 1.5


def test_sampled_expectation_unbiased_on_model_state():
    # [DERIVED] exact expectation is the reference value
    rng = np.random.default_rng(2)
    spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 4})
    h = build_hamiltonian(spec)
    psi = rng.normal(size=16) + 1j * rng.normal(size=16)
    psi /= np.linalg.norm(psi)
    exact = expectation(psi, h)
    shots = 20000
    draws = [expectation_sampled(psi, h, shots, np.random.default_rng(k))
             for k in range(30)]
    scale = h.coeff_norm() / np.sqrt(shots)
    assert abs(np.mean(draws) - exact) < 5 * scale / np.sqrt(len(draws))


def test_sampled_error_scales_inverse_sqrt_shots():
    # log-log slope of the empirical error vs shots is about -1/2
    rng = np.random.default_rng(3)
    spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 4})
    h = build_hamiltonian(spec)
    psi = rng.normal(size=16) + 1j * rng.normal(size=16)
    psi /= np.linalg.norm(psi)
    exact = expectation(psi, h)
    shot_grid = [10 ** k for k in range(2, 7)]
    errors = []
    for shots in shot_grid:
        reps = [expectation_sampled(psi, h, shots, np.random.default_rng(j))
                for j in range(12)]
        errors.append(np.sqrt(np.mean((np.array(reps) - exact) ** 2)))
    slope = np.polyfit(np.log(shot_grid), np.log(errors), 1)[0]
    assert slope == pytest.approx(-0.5, abs=0.1)


def test_dump_csv_format():
    psi = np.array([1.0, 1j], dtype=complex) / np.sqrt(2)
    lines = dump_csv(psi).strip().splitlines()
    assert lines[0] == "index,bitstring,real,imag,probability"
    assert len(lines) == 3
    assert lines[1].startswith("0,0,")
