"""Superposition encoders: confinement of the output support, constructive
expressivity over the member amplitudes, and gate-cost bounds."""

import numpy as np
import pytest

from vqekit.circuits import count_resources, expand_composites
from vqekit.encoder import (
    BasisSet,
    LEAKAGE_TOL,
    solve_parameters,
    synthesize,
    verify_support,
)


def _random_basis(n, m, rng):
    members = rng.choice(1 << n, size=m, replace=False)
    return BasisSet(n, tuple(int(x) for x in members), int(members[0]))


def _full_target(basis, amps):
    out = np.zeros(1 << basis.n_qubits, complex)
    out[list(basis.members)] = amps
    return out


def test_basis_set_validation():
    with pytest.raises(ValueError):
        BasisSet(2, (0, 1, 1))           # duplicate
    with pytest.raises(ValueError):
        BasisSet(2, (0, 4))              # out of range
    with pytest.raises(ValueError):
        BasisSet(2, (0, 1), reference=2)  # reference not a member
    assert BasisSet(3, (5, 2, 0), reference=2).m == 3


def test_parameter_count_is_two_m_minus_one():
    rng = np.random.default_rng(0)
    for n, m in [(4, 2), (6, 5), (8, 8), (12, 6)]:
        enc = synthesize(_random_basis(n, m, rng))
        assert enc.n_params == 2 * (m - 1)


def test_single_member_prepares_the_reference():
    enc = synthesize(BasisSet(4, (9,), 9))
    assert enc.n_params == 0
    psi = enc.prepare(np.zeros(0))
    assert abs(abs(psi[9]) - 1.0) < 1e-12
    assert np.linalg.norm(np.delete(psi, 9)) < 1e-12


@pytest.mark.parametrize("n", [4, 8, 12])
@pytest.mark.parametrize("m", [2, 4, 6, 8, 12])
def test_support_confinement_grid(n, m):
    if m > 1 << n:
        pytest.skip("more members than basis states")
    rng = np.random.default_rng(1000 * n + m)
    enc = synthesize(_random_basis(n, m, rng))
    ok, worst = verify_support(enc, trials=20, rng=rng)
    assert ok, f"leakage {worst:.3e} at n={n} m={m}"
    assert worst < LEAKAGE_TOL


def test_expressivity_random_targets():
    """solve_parameters reproduces arbitrary member amplitudes to 1 - 1e-8."""
    rng = np.random.default_rng(7)
    for trial in range(100):
        n = int(rng.integers(3, 9))
        m = int(rng.integers(2, min(9, 1 << n) + 1))
        basis = _random_basis(n, m, rng)
        enc = synthesize(basis)
        amps = rng.normal(size=m) + 1j * rng.normal(size=m)
        amps /= np.linalg.norm(amps)
        psi = enc.prepare(solve_parameters(enc, amps))
        f = abs(np.vdot(_full_target(basis, amps), psi)) ** 2
        assert f > 1.0 - 1e-8, f"trial {trial}: fidelity {f}"


def test_solver_input_validation():
    enc = synthesize(BasisSet(3, (0, 5)))
    with pytest.raises(ValueError):
        solve_parameters(enc, np.ones(3))
    with pytest.raises(ValueError):
        solve_parameters(enc, np.zeros(2))


def test_verify_support_rejects_zero_trials():
    enc = synthesize(BasisSet(3, (0, 5)))
    with pytest.raises(ValueError):
        verify_support(enc, 0, np.random.default_rng(0))


def test_reference_instance_cost():
    """[PAPER] the 6-member, 12-qubit instance compiles to at most 82
    elementary gates with exactly 10 free parameters."""
    basis = BasisSet(12, (0, 30, 60, 480, 960, 2049), 0)
    enc = synthesize(basis)
    assert enc.n_params == 10
    res = count_resources(enc.circuit)
    total = res["one_qubit_gates"] + res["two_qubit_gates"]
    assert total <= 82, f"{total} elementary gates"
    ok, worst = verify_support(enc, trials=50, rng=np.random.default_rng(3))
    assert ok, f"leakage {worst:.3e}"


def test_expanded_circuit_matches_composite():
    """Decomposing the multi-controlled rotations preserves the unitary."""
    rng = np.random.default_rng(11)
    basis = _random_basis(6, 5, rng)
    enc = synthesize(basis)
    from vqekit.circuits import CompiledCircuit
    from vqekit.states import init_basis_state

    params = rng.uniform(0, 2 * np.pi, enc.n_params)
    origin = init_basis_state(6, 0)
    a = CompiledCircuit(enc.circuit).run(origin, params)
    b = CompiledCircuit(expand_composites(enc.circuit)).run(origin, params)
    # decomposition may differ by a global phase
    assert abs(abs(np.vdot(a, b)) - 1.0) < 1e-10
