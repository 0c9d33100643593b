"""Workbench pipeline stages: seeding, sampling, scoring, selection, the
optimal-superposition identity, and end-to-end run bookkeeping."""

import warnings

import numpy as np
import pytest

from vqekit.circuits import CompiledCircuit, build_hea
from vqekit.core import (
    SelectionConfig,
    Workbench,
    optimal_superposition,
    sample_basis,
    score_basis,
    select_states,
    substream,
    superposition_fidelity,
    theorem1_report,
    write_summary_csv,
)
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.optim import OptimizerConfig
from vqekit.states import GroundTruth, init_basis_state


# ---------------------------------------------------------------------------
# optimal superpositions


def test_theorem1_property_suite():
    report = theorem1_report(n_qubits=6, trials=50)
    assert report["worst_equality"] < 1e-12
    assert report["worst_collinearity"] < 1e-9
    assert report["worst_monotonicity_violation"] <= 1e-12


def test_optimal_superposition_hand_cases():
    # [TRIVIAL] one state with overlap 0.6 on the target: fidelity 0.36
    best, alpha = optimal_superposition(np.array([[0.6]]))
    assert abs(best - 0.36) < 1e-14
    assert abs(abs(alpha[0]) - 1.0) < 1e-14
    # [DERIVED] two orthonormal states with overlaps 0.6 and 0.8 on a unique
    # target: the sum 0.36 + 0.64 = 1 is reachable
    best, alpha = optimal_superposition(np.array([[0.6], [0.8]]))
    assert abs(best - 1.0) < 1e-12
    assert np.allclose(np.abs(alpha), [0.6, 0.8], atol=1e-12)


def test_superposition_fidelity_requires_orthonormal_states():
    truth = GroundTruth(energy=0.0, subspace=np.eye(4)[:, :1].astype(complex),
                        degeneracy_tolerance=0.0)
    bad = np.ones((4, 2), dtype=complex)
    with pytest.raises(ValueError):
        superposition_fidelity(bad, truth)


def test_superposition_fidelity_degenerate_subspace():
    # [DERIVED] 2-dim ground space; a single member living inside it scores 1
    subspace = np.eye(4)[:, :2].astype(complex)
    truth = GroundTruth(energy=0.0, subspace=subspace, degeneracy_tolerance=0.0)
    member = np.zeros((4, 1), complex)
    member[0, 0] = member[1, 0] = 1 / np.sqrt(2)
    best, _ = superposition_fidelity(member, truth)
    assert abs(best - 1.0) < 1e-12


# ---------------------------------------------------------------------------
# seeding


def test_substream_reproducible_and_independent():
    a1 = substream(0, 3, "enhanced-sample").integers(0, 1 << 30, 8)
    a2 = substream(0, 3, "enhanced-sample").integers(0, 1 << 30, 8)
    b = substream(0, 3, "enhanced-select").integers(0, 1 << 30, 8)
    c = substream(0, 4, "enhanced-sample").integers(0, 1 << 30, 8)
    d = substream(1, 3, "enhanced-sample").integers(0, 1 << 30, 8)
    assert np.array_equal(a1, a2)
    assert not np.array_equal(a1, b)
    assert not np.array_equal(a1, c)
    assert not np.array_equal(a1, d)


# ---------------------------------------------------------------------------
# sampling / scoring / selection


def test_sample_basis_keeps_reference_and_uniqueness():
    sel = SelectionConfig(n_samples=20)
    out = sample_basis(6, 5, sel, substream(0, 0, "enhanced-sample"))
    assert out[0] == 5
    assert len(out) == 20
    assert len(set(out.tolist())) == 20
    assert np.array_equal(out[1:], np.sort(out[1:]))


def test_sample_basis_clamps_to_pool():
    sel = SelectionConfig(n_samples=100)
    with pytest.warns(UserWarning, match="basis states are available"):
        out = sample_basis(4, 0, sel, substream(0, 0, "enhanced-sample"))
    assert len(out) == 16
    assert sorted(out.tolist()) == list(range(16))


def test_sample_basis_respects_pool():
    pool = np.array([3, 5, 6, 9, 10, 12])
    sel = SelectionConfig(n_samples=4)
    out = sample_basis(4, 3, sel, substream(0, 0, "enhanced-sample"), pool=pool)
    assert out[0] == 3
    assert set(out.tolist()) <= set(pool.tolist())


def test_score_basis_matches_per_state_oracle():
    spec = ModelSpec("tfim_1d", {"J": 1.0, "h": 0.7}, {"n": 5})
    h = build_hamiltonian(spec)
    compiled = CompiledCircuit(build_hea(5, 2))
    rng = np.random.default_rng(0)
    theta = rng.uniform(0, 2 * np.pi, compiled.n_params)
    candidates = np.array([0, 3, 7, 12, 21, 30])
    scores = score_basis(compiled, theta, h, candidates, chunk=4)
    for j, idx in enumerate(candidates):
        psi = compiled.run(init_basis_state(5, int(idx)), theta)
        e = float(np.real(np.vdot(psi, h.apply(psi))))
        assert abs(scores[j] - e) < 1e-10


def test_select_states_greedy_picks_lowest():
    candidates = np.array([0, 1, 2, 3, 4, 5])
    scores = np.array([0.0, -3.0, 2.0, -1.0, -2.0, 5.0])
    sel = SelectionConfig(n_selected=3, threshold=1.0, greedy=True)
    out = select_states(candidates, scores, 0, sel, substream(0, 0, "enhanced-select"))
    assert out[0] == 0
    assert sorted(out[1:].tolist()) == [1, 4]


def test_select_states_random_draw_stays_below_cutoff():
    candidates = np.arange(8)
    scores = np.array([0.0, -1.0, -2.0, 3.0, -0.5, 4.0, -1.5, 6.0])
    sel = SelectionConfig(n_selected=3, threshold=0.0)
    out1 = select_states(candidates, scores, 0, sel, substream(0, 9, "enhanced-select"))
    out2 = select_states(candidates, scores, 0, sel, substream(0, 9, "enhanced-select"))
    assert np.array_equal(out1, out2)  # deterministic under the same stream
    assert out1[0] == 0
    assert all(scores[c] < 0.0 for c in out1[1:])


def test_select_states_fallback_warns_and_takes_lowest():
    candidates = np.arange(5)
    scores = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
    sel = SelectionConfig(n_selected=3, threshold=-10.0)
    with pytest.warns(UserWarning, match="falling back"):
        out = select_states(candidates, scores, 0, sel,
                            substream(0, 0, "enhanced-select"))
    assert sorted(out.tolist()) == [0, 1, 2]


def test_select_states_offset_cutoff():
    # [DERIVED] cutoff = e_ref + 0.2 * (max - e_ref) = 0 + 0.2 * 10 = 2
    candidates = np.arange(5)
    scores = np.array([0.0, 1.9, 2.1, 10.0, 1.0])
    sel = SelectionConfig(n_selected=3, threshold_offset=0.2)
    out = select_states(candidates, scores, 0, sel, substream(0, 0, "enhanced-select"))
    assert sorted(out.tolist()) == [0, 1, 4]


# ---------------------------------------------------------------------------
# end-to-end runs on a small model


@pytest.fixture(scope="module")
def small_bench():
    spec = ModelSpec("tfim_1d", {"J": 1.0, "h": 1.0}, {"n": 4})
    return Workbench(spec)


def _small_opt():
    return OptimizerConfig(pretrain_max_iters=1500, joint_iters=150)


def test_small_baseline_run(small_bench):
    rec = small_bench.run_baseline("hea_ring", 3, seed=0, opt=_small_opt())
    assert rec.arm == "baseline"
    # this depth plateaus well short of the ground state (restarts all land
    # on the same energy); the run must still respect the variational floor
    assert 0.5 < rec.fidelity < 1.0
    assert rec.energy >= rec.ground_energy - 1e-9
    assert rec.cost_c_r == rec.n_iterations * rec.n_params
    assert rec.trace[0]["stage"] == "pretrain"


def test_small_enhanced_run(small_bench):
    sel = SelectionConfig(n_samples=12, n_selected=3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # tiny pools often trip the fallback
        rec = small_bench.run_enhanced("hea_ring", 3, seed=0, opt=_small_opt(),
                                       sel=sel)
    assert rec.arm == "enhanced"
    assert rec.energy >= rec.ground_energy - 1e-9
    assert rec.selected_states[0] == 0  # reference first
    assert len(rec.selected_states) == 3
    assert rec.pretrain_iterations is not None
    stages = {e["stage"] for e in rec.trace}
    assert stages == {"pretrain", "joint"}
    # budget convention: 3-layer budget => 2 ansatz layers plus the encoder
    assert rec.cost_c_r == rec.n_iterations * rec.n_params


def test_runs_are_deterministic(small_bench, tmp_path):
    sel = SelectionConfig(n_samples=12, n_selected=3)
    rows = []
    for _ in range(2):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rec = small_bench.run_enhanced("hea_ring", 3, seed=1,
                                           opt=_small_opt(), sel=sel)
        rows.append(rec.summary_row())
    assert rows[0] == rows[1]
    paths = []
    for i in range(2):
        p = tmp_path / f"summary-{i}.csv"
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rec = small_bench.run_enhanced("hea_ring", 3, seed=1,
                                           opt=_small_opt(), sel=sel)
        write_summary_csv(p, [rec])
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_single_member_superposition_degenerates_gracefully(small_bench):
    """m=1 keeps only the reference: the encoder contributes nothing and the
    enhanced arm reduces to continued training of the bare ansatz."""
    sel = SelectionConfig(n_samples=12, n_selected=1)
    rec = small_bench.run_enhanced("hea_ring", 3, seed=0, opt=_small_opt(),
                                   sel=sel)
    assert rec.selected_states == (0,)
    assert rec.energy >= rec.ground_energy - 1e-9
    assert 0.0 <= rec.fidelity <= 1.0 + 1e-12


def test_unknown_arm_rejected(small_bench):
    with pytest.raises(ValueError):
        small_bench.run("sideways", "hea_ring", 3, 0, _small_opt(),
                        SelectionConfig())
