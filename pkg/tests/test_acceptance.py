"""Acceptance suite: one test per headline claim, each ending in a single
PASS line.  Stochastic claims use medians over 10 seeds; every optimized
energy across the suite is additionally held to the variational floor.

Runtime budgets are stated for a typical desktop core; `_HOST_SCALE`
stretches them by the measured slowdown of the executing machine so the
assertions track algorithmic cost rather than hardware.
"""

import time
import warnings

import numpy as np
import pytest

from vqekit.circuits import CompiledCircuit, build_hea, count_resources
from vqekit.core import (
    SelectionConfig,
    Workbench,
    substream,
    superposition_fidelity,
    write_summary_csv,
)
from vqekit.encoder import BasisSet, solve_parameters, synthesize, verify_support
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.optim import OptimizerConfig
from vqekit.states import (
    GroundTruth,
    exact_ground,
    ground_energy_inverse_iteration,
    init_basis_state,
)


def _host_scale() -> float:
    """Measured slowdown versus a nominal desktop core (typical desktops run
    the reference update in about 1 ms; never scales below 1)."""
    x = np.random.default_rng(0).normal(size=1 << 12) + 0j
    y = np.empty_like(x)
    t0 = time.perf_counter()
    for _ in range(200):
        np.multiply(x, 0.5, out=y)
        y += x
    elapsed = time.perf_counter() - t0
    return max(1.0, elapsed / 1e-3)


_HOST_SCALE = _host_scale()

# records from every stochastic fixture, checked by the variational-floor test
_ALL_RECORDS: list = []


def _passed(name: str, detail: str = "") -> None:
    print(f"\n[PASS] {name}" + (f": {detail}" if detail else ""))


def _fidelities(records):
    return np.array([r.fidelity for r in records])


def _clears(records, threshold=0.99, need=7):
    f = _fidelities(records)
    return int(np.sum(f >= threshold)) >= need


# ---------------------------------------------------------------------------
# deterministic criteria


def test_theorem1_identity():
    """Optimal superposition fidelity equals the summed member fidelities and
    an independent brute-force maximum, with collinear optimal coefficients.

    10^3 random instances at 2-6 qubits; equality to 1e-12, brute force and
    collinearity to 1e-9; under 1 minute.
    """
    t0 = time.time()
    rng = np.random.default_rng(1234)
    worst_eq = worst_bf = worst_col = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        dim = 1 << n
        target = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        target /= np.linalg.norm(target)
        truth = GroundTruth(energy=0.0, subspace=target[:, None],
                            degeneracy_tolerance=0.0)
        m = int(rng.integers(1, min(dim, 8) + 1))
        states, _ = np.linalg.qr(
            rng.normal(size=(dim, m)) + 1j * rng.normal(size=(dim, m)))
        best, alpha = superposition_fidelity(states, truth)
        beta = states.conj().T @ target
        worst_eq = max(worst_eq, abs(best - float(np.sum(np.abs(beta) ** 2))))
        # independent brute force: power iteration on the overlap Gram matrix
        gram = np.outer(beta, beta.conj())
        v = rng.normal(size=m) + 1j * rng.normal(size=m)
        for _ in range(100):
            v = gram @ v
            nv = np.linalg.norm(v)
            if nv < 1e-30:
                break
            v /= nv
        brute = float(np.real(np.vdot(v, gram @ v)))
        worst_bf = max(worst_bf, abs(best - brute))
        nb = np.linalg.norm(beta)
        if nb > 1e-12:
            worst_col = max(worst_col,
                            abs(abs(np.vdot(alpha, beta)) / nb - 1.0))
    elapsed = time.time() - t0
    assert worst_eq < 1e-12, f"equality deviation {worst_eq:.3e}"
    assert worst_bf < 1e-9, f"brute-force deviation {worst_bf:.3e}"
    assert worst_col < 1e-9, f"collinearity deviation {worst_col:.3e}"
    assert elapsed < 60 * _HOST_SCALE, f"{elapsed:.0f}s"
    _passed("theorem-1 identity",
            f"eq {worst_eq:.1e}, brute {worst_bf:.1e}, col {worst_col:.1e}, "
            f"{elapsed:.0f}s")


def _family_circuits():
    tfim6 = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 6})
    cluster6 = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1},
                         {"n": 6})
    hub3 = ModelSpec("hubbard", {"t": 1.0, "U": 4.0},
                     {"sites": 3, "n_up": 2, "n_down": 1})
    from vqekit.core import build_ansatz

    return {
        "hea": (build_hamiltonian(tfim6),
                lambda p: build_ansatz(tfim6, "hea_ring", p)),
        "hva-tfim": (build_hamiltonian(tfim6),
                     lambda p: build_ansatz(tfim6, "hva", p)),
        "hva-cluster": (build_hamiltonian(cluster6),
                        lambda p: build_ansatz(cluster6, "hva", p)),
        "hva-hubbard": (build_hamiltonian(hub3),
                        lambda p: build_ansatz(hub3, "hva", p)),
    }


def test_gradient_correctness():
    """Adjoint gradients match central finite differences (step 1e-6) to
    relative error 1e-5 over 100 random configurations per circuit family,
    in under 2 minutes."""
    t0 = time.time()
    worst = 0.0
    for name, (h, builder) in _family_circuits().items():
        rng = np.random.default_rng(hash(name) % (1 << 32))
        for _ in range(100):
            compiled = CompiledCircuit(builder(int(rng.integers(1, 4))))
            dim = 1 << compiled.n_qubits
            psi0 = rng.normal(size=dim) + 1j * rng.normal(size=dim)
            psi0 /= np.linalg.norm(psi0)
            theta = rng.uniform(0, 2 * np.pi, compiled.n_params)
            _, grad = compiled.value_and_grad(psi0, h, theta)
            eps = 1e-6
            for s in range(compiled.n_params):
                tp, tm = theta.copy(), theta.copy()
                tp[s] += eps
                tm[s] -= eps
                op_, om_ = compiled.run(psi0, tp), compiled.run(psi0, tm)
                ep = float(np.real(np.vdot(op_, h.apply(op_))))
                em = float(np.real(np.vdot(om_, h.apply(om_))))
                fd = (ep - em) / (2 * eps)
                rel = abs(fd - grad[s]) / max(1.0, abs(fd))
                worst = max(worst, rel)
    elapsed = time.time() - t0
    assert worst < 1e-5, f"worst relative error {worst:.3e}"
    assert elapsed < 120 * _HOST_SCALE, f"{elapsed:.0f}s"
    _passed("gradient correctness", f"worst rel {worst:.1e}, {elapsed:.0f}s")


def test_oracle_cross_check():
    """Dense eigensolver and shift-invert power iteration agree on the ground
    energy within 1e-9 for every model family at 10 qubits or fewer."""
    specs = [
        ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 10}),
        ModelSpec("tfim_2d", {"J": 1.0, "h": 1.0}, {"rows": 3, "cols": 3}),
        ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 9}),
        ModelSpec("hubbard", {"t": 1.0, "U": 2.0},
                  {"sites": 4, "n_up": 2, "n_down": 2}),
    ]
    worst = 0.0
    for spec in specs:
        h = build_hamiltonian(spec)
        dense = exact_ground(h).energy
        iterative = ground_energy_inverse_iteration(h)
        worst = max(worst, abs(dense - iterative))
        assert abs(dense - iterative) < 1e-9, (spec.family, dense, iterative)
    _passed("oracle cross-check", f"worst |dE| {worst:.1e}")


def test_encoder_properties():
    """Every encoder in the (m, n) matrix confines its output to the member
    set (leakage < 1e-10 over 1000 random draws) and reproduces 100 random
    amplitude targets with overlap > 1 - 1e-8.  The 6-member 12-qubit
    reference instance costs at most 82 elementary gates."""
    t0 = time.time()
    for n in (4, 8, 12):
        for m in (2, 4, 6, 8, 12):
            rng = np.random.default_rng(1000 * n + m)
            members = rng.choice(1 << n, size=m, replace=False)
            basis = BasisSet(n, tuple(int(x) for x in members), int(members[0]))
            enc = synthesize(basis)
            ok, leak = verify_support(enc, trials=1000, rng=rng)
            assert ok, f"n={n} m={m}: leakage {leak:.3e}"
            full = np.zeros(1 << n, complex)
            for _ in range(100):
                amps = rng.normal(size=m) + 1j * rng.normal(size=m)
                amps /= np.linalg.norm(amps)
                psi = enc.prepare(solve_parameters(enc, amps))
                full[:] = 0.0
                full[list(basis.members)] = amps
                assert abs(np.vdot(full, psi)) ** 2 > 1 - 1e-8, f"n={n} m={m}"
    ref = synthesize(BasisSet(12, (0, 30, 60, 480, 960, 2049), 0))
    assert ref.n_params == 10
    res = count_resources(ref.circuit)
    total = res["one_qubit_gates"] + res["two_qubit_gates"]
    assert total <= 82, f"{total} elementary gates"
    ok, leak = verify_support(ref, trials=1000, rng=np.random.default_rng(3))
    assert ok, f"reference instance leakage {leak:.3e}"
    _passed("encoder properties",
            f"grid clean, reference instance {total} gates, "
            f"{time.time() - t0:.0f}s")


# ---------------------------------------------------------------------------
# stochastic criteria (shared fixtures; 10 seeds per configuration)

SEEDS = 10

# per-family experiment configurations: optimizer and candidate selection are
# experimental knobs (the claims fix thresholds, seeds, and budgets, not the
# classical optimizer), chosen once here and used identically for both arms
_TFIM_OPT = OptimizerConfig(method="adam")
_TFIM_SEL = SelectionConfig(n_samples=2000, n_selected=6)
_CLUSTER_OPT = OptimizerConfig(method="lbfgs", joint_iters=600)
_CLUSTER_SEL = SelectionConfig(n_samples=2000, n_selected=12)
_HUBBARD_OPT = OptimizerConfig(method="lbfgs")
_HUBBARD_SEL = SelectionConfig(n_samples=70, n_selected=4)


def _run_arm(wb, arm, ansatz, depth, sel, opt, seeds=SEEDS):
    records = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for seed in range(seeds):
            records.append(wb.run(arm, ansatz, depth, seed, opt, sel,
                                  keep_trace=False))
    _ALL_RECORDS.extend(records)
    return records


@pytest.fixture(scope="session")
def tfim_wb():
    return Workbench(ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 12}))


@pytest.fixture(scope="session")
def tfim_headline(tfim_wb):
    t0 = time.time()
    runs = {
        (arm, depth): _run_arm(tfim_wb, arm, "hea_ring", depth,
                               _TFIM_SEL, _TFIM_OPT)
        for arm, depth in (("baseline", 12), ("enhanced", 8), ("baseline", 8))
    }
    return runs, time.time() - t0


def test_tfim_headline(tfim_headline):
    """12-qubit transverse-field Ising ring (J=-1, h=-1.2): the 12-layer
    baseline converges, the budget-8 enhanced arm (7 layers + encoder, m=6
    from 2000 candidates) matches it and beats the budget-8 baseline; the
    12-layer circuit uses exactly 144 two-qubit gates; within an hour."""
    runs, elapsed = tfim_headline
    b12, e8, b8 = runs[("baseline", 12)], runs[("enhanced", 8)], runs[("baseline", 8)]
    med = lambda rs: float(np.median(_fidelities(rs)))
    assert b12[0].two_qubit_gates == 144
    assert med(e8) > med(b8), f"enhanced {med(e8):.4f} vs baseline {med(b8):.4f}"
    assert elapsed < 3600 * _HOST_SCALE, f"{elapsed:.0f}s"
    assert _clears(e8), f"enhanced p=8 fidelities {_fidelities(e8).round(4)}"
    assert _clears(b12), f"baseline p=12 fidelities {_fidelities(b12).round(4)}"
    _passed("1D TFIM headline",
            f"median F: base12 {med(b12):.4f}, enh8 {med(e8):.4f}, "
            f"base8 {med(b8):.4f}; 144 2q gates; {elapsed:.0f}s")


@pytest.fixture(scope="session")
def tfim_msweep(tfim_wb):
    runs = {}
    for m in (1, 6):
        sel = SelectionConfig(n_samples=2000, n_selected=m)
        runs[m] = _run_arm(tfim_wb, "enhanced", "hea_ring", 5, sel, _TFIM_OPT)
    return runs


def test_m_sweep(tfim_msweep):
    """On the 5-layer budget, six-way superpositions at least halve the
    median infidelity relative to the single-state input."""
    infid = {m: float(np.median(1.0 - _fidelities(rs)))
             for m, rs in tfim_msweep.items()}
    assert infid[6] <= 0.5 * infid[1], f"m=1: {infid[1]:.4f}, m=6: {infid[6]:.4f}"
    _passed("m-sweep", f"median infidelity m=1 {infid[1]:.4f} -> m=6 {infid[6]:.4f}")


@pytest.fixture(scope="session")
def cluster_runs():
    wb = Workbench(ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1},
                             {"n": 12}))
    t0 = time.time()
    runs = {
        (arm, depth): _run_arm(wb, arm, "hva", depth,
                               _CLUSTER_SEL, _CLUSTER_OPT)
        for arm, depth in (("enhanced", 6), ("baseline", 6), ("baseline", 9))
    }
    return runs, time.time() - t0


def test_cluster_ising(cluster_runs):
    """12-qubit cluster-Ising chain (J=1, h1=h2=0.1): the enhanced arm
    converges at 6 layers where the bare ansatz does not; the bare ansatz
    needs 9; the enhanced arm is cheaper in iterations-times-parameters."""
    runs, elapsed = cluster_runs
    e6, b6, b9 = runs[("enhanced", 6)], runs[("baseline", 6)], runs[("baseline", 9)]
    med = lambda rs: float(np.median(_fidelities(rs)))
    assert med(e6) >= 0.99, f"enhanced p=6 median {med(e6):.4f}"
    assert med(b6) < 0.99, f"baseline p=6 median {med(b6):.4f}"
    assert med(b9) >= 0.99, f"baseline p=9 median {med(b9):.4f}"
    cr_e = float(np.median([r.cost_c_r for r in e6]))
    cr_b = float(np.median([r.cost_c_r for r in b9]))
    assert cr_e < cr_b, f"C_R enhanced {cr_e} vs baseline {cr_b}"
    assert elapsed < 3600 * _HOST_SCALE, f"{elapsed:.0f}s"
    _passed("cluster-Ising",
            f"median F: enh6 {med(e6):.4f}, base6 {med(b6):.4f}, "
            f"base9 {med(b9):.4f}; C_R {cr_e:.0f} < {cr_b:.0f}; {elapsed:.0f}s")


@pytest.fixture(scope="session")
def hubbard_runs():
    t0 = time.time()
    runs = {}
    for U in (2.0, 5.0, 10.0):
        wb = Workbench(ModelSpec("hubbard", {"t": 1.0, "U": U},
                                 {"sites": 4, "n_up": 2, "n_down": 2}))
        runs[(U, "baseline", 9)] = _run_arm(wb, "baseline", "hva", 9,
                                            _HUBBARD_SEL, _HUBBARD_OPT)
        runs[(U, "enhanced", 5)] = _run_arm(wb, "enhanced", "hva", 5,
                                            _HUBBARD_SEL, _HUBBARD_OPT)
        if U != 2.0:
            runs[(U, "enhanced", 9)] = _run_arm(wb, "enhanced", "hva", 9,
                                                _HUBBARD_SEL, _HUBBARD_OPT)
    return runs, time.time() - t0


def test_hubbard(hubbard_runs):
    """4-site half-filled Hubbard chain in the (2,2) sector from |11000011>:
    at U=2 both arms converge (baseline by 9 layers, enhanced by 5); at U=5
    and U=10 the enhanced arm beats the baseline by at least 0.2 median
    fidelity at matched depth and itself reaches 0.95; within 30 minutes."""
    runs, elapsed = hubbard_runs
    med = lambda rs: float(np.median(_fidelities(rs)))
    assert med(runs[(2.0, "enhanced", 5)]) >= 0.99, \
        f"U=2 enhanced p=5: {_fidelities(runs[(2.0, 'enhanced', 5)]).round(4)}"
    details = []
    for U in (5.0, 10.0):
        base = med(runs[(U, "baseline", 9)])
        enh = med(runs[(U, "enhanced", 9)])
        best_enh = max(enh, med(runs[(U, "enhanced", 5)]))
        assert enh - base >= 0.2, f"U={U}: enhanced {enh:.4f} vs baseline {base:.4f}"
        assert best_enh >= 0.95, f"U={U}: best enhanced median {best_enh:.4f}"
        details.append(f"U={U:g}: {base:.3f}->{enh:.3f}")
    assert elapsed < 1800 * _HOST_SCALE, f"{elapsed:.0f}s"
    assert med(runs[(2.0, "baseline", 9)]) >= 0.99, \
        f"U=2 baseline p=9: {_fidelities(runs[(2.0, 'baseline', 9)]).round(4)}"
    _passed("Fermi-Hubbard", "; ".join(details) + f"; {elapsed:.0f}s")


def test_determinism(tfim_wb, tfim_headline, tmp_path):
    """Re-running the headline experiment under the same master seed
    reproduces the summary CSV byte for byte."""
    runs, _ = tfim_headline
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    order = [r for rs in runs.values() for r in rs]
    write_summary_csv(first, order)
    repeat = []
    for arm, depth in (("baseline", 12), ("enhanced", 8), ("baseline", 8)):
        repeat += _run_arm(tfim_wb, arm, "hea_ring", depth,
                           _TFIM_SEL, _TFIM_OPT)
    write_summary_csv(second, repeat)
    assert first.read_bytes() == second.read_bytes()
    _passed("determinism", "headline summary CSV byte-identical on repeat")


def test_variational_floor():
    """No optimized energy anywhere in the suite undercuts the exact ground
    energy by more than 1e-9."""
    assert _ALL_RECORDS, "stochastic fixtures must run before this test"
    worst = min(r.energy - r.ground_energy for r in _ALL_RECORDS)
    assert worst >= -1e-9, f"worst energy-floor margin {worst:.3e}"
    _passed("variational floor",
            f"{len(_ALL_RECORDS)} runs, worst margin {worst:+.2e}")
