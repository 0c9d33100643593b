import sys, time
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import exact_ground, fidelity, init_basis_state
from vqekit.circuits import build_hea, CompiledCircuit, Circuit, Gate
from scipy.optimize import minimize as sp_min


def hea_cnot(n, p):
    gates = []
    slot = 0
    for _ in range(p):
        for q in range(n):
            gates.append(Gate("RY", (q,), slot)); slot += 1
        for q in range(n):
            gates.append(Gate("RZ", (q,), slot)); slot += 1
        for q in range(n):
            gates.append(Gate("CNOT", (q, (q + 1) % n), None))
    return Circuit(n, gates, slot)


def trial(n, p, variant, seed, maxiter=2000):
    spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": n})
    h = build_hamiltonian(spec)
    gt = exact_ground(h)
    circ = build_hea(n, p, entangler="ring") if variant == "cz" else hea_cnot(n, p)
    cc = CompiledCircuit(circ)
    psi0 = init_basis_state(n, 0)
    rng = np.random.default_rng(seed)
    x0 = rng.uniform(0, 2 * np.pi, circ.n_params)
    res = sp_min(lambda x: cc.value_and_grad(psi0, h, x), x0, jac=True,
                 method="L-BFGS-B",
                 options={"maxiter": maxiter, "ftol": 1e-18, "gtol": 1e-14})
    F = fidelity(cc.run(psi0, res.x), gt)
    return res.nit, res.fun, F, gt.energy


for n, p in ((8, 8), (10, 10)):
    for variant in ("cz", "cnot"):
        for seed in range(4):
            t0 = time.time()
            nit, e, F, e0 = trial(n, p, variant, seed)
            print(f"n={n} p={p} {variant} seed={seed} nit={nit} E={e:.6f} "
                  f"E0={e0:.6f} F={F:.5f} t={time.time()-t0:.0f}s", flush=True)
