import sys, time
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import exact_ground, fidelity, init_basis_state
from vqekit.core import build_ansatz
from vqekit.circuits import build_hea, CompiledCircuit
from scipy.optimize import minimize as sp_min


def go(tag, cc, h, gt, n_par, init, seeds=4, maxiter=3000):
    psi0 = init_basis_state(h.n_qubits, 0)
    f = lambda x: cc.value_and_grad(psi0, h, x)
    for seed in range(seeds):
        rng = np.random.default_rng(seed)
        x0 = init(rng, n_par)
        t0 = time.time()
        res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                     options={"maxiter": maxiter, "ftol": 1e-18, "gtol": 1e-14})
        F = fidelity(cc.run(psi0, res.x), gt)
        print(f"{tag} seed={seed} nit={res.nit} E={res.fun:.6f} F={F:.5f} "
              f"t={time.time()-t0:.0f}s", flush=True)


small = lambda rng, k: rng.normal(0.0, 0.1, k)

spec = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 12})
h = build_hamiltonian(spec)
gt = exact_ground(h)
for p in (9, 6):
    circ = build_ansatz(spec, "hva", p)
    go(f"cluster p={p} smallinit", CompiledCircuit(circ), h, gt, circ.n_params, small)

spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 12})
h = build_hamiltonian(spec)
gt = exact_ground(h)
circ = build_hea(12, 12, entangler="ring")
go("tfim p=12 smallinit", CompiledCircuit(circ), h, gt, circ.n_params, small)
