import sys, time
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import exact_ground, fidelity, init_basis_state
from vqekit.core import build_ansatz
from vqekit.circuits import CompiledCircuit
from scipy.optimize import minimize as sp_min

spec = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 12})
h = build_hamiltonian(spec)
gt = exact_ground(h)
print("E0", gt.energy, flush=True)
psi0 = init_basis_state(12, 0)

for p in (9, 6):
    circ = build_ansatz(spec, "hva", p)
    cc = CompiledCircuit(circ)
    f = lambda x: cc.value_and_grad(psi0, h, x)
    for seed in range(4):
        x0 = np.random.default_rng(seed).uniform(0, 2 * np.pi, circ.n_params)
        t0 = time.time()
        res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                     options={"maxiter": 3000, "ftol": 1e-18, "gtol": 1e-14})
        F = fidelity(cc.run(psi0, res.x), gt)
        print(f"p={p} seed={seed} nit={res.nit} E={res.fun:.6f} F={F:.5f} "
              f"t={time.time()-t0:.0f}s", flush=True)
