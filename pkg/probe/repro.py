import sys, time
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import exact_ground, fidelity, init_basis_state
from vqekit.circuits import build_hea, CompiledCircuit
from scipy.optimize import minimize as sp_min

n = 12
spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": n})
h = build_hamiltonian(spec)
gt = exact_ground(h)
psi0 = init_basis_state(n, 0)

for p in (12, 14):
    cc = CompiledCircuit(build_hea(n, p, "ring"))
    f = lambda x: cc.value_and_grad(psi0, h, x)
    x0 = np.random.default_rng(0).uniform(0, 2 * np.pi, cc.n_params)
    t0 = time.time()
    res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                 options={"maxiter": 2500, "ftol": 1e-18, "gtol": 1e-14})
    F = fidelity(cc.run(psi0, res.x), gt)
    print(f"p={p} seed0 nit={res.nit} E={res.fun:.6f} F={F:.5f} "
          f"t={time.time()-t0:.0f}s msg={res.message}", flush=True)
