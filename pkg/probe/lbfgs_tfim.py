import sys, time
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import exact_ground, fidelity, init_basis_state
from vqekit.circuits import build_hea, CompiledCircuit
from scipy.optimize import minimize as sp_min

n, p = 12, 12
spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": n})
h = build_hamiltonian(spec)
gt = exact_ground(h)
print("E0", gt.energy, flush=True)

cc = CompiledCircuit(build_hea(n, p, entangler="ring"))
psi0 = init_basis_state(n, 0)


def f(theta):
    return cc.value_and_grad(psi0, h, theta)


for seed in range(5):
    rng = np.random.default_rng(seed)
    x0 = rng.uniform(0, 2 * np.pi, cc.circuit.n_params if hasattr(cc, "circuit") else 2 * n * p)
    t0 = time.time()
    res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                 options={"maxiter": 4000, "maxfun": 10**7, "ftol": 1e-18, "gtol": 1e-14})
    F = fidelity(cc.run(psi0, res.x), gt)
    print(f"seed{seed} nit={res.nit} nfev={res.nfev} E={res.fun:.6f} "
          f"F={F:.5f} t={time.time()-t0:.0f}s msg={res.message}", flush=True)
