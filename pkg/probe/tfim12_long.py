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
cc = CompiledCircuit(build_hea(n, p, entangler="ring"))
psi0 = init_basis_state(n, 0)
f = lambda x: cc.value_and_grad(psi0, h, x)
fid = lambda x: fidelity(cc.run(psi0, x), gt)

for seed in range(4):
    x0 = np.random.default_rng(seed).uniform(0, 2 * np.pi, 2 * n * p)
    t0 = time.time()
    x = x0
    for chunk in range(4):
        res = sp_min(f, x, jac=True, method="L-BFGS-B",
                     options={"maxiter": 2500, "ftol": 1e-18, "gtol": 1e-14})
        x = res.x
        print(f"seed{seed} cum_nit={(chunk+1)*2500 if res.nit==2500 else chunk*2500+res.nit} "
              f"E={res.fun:.6f} F={fid(x):.5f} t={time.time()-t0:.0f}s", flush=True)
        if res.nit < 2500 or fid(x) > 0.995:
            break
