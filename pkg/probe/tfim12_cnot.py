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


def f(x):
    return cc.value_and_grad(psi0, h, x)


def fid(x):
    return fidelity(cc.run(psi0, x), gt)


for seed in range(5):
    x0 = np.random.default_rng(seed).uniform(0, 2 * np.pi, 2 * n * p)
    t0 = time.time()
    res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                 options={"maxiter": 2500, "ftol": 1e-18, "gtol": 1e-14})
    print(f"lbfgs seed{seed} nit={res.nit} E={res.fun:.6f} F={fid(res.x):.5f} "
          f"t={time.time()-t0:.0f}s", flush=True)

for lr in (0.05, 0.1):
    for seed in range(3):
        x = np.random.default_rng(seed).uniform(0, 2 * np.pi, 2 * n * p)
        m = np.zeros_like(x); v = np.zeros_like(x)
        b1, b2, eps = 0.9, 0.999, 1e-8
        best_e, best_x = np.inf, x.copy()
        t0 = time.time()
        for it in range(1, 3001):
            e, g = f(x)
            if e < best_e:
                best_e, best_x = e, x.copy()
            m = b1 * m + (1 - b1) * g
            v = b2 * v + (1 - b2) * g * g
            x = x - lr * (m / (1 - b1**it)) / (np.sqrt(v / (1 - b2**it)) + eps)
            if it in (1500, 3000):
                print(f"adam lr={lr} seed{seed} it={it} E={best_e:.6f} "
                      f"F={fid(best_x):.5f} t={time.time()-t0:.0f}s", flush=True)
