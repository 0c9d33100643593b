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

circ = build_hea(n, p, entangler="ring")
cc = CompiledCircuit(circ)
psi0 = init_basis_state(n, 0)


def fid(theta):
    return fidelity(cc.run(psi0, theta), gt)


def f(theta):
    return cc.value_and_grad(psi0, h, theta)


for seed in (0, 1):
    rng = np.random.default_rng(seed)
    x0 = rng.uniform(0, 2 * np.pi, circ.n_params)

    x = x0.copy()
    m = np.zeros_like(x); v = np.zeros_like(x)
    lr, b1, b2, eps = 0.1, 0.9, 0.999, 1e-8
    best_e, best_x = np.inf, x.copy()
    t0 = time.time()
    for it in range(1, 8001):
        e, g = f(x)
        if e < best_e:
            best_e, best_x = e, x.copy()
        m = b1 * m + (1 - b1) * g
        v = b2 * v + (1 - b2) * g * g
        x = x - lr * (m / (1 - b1**it)) / (np.sqrt(v / (1 - b2**it)) + eps)
        if it % 1000 == 0:
            print(f"seed{seed} adam it={it} E={best_e:.6f} F={fid(best_x):.5f} t={time.time()-t0:.0f}s", flush=True)
    print(f"seed{seed} ADAM final E={best_e:.6f} F={fid(best_x):.5f}", flush=True)

    t0 = time.time()
    res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                 options={"maxiter": 3000, "ftol": 1e-16, "gtol": 1e-12})
    print(f"seed{seed} LBFGS nit={res.nit} E={res.fun:.6f} F={fid(res.x):.5f} t={time.time()-t0:.0f}s", flush=True)
