import sys, time
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import exact_ground, fidelity, init_basis_state
from vqekit.circuits import Circuit, Gate, build_hea, CompiledCircuit
from scipy.optimize import minimize as sp_min

n, p = 12, 12
spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": n})
h = build_hamiltonian(spec)
gt = exact_ground(h)
psi0 = init_basis_state(n, 0)


def hea_brick(n, p):
    gates, slot = [], 0
    for _ in range(p):
        for q in range(n):
            gates.append(Gate("RY", (q,), slot)); slot += 1
            gates.append(Gate("RZ", (q,), slot)); slot += 1
        for i in range(0, n, 2):
            gates.append(Gate("CNOT", (i, (i + 1) % n)))
        for i in range(1, n, 2):
            gates.append(Gate("CNOT", (i, (i + 1) % n)))
    return Circuit(n, tuple(gates), slot)


def lbfgs(cc, x0, maxiter=2500):
    f = lambda x: cc.value_and_grad(psi0, h, x)
    res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                 options={"maxiter": maxiter, "ftol": 1e-18, "gtol": 1e-14})
    return res.nit, res.fun, fidelity(cc.run(psi0, res.x), gt)


cc = CompiledCircuit(hea_brick(n, p))
for seed in range(3):
    x0 = np.random.default_rng(seed).uniform(0, 2 * np.pi, 2 * n * p)
    t0 = time.time()
    nit, e, F = lbfgs(cc, x0)
    print(f"brick lbfgs seed={seed} nit={nit} E={e:.6f} F={F:.5f} t={time.time()-t0:.0f}s", flush=True)

cc = CompiledCircuit(build_hea(n, p, entangler="ring"))
for seed in range(2):
    x = np.random.default_rng(seed).uniform(0, 2 * np.pi, 2 * n * p)
    f = lambda xx: cc.value_and_grad(psi0, h, xx)
    m = np.zeros_like(x); v = np.zeros_like(x)
    b1, b2, eps, lr = 0.9, 0.999, 1e-8, 0.1
    best_e, best_x = np.inf, x.copy()
    t0 = time.time()
    for it in range(1, 4001):
        e, g = f(x)
        if e < best_e:
            best_e, best_x = e, x.copy()
        m = b1 * m + (1 - b1) * g
        v = b2 * v + (1 - b2) * g * g
        x = x - lr * (m / (1 - b1**it)) / (np.sqrt(v / (1 - b2**it)) + eps)
        if it % 2000 == 0:
            print(f"ring adam seed={seed} it={it} E={best_e:.6f} F={fidelity(cc.run(psi0,best_x),gt):.5f} t={time.time()-t0:.0f}s", flush=True)
