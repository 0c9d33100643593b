import sys, time
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import exact_ground, fidelity, init_basis_state
from vqekit.circuits import Circuit, Gate, build_hea, CompiledCircuit
from scipy.optimize import minimize as sp_min

n = 12
spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": n})
h = build_hamiltonian(spec)
gt = exact_ground(h)
psi0 = init_basis_state(n, 0)


def hea_var(n, p, direction="down", final_rots=False):
    gates, slot = [], 0
    for _ in range(p):
        for q in range(n):
            gates.append(Gate("RY", (q,), slot)); slot += 1
            gates.append(Gate("RZ", (q,), slot)); slot += 1
        for i in range(n):
            a, b = i, (i + 1) % n
            if direction == "up":
                a, b = b, a
            gates.append(Gate("CNOT", (a, b)))
    if final_rots:
        for q in range(n):
            gates.append(Gate("RY", (q,), slot)); slot += 1
            gates.append(Gate("RZ", (q,), slot)); slot += 1
    return Circuit(n, tuple(gates), slot)


def lbfgs(cc, seed, maxiter=2500):
    x0 = np.random.default_rng(seed).uniform(0, 2 * np.pi, cc.n_params)
    f = lambda x: cc.value_and_grad(psi0, h, x)
    t0 = time.time()
    res = sp_min(f, x0, jac=True, method="L-BFGS-B",
                 options={"maxiter": maxiter, "ftol": 1e-18, "gtol": 1e-14})
    return res.nit, res.fun, fidelity(cc.run(psi0, res.x), gt), time.time() - t0


for tag, circ, seeds in (
    ("p14", build_hea(n, 14, "ring"), (0,)),
    ("p12-up", hea_var(n, 12, direction="up"), (0, 1)),
    ("p12-finalrot", hea_var(n, 12, final_rots=True), (0, 1)),
    ("p16", build_hea(n, 16, "ring"), (0,)),
):
    cc = CompiledCircuit(circ)
    for s in seeds:
        nit, e, F, t = lbfgs(cc, s)
        print(f"{tag} seed={s} nit={nit} E={e:.6f} F={F:.5f} t={t:.0f}s", flush=True)
