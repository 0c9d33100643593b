import time
import numpy as np

from vqekit.circuits import build_hea, CompiledCircuit
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.states import init_basis_state, exact_ground
from vqekit.optim import OptimizerConfig, minimize
from vqekit.core import substream

h = build_hamiltonian(ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 12}))
gt = exact_ground(h)
g0 = gt.subspace[:, 0]
c = CompiledCircuit(build_hea(12, 12))
psi0 = init_basis_state(12, 0)
for lr in (0.1, 0.2, 0.05):
    for seed in (0, 1):
        x0 = substream(0, seed, "baseline-init").uniform(0, 2 * np.pi, c.n_params)
        marks = {}

        def cb(k, e, g, _m=marks):
            if k % 500 == 0:
                _m[k] = e

        t0 = time.time()
        res = minimize(lambda x: c.value_and_grad(psi0, h, x), x0,
                       OptimizerConfig(learning_rate=lr), 4000, grad_tol=1e-3,
                       callback=cb)
        F = abs(np.vdot(g0, c.run(psi0, res.x))) ** 2
        print(f"lr={lr} seed={seed}: iters={res.n_iters} E={res.value:.6f} "
              f"F={F:.5f} dt={time.time() - t0:.0f}s "
              f"marks={[f'{k}:{v:.3f}' for k, v in sorted(marks.items())]}",
              flush=True)
