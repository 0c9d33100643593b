import sys, time, warnings
import numpy as np
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")

def go(tag, wb, ansatz, arm, depth, seed, opt, sel):
    t0 = time.time()
    r = wb.run(arm, ansatz, depth, seed, opt, sel, keep_trace=False)
    print(f"{tag} {arm} p={depth} seed={seed} F={r.fidelity:.5f} "
          f"E={r.energy:.6f} N_I={r.n_iterations} t={time.time()-t0:.0f}s",
          flush=True)

lb = OptimizerConfig(method="lbfgs")
ad = OptimizerConfig(method="adam")
sel4 = SelectionConfig(n_samples=70, n_selected=4)

for scale_tag, fn in (
    ("unif", lambda a, rng, k: rng.uniform(0.0, 2.0 * np.pi, k)),
    ("n05", lambda a, rng, k: rng.normal(0.0, 0.5, k)),
):
    Workbench._initial_angles = staticmethod(fn)
    for U in (2.0, 5.0):
        hub = ModelSpec("hubbard", {"t": 1.0, "U": U},
                        {"sites": 4, "n_up": 2, "n_down": 2})
        wb = Workbench(hub)
        for opname, op in (("lb", lb), ("ad", ad)):
            for s in range(3):
                go(f"hubU{U:g}-{opname}-{scale_tag}", wb, "hva",
                   "baseline", 9, s, op, sel4)
