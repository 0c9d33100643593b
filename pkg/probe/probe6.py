import sys, time, warnings
import numpy as np
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
# uniform init for every ansatz
Workbench._initial_angles = staticmethod(
    lambda a, rng, k: rng.uniform(0.0, 2.0 * np.pi, k))

lb = OptimizerConfig(method="lbfgs")

def go(tag, wb, ansatz, arm, depth, seed, opt, sel):
    t0 = time.time()
    r = wb.run(arm, ansatz, depth, seed, opt, sel, keep_trace=False)
    print(f"{tag} {arm} p={depth} seed={seed} F={r.fidelity:.5f} "
          f"E={r.energy:.6f} N_I={r.n_iterations} t={time.time()-t0:.0f}s",
          flush=True)

clus = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 12})
sel12 = SelectionConfig(n_samples=2000, n_selected=12)
wbc = Workbench(clus)
for arm, d in (("baseline", 6), ("baseline", 9), ("enhanced", 6)):
    for s in range(5):
        go("clusU", wbc, "hva", arm, d, s, lb, sel12)

sel4 = SelectionConfig(n_samples=70, n_selected=4)
hub = ModelSpec("hubbard", {"t": 1.0, "U": 2.0},
                {"sites": 4, "n_up": 2, "n_down": 2})
wbh = Workbench(hub)
for s in range(3):
    go("hubU2u", wbh, "hva", "enhanced", 5, s, lb, sel4)
