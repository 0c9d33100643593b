import sys, time, warnings
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
opt = OptimizerConfig(method="lbfgs")

jobs = []
tfim = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 12})
sel6 = SelectionConfig(n_samples=2000, n_selected=6)
jobs += [("tfim", tfim, "hea_ring", arm, d, sel6, range(5))
         for arm, d in (("enhanced", 8), ("baseline", 8))]
clus = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 12})
sel12 = SelectionConfig(n_samples=2000, n_selected=12)
jobs += [("clus", clus, "hva", arm, d, sel12, range(5))
         for arm, d in (("baseline", 9), ("enhanced", 6), ("baseline", 6))]
sel4 = SelectionConfig(n_samples=70, n_selected=4)
for U in (2.0, 5.0, 10.0):
    hub = ModelSpec("hubbard", {"t": 1.0, "U": U},
                    {"sites": 4, "n_up": 2, "n_down": 2})
    jobs += [(f"hubU{U:g}", hub, "hva", arm, d, sel4, range(3))
             for arm, d in (("baseline", 9), ("enhanced", 5), ("enhanced", 9))]

for tag, spec, ansatz, arm, depth, sel, seeds in jobs:
    wb = Workbench(spec)
    for seed in seeds:
        t0 = time.time()
        rec = wb.run(arm, ansatz, depth, seed, opt, sel)
        print(f"{tag} {arm} p={depth} seed={seed} F={rec.fidelity:.5f} "
              f"E={rec.energy:.6f} N_I={rec.n_iterations} t={time.time()-t0:.0f}s",
              flush=True)
