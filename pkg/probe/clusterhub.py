import sys, time, warnings
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
opt = OptimizerConfig()
sel = SelectionConfig(n_samples=2000, n_selected=12)

spec = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 12})
wb = Workbench(spec)
for arm, depth in (("baseline", 9), ("enhanced", 6), ("baseline", 6)):
    for seed in (0, 1, 2):
        t0 = time.time()
        rec = wb.run(arm, "hva", depth, seed, opt, sel)
        print(f"cluster {arm} p={depth} seed={seed} F={rec.fidelity:.5f} "
              f"E={rec.energy:.6f} N_I={rec.n_iterations} t={time.time()-t0:.0f}s", flush=True)

sel_h = SelectionConfig(n_samples=2000, n_selected=6)
for U in (2.0, 5.0, 10.0):
    spec = ModelSpec("hubbard", {"t": 1.0, "U": U},
                     {"sites": 4, "n_up": 2, "n_down": 2})
    wb = Workbench(spec)
    for arm, depth in (("baseline", 9), ("enhanced", 5), ("enhanced", 9)):
        for seed in (0, 1, 2):
            t0 = time.time()
            rec = wb.run(arm, "hva", depth, seed, opt, sel_h)
            print(f"hubbard U={U} {arm} p={depth} seed={seed} F={rec.fidelity:.5f} "
                  f"E={rec.energy:.6f} N_I={rec.n_iterations} t={time.time()-t0:.0f}s", flush=True)
