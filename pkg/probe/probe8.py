import sys, time, warnings
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
clus = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 12})
wb = Workbench(clus)

def go(tag, arm, depth, seed, opt, sel):
    t0 = time.time()
    r = wb.run(arm, "hva", depth, seed, opt, sel, keep_trace=False)
    print(f"{tag} {arm} p={depth} seed={seed} F={r.fidelity:.5f} "
          f"E={r.energy:.6f} N_I={r.n_iterations} t={time.time()-t0:.0f}s",
          flush=True)

lb = OptimizerConfig(method="lbfgs")
lb600 = OptimizerConfig(method="lbfgs", joint_iters=600)
sel12 = SelectionConfig(n_samples=2000, n_selected=12)
sel16 = SelectionConfig(n_samples=2000, n_selected=16)

for s in range(2):
    go("chk-base6", "baseline", 6, s, lb, sel12)
for s in range(5):
    go("T600-m12", "enhanced", 6, s, lb600, sel12)
for s in range(5):
    go("T200-m16", "enhanced", 6, s, lb, sel16)
for s in range(5):
    go("T600-m16", "enhanced", 6, s, lb600, sel16)
