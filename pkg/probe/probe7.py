import sys, time, warnings
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
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
# the "p=6 enhanced" reading: 6 full ansatz layers plus the encoder
for s in range(5):
    go("clusG7", wbc, "hva", "enhanced", 7, s, lb, sel12)
