import sys, time, warnings
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
lb = OptimizerConfig(method="lbfgs")
ad = OptimizerConfig(method="adam")

def go(tag, wb, ansatz, arm, depth, seed, opt, sel):
    t0 = time.time()
    r = wb.run(arm, ansatz, depth, seed, opt, sel, keep_trace=False)
    print(f"{tag} {arm} p={depth} seed={seed} F={r.fidelity:.5f} "
          f"E={r.energy:.6f} N_I={r.n_iterations} t={time.time()-t0:.0f}s",
          flush=True)

sel4 = SelectionConfig(n_samples=70, n_selected=4)
for U in (2.0, 5.0, 10.0):
    hub = ModelSpec("hubbard", {"t": 1.0, "U": U},
                    {"sites": 4, "n_up": 2, "n_down": 2})
    wb = Workbench(hub)
    for opname, op in (("lb", lb), ("ad", ad)):
        for arm, d in (("baseline", 9), ("enhanced", 5), ("enhanced", 9)):
            for s in range(3):
                go(f"hubU{U:g}-{opname}", wb, "hva", arm, d, s, op, sel4)

clus = ModelSpec("cluster_ising", {"J": 1.0, "h1": 0.1, "h2": 0.1}, {"n": 12})
sel12 = SelectionConfig(n_samples=2000, n_selected=12)
wbc = Workbench(clus)
for arm, d in (("baseline", 9), ("enhanced", 6), ("baseline", 6)):
    for s in range(5):
        go("clus-lb", wbc, "hva", arm, d, s, lb, sel12)

tfim = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 12})
sel6 = SelectionConfig(n_samples=2000, n_selected=6)
wbt = Workbench(tfim)
for arm, d in (("enhanced", 8), ("baseline", 8)):
    for s in range(10):
        go("tfim-ad", wbt, "hea_ring", arm, d, s, ad, sel6)
