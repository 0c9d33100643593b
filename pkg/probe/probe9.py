import sys, time, warnings
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
tfim = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 12})
wb = Workbench(tfim)
sel6 = SelectionConfig(n_samples=2000, n_selected=6)
ad1k = OptimizerConfig(method="adam", joint_iters=1000)

for s in range(5):
    t0 = time.time()
    r = wb.run("enhanced", "hea_ring", 8, s, ad1k, sel6, keep_trace=False)
    print(f"adT1k enhanced p=8 seed={s} F={r.fidelity:.5f} E={r.energy:.6f} "
          f"N_I={r.n_iterations} t={time.time()-t0:.0f}s", flush=True)
