import time
from vqekit.models import ModelSpec
from vqekit.core import Workbench, SelectionConfig
from vqekit.optim import OptimizerConfig

spec = ModelSpec("tfim_1d", {"J":-1.0,"h":-1.2}, {"n":12})
t0=time.time()
wb = Workbench(spec)
print(f"ground truth {wb.ground.energy:.9f} in {time.time()-t0:.1f}s", flush=True)
opt = OptimizerConfig()
sel = SelectionConfig(n_samples=2000, n_selected=6)
for seed in range(3):
    for depth, arm in ((12,"baseline"), (8,"enhanced"), (8,"baseline")):
        t0=time.time()
        if arm=="baseline":
            r = wb.run_baseline("hea_ring", depth, seed, opt, keep_trace=False)
        else:
            r = wb.run_enhanced("hea_ring", depth, seed, opt, sel, keep_trace=False)
        print(f"seed={seed} {arm} p={depth}: F={r.fidelity:.6f} E={r.energy:.6f} "
              f"iters={r.n_iterations} pre={r.pretrain_iterations} "
              f"dt={time.time()-t0:.0f}s", flush=True)
