import sys, time, warnings
sys.path.insert(0, "src")
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
spec = ModelSpec("tfim_1d", {"J": -1.0, "h": -1.2}, {"n": 12})
wb = Workbench(spec)
opt = OptimizerConfig()
sel = SelectionConfig(n_samples=2000, n_selected=6)
for seed in range(3):
    t0 = time.time()
    rec = wb.run("enhanced", "hea_ring", 8, seed, opt, sel)
    print(f"enhanced p=8 seed={seed} F={rec.fidelity:.5f} E={rec.energy:.6f} "
          f"pretrainE={rec.pretrain_energy:.6f} N_I={rec.n_iterations} "
          f"sel={rec.selected_states} t={time.time()-t0:.0f}s", flush=True)
