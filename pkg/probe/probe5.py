import sys, time, warnings
import numpy as np
sys.path.insert(0, "src")
import vqekit.core as core
from vqekit.core import Workbench, OptimizerConfig, SelectionConfig
from vqekit.models import ModelSpec

warnings.simplefilter("ignore")
lb = OptimizerConfig(method="lbfgs")
sel4 = SelectionConfig(n_samples=70, n_selected=4)

refs = {
    "sdw195": 0b11000011,   # up sites 0,1; down sites 2,3 (current reading)
    "cdw153": 0b10011001,   # doubly occupied end sites
    "neelA165": 0b10100101, # up sites 0,2; down sites 1,3
    "neelB90": 0b01011010,  # up sites 1,3; down sites 0,2
    "cdw102": 0b01100110,   # doubly occupied middle sites
}

hub = ModelSpec("hubbard", {"t": 1.0, "U": 2.0},
                {"sites": 4, "n_up": 2, "n_down": 2})
for tag, ref in refs.items():
    core.reference_index = lambda spec, _r=ref: _r
    wb = Workbench(hub)
    wb.reference = ref
    for s in range(2):
        t0 = time.time()
        r = wb.run("baseline", "hva", 9, s, lb, sel4, keep_trace=False)
        print(f"U2 {tag} baseline p=9 seed={s} F={r.fidelity:.5f} "
              f"E={r.energy:.6f} t={time.time()-t0:.0f}s", flush=True)
