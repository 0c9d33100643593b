"""Command-line front end for the workbench.

Verbs::

    vqekit run         --config cfg --seeds 10 --master-seed 0 --out results/
    vqekit sweep-depth --config cfg --seeds 10 --out results/
    vqekit sweep-m     --config cfg --seeds 10 --out results/
    vqekit theorem1    --n 3 --trials 1000
    vqekit dump        model tfim_1d n=4 J=-1 h=-1.2
    vqekit schema

``run`` writes ``summary.csv``, one ``trace-<seed>-<arm>.jsonl`` per run, and
``resources.txt``; the sweep verbs write ``summary.csv`` and
``resources.txt``.  Exit code 2 signals a usage or config problem.
"""

from __future__ import annotations

import argparse
import os
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor

from .circuits import build_hea, count_resources
from .config import ConfigError, Experiment, load_config, resolve_experiment
from .core import (
    SUMMARY_COLUMNS,
    SelectionConfig,
    Workbench,
    ansatz_layers,
    build_ansatz,
    substream,
    theorem1_report,
    write_summary_csv,
    write_trace_jsonl,
)
from .encoder import BasisSet, synthesize
from .models import ModelSpec, build_hamiltonian
from .states import expectation_sampled

_SCHEMA_NOTES = {
    "family": "model family identifier",
    "arm": "baseline (ansatz only) or enhanced (encoder + ansatz)",
    "seed": "per-run seed index under the master seed",
    "ansatz": "ansatz builder name (hea_ring, hea_chain, hva)",
    "depth": "layer depth budget p",
    "n_qubits": "register width",
    "energy": "best optimized energy",
    "fidelity": "squared overlap with the exact ground subspace",
    "ground_energy": "exact ground energy (sector-restricted when conserved)",
    "infidelity": "1 - fidelity, clipped at 0",
    "n_params": "trainable parameter count (encoder included when present)",
    "n_iterations": "optimizer iterations used across all stages",
    "cost_c_r": "n_iterations x n_params",
    "one_qubit_gates": "elementary one-qubit gate count",
    "two_qubit_gates": "elementary two-qubit gate count",
    "selected_states": "semicolon-joined basis indices in the superposition",
    "energy_sampled": "shot-sampled energy estimate (empty unless --shots)",
}


def _die(message: str, code: int = 2) -> "NoReturn":  # noqa: F821
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(code)


def _parse_kv(args: list[str]) -> dict:
    out = {}
    for item in args:
        if "=" not in item:
            _die(f"expected key=value, got {item!r}")
        key, _, value = item.partition("=")
        out[key] = value
    return out


def _run_task(task: dict):
    """Execute one (arm, depth, m, seed) run; used by the worker pool."""
    wb = Workbench(task["model"], ground=task["ground"])
    sel = task["selection"]
    if task["m"] is not None:
        sel = SelectionConfig(n_samples=sel.n_samples, n_selected=task["m"],
                              threshold=sel.threshold,
                              threshold_offset=sel.threshold_offset,
                              greedy=sel.greedy)
    rec = wb.run(task["arm"], task["ansatz"], task["depth"], task["seed"],
                 task["optimizer"], sel, master_seed=task["master_seed"],
                 keep_trace=task["keep_trace"])
    if task["shots"]:
        rng = substream(task["master_seed"], task["seed"],
                        f"{task['arm']}-shots")
        rec.energy_sampled = expectation_sampled(
            rec.final_state, wb.hamiltonian, task["shots"], rng)
    return rec


def _execute(tasks: list[dict], workers: int):
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_task, tasks))
    return [_run_task(t) for t in tasks]


def _write_resources(path: str, records) -> None:
    """Aggregate per-arm resource rows in the style of a results table."""
    keyed: dict = {}
    for rec in records:
        keyed.setdefault((rec.family, rec.arm, rec.depth), []).append(rec)
    lines = [f"{'family':<14} {'arm':<9} {'layers':>6} {'2q_gates':>9} "
             f"{'n_params':>9} {'N_I':>7} {'C_R':>10}"]
    for (family, arm, depth), recs in sorted(keyed.items()):
        n_i = int(statistics.median(r.n_iterations for r in recs))
        c_r = int(statistics.median(r.cost_c_r for r in recs))
        lines.append(f"{family:<14} {arm:<9} {depth:>6} "
                     f"{recs[0].two_qubit_gates:>9} {recs[0].n_params:>9} "
                     f"{n_i:>7} {c_r:>10}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _load_experiment(args) -> Experiment:
    if not args.config:
        _die("--config is required for this verb")
    try:
        return resolve_experiment(load_config(args.config))
    except FileNotFoundError:
        _die(f"config file not found: {args.config}")
    except ConfigError as exc:
        _die(str(exc))


def _make_tasks(exp: Experiment, args, *, arms=None, depths=None,
                m_values=(None,), keep_trace=False) -> list[dict]:
    wb = Workbench(exp.model)  # diagonalize once, share with workers
    tasks = []
    for arm in arms or exp.arms:
        for depth in depths or (exp.depth,):
            for m in m_values:
                for seed in range(args.seeds):
                    tasks.append({
                        "model": exp.model, "ground": wb.ground, "arm": arm,
                        "ansatz": exp.ansatz, "depth": depth, "m": m,
                        "seed": seed, "master_seed": args.master_seed,
                        "optimizer": exp.optimizer, "selection": exp.selection,
                        "shots": args.shots, "keep_trace": keep_trace,
                    })
    return tasks


def cmd_run(args) -> int:
    exp = _load_experiment(args)
    if exp.depth < 1:
        _die("config must set a positive 'depth'")
    os.makedirs(args.out, exist_ok=True)
    tasks = _make_tasks(exp, args, keep_trace=True)
    records = _execute(tasks, args.workers)
    write_summary_csv(os.path.join(args.out, "summary.csv"), records)
    for rec in records:
        write_trace_jsonl(
            os.path.join(args.out, f"trace-{rec.seed}-{rec.arm}.jsonl"), rec)
    _write_resources(os.path.join(args.out, "resources.txt"), records)
    return 0


def cmd_sweep_depth(args) -> int:
    exp = _load_experiment(args)
    if not exp.depths:
        _die("config must set 'sweep.depths' for sweep-depth")
    os.makedirs(args.out, exist_ok=True)
    tasks = _make_tasks(exp, args, depths=exp.depths)
    records = _execute(tasks, args.workers)
    write_summary_csv(os.path.join(args.out, "summary.csv"), records)
    _write_resources(os.path.join(args.out, "resources.txt"), records)
    return 0


def cmd_sweep_m(args) -> int:
    exp = _load_experiment(args)
    if not exp.m_values:
        _die("config must set 'sweep.m_values' for sweep-m")
    if exp.depth < 1:
        _die("config must set a positive 'depth'")
    os.makedirs(args.out, exist_ok=True)
    tasks = _make_tasks(exp, args, arms=("enhanced",), m_values=exp.m_values)
    records = _execute(tasks, args.workers)
    write_summary_csv(os.path.join(args.out, "summary.csv"), records)
    _write_resources(os.path.join(args.out, "resources.txt"), records)
    return 0


def cmd_theorem1(args) -> int:
    if args.n > 10:
        _die("--n must be at most 10")
    report = theorem1_report(args.n, args.trials, args.master_seed)
    for key in ("worst_equality", "worst_collinearity",
                "worst_monotonicity_violation"):
        print(f"{key}: {report[key]:.3e}")
    print("PASS" if report["passed"] else "FAIL")
    return 0 if report["passed"] else 1


def cmd_dump(args) -> int:
    if args.kind and "=" in args.kind:  # selectors without a kind word
        args.args.insert(0, args.kind)
        args.kind = None
    kv = _parse_kv(args.args)
    if args.selector == "model":
        if not args.kind:
            _die("usage: dump model <family> key=value ...")
        geometry_keys = ("n", "rows", "cols", "sites", "n_up", "n_down")
        geometry = {k: int(v) for k, v in kv.items() if k in geometry_keys}
        if "boundary" in kv:
            geometry["boundary"] = kv["boundary"]
        params = {k: float(v) for k, v in kv.items()
                  if k not in geometry and k != "boundary"}
        try:
            h = build_hamiltonian(ModelSpec(args.kind, params, geometry))
        except (ValueError, KeyError) as exc:
            _die(str(exc))
        print(h.to_text())
        return 0
    if args.selector == "circuit":
        if args.kind in ("hea", "hea_ring", "hea_chain"):
            entangler = "chain" if args.kind == "hea_chain" else \
                kv.get("entangler", "ring")
            circuit = build_hea(int(kv["n"]), int(kv["p"]), entangler)
        elif args.kind == "hva":
            geometry_keys = ("n", "rows", "cols", "sites", "n_up", "n_down")
            geometry = {k: int(v) for k, v in kv.items()
                        if k in geometry_keys}
            params = {k: float(v) for k, v in kv.items()
                      if k not in geometry and k not in ("family", "p")}
            spec = ModelSpec(kv["family"], params, geometry)
            circuit = build_ansatz(spec, "hva", int(kv["p"]))
        else:
            _die(f"unknown circuit kind {args.kind!r}")
        print(circuit.to_text())
        return 0
    if args.selector == "encoder":
        members = tuple(int(b) for b in kv["members"].split(";"))
        basis = BasisSet(int(kv["n"]), members, int(kv.get("reference", members[0])))
        print(synthesize(basis).circuit.to_text())
        return 0
    _die(f"unknown dump selector {args.selector!r}")


def cmd_schema(args) -> int:
    for column in SUMMARY_COLUMNS:
        print(f"{column}: {_SCHEMA_NOTES[column]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vqekit",
                                     description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p):
        p.add_argument("--config", help="experiment config file")
        p.add_argument("--seeds", type=int, default=10,
                       help="number of seeds per arm (default 10)")
        p.add_argument("--master-seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", default="results",
                       help="output directory (default results/)")
        p.add_argument("--shots", type=int, default=0,
                       help="also report a shot-sampled final energy")

    p = sub.add_parser("run", help="run one experiment over seeds and arms")
    add_common(p)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("sweep-depth", help="run over the sweep.depths grid")
    add_common(p)
    p.set_defaults(fn=cmd_sweep_depth)

    p = sub.add_parser("sweep-m", help="run the enhanced arm over sweep.m_values")
    add_common(p)
    p.set_defaults(fn=cmd_sweep_m)

    p = sub.add_parser("theorem1", help="superposition-identity property suite")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--master-seed", type=int, default=0)
    p.set_defaults(fn=cmd_theorem1)

    p = sub.add_parser("dump", help="print a model/circuit/encoder text form")
    p.add_argument("selector", choices=["model", "circuit", "encoder"])
    p.add_argument("kind", nargs="?", default=None)
    p.add_argument("args", nargs="*")
    p.set_defaults(fn=cmd_dump)

    p = sub.add_parser("schema", help="describe the summary.csv columns")
    p.set_defaults(fn=cmd_schema)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
