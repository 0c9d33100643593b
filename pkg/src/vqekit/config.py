"""Flat ``key.path = value`` experiment configs.

The grammar is deliberately trivial: one assignment per line, ``#`` comments,
dotted keys grouping into sections.  Values parse into bool/int/float when
they look like one, otherwise stay strings; comma-separated values become
lists.  Example::

    model.family = tfim_1d
    model.n = 12
    model.J = -1.0
    model.h = -1.2
    ansatz = hea_ring
    depth = 12
    arm = both
    selection.n_selected = 6
    optimizer.joint_iters = 200
"""

from __future__ import annotations

from dataclasses import dataclass

from .models import ModelSpec
from .optim import OptimizerConfig
from .core import SelectionConfig, default_ansatz


class ConfigError(ValueError):
    """Malformed config text; the message carries the offending line number."""


def _parse_scalar(text: str):
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def parse_config(text: str) -> dict:
    """Parse config text into a flat {dotted-key: value} dict."""
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value in {raw!r}")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if "," in value:
            out[key] = [_parse_scalar(v.strip()) for v in value.split(",")]
        else:
            out[key] = _parse_scalar(value)
    return out


def load_config(path: str) -> dict:
    with open(path) as fh:
        return parse_config(fh.read())


def _section(flat: dict, prefix: str) -> dict:
    plen = len(prefix) + 1
    return {k[plen:]: v for k, v in flat.items() if k.startswith(prefix + ".")}


_GEOMETRY_KEYS = {"n", "rows", "cols", "sites", "n_up", "n_down", "boundary"}


@dataclass
class Experiment:
    """A fully-resolved experiment: model, ansatz, arms, and stage configs."""

    model: ModelSpec
    ansatz: str
    depth: int
    arms: tuple[str, ...]
    optimizer: OptimizerConfig
    selection: SelectionConfig
    depths: tuple[int, ...] = ()      # sweep-depth grid
    m_values: tuple[int, ...] = ()    # sweep-m grid


def _as_tuple(value) -> tuple:
    if isinstance(value, list):
        return tuple(value)
    return (value,)


def resolve_experiment(flat: dict) -> Experiment:
    """Build an Experiment from a parsed flat config dict."""
    known_roots = {"model", "ansatz", "depth", "arm", "optimizer", "selection",
                   "sweep"}
    for key in flat:
        if key.split(".", 1)[0] not in known_roots:
            raise ConfigError(f"unknown config key {key!r}")

    model_keys = _section(flat, "model")
    if "family" not in model_keys:
        raise ConfigError("missing required key 'model.family'")
    family = model_keys.pop("family")
    geometry = {k: v for k, v in model_keys.items() if k in _GEOMETRY_KEYS}
    parameters = {k: float(v) for k, v in model_keys.items()
                  if k not in _GEOMETRY_KEYS}
    try:
        model = ModelSpec(family, parameters, geometry)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    arm = flat.get("arm", "both")
    arms = ("baseline", "enhanced") if arm == "both" else _as_tuple(arm)
    for a in arms:
        if a not in ("baseline", "enhanced"):
            raise ConfigError(f"unknown arm {a!r}")

    try:
        optimizer = OptimizerConfig(**_section(flat, "optimizer"))
        selection = SelectionConfig(**_section(flat, "selection"))
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc

    sweep = _section(flat, "sweep")
    return Experiment(
        model=model,
        ansatz=flat.get("ansatz") or default_ansatz(family),
        depth=int(flat.get("depth", 0)),
        arms=tuple(arms),
        optimizer=optimizer,
        selection=selection,
        depths=tuple(int(d) for d in _as_tuple(sweep.get("depths", []))),
        m_values=tuple(int(m) for m in _as_tuple(sweep.get("m_values", []))),
    )
