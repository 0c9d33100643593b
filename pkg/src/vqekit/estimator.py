"""Estimator-style front door around the workbench.

Wraps one (model, ansatz, arm) configuration in the familiar
``get_params``/``set_params``/``fit`` shape so runs slot into existing
experiment-management tooling (grid search over depths, cloning, etc.).
``fit`` ignores its data arguments; the "data" is the Hamiltonian itself.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .core import SelectionConfig, Workbench
from .models import ModelSpec
from .optim import OptimizerConfig


class GroundStateEstimator(BaseEstimator):
    """Optimize a variational circuit for one model's ground state.

    Parameters mirror the CLI config keys.  After ``fit`` the run results are
    exposed as ``energy_``, ``fidelity_`` and the full ``record_``.
    """

    def __init__(self, family="tfim_1d", parameters=None, geometry=None,
                 ansatz="hea_ring", depth=4, arm="baseline", seed=0,
                 master_seed=0, optimizer=None, selection=None):
        self.family = family
        self.parameters = parameters
        self.geometry = geometry
        self.ansatz = ansatz
        self.depth = depth
        self.arm = arm
        self.seed = seed
        self.master_seed = master_seed
        self.optimizer = optimizer
        self.selection = selection

    def fit(self, X=None, y=None):
        spec = ModelSpec(self.family, dict(self.parameters or {}),
                         dict(self.geometry or {}))
        workbench = Workbench(spec)
        opt = self.optimizer if self.optimizer is not None else OptimizerConfig()
        sel = self.selection if self.selection is not None else SelectionConfig()
        self.record_ = workbench.run(self.arm, self.ansatz, self.depth,
                                     self.seed, opt, sel,
                                     master_seed=self.master_seed)
        self.energy_ = self.record_.energy
        self.fidelity_ = self.record_.fidelity
        self.ground_energy_ = self.record_.ground_energy
        return self

    def score(self, X=None, y=None) -> float:
        """Ground-subspace fidelity of the fitted state (higher is better)."""
        if not hasattr(self, "record_"):
            raise RuntimeError("estimator is not fitted")
        return self.fidelity_
