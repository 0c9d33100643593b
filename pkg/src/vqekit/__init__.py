"""vqekit: a statevector workbench for input-state-designed variational runs."""

from .circuits import (
    Circuit,
    CompiledCircuit,
    Gate,
    build_hea,
    build_hva_cluster,
    build_hva_hubbard,
    build_hva_tfim,
    concat,
    count_resources,
)
from .core import (
    RunRecord,
    SelectionConfig,
    Workbench,
    optimal_superposition,
    superposition_fidelity,
    theorem1_report,
)
from .encoder import BasisSet, Encoder, solve_parameters, synthesize
from .estimator import GroundStateEstimator
from .models import ModelSpec, build_hamiltonian
from .optim import OptimizerConfig, minimize
from .pauli import PauliString, PauliSum, expectation
from .states import (
    GroundTruth,
    exact_ground,
    fidelity,
    ground_energy_inverse_iteration,
    init_basis_state,
    sector_ground,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSet", "Circuit", "CompiledCircuit", "Encoder", "Gate",
    "GroundStateEstimator", "GroundTruth", "ModelSpec", "OptimizerConfig",
    "PauliString", "PauliSum", "RunRecord", "SelectionConfig", "Workbench",
    "build_hamiltonian", "build_hea", "build_hva_cluster",
    "build_hva_hubbard", "build_hva_tfim", "concat", "count_resources",
    "exact_ground", "expectation", "fidelity",
    "ground_energy_inverse_iteration", "init_basis_state", "minimize",
    "optimal_superposition", "sector_ground", "solve_parameters",
    "superposition_fidelity", "synthesize", "theorem1_report",
]
