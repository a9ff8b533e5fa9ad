"""hardysim: exact-arithmetic simulator of the two-interferometer
annihilation thought experiment, its p < 1 channel generalization, a
local-hidden-variable audit, and the photonic bunching analogue."""

from .amplitude import EXACT, FLOAT, ExactScalar
from .errors import SimulationError
from .hardy import OutcomeTable, ScenarioConfig, full_table, run_scenario
from .state import ABSORBED, BasisKet, DensityMatrix, PathLabel, StateVector

__all__ = [
    "EXACT", "FLOAT", "ExactScalar", "SimulationError",
    "OutcomeTable", "ScenarioConfig", "full_table", "run_scenario",
    "ABSORBED", "BasisKet", "DensityMatrix", "PathLabel", "StateVector",
]

__version__ = "0.1.0"
