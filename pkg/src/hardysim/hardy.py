"""Full-experiment orchestration over the four second-beam-splitter layouts.

Pipeline: source state -> both first beam splitters -> annihilation step at
the meeting point (projection at p = 1, Kraus channel otherwise) -> per arm
either the second beam splitter or a direct path-to-detector relabeling ->
detector coincidence table over {c, d} x {c, d} plus the photon branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from . import measurement, optics
from .amplitude import EXACT, FLOAT
from .errors import SimulationError
from .state import BasisKet, PathLabel, make_input, pure_to_density

CONFIG_KEYS = ("OO", "IO", "OI", "II")  # (bs2_plus, bs2_minus): O=removed, I=in place

DETECTORS = ("c", "d")

_DET_LABEL = {"c": PathLabel.c, "d": PathLabel.d}


@dataclass(frozen=True)
class ScenarioConfig:
    bs2_plus: bool
    bs2_minus: bool
    reaction_prob: Fraction = Fraction(1)
    backend: str = EXACT

    def __post_init__(self):
        if not (0 <= self.reaction_prob <= 1):
            raise SimulationError(
                f"reaction probability {self.reaction_prob} outside [0, 1]")
        if self.backend not in (EXACT, FLOAT):
            raise SimulationError(f"unknown backend {self.backend!r}")

    @property
    def key(self) -> str:
        return ("I" if self.bs2_plus else "O") + ("I" if self.bs2_minus else "O")


@dataclass
class OutcomeTable:
    """Coincidence probabilities per detector pair, plus the photon weight.

    conditional=True means rows are renormalized on 'no photon' and sum to 1;
    otherwise rows + gamma_prob sum to 1.
    """

    rows: Dict[Tuple[str, str], Union[Fraction, float]]
    gamma_prob: Union[Fraction, float]
    conditional: bool
    config: str = ""

    def prob(self, det_plus: str, det_minus: str):
        return self.rows[(det_plus, det_minus)]

    def conditioned(self) -> "OutcomeTable":
        if self.conditional:
            return self
        total = sum(self.rows.values())
        if total == 0:
            raise SimulationError("no surviving coincidences to condition on")
        rows = {k: v / total for k, v in self.rows.items()}
        zero = 0.0 if isinstance(total, float) else Fraction(0)
        return OutcomeTable(rows, zero, True, self.config)


def _bs2_stage(obj, present_plus: bool, present_minus: bool):
    """Second beam splitters (or relabelings) on a state or density matrix."""
    backend = obj.backend
    uv = (PathLabel.u, PathLabel.v)
    cd = (PathLabel.c, PathLabel.d)
    removed = {PathLabel.u: PathLabel.c, PathLabel.v: PathLabel.d}
    for arm, present in ((optics.PLUS, present_plus),
                         (optics.MINUS, present_minus)):
        if present:
            obj = obj.apply_ket_map(optics.bs_ket_map(backend, arm, uv, cd))
        else:
            obj = obj.apply_ket_map(optics.relabel_ket_map(backend, arm, removed))
    return obj


def _is_coincidence(det_plus: str, det_minus: str):
    lp, lm = _DET_LABEL[det_plus], _DET_LABEL[det_minus]

    def predicate(ket: BasisKet) -> bool:
        return (not ket.is_absorbed) and ket.plus == lp and ket.minus == lm

    return predicate


def run_scenario(cfg: ScenarioConfig):
    """Run one layout; returns (final state or density matrix, outcome table).

    The table is unconditional: detector rows plus the photon probability
    sum to one. At the endpoints p = 0 and p = 1 the state stays pure and a
    StateVector is returned; in between the channel genuinely mixes and the
    result is a DensityMatrix.
    """
    p = cfg.reaction_prob
    sv = optics.apply_bs1_pair(make_input(cfg.backend))

    if p == 1:
        projected, survival = measurement.project_knowledge(
            sv, measurement.hardy_projector())
        final = _bs2_stage(projected, cfg.bs2_plus, cfg.bs2_minus)
        gamma = 1 - survival
        scale = survival
        rows = {(dp, dm): final.probability(_is_coincidence(dp, dm)) * scale
                for dp in DETECTORS for dm in DETECTORS}
        return final, OutcomeTable(rows, gamma, False, cfg.key)

    if p == 0:
        final = _bs2_stage(sv, cfg.bs2_plus, cfg.bs2_minus)
        rows = {(dp, dm): final.probability(_is_coincidence(dp, dm))
                for dp in DETECTORS for dm in DETECTORS}
        zero = Fraction(0) if cfg.backend == EXACT else 0.0
        return final, OutcomeTable(rows, zero, False, cfg.key)

    ch = measurement.annihilation_channel(p, cfg.backend)
    rho = measurement.apply_channel(pure_to_density(sv), ch)
    final = _bs2_stage(rho, cfg.bs2_plus, cfg.bs2_minus)
    rows = {(dp, dm): final.diagonal_probability(_is_coincidence(dp, dm))
            for dp in DETECTORS for dm in DETECTORS}
    gamma = final.diagonal_probability(lambda k: k.is_absorbed)
    return final, OutcomeTable(rows, gamma, False, cfg.key)


def full_table(p: Fraction = Fraction(1),
               backend: str = EXACT) -> Dict[str, OutcomeTable]:
    """Conditional coincidence tables for all four layouts at the given p."""
    tables = {}
    for bs2_plus in (False, True):
        for bs2_minus in (False, True):
            cfg = ScenarioConfig(bs2_plus, bs2_minus, p, backend)
            _, table = run_scenario(cfg)
            tables[cfg.key] = table.conditioned()
    return tables


def no_interaction_baseline(cfg: ScenarioConfig) -> OutcomeTable:
    """Sanity limit p = 0: balanced interferometers, no annihilation branch."""
    if cfg.reaction_prob != 0:
        raise SimulationError("baseline requires reaction probability 0")
    _, table = run_scenario(cfg)
    return table
