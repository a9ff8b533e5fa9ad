"""Beam-splitter unitaries and mode relabeling on one interferometer arm.

Phase convention: transmission keeps the amplitude, reflection picks up i,
so the first input goes to (first_out + i*second_out)/sqrt2 and the second
to (i*first_out + second_out)/sqrt2. A removed second beam splitter is a
pure relabeling of internal paths onto detector ports.
"""

from __future__ import annotations

from typing import Dict, Tuple

from . import amplitude as amp
from .errors import ModeAliasingError, SimulationError
from .state import BasisKet, PathLabel, StateVector

PLUS = "plus"
MINUS = "minus"


def _arm_label(ket: BasisKet, arm: str) -> PathLabel:
    return ket.plus if arm == PLUS else ket.minus


def _with_arm_label(ket: BasisKet, arm: str, label: PathLabel) -> BasisKet:
    if arm == PLUS:
        return BasisKet.pair(label, ket.minus)
    return BasisKet.pair(ket.plus, label)


def bs_ket_map(backend: str, arm: str, in_pair: Tuple[PathLabel, PathLabel],
               out_pair: Tuple[PathLabel, PathLabel]):
    """Linear ket map of one beam splitter; absorbed kets pass through."""
    one = amp.scalar_one(backend)
    s = amp.scalar_inv_sqrt2(backend)
    i_s = amp.scalar_i(backend) * s

    def ket_map(ket: BasisKet):
        if ket.is_absorbed:
            return [(ket, one)]
        label = _arm_label(ket, arm)
        if label == in_pair[0]:
            return [(_with_arm_label(ket, arm, out_pair[0]), s),
                    (_with_arm_label(ket, arm, out_pair[1]), i_s)]
        if label == in_pair[1]:
            return [(_with_arm_label(ket, arm, out_pair[0]), i_s),
                    (_with_arm_label(ket, arm, out_pair[1]), s)]
        if label in out_pair:
            raise ModeAliasingError(
                f"mode aliasing: live label {label} collides with output pair")
        return [(ket, one)]

    return ket_map


def apply_bs(sv: StateVector, arm: str, in_pair: Tuple[PathLabel, PathLabel],
             out_pair: Tuple[PathLabel, PathLabel]) -> StateVector:
    """Apply one beam splitter to the given arm."""
    return sv.apply_ket_map(bs_ket_map(sv.backend, arm, in_pair, out_pair))


def relabel_ket_map(backend: str, arm: str,
                    mapping: Dict[PathLabel, PathLabel]):
    """Injective renaming of path labels on one arm (a removed BS)."""
    targets = list(mapping.values())
    if len(set(targets)) != len(targets):
        raise ModeAliasingError("relabel map is not injective")
    one = amp.scalar_one(backend)

    def ket_map(ket: BasisKet):
        if ket.is_absorbed:
            return [(ket, one)]
        label = _arm_label(ket, arm)
        return [(_with_arm_label(ket, arm, mapping.get(label, label)), one)]

    return ket_map


def relabel(sv: StateVector, arm: str,
            mapping: Dict[PathLabel, PathLabel]) -> StateVector:
    live = {_arm_label(k, arm) for k in sv.amps if not k.is_absorbed}
    # injectivity on live labels: two live labels must not merge
    images = {lbl: mapping.get(lbl, lbl) for lbl in live}
    if len(set(images.values())) != len(images):
        raise ModeAliasingError("relabel map merges live labels")
    return sv.apply_ket_map(relabel_ket_map(sv.backend, arm, mapping))


def apply_bs1_pair(sv: StateVector) -> StateVector:
    """Send |S+>|S-> through both first beam splitters (S -> v, u per arm)."""
    expected = {BasisKet.pair(PathLabel.S, PathLabel.S)}
    if sv.support() != expected:
        raise SimulationError("apply_bs1_pair expects the bare source state")
    out = apply_bs(sv, PLUS, (PathLabel.S, PathLabel.S),
                   (PathLabel.v, PathLabel.u))
    return apply_bs(out, MINUS, (PathLabel.S, PathLabel.S),
                    (PathLabel.v, PathLabel.u))
