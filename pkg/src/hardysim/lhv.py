"""Brute-force local-hidden-variable audit of the Hardy coincidence facts.

Each local strategy predetermines a detector outcome for both settings of
both parties (second beam splitter in place or removed). There are only
2^4 = 16 such strategies. Deterministic strategies suffice: any stochastic
local model is a convex mixture of them, so it can assign positive weight
to the target event only through a deterministic strategy that realizes
the event while violating none of the zero-probability constraints. The
audit therefore just enumerates all 16.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import hardy

IN, OUT = "in", "out"

Setting = Tuple[str, str]      # (e+ setting, e- setting), each "in"/"out"
Outcome = Tuple[str, str]      # (e+ detector, e- detector), each "c"/"d"

_KEY = {(OUT, OUT): "OO", (IN, OUT): "IO", (OUT, IN): "OI", (IN, IN): "II"}


@dataclass(frozen=True)
class LocalStrategy:
    """Predetermined outcomes: a_* for the positron, b_* for the electron."""

    a_in: str
    a_out: str
    b_in: str
    b_out: str

    def outcome(self, setting: Setting) -> Outcome:
        s_a, s_b = setting
        a = self.a_in if s_a == IN else self.a_out
        b = self.b_in if s_b == IN else self.b_out
        return (a, b)

    def __str__(self) -> str:
        return (f"a(in)={self.a_in} a(out)={self.a_out} "
                f"b(in)={self.b_in} b(out)={self.b_out}")


def all_strategies() -> List[LocalStrategy]:
    return [LocalStrategy(*combo)
            for combo in itertools.product("cd", repeat=4)]


@dataclass
class ConstraintSet:
    """Quantum facts an LHV model must reproduce.

    zero_events: (setting, outcome) pairs with probability exactly 0.
    positive_event: a (setting, outcome) pair with probability > 0.
    """

    zero_events: List[Tuple[Setting, Outcome]]
    positive_event: Optional[Tuple[Setting, Outcome, Fraction]]


def quantum_constraints() -> ConstraintSet:
    """Read the Hardy chain off the conditional coincidence tables."""
    tables = hardy.full_table()
    zero_events = [((OUT, OUT), ("c", "c")),
                   ((IN, OUT), ("d", "d")),
                   ((OUT, IN), ("d", "d"))]
    for setting, outcome in zero_events:
        prob = tables[_KEY[setting]].prob(*outcome)
        if prob != 0:
            raise AssertionError(f"expected zero probability at {setting} {outcome}")
    target = ((IN, IN), ("d", "d"))
    prob = tables["II"].prob(*target[1])
    if prob <= 0:
        raise AssertionError("expected positive probability at (in,in) (d,d)")
    return ConstraintSet(zero_events, (target[0], target[1], prob))


@dataclass
class Verdict:
    contradiction: bool
    surviving_strategies: List[LocalStrategy]
    eliminations: Dict[LocalStrategy, Tuple[Setting, Outcome]] = field(
        default_factory=dict)


def audit(cs: ConstraintSet) -> Verdict:
    """Enumerate all 16 strategies against the constraints.

    A strategy survives iff it triggers no zero event. The verdict is a
    contradiction iff no surviving strategy realizes the positive event
    (pointwise, which by convexity covers all mixtures).
    """
    survivors: List[LocalStrategy] = []
    eliminations: Dict[LocalStrategy, Tuple[Setting, Outcome]] = {}
    for strat in all_strategies():
        killed = None
        for setting, outcome in cs.zero_events:
            if strat.outcome(setting) == outcome:
                killed = (setting, outcome)
                break
        if killed is None:
            survivors.append(strat)
        else:
            eliminations[strat] = killed
    if cs.positive_event is None or cs.positive_event[2] <= 0:
        return Verdict(False, survivors, eliminations)
    setting, outcome, _ = cs.positive_event
    realizable = any(s.outcome(setting) == outcome for s in survivors)
    return Verdict(not realizable, survivors, eliminations)


def audit_report(cs: Optional[ConstraintSet] = None) -> str:
    """Human-readable enumeration: each strategy's fate, then the verdict."""
    if cs is None:
        cs = quantum_constraints()
    verdict = audit(cs)
    lines = ["LHV audit: 16 deterministic strategies",
             "zero constraints: "
             + "; ".join(f"P({o[0]},{o[1]}|{s[0]},{s[1]}) = 0"
                         for s, o in cs.zero_events)]
    if cs.positive_event:
        s, o, prob = cs.positive_event
        lines.append(f"positive fact: P({o[0]},{o[1]}|{s[0]},{s[1]}) = {prob}")
    lines.append("")
    for strat in all_strategies():
        if strat in verdict.eliminations:
            setting, outcome = verdict.eliminations[strat]
            lines.append(f"  {strat}  ELIMINATED by zero event "
                         f"({outcome[0]},{outcome[1]}|{setting[0]},{setting[1]})")
        else:
            lines.append(f"  {strat}  survives")
    lines.append("")
    n = len(verdict.surviving_strategies)
    lines.append(f"surviving strategies: {n}")
    if verdict.contradiction:
        lines.append("verdict: CONTRADICTION - no local model exists")
    else:
        lines.append("verdict: satisfiable - a local model exists")
    return "\n".join(lines)
