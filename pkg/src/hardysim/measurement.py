"""Knowledge projection and its generalization to a two-outcome Kraus channel.

When the annihilation at the meeting point is certain (p = 1), knowing that
no photon appeared projects the state onto the non-annihilating kets and
renormalizes. For p < 1 the same physics is a quantum channel with two
Kraus elements: a "pass" element that damps the annihilating ket by
sqrt(1-p), and an "absorb" element that transfers it to the photon sink
with weight sqrt(p). The channel output is in general a mixed state, so it
acts on density matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple

from . import amplitude as amp
from .amplitude import EXACT
from .errors import AnnihilatedError, EmptyStateError, SimulationError
from .state import ABSORBED, BasisKet, DensityMatrix, PathLabel, StateVector

DOOMED = BasisKet.pair(PathLabel.u, PathLabel.u)


@dataclass(frozen=True)
class KnowledgeProjector:
    """Projector onto the kets whose outcome is compatible with 'no photon'."""

    kept: FrozenSet[BasisKet]

    def __post_init__(self):
        if not self.kept:
            raise SimulationError("projector kept-set is empty")
        if ABSORBED in self.kept:
            raise SimulationError("the absorbed ket cannot be kept")


def hardy_projector() -> KnowledgeProjector:
    """The projector that removes the annihilating u+u- component."""
    kept = frozenset({
        BasisKet.pair(PathLabel.v, PathLabel.v),
        BasisKet.pair(PathLabel.v, PathLabel.u),
        BasisKet.pair(PathLabel.u, PathLabel.v),
    })
    return KnowledgeProjector(kept)


def project_knowledge(sv: StateVector,
                      proj: KnowledgeProjector) -> Tuple[StateVector, Fraction]:
    """Project onto the kept set; returns (projected state, survival probability).

    The projected state keeps its unnormalized amplitudes; its tracked norm
    shrinks accordingly, so downstream probabilities renormalize on demand.
    """
    if sv.is_zero():
        raise EmptyStateError("empty state")
    survival = sv.probability(lambda k: k in proj.kept)
    if survival == 0:
        raise AnnihilatedError("state annihilated with certainty")
    projected = StateVector({k: a for k, a in sv.amps.items() if k in proj.kept},
                            sv.backend)
    return projected, survival


@dataclass(frozen=True)
class AnnihilationChannel:
    """Two-outcome channel: damp the doomed ket, or absorb it into the sink.

    Kraus elements (identity elsewhere):
      pass:   |doomed> -> sqrt(1-p) |doomed>
      absorb: |doomed> -> sqrt(p)   |gamma>
    The sign of the absorbed branch is unobservable here; +sqrt(p) is used.
    """

    p: Fraction
    backend: str = EXACT
    doomed: BasisKet = DOOMED
    gamma: BasisKet = ABSORBED
    sqrt_p: object = field(init=False, repr=False)
    sqrt_1mp: object = field(init=False, repr=False)

    def __post_init__(self):
        if not (0 <= self.p <= 1):
            raise SimulationError(f"reaction probability {self.p} outside [0, 1]")
        object.__setattr__(self, "sqrt_p",
                           amp.scalar_sqrt(self.p, self.backend))
        object.__setattr__(self, "sqrt_1mp",
                           amp.scalar_sqrt(1 - self.p, self.backend))

    def pass_map(self):
        one = amp.scalar_one(self.backend)

        def ket_map(ket: BasisKet):
            if ket == self.doomed:
                return [(ket, self.sqrt_1mp)]
            return [(ket, one)]

        return ket_map

    def absorb_map(self):
        def ket_map(ket: BasisKet):
            if ket == self.doomed:
                return [(self.gamma, self.sqrt_p)]
            return []

        return ket_map

    def kraus_maps(self):
        return [self.pass_map(), self.absorb_map()]


def annihilation_channel(p: Fraction, backend: str = EXACT) -> AnnihilationChannel:
    """Build the annihilation channel for reaction probability p.

    On the exact backend both sqrt(p) and sqrt(1-p) must lie in Q(i, sqrt2)
    (p in {0, 1, 1/2} and friends); otherwise an UnrepresentableError asks
    for the float backend instead of approximating silently.
    """
    return AnnihilationChannel(Fraction(p), backend)


def kraus_gram(ket_maps, kets):
    """sum_i K_i^dagger K_i restricted to the given kets, as a dense dict.

    Used to verify Kraus completeness: the result must be the identity.
    """
    kets = list(kets)
    gram: Dict[Tuple[BasisKet, BasisKet], object] = {}
    for ket_map in ket_maps:
        images = {k: list(ket_map(k)) for k in kets}
        for a in kets:
            for b in kets:
                total = None
                for (xa, ca) in images[a]:
                    for (xb, cb) in images[b]:
                        if xa == xb:
                            term = amp.conj(ca) * cb
                            total = term if total is None else total + term
                if total is not None:
                    key = (a, b)
                    cur = gram.get(key)
                    gram[key] = total if cur is None else cur + total
    return gram


def apply_channel(rho: DensityMatrix, ch: AnnihilationChannel) -> DensityMatrix:
    """rho -> K_pass rho K_pass^dagger + K_abs rho K_abs^dagger."""
    rho._check_hermitian()
    out_pass = rho.apply_ket_map(ch.pass_map())
    out_abs = rho.apply_ket_map(ch.absorb_map())
    entries = dict(out_pass.entries)
    for key, val in out_abs.entries.items():
        cur = entries.get(key)
        entries[key] = val if cur is None else cur + val
    return DensityMatrix(entries, rho.backend, check=False)


def condition_on_no_absorption(rho: DensityMatrix):
    """Post-select on 'no photon seen': drop the sink row/column, renormalize.

    Returns (conditioned density matrix, surviving probability).
    """
    rho._check_hermitian()
    entries = {key: val for key, val in rho.entries.items()
               if ABSORBED not in key}
    surviving = DensityMatrix(entries, rho.backend, check=False).trace()
    if surviving == 0:
        raise AnnihilatedError("state fully absorbed; nothing to condition on")
    if rho.backend == EXACT:
        inv = amp.ONE / surviving
    else:
        inv = complex(1.0 / surviving)
    scaled = {key: val * inv for key, val in entries.items()}
    return DensityMatrix(scaled, rho.backend, check=False), surviving
