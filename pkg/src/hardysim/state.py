"""Basis labels, state vectors and density matrices for the two-particle system.

Two distinguishable species travel through their own interferometers: the
positron (plus arm) and the electron (minus arm). Path labels live in
{S, u, v, c, d} per arm; an extra orthogonal sink ket ("absorbed") carries
the annihilation-photon branch. Vacuum input ports play no role in any of
the computed quantities and are not modeled.

Amplitudes stay UNNORMALIZED; the squared norm is tracked separately so
that every probability is an exact rational even when the normalization
constant itself (e.g. 1/sqrt3) lies outside Q(i, sqrt2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Optional, Tuple

from . import amplitude as amp
from .amplitude import EXACT, FLOAT_TOL, ExactScalar
from .errors import EmptyStateError, NonHermitianError


class PathLabel(enum.IntEnum):
    """Interferometer path/port label; ordering fixes the canonical basis."""

    S = 0
    u = 1
    v = 2
    c = 3
    d = 4

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class BasisKet:
    """Joint outcome label: a path per species, or the absorbed-photon sink."""

    plus: Optional[PathLabel] = None
    minus: Optional[PathLabel] = None

    @classmethod
    def pair(cls, plus: PathLabel, minus: PathLabel) -> "BasisKet":
        return cls(plus, minus)

    @property
    def is_absorbed(self) -> bool:
        return self.plus is None

    def sort_key(self):
        if self.is_absorbed:
            return (1, 0, 0)
        return (0, int(self.plus), int(self.minus))

    def __str__(self) -> str:
        if self.is_absorbed:
            return "GAMMA"
        return f"e+:{self.plus} e-:{self.minus}"


ABSORBED = BasisKet()

KetMap = Callable[[BasisKet], Iterable[Tuple[BasisKet, object]]]


def _prune(amps: dict) -> dict:
    return {k: a for k, a in amps.items() if not amp.is_zero(a)}


class StateVector:
    """Finite map BasisKet -> amplitude with a cached exact squared norm."""

    def __init__(self, amps: Dict[BasisKet, object], backend: str = EXACT):
        self.backend = backend
        self.amps = _prune(amps)
        self._norm_sq = self._compute_norm_sq()

    def _compute_norm_sq(self):
        total = amp.ExactScalar() if self.backend == EXACT else 0.0
        for a in self.amps.values():
            total = total + a * amp.conj(a)
        return total

    def norm_sq(self):
        """Squared norm as Fraction (exact backend) or float."""
        return amp.real_part(self._norm_sq)

    def is_zero(self) -> bool:
        return not self.amps

    def amplitude(self, ket: BasisKet):
        if ket in self.amps:
            return self.amps[ket]
        return amp.ExactScalar() if self.backend == EXACT else 0.0

    def support(self):
        return set(self.amps)

    def scaled(self, factor) -> "StateVector":
        return StateVector({k: a * factor for k, a in self.amps.items()},
                           self.backend)

    def inner(self, other: "StateVector"):
        """<self|other> in the shared amplitude type."""
        total = amp.ExactScalar() if self.backend == EXACT else 0.0
        for k, a in self.amps.items():
            b = other.amps.get(k)
            if b is not None:
                total = total + amp.conj(a) * b
        return total

    def apply_ket_map(self, ket_map: KetMap) -> "StateVector":
        """Push every basis ket through a linear ket -> sum-of-kets map."""
        out: Dict[BasisKet, object] = {}
        for k, a in self.amps.items():
            for k2, c in ket_map(k):
                cur = out.get(k2)
                out[k2] = a * c if cur is None else cur + a * c
        return StateVector(out, self.backend)

    def probability(self, predicate: Callable[[BasisKet], bool]):
        """Born probability of the predicate; exact Fraction where possible."""
        if self.is_zero():
            raise EmptyStateError("empty state")
        kept = amp.ExactScalar() if self.backend == EXACT else 0.0
        for k, a in self.amps.items():
            if predicate(k):
                kept = kept + a * amp.conj(a)
        if self.backend == EXACT:
            return amp.real_part(kept / self._norm_sq)
        return kept.real / self._norm_sq.real

    def dump(self) -> str:
        """Canonical text form, one ket per line in basis order."""
        lines = []
        for k in sorted(self.amps, key=BasisKet.sort_key):
            a = self.amps[k]
            text = a.to_string() if isinstance(a, ExactScalar) else repr(a)
            lines.append(f"{k} | {text}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"StateVector({self.backend}, {{{self.dump()}}})"


def make_input(backend: str = EXACT) -> StateVector:
    """The source state |S+>|S->, one particle entering each interferometer."""
    return StateVector({BasisKet.pair(PathLabel.S, PathLabel.S):
                        amp.scalar_one(backend)}, backend)


def equal_up_to_global_phase(a: StateVector, b: StateVector,
                             strict: bool = False) -> bool:
    """|<a|b>|^2 == |a|^2 |b|^2, i.e. same ray. strict=True compares amplitudes."""
    if a.is_zero() or b.is_zero():
        raise EmptyStateError("empty state")
    if strict:
        if a.support() != b.support():
            return False
        return all(amp.is_zero(a.amps[k] - b.amps[k]) for k in a.amps)
    overlap = a.inner(b)
    lhs = overlap * amp.conj(overlap)
    rhs = a._norm_sq * b._norm_sq
    if a.backend == EXACT:
        return lhs == rhs
    return abs(lhs - rhs) <= FLOAT_TOL


class DensityMatrix:
    """Hermitian finite map (BasisKet, BasisKet) -> amplitude."""

    def __init__(self, entries: Dict[Tuple[BasisKet, BasisKet], object],
                 backend: str = EXACT, check: bool = True):
        self.backend = backend
        self.entries = _prune(entries)
        if check:
            self._check_hermitian()

    def _check_hermitian(self):
        for (a, b), val in self.entries.items():
            mirror = self.entries.get((b, a))
            if mirror is None:
                raise NonHermitianError(f"missing conjugate entry for ({a}, {b})")
            diff = val - amp.conj(mirror)
            ok = diff.is_zero() if self.backend == EXACT else abs(diff) <= FLOAT_TOL
            if not ok:
                raise NonHermitianError(f"entry ({a}, {b}) breaks Hermiticity")

    def entry(self, a: BasisKet, b: BasisKet):
        val = self.entries.get((a, b))
        if val is None:
            return amp.ExactScalar() if self.backend == EXACT else 0.0
        return val

    def kets(self):
        seen = set()
        for a, b in self.entries:
            seen.add(a)
            seen.add(b)
        return seen

    def trace(self):
        total = amp.ExactScalar() if self.backend == EXACT else 0.0
        for (a, b), val in self.entries.items():
            if a == b:
                total = total + val
        return amp.real_part(total)

    def purity(self):
        """trace(rho^2), computed as sum_ab rho(a,b) rho(b,a)."""
        total = amp.ExactScalar() if self.backend == EXACT else 0.0
        for (a, b), val in self.entries.items():
            other = self.entries.get((b, a))
            if other is not None:
                total = total + val * other
        return amp.real_part(total)

    def diagonal_probability(self, predicate: Callable[[BasisKet], bool]):
        total = amp.ExactScalar() if self.backend == EXACT else 0.0
        for (a, b), val in self.entries.items():
            if a == b and predicate(a):
                total = total + val
        return amp.real_part(total)

    def apply_ket_map(self, ket_map: KetMap) -> "DensityMatrix":
        """rho -> U rho U^dagger for U given as a linear ket map."""
        out: Dict[Tuple[BasisKet, BasisKet], object] = {}
        for (a, b), val in self.entries.items():
            for a2, ca in ket_map(a):
                for b2, cb in ket_map(b):
                    term = val * ca * amp.conj(cb)
                    key = (a2, b2)
                    cur = out.get(key)
                    out[key] = term if cur is None else cur + term
        return DensityMatrix(out, self.backend, check=False)

    def equals(self, other: "DensityMatrix") -> bool:
        keys = set(self.entries) | set(other.entries)
        for key in keys:
            diff = self.entry(*key) - other.entry(*key)
            ok = diff.is_zero() if self.backend == EXACT else abs(diff) <= FLOAT_TOL
            if not ok:
                return False
        return True

    def __repr__(self) -> str:
        n = len(self.kets())
        return f"DensityMatrix({self.backend}, support={n} kets, trace={self.trace()})"


def pure_to_density(sv: StateVector) -> DensityMatrix:
    """rho = |psi><psi| / <psi|psi>; unit trace, purity 1."""
    if sv.is_zero():
        raise EmptyStateError("empty state")
    norm = sv.norm_sq()
    if sv.backend == EXACT:
        inv = amp.ONE / norm
    else:
        inv = complex(1.0 / norm)
    entries = {}
    for a, va in sv.amps.items():
        for b, vb in sv.amps.items():
            entries[(a, b)] = va * amp.conj(vb) * inv
    return DensityMatrix(entries, sv.backend, check=False)
