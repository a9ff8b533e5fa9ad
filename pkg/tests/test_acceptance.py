"""Acceptance suite: one test per exit criterion, with a pass/fail line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
"""

import functools
import random
from fractions import Fraction

from hardysim.amplitude import EXACT, FLOAT, ExactScalar, I, ONE
from hardysim.bosonic import (BosonicState, apply_bs_bosonic,
                              hom_coincidence_probability)
from hardysim.hardy import ScenarioConfig, full_table, run_scenario
from hardysim.lhv import ConstraintSet, audit, quantum_constraints
from hardysim.measurement import (annihilation_channel, apply_channel,
                                  condition_on_no_absorption, hardy_projector,
                                  project_knowledge)
from hardysim.optics import MINUS, PLUS, apply_bs, apply_bs1_pair
from hardysim.state import (ABSORBED, BasisKet, DensityMatrix, PathLabel,
                            StateVector, make_input, pure_to_density)
from test_state import random_state

S, u, v, c, d = PathLabel


def ket(plus, minus):
    return BasisKet.pair(plus, minus)


def criterion(number, description):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {number} FAIL: {description}")
                raise
            print(f"criterion {number} PASS: {description}")
        return wrapper
    return deco


@criterion(1, "input through both first beam splitters, exact amplitudes")
def test_criterion_1():
    out = apply_bs1_pair(make_input())
    half = ExactScalar.from_fraction(Fraction(1, 2))
    assert out.amps == {
        ket(v, v): half,
        ket(v, u): I * half,
        ket(u, v): I * half,
        ket(u, u): -half,
    }


@criterion(2, "knowledge projection: relative amplitudes {1,i,i}, survival 3/4")
def test_criterion_2():
    sv = apply_bs1_pair(make_input())
    projected, survival = project_knowledge(sv, hardy_projector())
    assert survival == Fraction(3, 4)
    base = projected.amps[ket(v, v)]
    assert projected.amps[ket(v, u)] == I * base
    assert projected.amps[ket(u, v)] == I * base
    assert projected.support() == {ket(v, v), ket(v, u), ket(u, v)}
    assert projected.probability(lambda k: k == ket(u, u)) == 0


@criterion(3, "both BS2 removed: support {dd,cd,dc}, amplitudes {1,i,i}, P(cc)=0")
def test_criterion_3():
    final, table = run_scenario(ScenarioConfig(False, False))
    assert final.support() == {ket(d, d), ket(c, d), ket(d, c)}
    base = final.amps[ket(d, d)]
    assert final.amps[ket(c, d)] == I * base
    assert final.amps[ket(d, c)] == I * base
    assert table.conditioned().prob("c", "c") == 0


@criterion(4, "Hardy chain: three exact zeros, 1/12, 1/16 and gamma 1/4")
def test_criterion_4():
    tables = full_table()
    assert tables["OO"].prob("c", "c") == 0
    assert tables["IO"].prob("d", "d") == 0
    assert tables["OI"].prob("d", "d") == 0
    assert tables["II"].prob("d", "d") == Fraction(1, 12)
    _, uncond = run_scenario(ScenarioConfig(True, True))
    assert uncond.prob("d", "d") == Fraction(1, 16)
    assert uncond.gamma_prob == Fraction(1, 4)
    # float backend, same chain to 1e-12
    tables_f = full_table(backend=FLOAT)
    assert abs(tables_f["OO"].prob("c", "c")) <= 1e-12
    assert abs(tables_f["IO"].prob("d", "d")) <= 1e-12
    assert abs(tables_f["OI"].prob("d", "d")) <= 1e-12
    assert abs(tables_f["II"].prob("d", "d") - 1 / 12) <= 1e-12
    _, uncond_f = run_scenario(ScenarioConfig(True, True, backend=FLOAT))
    assert abs(uncond_f.prob("d", "d") - 1 / 16) <= 1e-12
    assert abs(uncond_f.gamma_prob - 1 / 4) <= 1e-12


@criterion(5, "channel consistency: p=1 factorization, p=0 limit, traces, mixing")
def test_criterion_5():
    sv = apply_bs1_pair(make_input())
    rho = pure_to_density(sv)
    # p=1: density path equals pure path, exact density equality
    out = apply_channel(rho, annihilation_channel(Fraction(1)))
    conditioned, surviving = condition_on_no_absorption(out)
    projected, survival = project_knowledge(sv, hardy_projector())
    assert surviving == survival
    assert conditioned.equals(pure_to_density(projected))
    # p=0 with both BS2 in: certain double detection at c
    _, baseline = run_scenario(ScenarioConfig(True, True, Fraction(0)))
    assert baseline.prob("c", "c") == 1
    # trace preservation
    for p in (Fraction(0), Fraction(1, 2), Fraction(1)):
        assert apply_channel(rho, annihilation_channel(p)).trace() == 1
    sv_f = apply_bs1_pair(make_input(FLOAT))
    out_f = apply_channel(pure_to_density(sv_f),
                          annihilation_channel(Fraction(1, 4), FLOAT))
    assert abs(out_f.trace() - 1.0) <= 1e-12
    # p=1/2 mixes: full state and particle block both lose purity
    out_half = apply_channel(rho, annihilation_channel(Fraction(1, 2)))
    assert out_half.purity() < 1
    block = DensityMatrix({k: val for k, val in out_half.entries.items()
                           if ABSORBED not in k}, check=False)
    assert block.purity() < 1


@criterion(6, "LHV audit: contradiction, and removing any zero flips it")
def test_criterion_6():
    cs = quantum_constraints()
    verdict = audit(cs)
    assert verdict.contradiction
    assert len(verdict.surviving_strategies) + len(verdict.eliminations) == 16
    for i in range(len(cs.zero_events)):
        reduced = cs.zero_events[:i] + cs.zero_events[i + 1:]
        assert not audit(ConstraintSet(reduced, cs.positive_event)).contradiction


@criterion(7, "HOM: coincidence exactly 0; single-photon sector matches optics")
def test_criterion_7():
    assert hom_coincidence_probability() == 0
    one_photon = apply_bs_bosonic(BosonicState.single((1, 0)), 0, 1)
    particle = apply_bs(StateVector({ket(u, S): ONE}), PLUS, (u, v), (c, d))
    assert one_photon.amps[(1, 0)] == particle.amps[ket(c, S)]
    assert one_photon.amps[(0, 1)] == particle.amps[ket(d, S)]
    other = apply_bs_bosonic(BosonicState.single((0, 1)), 0, 1)
    particle_v = apply_bs(StateVector({ket(v, S): ONE}), PLUS, (u, v), (c, d))
    assert other.amps[(1, 0)] == particle_v.amps[ket(c, S)]
    assert other.amps[(0, 1)] == particle_v.amps[ket(d, S)]


@criterion(8, "backend agreement on every probability to 1e-12")
def test_criterion_8():
    for p in (Fraction(0), Fraction(1, 2), Fraction(1)):
        for bs2_plus in (False, True):
            for bs2_minus in (False, True):
                _, te = run_scenario(ScenarioConfig(bs2_plus, bs2_minus, p))
                _, tf = run_scenario(
                    ScenarioConfig(bs2_plus, bs2_minus, p, FLOAT))
                for key in te.rows:
                    assert abs(float(te.rows[key]) - tf.rows[key]) <= 1e-12
                assert abs(float(te.gamma_prob) - tf.gamma_prob) <= 1e-12
    assert abs(float(hom_coincidence_probability())
               - hom_coincidence_probability(FLOAT)) <= 1e-12


@criterion(9, "property suites: unitarity, field axioms, table normalization")
def test_criterion_9():
    rng = random.Random(101)
    # unitarity: inner products preserved on 1000 random state pairs
    for _ in range(1000):
        a = random_state(rng)
        b = random_state(rng)
        a2 = apply_bs(a, MINUS, (u, v), (c, d))
        b2 = apply_bs(b, MINUS, (u, v), (c, d))
        assert a2.inner(b2) == a.inner(b)
    # field axioms on 1000 random scalar triples
    def rand_scalar():
        return ExactScalar(*[Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                             for _ in range(4)])
    one = ExactScalar.from_fraction(1)
    for _ in range(1000):
        x, y, z = rand_scalar(), rand_scalar(), rand_scalar()
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if not x.is_zero():
            assert x * x.inverse() == one
    # table normalization across the p grid and all four layouts
    grid = [(Fraction(0), EXACT), (Fraction(1, 4), FLOAT),
            (Fraction(1, 2), EXACT), (Fraction(1), EXACT)]
    for p, backend in grid:
        for bs2_plus in (False, True):
            for bs2_minus in (False, True):
                _, table = run_scenario(
                    ScenarioConfig(bs2_plus, bs2_minus, p, backend))
                total = sum(table.rows.values()) + table.gamma_prob
                cond_total = sum(table.conditioned().rows.values())
                if backend == EXACT:
                    assert total == 1 and cond_total == 1
                else:
                    assert abs(total - 1.0) <= 1e-12
                    assert abs(cond_total - 1.0) <= 1e-12
