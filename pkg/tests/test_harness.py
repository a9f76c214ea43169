import random
from fractions import Fraction

import pytest

from monideal import ConfigError, MonomialIdeal, integral_closure, is_m_primary, max_ideal_power
from monideal.harness import (
    PAPER_EXAMPLE,
    SweepConfig,
    check_binomial_corollary,
    check_equality_case,
    check_length_bound,
    check_mult_bound,
    check_paper_example,
    check_small_dim,
    check_weak_inclusion,
    ideal_rng,
    probe_small_dim_n4,
    random_ideal,
    sweep,
    verify_ideal,
)
from monideal.reports import CheckReport, Verdict, emit_json

F = Fraction
M = MonomialIdeal.maximal
A_2_3 = MonomialIdeal(2, [(2, 0), (0, 3)])
HOLDS, EQ, NA, BAD = Verdict.HOLDS, Verdict.EQUALITY, Verdict.NOT_APPLICABLE, Verdict.VIOLATED


def test_length_bound_examples():
    r = check_length_bound(PAPER_EXAMPLE, 1)
    assert r.verdict is HOLDS
    assert r.quantities["length"] == 40 and r.quantities["bound"] == F(27, 6)
    r = check_length_bound(max_ideal_power(2, 3), 1)
    assert r.verdict is HOLDS and r.quantities["length"] == 6 and r.quantities["bound"] == F(9, 2)
    assert check_length_bound(PAPER_EXAMPLE, F(1, 2)).verdict is NA


def test_length_bound_strict_vs_equality_in_dim_one():
    # n = 1: (x^d) at c = (1+k)/d gives exact equality, which is allowed
    r = check_length_bound(MonomialIdeal(1, [(4,)]), 1)
    assert r.verdict is EQ
    assert r.quantities["strict_required"] is False


def test_mult_bound_examples():
    r = check_mult_bound(max_ideal_power(2, 3), 1)
    assert r.verdict is EQ and r.quantities["multiplicity"] == 9
    r = check_mult_bound(PAPER_EXAMPLE, 1)
    assert r.verdict is HOLDS and r.quantities["bound"] == 27
    r = check_mult_bound(A_2_3, 2)
    assert r.verdict is HOLDS and r.quantities["k"] == 2 and r.quantities["bound"] == 4


def test_equality_case_examples():
    r = check_equality_case(max_ideal_power(2, 2), 1)
    assert r.verdict is EQ and r.quantities["closure_is_power_of_m"] == 2
    r = check_equality_case(A_2_3, 1)
    assert r.verdict is HOLDS and r.quantities["closure_is_power_of_m"] is None
    for a in (MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)]), MonomialIdeal(2, [(2, 0), (0, 2)])):
        assert check_equality_case(a, 1).verdict is EQ
    assert integral_closure(MonomialIdeal(2, [(2, 0), (0, 2)])) == max_ideal_power(2, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_equality_family(n, d, k):
    c = F(n + k, d)
    a = max_ideal_power(n, d)
    assert check_mult_bound(a, c).verdict is EQ
    r = check_equality_case(a, c)
    assert r.verdict is EQ and r.quantities["closure_is_power_of_m"] == d


def test_small_dim_examples():
    r = check_small_dim(PAPER_EXAMPLE)
    assert r.verdict is HOLDS
    # closure: 4u1 + 5u2 + 10u3 < 20 has 19 lattice points; a itself has 40
    assert r.quantities["length_closure"] == 19 and r.quantities["length"] == 40
    assert r.quantities["length_I_times_m_power"] == 10
    for d in range(2, 6):
        assert check_small_dim(MonomialIdeal(1, [(d,)])).verdict in (HOLDS, EQ)
    r = check_small_dim(max_ideal_power(2, 2))
    assert r.verdict is EQ and r.quantities["length_I_times_m_power"] == 3
    assert check_small_dim(max_ideal_power(4, 2)).verdict is NA
    assert check_small_dim(MonomialIdeal(2, [(1, 0), (0, 1)])).verdict is NA


def test_small_dim_probe_is_report_only():
    r = probe_small_dim_n4(max_ideal_power(4, 5))
    assert r.verdict is NA
    assert "inequality_observed" in r.quantities


def test_binomial_corollary_examples():
    r = check_binomial_corollary(PAPER_EXAMPLE)
    assert r.verdict is HOLDS and r.quantities["binomial"] == 10
    for n in (1, 2, 3):
        for k in range(3):
            assert check_binomial_corollary(max_ideal_power(n, n + k)).verdict is EQ
    r = check_binomial_corollary(A_2_3)
    assert r.verdict is HOLDS and r.quantities["k"] == 0 and r.quantities["binomial"] == 3


def test_weak_inclusion_examples():
    assert check_weak_inclusion(PAPER_EXAMPLE).verdict is HOLDS
    r = check_weak_inclusion(max_ideal_power(3, 2))
    assert r.verdict is HOLDS and r.quantities["first_inclusion_equality"] is True
    r = check_weak_inclusion(MonomialIdeal(2, [(2, 0), (0, 2)]))
    assert r.verdict is HOLDS and r.quantities["first_inclusion_equality"] is False


def test_paper_example():
    r = check_paper_example()
    assert r.verdict is HOLDS
    q = r.quantities
    assert q["multiplier_proper"] and not q["last_generator_in_I_times_m_power"]
    assert q["length"] == 40 and q["length_I_times_m_power"] == 10
    assert MonomialIdeal._derived(3, q["I_times_m_power"]["gens"]) == max_ideal_power(3, 3)
    variant = check_paper_example(MonomialIdeal(3, [(5, 0, 0), (0, 4, 0), (0, 0, 3)]))
    assert variant.verdict is NA and variant.quantities["report_only"]
    assert "last_generator_in_I_times_m_power" in variant.quantities
    assert check_paper_example(c=2).verdict is NA


def test_violated_needs_witness():
    with pytest.raises(ValueError):
        CheckReport("x", None, None, BAD, {})


def test_random_ideal_determinism():
    a = random_ideal(2, random.Random(42), 6)
    b = random_ideal(2, random.Random(42), 6)
    assert a == b and is_m_primary(a)
    seen = {random_ideal(3, ideal_rng(0, 3, i)) for i in range(20)}
    assert len(seen) > 1
    assert all(is_m_primary(x) for x in seen)
    with pytest.raises(ConfigError):
        random_ideal(2, random.Random(0), 1)


def test_sweep_config_validation():
    with pytest.raises(ConfigError):
        SweepConfig(dims=(5,))
    with pytest.raises(ConfigError):
        SweepConfig(checks=("nope",))
    with pytest.raises(ConfigError):
        SweepConfig(cs=(0,))


def test_sweep_determinism_and_no_violations():
    cfg = SweepConfig(dims=(2, 3), count=15, seed=3)
    one, two = sweep(cfg), sweep(SweepConfig(dims=(2, 3), count=15, seed=3))
    assert emit_json(one) == emit_json(two)
    assert one.summary["VIOLATED"] == 0
    assert emit_json(sweep(SweepConfig(dims=(2,), count=15, seed=4))) != emit_json(one)


def test_sweep_parallel_matches_serial():
    cfg = dict(dims=(2, 3), count=12, seed=5)
    serial, parallel = sweep(SweepConfig(**cfg)), sweep(SweepConfig(workers=2, **cfg))
    # the config echo records the worker count; the reports must not depend on it
    assert [r.to_dict() for r in serial.reports] == [r.to_dict() for r in parallel.reports]


def test_sweep_paper_example_only():
    doc = sweep(SweepConfig(count=0, checks=("paper_example",)))
    assert len(doc.reports) == 1 and doc.reports[0].verdict is HOLDS


def test_sweep_records_skips():
    from monideal.lattice import Limits

    doc = sweep(SweepConfig(dims=(2,), count=2, max_exp=6, checks=("length_bound",)))
    assert doc.skipped == []
    big = MonomialIdeal(3, [(400, 0, 0), (0, 400, 0), (0, 0, 400)], limits=Limits(max_box_points=10**6))
    doc = verify_ideal(big, [1], ["length_bound"])
    assert doc.skipped and doc.summary["skipped"] == 1


def test_verify_ideal_golden():
    doc = verify_ideal(PAPER_EXAMPLE, [1])
    assert doc.summary["VIOLATED"] == 0
    assert any(r.name == "paper_example" for r in doc.reports)
