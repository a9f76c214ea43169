"""Executable checks of the length and multiplicity bounds for multiplier ideals.

Every check returns a :class:`CheckReport`.  The statements are theorems,
so a VIOLATED verdict always means an implementation bug; the report
carries the offending monomial or quantity as witness.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ConfigError, ResourceLimitError
from .lattice import (
    MonomialIdeal,
    colength,
    contains,
    ideal_contains,
    max_ideal_power,
    order,
    product,
)
from .multiplier import k_level, multiplier_ideal
from .newton import integral_closure, lct, multiplicity
from .radial import lemma_Q_check, uJ_exclusion_check
from .reports import CheckReport, ReportDocument, Verdict, ideal_payload

PAPER_EXAMPLE = MonomialIdeal(3, [(5, 0, 0), (0, 4, 0), (0, 0, 2)])


def _cmp_verdict(lhs, rhs, strict: bool = False) -> Verdict | None:
    """HOLDS / EQUALITY when lhs >= rhs (lhs > rhs if strict), else None."""
    if lhs > rhs:
        return Verdict.HOLDS
    if lhs == rhs and not strict:
        return Verdict.EQUALITY
    return None


def check_length_bound(a: MonomialIdeal, c) -> CheckReport:
    """length(R/a) >= (n+k)^n / (n! c^n), strictly when n >= 2."""
    c = Fraction(c)
    k = k_level(a, c)
    if k is None:
        return CheckReport("length_bound", a, c, Verdict.NOT_APPLICABLE, {"k": None})
    n = a.n
    length = colength(a)
    bound = Fraction((n + k) ** n) / (math.factorial(n) * c**n)
    q = {"k": k, "length": length, "bound": bound, "strict_required": n >= 2}
    verdict = _cmp_verdict(length, bound, strict=n >= 2)
    if verdict is None:
        return CheckReport("length_bound", a, c, Verdict.VIOLATED, q, {"length": length, "bound": bound})
    return CheckReport("length_bound", a, c, verdict, q)


def check_mult_bound(a: MonomialIdeal, c) -> CheckReport:
    """e(a) >= (n+k)^n / c^n."""
    c = Fraction(c)
    k = k_level(a, c)
    if k is None:
        return CheckReport("mult_bound", a, c, Verdict.NOT_APPLICABLE, {"k": None})
    e = multiplicity(a)
    bound = Fraction((a.n + k) ** a.n) / c**a.n
    q = {"k": k, "multiplicity": e, "bound": bound, "lct": lct(a)}
    verdict = _cmp_verdict(e, bound)
    if verdict is None:
        return CheckReport("mult_bound", a, c, Verdict.VIOLATED, q, {"multiplicity": e, "bound": bound})
    return CheckReport("mult_bound", a, c, verdict, q)


def closure_power(a: MonomialIdeal) -> int | None:
    """d when the integral closure of a is m^d, else None."""
    closure = integral_closure(a)
    d = order(closure)
    return d if closure == max_ideal_power(a.n, d) else None


def check_equality_case(a: MonomialIdeal, c) -> CheckReport:
    """e(a) c^n = (n+k)^n exactly when (n+k)/c = d is natural and the closure of a is m^d."""
    c = Fraction(c)
    k = k_level(a, c)
    if k is None:
        return CheckReport("equality_case", a, c, Verdict.NOT_APPLICABLE, {"k": None})
    n = a.n
    e = multiplicity(a)
    equal = e * c**n == (n + k) ** n
    d_closure = closure_power(a)
    ratio = Fraction(n + k) / c
    q = {
        "k": k,
        "multiplicity": e,
        "equality": equal,
        "ratio": ratio,
        "closure_is_power_of_m": d_closure,
    }
    if equal and not (ratio.denominator == 1 and d_closure == ratio):
        witness = {"direction": "only if", "ratio": ratio, "closure_power": d_closure}
        return CheckReport("equality_case", a, c, Verdict.VIOLATED, q, witness)
    if d_closure is not None and ratio == d_closure and not equal:
        witness = {"direction": "if", "multiplicity": e, "target": Fraction((n + k) ** n) / c**n}
        return CheckReport("equality_case", a, c, Verdict.VIOLATED, q, witness)
    return CheckReport("equality_case", a, c, Verdict.EQUALITY if equal else Verdict.HOLDS, q)


def check_small_dim(a: MonomialIdeal) -> CheckReport:
    """length(R/closure(a)) >= length(R / I(a) m^{n-1}) for n <= 3."""
    c = Fraction(1)
    if a.n > 3:
        return CheckReport("small_dim", a, c, Verdict.NOT_APPLICABLE, {"reason": "n > 3"})
    J = multiplier_ideal(a, 1)
    if J.is_unit:
        return CheckReport("small_dim", a, c, Verdict.NOT_APPLICABLE, {"reason": "I(a) = R"})
    rhs_ideal = product(J, max_ideal_power(a.n, a.n - 1))
    lhs = colength(integral_closure(a))
    rhs = colength(rhs_ideal)
    q = {
        "length_closure": lhs,
        "length": colength(a),
        "length_I_times_m_power": rhs,
        "multiplier_ideal": ideal_payload(J),
    }
    verdict = _cmp_verdict(lhs, rhs)
    if verdict is None:
        return CheckReport("small_dim", a, c, Verdict.VIOLATED, q, {"lhs": lhs, "rhs": rhs})
    return CheckReport("small_dim", a, c, verdict, q)


def probe_small_dim_n4(a: MonomialIdeal) -> CheckReport:
    """Report-only evaluation of the small-dimension inequality in dimension 4.

    Whether it extends beyond n = 3 is open, so this never asserts.
    """
    J = multiplier_ideal(a, 1)
    q: dict = {"n": a.n}
    if not J.is_unit:
        q["length_closure"] = colength(integral_closure(a))
        q["length_I_times_m_power"] = colength(product(J, max_ideal_power(a.n, a.n - 1)))
        q["inequality_observed"] = q["length_closure"] >= q["length_I_times_m_power"]
    return CheckReport("small_dim_probe", a, Fraction(1), Verdict.NOT_APPLICABLE, q)


def check_binomial_corollary(a: MonomialIdeal) -> CheckReport:
    """length(R/a) >= length(R/m^{n+k}) = C(2n+k-1, n) for n <= 3 and c = 1."""
    c = Fraction(1)
    if a.n > 3:
        return CheckReport("binomial_corollary", a, c, Verdict.NOT_APPLICABLE, {"reason": "n > 3"})
    k = k_level(a, 1)
    if k is None:
        return CheckReport("binomial_corollary", a, c, Verdict.NOT_APPLICABLE, {"k": None})
    n = a.n
    length = colength(a)
    bound = math.comb(2 * n + k - 1, n)
    q = {"k": k, "length": length, "binomial": bound}
    verdict = _cmp_verdict(length, bound)
    if verdict is None:
        return CheckReport("binomial_corollary", a, c, Verdict.VIOLATED, q, {"length": length, "binomial": bound})
    return CheckReport("binomial_corollary", a, c, verdict, q)


def check_weak_inclusion(a: MonomialIdeal) -> CheckReport:
    """a inside closure(a) inside I(a m^{n-1}), generator by generator."""
    c = Fraction(1)
    closure = integral_closure(a)
    target = multiplier_ideal(product(a, max_ideal_power(a.n, a.n - 1)), 1)
    q = {
        "closure": ideal_payload(closure),
        "multiplier_of_a_times_m_power": ideal_payload(target),
        "first_inclusion_equality": closure == a,
    }
    for g in a.gens:
        if not contains(closure, g):
            return CheckReport("weak_inclusion", a, c, Verdict.VIOLATED, q, {"not_in_closure": list(g)})
    for g in closure.gens:
        if not contains(target, g):
            return CheckReport("weak_inclusion", a, c, Verdict.VIOLATED, q, {"not_in_multiplier": list(g)})
    return CheckReport("weak_inclusion", a, c, Verdict.HOLDS, q)


def check_paper_example(a: MonomialIdeal | None = None, c=1) -> CheckReport:
    """The (x^5, y^4, z^2) example: I(a) proper, z^2 not in I(a) m^2, length still dominates.

    Any other ideal or c is evaluated as report-only diagnostics.
    """
    golden = a is None and Fraction(c) == 1
    a = PAPER_EXAMPLE if a is None else a
    c = Fraction(c)
    n = a.n
    J = multiplier_ideal(a, c)
    Jm = product(J, max_ideal_power(n, n - 1))
    last_pure = tuple(a.gens[-1]) if a.n == 3 else None
    q = {
        "multiplier_ideal": ideal_payload(J),
        "multiplier_proper": not J.is_unit,
        "I_times_m_power": ideal_payload(Jm),
        "length": colength(a),
        "length_I_times_m_power": colength(Jm),
        "a_inside_I_times_m_power": ideal_contains(Jm, a),
    }
    if last_pure is not None:
        q["last_generator"] = list(last_pure)
        q["last_generator_in_I_times_m_power"] = contains(Jm, last_pure)
    if not golden:
        q["report_only"] = True
        return CheckReport("paper_example", a, c, Verdict.NOT_APPLICABLE, q)
    failures = []
    if J.is_unit:
        failures.append("I(a) is trivial")
    if contains(Jm, (0, 0, 2)):
        failures.append("z^2 lies in I(a) m^2")
    if ideal_contains(Jm, a):
        failures.append("a lies in I(a) m^2")
    if colength(a) < colength(Jm):
        failures.append("length(R/a) < length(R/I(a) m^2)")
    if failures:
        return CheckReport("paper_example", a, c, Verdict.VIOLATED, q, failures)
    return CheckReport("paper_example", a, c, Verdict.HOLDS, q)


def random_ideal(n: int, rng: random.Random, max_exp: int = 6) -> MonomialIdeal:
    """Pure powers p_i in [2, max_exp] plus 0..2n random generators inside the box."""
    if max_exp < 2:
        raise ConfigError("max_exp must be at least 2")
    pure = [rng.randint(2, max_exp) for _ in range(n)]
    gens = [tuple(p if i == j else 0 for j in range(n)) for i, p in enumerate(pure)]
    for _ in range(rng.randint(0, 2 * n)):
        v = tuple(rng.randrange(p) for p in pure)
        if any(v):
            gens.append(v)
    return MonomialIdeal(n, gens)


def ideal_rng(seed: int, n: int, index: int) -> random.Random:
    # string seeds are hashed with SHA-512, independent of PYTHONHASHSEED
    return random.Random(f"monideal:{seed}:{n}:{index}")


C_CHECKS: dict[str, Callable] = {
    "length_bound": check_length_bound,
    "mult_bound": check_mult_bound,
    "equality_case": check_equality_case,
    "uJ_exclusion": uJ_exclusion_check,
}
IDEAL_CHECKS: dict[str, Callable] = {
    "small_dim": check_small_dim,
    "binomial_corollary": check_binomial_corollary,
    "weak_inclusion": check_weak_inclusion,
    "small_dim_probe": probe_small_dim_n4,
}
DEFAULT_CHECKS = (
    "length_bound",
    "mult_bound",
    "equality_case",
    "uJ_exclusion",
    "small_dim",
    "binomial_corollary",
    "weak_inclusion",
)
ALL_CHECKS = tuple(C_CHECKS) + tuple(IDEAL_CHECKS) + ("lemma_Q", "paper_example")


@dataclass
class SweepConfig:
    dims: tuple[int, ...] = (2, 3)
    count: int | dict[int, int] = 200
    seed: int = 0
    max_exp: int = 6
    cs: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
    checks: tuple[str, ...] = DEFAULT_CHECKS
    workers: int = 1
    lemma_q_resolution: dict[int, int] = field(default_factory=lambda: {2: 512, 3: 64})

    def __post_init__(self):
        self.dims = tuple(int(n) for n in self.dims)
        self.cs = tuple(Fraction(c) for c in self.cs)
        self.checks = tuple(self.checks)
        if any(not 1 <= n <= 4 for n in self.dims):
            raise ConfigError("sweep dimensions must lie in 1..4")
        if any(c <= 0 for c in self.cs):
            raise ConfigError("c values must be positive")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ConfigError(f"unknown checks {sorted(unknown)}")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")

    def count_for(self, n: int) -> int:
        if isinstance(self.count, dict):
            return int(self.count.get(n, 0))
        return int(self.count)

    def echo(self) -> dict:
        d = asdict(self)
        d["dims"] = list(self.dims)
        d["cs"] = list(self.cs)
        d["checks"] = list(self.checks)
        if isinstance(self.count, dict):
            d["count"] = {str(k): v for k, v in self.count.items()}
        d["lemma_q_resolution"] = {str(k): v for k, v in self.lemma_q_resolution.items()}
        return d


def run_checks(a: MonomialIdeal, cs: Sequence[Fraction], checks: Sequence[str], config: SweepConfig | None = None):
    """All selected checks on one ideal; returns (reports, skipped)."""
    reports: list[CheckReport] = []
    skipped: list[dict] = []

    def attempt(name, fn, *args):
        try:
            reports.append(fn(*args))
        except ResourceLimitError as exc:
            skipped.append({"check": name, "ideal": ideal_payload(a), "reason": str(exc)})

    for name in checks:
        if name in C_CHECKS:
            for c in cs:
                attempt(name, C_CHECKS[name], a, c)
        elif name in IDEAL_CHECKS:
            if name == "small_dim_probe" and a.n != 4:
                continue
            attempt(name, IDEAL_CHECKS[name], a)
        elif name == "lemma_Q":
            if a.n in (2, 3):
                res = (config.lemma_q_resolution if config else {2: 512, 3: 64})[a.n]
                for c in cs:
                    attempt(name, lemma_Q_check, a, c, res)
    return reports, skipped


def _sweep_job(args):
    config, n, index = args
    a = random_ideal(n, ideal_rng(config.seed, n, index), config.max_exp)
    return run_checks(a, config.cs, config.checks, config)


def sweep(config: SweepConfig) -> ReportDocument:
    """Run the selected checks over the seeded random family times the c list."""
    reports: list[CheckReport] = []
    skipped: list[dict] = []
    if "paper_example" in config.checks:
        reports.append(check_paper_example())
    jobs = [(config, n, i) for n in config.dims for i in range(config.count_for(n))]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_sweep_job, jobs, chunksize=8))
    else:
        results = [_sweep_job(j) for j in jobs]
    for reps, skips in results:
        reports.extend(reps)
        skipped.extend(skips)
    return ReportDocument(config.echo(), reports, skipped)


def verify_ideal(a: MonomialIdeal, cs: Sequence = (1,), checks: Sequence[str] | None = None) -> ReportDocument:
    """Every applicable check on a single ideal."""
    cs = tuple(Fraction(c) for c in cs)
    if checks is None:
        checks = list(DEFAULT_CHECKS)
        if a.n == 4:
            checks.append("small_dim_probe")
    reports, skipped = run_checks(a, cs, checks)
    if a == PAPER_EXAMPLE:
        reports.append(check_paper_example())
    config = {"ideal": ideal_payload(a), "cs": list(cs), "checks": list(checks)}
    return ReportDocument(config, reports, skipped)
