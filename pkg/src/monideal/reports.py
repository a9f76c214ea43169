"""Check reports and their canonical JSON encoding."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import __version__
from .lattice import MonomialIdeal


class Verdict(enum.Enum):
    HOLDS = "Holds"
    EQUALITY = "HoldsWithEquality"
    NOT_APPLICABLE = "NotApplicable"
    VIOLATED = "VIOLATED"


@dataclass
class CheckReport:
    name: str
    ideal: MonomialIdeal | None
    c: Fraction | None
    verdict: Verdict
    quantities: dict[str, Any] = field(default_factory=dict)
    witness: Any = None

    def __post_init__(self):
        if self.verdict is Verdict.VIOLATED and self.witness is None:
            raise ValueError(f"{self.name}: a VIOLATED report must carry a witness")

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.VIOLATED

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "ideal": None if self.ideal is None else ideal_payload(self.ideal),
            "c": None if self.c is None else self.c,
            "verdict": self.verdict.value,
            "quantities": self.quantities,
            "witness": self.witness,
        }


def tally(reports) -> dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for r in reports:
        counts[r.verdict.value] += 1
    return counts


def ideal_payload(a: MonomialIdeal) -> dict:
    return {"n": a.n, "gens": [list(g) for g in a.gens]}


def ideal_from_payload(obj: dict) -> MonomialIdeal:
    return MonomialIdeal(obj["n"], [tuple(g) for g in obj["gens"]])


@dataclass
class ReportDocument:
    config: dict
    reports: list[CheckReport]
    skipped: list[dict] = field(default_factory=list)
    results: list[dict] = field(default_factory=list)
    version: str = __version__

    @property
    def summary(self) -> dict[str, int]:
        out = tally(self.reports)
        out["skipped"] = len(self.skipped)
        return out

    def to_dict(self) -> dict:
        return {
            "tool": {"name": "monideal", "version": self.version},
            "config": self.config,
            "reports": [r.to_dict() for r in self.reports],
            "skipped": self.skipped,
            "results": self.results,
            "summary": self.summary,
        }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, MonomialIdeal):
        return ideal_payload(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(x) for x in obj]
    if hasattr(obj, "to_dict"):
        return _jsonable(obj.to_dict())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def emit_json(doc) -> bytes:
    """Canonical JSON: sorted keys, rationals as decimal-string pairs, trailing newline."""
    payload = _jsonable(doc)
    text = json.dumps(
        payload, sort_keys=True, ensure_ascii=False, allow_nan=False, separators=(",", ":")
    )
    return (text + "\n").encode("utf-8")


def decode_rational(obj) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
