"""Result records produced by checks, sweeps and probes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

HOLDS = "holds"
VACUOUS = "vacuous"
VIOLATED = "violated"
EXTREMAL = "extremal_case"
VERDICTS = (HOLDS, VACUOUS, VIOLATED, EXTREMAL)


@dataclass
class CheckReport:
    """Verdict of one property check on one instance.

    ``residual`` is the exact amount by which the asserted inequality held
    (negative means it failed).  ``instance`` carries everything needed to
    rebuild the graph: a generator description, an edge mask or a graph6
    string, plus the parameters.  ``instance["in_range"]`` is False when the
    statement's order condition (n > r^8) does not hold; violations there
    are exploratory and not counterexamples.
    """

    property: str
    instance: dict
    hypothesis_holds: bool
    verdict: str
    branch: Optional[str] = None
    residual: Optional[Fraction] = None
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def in_range(self) -> bool:
        return bool(self.instance.get("in_range", True))

    @property
    def counterexample(self) -> bool:
        return self.verdict == VIOLATED and self.in_range


@dataclass
class SweepSummary:
    properties: list
    instances: int
    violations: int
    violating: list = field(default_factory=list)
    exploratory_violations: int = 0
    reports: int = 0
    wall_time: Optional[float] = None
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.violations != len(self.violating):
            raise ValueError("violation count must match the violation list")


@dataclass
class ProbeResult:
    best_graph: str  # graph6
    best_js: int
    ratio: Fraction
    steps: int
    seed: int
    constraint: dict
    history: list = field(default_factory=list)
    restarts: int = 1
    edges: Optional[int] = None

    def graph(self):
        from .io import parse_graph6

        return parse_graph6(self.best_graph)


def instance_dict(**kwargs: Any) -> dict:
    return {k: v for k, v in kwargs.items() if v is not None}
