"""Numeric attractors of the logistic family f_a(x) = a x (1 - x).

Attractors are found by plain iteration from the critical point x0 = 0.5,
which lies in the basin of any attracting cycle of a unimodal map.  The orbit
type of a detected cycle is read off the sorted points, the same way it is
for exact orbits of connect-the-dots maps, so the two can be compared.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .errors import DegenerateOrbit, DynamicsError, NoAttractorDetected
from .perm import Cycle
from .successors import cascade

__all__ = [
    "LogisticParams",
    "AttractorReport",
    "ScanSample",
    "Transition",
    "ScanResult",
    "f",
    "iterate",
    "scan_bifurcations",
    "refine_transition",
    "certify_cascade",
]


def f(a: float, x: float) -> float:
    return a * x * (1.0 - x)


@dataclass(frozen=True)
class LogisticParams:
    a: float = 3.2
    burn_in: int = 100_000
    max_period: int = 64
    tol: float = 1e-9
    x0: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.a <= 4.0:
            raise ValueError(f"a = {self.a} outside [0, 4]")
        if self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")
        if self.max_period < 1:
            raise ValueError("max_period must be >= 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if not 0.0 < self.x0 < 1.0:
            raise ValueError(f"x0 = {self.x0} outside (0, 1)")


@dataclass(frozen=True)
class AttractorReport:
    a: float
    period: int
    points: tuple[float, ...]  # sorted ascending
    orbit_type: Cycle

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "period": self.period,
            "points": list(self.points),
            "orbit_type": list(self.orbit_type.images),
            "notation": self.orbit_type.notation(),
        }


def _burn_in(a: np.ndarray, x0: float, steps: int) -> np.ndarray:
    """Iterate every parameter in ``a`` side by side; same float ops as :func:`f`."""
    x = np.full_like(a, x0, dtype=np.float64)
    for _ in range(steps):
        x = a * x * (1.0 - x)
    return x


def _detect(a: float, x: float, params: LogisticParams) -> AttractorReport:
    p_max, tol = params.max_period, params.tol
    xs = [x]
    for _ in range(2 * p_max):
        xs.append(f(a, xs[-1]))
    period = None
    # closure must hold over p consecutive offsets, not just one
    for p in range(1, p_max + 1):
        if all(abs(xs[t + p] - xs[t]) < tol for t in range(p)):
            period = p
            break
    if period is None:
        raise NoAttractorDetected(f"no cycle of period <= {p_max} at a = {a}")
    orbit = xs[:period]
    ordered = sorted(orbit)
    gaps = [v - u for u, v in zip(ordered, ordered[1:])]
    if gaps and min(gaps) <= tol:
        raise DegenerateOrbit(f"orbit points closer than tol = {tol} at a = {a}")
    images = []
    for x_i in ordered:
        y = f(a, x_i)
        k = min(range(period), key=lambda j: abs(ordered[j] - y))
        if abs(ordered[k] - y) > tol:
            raise NoAttractorDetected(f"image of {x_i} matches no orbit point at a = {a}")
        images.append(k + 1)
    return AttractorReport(a, period, tuple(ordered), Cycle(images))


def iterate(params: LogisticParams) -> AttractorReport:
    """Burn in from x0, then find the least period and the orbit type of the attractor."""
    a, x = params.a, params.x0
    for _ in range(params.burn_in):
        x = a * x * (1.0 - x)
    return _detect(a, x, params)


@dataclass(frozen=True)
class ScanSample:
    a: float
    period: int | None
    error: str | None = None


@dataclass(frozen=True)
class Transition:
    a: float  # midpoint of the bracket
    lo: float
    hi: float
    period_from: int | None
    period_to: int


@dataclass
class ScanResult:
    samples: list[ScanSample]

    def doublings(self) -> list[Transition]:
        """p -> 2p changes between consecutive samples with a detected period."""
        seen = [s for s in self.samples if s.period is not None]
        return [
            Transition((u.a + v.a) / 2, u.a, v.a, u.period, v.period)
            for u, v in zip(seen, seen[1:])
            if v.period == 2 * u.period
        ]

    def onsets(self, period: int) -> list[Transition]:
        """Samples where ``period`` appears after any other state, including none."""
        out = []
        for u, v in zip(self.samples, self.samples[1:]):
            if v.period == period and u.period != period:
                out.append(Transition((u.a + v.a) / 2, u.a, v.a, u.period, period))
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "period"])
        for s in self.samples:
            w.writerow([repr(s.a), "none" if s.period is None else s.period])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "samples": [{"a": s.a, "period": s.period, "error": s.error} for s in self.samples],
            "doublings": [
                {"a": t.a, "lo": t.lo, "hi": t.hi, "from": t.period_from, "to": t.period_to}
                for t in self.doublings()
            ],
        }


def scan_bifurcations(
    a_from: float, a_to: float, step: float, params: LogisticParams | None = None
) -> ScanResult:
    """Detected attractor period at a_from, a_from + step, ..., up to a_to."""
    if not a_from < a_to:
        raise ValueError("a_from must be below a_to")
    if not step > 0:
        raise ValueError("step must be positive")
    params = params or LogisticParams()
    count = int(math.floor((a_to - a_from) / step + 1e-9)) + 1
    grid = np.array([a_from + i * step for i in range(count)])
    states = _burn_in(grid, params.x0, params.burn_in)
    samples = []
    for a, x in zip(grid.tolist(), states.tolist()):
        try:
            rep = _detect(a, x, replace(params, a=a))
            samples.append(ScanSample(a, rep.period))
        except DynamicsError as exc:
            samples.append(ScanSample(a, None, type(exc).__name__))
    return ScanResult(samples)


def _period_or_none(a: float, params: LogisticParams) -> int | None:
    try:
        return iterate(replace(params, a=a)).period
    except DynamicsError:
        return None


def refine_transition(
    lo: float, hi: float, params: LogisticParams | None = None, steps: int = 40
) -> float:
    """Bisect [lo, hi] on the detected period; returns the final midpoint.

    The period at ``lo`` is taken as the "before" state; each step keeps the
    half where the period still changes.  At most 40 steps are taken.
    """
    params = params or LogisticParams()
    before = _period_or_none(lo, params)
    for _ in range(min(steps, 40)):
        mid = (lo + hi) / 2
        if _period_or_none(mid, params) == before:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class CertificateRow:
    a: float
    period: int | None
    detected: Cycle | None
    expected: Cycle | None
    error: str | None = None

    @property
    def match(self) -> bool:
        return self.detected is not None and self.detected == self.expected


@dataclass
class CascadeCertificate:
    seed: Cycle
    rows: list[CertificateRow]

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self) -> dict:
        def c(x):
            return None if x is None else x.notation()

        return {
            "seed": list(self.seed.images),
            "rows": [
                {
                    "a": r.a,
                    "period": r.period,
                    "detected": c(r.detected),
                    "expected": c(r.expected),
                    "match": r.match,
                    "error": r.error,
                }
                for r in self.rows
            ],
            "all_match": self.all_match,
        }


def certify_cascade(
    a_values: Sequence[float], seed: Cycle, params: LogisticParams | None = None
) -> CascadeCertificate:
    """Compare numeric orbit types with the symbolic cascade grown from ``seed``."""
    params = params or LogisticParams()
    k = len(seed)
    detections: list[tuple[float, AttractorReport | None, str | None]] = []
    for a in a_values:
        try:
            detections.append((a, iterate(replace(params, a=a)), None))
        except DynamicsError as exc:
            detections.append((a, None, f"{type(exc).__name__}: {exc}"))
    levels = 0
    for _, rep, _ in detections:
        if rep is not None and rep.period % k == 0:
            ratio = rep.period // k
            if ratio & (ratio - 1) == 0:
                levels = max(levels, ratio.bit_length() - 1)
    symbolic = cascade(seed, levels, max_period=max(k * 2**levels, 1))
    rows = []
    for a, rep, err in detections:
        if rep is None:
            rows.append(CertificateRow(a, None, None, None, err))
        else:
            rows.append(CertificateRow(a, rep.period, rep.orbit_type, symbolic.level_of_period(rep.period)))
    return CascadeCertificate(seed, rows)
