"""Immediate successors by doubling, unimodal selection, and period-doubling cascades."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    CapExceeded,
    EvenSwapCount,
    FormulaViolation,
    MultipleUnimodalSuccessors,
    NoUnimodalSuccessor,
)
from .markov import build_digraph
from .perm import (
    UNIMODAL,
    Cycle,
    Permutation,
    is_cycle,
    modality,
    successor_candidate,
)
from .polynomial import IntPolynomial, charpoly, cyclotomic_like

__all__ = [
    "SuccessorSet",
    "Cascade",
    "enumerate_successors",
    "unimodal_successors",
    "unimodal_double",
    "cascade",
    "verify_factorization",
    "DEFAULT_SUCCESSOR_CAP",
    "DEFAULT_PERIOD_CAP",
]

DEFAULT_SUCCESSOR_CAP = 20
DEFAULT_PERIOD_CAP = 64

SwapSet = tuple[int, ...]


def swap_sets(n: int) -> Iterable[SwapSet]:
    """All subsets of {1..n} in binary-counter order (bit k-1 set <=> k in set)."""
    for b in range(1 << n):
        yield tuple(k for k in range(1, n + 1) if b >> (k - 1) & 1)


def char_poly_of(theta: Permutation) -> IntPolynomial:
    return charpoly(build_digraph(theta).adjacency)


@dataclass(frozen=True)
class SuccessorSet:
    base: Cycle
    cyclic: list[tuple[SwapSet, Cycle]]
    non_cyclic: list[tuple[SwapSet, Permutation]]

    def cycles(self) -> list[Cycle]:
        return [c for _, c in self.cyclic]

    def to_json(self, cyclic_only: bool = False) -> dict:
        out = {
            "base": list(self.base.images),
            "cyclic": [
                {"swaps": list(s), "images": list(c.images), "notation": c.notation()}
                for s, c in self.cyclic
            ],
        }
        if not cyclic_only:
            out["non_cyclic"] = [
                {"swaps": list(s), "images": list(p.images)} for s, p in self.non_cyclic
            ]
        return out


def enumerate_successors(theta: Cycle, cap: int = DEFAULT_SUCCESSOR_CAP) -> SuccessorSet:
    """Classify theta* o rho_S for every subset S of {1..n}."""
    n = len(theta)
    if n > cap:
        raise CapExceeded(f"enumerating 2^{n} swap sets exceeds the cap n <= {cap}")
    cyc: list[tuple[SwapSet, Cycle]] = []
    rest: list[tuple[SwapSet, Permutation]] = []
    for s in swap_sets(n):
        eta = successor_candidate(theta, s)
        if is_cycle(eta):
            cyc.append((s, Cycle(eta.images)))
        else:
            rest.append((s, eta))
    return SuccessorSet(theta, cyc, rest)


def _rise_then_fall_swap_sets(theta: Permutation) -> list[SwapSet]:
    """Swap sets whose doubled image sequence strictly rises, then strictly falls.

    Depth-first over pairs: pair k contributes (2t-1, 2t) unswapped or
    (2t, 2t-1) swapped, where t = theta(k).  A branch dies as soon as the
    prefix falls and then rises again, or falls at the very first step.
    """
    im = theta.images
    n = len(im)
    found: list[SwapSet] = []

    # rose: some rise seen (a fall before it means a negative leading sign)
    def dfs(k: int, last: int | None, falling: bool, rose: bool, chosen: list[int]):
        if k == n:
            if falling:
                found.append(tuple(chosen))
            return
        t = im[k]
        for swap in (False, True):
            pair = (2 * t, 2 * t - 1) if swap else (2 * t - 1, 2 * t)
            cur_last, cur_falling, cur_rose, ok = last, falling, rose, True
            for v in pair:
                if cur_last is not None:
                    if v > cur_last:
                        if cur_falling:
                            ok = False
                            break
                        cur_rose = True
                    else:
                        if not cur_rose:
                            ok = False
                            break
                        cur_falling = True
                cur_last = v
            if ok:
                if swap:
                    chosen.append(k + 1)
                dfs(k + 1, cur_last, cur_falling, cur_rose, chosen)
                if swap:
                    chosen.pop()

    dfs(0, None, False, False, [])
    return found


def unimodal_successors(theta: Cycle, exhaustive: bool = False) -> list[tuple[SwapSet, Cycle]]:
    """Cyclic successors of theta with modality (+,1), ordered by swap set.

    ``exhaustive=True`` filters all 2^n swap sets; the default prunes the
    search to rise-then-fall image sequences, which yields the same list.
    """
    n = len(theta)
    if exhaustive:
        candidates: Iterable[SwapSet] = (s for s in swap_sets(n) if len(s) % 2 == 1)
    else:
        candidates = (s for s in _rise_then_fall_swap_sets(theta) if len(s) % 2 == 1)
    out = []
    for s in candidates:
        eta = successor_candidate(theta, s)
        if is_cycle(eta) and modality(eta) == UNIMODAL:
            out.append((s, Cycle(eta.images)))
    return sorted(out, key=lambda sc: (sum(1 << (k - 1) for k in sc[0])))


def unimodal_double(theta: Cycle) -> Cycle:
    """The unique cyclic successor of theta with modality (+,1).

    (1) doubles to (12) by convention, since modality is undefined for n < 3.
    """
    if len(theta) == 1:
        return Cycle([2, 1])
    found = unimodal_successors(theta)
    if not found:
        raise NoUnimodalSuccessor(f"{theta} has no (+,1)-modal cyclic successor")
    if len(found) > 1:
        raise MultipleUnimodalSuccessors(
            f"{theta} has {len(found)} (+,1)-modal cyclic successors",
            [c for _, c in found],
        )
    return found[0][1]


@dataclass
class Cascade:
    seed: Cycle
    levels: list[Cycle] = field(default_factory=list)
    # polynomials[0] belongs to the seed, polynomials[i] to levels[i-1]
    polynomials: list[IntPolynomial] = field(default_factory=list)
    verified: list[bool] = field(default_factory=list)

    @property
    def period(self) -> int:
        return len(self.seed)

    @property
    def all_verified(self) -> bool:
        return all(self.verified)

    def level_of_period(self, p: int) -> Cycle | None:
        for c in [self.seed, *self.levels]:
            if len(c) == p:
                return c
        return None

    def to_json(self) -> dict:
        rows = []
        for i, (c, poly) in enumerate(zip([self.seed, *self.levels], self.polynomials)):
            rows.append(
                {
                    "level": i,
                    "cycle": list(c.images),
                    "notation": c.notation(),
                    "polynomial": poly.to_json(),
                    "polynomial_text": poly.to_text("λ"),
                    "verified": True if i == 0 else self.verified[i - 1],
                }
            )
        return {"seed": list(self.seed.images), "levels": rows}


def cascade_product(p0: IntPolynomial, k: int, levels: int) -> IntPolynomial:
    """p0 * prod_{i=1..levels} (l^(k*2^(i-1)) - 1)."""
    out = p0
    for i in range(1, levels + 1):
        out = out * cyclotomic_like(k * 2 ** (i - 1))
    return out


def cascade(
    seed: Cycle,
    levels: int,
    max_period: int = DEFAULT_PERIOD_CAP,
    verify: bool = True,
) -> Cascade:
    """Iterate :func:`unimodal_double` and certify the product formula at every level.

    With ``verify`` the first failed level raises :class:`FormulaViolation`;
    otherwise failures are only recorded in ``Cascade.verified``.
    """
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    k = len(seed)
    if k * 2**levels > max_period:
        raise CapExceeded(f"period {k}*2^{levels} exceeds the cap {max_period}")
    p0 = char_poly_of(seed)
    out = Cascade(seed, [], [p0], [])
    current = seed
    for ell in range(1, levels + 1):
        current = unimodal_double(current)
        p = char_poly_of(current)
        ok = p == cascade_product(p0, k, ell) and p == out.polynomials[-1] * cyclotomic_like(
            len(current) // 2
        )
        out.levels.append(current)
        out.polynomials.append(p)
        out.verified.append(ok)
        if verify and not ok:
            raise FormulaViolation(
                f"level {ell} ({current}): characteristic polynomial {p} "
                f"differs from the cascade product {cascade_product(p0, k, ell)}"
            )
    return out


def verify_factorization(theta: Cycle, eta_swaps: Iterable[int]) -> bool:
    """Whether P_eta == P_theta * (l^n - 1) for the successor picked by ``eta_swaps``."""
    swaps = sorted(set(eta_swaps))
    if len(swaps) % 2 == 0:
        raise EvenSwapCount(f"swap set {swaps} has even size")
    eta = successor_candidate(theta, swaps)
    return char_poly_of(eta) == char_poly_of(theta) * cyclotomic_like(len(theta))
