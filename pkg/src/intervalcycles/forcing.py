"""Forcing between cycles, decided through periodic orbits of the connect-the-dots map.

beta forces alpha exactly when L_beta has a periodic orbit of type alpha.  Every
periodic orbit of L_beta follows some closed walk (loop) of the Markov digraph
G(beta): its t-th point sits in the interval I_{j_t}.  Along a loop the map is
a composition of affine pieces with integer data, so the candidate periodic
point is the fixed point of an affine map with integer slope and is rational.
Everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CapExceeded, NotALoop
from .markov import SignedDigraph, build_digraph, connect_the_dots
from .perm import Cycle, Permutation

__all__ = [
    "Loop",
    "OrbitReport",
    "loops_of_length",
    "orbit_from_loop",
    "orbit_type",
    "find_witness",
    "forces",
    "forced_types",
    "forcing_query",
    "DEFAULT_MAX_LOOP_LENGTH",
    "DEFAULT_MAX_LOOPS",
]

DEFAULT_MAX_LOOP_LENGTH = 16
DEFAULT_MAX_LOOPS = 200_000


@dataclass(frozen=True)
class Loop:
    """Closed walk j_0 -> j_1 -> ... -> j_{q-1} -> j_0, stored in least rotation."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __lt__(self, other: "Loop") -> bool:
        return (len(self), self.vertices) < (len(other), other.vertices)

    @classmethod
    def canonical(cls, vertices: Sequence[int]) -> "Loop":
        v = tuple(vertices)
        return cls(min(v[i:] + v[:i] for i in range(len(v))))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.vertices)) + "]"


@dataclass(frozen=True)
class OrbitReport:
    points: tuple[Fraction, ...]  # orbit order, starting in I_{j_0}
    least_period: int
    orbit_type: Cycle
    loop: Loop | None = None

    def to_json(self) -> dict:
        return {
            "loop": list(self.loop.vertices) if self.loop else None,
            "points": [f"{p.numerator}/{p.denominator}" for p in self.points],
            "orbit_type": list(self.orbit_type.images),
            "notation": self.orbit_type.notation(),
        }


def loops_of_length(
    g: SignedDigraph, q: int, max_length: int = DEFAULT_MAX_LOOP_LENGTH,
    max_loops: int = DEFAULT_MAX_LOOPS,
) -> list[Loop]:
    """All closed walks of length q in g up to rotation, sorted lexicographically.

    A walk is generated once, from its least vertex s, visiting only vertices
    >= s; of the rotations that start at s only the least one is kept.
    """
    if q < 1:
        raise ValueError("loop length must be positive")
    if q > max_length:
        raise CapExceeded(f"loop length {q} exceeds the cap {max_length}")
    d = g.n_vertices
    succ = [g.successors(i) for i in range(1, d + 1)]
    out: list[Loop] = []
    for s in range(1, d + 1):
        # back[t] = vertices >= s that reach s in exactly t steps staying >= s
        back = [{s}]
        for _ in range(q):
            back.append({v for v in range(s, d + 1) if any(w in back[-1] for w in succ[v - 1])})
        walk = [s]

        def dfs(v: int, remaining: int) -> None:
            if remaining == 0:
                if v == s:
                    cand = tuple(walk[:-1])
                    if Loop.canonical(cand).vertices == cand:
                        out.append(Loop(cand))
                        if len(out) > max_loops:
                            raise CapExceeded(f"more than {max_loops} loops of length {q}")
                return
            for w in succ[v - 1]:
                if w >= s and w in back[remaining - 1]:
                    walk.append(w)
                    dfs(w, remaining - 1)
                    walk.pop()

        if s in back[q]:
            dfs(s, q)
    return sorted(out)


def orbit_type(points: Sequence[Fraction], image: dict) -> Cycle:
    """Cycle induced on the sorted points by the map ``image``."""
    ordered = sorted(points)
    index = {x: i for i, x in enumerate(ordered, start=1)}
    return Cycle(index[image[x]] for x in ordered)


def _check_loop(g: SignedDigraph, loop: Loop) -> None:
    v = loop.vertices
    if not v:
        raise NotALoop("empty loop")
    for a, b in zip(v, v[1:] + v[:1]):
        if not (1 <= a <= g.n_vertices and 1 <= b <= g.n_vertices) or not g.has_edge(a, b):
            raise NotALoop(f"{loop} uses the missing edge v{a} -> v{b}")


def _trace(beta_map, loop: Loop, x: Fraction) -> list[Fraction]:
    """x_0 = x, x_{t+1} = piece_{j_t}(x_t); returns x_0 .. x_q."""
    xs = [x]
    for j in loop.vertices:
        xs.append(beta_map.piece(j)(xs[-1]))
    return xs


def _report(beta_map, loop: Loop, x: Fraction) -> OrbitReport:
    xs = _trace(beta_map, loop, x)
    q = len(loop)
    assert xs[q] == xs[0]
    p = next(p for p in range(1, q + 1) if q % p == 0 and xs[p] == xs[0])
    pts = tuple(xs[:p])
    image = {pts[t]: pts[(t + 1) % p] for t in range(p)}
    return OrbitReport(pts, p, orbit_type(pts, image), loop)


def orbit_from_loop(beta: Permutation, loop: Loop | Sequence[int]) -> OrbitReport | None:
    """The periodic orbit of L_beta that follows ``loop``, if there is one.

    Composing the pieces along the loop gives x -> S*x + C on the set of
    admissible starting points (those whose t-th iterate lies in I_{j_t}).
    S != 1: the unique fixed point C/(1-S), if admissible.  S == 1, C != 0: no
    periodic point.  S == 1, C == 0: every admissible point is periodic; the
    midpoint is the witness unless its period is shorter than the loop, in
    which case the point one third of the way in is tried as well.
    """
    if not isinstance(loop, Loop):
        loop = Loop(tuple(loop))
    g = build_digraph(beta)
    _check_loop(g, loop)
    lmap = connect_the_dots(beta)

    # x_t = a*x + b; collect the admissible range for x_0 as [lo, hi]
    a, b = Fraction(1), Fraction(0)
    lo, hi = Fraction(loop.vertices[0]), Fraction(loop.vertices[0] + 1)
    for t, j in enumerate(loop.vertices):
        if t > 0:
            # j <= a*x + b <= j + 1
            e1, e2 = (j - b) / a, (j + 1 - b) / a
            lo, hi = max(lo, min(e1, e2)), min(hi, max(e1, e2))
            if lo > hi:
                return None
        piece = lmap.piece(j)
        a, b = piece.slope * a, piece.slope * b + piece.intercept
    # x_q = a*x + b must come back to I_{j_0}, which the fixed point does automatically
    if a != 1:
        x = b / (1 - a)
        if not lo <= x <= hi:
            return None
        return _report(lmap, loop, x)
    if b != 0:
        return None
    best = _report(lmap, loop, (lo + hi) / 2)
    if best.least_period < len(loop) and lo < hi:
        alt = _report(lmap, loop, lo + (hi - lo) / 3)
        if alt.least_period > best.least_period:
            best = alt
    return best


def _beta_report(beta: Cycle) -> OrbitReport:
    pts = tuple(Fraction(k) for k in beta.orbit(1))
    return OrbitReport(pts, len(beta), beta, None)


def find_witness(
    beta: Cycle, alpha: Cycle, max_loop_length: int = DEFAULT_MAX_LOOP_LENGTH,
    max_loops: int = DEFAULT_MAX_LOOPS,
) -> OrbitReport | None:
    """An orbit of L_beta of type alpha, or None.  For alpha == beta: the integer orbit."""
    if alpha == beta:
        return _beta_report(beta)
    q = len(alpha)
    if q > max_loop_length:
        raise CapExceeded(f"|alpha| = {q} exceeds the loop length cap {max_loop_length}")
    g = build_digraph(beta)
    for loop in loops_of_length(g, q, max_loop_length, max_loops):
        rep = orbit_from_loop(beta, loop)
        if rep is not None and rep.least_period == q and rep.orbit_type == alpha:
            return rep
    return None


def forces(
    beta: Cycle, alpha: Cycle, max_loop_length: int = DEFAULT_MAX_LOOP_LENGTH,
    max_loops: int = DEFAULT_MAX_LOOPS,
) -> bool:
    return find_witness(beta, alpha, max_loop_length, max_loops) is not None


def forced_types(
    beta: Cycle, max_period: int, max_loop_length: int = DEFAULT_MAX_LOOP_LENGTH,
    max_loops: int = DEFAULT_MAX_LOOPS,
) -> list[Cycle]:
    """Orbit types of period <= max_period realised by L_beta, plus beta itself."""
    if max_period > max_loop_length:
        raise CapExceeded(f"max_period {max_period} exceeds the loop length cap {max_loop_length}")
    g = build_digraph(beta)
    found = {beta}
    for q in range(1, max_period + 1):
        for loop in loops_of_length(g, q, max_loop_length, max_loops):
            rep = orbit_from_loop(beta, loop)
            if rep is not None:
                found.add(rep.orbit_type)
    return sorted(found)


def forcing_query(
    beta: Cycle, alpha: Cycle, max_loop_length: int = DEFAULT_MAX_LOOP_LENGTH,
    max_loops: int = DEFAULT_MAX_LOOPS,
) -> dict:
    w = find_witness(beta, alpha, max_loop_length, max_loops)
    return {
        "beta": list(beta.images),
        "alpha": list(alpha.images),
        "forces": w is not None,
        "witness": w.to_json() if w is not None else None,
    }
