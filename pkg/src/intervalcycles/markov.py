"""Connect-the-dots maps and their signed Markov digraphs.

For a cycle theta on {1..n}, the connect-the-dots map agrees with theta on the
integers and is affine on each unit interval I_i = [i, i+1].  Its digraph has
one vertex per I_i, signed by whether the map rises or falls there, and an
edge i -> j whenever the image of I_i covers I_j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EvenSwapCount, Inconsistent, NotABijection, NotACycle
from .perm import Cycle, Permutation, successor_candidate

__all__ = [
    "AffinePiece",
    "PiecewiseLinearMap",
    "SignedDigraph",
    "connect_the_dots",
    "build_digraph",
    "recover_cycle",
    "double_graph",
    "to_dot",
    "to_json",
    "from_json",
]


@dataclass(frozen=True)
class AffinePiece:
    """x -> slope*x + intercept, restricted to [left, left+1]."""

    left: int
    slope: int
    intercept: int

    def __call__(self, x):
        return self.slope * x + self.intercept

    def __str__(self) -> str:
        s, c = self.slope, self.intercept
        lin = {1: "x", -1: "-x"}.get(s, f"{s}x")
        if c == 0:
            return f"x -> {lin}"
        if lin.startswith("-"):
            return f"x -> {c} - {lin[1:]}"
        return f"x -> {lin} {'+' if c > 0 else '-'} {abs(c)}"


@dataclass(frozen=True)
class PiecewiseLinearMap:
    n: int
    pieces: tuple[AffinePiece, ...]

    def piece(self, i: int) -> AffinePiece:
        """The affine piece on I_i (1-indexed)."""
        return self.pieces[i - 1]

    def __call__(self, x):
        if not 1 <= x <= self.n:
            raise ValueError(f"{x} outside [1, {self.n}]")
        if self.n == 1:
            return x
        i = min(int(x), self.n - 1)  # floor for x >= 1; right endpoint uses last piece
        return self.pieces[i - 1](x)


def connect_the_dots(theta: Permutation) -> PiecewiseLinearMap:
    im = theta.images
    pieces = []
    for i in range(1, len(im)):
        slope = im[i] - im[i - 1]
        pieces.append(AffinePiece(i, slope, im[i - 1] - slope * i))
    return PiecewiseLinearMap(len(im), tuple(pieces))


@dataclass(frozen=True)
class SignedDigraph:
    """Vertices 1..n_vertices, signs "+"/"-", dense 0/1 adjacency (row = source)."""

    signs: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        d = len(self.signs)
        if len(self.adjacency) != d or any(len(r) != d for r in self.adjacency):
            raise ValueError("adjacency must be square and match the sign vector")
        if any(s not in "+-" or len(s) != 1 for s in self.signs):
            raise ValueError(f"signs must be '+' or '-': {self.signs}")

    @classmethod
    def from_lists(cls, signs: Iterable[str], adjacency: Iterable[Iterable[int]]):
        return cls(tuple(signs), tuple(tuple(int(v) for v in row) for row in adjacency))

    @property
    def n_vertices(self) -> int:
        return len(self.signs)

    def matrix(self) -> list[list[int]]:
        return [list(r) for r in self.adjacency]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i - 1][j - 1])

    def edges(self) -> list[tuple[int, int]]:
        """1-indexed edges in row-major order."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.adjacency)
            for j, v in enumerate(row)
            if v
        ]

    def successors(self, i: int) -> list[int]:
        return [j + 1 for j, v in enumerate(self.adjacency[i - 1]) if v]

    def induced(self, vertices: Sequence[int]) -> "SignedDigraph":
        """Induced subgraph on the given 1-indexed vertices, in the given order."""
        return SignedDigraph(
            tuple(self.signs[v - 1] for v in vertices),
            tuple(tuple(self.adjacency[u - 1][v - 1] for v in vertices) for u in vertices),
        )


def build_digraph(theta: Permutation) -> SignedDigraph:
    """G(theta); a single point (n = 1) gives the empty graph."""
    im = theta.images
    d = len(im) - 1
    signs = []
    rows = []
    for i in range(d):
        lo, hi = sorted((im[i], im[i + 1]))
        signs.append("+" if im[i] < im[i + 1] else "-")
        # I_j is covered iff lo <= j and j + 1 <= hi
        rows.append(tuple(1 if lo <= j and j + 1 <= hi else 0 for j in range(1, d + 1)))
    return SignedDigraph(tuple(signs), tuple(rows))


def recover_cycle(g: SignedDigraph) -> Cycle:
    """Invert :func:`build_digraph`.

    Row i covers the block [l, r] of intervals, so {theta(i), theta(i+1)} is
    {l, r+1}; the sign of v_i says which endpoint comes first.  Adjacent rows
    must agree on the shared value theta(i+1).
    """
    d = g.n_vertices
    if d == 0:
        return Cycle([1])
    values: list[int | None] = [None] * (d + 1)
    for i, row in enumerate(g.adjacency):
        cols = [j + 1 for j, v in enumerate(row) if v]
        if not cols:
            raise Inconsistent(f"vertex v{i + 1} has no outgoing edge")
        lo, hi = cols[0], cols[-1]
        if cols != list(range(lo, hi + 1)):
            raise Inconsistent(f"row {i + 1} is not a contiguous block")
        first, second = (lo, hi + 1) if g.signs[i] == "+" else (hi + 1, lo)
        if values[i] is not None and values[i] != first:
            raise Inconsistent(
                f"rows {i} and {i + 1} disagree on theta({i + 1}): {values[i]} vs {first}"
            )
        values[i] = first
        values[i + 1] = second
    try:
        p = Permutation(values)
    except NotABijection as exc:
        raise Inconsistent(str(exc)) from None
    if build_digraph(p) != g:
        raise Inconsistent("recovered map does not reproduce the digraph")
    if len(p.orbit(1)) != len(p):
        raise NotACycle(f"recovered permutation {p.image_list()} is not a single cycle")
    return Cycle(p.images)


def double_graph(g: SignedDigraph, swaps: Iterable[int]) -> SignedDigraph:
    """Digraph of the doubled cycle selected by an odd swap set."""
    swaps = sorted(set(swaps))
    if len(swaps) % 2 == 0:
        raise EvenSwapCount(f"swap set {swaps} has even size; the result would not be a cycle")
    theta = recover_cycle(g)
    return build_digraph(successor_candidate(theta, swaps))


def to_dot(g: SignedDigraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for i, s in enumerate(g.signs, start=1):
        lines.append(f'  v{i} [label="v{i}{s}"];')
    for i, j in g.edges():
        lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: SignedDigraph) -> dict:
    return {"n": g.n_vertices, "signs": list(g.signs), "edges": [list(e) for e in g.edges()]}


def from_json(obj: dict | str) -> SignedDigraph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    adj = [[0] * n for _ in range(n)]
    for i, j in obj["edges"]:
        adj[i - 1][j - 1] = 1
    return SignedDigraph.from_lists(obj["signs"], adj)
