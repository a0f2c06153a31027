"""Permutations and cyclic permutations of {1..n}, stored as 1-indexed image tables.

``Permutation((3, 4, 2, 1))`` is the map 1->3, 2->4, 3->2, 4->1.  Composition
follows the usual convention ``compose(f, g)(x) == f(g(x))``.

The doubling machinery lives here too: :func:`star` spreads a cycle over
``2n`` points, :func:`rho` is the transposition of the pair ``(2s-1, 2s)``, and
:func:`successor_candidate` composes the two.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CycleSyntaxError,
    LengthMismatch,
    NotABijection,
    NotASingleCycle,
    OutOfRange,
    TooShort,
)

__all__ = [
    "Permutation",
    "Cycle",
    "Modality",
    "parse_cycle",
    "compose",
    "sign",
    "modality",
    "star",
    "rho",
    "successor_candidate",
    "is_cycle",
    "all_cycles",
]


class Permutation:
    """A bijection of {1..n} given by its image list."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(v) for v in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise NotABijection(f"{list(images)} is not a bijection of 1..{n}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self):
        return iter(self.images)

    # Cycle and Permutation with equal images compare equal.
    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return (len(self), self.images) < (len(other), other.images)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.images)})"

    def __str__(self) -> str:
        return self.image_list()

    def image_list(self) -> str:
        return ",".join(str(v) for v in self.images)

    def orbit(self, start: int = 1) -> list[int]:
        out = [start]
        x = self(start)
        while x != start:
            out.append(x)
            x = self(x)
        return out

    def cycles(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for i in range(1, len(self) + 1):
            if i not in seen:
                orb = self.orbit(i)
                seen.update(orb)
                out.append(orb)
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return Permutation(range(1, n + 1))


class Cycle(Permutation):
    """A cyclic permutation: the orbit of 1 has full length n."""

    __slots__ = ()

    def __init__(self, images: Iterable[int]):
        super().__init__(images)
        if len(self.orbit(1)) != len(self.images):
            raise NotASingleCycle(f"{list(self.images)} is not a single cycle")

    def notation(self) -> str:
        """Cycle notation starting at 1, juxtaposed digits when n <= 9."""
        orb = self.orbit(1)
        if len(orb) <= 9:
            return "(" + "".join(str(k) for k in orb) + ")"
        return "(" + " ".join(str(k) for k in orb) + ")"

    def __str__(self) -> str:
        return self.notation()

    @classmethod
    def from_cycle_notation(cls, seq: Sequence[int]) -> "Cycle":
        seq = [int(k) for k in seq]
        if not seq:
            raise CycleSyntaxError("empty cycle")
        if seq[0] != 1:
            raise CycleSyntaxError(f"cycle notation must start at 1, got {seq[0]}")
        m = len(seq)
        if sorted(seq) != list(range(1, m + 1)):
            raise NotABijection(f"cycle {seq} does not list each of 1..{m} exactly once")
        images = [0] * m
        for a, b in zip(seq, seq[1:] + seq[:1]):
            images[a - 1] = b
        return cls(images)


_INT_LIST = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def parse_cycle(text: str) -> Cycle:
    """Parse ``"2,3,1"`` (image list) or ``"(123)"``, ``"(1 3 2 4)"``, ``"(1,3,2,4)"``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        body = s[1:-1].strip()
        if not body:
            raise CycleSyntaxError(f"empty cycle notation: {text!r}")
        if re.fullmatch(r"\d+", body):
            symbols = [int(c) for c in body]
        elif re.fullmatch(r"\d+((\s*,\s*|\s+)\d+)*", body):
            symbols = [int(t) for t in re.split(r"[\s,]+", body)]
        else:
            raise CycleSyntaxError(f"cannot parse cycle notation {text!r}")
        return Cycle.from_cycle_notation(symbols)
    if _INT_LIST.match(s):
        return Cycle(int(t) for t in s.split(","))
    raise CycleSyntaxError(f"cannot parse {text!r} as a cycle")


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return f o g, i.e. x -> f(g(x))."""
    if len(f) != len(g):
        raise LengthMismatch(f"cannot compose permutations of lengths {len(f)} and {len(g)}")
    fi = f.images
    return Permutation(fi[v - 1] for v in g.images)


def sign(p: Permutation) -> int:
    """Parity of p: +1 for even, -1 for odd."""
    transpositions = sum(len(c) - 1 for c in p.cycles())
    return -1 if transpositions % 2 else 1


@dataclass(frozen=True)
class Modality:
    extrema_count: int
    leading_sign: str  # "+" or "-"

    @property
    def is_unimodal(self) -> bool:
        return self == UNIMODAL

    def __str__(self) -> str:
        return f"{self.leading_sign}{self.extrema_count}"


UNIMODAL = Modality(1, "+")


def modality(theta: Permutation) -> Modality:
    """Number of local extrema of the connect-the-dots map, with the initial direction."""
    im = theta.images
    if len(im) < 3:
        raise TooShort(f"modality needs n >= 3, got n = {len(im)}")
    extrema = sum(
        1 for i in range(1, len(im) - 1) if (im[i - 1] < im[i]) != (im[i] < im[i + 1])
    )
    return Modality(extrema, "+" if im[0] < im[1] else "-")


def star(theta: Permutation) -> Permutation:
    """theta* on 2n points: 2k -> 2 theta(k), 2k-1 -> 2 theta(k) - 1."""
    out = []
    for v in theta.images:
        out += (2 * v - 1, 2 * v)
    return Permutation(out)


def rho(s: int, n2: int) -> Permutation:
    """The transposition (2s-1, 2s) in S_{n2}."""
    if n2 % 2 or not 1 <= s <= n2 // 2:
        raise OutOfRange(f"rho_{s} undefined on {n2} points")
    images = list(range(1, n2 + 1))
    images[2 * s - 2], images[2 * s - 1] = images[2 * s - 1], images[2 * s - 2]
    return Permutation(images)


def successor_candidate(theta: Permutation, swaps: Iterable[int]) -> Permutation:
    """theta* composed on the right with rho_i for every i in ``swaps``.

    The rho's commute (disjoint supports), so right-composing them just swaps
    the image pairs at positions 2i-1, 2i.  The result is cyclic exactly when
    ``len(swaps)`` is odd.
    """
    n = len(theta)
    swaps = sorted(set(swaps))
    for i in swaps:
        if not 1 <= i <= n:
            raise OutOfRange(f"swap index {i} outside 1..{n}")
    images = list(star(theta).images)
    for i in swaps:
        images[2 * i - 2], images[2 * i - 1] = images[2 * i - 1], images[2 * i - 2]
    return Permutation(images)


def is_cycle(p: Permutation) -> bool:
    return len(p.orbit(1)) == len(p)


def as_cycle(p: Permutation) -> Cycle:
    return p if isinstance(p, Cycle) else Cycle(p.images)


def all_cycles(n: int):
    """Yield every cycle of length n, ordered by image list."""
    from itertools import permutations

    if n == 1:
        yield Cycle([1])
        return
    # cycle notation (1 k2 ... kn) over all orderings of 2..n
    found = []
    for rest in permutations(range(2, n + 1)):
        found.append(Cycle.from_cycle_notation((1,) + rest))
    yield from sorted(found)
