"""
Nonintersecting path pairs (parallelogram polyominoes) and the bijection
``phi`` from Dyck paths of size n to pairs of size n + 1.

Steps are ``N`` (vertical) and ``E`` (flat); vertices are ``(x, y)`` with
``E = (1, 0)`` and ``N = (0, 1)``.  Text format is ``"<upper>;<lower>"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .dyck import DOWN, UP, DyckPath, ascent_descent_lengths, elevate, unelevate

NORTH = "N"
EAST = "E"

_FLIP = {NORTH: EAST, EAST: NORTH}


class InvalidPairError(ValueError):
    pass


def vertices(steps: str) -> list[tuple[int, int]]:
    x = y = 0
    out = [(0, 0)]
    for c in steps:
        if c == NORTH:
            y += 1
        else:
            x += 1
        out.append((x, y))
    return out


def _check_pair(upper: str, lower: str) -> None:
    m = len(upper)
    if m < 1 or len(lower) != m:
        raise InvalidPairError(f"paths must have equal positive length, got {len(upper)} and {len(lower)}")
    for name, s in (("upper", upper), ("lower", lower)):
        bad = set(s) - {NORTH, EAST}
        if bad:
            raise InvalidPairError(f"{name} path has foreign steps {sorted(bad)}")
    if upper.count(NORTH) != lower.count(NORTH):
        raise InvalidPairError("paths end at different points")
    if m == 1:
        if upper != EAST:
            raise InvalidPairError("a size-1 pair must be E;E")
        return
    if not (upper[0] == NORTH and upper[-1] == EAST and lower[0] == EAST and lower[-1] == NORTH):
        raise InvalidPairError("upper must run N...E and lower E...N")
    shared = set(vertices(upper)) & set(vertices(lower))
    if len(shared) != 2:
        extra = sorted(shared - {(0, 0), vertices(upper)[-1]})
        raise InvalidPairError(f"paths meet at interior vertices {extra}")


@dataclass(frozen=True)
class PathPair:
    upper: str
    lower: str

    def __post_init__(self):
        _check_pair(self.upper, self.lower)

    @property
    def size(self) -> int:
        return len(self.upper)

    @property
    def degenerate(self) -> bool:
        return len(self.upper) == 1

    def __str__(self):
        return format_pair(self)


def format_pair(pair: PathPair) -> str:
    return f"{pair.upper};{pair.lower}"


def parse_pair(text: str) -> PathPair:
    parts = text.strip().upper().split(";")
    if len(parts) != 2:
        raise InvalidPairError(f"expected '<upper>;<lower>', got {text!r}")
    return PathPair(parts[0].strip(), parts[1].strip())


def _runs_to_steps(lengths) -> str:
    return "".join(NORTH * (k - 1) + EAST for k in lengths)


def _steps_to_runs(steps: str) -> list[int]:
    out, run = [], 0
    for c in steps:
        run += 1
        if c == EAST:
            out.append(run)
            run = 0
    return out


def phi(path: DyckPath) -> PathPair:
    """
    Elevate, then write each ascent of length a as ``N^(a-1) E`` for the
    upper path; do the same with descents and move the final ``E`` to the
    front for the lower path.
    """
    a, d = ascent_descent_lengths(elevate(path))
    upper = _runs_to_steps(a)
    x = _runs_to_steps(d)
    uv, xv = vertices(upper), vertices(x)
    ue = [uv[i] for i, c in enumerate(upper) if c == EAST]
    xe = [xv[i] for i, c in enumerate(x) if c == EAST]
    for i in range(len(a) - 1):
        assert ue[i][1] > xe[i][1], "upper E step not strictly above"
    return PathPair(upper, EAST + x[:-1])


def phi_inv(pair: PathPair) -> DyckPath:
    a = _steps_to_runs(pair.upper)
    d = _steps_to_runs(pair.lower[1:] + EAST)
    return unelevate(DyckPath("".join(UP * i + DOWN * j for i, j in zip(a, d))))


def flip45(pair: PathPair) -> PathPair:
    """Reflect in the line y = x.  The size-1 pair is fixed."""
    if pair.degenerate:
        return pair
    return PathPair("".join(_FLIP[c] for c in pair.lower),
                    "".join(_FLIP[c] for c in pair.upper))


def rotate180(pair: PathPair) -> PathPair:
    return PathPair(pair.lower[::-1], pair.upper[::-1])


def square_pairs(pair: PathPair) -> list[tuple[int, int]]:
    """
    Index pairs ``(i, j)`` (0-based, upper step i, lower step j) of vertical
    steps forming the left and right sides of one unit square.
    """
    uv, lv = vertices(pair.upper), vertices(pair.lower)
    lower_vertical = {lv[j]: j for j, c in enumerate(pair.lower) if c == NORTH}
    out = []
    for i, c in enumerate(pair.upper):
        if c == NORTH:
            x, y = uv[i]
            j = lower_vertical.get((x + 1, y))
            if j is not None:
                out.append((i, j))
    return out


def tweak(pair: PathPair) -> PathPair:
    """
    Make the last upper step and the first lower step vertical and flatten
    every pair of vertical steps bounding a unit square.  The steps keep
    their identity as rods: listed clockwise from the origin, the step at
    position q moves to position q + 1 (mod 2m), which fixes where the new
    pair starts and turns its corner.
    """
    if pair.degenerate:
        raise InvalidPairError("tweak is undefined on the size-1 pair")
    m = pair.size
    c = list(clockwise_steps(pair))
    for i, j in square_pairs(pair):
        c[i] = EAST
        c[2 * m - 1 - j] = EAST
    c[m - 1] = NORTH        # last upper step
    c[2 * m - 1] = NORTH    # first lower step
    c = c[-1:] + c[:-1]
    return from_clockwise_steps("".join(c))


def clockwise_steps(pair: PathPair) -> str:
    """Upper path forward followed by the lower path from its end back to the origin."""
    return pair.upper + pair.lower[::-1]


def from_clockwise_steps(steps: str) -> PathPair:
    m = len(steps) // 2
    return PathPair(steps[:m], steps[m:][::-1])


def clockwise_vertex_index(pair: PathPair, v: tuple[int, int]) -> int:
    """0-based clockwise index of vertex ``v``; the vertex at index q initiates step q + 1."""
    m = pair.size
    uv = vertices(pair.upper)
    if v in uv:
        return uv.index(v)
    lv = vertices(pair.lower)
    return (2 * m - lv.index(v)) % (2 * m)


class MinimalDiagonal(NamedTuple):
    v1: tuple[int, int]
    v2: tuple[int, int]

    @property
    def length(self) -> int:
        return self.v2[0] - self.v1[0]

    def initiated_steps(self, pair: PathPair) -> tuple[int, int]:
        """1-based clockwise positions of the steps initiated by the endpoints, smaller first."""
        q = sorted(clockwise_vertex_index(pair, v) for v in self)
        return q[0] + 1, q[1] + 1


def region_cells(pair: PathPair) -> set[tuple[int, int]]:
    """Unit cells ``(x, y)`` (lower-left corners) enclosed by the pair."""
    def flat_heights(steps):
        return [v[1] for v, c in zip(vertices(steps), steps) if c == EAST]

    cells = set()
    for x, (lo, hi) in enumerate(zip(flat_heights(pair.lower), flat_heights(pair.upper))):
        cells.update((x, y) for y in range(lo, hi))
    return cells


def minimal_diagonals(pair: PathPair) -> set[MinimalDiagonal]:
    """Slope-1 segments between vertices of the pair whose interiors lie strictly inside it."""
    if pair.degenerate:
        raise InvalidPairError("the size-1 pair encloses no region")
    boundary = set(vertices(pair.upper)) | set(vertices(pair.lower))
    cells = region_cells(pair)
    out = set()
    for x, y in boundary:
        k = 0
        # walk the diagonal through enclosed cells until a boundary vertex is hit
        while (x + k, y + k) in cells:
            k += 1
            if (x + k, y + k) in boundary:
                out.add(MinimalDiagonal((x, y), (x + k, y + k)))
                break
    return out
