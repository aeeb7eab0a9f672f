"""
Dyck paths: representation, parsing, rendering, decomposition and enumeration.

A path is stored as a string over ``{"U", "D"}``; the empty string is the
empty path.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

UP = "U"
DOWN = "D"

#: Largest size accepted by :func:`enumerate_dyck` (Catalan(13) = 742900).
MAX_ENUM_SIZE = 13


class DyckError(ValueError):
    """Base class for malformed or out-of-domain Dyck paths."""


class DyckParseError(DyckError):
    """A step string is not a Dyck path; ``index`` is the first offending position (0-based)."""

    kind = "invalid"

    def __init__(self, message: str, index: int):
        super().__init__(f"{self.kind}: {message} (index {index})")
        self.index = index


class ForeignCharacterError(DyckParseError):
    kind = "foreign character"


class NegativePrefixError(DyckParseError):
    kind = "negative prefix"


class UnbalancedError(DyckParseError):
    kind = "unbalanced"


class EmptyPathError(DyckError):
    """Raised by operations that need at least one peak."""


class NotElevatedError(DyckError):
    pass


class EnumerationCapError(DyckError):
    pass


def _check_steps(steps: str) -> None:
    height = 0
    unmatched: list[int] = []
    for i, c in enumerate(steps):
        if c == UP:
            height += 1
            unmatched.append(i)
        elif c == DOWN:
            height -= 1
            if height < 0:
                raise NegativePrefixError("path dips below ground level", i)
            unmatched.pop()
        else:
            raise ForeignCharacterError(f"unexpected character {c!r}", i)
    if height:
        raise UnbalancedError(f"{height} more up steps than down steps", unmatched[0])


@dataclass(frozen=True, order=True)
class DyckPath:
    steps: str = ""

    def __post_init__(self):
        _check_steps(self.steps)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps

    def __repr__(self):
        return f"DyckPath({self.steps!r})"

    def __add__(self, other: "DyckPath") -> "DyckPath":
        return DyckPath(self.steps + other.steps)

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Heights of the vertices ``0..2n``."""
        h = [0]
        for c in self.steps:
            h.append(h[-1] + (1 if c == UP else -1))
        return h

    def is_elevated(self) -> bool:
        h = 0
        for i, c in enumerate(self.steps):
            h += 1 if c == UP else -1
            if h == 0:
                return i == len(self.steps) - 1
        return False


EMPTY = DyckPath("")


def _trusted(steps: str) -> DyckPath:
    # skips validation; only for step strings built by this package
    p = object.__new__(DyckPath)
    object.__setattr__(p, "steps", steps)
    return p


def parse_dyck(text: str) -> DyckPath:
    """Parse a step string (``U``/``D``, any case)."""
    return DyckPath(text.strip().upper())


def render_dyck(path: DyckPath, style: str = "letters") -> str:
    """
    Render ``path`` as ``"letters"`` (canonical text) or ``"ascii_art"``.

    The ascii drawing uses ``/`` and ``\\`` on a grid with one column per
    step and one row per unit of height, highest row first.
    """
    if style == "letters":
        return path.steps
    if style != "ascii_art":
        raise ValueError(f"unknown style {style!r}")
    h = path.heights()
    rows = max(h)
    grid = [[" "] * len(path.steps) for _ in range(rows)]
    for i, c in enumerate(path.steps):
        if c == UP:
            grid[h[i]][i] = "/"
        else:
            grid[h[i] - 1][i] = "\\"
    return "\n".join("".join(row).rstrip() for row in reversed(grid))


def parse_ascii_art(text: str) -> DyckPath:
    """Inverse of ``render_dyck(path, "ascii_art")``."""
    lines = text.split("\n") if text else []
    width = max((len(line) for line in lines), default=0)
    steps = []
    for col in range(width):
        chars = {line[col] for line in lines if col < len(line)} - {" "}
        if chars == {"/"}:
            steps.append(UP)
        elif chars == {"\\"}:
            steps.append(DOWN)
        else:
            raise ValueError(f"column {col} does not hold exactly one step")
    return DyckPath("".join(steps))


def reverse(path: DyckPath) -> DyckPath:
    swap = {UP: DOWN, DOWN: UP}
    return _trusted("".join(swap[c] for c in reversed(path.steps)))


def components(path: DyckPath) -> list[DyckPath]:
    """Split at every return to ground level."""
    out = []
    start = h = 0
    for i, c in enumerate(path.steps):
        h += 1 if c == UP else -1
        if h == 0:
            out.append(_trusted(path.steps[start:i + 1]))
            start = i + 1
    return out


def concatenate(paths) -> DyckPath:
    return _trusted("".join(p.steps for p in paths))


def elevate(path: DyckPath) -> DyckPath:
    return _trusted(UP + path.steps + DOWN)


def unelevate(path: DyckPath) -> DyckPath:
    if not path.is_elevated():
        raise NotElevatedError(f"{path.steps or 'ε'} is not elevated")
    return _trusted(path.steps[1:-1])


def _enumerate(n: int) -> Iterator[str]:
    # depth-first, U before D
    buf: list[str] = []

    def rec(ups: int, downs: int):
        if downs == n:
            yield "".join(buf)
            return
        if ups < n:
            buf.append(UP)
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append(DOWN)
            yield from rec(ups, downs + 1)
            buf.pop()

    yield from rec(0, 0)


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[DyckPath, ...]:
    return tuple(_trusted(s) for s in _enumerate(n))


def enumerate_dyck(n: int) -> tuple[DyckPath, ...]:
    """
    All Dyck paths of size ``n`` in lexicographic order with ``U < D``.

    Sizes above :data:`MAX_ENUM_SIZE` raise :class:`EnumerationCapError`.
    """
    if n < 0 or n > MAX_ENUM_SIZE:
        raise EnumerationCapError(f"size {n} outside 0..{MAX_ENUM_SIZE}")
    return _enumerate_cached(n)


def _runs(steps: str, letter: str) -> list[int]:
    out = []
    run = 0
    for c in steps:
        if c == letter:
            run += 1
        elif run:
            out.append(run)
            run = 0
    if run:
        out.append(run)
    return out


def ascent_descent_lengths(path: DyckPath) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lengths of the maximal runs of up steps and of down steps."""
    if not path.steps:
        raise EmptyPathError("the empty path has no ascents")
    return tuple(_runs(path.steps, UP)), tuple(_runs(path.steps, DOWN))


def from_ascent_descent_lengths(a, d) -> DyckPath:
    """Interleave ascents and descents: ``U^a1 D^d1 U^a2 D^d2 ...``."""
    if len(a) != len(d):
        raise DyckError("ascent and descent sequences differ in length")
    return DyckPath("".join(UP * x + DOWN * y for x, y in zip(a, d)))
