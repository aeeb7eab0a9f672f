"""
321-avoiding permutations in one-line notation (tuples of ``1..n``).

A permutation avoids 321 exactly when its entries that are not
left-to-right maxima form an increasing sequence, so it is determined by
the values and positions of its left-to-right maxima (the skeleton).
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import NamedTuple, Sequence

from .codes import AscentDescentCode

#: Largest size for which :func:`all_321_avoiders` filters all of S_n.
MAX_FILTER_SIZE = 9


class NotAPermutationError(ValueError):
    pass


class Not321AvoidingError(ValueError):
    def __init__(self, perm, witness):
        super().__init__(f"{format_perm(perm)} contains 321 at positions {witness}")
        self.witness = witness


class LRMaxSkeleton(NamedTuple):
    m: tuple[int, ...]
    p: tuple[int, ...]


def format_perm(perm: Sequence[int]) -> str:
    return " ".join(map(str, perm))


def parse_perm(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split())
    except ValueError as exc:
        raise NotAPermutationError(f"cannot parse {text!r}: {exc}") from None
    check_permutation(values)
    return values


def check_permutation(values: Sequence[int]) -> None:
    n = len(values)
    seen = set()
    for i, v in enumerate(values, 1):
        if not 1 <= v <= n:
            raise NotAPermutationError(f"value {v} at position {i} outside 1..{n}")
        if v in seen:
            raise NotAPermutationError(f"value {v} repeated at position {i}")
        seen.add(v)


def validate_321(values: Sequence[int]) -> tuple[int, int, int] | None:
    """
    ``None`` if ``values`` avoids 321, otherwise 1-based positions
    ``(i, j, k)`` with ``values[i] > values[j] > values[k]``.
    """
    check_permutation(values)
    max_pos = 0              # position of the running maximum
    last = None              # (position, value, max position) of previous non-maximum
    for i, v in enumerate(values, 1):
        if not max_pos or v > values[max_pos - 1]:
            max_pos = i
            continue
        if last is not None and v < last[1]:
            return (last[2], last[0], i)
        last = (i, v, max_pos)
    return None


def contains_321_naive(values: Sequence[int]) -> bool:
    """Cubic search; a test oracle for :func:`validate_321`."""
    return any(a > b > c for a, b, c in combinations(values, 3))


def all_321_avoiders(n: int) -> list[tuple[int, ...]]:
    """Every 321-avoiding permutation of [n], by filtering S_n."""
    if n > MAX_FILTER_SIZE:
        raise ValueError(f"filtered enumeration limited to n <= {MAX_FILTER_SIZE}")
    return [p for p in permutations(range(1, n + 1)) if not contains_321_naive(p)]


def _require_321(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    witness = validate_321(perm)
    if witness:
        raise Not321AvoidingError(perm, witness)
    return perm


def lrmax_skeleton(perm: Sequence[int]) -> LRMaxSkeleton:
    if not perm:
        raise ValueError("the empty permutation has no skeleton")
    m, p = [], []
    for i, v in enumerate(perm, 1):
        if not m or v > m[-1]:
            m.append(v)
            p.append(i)
    return LRMaxSkeleton(tuple(m), tuple(p))


def lrmax_code(perm: Sequence[int]) -> AscentDescentCode:
    """Drop ``m_k = n`` and ``p_1 = 1`` from the skeleton, then lower the positions by one."""
    perm = _require_321(perm)
    m, p = lrmax_skeleton(perm)
    return AscentDescentCode(len(perm), m[:-1], [x - 1 for x in p[1:]], "lrmax")


def excedance_code(perm: Sequence[int]) -> AscentDescentCode:
    """``A`` = strict excedance values minus one, ``D`` = excedance locations."""
    perm = _require_321(perm)
    A, D = [], []
    for i, v in enumerate(perm, 1):
        if v > i:
            A.append(v - 1)
            D.append(i)
    return AscentDescentCode(len(perm), A, D, "excedance")


def _complete(n: int, placed: dict[int, int]) -> tuple[int, ...]:
    # unused values ascending into unused positions ascending
    used = set(placed.values())
    rest = iter(v for v in range(1, n + 1) if v not in used)
    return tuple(placed[i] if i in placed else next(rest) for i in range(1, n + 1))


def from_lrmax_code(code: AscentDescentCode) -> tuple[int, ...]:
    values = code.A + (code.n,)
    positions = (1,) + tuple(d + 1 for d in code.D)
    return _complete(code.n, dict(zip(positions, values)))


def from_excedance_code(code: AscentDescentCode) -> tuple[int, ...]:
    return _complete(code.n, {d: a + 1 for a, d in zip(code.A, code.D)})


def fixed_point_intervals(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """The maximal runs of non-fixed positions, possibly empty, between fixed points."""
    out, cur = [], []
    for i, v in enumerate(perm, 1):
        if v == i:
            out.append(tuple(cur))
            cur = []
        else:
            cur.append(i)
    out.append(tuple(cur))
    return out
