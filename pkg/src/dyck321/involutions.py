"""
The Lalanne-Kreweras involution ``lk``, the derivative of a map on Dyck
paths, and the derived involution ``lk_prime``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .codes import lk_labels, path_of_code
from .dyck import DOWN, UP, EMPTY, DyckPath, _trusted, components

PathMap = Callable[[DyckPath], DyckPath]


@lru_cache(maxsize=1 << 18)
def lk(path: DyckPath) -> DyckPath:
    """The Dyck path whose ascent-descent code is the uu/dd labelling of ``path``."""
    if not path.steps:
        return EMPTY
    return path_of_code(lk_labels(path))


def lk_graphical(path: DyckPath) -> DyckPath:
    """
    ``lk`` by ray casting.

    With vertex ``i`` of the path at ``(i, h_i)``, a ray leaves the middle
    vertex of every ``UU`` heading southeast and the middle vertex of every
    ``DD`` heading southwest.  The i-th southeast ray meets the i-th
    southwest ray below the axis; reflected above the axis these points are
    the valleys of the image, which pins it down.
    """
    if not path.steps:
        return EMPTY
    s = path.steps
    h = path.heights()
    se = [j for j in range(1, len(s)) if s[j - 1] == UP and s[j] == UP]
    sw = [j for j in range(1, len(s)) if s[j - 1] == DOWN and s[j] == DOWN]
    if len(se) != len(sw):
        raise AssertionError("uu and dd counts differ")
    valleys = []
    for j, k in zip(se, sw):
        # (j + t, h_j - t) == (k - s, h_k - s)
        twice_t = (k - j) + (h[j] - h[k])
        if twice_t % 2:
            raise AssertionError(f"rays from vertices {j}, {k} miss the lattice")
        t = twice_t // 2
        x, y = j + t, h[j] - t
        valleys.append((x, -y))
    return _path_through_valleys(path.size, valleys)


def _path_through_valleys(n: int, valleys) -> DyckPath:
    steps = []
    x = y = 0
    for vx, vy in valleys + [(2 * n, 0)]:
        # climb to a peak then descend to (vx, vy)
        dx, dy = vx - x, vy - y
        if (dx + dy) % 2 or dx < abs(dy):
            raise AssertionError(f"valley {(vx, vy)} unreachable from {(x, y)}")
        up = (dx + dy) // 2
        down = (dx - dy) // 2
        if up == 0 or (down == 0 and (vx, vy) != (2 * n, 0)):
            raise AssertionError(f"{(vx, vy)} is not a valley")
        steps.append(UP * up + DOWN * down)
        x, y = vx, vy
    return DyckPath("".join(steps))


def derivative(f: PathMap) -> PathMap:
    """The map applying ``f`` inside every component ``U P D`` of a path."""

    def f_prime(path: DyckPath) -> DyckPath:
        return _trusted("".join(
            UP + f(_trusted(c.steps[1:-1])).steps + DOWN for c in components(path)))

    f_prime.__name__ = getattr(f, "__name__", "f") + "_prime"
    return f_prime


lk_prime = derivative(lk)
lk_prime.__qualname__ = "lk_prime"  # picklable for worker pools
lk_prime.__doc__ = "Derivative of :func:`lk`; an involution preserving component sizes."


def lk_prime_lk(path: DyckPath) -> DyckPath:
    return lk_prime(lk(path))


def lk_lk_prime(path: DyckPath) -> DyckPath:
    return lk(lk_prime(path))
