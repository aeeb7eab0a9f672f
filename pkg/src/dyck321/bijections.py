"""
Three bijections from Dyck paths to 321-avoiding permutations and their
inverses.

``bijection_B`` reads the ascent-descent code as an excedance code,
``bijection_K`` reads it as an LRMax code and ``bijection_M`` applies
``bijection_B`` after :func:`~dyck321.involutions.lk`.  The empty path
corresponds to the empty permutation.
"""

from __future__ import annotations

from typing import Sequence

from .codes import code_of, lk_labels, path_of_code
from .dyck import EMPTY, DyckPath
from .involutions import lk
from .perm321 import (_require_321, excedance_code, from_excedance_code,
                      from_lrmax_code, lrmax_code)


def bijection_B(path: DyckPath) -> tuple[int, ...]:
    if not path.steps:
        return ()
    return from_excedance_code(code_of(path))


def bijection_K(path: DyckPath) -> tuple[int, ...]:
    if not path.steps:
        return ()
    return from_lrmax_code(code_of(path))


def bijection_M(path: DyckPath) -> tuple[int, ...]:
    return bijection_B(lk(path))


def bijection_M_direct(path: DyckPath) -> tuple[int, ...]:
    """
    Start from ``1 2 ... n`` and, for each labelled pair ``(h_i, t_i)`` of
    :func:`~dyck321.codes.lk_labels`, move the value ``h_i + 1`` left to
    position ``t_i`` keeping the other entries in order.
    """
    if not path.steps:
        return ()
    labels = lk_labels(path)
    line = list(range(1, path.size + 1))
    for h, t in zip(labels.A, labels.D):
        line.remove(h + 1)
        line.insert(t - 1, h + 1)
    return tuple(line)


def compose(pi: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """``pi`` then ``sigma`` acting on positions: ``(pi sigma)(i) = pi(sigma(i))``."""
    return tuple(pi[s - 1] for s in sigma)


def adjacent_transposition(n: int, j: int) -> tuple[int, ...]:
    s = list(range(1, n + 1))
    s[j - 1], s[j] = s[j], s[j - 1]
    return tuple(s)


def bijection_M_transpositions(path: DyckPath) -> tuple[int, ...]:
    """
    ``(1, 2, ..., n) sigma_1 ... sigma_r`` with
    ``sigma_i = s_{h_i} s_{h_i - 1} ... s_{t_i}``, multiplied left to right.
    Slow; kept as an oracle for :func:`bijection_M_direct`.
    """
    if not path.steps:
        return ()
    n = path.size
    labels = lk_labels(path)
    result = tuple(range(1, n + 1))
    for h, t in zip(labels.A, labels.D):
        for j in range(h, t - 1, -1):
            result = compose(result, adjacent_transposition(n, j))
    return result


def bijection_B_inv(perm: Sequence[int]) -> DyckPath:
    perm = _require_321(perm)
    if not perm:
        return EMPTY
    return path_of_code(excedance_code(perm))


def bijection_K_inv(perm: Sequence[int]) -> DyckPath:
    perm = _require_321(perm)
    if not perm:
        return EMPTY
    return path_of_code(lrmax_code(perm))


def bijection_M_inv(perm: Sequence[int]) -> DyckPath:
    return lk(bijection_B_inv(perm))
