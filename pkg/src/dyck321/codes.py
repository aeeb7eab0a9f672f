"""
Partial-sum ascent-descent codes.

A code of size ``n`` is a pair of strictly increasing sequences ``A``, ``D``
of equal length ``r <= n - 1`` with entries in ``[1, n - 1]`` and
``A[i] >= D[i]``.  The same conditions characterize the LRMax and excedance
codes of 321-avoiding permutations and the labels of uu/dd occurrences of a
Dyck path, so one type serves all four; ``role`` is a tag only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import accumulate

from .dyck import DOWN, UP, DyckPath, EmptyPathError, _trusted, ascent_descent_lengths

ROLES = ("ascent_descent", "lrmax", "excedance", "lk_labels")


class InvalidCodeError(ValueError):
    pass


def validate_code(n: int, A, D) -> str | None:
    """Return ``None`` if ``(n, A, D)`` is a valid code, else the first violated clause."""
    if n < 1:
        return f"n = {n} < 1"
    if len(A) != len(D):
        return f"len(A) = {len(A)} != len(D) = {len(D)}"
    r = len(A)
    if r > n - 1:
        return f"r = {r} > n - 1 = {n - 1}"
    for name, seq in (("A", A), ("D", D)):
        for i, x in enumerate(seq, 1):
            if x < 1:
                return f"{name}_{i} = {x} < 1"
            if x > n - 1:
                return f"{name}_{i} = {x} > n - 1 = {n - 1}"
            if i > 1 and seq[i - 2] >= x:
                return f"{name}_{i - 1} = {seq[i - 2]} >= {name}_{i} = {x}"
    for i, (a, d) in enumerate(zip(A, D), 1):
        if a < d:
            return f"A_{i} = {a} < D_{i} = {d}"
    return None


@dataclass(frozen=True)
class AscentDescentCode:
    n: int
    A: tuple[int, ...]
    D: tuple[int, ...]
    role: str = field(default="ascent_descent", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "D", tuple(self.D))
        problem = validate_code(self.n, self.A, self.D)
        if problem:
            raise InvalidCodeError(problem)
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")

    @property
    def r(self) -> int:
        return len(self.A)

    def __str__(self):
        return format_code(self)


def _trusted_code(n, A, D, role="ascent_descent") -> AscentDescentCode:
    # skips validation; only for codes valid by construction
    code = object.__new__(AscentDescentCode)
    for k, v in (("n", n), ("A", A), ("D", D), ("role", role)):
        object.__setattr__(code, k, v)
    return code


def format_code(code: AscentDescentCode) -> str:
    return "n={}; A={}; D={}".format(
        code.n, ",".join(map(str, code.A)), ",".join(map(str, code.D)))


_CODE_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*A\s*=\s*([\d,\s]*);\s*D\s*=\s*([\d,\s]*)$")


def parse_code(text: str, role: str = "ascent_descent") -> AscentDescentCode:
    """Parse ``"n=<int>; A=<comma list>; D=<comma list>"``."""
    m = _CODE_RE.match(text)
    if not m:
        raise InvalidCodeError(f"cannot parse code {text!r}")

    def ints(s):
        return tuple(int(x) for x in s.split(",") if x.strip())

    return AscentDescentCode(int(m.group(1)), ints(m.group(2)), ints(m.group(3)), role)


def code_of(path: DyckPath) -> AscentDescentCode:
    """Truncated partial sums of the ascent and descent lengths."""
    a, d = ascent_descent_lengths(path)
    return _trusted_code(path.size, tuple(accumulate(a))[:-1], tuple(accumulate(d))[:-1])


def path_of_code(code: AscentDescentCode) -> DyckPath:
    A = code.A + (code.n,)
    D = code.D + (code.n,)
    steps = []
    prev_a = prev_d = 0
    for a, d in zip(A, D):
        steps.append(UP * (a - prev_a) + DOWN * (d - prev_d))
        prev_a, prev_d = a, d
    return _trusted("".join(steps))


def lk_labels(path: DyckPath) -> AscentDescentCode:
    """
    Label the up steps 1..n and the down steps 1..n from the left.  ``D``
    collects the labels on the first ``U`` of every ``UU`` and ``A`` the
    labels on the first ``D`` of every ``DD``.
    """
    if not path.steps:
        raise EmptyPathError("the empty path has no labels")
    s = path.steps
    A, D = [], []
    ups = downs = 0
    for c, nxt in zip(s, s[1:]):
        if c == UP:
            ups += 1
            if nxt == UP:
                D.append(ups)
        else:
            downs += 1
            if nxt == DOWN:
                A.append(downs)
    return _trusted_code(path.size, tuple(A), tuple(D), "lk_labels")


def transform_lrmax_to_excedance(code: AscentDescentCode) -> AscentDescentCode:
    """
    Turn the LRMax code of a 321-avoider into its excedance code:
    append n on top and 0 below, add 1 below, drop columns whose entries
    agree, subtract 1 on top.
    """
    top = code.A + (code.n,)
    bottom = tuple(x + 1 for x in (0,) + code.D)
    kept = [(t, b) for t, b in zip(top, bottom) if t != b]
    return AscentDescentCode(code.n, [t - 1 for t, _ in kept], [b for _, b in kept], "excedance")
