"""
Orbits of maps on Dyck paths and exhaustive verification suites.

Every ``verify_*`` function enumerates all Dyck paths in a size range and
returns a :class:`VerificationReport`; counterexamples are collected up to
``failure_limit`` and counted beyond it.  With ``workers > 1`` sizes are
farmed out to a process pool and the partial reports merged.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Callable

from .bijections import (bijection_B, bijection_B_inv, bijection_K, bijection_K_inv,
                         bijection_M, bijection_M_direct, bijection_M_inv,
                         bijection_M_transpositions)
from .dyck import DyckPath, enumerate_dyck, reverse
from .involutions import lk, lk_graphical, lk_lk_prime, lk_prime, lk_prime_lk
from .pairs import (PathPair, clockwise_steps, flip45, minimal_diagonals, phi, phi_inv,
                    rotate180, square_pairs, tweak)
from .perm321 import all_321_avoiders

MAPS: dict[str, Callable[[DyckPath], DyckPath]] = {
    "LprimeL": lk_prime_lk,
    "LLprime": lk_lk_prime,
    "L": lk,
    "Lprime": lk_prime,
    "R": reverse,
}

#: Default largest sizes per suite.
DEFAULT_MAX = {
    "theorem": 11, "identities": 11, "corollary": 10, "proposition": 8,
    "diagonals": 8, "pairs": 10, "bijectivity": 9, "oracles": 10,
}

CONVENTIONS = ("clockwise", "forward")


def _resolve(map_) -> Callable[[DyckPath], DyckPath]:
    return MAPS[map_] if isinstance(map_, str) else map_


@dataclass(frozen=True)
class Orbit:
    base: DyckPath
    elements: tuple[DyckPath, ...]

    def __len__(self):
        return len(self.elements)


def orbit(base: DyckPath, map_="LprimeL") -> Orbit:
    """Iterate ``map_`` from ``base`` until it comes back; ``elements[0]`` is ``base``."""
    f = _resolve(map_)
    elements = [base]
    seen = {base}
    cur = f(base)
    while cur != base:
        if cur in seen:
            raise ValueError(f"{map_} is not a bijection: {cur} repeats before {base}")
        seen.add(cur)
        elements.append(cur)
        cur = f(cur)
    return Orbit(base, tuple(elements))


@lru_cache(maxsize=32)
def map_table(n: int, map_name: str) -> dict[DyckPath, DyckPath]:
    f = MAPS[map_name]
    return {p: f(p) for p in enumerate_dyck(n)}


def cycle_lengths(table: dict) -> list[int]:
    seen = set()
    out = []
    for start in table:
        if start in seen:
            continue
        k, cur = 0, start
        while cur not in seen:
            seen.add(cur)
            cur = table[cur]
            k += 1
        out.append(k)
    return out


def order_of_map(n: int, map_="LprimeL") -> int:
    """Least common multiple of the orbit sizes of ``map_`` on Dyck n-paths."""
    if isinstance(map_, str):
        table = map_table(n, map_)
    else:
        table = {p: map_(p) for p in enumerate_dyck(n)}
    return math.lcm(*cycle_lengths(table))


@dataclass
class VerificationReport:
    suite: str
    size_range: tuple[int, int]
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    failure_count: int = 0
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)
    failure_limit: int = 10

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, input, expected, actual, check: str = "") -> None:
        self.failure_count += 1
        if len(self.failures) < self.failure_limit:
            self.failures.append({"check": check, "input": str(input),
                                  "expected": str(expected), "actual": str(actual)})

    def expect(self, input, expected, actual, check: str = "") -> None:
        self.checked += 1
        if expected != actual:
            self.fail(input, expected, actual, check)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        lo = min(self.size_range[0], other.size_range[0])
        hi = max(self.size_range[1], other.size_range[1])
        out = VerificationReport(self.suite, (lo, hi), self.checked + other.checked,
                                 (self.failures + other.failures)[:self.failure_limit],
                                 self.failure_count + other.failure_count,
                                 self.elapsed + other.elapsed,
                                 _merge_details(self.details, other.details),
                                 self.failure_limit)
        return out

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "size_range": list(self.size_range),
            "checked": self.checked,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "details": self.details,
        }


def _merge_details(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        if k in out and isinstance(v, dict):
            out[k] = _merge_details(out[k], v)
        elif k in out and isinstance(v, (int, float)) and not isinstance(v, bool):
            out[k] = out[k] + v
        elif k in out and isinstance(v, bool):
            out[k] = out[k] and v
        else:
            out[k] = v
    return out


def _run(suite: str, per_size, sizes, failure_limit: int, workers: int) -> VerificationReport:
    start = time.perf_counter()
    sizes = list(sizes)
    task = partial(per_size, failure_limit=failure_limit)
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(task, sizes))
    else:
        parts = [task(n) for n in sizes]
    report = VerificationReport(suite, (sizes[0], sizes[-1]) if sizes else (0, -1),
                                failure_limit=failure_limit)
    for part in parts:
        report = report.merge(part)
    report.size_range = (sizes[0], sizes[-1]) if sizes else (0, -1)
    report.elapsed = time.perf_counter() - start
    return report


# theorem ---------------------------------------------------------------------

def _theorem_size(n: int, failure_limit: int, step=None) -> VerificationReport:
    rep = VerificationReport("theorem", (n, n), failure_limit=failure_limit)
    paths = enumerate_dyck(n)
    if step is None:
        table = map_table(n, "LprimeL")
    else:
        table = {p: step(p) for p in paths}
    for p in paths:
        q = p
        for _ in range(n):
            q = table[q]
        rep.expect(p, reverse(p), q, "(L'L)^n = R")
    return rep


def verify_theorem(max_n: int = DEFAULT_MAX["theorem"], min_n: int = 1, *,
                   step: Callable[[DyckPath], DyckPath] | None = None,
                   failure_limit: int = 10, workers: int = 1) -> VerificationReport:
    """Check that n applications of ``step`` (default L'∘L) reverse every Dyck n-path."""
    return _run("theorem", partial(_theorem_size, step=step), range(min_n, max_n + 1),
                failure_limit, workers)


# identities ------------------------------------------------------------------

def _identities_size(n: int, failure_limit: int) -> VerificationReport:
    rep = VerificationReport("identities", (n, n), failure_limit=failure_limit)
    for p in enumerate_dyck(n):
        m = bijection_M_direct(p)
        rep.expect(p, m, bijection_B(lk(p)), "M = B∘L")
        rep.expect(p, m, bijection_K(lk_prime(p)), "M = K∘L'")
        rep.expect(p, lk_prime_lk(p), bijection_K_inv(bijection_B(p)), "K⁻¹∘B = L'∘L")
        rep.expect(p, lk_lk_prime(p), bijection_B_inv(bijection_K(p)), "B⁻¹∘K = L∘L'")
    return rep


def verify_identities(max_n: int = DEFAULT_MAX["identities"], min_n: int = 1, *,
                      failure_limit: int = 10, workers: int = 1) -> VerificationReport:
    return _run("identities", _identities_size, range(min_n, max_n + 1), failure_limit, workers)


# corollary -------------------------------------------------------------------

def corollary_base(n: int) -> DyckPath:
    """``U^(n-1) D^(n-1) U D``."""
    return DyckPath("U" * (n - 1) + "D" * (n - 1) + "UD")


def expected_order(n: int) -> int:
    if n <= 1:
        return 1
    return 2 if n == 2 else 2 * n


def verify_corollary(max_n: int = DEFAULT_MAX["corollary"], min_n: int = 0, *,
                     orbit_max_n: int = 12, failure_limit: int = 10,
                     workers: int = 1) -> VerificationReport:
    """
    Order of L'∘L is 2n for n >= 3 (2 at n = 2, 1 below), and the orbit of
    ``U^(n-1) D^(n-1) U D`` has exactly 2n elements for 4 <= n <= ``orbit_max_n``.
    """
    start = time.perf_counter()
    rep = VerificationReport("corollary", (min_n, max(max_n, orbit_max_n)),
                             failure_limit=failure_limit)
    orders = {}
    for n in range(min_n, max_n + 1):
        orders[n] = order_of_map(n, "LprimeL")
        rep.expect(f"n={n}", expected_order(n), orders[n], "order of L'∘L")
    sizes = {}
    for n in range(4, orbit_max_n + 1):
        sizes[n] = len(orbit(corollary_base(n), "LprimeL"))
        rep.expect(corollary_base(n), 2 * n, sizes[n], "orbit size")
    rep.details = {"orders": orders, "orbit_sizes": sizes}
    rep.elapsed = time.perf_counter() - start
    return rep


# path pairs ------------------------------------------------------------------

def _pairs_size(n: int, failure_limit: int, geometric_max: int = 10,
                diagonal_max: int = 8) -> VerificationReport:
    rep = VerificationReport("pairs", (n, n), failure_limit=failure_limit)
    for p in enumerate_dyck(n):
        pair = phi(p)
        rep.expect(p, n + 1, pair.size, "size(phi(p)) = n + 1")
        rep.expect(p, p, phi_inv(pair), "phi_inv∘phi")
        if n <= geometric_max:
            rep.expect(p, phi(lk(p)), flip45(pair), "flip45∘phi = phi∘L")
            rep.expect(p, phi(reverse(p)), rotate180(pair), "rotate180∘phi = phi∘R")
            if n >= 1:
                rep.expect(p, phi(lk_prime_lk(p)), tweak(pair), "tweak∘phi = phi∘L'∘L")
        if 1 <= n <= diagonal_max:
            rep.expect(p, n, len(minimal_diagonals(pair)), "minimal diagonal count")
    return rep


def verify_pairs(max_n: int = 12, min_n: int = 0, *, geometric_max: int = 10,
                 diagonal_max: int = 8, failure_limit: int = 10,
                 workers: int = 1) -> VerificationReport:
    task = partial(_pairs_size, geometric_max=geometric_max, diagonal_max=diagonal_max)
    return _run("pairs", task, range(min_n, max_n + 1), failure_limit, workers)


def _diagonals_size(n: int, failure_limit: int) -> VerificationReport:
    rep = VerificationReport("diagonals", (n, n), failure_limit=failure_limit)
    for p in enumerate_dyck(n):
        rep.expect(p, n, len(minimal_diagonals(phi(p))), "minimal diagonal count")
    return rep


def verify_diagonal_count(max_n: int = DEFAULT_MAX["diagonals"], min_n: int = 1, *,
                          failure_limit: int = 10, workers: int = 1) -> VerificationReport:
    return _run("diagonals", _diagonals_size, range(min_n, max_n + 1), failure_limit, workers)


# proposition -----------------------------------------------------------------

@dataclass(frozen=True)
class TrackedStep:
    """
    A rod of a path pair followed through repeated L'∘L.  ``identity`` is its
    clockwise position (1-based) in the original pair; ``history[i]`` is its
    orientation (``"N"`` or ``"E"``) after i applications.
    """
    identity: int
    history: tuple[str, ...]
    corner_turn_index: int | None

    def flattenings(self) -> list[int]:
        h = self.history
        return [i for i in range(1, len(h)) if h[i - 1] == "N" and h[i] == "E"]

    def flattened_before_turn(self) -> list[int]:
        t = self.corner_turn_index
        return [i for i in self.flattenings() if t is None or i < t]

    def flattened_after_turn(self) -> list[int]:
        t = self.corner_turn_index
        return [i for i in self.flattenings() if t is not None and i > t]


def position_after(identity: int, applications: int, m: int) -> int:
    """Clockwise position of step ``identity`` after some applications of L'∘L."""
    return (identity - 1 + applications) % (2 * m) + 1


def corner_turn_index(identity: int, m: int, applications: int) -> int | None:
    """The application at which the step moves between upper and lower path, if any."""
    for i in range(1, applications + 1):
        before = position_after(identity, i - 1, m) <= m
        after = position_after(identity, i, m) <= m
        if before != after:
            return i
    return None


def flip_set(pair: PathPair) -> set[int]:
    """Clockwise positions (1-based) whose rods change orientation under L'∘L."""
    m = pair.size
    out = {m, 2 * m}
    for i, j in square_pairs(pair):
        out.add(i + 1)
        out.add(2 * m - j)
    return out


def track_steps(pair: PathPair, applications: int) -> list[TrackedStep]:
    """
    Follow all 2m rods of ``pair`` through ``applications`` applications of
    L'∘L, updating each rod from the flip rules alone.
    """
    m = pair.size
    orient = {j: c for j, c in enumerate(clockwise_steps(pair), 1)}
    hist = {j: [c] for j, c in orient.items()}
    cur = pair
    for i in range(applications):
        flips = flip_set(cur)
        for j in orient:
            if position_after(j, i, m) in flips:
                orient[j] = "E" if orient[j] == "N" else "N"
            hist[j].append(orient[j])
        cur = _rebuild(orient, i + 1, m)
    return [TrackedStep(j, tuple(hist[j]), corner_turn_index(j, m, applications))
            for j in sorted(hist)]


def _rebuild(orient: dict[int, str], applications: int, m: int) -> PathPair:
    c = [""] * (2 * m)
    for j, o in orient.items():
        c[position_after(j, applications, m) - 1] = o
    return PathPair("".join(c[:m]), "".join(c[m:])[::-1])


def preceded_by_flat(pair: PathPair, identity: int, convention: str = "clockwise") -> bool:
    """
    Whether the step at clockwise position ``identity`` is immediately preceded
    by a flat step: in clockwise order, or along its own path's direction
    (``"forward"``; the first step of a path has no predecessor).
    """
    m = pair.size
    c = clockwise_steps(pair)
    if convention == "clockwise":
        return c[(identity - 2) % (2 * m)] == "E"
    if convention != "forward":
        raise ValueError(f"unknown convention {convention!r}")
    if identity <= m:
        return identity > 1 and c[identity - 2] == "E"
    return identity < 2 * m and c[identity] == "E"


def _proposition_size(n: int, failure_limit: int, convention: str = "clockwise") -> VerificationReport:
    rep = VerificationReport("proposition", (n, n), failure_limit=failure_limit)
    mismatches = {c: 0 for c in CONVENTIONS}
    counters = {"steps_turning": 0, "steps_not_turning": 0, "diagonals": 0,
                "square_events": 0}
    m = n + 1
    for p in enumerate_dyck(n):
        pair = phi(p)
        steps = track_steps(pair, n)
        # rods tracked by the flip rules must agree with the canonical L'∘L orbit
        q = p
        for i in range(1, n + 1):
            q = lk_prime_lk(q)
            c = clockwise_steps(phi(q))
            tracked = "".join(s.history[i] for s in sorted(
                steps, key=lambda s: position_after(s.identity, i, m)))
            rep.expect(p, c, tracked, f"rod tracking after {i} applications")
        for s in steps:
            label = f"{p} step {s.identity}"
            before, after = s.flattened_before_turn(), s.flattened_after_turn()
            vertical = s.history[0] == "N"
            if s.corner_turn_index is None:
                counters["steps_not_turning"] += 1
                rep.expect(label, 1, len(before) + len(after), "initial step flattened once")
                continue
            counters["steps_turning"] += 1
            rep.expect(label, True, len(before) <= 1 and len(after) <= 1,
                       "at most one flattening on each side of the corner")
            rep.expect(label, vertical, bool(before), "flattened before turn iff vertical")
            for conv in CONVENTIONS:
                if bool(after) != preceded_by_flat(pair, s.identity, conv):
                    mismatches[conv] += 1
            rep.expect(label, preceded_by_flat(pair, s.identity, convention), bool(after),
                       f"flattened after turn iff preceded by flat ({convention})")
        if n >= 1:
            _check_diagonal_lifecycle(rep, p, pair, n, counters)
    rep.details = {"convention": convention,
                   "mismatches": {f"{c}": mismatches[c] for c in CONVENTIONS},
                   "counts": counters}
    return rep


def _check_diagonal_lifecycle(rep, p, pair, n, counters) -> None:
    """
    Each minimal diagonal, followed by the identities of the steps its
    endpoints initiate, survives until those steps bound a unit square at
    some application i <= n - 1, and every square event arises this way.
    """
    m = pair.size
    pairs_seq = [pair]
    for _ in range(n - 1):
        pairs_seq.append(tweak(pairs_seq[-1]))
    diag_ids = [d.initiated_steps(pair) for d in minimal_diagonals(pair)]
    counters["diagonals"] += len(diag_ids)
    events = set()
    for i, P in enumerate(pairs_seq):
        for a, b in square_pairs(P):
            up_pos, low_pos = a + 1, 2 * m - b
            ids = tuple(sorted((position_after(up_pos, -i, m), position_after(low_pos, -i, m))))
            events.add((ids, i))
    counters["square_events"] += len(events)
    rep.expect(p, n, len(events), "square events in n applications")
    for ids in diag_ids:
        hits = [i for (e, i) in events if e == ids]
        if len(hits) != 1:
            rep.fail(p, f"one square event for steps {ids}", hits, "diagonal destroyed once")
            continue
        rep.checked += 1
        for i in range(hits[0] + 1):
            P = pairs_seq[i]
            current = {d.initiated_steps(P) for d in minimal_diagonals(P)}
            moved = tuple(sorted(position_after(x, i, m) for x in ids))
            rep.expect(p, True, moved in current, f"diagonal {ids} alive at {i}")


def verify_proposition(max_n: int = 6, min_n: int = 1, *, convention: str = "clockwise",
                       failure_limit: int = 10, workers: int = 1) -> VerificationReport:
    """
    Track every rod of phi(p) through n applications of L'∘L.  A step that
    turns the corner is flattened after turning iff it is immediately
    preceded by a flat step, read in ``convention`` order.  Mismatch counts
    for both conventions are kept in ``details``.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    rep = _run("proposition", partial(_proposition_size, convention=convention),
               range(min_n, max_n + 1), failure_limit, workers)
    rep.details["convention"] = convention
    mism = rep.details.get("mismatches", {c: 0 for c in CONVENTIONS})
    rep.details["outcomes"] = {c: "pass" if mism.get(c, 0) == 0 else "fail" for c in CONVENTIONS}
    return rep


# bijections and oracles ------------------------------------------------------

def _bijectivity_size(n: int, failure_limit: int) -> VerificationReport:
    rep = VerificationReport("bijectivity", (n, n), failure_limit=failure_limit)
    avoiders = set(all_321_avoiders(n))
    paths = enumerate_dyck(n)
    for name, f in (("B", bijection_B), ("K", bijection_K), ("M", bijection_M)):
        images = [f(p) for p in paths]
        rep.expect(f"{name}, n={n}", len(paths), len(set(images)), f"{name} injective")
        rep.expect(f"{name}, n={n}", sorted(avoiders), sorted(set(images)), f"{name} image")
    for name, f, g in (("B", bijection_B, bijection_B_inv), ("K", bijection_K, bijection_K_inv),
                       ("M", bijection_M, bijection_M_inv)):
        for p in paths:
            rep.expect(p, p, g(f(p)), f"{name}_inv∘{name}")
        for perm in avoiders:
            rep.expect(perm, perm, f(g(perm)), f"{name}∘{name}_inv")
    return rep


def verify_bijectivity(max_n: int = DEFAULT_MAX["bijectivity"], min_n: int = 0, *,
                       failure_limit: int = 10, workers: int = 1) -> VerificationReport:
    return _run("bijectivity", _bijectivity_size, range(min_n, max_n + 1), failure_limit, workers)


def _oracles_size(n: int, failure_limit: int, transposition_max: int = 8) -> VerificationReport:
    rep = VerificationReport("oracles", (n, n), failure_limit=failure_limit)
    for p in enumerate_dyck(n):
        rep.expect(p, lk(p), lk_graphical(p), "lk_graphical = lk")
        if n <= transposition_max:
            m = bijection_M(p)
            rep.expect(p, m, bijection_M_transpositions(p), "transposition product = M")
            rep.expect(p, m, bijection_M_direct(p), "M_direct = M")
    return rep


def verify_oracles(max_n: int = DEFAULT_MAX["oracles"], min_n: int = 0, *,
                   transposition_max: int = 8, failure_limit: int = 10,
                   workers: int = 1) -> VerificationReport:
    task = partial(_oracles_size, transposition_max=transposition_max)
    return _run("oracles", task, range(min_n, max_n + 1), failure_limit, workers)


SUITES = {
    "theorem": verify_theorem,
    "identities": verify_identities,
    "corollary": verify_corollary,
    "proposition": verify_proposition,
    "diagonals": verify_diagonal_count,
    "pairs": verify_pairs,
    "bijectivity": verify_bijectivity,
    "oracles": verify_oracles,
}
