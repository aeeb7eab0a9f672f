import pytest
from hypothesis import strategies as st

from dyck321.dyck import DyckPath

# worked example used throughout: ascents (1,1,2,2,3,1), descents (1,1,1,3,3,1)
RUNNING = DyckPath("UDUDUUDUUDDDUUUDDDUD")
# code (8, (2,6,7), (1,4,6)): ascents (2,4,1,1), descents (1,3,2,2)
SMALL = DyckPath("UUDUUUUDDDUDDUDD")


def catalan(n):
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


@st.composite
def dyck_paths(draw, min_size=0, max_size=30):
    """Uniform Dyck paths via the cycle lemma on n U's and n + 1 D's."""
    n = draw(st.integers(min_size, max_size))
    word = draw(st.permutations("U" * n + "D" * (n + 1)))
    h, low, cut = 0, 0, 0
    for i, c in enumerate(word):
        h += 1 if c == "U" else -1
        if h < low:
            low, cut = h, i + 1
    rotated = word[cut:] + word[:cut]
    return DyckPath("".join(rotated[:-1]))


@pytest.fixture
def record_criterion(request):
    lines = request.config.__dict__.setdefault("_acceptance_lines", [])

    def record(number, name, passed, note=""):
        lines.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {name}"
                     + (f" ({note})" if note else ""))
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.__dict__.get("_acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
