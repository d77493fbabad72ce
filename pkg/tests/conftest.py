from itertools import permutations, product

import pytest

from combsim import SemimetricSpace, rectangle_example

_ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- independent oracles ------------------------------------------------------
# These follow the definitions literally and share no code with the library.


def bell_numbers(k):
    """Bell numbers B(0..k) from the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out


def definitional_similarity(src, tgt, images):
    """Search every value bijection f and test d_src(x,y) == f(d_tgt(psi x, psi y))."""
    n = len(src)
    vs = sorted({src[x][y] for x in range(n) for y in range(n)})
    vt = sorted({tgt[x][y] for x in range(n) for y in range(n)})
    if len(vs) != len(vt):
        return None
    for perm in permutations(vs):
        f = dict(zip(vt, perm))
        if all(src[x][y] == f[tgt[images[x]][images[y]]] for x, y in product(range(n), repeat=2)):
            return f
    return None


def definitional_weak(src, tgt, images):
    n = len(src)
    pts = range(n)
    for x, y, w, z in product(pts, repeat=4):
        lhs = src[x][y] <= src[w][z]
        rhs = tgt[images[x]][images[y]] <= tgt[images[w]][images[z]]
        if lhs != rhs:
            return False
    return True


def definitional_group(table):
    n = len(table)
    return {p for p in permutations(range(n)) if definitional_similarity(table, table, p) is not None}


def table(space):
    return [list(row) for row in space.dist]


def from_values(n, vals):
    return SemimetricSpace.from_pair_values(n, vals)


@pytest.fixture
def rect():
    return rectangle_example()


@pytest.fixture
def aab():
    # d(0,1) = d(1,2) = 1, d(0,2) = 2: apex at point 1
    return from_values(3, [1, 2, 1])


@pytest.fixture
def rigid3():
    return from_values(3, [1, 2, 4])
