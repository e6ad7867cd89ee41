import itertools

import pytest

from fsrsynth import Modulus, Poly, PolyRowVec

Z5 = Modulus(5)
Z9 = Modulus(3, 2)

# Worked example over Z_5, S = 4,0,4,4,2: per step (delta, pivot, E, R)
Z5_SEQ = (4, 0, 4, 4, 2)
Z5_STEPS = [
    ((1, 4), 2, [["0", "4x"], ["1", "1"]], [("0", "4x"), ("x", "1")]),
    ((1, 0), 1, [["x", "0"], ["0", "1"]], [("0", "4x^2"), ("x", "1")]),
    ((1, 4), 2, [["0", "4x"], ["1", "1"]], [("4x^2", "4x"), ("x", "4x^2+1")]),
    ((1, 4), 1, [["x", "0"], ["1", "1"]], [("4x^3", "4x^2"), ("4x^2+x", "4x^2+4x+1")]),
    ((1, 4), 2, [["0", "4x"], ["1", "1"]], [("x^3+4x^2", "x^3+x^2+4x"), ("4x^3+4x^2+x", "3x^2+4x+1")]),
]
# the Berlekamp-Massey pivot rule leaves the Groebner path after step 3
Z5_BM_TAIL = {
    4: [("4x^2", "x^3+4x"), ("4x^2+x", "4x^2+4x+1")],
    5: [("x^3+4x^2", "x^3+x^2+4x"), ("3x^2+x", "x^3+4x^2+3x+1")],
}

# Worked example over Z_9, S = 6,3,1,5,6: per step (delta, partitions P_0..P_2, pivots, E, R)
Z9_SEQ = (6, 3, 1, 5, 6)
Z9_STEPS = [
    (
        (1, 3, 6, 0),
        ((4,), (1,), (2, 3)),
        (1, 3),
        [["x", "0", "0", "0"], ["0", "0", "5x", "0"], ["0", "7", "1", "0"], ["0", "0", "0", "1"]],
        [("x^2", "0"), ("0", "5x"), ("-6x", "1"), ("0", "3")],
    ),
    (
        (1, 3, 3, 0),
        ((4,), (1,), (2, 3)),
        (1, 3),
        [["x", "0", "0", "0"], ["0", "0", "x", "0"], ["0", "-1", "1", "0"], ["0", "0", "0", "1"]],
        [("x^3", "0"), ("3x^2", "x"), ("-6x", "4x+1"), ("0", "3")],
    ),
    (
        (1, 3, 4, 3),
        ((), (1, 3), (2, 4)),
        (3, 4),
        [["0", "0", "7x", "0"], ["0", "0", "0", "x"], ["-4", "0", "1", "0"], ["0", "-1", "0", "1"]],
        [("3x^2", "x^2+7x"), ("0", "3x"), ("-4x^3-6x", "4x+1"), ("6x^2", "8x+3")],
    ),
    (
        (1, 3, 0, 5),
        ((3,), (1, 4), (2,)),
        (4, 2),
        [["0", "0", "0", "2x"], ["0", "x", "0", "0"], ["0", "0", "1", "0"], ["-5", "0", "0", "1"]],
        [("3x^3", "7x^2+6x"), ("0", "3x^2"), ("-4x^3-6x", "4x+1"), ("0", "4x^2+3")],
    ),
    (
        (1, 3, 8, 4),
        ((), (1, 3, 4), (2,)),
        (4, 2),
        [["0", "0", "0", "7x"], ["0", "x", "0", "0"], ["0", "0", "4", "-8"], ["-4", "0", "0", "1"]],
        [("0", "x^3+3x"), ("0", "3x^3"), ("2x^3-6x", "4x^2+7x+7"), ("-3x^3", "3x^2+3x+3")],
    ),
]

# exhaustive sweep sizes: (p, r, max length)
SWEEPS = [(2, 1, 5), (3, 1, 5), (2, 2, 4), (5, 1, 4), (2, 3, 3), (3, 2, 3)]


def rows_of(pairs, m):
    return tuple(PolyRowVec.parse(a, b, m) for a, b in pairs)


def matrix_of(entries, m):
    return tuple(tuple(Poly.parse(e, m) for e in row) for row in entries)


def polys(texts, m):
    return {Poly.parse(t, m) for t in texts}


def all_sequences(q, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(q), repeat=n)


def sweep_cases():
    for p, r, n in SWEEPS:
        m = Modulus(p, r)
        for S in all_sequences(m.q, n):
            yield m, S


@pytest.fixture
def z5():
    return Z5


@pytest.fixture
def z9():
    return Z9


# criterion number -> (passed, summary); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
