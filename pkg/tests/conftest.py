import numpy as np
import pytest

from twoweight.tower import build_field_tower


def reference_two_zero_counts(tower, a1, a2, n):
    """Direct r^2 * n enumeration through field ops; the slow oracle."""
    N = tower.n1
    counts = [0] * (n + 1)
    for a in range(tower.r):
        for b in range(tower.r):
            wt = 0
            for i in range(n):
                x = int(tower.exp[(int(tower.log[a]) - i * a1) % N]) if a else 0
                y = int(tower.exp[(int(tower.log[b]) - i * a2) % N]) if b else 0
                if tower.trace_table[tower.add(x, y)] != 0:
                    wt += 1
            counts[wt] += 1
    return np.array(counts, dtype=np.int64)


@pytest.fixture(scope="session")
def t_q3k2():
    return build_field_tower(3, 1, 2)


@pytest.fixture(scope="session")
def t_q4k2():
    return build_field_tower(2, 2, 2)


@pytest.fixture(scope="session")
def t_q8k2():
    return build_field_tower(2, 3, 2)


@pytest.fixture(scope="session")
def t_q3k3():
    return build_field_tower(3, 1, 3)


@pytest.fixture(scope="session")
def t_q2k4():
    return build_field_tower(2, 1, 4)


@pytest.fixture(scope="session")
def t_q4k3():
    return build_field_tower(2, 2, 3)
