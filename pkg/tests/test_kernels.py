import os
import random
import subprocess
import sys

import pytest

from lorentzhom import _kernels_py
from lorentzhom.exact import BACKEND

compiled = pytest.importorskip("lorentzhom._kernels") if BACKEND == "compiled" else None


def random_rows(rng, r, c, lo=-5, hi=5, density=0.5):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(c)]
            for _ in range(r)]


def test_python_kernel_contract():
    rows, piv = _kernels_py.rref_int([[2, 4, 6], [1, 1, 1], [3, 5, 7]], 3)
    assert piv == [0, 1]
    assert rows == [[1, 0, -1], [0, 1, 2]]
    assert _kernels_py.rref_int([], 4) == ([], [])
    assert _kernels_py.rref_int([[0, 0]], 2) == ([], [])


@pytest.mark.skipif(compiled is None, reason="compiled kernel not built")
def test_backends_agree_on_random_matrices():
    rng = random.Random(11)
    for _ in range(300):
        rows = random_rows(rng, rng.randint(0, 9), rng.randint(1, 9))
        assert compiled.rref_int(rows, len(rows[0]) if rows else 3) == \
            _kernels_py.rref_int(rows, len(rows[0]) if rows else 3)


@pytest.mark.skipif(compiled is None, reason="compiled kernel not built")
def test_overflow_falls_back_to_exact_result():
    rng = random.Random(12)
    big = 2 ** 61
    for _ in range(20):
        rows = random_rows(rng, 5, 5, -big, big, density=1.0)
        assert compiled.rref_int(rows, 5) == _kernels_py.rref_int(rows, 5)
    huge = [[10 ** 30, 1], [1, 10 ** 30]]
    assert compiled.rref_int(huge, 2) == _kernels_py.rref_int(huge, 2)


def test_pure_python_switch():
    env = dict(os.environ, LORENTZHOM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from lorentzhom.exact import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
