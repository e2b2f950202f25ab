import os
import subprocess
import sys

import numpy as np
import pytest

from heptads import _pykernels, kernels
from heptads.gf2 import BitMatrix
from heptads.mermin import _edge_index
from heptads.spgroup import D_ALPHA, D_BETA, D_GAMMA, _row_table

ckernels = pytest.importorskip("heptads._ckernels")


def _closure(mod, gens):
    out = mod.closure([_row_table(g) for g in gens], gens[0].nrows, BitMatrix.identity(gens[0].nrows).pack())
    return np.sort(np.asarray(out, dtype=np.uint64))


@pytest.mark.parametrize("gens", [[D_ALPHA], [D_BETA], [D_ALPHA, D_GAMMA]])
def test_closure_backends_agree(gens):
    a, b = _closure(_pykernels, gens), _closure(ckernels, gens)
    assert np.array_equal(a, b)


def test_closure_small_orders():
    assert len(_closure(ckernels, [D_ALPHA])) == 7
    assert len(_closure(_pykernels, [D_BETA])) == 2


@pytest.mark.parametrize("lo,hi", [(0, 40), (300, 360), (900, 945)])
def test_pentagram_search_backends_agree(lo, hi):
    _, masks, indptr, indices = _edge_index()
    a = _pykernels.pentagram_search(masks, indptr, indices, lo, hi)
    b = ckernels.pentagram_search(masks, indptr, indices, lo, hi)
    assert np.array_equal(np.asarray(a), np.asarray(b))


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_python_switch():
    code = "from heptads import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, HEPTADS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
