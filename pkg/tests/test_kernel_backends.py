"""The compiled and pure kernels must be behaviourally identical."""

import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from hooklab import _backend
from hooklab import _kernel_py

pytestmark = pytest.mark.skipif(
    "compiled" not in _backend.available_backends(),
    reason="compiled kernel did not build here",
)


@pytest.fixture
def compiled():
    previous = _backend.use_backend("compiled")
    yield _backend
    _backend.use_backend(previous)


def random_terms(rng, nvars, nterms, fractions=False):
    out = {}
    nterms = min(nterms, 4**nvars)  # only that many distinct exponent tuples exist
    while len(out) < nterms:
        exps = tuple(rng.randrange(4) for _ in range(nvars))
        c = rng.randint(-20, 20) or 1
        if fractions and rng.random() < 0.3:
            c = Fraction(c, rng.randint(2, 7))
        out[exps] = c
    return out


def test_parity_on_random_operands(compiled):
    rng = random.Random(99)
    for trial in range(60):
        nvars = rng.randint(1, 5)
        a = random_terms(rng, nvars, rng.randint(0, 12), fractions=True)
        b = random_terms(rng, nvars, rng.randint(1, 12), fractions=True)
        assert compiled.mul_terms(a, b) == _kernel_py.mul_terms(dict(a), dict(b))
        acc1, acc2 = dict(a), dict(a)
        assert compiled.iadd_terms(acc1, b) == _kernel_py.iadd_terms(acc2, b)
        assert acc1 == acc2
        s = rng.choice([2, -1, Fraction(1, 3)])
        assert compiled.scale_terms(a, s) == _kernel_py.scale_terms(a, s)
        exps = tuple(rng.randrange(3) for _ in range(nvars))
        assert compiled.mul_monomial(a, exps, s) == _kernel_py.mul_monomial(a, exps, s)


def test_cancellation_removes_keys(compiled):
    a = {(1, 0): 1, (0, 1): -1}
    b = {(0, 1): 1, (1, 0): 1}
    # (x - y)(y + x) = x^2 - y^2, the xy terms cancel
    assert compiled.mul_terms(a, b) == {(2, 0): 1, (0, 2): -1}
    acc = {(1, 1): 5}
    compiled.iadd_terms(acc, {(1, 1): -5})
    assert acc == {}


def test_iadd_returns_accumulator(compiled):
    acc = {}
    assert compiled.iadd_terms(acc, {(2,): 3}) is acc


def test_scale_refuses_zero(compiled):
    with pytest.raises(ValueError):
        compiled.scale_terms({(1,): 1}, 0)
    with pytest.raises(ValueError):
        _kernel_py.scale_terms({(1,): 1}, 0)


def test_mul_monomial_zero_coefficient(compiled):
    assert compiled.mul_monomial({(1,): 2}, (3,), 0) == {}
    assert _kernel_py.mul_monomial({(1,): 2}, (3,), 0) == {}


def test_empty_operands(compiled):
    assert compiled.mul_terms({}, {(1,): 1}) == {}
    assert compiled.mul_terms({(1,): 1}, {}) == {}


def test_use_backend_swaps_and_reports():
    first = _backend.backend_name()
    other = "pure" if first == "compiled" else "compiled"
    assert _backend.use_backend(other) == first
    assert _backend.backend_name() == other
    assert _backend.use_backend(first) == other
    with pytest.raises(ValueError):
        _backend.use_backend("turbo")


def test_pure_python_env_forces_fallback():
    code = "from hooklab import _backend; print(_backend.backend_name())"
    env = dict(os.environ, HOOKLAB_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "pure"


def test_backends_agree_on_an_identity():
    import hooklab.hookformula as hf

    results = {}
    for name in _backend.available_backends():
        previous = _backend.use_backend(name)
        try:
            hf.tree_weight_sum.cache_clear()
            results[name] = hf.hook_weight_sum(5)
        finally:
            _backend.use_backend(previous)
    hf.tree_weight_sum.cache_clear()
    values = list(results.values())
    assert all(v == values[0] for v in values)
