"""Selects the term-map kernel at import time.

Two interchangeable kernels exist: the compiled hooklab._accel extension
and the pure Python hooklab._kernel_py module.  The compiled one wins
when it imported cleanly; setting the HOOKLAB_PURE_PYTHON environment
variable to any non-empty value forces the pure kernel regardless.

Callers must go through the module attributes (_backend.mul_terms and
friends) rather than binding the functions locally, so that
use_backend() swaps take effect everywhere.  use_backend() exists for
benchmarking and for the backend parity tests; normal code never calls
it.
"""

import os

from hooklab import _kernel_py

try:
    from hooklab import _accel as _accel_mod
except ImportError:
    _accel_mod = None

_MODULES = {"pure": _kernel_py}
if _accel_mod is not None:
    _MODULES["compiled"] = _accel_mod

_active = "pure"
mul_terms = _kernel_py.mul_terms
iadd_terms = _kernel_py.iadd_terms
scale_terms = _kernel_py.scale_terms
mul_monomial = _kernel_py.mul_monomial


def available_backends():
    """Names of the kernels that imported cleanly, preferred first."""
    if "compiled" in _MODULES:
        return ("compiled", "pure")
    return ("pure",)


def backend_name():
    """Name of the kernel currently in use."""
    return _active


def use_backend(name):
    """Switch kernels by name and return the previously active name."""
    global _active, mul_terms, iadd_terms, scale_terms, mul_monomial
    try:
        mod = _MODULES[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; available: {available_backends()}"
        ) from None
    previous = _active
    _active = name
    mul_terms = mod.mul_terms
    iadd_terms = mod.iadd_terms
    scale_terms = mod.scale_terms
    mul_monomial = mod.mul_monomial
    return previous


if "compiled" in _MODULES and not os.environ.get("HOOKLAB_PURE_PYTHON"):
    use_backend("compiled")
