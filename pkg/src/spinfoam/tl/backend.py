"""Kernel selection for the Temperley-Lieb engine.

Prefers the compiled extension when it was built, falling back to the
pure-Python kernels with identical semantics.  backend_name() reports
which one is live so benchmarks and bug reports can say.
"""

try:
    from ._fast import glue, elementary_crossing_terms
    _BACKEND = "compiled"
except ImportError:
    from ._pure import glue, elementary_crossing_terms
    _BACKEND = "pure"

__all__ = ["glue", "elementary_crossing_terms", "backend_name"]


def backend_name():
    return _BACKEND
