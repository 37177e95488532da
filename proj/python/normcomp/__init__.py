"""Schatten norm compression inequalities for block PSD matrices.

Thin wrapper over the compiled `_core` module: dense Hermitian linear
algebra, Schatten norms, matrix means, the contraction-map solvers, and the
inequality checkers, all operating on numpy arrays.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from . import _core as _impl
except ImportError:  # build-tree layout: _core.so next to the package
    from _core import *  # noqa: F401,F403
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "1.0.0"
