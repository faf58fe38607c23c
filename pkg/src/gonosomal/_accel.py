"""Kernel selection: compiled extension when available, pure Python otherwise."""

try:
    from . import _itercore as _impl
except ImportError:  # extension not built; the pure twin is bit-identical, just slower
    from . import _itercore_py as _impl

run_trajectory = _impl.run_trajectory
BACKEND = _impl.BACKEND


def backend_name() -> str:
    return BACKEND
