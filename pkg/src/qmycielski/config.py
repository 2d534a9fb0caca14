"""Global numeric tolerance.

Every checker takes an optional ``tol`` argument; ``None`` means "use the
global default", which can be changed with :func:`set_tolerance` or
temporarily with :func:`tolerance`.
"""

from contextlib import contextmanager

DEFAULT_TOL = 1e-9

_tol = DEFAULT_TOL


def get_tolerance():
    return _tol


def set_tolerance(tol):
    global _tol
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    _tol = float(tol)


@contextmanager
def tolerance(tol):
    old = _tol
    set_tolerance(tol)
    try:
        yield
    finally:
        set_tolerance(old)


def resolve(tol):
    return _tol if tol is None else float(tol)
