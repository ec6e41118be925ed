"""Brute-force loan-scan kernels.

The reference scan tries x = 0, 1, ..., bound and stops at the first x for
which every (herd + x) / s_i is an exact integer and those integer shares
sum back to herd. It is the package's independent check on the closed-form
solver, so every backend keeps it a dumb linear scan.

Three interchangeable backends:

* ``numba``  - @njit-compiled loop; the default whenever numba imports.
* ``numpy``  - chunked vectorized scan; the fallback, or forced with
  ``HERDSPLIT_BACKEND=numpy``.
* ``python`` - unbounded-int loop; always available, and selected
  automatically whenever herd + bound could overflow int64 arithmetic.

The int64 backends never wrap: any input that could overflow is routed to
the python backend before array math happens.
"""

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None
    HAVE_NUMBA = False

BACKEND_ENV_VAR = "HERDSPLIT_BACKEND"

_CHUNK = 1 << 14
# k shares of at most (herd + bound) each must stay clear of int64.
_INT64_GUARD = 2**62


def backend_choice() -> str:
    """Resolve the backend name from the environment ("auto" by default)."""
    choice = os.environ.get(BACKEND_ENV_VAR, "auto").strip().lower()
    if choice in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    if choice == "numba" and not HAVE_NUMBA:
        return "numpy"
    if choice not in ("numba", "numpy", "python"):
        raise ValueError(
            f"{BACKEND_ENV_VAR}={choice!r}: expected auto, numba, numpy or python"
        )
    return choice


def _effective_backend(herd: int, bound: int, heirs: int) -> str:
    """Backend that will actually run, after the overflow guard."""
    choice = backend_choice()
    if choice == "python":
        return "python"
    if (herd + bound) * max(heirs, 1) >= _INT64_GUARD:
        return "python"
    return choice


def _scan_python(herd, bound, divisors):
    for x in range(bound + 1):
        t = herd + x
        for s in divisors:
            if t % s:
                break
        else:
            if sum(t // s for s in divisors) == herd:
                return x
    return None


def _scan_numpy(herd, bound, divisors, chunk=_CHUNK):
    divs = np.asarray(divisors, dtype=np.int64)
    for start in range(0, bound + 1, chunk):
        stop = min(start + chunk, bound + 1)
        t = np.arange(herd + start, herd + stop, dtype=np.int64)
        ok = np.ones(t.shape[0], dtype=np.bool_)
        for s in divs:
            ok &= t % s == 0
        if not ok.any():
            continue
        cand = t[ok]
        totals = np.zeros(cand.shape[0], dtype=np.int64)
        for s in divs:
            totals += cand // s
        hits = np.flatnonzero(totals == herd)
        if hits.size:
            return int(cand[hits[0]]) - herd
    return None


if HAVE_NUMBA:

    @njit(cache=True)
    def _scan_numba_loop(herd, bound, divs):  # pragma: no cover - compiled
        k = divs.shape[0]
        for x in range(bound + 1):
            t = herd + x
            ok = True
            for i in range(k):
                if t % divs[i] != 0:
                    ok = False
                    break
            if ok:
                total = 0
                for i in range(k):
                    total += t // divs[i]
                if total == herd:
                    return x
        return -1

    def _scan_numba(herd, bound, divisors):
        x = _scan_numba_loop(herd, bound, np.asarray(divisors, dtype=np.int64))
        return None if x < 0 else int(x)

else:  # pragma: no cover - numba is a declared dependency
    _scan_numba = None


def scan_first_loan(herd: int, bound: int, divisors) -> int | None:
    """First x in 0..bound that splits herd exactly, or None.

    Exact for arbitrary magnitudes: the accelerated backends only run when
    every intermediate value provably fits in int64.
    """
    if bound < 0:
        return None
    backend = _effective_backend(herd, bound, len(divisors))
    if backend == "numba":
        return _scan_numba(herd, bound, divisors)
    if backend == "numpy":
        return _scan_numpy(herd, bound, divisors)
    return _scan_python(herd, bound, divisors)
