"""Backend selection for the plane-partition scan.

The compiled ``_census`` extension is used when it was built; otherwise the
pure-Python ``_census_py`` twin is used.  Both return identical tables.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from . import _census_py

try:
    from . import _census as _census_c
except ImportError:  # extension not built
    _census_c = None

__all__ = ["BACKENDS", "DEFAULT_BACKEND", "get_scan", "first_rows", "scan"]

BACKENDS = {"python": _census_py.scan}
if _census_c is not None:
    BACKENDS["cython"] = _census_c.scan

DEFAULT_BACKEND = "cython" if _census_c is not None else "python"


def get_scan(backend: str | None = None):
    name = DEFAULT_BACKEND if backend in (None, "auto") else backend
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def first_rows(max_volume: int):
    """Every partition of size <= ``max_volume`` (the empty one first)."""
    out = [()]

    def grow(prefix, left, cap):
        for x in range(min(left, cap), 0, -1):
            row = prefix + (x,)
            out.append(row)
            grow(row, left - x, x)

    grow((), max_volume, max_volume)
    return out


def scan(max_volume: int, strict_only: bool = True, backend: str | None = None, threads: int = 1):
    """Run the scan, optionally fanned out over first rows across ``threads`` workers."""
    fn = get_scan(backend)
    if threads <= 1:
        return fn(max_volume, strict_only)
    n = max_volume
    paths = [[0] * (n + 1) for _ in range(n + 1)]
    cats = [[0] * 4 for _ in range(n + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda row: fn(n, strict_only, row), first_rows(n))
        for p, c in parts:
            for v in range(n + 1):
                for k in range(n + 1):
                    paths[v][k] += p[v][k]
                for k in range(4):
                    cats[v][k] += c[v][k]
    return paths, cats
