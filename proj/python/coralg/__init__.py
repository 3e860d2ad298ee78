"""Exact corings, Frobenius systems and towers.

Thin wrapper over the compiled extension: every function takes a workspace
JSON document (text or dict) and returns plain dicts.
"""

import json as _json

try:
    from ._coralg import __version__, check as _check, solve as _solve
    from ._coralg import build_tower as _build_tower
    from ._coralg import find_frobenius_extension as _find_ext
    from ._coralg import find_reduced_system as _find_reduced
except ImportError:  # build-tree layout, module next to the package
    from _coralg import __version__, check as _check, solve as _solve
    from _coralg import build_tower as _build_tower
    from _coralg import find_frobenius_extension as _find_ext
    from _coralg import find_reduced_system as _find_reduced

__all__ = [
    "__version__",
    "check",
    "find_reduced_system",
    "find_frobenius_extension",
    "build_tower",
    "solve",
]


def _doc(document):
    if isinstance(document, str):
        return document
    return _json.dumps(document)


def check(document, object_name):
    """Validate a named object or certificate; returns the report dict."""
    return _json.loads(_check(_doc(document), object_name))


def find_reduced_system(document, coring, trials=20, coeff_bound=1 << 16, seed=1,
                        e_candidates=()):
    """Search for a reduced Frobenius system (gamma, e) on a coring."""
    return _json.loads(
        _find_reduced(_doc(document), coring, trials, coeff_bound, seed,
                      list(e_candidates)))


def find_frobenius_extension(document, extension, trials=20, coeff_bound=1 << 16,
                             seed=1):
    """Search for Frobenius data (E, beta) on a ring extension."""
    return _json.loads(_find_ext(_doc(document), extension, trials, coeff_bound, seed))


def build_tower(document, coring, levels, budget=4096, seed=1, trials=20):
    """Build and verify the tower of corings and extensions over a coring."""
    return _json.loads(_build_tower(_doc(document), coring, levels, budget, seed, trials))


def solve(matrix, rhs, field="Q"):
    """Exact linear solve over Q or GF(p); entries are strings like "3/4"."""
    mat = [[str(x) for x in row] for row in matrix]
    vec = [str(x) for x in rhs]
    return _json.loads(_solve(str(field), mat, vec))
