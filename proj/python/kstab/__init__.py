"""Exact K-stability and GIT computations for tuples of hypersurfaces.

Thin wrapper over the _kstab extension: rationals cross the boundary as
"p/q" strings and structured results as JSON text; this module converts
them to Fraction and plain dict/list values.
"""

import json
from fractions import Fraction

import _kstab
from _kstab import ConsistencyError, InputError, ResourceError

__version__ = _kstab.__version__

__all__ = [
    "InputError",
    "ResourceError",
    "ConsistencyError",
    "a_vector",
    "s_invariant",
    "beta",
    "kss_polytope",
    "cone_chain",
    "ci_hilbert",
    "cone_quotient_check",
    "hm_weight",
    "git_check",
    "vgit_chambers",
    "cm_weight",
    "effective_linearization",
]

_RAT_KEYS = {
    "values",
    "normal",
    "offset",
    "vrep",
    "rays",
    "representative",
    "closure_vertices",
    "gamma",
    "gamma_raw",
    "scalar",
    "beta",
    "def31",
    "lem32",
    "lem41",
    "c0",
    "c1",
    "coefficients",
    "radius",
    "coefficient",
    "weights",
}


def _fractionize(obj):
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ValueError:
            return obj
    if isinstance(obj, list):
        return [_fractionize(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _fractionize(v) for k, v in obj.items()}
    return obj


def _convert(obj):
    """Convert rational-bearing leaves of a decoded JSON document."""
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            if key in _RAT_KEYS:
                out[key] = _fractionize(value)
            else:
                out[key] = _convert(value)
        return out
    if isinstance(obj, list):
        return [_convert(x) for x in obj]
    return obj


def _loads(text):
    return _convert(json.loads(text))


def a_vector(n, degrees):
    doc = _loads(_kstab.a_vector_json(n, list(degrees)))
    return doc


def s_invariant(n, degrees, coefficients, i):
    return Fraction(_kstab.s_invariant(n, list(degrees), [str(c) for c in coefficients], i))


def beta(n, degrees, coefficients, i):
    return Fraction(_kstab.beta(n, list(degrees), [str(c) for c in coefficients], i))


def kss_polytope(n, degrees):
    return _loads(_kstab.kss_polytope_json(n, list(degrees)))


def cone_chain(n, degrees):
    return _loads(_kstab.cone_chain_json(n, list(degrees)))


def ci_hilbert(n, degrees, m):
    return int(_kstab.ci_hilbert(n, list(degrees), m))


def cone_quotient_check(n, d, m_max):
    return _loads(_kstab.cone_quotient_json(n, d, m_max))


def hm_weight(form, nvars, w):
    """form: dict with "degree" and "terms"; w: list of integers summing to zero."""
    return int(_kstab.hm_weight(json.dumps(form), nvars, list(w)))


def git_check(n, forms, linearization=None, frames="identity", seed=1, cap=4096):
    lin = [str(c) for c in linearization] if linearization else []
    return _loads(_kstab.git_check_json(n, json.dumps(forms), lin, frames, seed, cap))


def vgit_chambers(n, degrees, cap=4096):
    return _loads(_kstab.vgit_chambers_json(n, list(degrees), cap))


def cm_weight(n, forms, multipliers, w, beta=None, route="all"):
    return _loads(
        _kstab.cm_weight_json(
            n,
            json.dumps(forms),
            [str(c) for c in multipliers],
            list(w),
            "" if beta is None else str(beta),
            route,
        )
    )


def effective_linearization(n, degrees, multipliers, seed=20260819):
    return _loads(
        _kstab.effective_linearization_json(
            n, list(degrees), [str(c) for c in multipliers], seed
        )
    )
