"""Python front end for the ulmkit C++ core.

Modules are passed as ``(ell, sigma_rows)``; reports are the same JSON
documents the command-line tool prints, decoded into dicts.
"""

import json

from . import _ulmkit
from ._ulmkit import ParseError, UlmkitError

__all__ = [
    "ParseError",
    "UlmkitError",
    "char_height",
    "cyclic",
    "decompose",
    "dual",
    "parse_zmod",
    "present",
    "selftest",
    "spectrum",
    "ulm",
]


def parse_zmod(text):
    return _ulmkit.parse_zmod(text)


def cyclic(ell, n):
    """V_n in the chain basis."""
    return ell, _ulmkit.cyclic_sigma(ell, n)


def ulm(module):
    return json.loads(_ulmkit.ulm_json(*module))


def decompose(module):
    return json.loads(_ulmkit.decompose_json(*module))


def dual(module):
    ell, sigma = module
    return ell, _ulmkit.dual_sigma(ell, sigma)


def spectrum(ell, bound, detailed=False):
    return json.loads(_ulmkit.spectrum_json(ell, bound, detailed))


def char_height(ell, ramified, m=1):
    return json.loads(_ulmkit.char_height_json(ell, set(ramified), m))


def present(ell, N, mult, free_mult=0, trunc=1):
    return json.loads(_ulmkit.present_json(ell, N, dict(mult), free_mult, trunc))


def selftest(criterion, seed=20240601):
    return _ulmkit.selftest(criterion, seed)
