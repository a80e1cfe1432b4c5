"""Exact q-Tsetlin library chains on permutations, words and flags.

Rationals are returned as fractions.Fraction; inputs may be Fraction, int or
"a/b" strings.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Iterable, Sequence

_ext_dir = os.environ.get("QTSETLIN_EXT_DIR")
if _ext_dir and _ext_dir not in __path__:
    # in-tree build: the extension lives in the CMake binary directory
    __path__.append(_ext_dir)

from . import _qtsetlin  # noqa: E402

__all__ = [
    "transition_matrix",
    "stationary",
    "eigen_catalog",
    "verify_spectrum",
    "check_commuting",
    "run_suite",
    "suite_names",
    "inv",
    "coinv",
    "lrm_positions",
    "standardize",
    "destandardize",
    "all_permutations",
    "all_words",
    "derangement",
    "q_int",
    "q_factorial",
    "q_derangement",
]


def _text(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    return str(v)


def _chain_kwargs(n, m, q, p, rates):
    return dict(
        n=n or 0,
        m=list(m or []),
        q="" if q is None else _text(q),
        p=p or 0,
        rates=[_text(r) for r in (rates or [])],
    )


def transition_matrix(space: str, *, n=None, m=None, q=None, p=None, rates=None):
    """Return (states, rows) with rows[i][j] the rate from state i to state j."""
    out = json.loads(_qtsetlin.transition_matrix(space, **_chain_kwargs(n, m, q, p, rates)))
    return out["states"], [[Fraction(e) for e in row] for row in out["entries"]]


def stationary(space: str, *, n=None, m=None, q=None, p=None, rates=None, method="formula"):
    """Stationary distribution normalized to sum 1, keyed by state label."""
    out = json.loads(_qtsetlin.stationary(space, method=method, **_chain_kwargs(n, m, q, p, rates)))
    return {k: Fraction(v) for k, v in out.items()}


def eigen_catalog(space: str, *, n=None, m=None, q=None, p=None, rates=None):
    out = json.loads(_qtsetlin.eigen_catalog(space, **_chain_kwargs(n, m, q, p, rates)))
    for e in out:
        e["value"] = Fraction(e["value"])
    return out


def verify_spectrum(space: str, *, n=None, m=None, q=None, p=None, rates=None):
    """Predicted multiplicities against exact nullities, plus the annihilation check."""
    out = json.loads(_qtsetlin.verify_spectrum(space, **_chain_kwargs(n, m, q, p, rates)))
    for e in out["report"]:
        e["value"] = Fraction(e["value"])
    return out


def check_commuting(diagram: str, *, p=None, rates: Iterable = (), q=None, m: Sequence[int] = ()) -> bool:
    return _qtsetlin.check_commuting(
        diagram, p=p or 0, rates=[_text(r) for r in rates], q="" if q is None else _text(q), m=list(m)
    )


def run_suite(name: str = "all", n_max: int = 4, primes: Sequence[int] = (2,), seed: int = 1):
    return json.loads(_qtsetlin.run_suite(name, n_max, list(primes), seed))


def q_int(k: int, q) -> Fraction:
    return Fraction(_qtsetlin.q_int(k, _text(q)))


def q_factorial(k: int, q) -> Fraction:
    return Fraction(_qtsetlin.q_factorial(k, _text(q)))


def q_derangement(k: int, q) -> Fraction:
    return Fraction(_qtsetlin.q_derangement(k, _text(q)))


suite_names = _qtsetlin.suite_names
inv = _qtsetlin.inv
coinv = _qtsetlin.coinv
lrm_positions = _qtsetlin.lrm_positions
standardize = _qtsetlin.standardize
destandardize = _qtsetlin.destandardize
all_permutations = _qtsetlin.all_permutations
all_words = _qtsetlin.all_words
derangement = _qtsetlin.derangement

