"""Python front end for the coulomb-kit core.

Specs may be given as dicts, JSON strings or paths to JSON files. Reports come
back as dicts exactly as the CLI emits them with ``--json``; series helpers
return ``fractions.Fraction`` values.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union

from . import _core
from ._core import (
    DEFAULT_SHELL_CAP,
    REPORT_SCHEMA,
    SPEC_SCHEMA,
    ConvergenceError,
    PreconditionError,
    ValidationError,
)

Spec = Union[Dict[str, Any], str, os.PathLike]

__all__ = [
    "ConvergenceError",
    "DEFAULT_SHELL_CAP",
    "PreconditionError",
    "REPORT_SCHEMA",
    "SPEC_SCHEMA",
    "ValidationError",
    "anomaly",
    "hilbert",
    "kostant_verify",
    "monopole_series",
    "presentation_series",
    "rep_info",
    "sl2_relation",
]


def _spec_json(spec: Spec) -> str:
    if isinstance(spec, dict):
        return json.dumps(spec)
    if isinstance(spec, os.PathLike) or (isinstance(spec, str) and not spec.lstrip().startswith("{")):
        with open(spec, encoding="utf-8") as handle:
            return handle.read()
    return spec


def _terms(raw: List[Tuple[str, str]]) -> List[Tuple[Fraction, Fraction]]:
    return [(Fraction(e), Fraction(c)) for e, c in raw]


def rep_info(spec: Spec) -> Dict[str, Any]:
    return json.loads(_core.rep_info(_spec_json(spec)))


def anomaly(spec: Spec) -> Dict[str, Any]:
    return json.loads(_core.anomaly(_spec_json(spec)))


def hilbert(spec: Spec, order: int, shell_cap: int = DEFAULT_SHELL_CAP, threads: int = 1) -> Dict[str, Any]:
    return json.loads(_core.hilbert(_spec_json(spec), order, shell_cap, threads))


def kostant_verify(n: int, samples: int, seed: int, threads: int = 1) -> Dict[str, Any]:
    return json.loads(_core.kostant_verify(n, samples, seed, threads))


def monopole_series(
    spec: Spec, order: int, shell_cap: int = DEFAULT_SHELL_CAP, threads: int = 1
) -> List[Tuple[Fraction, Fraction]]:
    return _terms(_core.monopole_series(_spec_json(spec), order, shell_cap, threads))


def presentation_series(monopole_number: int, order: int) -> List[Tuple[Fraction, Fraction]]:
    return _terms(_core.presentation_series(monopole_number, order))


def sl2_relation(monopole_number: int) -> str:
    return _core.sl2_relation(monopole_number)
