"""Security checks for finite crypto systems."""

import json
import os
from fractions import Fraction
from pathlib import Path

from . import _catcrypt

__all__ = [
    "check",
    "corpus_dir",
    "algebraically_secure",
    "decryption_condition",
    "shannon_secure",
    "max_ind_cpa_advantage",
    "threshold",
]

_bundled = Path(__file__).with_name("corpus")
if _bundled.is_dir() and "CATCRYPT_CORPUS" not in os.environ:
    os.environ["CATCRYPT_CORPUS"] = str(_bundled)


def _text(system):
    return system if isinstance(system, str) else json.dumps(system)


def _path(p):
    return None if p is None else os.fspath(p)


def check(command, system=None, *, adversaries=None, policy=None, level=None,
          seed=1, instances=100, reuse="loss"):
    """Run a check and return (exit_code, report dict)."""
    code, report = _catcrypt.check(command, _path(system), _path(adversaries),
                                   _path(policy), level, seed, instances, reuse)
    return code, json.loads(report)


def corpus_dir():
    return Path(_catcrypt.corpus_dir())


def algebraically_secure(system):
    return _catcrypt.algebraically_secure(_text(system))


def decryption_condition(system):
    return _catcrypt.decryption_condition(_text(system))


def shannon_secure(system):
    return _catcrypt.shannon_secure(_text(system))


def max_ind_cpa_advantage(system, level):
    return Fraction(_catcrypt.max_ind_cpa_advantage(_text(system), level))


def threshold(expr, level):
    return Fraction(_catcrypt.threshold(expr, level))
