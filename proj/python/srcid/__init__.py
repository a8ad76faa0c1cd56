"""Python front end for the srcid C++ library."""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational as _Rational
from typing import Iterable, Sequence

from . import _core
from ._core import DomainError, Error, SingularError, SizeError, qpoch_inf, qpoch_n, theta

__all__ = [
    "DomainError",
    "Error",
    "SingularError",
    "SizeError",
    "elliptic_source",
    "izergin_korepin",
    "list_cases",
    "main",
    "q_binomial",
    "qpoch_inf",
    "qpoch_n",
    "rational_source",
    "run_cli",
    "theta",
    "trig_source",
    "verify",
]


def _exact(values: Iterable[object]) -> bool:
    return all(isinstance(x, _Rational) for x in values)


def _s(x: object) -> str:
    return str(Fraction(x))  # type: ignore[arg-type]


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Run the command-line front end in-process."""
    return _core.run_cli(list(args))


def list_cases() -> list[dict]:
    return _core.list_cases()


def verify(
    cases: Sequence[str] = (),
    *,
    regime: str | None = None,
    seed: int = 0,
    points: int | None = None,
    nmax: int | None = None,
    field: str | None = None,
    tol: float | None = None,
    tol_singular: float = 1e-3,
    threads: int = 0,
) -> dict:
    """Run the selected cases and return the report (timings omitted)."""
    text = _core.verify_json(list(cases), regime, seed, points, nmax, field, tol, tol_singular, threads)
    return json.loads(text)


def q_binomial(n: int, l: int, q) -> Fraction:
    return Fraction(_core.q_binomial_exact(n, l, _s(q)))


def rational_source(c, z, u, v, side: str = "F"):
    """Rational F, G, P or Q. Exact when every input is an int or Fraction."""
    if _exact([c, z, *u, *v]):
        return Fraction(_core.rational_source_exact(_s(c), _s(z), [_s(x) for x in u], [_s(x) for x in v], side))
    return _core.rational_source_complex(c, z, list(u), list(v), side)


def trig_source(q, z, u, v, side: str = "F"):
    """Trigonometric F, G, P or Q. Exact when every input is an int or Fraction."""
    if _exact([q, z, *u, *v]):
        return Fraction(_core.trig_source_exact(_s(q), _s(z), [_s(x) for x in u], [_s(x) for x in v], side))
    return _core.trig_source_complex(q, z, list(u), list(v), side)


def elliptic_source(p, q, lam, z, u, v, side: str = "F") -> complex:
    return _core.elliptic_source(p, q, lam, z, list(u), list(v), side)


def izergin_korepin(u, v, c) -> Fraction:
    return Fraction(_core.izergin_korepin_exact([_s(x) for x in u], [_s(x) for x in v], _s(c)))


def main() -> int:
    import sys

    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
