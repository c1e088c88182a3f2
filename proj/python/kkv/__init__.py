"""Exact K3 curve counting: KKV tables, Gromov-Witten and pairs series.

All numbers are exact: ``int`` or ``fractions.Fraction``.  Series come back as
:class:`Series`, rational functions of ``q`` as ``(numerator, denominator)``
coefficient lists in ascending degree.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import _core
from ._core import KkvError, is_q_inversion_symmetric, kkv_table, yau_zaslow

__all__ = [
    "KkvError",
    "Series",
    "kkv_table",
    "yau_zaslow",
    "sine_bracket",
    "gw_from_bps",
    "bps_from_gw",
    "pairs",
    "expand",
    "is_q_inversion_symmetric",
    "substitute_q_minus_exp",
    "mnop_check",
    "run_checks",
]

Number = int | Fraction
RatFn = Tuple[List[Fraction], List[Fraction]]


@dataclass(frozen=True)
class Series:
    """Laurent series known exactly through degree ``order``."""

    min_degree: int
    coefficients: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return self.min_degree + len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        if k > self.order:
            raise KkvError(f"coefficient of degree {k} beyond truncation order {self.order}")
        if k < self.min_degree:
            return Fraction(0)
        return self.coefficients[k - self.min_degree]


def _series(raw) -> Series:
    lo, coeffs = raw
    return Series(lo, tuple(coeffs))


def sine_bracket(d: int, genus: int, order: int) -> Series:
    """(2 sin(d u / 2))^(2 genus - 2) through u^order."""
    return _series(_core.sine_bracket(d, genus, order))


def gw_from_bps(table: Dict[Tuple[int, int], Number], d_max: int, u_order: int) -> Dict[Tuple[int, int], Fraction]:
    """N_{g,d} from BPS numbers keyed by (g, d)."""
    return _core.gw_from_bps(table, d_max, u_order)


def bps_from_gw(potential: Dict[Tuple[int, int], Number], d_max: int, u_order: int) -> Dict[Tuple[int, int], Fraction]:
    return _core.bps_from_gw(potential, d_max, u_order)


def pairs(d: int, h: int) -> RatFn:
    """Connected pairs series of d*beta, beta primitive with beta^2 = 2h - 2."""
    return _core.pairs(d, h)


def expand(numerator: Sequence[Number], denominator: Sequence[Number], order: int) -> Series:
    return _series(_core.expand(numerator, denominator, order))


def substitute_q_minus_exp(numerator: Sequence[Number], denominator: Sequence[Number], u_order: int) -> Series:
    return _series(_core.substitute_q_minus_exp(numerator, denominator, u_order))


def mnop_check(d: int, h: int, u_order: int = 12) -> dict:
    report = _core.mnop_check(d, h, u_order)
    report["gw"] = _series(report["gw"])
    report["pairs"] = _series(report["pairs"])
    return report


def run_checks(h_max: int = 20, d_max: int = 3, u_order: int = 12, seed: int = 20140101, cases: int = 100) -> list:
    return _core.run_checks(h_max, d_max, u_order, seed, cases)
