"""
Circuit Core - Exact Constants
Rational bounds on the irrational constants used by the algorithms and certificates
"""

from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR, localcontext
from fractions import Fraction

# Rational approximations are snapped to this grid (accuracy 1e-12)
_SCALE = 10 ** 12


def _euler() -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 50
        return Decimal(1).exp()


def _snap(value: Decimal, rounding: str) -> Fraction:
    with localcontext() as ctx:
        ctx.prec = 50
        scaled = (value * _SCALE).to_integral_value(rounding=rounding)
    return Fraction(int(scaled), _SCALE)


def _ratios():
    with localcontext() as ctx:
        ctx.prec = 50
        e = _euler()
        greedy_threshold = e / (2 * (e - 1))
        one_minus_inv_e = 1 - 1 / e
    return greedy_threshold, one_minus_inv_e


_THRESHOLD, _ONE_MINUS_INV_E = _ratios()

# e / (2(e - 1)), rounded down: delta <= GREEDY_THRESHOLD * epsilon * W selects the greedy
GREEDY_THRESHOLD = _snap(_THRESHOLD, ROUND_FLOOR)

# 1 - 1/e, rounded down and up
ONE_MINUS_INV_E_LOWER = _snap(_ONE_MINUS_INV_E, ROUND_FLOOR)
ONE_MINUS_INV_E_UPPER = _snap(_ONE_MINUS_INV_E, ROUND_CEILING)

# Coarse lower bound on 1 - 1/e used by the ratio certificates
CERTIFICATE_ONE_MINUS_INV_E = Fraction(632, 1000)
