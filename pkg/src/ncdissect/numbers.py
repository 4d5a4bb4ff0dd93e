"""Exact integer evaluation of the dissection / spider counting formulas.

Every division is checked: a nonzero remainder raises ``ArithmeticError``
instead of being rounded away.
"""
from __future__ import annotations

import math

from ncdissect.errors import ParameterError


def binomial(m: int, k: int) -> int:
    """C(m, k) for m >= 0; zero when k is outside 0..m."""
    if m < 0:
        raise ParameterError(f"binomial needs m >= 0, got m={m}")
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _check_sn(s: int, n: int) -> None:
    if s < 1 or n < 1:
        raise ParameterError(f"need s >= 1 and n >= 1, got s={s}, n={n}")


def _check_dissection_params(s: int, n: int, i: int) -> None:
    _check_sn(s, n)
    if not 0 <= i <= n - 1:
        raise ParameterError(f"need 0 <= i <= n-1, got i={i}, n={n}")


def _check_spider_params(s: int, n: int, i: int) -> None:
    _check_sn(s, n)
    if not 0 <= i <= n:
        raise ParameterError(f"need 0 <= i <= n, got i={i}, n={n}")


def p_count(s: int, n: int, i: int) -> int:
    """Pointed dissections of the (sn+2)-gon by i diagonals: C(sn+i+1, i) * C(n-1, i)."""
    _check_dissection_params(s, n, i)
    return binomial(s * n + i + 1, i) * binomial(n - 1, i)


def q_count(s: int, n: int, i: int) -> int:
    """Dissections of the (sn+2)-gon by i diagonals into (sj+2)-gons."""
    return exact_div(p_count(s, n, i), i + 1)


def fuss_count(s: int, n: int) -> int:
    """Fuss number C(sn, n) / ((s-1)n + 1)."""
    _check_sn(s, n)
    return exact_div(binomial(s * n, n), (s - 1) * n + 1)


def a_count(s: int, n: int, i: int) -> int:
    """Completable i-spider partial collections in the annulus."""
    _check_spider_params(s, n, i)
    return binomial(s * n, i) * binomial(n, i)


def d_count(s: int, n: int, i: int) -> int:
    """Completable i-spider partial collections in the disc."""
    _check_spider_params(s, n, i)
    return exact_div(binomial(s * n, i) * binomial(n, i), i * (s - 1) + 1)


def annular_partial_count(s: int, n: int, i: int) -> int:
    """C(sn, i) * C(n + (s-2)i, n-i).

    Matches the brute-force annular partial counts at every size checked
    (sn <= 16). Equals ``a_count`` when s == 2 and differs from it for s >= 3.
    """
    _check_spider_params(s, n, i)
    return binomial(s * n, i) * binomial(n + (s - 2) * i, n - i)


def disc_partial_count(s: int, n: int, i: int) -> int:
    """``annular_partial_count`` / (i(s-1)+1): each disc partial has that many faces."""
    return exact_div(annular_partial_count(s, n, i), i * (s - 1) + 1)


def catalan(n: int) -> int:
    return fuss_count(2, n) if n >= 1 else 1


COUNTERS = {
    "q": q_count,
    "p": p_count,
    "a": a_count,
    "d": d_count,
}
