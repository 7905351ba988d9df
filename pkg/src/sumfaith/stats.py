"""Pearson and Spearman correlation with two-tailed significance.

The t-distribution tail is evaluated through the regularized incomplete
beta function (continued fraction), so there is no dependency on an
external statistics package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations


class ConstantVectorError(ValueError):
    """Correlation is undefined when either vector is constant."""


@dataclass(frozen=True)
class CorrelationReport:
    pearson_r: float
    spearman_rho: float
    p_pearson: float
    p_spearman: float
    n: int


def _check_pair(x: list[float], y: list[float]) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 3:
        raise ValueError(f"need at least 3 paired values, got {len(x)}")
    for v in x + y:
        if not math.isfinite(v):
            raise ValueError("values must be finite")


def _betacf(a: float, b: float, x: float) -> float:
    # Continued fraction for the incomplete beta (modified Lentz).
    max_iter = 300
    eps = 1e-15
    fpmin = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < fpmin:
        d = fpmin
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    return h


def _betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    log_bt = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log(1.0 - x)
    )
    bt = math.exp(log_bt)
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def student_t_sf(t: float, df: int) -> float:
    """One-sided upper tail P(T > t) of Student's t with ``df`` degrees of freedom."""
    if df < 1:
        raise ValueError(f"degrees of freedom must be >= 1, got {df}")
    if t < 0:
        return 1.0 - student_t_sf(-t, df)
    x = df / (df + t * t)
    return 0.5 * _betainc(df / 2.0, 0.5, x)


def _two_tailed_p(r: float, n: int) -> float:
    df = n - 2
    denom = 1.0 - r * r
    if denom <= 0.0:
        return 0.0
    t = abs(r) * math.sqrt(df / denom)
    return min(1.0, 2.0 * student_t_sf(t, df))


def pearson(x: list[float], y: list[float]) -> tuple[float, float]:
    """Sample Pearson coefficient and two-tailed p-value (t approximation)."""
    _check_pair(x, y)
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    sxx = sum((v - mx) ** 2 for v in x)
    syy = sum((v - my) ** 2 for v in y)
    if sxx == 0.0 or syy == 0.0:
        raise ConstantVectorError("correlation undefined for a constant vector")
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    r = sxy / math.sqrt(sxx * syy)
    r = max(-1.0, min(1.0, r))
    return r, _two_tailed_p(r, n)


def rank(values: list[float]) -> list[float]:
    """1-based ranks; ties get the average of their rank positions."""
    n = len(values)
    order = sorted(range(n), key=lambda i: values[i])
    ranks = [0.0] * n
    i = 0
    while i < n:
        j = i
        while j + 1 < n and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j + 2) / 2.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def spearman(
    x: list[float], y: list[float], exact_permutation: bool = False
) -> tuple[float, float]:
    """Spearman rho (Pearson on ranks) and its p-value.

    The default p-value is the t approximation applied to rho. With
    ``exact_permutation`` the full permutation distribution is enumerated
    instead (only feasible for n <= 10).
    """
    _check_pair(x, y)
    rx, ry = rank(x), rank(y)
    rho, p = pearson(rx, ry)
    if not exact_permutation:
        return rho, p
    n = len(x)
    if n > 10:
        raise ValueError("exact permutation p-value is limited to n <= 10")
    mx = sum(rx) / n
    sx = math.sqrt(sum((v - mx) ** 2 for v in rx))
    sy = math.sqrt(sum((v - mx) ** 2 for v in ry))
    observed = abs(sum((a - mx) * (b - mx) for a, b in zip(rx, ry)) / (sx * sy))
    count = total = 0
    for perm in permutations(ry):
        stat = abs(sum((a - mx) * (b - mx) for a, b in zip(rx, perm)) / (sx * sy))
        if stat >= observed - 1e-12:
            count += 1
        total += 1
    return rho, count / total


def correlation_report(x: list[float], y: list[float]) -> CorrelationReport:
    r, p_r = pearson(x, y)
    rho, p_rho = spearman(x, y)
    return CorrelationReport(r, rho, p_r, p_rho, len(x))


def significance_stars(p: float) -> str:
    """Mark p < 0.05 with one star and p < 0.001 with two."""
    if p < 0.001:
        return "**"
    if p < 0.05:
        return "*"
    return ""
