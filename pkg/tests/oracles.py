"""Independent reference computations for the tests.

These deliberately avoid the package's own formulas: quantile integrals in
exact rational arithmetic, numpy moments, mpmath for the entropic risk and
brute-force pairwise or permutation checks.
"""

import itertools
from fractions import Fraction

import mpmath
import numpy as np


def _atoms(values, probs):
    return sorted((Fraction(x), Fraction(p)) for x, p in zip(values, probs))


def var_oracle(values, probs, alpha):
    """-min{x : P(X <= x) >= alpha}, scanning every support point."""
    return var_oracle_choices(values, probs, alpha)[0]


def var_oracle_choices(values, probs, alpha, band=Fraction(1, 10**15)):
    """Admissible VaR values when float weights are read as exact rationals.

    If some cumulative mass lies within ``band`` of alpha, the tie is below
    float resolution and the next support point is admissible too.
    """
    a = Fraction(alpha)
    ps = [Fraction(p) for p in probs]
    total = sum(ps)
    support = sorted(set(values))
    masses = [sum(p for v, p in zip(values, ps) if v <= x) / total for x in support]
    i = next(k for k, m in enumerate(masses) if m >= a)
    choices = [-float(support[i])]
    if i > 0 and a - masses[i - 1] <= band:
        choices.append(-float(support[i - 1]))
    return choices


def es_oracle(values, probs, alpha):
    """-(1/alpha) * integral_0^alpha q(u) du for the step quantile function, exactly."""
    a = Fraction(alpha)
    atoms = _atoms(values, probs)
    total = sum(p for _, p in atoms)
    taken = Fraction(0)
    integral = Fraction(0)
    for x, p in atoms:
        w = min(p / total, a - taken)
        if w <= 0:
            break
        integral += w * x
        taken += w
    return -float(integral / a)


def entropic_oracle(values, probs, theta, dps=50):
    with mpmath.workdps(dps):
        s = mpmath.fsum(mpmath.mpf(p) * mpmath.exp(-mpmath.mpf(theta) * mpmath.mpf(x))
                        for x, p in zip(values, probs))
        return float(mpmath.log(s) / theta)


def sd_oracle(values, probs):
    v = np.asarray(values, dtype=float)
    w = np.asarray(probs, dtype=float)
    mu = np.average(v, weights=w)
    return float(np.sqrt(np.average((v - mu) ** 2, weights=w)))


def mad_oracle(values, probs):
    v = np.asarray(values, dtype=float)
    w = np.asarray(probs, dtype=float)
    mu = np.average(v, weights=w)
    return float(np.average(np.abs(v - mu), weights=w))


def comonotonic_pairs(x, y):
    """Definition by all ordered outcome pairs."""
    n = len(x)
    return all((x[i] - x[j]) * (y[i] - y[j]) >= 0 for i in range(n) for j in range(n))


def comonotonic_by_permutation(x, y):
    """Some single reordering makes both sequences nondecreasing (brute force, small n)."""
    n = len(x)
    for perm in itertools.permutations(range(n)):
        if all(x[perm[k]] <= x[perm[k + 1]] and y[perm[k]] <= y[perm[k + 1]] for k in range(n - 1)):
            return True
    return False


def fig1_gauge(x, y):
    """inf{m > 0 : (y - |x|)/m <= 1} for the set {y - |x| <= 1}."""
    return max(y - abs(x), 0.0)


def simplex_gauge(u, v):
    if u < 0 or v < 0:
        return float("inf")
    return u + v
