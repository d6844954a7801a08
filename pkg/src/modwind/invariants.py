"""Winding number, the three length functions, and variance constants.

The geometric length of a necklace is computed two independent ways:
as twice the log-sum of the Gauss-map orbit values (exact surds per
rotation, one square root each) and as twice the log of the larger
eigenvalue of the associated matrix.  The two routes agree up to
rounding and cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .cfcore import (
    as_word,
    eigenvalue_max,
    fixed_points,
    gauss_shift,
    matrix_of_word,
)
from .errors import BudgetError
from .necklace import Necklace


def winding(word):
    """Alternating sum a1 - a2 + a3 - ... - an of an even-length word."""
    word = as_word(word)
    if len(word) % 2 != 0:
        raise ValueError("winding needs an even-length word")
    return sum(a if i % 2 == 0 else -a for i, a in enumerate(word))


def word_length(word):
    """Length 2 * sum(a_i) of the group element in the S, M generators."""
    word = as_word(word)
    if len(word) % 2 != 0:
        raise ValueError("word length needs an even-length word")
    return 2 * sum(word)


def geodesic_length_logsum(word, precision=128):
    """2 * sum_j log(value of the j-th rotation of the period).

    Each summand is the exact purely periodic value of a rotated word;
    all rotations share the same discriminant, so one square root serves
    the whole orbit.
    """
    word = as_word(word)
    n = len(word)
    if n % 2 != 0:
        raise ValueError("geodesic length needs an even-length word")
    with mp.workprec(precision + 16):
        total = mp.mpf(0)
        sqrt_disc = None
        for j in range(1, n + 1):
            m = matrix_of_word(gauss_shift(word, j))
            w, _ = fixed_points(m)
            if sqrt_disc is None:
                sqrt_disc = mp.sqrt(w.D)
            total += mp.log((w.p + w.r * sqrt_disc) / w.q)
        return float(2 * total)


def geodesic_length_eigen(word, precision=128):
    """2 * log of the larger eigenvalue of the word's matrix."""
    word = as_word(word)
    if len(word) % 2 != 0:
        raise ValueError("geodesic length needs an even-length word")
    with mp.workprec(precision + 16):
        return float(2 * mp.log(eigenvalue_max(matrix_of_word(word), precision)))


@dataclass(frozen=True)
class GeodesicRecord:
    """All four invariants of one primitive closed geodesic."""

    necklace: Necklace
    psi: int
    lp: int
    lw: int
    lg: float


def build_record(necklace, precision=128, cross_check=False):
    """Bundle winding, period length, word length, geometric length."""
    rep = necklace.rep
    lg = geodesic_length_logsum(rep, precision)
    if cross_check:
        eig = geodesic_length_eigen(rep, precision)
        rel = abs(lg - eig) / eig
        if rel >= 1e-9:
            raise AssertionError(
                f"geodesic length mismatch for {rep}: {lg} vs {eig}"
            )
    return GeodesicRecord(
        necklace=necklace,
        psi=winding(rep),
        lp=len(rep),
        lw=word_length(rep),
        lg=lg,
    )


def sigma_p2(A):
    """Variance (A^2 - 1) / 12 of the period-length normalization."""
    if A <= 1:
        raise ValueError("A must exceed 1")
    return Fraction(A * A - 1, 12)


def sigma_w2(A):
    """Variance (A - 1) / 12 of the word-length normalization."""
    if A <= 1:
        raise ValueError("A must exceed 1")
    return Fraction(A - 1, 12)


def fibonacci(k):
    """F_1 = F_2 = 1 convention."""
    if k < 1:
        raise ValueError("Fibonacci index must be positive")
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


DEFAULT_WORD_BUDGET = 50_000_000


def ck_constant(A, k, budget=DEFAULT_WORD_BUDGET):
    """Truncated ergodic average (2 / A^k) * sum over [A]^k of log(value).

    The value of a word is its exact finite continued fraction p/q; the
    convergent numerators and denominators are built incrementally for
    all A^k words at once, and the logs are pairwise-summed.
    """
    if A <= 1:
        raise ValueError("A must exceed 1")
    if k < 1:
        raise ValueError("truncation depth must be positive")
    total = A**k
    if total > budget:
        raise BudgetError(f"A^k = {total} exceeds word budget {budget}")
    chunk = 1 << 22
    partials = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        size = idx.size
        h, h_prev = np.ones(size, dtype=np.int64), np.zeros(size, dtype=np.int64)
        q, q_prev = np.zeros(size, dtype=np.int64), np.ones(size, dtype=np.int64)
        for i in range(k):
            digit = (idx // A ** (k - 1 - i)) % A + 1
            h, h_prev = digit * h + h_prev, h
            q, q_prev = digit * q + q_prev, q
        logs = np.log(h.astype(np.float64)) - np.log(q.astype(np.float64))
        partials.append(float(np.sum(logs)))
    return 2.0 * math.fsum(partials) / total


@dataclass(frozen=True)
class ChatEstimate:
    """Truncated estimate c_k of the ergodic constant, with its bound."""

    A: int
    k: int
    c_k: float
    error_bound: float

    @property
    def sigma_g2(self):
        return float(sigma_p2(self.A)) / self.c_k

    @property
    def chat_interval(self):
        return (self.c_k - self.error_bound, self.c_k + self.error_bound)

    @property
    def sigma_g2_interval(self):
        s = float(sigma_p2(self.A))
        lo, hi = self.chat_interval
        return (s / hi, s / lo)


def chat_estimate(A, tol, budget=DEFAULT_WORD_BUDGET):
    """Smallest-depth estimate whose Cauchy bound 2/F_k^2 meets tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    k = 1
    while 2.0 / fibonacci(k) ** 2 > tol:
        k += 1
    if A**k > budget:
        best_k = max(j for j in range(1, k) if A**j <= budget)
        best = ChatEstimate(
            A=A,
            k=best_k,
            c_k=ck_constant(A, best_k, budget),
            error_bound=2.0 / fibonacci(best_k) ** 2,
        )
        raise BudgetError(
            f"depth {k} needs A^k = {A**k} words (budget {budget}); "
            f"best achievable bound is {best.error_bound}",
            best=best,
        )
    return ChatEstimate(
        A=A, k=k, c_k=ck_constant(A, k, budget), error_bound=2.0 / fibonacci(k) ** 2
    )
