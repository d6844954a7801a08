"""Primitivity, even-shift canonicalization, and counting of necklaces.

A necklace here is an equivalence class of primitive even-length words
over {1..A} under cyclic shifts by *even* amounts; each class is in
one-to-one correspondence with a primitive low-lying closed geodesic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .cfcore import as_word


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def minimal_period(word):
    """Smallest divisor p of len(word) such that the word is p-periodic."""
    word = as_word(word)
    n = len(word)
    for d in _divisors(n):
        if all(word[i] == word[i % d] for i in range(n)):
            return d
    return n


def is_primitive(word):
    """Primitivity test for even-length words.

    A word of length n is primitive when its minimal period is n, with
    one exception: when n/2 is odd, minimal period n/2 also counts (the
    doubled period is then the minimal *even* period).
    """
    word = as_word(word)
    n = len(word)
    if n % 2 != 0:
        raise ValueError("primitivity is defined for even-length words")
    p = minimal_period(word)
    if p == n:
        return True
    half = n // 2
    return half % 2 == 1 and p == half


def canonical_even_shift(word):
    """Lexicographically smallest rotation among the even cyclic shifts."""
    word = as_word(word)
    n = len(word)
    if n % 2 != 0:
        raise ValueError("even-shift canonicalization needs even length")
    return min(word[s:] + word[:s] for s in range(0, n, 2))


@dataclass(frozen=True)
class Necklace:
    """Canonical primitive representative of an even-shift class."""

    rep: tuple

    def __post_init__(self):
        rep = as_word(self.rep)
        if rep != canonical_even_shift(rep):
            raise ValueError("representative is not canonical")
        if not is_primitive(rep):
            raise ValueError("representative is not primitive")
        object.__setattr__(self, "rep", rep)

    @property
    def n(self):
        return len(self.rep)


def mobius(k):
    """Moebius function via trial-division factorization."""
    if k < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result


def _check_bound(A):
    if A <= 1:
        raise ValueError("alphabet bound A must exceed 1")


def count_min_period(A, n):
    """Exact number of words in [A]^n whose minimal period is n.

    Moebius inversion of sum_{k|n} f(k) = A^n.
    """
    _check_bound(A)
    if n < 1:
        raise ValueError("n must be positive")
    return sum(mobius(k) * A ** (n // k) for k in _divisors(n))


def count_Pn(A, n):
    """Exact number of necklaces of period length n.

    Every even-shift class of primitive length-n words has exactly n/2
    members, counting both the minimal-period-n words and (for n/2 odd)
    the doubled words of minimal period n/2.
    """
    _check_bound(A)
    if n < 2 or n % 2 != 0:
        raise ValueError("period length must be even and >= 2")
    total = count_min_period(A, n)
    half = n // 2
    if half % 2 == 1:
        total += count_min_period(A, half)
    total *= 2
    assert total % n == 0
    return total // n


def pi_exact(A, N):
    """Exact number of necklaces of period length <= N."""
    _check_bound(A)
    if N < 2 or N % 2 != 0:
        raise ValueError("N must be even and >= 2")
    return sum(count_Pn(A, n) for n in range(2, N + 1, 2))


@dataclass(frozen=True)
class CountReport:
    A: int
    N: int
    exact: int
    asymptotic: float

    @property
    def relative_error(self):
        return abs(self.exact - self.asymptotic) / self.asymptotic


def pi_asymptotic(A, N):
    """Asymptotic count c_A * A^N / N with c_A = 2 A^2 / (A^2 - 1)."""
    exact = pi_exact(A, N)
    c_A = Fraction(2 * A * A, A * A - 1)
    asymptotic = float(c_A * Fraction(A**N, N))
    return CountReport(A=A, N=N, exact=exact, asymptotic=asymptotic)


def _owned_by_shard(rep, shard):
    """A shard owns a necklace when the periodic extension of the
    canonical representative starts with the shard's digit prefix."""
    if not shard:
        return True
    n = len(rep)
    return all(shard[i] == rep[i % n] for i in range(len(shard)))


def enumerate_necklaces(A, N, shard=(), visitor=None):
    """Visit every necklace of period length <= N owned by the shard.

    Reference implementation: scans all words of each even length in
    lexicographic order and keeps the canonical primitive ones.  Any
    prefix-free covering family of shards partitions the full set, so
    shards can run independently and merge downstream.
    """
    _check_bound(A)
    if N % 2 != 0:
        raise ValueError("N must be even")
    shard = tuple(int(d) for d in shard)
    for d in shard:
        if not 1 <= d <= A:
            raise ValueError(f"shard digit {d} outside 1..{A}")
    out = []
    sink = visitor if visitor is not None else out.append
    for n in range(2, N + 1, 2):
        k = min(len(shard), n)
        prefix = shard[:k]
        for suffix in itertools.product(range(1, A + 1), repeat=n - k):
            word = prefix + suffix
            if not is_primitive(word):
                continue
            if word != canonical_even_shift(word):
                continue
            if not _owned_by_shard(word, shard):
                continue
            sink(Necklace(word))
    return None if visitor is not None else out


def sample_uniform(A, n, rng_seed):
    """Uniform draw from the necklaces of period length exactly n.

    Rejection sampling: a uniform word is primitive with overwhelming
    probability, and each necklace has exactly n/2 word preimages, so
    canonicalizing a uniform primitive word is uniform on necklaces.
    """
    _check_bound(A)
    if n < 2 or n % 2 != 0:
        raise ValueError("period length must be even and >= 2")
    rng = random.Random(rng_seed)
    return sample_uniform_rng(A, n, rng)


def sample_uniform_rng(A, n, rng):
    while True:
        word = tuple(rng.randint(1, A) for _ in range(n))
        if is_primitive(word):
            return Necklace(canonical_even_shift(word))
