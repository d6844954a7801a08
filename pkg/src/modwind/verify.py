"""Self-contained oracle suite behind the `verify` command.

Every check pits an implementation against an independent brute-force
route at small scale: Moebius counting vs direct scans, necklace
enumeration vs exhaustive even-shift classification, exact moment
identities of the winding number, the dual geodesic-length routes, and
shard-independence of the accumulator.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import bulk, invariants, necklace
from .stats import merge


def _all_words(A, n):
    return itertools.product(range(1, A + 1), repeat=n)


def check_min_period_counts(A, n_max):
    """count_min_period against a direct scan of [A]^n."""
    failures = []
    for n in range(1, n_max + 1):
        brute = sum(1 for w in _all_words(A, n) if necklace.minimal_period(w) == n)
        formula = necklace.count_min_period(A, n)
        if brute != formula:
            failures.append(f"A={A} n={n}: scan {brute} != formula {formula}")
        total = sum(
            necklace.count_min_period(A, d) for d in range(1, n + 1) if n % d == 0
        )
        if total != A**n:
            failures.append(f"A={A} n={n}: divisor sum {total} != {A**n}")
    return failures


def brute_force_necklaces(A, n):
    """Canonical representatives from exhaustive classification."""
    reps = set()
    for w in _all_words(A, n):
        if necklace.is_primitive(w):
            reps.add(necklace.canonical_even_shift(w))
    return reps


def check_necklace_counts(A, n_max):
    failures = []
    for n in range(2, n_max + 1, 2):
        brute = brute_force_necklaces(A, n)
        enumerated = {nk.rep for nk in necklace.enumerate_necklaces(A, n) if nk.n == n}
        if brute != enumerated:
            failures.append(f"A={A} n={n}: enumerated set != brute-force set")
        if len(brute) != necklace.count_Pn(A, n):
            failures.append(
                f"A={A} n={n}: |P_n| formula {necklace.count_Pn(A, n)} "
                f"!= brute {len(brute)}"
            )
        prim_words = sum(1 for w in _all_words(A, n) if necklace.is_primitive(w))
        if len(brute) * (n // 2) != prim_words:
            failures.append(f"A={A} n={n}: orbit size n/2 violated")
    return failures


def check_moment_identities(A, n_max):
    """Sum of psi and psi^2 over ALL words, as exact integers."""
    failures = []
    for n in range(2, n_max + 1, 2):
        s1 = 0
        s2 = 0
        for w in _all_words(A, n):
            psi = invariants.winding(w)
            s1 += psi
            s2 += psi * psi
        expected = Fraction(A**n * n * (A * A - 1), 12)
        if s1 != 0:
            failures.append(f"A={A} n={n}: sum psi = {s1} != 0")
        if expected.denominator != 1 or s2 != expected.numerator:
            failures.append(f"A={A} n={n}: sum psi^2 = {s2} != {expected}")
    return failures


def check_dual_lengths(A, n_max, tol=1e-9):
    failures = []
    worst = 0.0
    for n in range(2, n_max + 1, 2):
        for nk in necklace.enumerate_necklaces(A, n):
            if nk.n != n:
                continue
            logsum = invariants.geodesic_length_logsum(nk.rep)
            eigen = invariants.geodesic_length_eigen(nk.rep)
            rel = abs(logsum - eigen) / eigen
            worst = max(worst, rel)
            if rel >= tol:
                failures.append(f"{nk.rep}: |logsum-eigen| rel {rel:.3e}")
    return failures, worst


def check_shard_independence(A, N):
    failures = []
    single = bulk.run(A, N, depth=0)
    for depth in (1, 2):
        shards = [bulk.run_shard(A, N, p) for p in bulk.shard_prefixes(A, depth)]
        acc = shards[0]
        for s in shards[1:]:
            acc = merge(acc, s)
        if acc.table != single.table:
            failures.append(f"depth-{depth} shard union differs from single pass")
        if acc.total_count() != necklace.pi_exact(A, N):
            failures.append(f"depth-{depth} total != pi_exact")
    return failures


def run_suite(A, N):
    """Returns a list of (name, failures) pairs."""
    results = []
    results.append(("min_period_counts", check_min_period_counts(A, min(N, 10))))
    results.append(("necklace_counts", check_necklace_counts(A, min(N, 8))))
    results.append(("moment_identities", check_moment_identities(A, min(N, 8))))
    dual_failures, _ = check_dual_lengths(A, min(N, 6))
    results.append(("dual_geodesic_length", dual_failures))
    results.append(("shard_independence", check_shard_independence(A, N)))
    return results
