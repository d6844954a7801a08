"""Vectorized sharded enumeration of all necklaces up to period N.

Words of a given even length with a fixed digit prefix are generated as
a numpy array, filtered down to canonical primitive representatives, and
their invariants accumulated in one pass.  Shards are digit prefixes of
the canonical representative; any prefix-free covering family yields a
disjoint partition, so shard accumulators merge exactly.

Digit matrices are multiplied in int64, which is exact as long as
(A+1)^n < 2^62; the float64 trace then gives the geometric length with
relative error far below the 1e-9 dual-method tolerance.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import invariants, necklace
from .stats import JointCounts, merge

# int64 matrix entries stay exact below this bound on (A+1)^n.
_ENTRY_BITS = 62


def _check_feasible(A, N):
    if (N * math.log2(A + 1)) >= _ENTRY_BITS:
        raise ValueError(f"int64 fast path infeasible for A={A}, N={N}")
    if N * (int(A).bit_length()) > 63:
        raise ValueError(f"packed rotation keys infeasible for A={A}, N={N}")


def _proper_divisors(n):
    return [d for d in range(1, n) if n % d == 0]


def _gen_words(A, n, prefix, chunk_start, chunk_size):
    """Digit array of shape (chunk_size, n) for words with the prefix,
    suffixes enumerated lexicographically from chunk_start."""
    k = len(prefix)
    m = n - k
    digits = np.empty((chunk_size, n), dtype=np.int8)
    for i, d in enumerate(prefix):
        digits[:, i] = d
    idx = np.arange(chunk_start, chunk_start + chunk_size, dtype=np.int64)
    for i in range(m):
        digits[:, k + i] = (idx // A ** (m - 1 - i)) % A + 1
    return digits


def _minimal_period(digits):
    n = digits.shape[1]
    per = np.full(digits.shape[0], n, dtype=np.int16)
    unset = np.ones(digits.shape[0], dtype=bool)
    cols = np.arange(n)
    for d in _proper_divisors(n):
        periodic = (digits == digits[:, cols % d]).all(axis=1)
        sel = unset & periodic
        per[sel] = d
        unset &= ~periodic
    return per


def _canonical_mask(digits, A):
    """True where the word is the lex-min among its even rotations."""
    n = digits.shape[1]
    b = int(A).bit_length()
    key = np.zeros(digits.shape[0], dtype=np.uint64)
    for i in range(n):
        key = (key << np.uint64(b)) | digits[:, i].astype(np.uint64)
    full = np.uint64((1 << (n * b)) - 1)
    ok = np.ones(digits.shape[0], dtype=bool)
    for s in range(2, n, 2):
        rot = ((key << np.uint64(s * b)) & full) | (key >> np.uint64((n - s) * b))
        ok &= key <= rot
    return ok


def _primitive_mask(per, n):
    prim = per == n
    half = n // 2
    if half % 2 == 1:
        prim |= per == half
    return prim


def _geodesic_lengths(digits):
    """Float64 geometric lengths 2*log(lambda) via exact int64 traces."""
    count, n = digits.shape
    a = np.ones(count, dtype=np.int64)
    b = np.zeros(count, dtype=np.int64)
    c = np.zeros(count, dtype=np.int64)
    d = np.ones(count, dtype=np.int64)
    for i in range(n):
        w = digits[:, i].astype(np.int64)
        a, b = a * w + b, a
        c, d = c * w + d, c
    t = (a + d).astype(np.float64)
    return 2.0 * np.log((t + np.sqrt(t * t - 4.0)) / 2.0)


def _accumulate_block(acc, n, digits, lg, check_rate, check_offset):
    """Fold a block of canonical primitive words into the accumulator."""
    A = acc.A
    count = digits.shape[0]
    signs = np.where(np.arange(n) % 2 == 0, 1, -1).astype(np.int64)
    psi = digits.astype(np.int64) @ signs
    lw = 2 * digits.astype(np.int64).sum(axis=1)

    pmax = (A - 1) * n // 2
    lwmax = 2 * A * n
    comp = (psi + pmax) * (lwmax + 1) + lw
    counts = np.bincount(comp, minlength=(2 * pmax + 1) * (lwmax + 1))
    for flat in np.nonzero(counts)[0]:
        p = int(flat) // (lwmax + 1) - pmax
        w = int(flat) % (lwmax + 1)
        acc.table[(n, p, w)] += int(counts[flat])

    row = acc._hist_row(n)
    x = psi / np.sqrt(lg)
    idx = np.floor((x - acc.hist.lo) / acc.hist.width).astype(np.int64)
    np.clip(idx, -1, acc.hist.bins, out=idx)
    row += np.bincount(idx + 1, minlength=acc.hist.bins + 2)

    mom = acc.lg_moments[n]
    mom[0] += count
    mom[1] += float(x.sum())
    mom[2] += float((x * x).sum())
    rat = acc.ratio_moments[n]
    rg = lg / n
    rw = lw / n
    rat[0] += count
    rat[1] += float(rg.sum())
    rat[2] += float((rg * rg).sum())
    rat[3] += float(rw.sum())
    rat[4] += float((rw * rw).sum())

    if check_rate:
        for i in range((-check_offset) % check_rate, count, check_rate):
            word = tuple(int(v) for v in digits[i])
            logsum = invariants.geodesic_length_logsum(word)
            eigen = invariants.geodesic_length_eigen(word)
            rel = abs(logsum - eigen) / eigen
            acc.check_count += 1
            acc.check_max_rel = max(acc.check_max_rel, rel)
    return count


def run_shard(A, N, prefix, hist=None, check_rate=0, chunk=1 << 22):
    """Accumulate every necklace owned by one shard prefix."""
    _check_feasible(A, N)
    acc = JointCounts(A, N, hist)
    prefix = tuple(prefix)
    checked = 0
    for n in range(2, N + 1, 2):
        if n < len(prefix):
            _run_short(acc, A, n, prefix)
            continue
        p = prefix
        total = A ** (n - len(p))
        for start in range(0, total, chunk):
            size = min(chunk, total - start)
            digits = _gen_words(A, n, p, start, size)
            keep = _primitive_mask(_minimal_period(digits), n)
            keep &= _canonical_mask(digits, A)
            block = digits[keep]
            if block.shape[0]:
                lg = _geodesic_lengths(block)
                checked += _accumulate_block(acc, n, block, lg, check_rate, checked)
    return acc


def _run_short(acc, A, n, prefix):
    # period length shorter than the shard prefix: the shard owns the
    # necklace when the prefix matches the periodic extension.
    for word in itertools.product(range(1, A + 1), repeat=n):
        if not necklace.is_primitive(word):
            continue
        if word != necklace.canonical_even_shift(word):
            continue
        if not necklace._owned_by_shard(word, prefix):
            continue
        acc.accumulate(invariants.build_record(necklace.Necklace(word)))


def shard_prefixes(A, depth):
    if depth == 0:
        return [()]
    return list(itertools.product(range(1, A + 1), repeat=depth))


def choose_depth(A, N, per_shard=1 << 24):
    """Smallest prefix depth keeping each shard below per_shard words."""
    depth = 0
    while depth < N and A ** (N - depth) > per_shard:
        depth += 1
    return depth


def _worker(args):
    return run_shard(*args)


def run(A, N, hist=None, threads=1, check_rate=0, depth=None, progress=None):
    """Full sharded enumeration; returns the merged accumulator.

    Shards are merged in a fixed order, so the result is independent of
    the thread count.
    """
    _check_feasible(A, N)
    if depth is None:
        depth = choose_depth(A, N)
    prefixes = shard_prefixes(A, depth)
    jobs = [(A, N, p, hist, check_rate) for p in prefixes]
    if threads <= 1 or len(prefixes) == 1:
        shards = []
        for i, job in enumerate(jobs):
            shards.append(_worker(job))
            if progress:
                progress(i + 1, len(jobs))
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            shards = []
            for i, acc in enumerate(pool.map(_worker, jobs)):
                shards.append(acc)
                if progress:
                    progress(i + 1, len(jobs))
    result = shards[0]
    for acc in shards[1:]:
        result = merge(result, acc)
    return result
