"""Mergeable exact winding statistics and Gaussian comparison.

The central object is an exact joint occurrence table keyed by
(period length, winding, word length).  The table is tiny even for tens
of millions of geodesics, so CDFs, moments, and characteristic functions
under the period / maximal-period / word-length normalizations are exact
integer computations.  The geometric-length normalization is not
lattice-valued and is handled by a fixed binning whose contribution to
the KS distance is reported as an explicit error bound.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .invariants import sigma_p2

PERIOD = "period"
MAXN = "maxn"
WORD = "word"
GEOM = "geom"
NORMALIZATIONS = (PERIOD, MAXN, WORD, GEOM)


@dataclass(frozen=True)
class HistConfig:
    """Fixed binning over [lo, hi] with explicit under/overflow cells."""

    lo: float
    hi: float
    bins: int

    def __post_init__(self):
        if not (self.hi > self.lo) or self.bins < 2:
            raise ValueError("invalid histogram configuration")

    @property
    def width(self):
        return (self.hi - self.lo) / self.bins


def default_hist(A, bins=8192):
    # [-8 sigma_p, 8 sigma_p] also covers the geometric normalization,
    # whose variance is strictly smaller.
    L = 8.0 * math.sqrt(float(sigma_p2(A)))
    return HistConfig(lo=-L, hi=L, bins=bins)


class JointCounts:
    """Exact mergeable accumulator of winding statistics.

    table maps (n, psi, lw) to an exact count.  Per period length n we
    also keep a binned histogram and running moments of psi/sqrt(lg),
    and running moments of the ratios lg/n and lw/n, so reports can be
    restricted to any even N' <= N without re-enumerating.
    """

    def __init__(self, A, N, hist=None):
        if A <= 1 or N < 2 or N % 2 != 0:
            raise ValueError("need A > 1 and even N >= 2")
        self.A = A
        self.N = N
        self.hist = hist if hist is not None else default_hist(A)
        self.table = Counter()
        self.lg_hist = {}
        self.lg_moments = {}
        self.ratio_moments = {}
        self.check_count = 0
        self.check_max_rel = 0.0

    def config(self):
        return (self.A, self.N, self.hist)

    def _hist_row(self, n):
        if n not in self.lg_hist:
            self.lg_hist[n] = np.zeros(self.hist.bins + 2, dtype=np.int64)
            self.lg_moments[n] = [0, 0.0, 0.0]
            self.ratio_moments[n] = [0, 0.0, 0.0, 0.0, 0.0]
        return self.lg_hist[n]

    def accumulate(self, rec):
        """Add one geodesic record; O(1)."""
        n, psi, lw = rec.lp, rec.psi, rec.lw
        if n % 2 != 0 or n < 2 or n > self.N:
            raise ValueError(f"period length {n} inconsistent with N={self.N}")
        if abs(psi) > (self.A - 1) * n // 2:
            raise ValueError(f"winding {psi} out of range for n={n}, A={self.A}")
        if not 2 * n <= lw <= 2 * self.A * n:
            raise ValueError(f"word length {lw} out of range for n={n}, A={self.A}")
        self.table[(n, psi, lw)] += 1
        row = self._hist_row(n)
        x = psi / math.sqrt(rec.lg)
        idx = int(math.floor((x - self.hist.lo) / self.hist.width))
        row[min(max(idx, -1), self.hist.bins) + 1] += 1
        mom = self.lg_moments[n]
        mom[0] += 1
        mom[1] += x
        mom[2] += x * x
        rat = self.ratio_moments[n]
        rg = rec.lg / n
        rw = rec.lw / n
        rat[0] += 1
        rat[1] += rg
        rat[2] += rg * rg
        rat[3] += rw
        rat[4] += rw * rw

    def total_count(self):
        return sum(self.table.values())

    def restricted(self, N):
        """View of the accumulator limited to period lengths <= N."""
        if N < 2 or N % 2 != 0 or N > self.N:
            raise ValueError(f"invalid restriction N={N}")
        out = JointCounts(self.A, N, self.hist)
        for key, cnt in self.table.items():
            if key[0] <= N:
                out.table[key] = cnt
        for n in self.lg_hist:
            if n <= N:
                out.lg_hist[n] = self.lg_hist[n].copy()
                out.lg_moments[n] = list(self.lg_moments[n])
                out.ratio_moments[n] = list(self.ratio_moments[n])
        out.check_count = self.check_count
        out.check_max_rel = self.check_max_rel
        return out


def merge(a, b):
    """Cellwise sum of two accumulators with identical configuration."""
    if a.config() != b.config():
        raise ValueError("cannot merge accumulators with different configs")
    out = JointCounts(a.A, a.N, a.hist)
    out.table = a.table + b.table
    for src in (a, b):
        for n in src.lg_hist:
            row = out._hist_row(n)
            row += src.lg_hist[n]
            for i in range(3):
                out.lg_moments[n][i] += src.lg_moments[n][i]
            for i in range(5):
                out.ratio_moments[n][i] += src.ratio_moments[n][i]
    out.check_count = a.check_count + b.check_count
    out.check_max_rel = max(a.check_max_rel, b.check_max_rel)
    return out


def _table_values(acc, normalization):
    """Exact support of the normalized winding, as value -> count."""
    if normalization == PERIOD:
        norm = lambda n, lw: math.sqrt(n)
    elif normalization == MAXN:
        norm = lambda n, lw: math.sqrt(acc.N)
    elif normalization == WORD:
        norm = lambda n, lw: math.sqrt(lw)
    else:
        raise ValueError(f"no exact table for normalization {normalization!r}")
    values = Counter()
    for (n, psi, lw), cnt in acc.table.items():
        values[psi / norm(n, lw)] += cnt
    return values


def empirical_cdf(acc, normalization):
    """Right-continuous empirical CDF as a list of (x, F(x)) points."""
    total = acc.total_count()
    if total == 0:
        raise ValueError("empty accumulator")
    if normalization == GEOM:
        counts = np.zeros(acc.hist.bins + 2, dtype=np.int64)
        for n, row in acc.lg_hist.items():
            counts += row
        points = [(acc.hist.lo, counts[0] / total)]
        running = int(counts[0])
        for i in range(acc.hist.bins):
            running += int(counts[i + 1])
            x = acc.hist.lo + (i + 1) * acc.hist.width
            points.append((x, running / total))
        return points
    values = _table_values(acc, normalization)
    points = []
    running = 0
    for x in sorted(values):
        running += values[x]
        points.append((x, running / total))
    return points


def gaussian_cdf(x, sigma2):
    """CDF of a centered Gaussian with the given variance."""
    if sigma2 <= 0:
        raise ValueError("variance must be positive")
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0 * sigma2)))


@dataclass
class DistributionReport:
    normalization: str
    sigma2_target: float
    ks: float
    ks_error_bound: float
    mean: float
    variance: float
    count: int
    cdf_points: list = field(repr=False, default_factory=list)


def _moments(acc, normalization):
    total = acc.total_count()
    if normalization == GEOM:
        cnt = sum(m[0] for m in acc.lg_moments.values())
        s = math.fsum(m[1] for m in acc.lg_moments.values())
        s2 = math.fsum(m[2] for m in acc.lg_moments.values())
        mean = s / cnt
        return mean, s2 / cnt - mean * mean
    values = _table_values(acc, normalization)
    mean = math.fsum(c * x for x, c in values.items()) / total
    var = math.fsum(c * x * x for x, c in values.items()) / total - mean * mean
    return mean, var


def ks_distance(acc, normalization, sigma2):
    """KS distance to N(0, sigma2), evaluated on both sides of each jump.

    For the exact table-based normalizations the distance itself is
    exact; for the binned geometric normalization the report carries the
    discretization bound (largest single-bin mass plus tail mass).
    """
    total = acc.total_count()
    if total == 0:
        raise ValueError("empty accumulator")
    points = empirical_cdf(acc, normalization)
    ks = 0.0
    prev = 0.0
    for x, f in points:
        target = gaussian_cdf(x, sigma2)
        ks = max(ks, abs(f - target), abs(prev - target))
        prev = f
    ks = max(ks, 1.0 - prev)
    bound = 0.0
    if normalization == GEOM:
        counts = np.zeros(acc.hist.bins + 2, dtype=np.int64)
        for row in acc.lg_hist.values():
            counts += row
        tail = int(counts[0] + counts[-1])
        bound = (int(counts[1:-1].max()) + tail) / total
    mean, var = _moments(acc, normalization)
    return DistributionReport(
        normalization=normalization,
        sigma2_target=float(sigma2),
        ks=ks,
        ks_error_bound=bound,
        mean=mean,
        variance=var,
        count=total,
        cdf_points=points,
    )


def empirical_char_fn(acc, normalization, t):
    """Empirical characteristic function (real, imaginary) at t.

    Exact-table normalizations only; computed from the joint table, so
    it is replayable for any t after a single enumeration pass.
    """
    if normalization not in (PERIOD, MAXN):
        raise ValueError(f"characteristic function unsupported for {normalization!r}")
    total = acc.total_count()
    if total == 0:
        raise ValueError("empty accumulator")
    values = _table_values(acc, normalization)
    re = math.fsum(c * math.cos(t * x) for x, c in values.items()) / total
    im = math.fsum(c * math.sin(t * x) for x, c in values.items()) / total
    return re, im


def ratio_report(acc):
    """Sample mean/variance of lg/lp and lw/lp: (mean_g, var_g, mean_w, var_w)."""
    cnt = sum(m[0] for m in acc.ratio_moments.values())
    if cnt == 0:
        raise ValueError("empty accumulator")
    sg = math.fsum(m[1] for m in acc.ratio_moments.values())
    sg2 = math.fsum(m[2] for m in acc.ratio_moments.values())
    sw = math.fsum(m[3] for m in acc.ratio_moments.values())
    sw2 = math.fsum(m[4] for m in acc.ratio_moments.values())
    mean_g = sg / cnt
    mean_w = sw / cnt
    return mean_g, sg2 / cnt - mean_g**2, mean_w, sw2 / cnt - mean_w**2


def _fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return f"{x:.17g}"
    return json.dumps(x)


def dumps17(obj, indent=0):
    """JSON text with floats rendered to 17 significant digits."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        items = [f'{inner}{json.dumps(k)}: {dumps17(v, indent + 2)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        items = [f"{inner}{dumps17(v, indent + 2)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return _fmt(obj)


def write_table_csv(acc, path):
    """Exact joint table: one row per nonzero cell, lexicographic order."""
    with open(path, "w") as fh:
        fh.write("n,psi,lw,count\n")
        for n, psi, lw in sorted(acc.table):
            fh.write(f"{n},{psi},{lw},{acc.table[(n, psi, lw)]}\n")


def write_cdf_csv(report, path):
    with open(path, "w") as fh:
        fh.write("x,F_emp,F_gauss\n")
        for x, f in report.cdf_points:
            g = gaussian_cdf(x, report.sigma2_target)
            fh.write(f"{x:.17g},{f:.17g},{g:.17g}\n")


def report_json(report, A, N):
    return {
        "A": A,
        "N": N,
        "normalization": report.normalization,
        "sigma2": report.sigma2_target,
        "ks": report.ks,
        "ks_error_bound": report.ks_error_bound,
        "mean": report.mean,
        "variance": report.variance,
        "count": report.count,
    }
