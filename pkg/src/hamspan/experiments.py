"""Monte Carlo estimation of graph-property probabilities over G(n, p)."""

from __future__ import annotations

import csv
import hashlib
import io
import logging
import math
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from statistics import NormalDist
from typing import Callable, Iterable, Optional, TextIO

import numpy as np

from hamspan.graph import (
    Graph,
    delete_vertex,
    gen_gnp,
    has_triangle,
    two_coloring,
)
from hamspan.hamilton import (
    DEFAULT_CAP,
    DEFICIENT,
    FULL,
    UNKNOWN,
    VACUOUS,
    CapExceeded,
    has_hamilton_circuit,
    hamilton_generated_status,
    is_hamilton_connected,
    near_hamilton_status,
)

log = logging.getLogger(__name__)

CSV_HEADER = ["property", "n", "p", "trials", "successes", "unknown",
              "p_hat", "ci_low", "ci_high", "seed", "wall_ms"]
DEFAULT_SEED = 20130101
EXACT_LIMIT = 16
Z95 = NormalDist().inv_cdf(0.975)


# ---------------------------------------------------------------------------
# edge-probability formulas


def threshold_p(n: int, k: float, c: float) -> float:
    """(log n + k log log n + c) / n, clamped to [0, 1]."""
    return _clamp(_threshold_raw(n, k, c))[0]


def _threshold_raw(n, k, c):
    if n < 3:
        raise ValueError(f"log log n needs n >= 3, got {n}")
    return (math.log(n) + k * math.log(math.log(n)) + c) / n


def _clamp(p):
    if p > 1.0:
        return 1.0, True
    if p < 0.0:
        return 0.0, True
    return p, False


def limit_min_degree(k: int, c: float) -> float:
    """Limit of P[min degree = k+1] at p = (log n + k log log n + c)/n."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return math.exp(-math.exp(-c / math.factorial(k)))


@dataclass(frozen=True)
class PSpec:
    """An explicit p, the (k, c) threshold formula, or n^(-1/2 + eps)."""

    p: Optional[float] = None
    k: Optional[float] = None
    c: Optional[float] = None
    eps: Optional[float] = None

    def __post_init__(self):
        given = sum(x is not None for x in (self.p, self.k, self.eps))
        if given != 1 or (self.k is None) != (self.c is None):
            raise ValueError("give exactly one of p, (k, c) or eps")

    def resolve(self, n: int) -> tuple[float, bool]:
        if self.p is not None:
            if not 0.0 <= self.p <= 1.0:
                raise ValueError(f"p must lie in [0, 1], got {self.p}")
            return self.p, False
        if self.k is not None:
            return _clamp(_threshold_raw(n, self.k, self.c))
        return _clamp(n ** (-0.5 + self.eps))

    def describe(self) -> str:
        if self.p is not None:
            return f"p={self.p!r}"
        if self.k is not None:
            return f"formula k={self.k!r} c={self.c!r}"
        return f"eps={self.eps!r}"


@dataclass(frozen=True)
class TrialConfig:
    n: int
    p_spec: PSpec
    trials: int
    master_seed: int = DEFAULT_SEED
    property: str = "min_degree>=1"
    cap: int = DEFAULT_CAP
    exact_max_n: int = EXACT_LIMIT

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        get_predicate(self.property)

    def resolved(self) -> dict:
        p, clamped = self.p_spec.resolve(self.n)
        return {
            "n": self.n,
            "p_spec": self.p_spec.describe(),
            "p": p,
            "p_clamped": clamped,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "property": self.property,
            "cap": self.cap,
            "exact_max_n": self.exact_max_n,
        }


@dataclass
class SweepRecord:
    property: str
    n: int
    p: float
    trials: int
    successes: int
    unknown: int
    p_hat: float
    ci_low: float
    ci_high: float
    seed: int
    wall_ms: float
    p_clamped: bool = field(default=False, compare=False)

    def row(self) -> list[str]:
        return [
            self.property, str(self.n), _fmt(self.p), str(self.trials),
            str(self.successes), str(self.unknown), _fmt(self.p_hat),
            _fmt(self.ci_low), _fmt(self.ci_high), str(self.seed), _fmt(self.wall_ms),
        ]


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    if trials == 0:
        return math.nan, math.nan
    phat = successes / trials
    denom = 1 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    # clamp rounding drift so that lo <= phat <= hi holds exactly
    return min(max(0.0, centre - half), phat), max(min(1.0, centre + half), phat)


def trial_seed(master_seed: int, index: int) -> int:
    key = (master_seed & 0xFFFFFFFFFFFFFFFF).to_bytes(8, "little")
    digest = hashlib.blake2b(index.to_bytes(8, "little"), digest_size=8, key=key).digest()
    return int.from_bytes(digest, "little")


# ---------------------------------------------------------------------------
# predicates: Graph -> True / False / None (unknown)


Predicate = Callable[[Graph, int, int], Optional[bool]]


def _min_degree(g: Graph) -> int:
    return int(g.degrees.min()) if g.n else 0


def exists_degree2(g, cap, limit):
    return bool(np.any(g.degrees == 2))


def degree2_deletions_bipartite(g, cap, limit):
    for v in np.flatnonzero(g.degrees == 2):
        coloring, _ = two_coloring(delete_vertex(g, int(v)))
        if coloring is None:
            return False
    return True


def contains_triangle(g, cap, limit):
    return has_triangle(g)


def every_deletion_has_triangle(g, cap, limit):
    """G - v has a triangle for every v, i.e. no vertex lies on all triangles."""
    adj = g.adj
    common = (1 << g.n) - 1
    for u, v in g.edges:
        thirds = adj[u] & adj[v] & ~((2 << v) - 1)
        while thirds:
            low = thirds & -thirds
            common &= (1 << u) | (1 << v) | low
            if not common:
                return True
            thirds ^= low
    return False


def _exact(fn):
    def wrapped(g, cap, limit):
        if g.n > limit:
            return None
        try:
            return fn(g, cap)
        except CapExceeded:
            return None
    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


@_exact
def hamiltonian(g, cap):
    return has_hamilton_circuit(g)


@_exact
def hamilton_generated_full(g, cap):
    """Z_1 equals the span of the Hamilton circuits (vacuously true for forests)."""
    st = hamilton_generated_status(g, cap=cap)
    if st.kind == UNKNOWN:
        return None
    return st.kind in (FULL, VACUOUS)


@_exact
def quotient_dim_le1(g, cap):
    st = hamilton_generated_status(g, cap=cap)
    if st.kind == UNKNOWN:
        return None
    return st.quotient_dim <= 1


@_exact
def quotient_dim_eq1(g, cap):
    st = hamilton_generated_status(g, cap=cap)
    if st.kind == UNKNOWN:
        return None
    return st.kind == DEFICIENT and st.quotient_dim == 1


@_exact
def near_hamilton_span_full(g, cap):
    st = near_hamilton_status(g, cap=cap)
    if st.kind == UNKNOWN:
        return None
    return st.kind in (FULL, VACUOUS)


@_exact
def hamilton_connected(g, cap):
    return g.n >= 2 and is_hamilton_connected(g)


REGISTRY: dict[str, Predicate] = {
    "exists_degree2": exists_degree2,
    "degree2_deletions_bipartite": degree2_deletions_bipartite,
    "contains_triangle": contains_triangle,
    "every_deletion_has_triangle": every_deletion_has_triangle,
    "hamiltonian": hamiltonian,
    "hamilton_generated_full": hamilton_generated_full,
    "quotient_dim<=1": quotient_dim_le1,
    "quotient_dim=1": quotient_dim_eq1,
    "near_hamilton_span_full": near_hamilton_span_full,
    "hamilton_connected": hamilton_connected,
}

_MIN_DEG = re.compile(r"^min_degree(>=|=)(\d+)$")


def get_predicate(name: str) -> Predicate:
    """Look up a predicate; ``min_degree>=K`` and ``min_degree=K`` are parametric."""
    m = _MIN_DEG.match(name)
    if m:
        op, k = m.group(1), int(m.group(2))
        if op == ">=":
            return lambda g, cap, limit: _min_degree(g) >= k
        return lambda g, cap, limit: _min_degree(g) == k
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown property {name!r}") from None


def predicate_names() -> list[str]:
    return ["min_degree>=K", "min_degree=K"] + list(REGISTRY)


# ---------------------------------------------------------------------------
# estimation


def _run_trials(config: TrialConfig, p: float, indices: Iterable[int]) -> list[Optional[bool]]:
    pred = get_predicate(config.property)
    out = []
    for i in indices:
        g = gen_gnp(config.n, p, trial_seed(config.master_seed, i))
        out.append(pred(g, config.cap, config.exact_max_n))
    return out


def _chunk_job(args):
    config, p, lo, hi = args
    return lo, _run_trials(config, p, range(lo, hi))


def default_threads() -> int:
    env = os.environ.get("HAMSPAN_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def estimate(config: TrialConfig, threads: int = 1) -> SweepRecord:
    """Run ``config.trials`` seeded samples and summarise the property.

    Trials whose predicate is undecided (size limit or enumeration cap) are
    reported in ``unknown`` and excluded from ``p_hat`` and the interval.
    """
    t0 = time.perf_counter()
    p, clamped = config.p_spec.resolve(config.n)
    if clamped:
        log.warning("p formula left [0, 1] at n=%d; clamped to %g", config.n, p)
    if threads <= 1 or config.trials < 2 * threads:
        results = _run_trials(config, p, range(config.trials))
    else:
        step = -(-config.trials // (threads * 4))
        jobs = [(config, p, lo, min(config.trials, lo + step))
                for lo in range(0, config.trials, step)]
        results = [None] * config.trials
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for lo, chunk in pool.map(_chunk_job, jobs):
                results[lo:lo + len(chunk)] = chunk
    successes = sum(r is True for r in results)
    unknown = sum(r is None for r in results)
    known = config.trials - unknown
    phat = successes / known if known else math.nan
    lo, hi = wilson_interval(successes, known)
    return SweepRecord(
        property=config.property, n=config.n, p=p, trials=config.trials,
        successes=successes, unknown=unknown, p_hat=phat, ci_low=lo, ci_high=hi,
        seed=config.master_seed, wall_ms=(time.perf_counter() - t0) * 1000.0,
        p_clamped=clamped,
    )


def sweep(configs: list[TrialConfig], out: TextIO, threads: int = 1) -> list[SweepRecord]:
    """Write one CSV row per config, in input order, flushing after each row."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    out.flush()
    records = []
    for cfg in configs:
        rec = estimate(cfg, threads=threads)
        writer.writerow(rec.row())
        out.flush()
        records.append(rec)
    return records


def read_sweep(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))
