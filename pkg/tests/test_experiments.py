import io
import math
import random

import pytest

from hamspan.experiments import (
    CSV_HEADER,
    PSpec,
    TrialConfig,
    estimate,
    every_deletion_has_triangle,
    get_predicate,
    limit_min_degree,
    read_sweep,
    sweep,
    threshold_p,
    trial_seed,
    wilson_interval,
)
from hamspan.graph import Graph, complete_graph, cycle_graph, delete_vertex, gen_gnp, gen_k_hat, has_triangle


def test_limit_formula():
    assert limit_min_degree(2, 0) == pytest.approx(math.exp(-1), abs=1e-12)
    assert limit_min_degree(2, 2) == pytest.approx(math.exp(-math.exp(-1)), abs=1e-12)
    assert limit_min_degree(0, 0) == pytest.approx(math.exp(-1))
    assert limit_min_degree(2, 60) == pytest.approx(1.0, abs=1e-12)
    vals = [limit_min_degree(3, c) for c in range(-5, 6)]
    assert vals == sorted(vals)


def test_threshold_formula():
    n = 10 ** 5
    want = (math.log(n) + 2 * math.log(math.log(n))) / n
    assert threshold_p(n, 2, 0) == pytest.approx(want, rel=1e-12)
    assert threshold_p(n, 2, 0) == pytest.approx(1.6413e-4, rel=1e-3)
    assert threshold_p(4, 2, 10) == 1.0
    with pytest.raises(ValueError):
        threshold_p(2, 1, 0)


def test_pspec_resolution():
    assert PSpec(p=0.25).resolve(10) == (0.25, False)
    assert PSpec(eps=0.0).resolve(100) == (pytest.approx(0.1), False)
    assert PSpec(k=1, c=50).resolve(10) == (1.0, True)
    with pytest.raises(ValueError):
        PSpec(p=0.1, eps=0.1)
    with pytest.raises(ValueError):
        PSpec(k=1)
    with pytest.raises(ValueError):
        PSpec(p=1.5).resolve(5)


def test_predicates_on_examples():
    k4 = complete_graph(4)
    assert get_predicate("min_degree>=3")(k4, 0, 16) is True
    assert get_predicate("min_degree>=4")(k4, 0, 16) is False
    assert get_predicate("min_degree=3")(k4, 0, 16) is True
    g = gen_k_hat(4)
    assert get_predicate("exists_degree2")(g, 0, 16) is True
    assert get_predicate("degree2_deletions_bipartite")(g, 0, 16) is True
    assert get_predicate("contains_triangle")(g, 0, 16) is False
    assert get_predicate("hamilton_generated_full")(g, 10 ** 6, 16) is True
    assert get_predicate("hamiltonian")(g, 10 ** 6, 16) is True
    assert get_predicate("hamiltonian")(g, 10 ** 6, 4) is None
    assert get_predicate("quotient_dim=1")(gen_k_hat(3), 10 ** 6, 16) is True
    assert get_predicate("quotient_dim<=1")(gen_k_hat(3), 10 ** 6, 16) is True
    assert get_predicate("hamilton_connected")(complete_graph(5), 10 ** 6, 16) is True
    assert get_predicate("hamilton_connected")(cycle_graph(6), 10 ** 6, 16) is False
    assert get_predicate("near_hamilton_span_full")(cycle_graph(6), 10 ** 6, 16) is True
    with pytest.raises(KeyError):
        get_predicate("planar")


def test_every_deletion_has_triangle_against_naive():
    rnd = random.Random(5)
    for _ in range(400):
        n = rnd.randint(3, 8)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5])
        naive = all(has_triangle(delete_vertex(g, v)) for v in range(n))
        assert every_deletion_has_triangle(g, 0, 16) == naive


def test_wilson_interval():
    for s, t in [(0, 10), (10, 10), (3, 7), (500, 1000), (1, 1)]:
        lo, hi = wilson_interval(s, t)
        assert 0.0 <= lo <= s / t <= hi <= 1.0
    lo, hi = wilson_interval(50, 100)
    assert lo == pytest.approx(0.4038, abs=1e-4) and hi == pytest.approx(0.5962, abs=1e-4)
    assert all(math.isnan(x) for x in wilson_interval(0, 0))


def test_trial_seeds_distinct():
    seeds = {trial_seed(1, i) for i in range(10 ** 4)}
    assert len(seeds) == 10 ** 4
    assert trial_seed(1, 0) != trial_seed(2, 0)


def test_estimate_certain_events():
    rec = estimate(TrialConfig(n=30, p_spec=PSpec(p=1.0), trials=20, property="min_degree>=1"))
    assert rec.p_hat == 1.0 and rec.successes == 20 and rec.unknown == 0
    rec = estimate(TrialConfig(n=1000, p_spec=PSpec(p=1e-4), trials=20, property="contains_triangle"))
    assert rec.p_hat <= 0.1


def test_estimate_deterministic():
    cfg = TrialConfig(n=200, p_spec=PSpec(k=0, c=0), trials=40, master_seed=9, property="min_degree>=1")
    a, b = estimate(cfg), estimate(cfg)
    assert (a.successes, a.p_hat, a.ci_low, a.ci_high) == (b.successes, b.p_hat, b.ci_low, b.ci_high)


def test_estimate_threads_agree():
    cfg = TrialConfig(n=300, p_spec=PSpec(p=0.01), trials=24, master_seed=3, property="min_degree>=2")
    a, b = estimate(cfg, threads=1), estimate(cfg, threads=2)
    assert (a.successes, a.unknown, a.p_hat) == (b.successes, b.unknown, b.p_hat)


def test_monotone_property_coupled_per_trial():
    # with a shared trial seed, the pairwise sampler gives G(n,p1) within G(n,p2)
    lo = TrialConfig(n=60, p_spec=PSpec(p=0.04), trials=50, master_seed=7, property="min_degree>=1")
    hi = TrialConfig(n=60, p_spec=PSpec(p=0.08), trials=50, master_seed=7, property="min_degree>=1")
    for i in range(50):
        s = trial_seed(7, i)
        a, b = gen_gnp(60, 0.04, s), gen_gnp(60, 0.08, s)
        assert set(a.edges) <= set(b.edges)
    assert estimate(lo).successes <= estimate(hi).successes


def test_unknown_beyond_exact_limit():
    cfg = TrialConfig(n=20, p_spec=PSpec(p=0.5), trials=5, property="hamiltonian", exact_max_n=16)
    rec = estimate(cfg)
    assert rec.unknown == 5 and rec.successes == 0 and math.isnan(rec.p_hat)


def test_sweep_output():
    buf = io.StringIO()
    assert sweep([], buf) == []
    assert buf.getvalue() == ",".join(CSV_HEADER) + "\n"
    cfgs = [TrialConfig(n=n, p_spec=PSpec(p=0.3), trials=5, property="contains_triangle") for n in (12, 8, 10)]
    buf = io.StringIO()
    sweep(cfgs, buf)
    rows = read_sweep(buf.getvalue())
    assert [r["n"] for r in rows] == ["12", "8", "10"]
    assert list(rows[0]) == CSV_HEADER
    assert rows[0]["p"] == "0.3"


def test_config_validation():
    with pytest.raises(ValueError):
        TrialConfig(n=10, p_spec=PSpec(p=0.1), trials=0)
    with pytest.raises(KeyError):
        TrialConfig(n=10, p_spec=PSpec(p=0.1), trials=3, property="nope")


def _finite_n_min_degree(n, p, k):
    # P[min degree = k+1] treating vertex degrees as independent Bin(n-1, p)
    q = [math.comb(n - 1, j) * p ** j * (1 - p) ** (n - 1 - j) for j in range(k + 2)]
    low = sum(q[:k + 1])
    return math.exp(-n * low) - math.exp(-n * (low + q[k + 1]))


def test_min_degree_rate_matches_finite_n_prediction():
    # the limit law converges slowly; at moderate n the sampler should instead
    # track the finite-n degree distribution
    n, trials = 2000, 400
    cfg = TrialConfig(n=n, p_spec=PSpec(k=2, c=2), trials=trials, master_seed=1, property="min_degree=3")
    rec = estimate(cfg)
    want = _finite_n_min_degree(n, rec.p, 2)
    assert want == pytest.approx(0.4864, abs=1e-3)
    sd = math.sqrt(want * (1 - want) / trials)
    assert abs(rec.p_hat - want) < 4 * sd
