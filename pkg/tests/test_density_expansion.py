import math
import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from cuckoo_rw.analytics import DomainError
from cuckoo_rw.hypergraph import (
    Hypergraph,
    SizeError,
    check_density,
    check_expansion,
    expansion_slack,
    is_orientable,
    max_closure,
    max_density,
    sample_hypergraph,
)
from cuckoo_rw.hypergraph.density import as_fraction, induced_edges

from oracles import brute_density_ok, brute_induced, brute_max_density


def H_of(n, edges):
    return Hypergraph(n, len(edges[0]), np.array(edges, dtype=np.int64))


def random_small(rng, max_n=12, k=3):
    n = rng.randint(1, max_n)
    m = rng.randint(0, 2 * n)
    edges = [[rng.randrange(n) for _ in range(k)] for _ in range(m)]
    return n, edges, Hypergraph(n, k, np.array(edges, dtype=np.int64).reshape(m, k))


# -- density ---------------------------------------------------------------------

@pytest.mark.parametrize("mode", ["exact", "flow"])
def test_single_edge_dense_enough(mode):
    assert check_density(H_of(3, [[0, 1, 2]]), 0.5, mode) == (True, None)


@pytest.mark.parametrize("mode", ["exact", "flow"])
def test_double_edge_violates(mode):
    ok, witness = check_density(H_of(3, [[0, 1, 2], [0, 1, 2]]), 0.5, mode)
    assert not ok
    assert witness == {0, 1, 2}


def test_equality_counts_as_violation():
    # e(V) = 3 = (1 - 0)|V| on a triangle of 2-edges: strict bound fails
    H = Hypergraph(3, 2, np.array([[0, 1], [1, 2], [0, 2]]))
    for mode in ("exact", "flow"):
        ok, witness = check_density(H, 0, mode)
        assert not ok and witness == {0, 1, 2}


def test_flow_agrees_with_exact_and_brute_force_500_instances():
    rng = random.Random(7)
    deltas = [Fraction(0), Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), 0.25, 0.01]
    for _ in range(500):
        n, edges, H = random_small(rng)
        delta = rng.choice(deltas)
        expected = brute_density_ok(n, edges, as_fraction(delta))
        for mode in ("exact", "flow"):
            ok, witness = check_density(H, delta, mode)
            assert ok == expected
            if not ok:
                assert witness
                assert brute_induced(edges, witness) >= (1 - as_fraction(delta)) * len(witness)


def test_density_zero_matches_hall():
    rng = random.Random(11)
    for _ in range(300):
        n, edges, H = random_small(rng, max_n=8)
        # e(V') <= |V'| for all V' iff orientable; our check is strict, so compare
        # orientability with "no V' has e(V') > |V'|"
        best, _ = max_closure(H, 1, 1)
        assert (best <= 0) == is_orientable(H)[0]


def test_max_density_examples():
    assert max_density(H_of(3, [[0, 1, 2]])) == Fraction(1, 3)
    assert max_density(H_of(3, [[0, 1, 2], [0, 1, 2]])) == Fraction(2, 3)
    assert max_density(Hypergraph(4, 3, np.zeros((0, 3), dtype=int))) == 0


def test_max_density_against_enumeration_500_instances():
    rng = random.Random(5)
    for _ in range(500):
        n, edges, H = random_small(rng)
        assert max_density(H) == brute_max_density(n, edges)


def test_max_density_consistent_with_check():
    H = sample_hypergraph(300, 255, 3, 1)
    d = max_density(H)
    assert Fraction(induced_edges(H, range(H.n)), H.n) <= d < 1
    # the densest set sits exactly on the boundary at delta = 1 - d
    assert check_density(H, 1 - d)[0] is False
    assert check_density(H, 1 - d - Fraction(1, 1000))[0] is True


def test_density_errors():
    with pytest.raises(SizeError):
        check_density(sample_hypergraph(21, 3, 3, 0), 0.1, "exact")
    with pytest.raises(ValueError):
        check_density(H_of(3, [[0, 1, 2]]), 1.0)
    with pytest.raises(ValueError):
        check_density(H_of(3, [[0, 1, 2]]), 0.1, "magic")


def test_as_fraction_reads_decimal():
    assert as_fraction(0.01) == Fraction(1, 100)
    assert as_fraction(Fraction(2, 7)) == Fraction(2, 7)


# -- expansion -------------------------------------------------------------------

def _required(s, n, k):
    loglog = math.log(math.log(n))
    if s <= loglog:
        return (k - 1) * s
    if s < n / k:
        x = (math.log((k - 1) * math.exp(k)) / math.log(k)) / (math.log(n / s) / math.log(k) - 1)
        return (k - 1 - x) * s
    return None


def brute_expansion_ok(n, k, edges):
    for s in range(1, len(edges) + 1):
        need = _required(s, n, k)
        if need is None:
            continue
        for sub in combinations(edges, s):
            if len({v for e in sub for v in e}) < need:
                return False
    return True


def test_disjoint_edges_expand():
    H = H_of(3000, [[3 * i, 3 * i + 1, 3 * i + 2] for i in range(10)])
    assert check_expansion(H, "exact") == (True, None)
    assert check_expansion(H, "sampled", samples=200)[0]


def test_duplicate_edge_violates_small_regime():
    n = 2000  # ln ln 2000 > 2
    assert math.log(math.log(n)) > 2
    H = H_of(n, [[0, 1, 2], [0, 1, 2]])
    ok, witness = check_expansion(H, "exact")
    assert not ok and witness == {0, 1}
    ok, witness = check_expansion(H, "sampled", samples=50)
    assert not ok and len(witness) == 2


def test_exact_against_brute_force():
    rng = random.Random(2)
    for _ in range(150):
        n = rng.choice([20, 60, 200, 2000])
        k = rng.choice([3, 4])
        m = rng.randint(1, 9)
        # concentrate edges on few vertices so violations actually occur
        pool = rng.randint(k, 3 * k + 3)
        edges = [[rng.randrange(pool) for _ in range(k)] for _ in range(m)]
        H = Hypergraph(n, k, np.array(edges))
        ok, witness = check_expansion(H, "exact")
        assert ok == brute_expansion_ok(n, k, [tuple(set(e)) for e in edges])
        if not ok:
            span = len({v for e in witness for v in H.projected[e]})
            assert span < _required(len(witness), n, k)


def test_sampled_never_contradicts_exact():
    rng = random.Random(9)
    for _ in range(60):
        k = 3
        n = 2000
        edges = [[rng.randrange(12) for _ in range(k)] for _ in range(rng.randint(1, 8))]
        H = Hypergraph(n, k, np.array(edges))
        exact_ok, _ = check_expansion(H, "exact")
        sampled_ok, witness = check_expansion(H, "sampled", samples=300, seed=rng.randrange(1000))
        if not sampled_ok:
            assert not exact_ok
            span = len({v for e in witness for v in H.projected[e]})
            assert span < _required(len(witness), n, k)


def test_sampled_random_hypergraph_has_no_violation():
    H = sample_hypergraph(10_000, 8500, 3, 3)
    assert check_expansion(H, "sampled", samples=2000, seed=1) == (True, None)


def test_expansion_slack_formula_and_domain():
    assert expansion_slack(3, 10_000, 3) == pytest.approx(
        math.log(2 * math.e**3, 3) / (math.log(10_000 / 3, 3) - 1)
    )
    with pytest.raises(DomainError):
        expansion_slack(4000, 10_000, 3)


def test_exact_expansion_size_limit():
    with pytest.raises(SizeError):
        check_expansion(sample_hypergraph(100, 21, 3, 0), "exact")
