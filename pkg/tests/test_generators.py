import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlbounds.errors import InvalidRing, NotGraphical, RetriesExhausted
from nlbounds.generators import (
    GenSpec,
    _swap_chain,
    derive_seed,
    erdos_renyi,
    generate,
    havel_hakimi,
    rng_for,
    ring_lattice,
    sample_degree_sequence,
    watts_strogatz,
)
from nlbounds.graph import from_edges0, is_connected

from conftest import complete

PI = (7, 6, 5, 4, 4, 4, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1)


def test_derive_seed_is_stable_and_keyed():
    assert derive_seed(5, 1, 2) == derive_seed(5, 1, 2)
    assert len({derive_seed(5, 1, 2), derive_seed(5, 2, 1), derive_seed(6, 1, 2), derive_seed(5)}) == 4
    assert 0 <= derive_seed(5, 3) < 2**64


def test_rng_streams_are_independent_of_call_order():
    a = rng_for(1, 0).random(3)
    rng_for(1, 1).random(100)
    assert np.array_equal(a, rng_for(1, 0).random(3))


@pytest.mark.parametrize("model, kw", [("er", {"q": 0.3}), ("ws", {"p": 0.3}),
                                       ("degseq", {"sequence": PI})])
def test_same_spec_same_graph(model, kw):
    spec = GenSpec(model, n=20, seed=42, **kw)
    assert generate(spec) == generate(spec)
    assert generate(spec) != generate(GenSpec(model, n=20, seed=43, **kw))


def test_er_extremes():
    assert erdos_renyi(GenSpec("er", n=6, q=1.0)) == complete(6)
    with pytest.raises(RetriesExhausted):
        erdos_renyi(GenSpec("er", n=6, q=0.0, max_retries=5))


def test_er_edge_density():
    n, q = 30, 0.2
    counts = [erdos_renyi(GenSpec("er", n=n, q=q, seed=s, require_connected=False)).m
              for s in range(200)]
    expected = q * n * (n - 1) / 2
    sd = np.sqrt(expected * (1 - q))
    assert abs(np.mean(counts) - expected) < 4 * sd / np.sqrt(len(counts))


def test_er_always_connected_when_required():
    for s in range(50):
        assert is_connected(erdos_renyi(GenSpec("er", n=12, q=0.2, seed=s)))


def test_ring_lattice():
    edges = ring_lattice(7, 2)
    g = from_edges0(7, edges)
    assert g.degrees == (4,) * 7 and g.m == 14
    with pytest.raises(InvalidRing):
        ring_lattice(4, 2)
    with pytest.raises(InvalidRing):
        ring_lattice(5, 0)


def test_ws_without_rewiring_is_the_lattice():
    g = watts_strogatz(GenSpec("ws", n=9, p=0.0, ring_k=2))
    assert g == from_edges0(9, ring_lattice(9, 2))
    assert watts_strogatz(GenSpec("ws", n=4, p=0.0)).degrees == (2, 2, 2, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 30), st.floats(0.0, 1.0), st.integers(1, 2), st.integers(0, 2**31))
def test_ws_preserves_edge_count(n, p, k, seed):
    if 2 * k >= n:
        return
    g = watts_strogatz(GenSpec("ws", n=n, p=p, ring_k=k, seed=seed, require_connected=False))
    assert g.m == n * k


def test_havel_hakimi_realizes_sequence():
    g = from_edges0(len(PI), havel_hakimi(PI), require_connected=False)
    assert g.degrees == PI
    with pytest.raises(NotGraphical):
        havel_hakimi((3, 3, 1, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31), st.integers(0, 400))
def test_swap_chain_preserves_degrees(seed, steps):
    edges = havel_hakimi(PI)
    _swap_chain(edges, steps, rng_for(seed))
    g = from_edges0(len(PI), edges, require_connected=False)
    assert g.degrees == PI


def test_degree_sequence_samples_are_connected_and_varied():
    graphs = [sample_degree_sequence(GenSpec("degseq", sequence=PI, seed=s)) for s in range(30)]
    assert all(is_connected(g) for g in graphs)
    assert all(sorted(g.degrees, reverse=True) == list(PI) for g in graphs)
    assert len({g.edges for g in graphs}) == 30


def test_unknown_model_and_bad_probability():
    with pytest.raises(ValueError):
        GenSpec("ba", n=5)
    with pytest.raises(ValueError):
        GenSpec("er", n=5, q=1.5)


def test_er_large_edge_count():
    g = erdos_renyi(GenSpec("er", n=100, q=0.5, seed=123))
    assert abs(g.m - 2475) <= 4 * np.sqrt(2475 / 2)


def test_er_binomial_moments_over_1000_seeds():
    n, q = 10, 0.3
    counts = np.array([erdos_renyi(GenSpec("er", n=n, q=q, seed=s, require_connected=False)).m
                       for s in range(1000)])
    pairs = n * (n - 1) // 2
    sd = np.sqrt(pairs * q * (1 - q))
    assert abs(counts.mean() - pairs * q) < 4 * sd / np.sqrt(1000)
    assert counts.var() == pytest.approx(sd**2, rel=0.15)


def test_ws_spec_examples():
    g = watts_strogatz(GenSpec("ws", n=10, p=0.0, ring_k=2))
    assert g.degrees == (4,) * 10 and g.m == 20
    g = watts_strogatz(GenSpec("ws", n=20, p=0.1, ring_k=2, seed=7))
    assert is_connected(g) and g.m == 40


def test_single_edge_sequence():
    g = sample_degree_sequence(GenSpec("degseq", sequence=(1, 1)))
    assert g.n == 2 and g.edges == ((0, 1),)
