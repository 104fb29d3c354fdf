import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conebound.bounds import (
    bipartite_product_bound,
    compare_bounds,
    cone_structure,
    crossover_alpha_threshold,
    equality_structure_check,
    haemers_bound,
    phi,
    product_bound_report,
)
from conebound.enumeration import independence_number
from conebound.families import (
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    kneser,
    path,
    petersen,
    star,
    wheel,
)
from conebound.graph import GraphError, cone, graph_from_edges, profile
from conebound.interlacing import two_cell_quotient_roots

from conftest import connected_graphs, connected_spectra

PAW = graph_from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
DIAMOND = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
GOLDEN_SQ = ((1 + math.sqrt(5)) / 2) ** 2


@pytest.mark.parametrize("n", range(3, 21))
def test_phi_complete_base(n):
    assert phi(n - 2, n - 1) == pytest.approx(-1.0, abs=1e-12)


@pytest.mark.parametrize("n", range(2, 21))
def test_phi_empty_base(n):
    assert phi(0, n - 1) == pytest.approx(-math.sqrt(n - 1), abs=1e-12)


@pytest.mark.parametrize("k, expected", [(3, -2.0), (4, -4.245), (5, -9.0), (6, -18.702)])
def test_phi_odd_graph_values(k, expected):
    delta_max = math.comb(2 * k - 1, k - 1)
    # the published list is given to three decimals (-18.7025 appears as -18.702)
    assert phi(k, delta_max) == pytest.approx(expected, abs=1e-3)


def test_phi_rejects_zero():
    with pytest.raises(ValueError):
        phi(1, 0)


@given(st.floats(0, 100), st.integers(1, 10_000))
def test_phi_negative_and_quotient_identity(mean_deg, delta_max):
    value = phi(mean_deg, delta_max)
    assert value < 0
    top, bottom = two_cell_quotient_roots(mean_deg, delta_max)
    assert -delta_max / top == pytest.approx(value, abs=1e-9)
    assert bottom == pytest.approx(value, abs=1e-9)
    assert -top * bottom == pytest.approx(delta_max, rel=1e-12)


def test_report_petersen_cone():
    r = product_bound_report(cone(petersen()))
    assert r.Delta == 10
    assert r.product == pytest.approx(10.0, abs=1e-9)
    assert r.equalityWithinTol and r.witness is not None
    assert r.witness.coneVertex == 10 and r.witness.baseDegree == 3


def test_report_k4():
    r = product_bound_report(complete(4))
    assert r.Delta == 3 and r.product == pytest.approx(3.0, abs=1e-9) and r.equalityWithinTol
    assert r.witness.coneVertex == 0


def test_report_p4_strict():
    r = product_bound_report(path(4))
    assert r.Delta == 2
    assert r.product == pytest.approx(GOLDEN_SQ, abs=1e-9)
    assert r.slack == pytest.approx(GOLDEN_SQ - 2, abs=1e-9)
    assert not r.equalityWithinTol and r.witness is None


def test_report_rejects():
    with pytest.raises(GraphError):
        product_bound_report(graph_from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        product_bound_report(complete(1))


def test_wheel_on_six_vertices_fails_threshold():
    g = wheel(5)
    assert equality_structure_check(g) is None
    w = cone_structure(g)
    assert w.baseLambdaMin == pytest.approx(2 * math.cos(4 * math.pi / 5), abs=1e-9)
    assert w.phiValue == pytest.approx(phi(2, 5))
    assert w.baseLambdaMin < w.phiValue and not w.conditionHolds


@pytest.mark.parametrize("n", range(2, 11))
def test_complete_witness(n):
    w = equality_structure_check(complete(n))
    assert w is not None and w.coneVertex == 0 and w.baseDegree == n - 2
    if n >= 3:
        assert w.baseLambdaMin == pytest.approx(-1.0, abs=1e-9)
        assert w.phiValue == pytest.approx(-1.0, abs=1e-12)


def test_wheel_on_eight_vertices_meets_threshold():
    w = equality_structure_check(wheel(7))
    assert w is not None
    assert w.baseLambdaMin == pytest.approx(2 * math.cos(6 * math.pi / 7), abs=1e-9)
    assert w.phiValue == pytest.approx(1 - 2 * math.sqrt(2), abs=1e-12)


def test_equality_check_rejects_disconnected():
    with pytest.raises(GraphError):
        equality_structure_check(graph_from_edges(3, [(0, 1)]))


def test_haemers_examples():
    assert haemers_bound(cycle(4), 2) == 4.0
    for a, b in [(1, 3), (2, 3), (3, 5), (4, 4)]:
        g = complete_bipartite(a, b)
        assert haemers_bound(g, max(a, b)) == pytest.approx(a * b)
    assert haemers_bound(PAW, 2) == 1.0


@pytest.mark.parametrize("alpha", [0, 4, 5])
def test_haemers_alpha_range(alpha):
    with pytest.raises(ValueError):
        haemers_bound(PAW, alpha)


def test_crossover_examples():
    assert crossover_alpha_threshold(4, 1, 3) == pytest.approx(3.0)
    assert crossover_alpha_threshold(4, 2, 3) == pytest.approx(12 / 7)
    for n, k in [(6, 2), (8, 3), (10, 3)]:
        assert crossover_alpha_threshold(n, k, k) == pytest.approx(n / (1 + k))
    with pytest.raises(ValueError):
        crossover_alpha_threshold(4, 0, 3)
    with pytest.raises(ValueError):
        crossover_alpha_threshold(4, 1, 0)


def test_compare_examples():
    c = compare_bounds(path(4), 2)
    assert (c.newBound, c.haemersBound, c.winner) == (2.0, 1.0, "new")
    c = compare_bounds(star(3), 3)
    assert (c.newBound, c.haemersBound, c.winner) == (3.0, 3.0, "tie")
    c = compare_bounds(DIAMOND, 2)
    assert (c.newBound, c.haemersBound, c.winner) == (3.0, 4.0, "haemers")
    assert compare_bounds(PAW, 2).winner == "new"


def test_winner_matches_crossover_threshold():
    # Δ > Haemers exactly when α < n/(1+δ²/Δ); ties sit on the threshold
    for n in range(4, 8):
        for g in connected_graphs(n):
            alpha = independence_number(g)
            c = compare_bounds(g, alpha)
            if c.winner == "new":
                assert alpha < c.alphaThreshold
            elif c.winner == "haemers":
                assert alpha > c.alphaThreshold
            else:
                assert alpha == pytest.approx(c.alphaThreshold)


def test_bipartite_examples():
    r = bipartite_product_bound(complete_bipartite(2, 3))
    assert r.lambda1Squared == pytest.approx(6.0, abs=1e-9)
    assert (r.meanDeg1, r.meanDeg2) == (2.0, 3.0)
    assert r.equality and r.isBiregular and r.boundHolds

    r = bipartite_product_bound(path(4))
    assert r.lambda1Squared == pytest.approx(GOLDEN_SQ, abs=1e-9)
    assert (r.meanDeg1, r.meanDeg2) == (1.5, 1.5)
    assert r.boundHolds and not r.equality and not r.isBiregular

    r = bipartite_product_bound(star(4))
    assert r.lambda1Squared == pytest.approx(4.0, abs=1e-9)
    assert (r.meanDeg1, r.meanDeg2) == (1.0, 4.0)
    assert r.equality and r.isBiregular


def test_bipartite_rejects():
    with pytest.raises(GraphError):
        bipartite_product_bound(cycle(5))
    with pytest.raises(GraphError):
        bipartite_product_bound(graph_from_edges(4, [(0, 1), (2, 3)]))


def test_exhaustive_upto_7():
    """Main inequality, both directions of the equality case, Haemers' bound
    and the bipartite corollaries over every connected graph with n <= 7."""
    for n in range(2, 8):
        for g, s in zip(connected_graphs(n), connected_spectra(n)):
            r = product_bound_report(g, 1e-7, spec=s)
            assert r.slack >= -1e-7
            assert r.equalityWithinTol == (r.witness is not None)
            alpha = independence_number(g)
            assert r.product >= haemers_bound(g, alpha) - 1e-7
            prof = profile(g)
            if prof.is_bipartite:
                lam2 = s.lambda_max**2
                assert prof.max_degree <= lam2 + 1e-7
                is_star = prof.max_degree == n - 1 and g.num_edges == n - 1
                assert (abs(lam2 - prof.max_degree) <= 1e-7) == is_star
                b = bipartite_product_bound(g, 1e-7, spec=s)
                assert b.boundHolds and b.equality == b.isBiregular


@pytest.mark.parametrize(
    "g, equal",
    [
        (complete(2), True),
        (complete(7), True),
        (star(1), True),
        (star(12), True),
        (wheel(3), True),
        (wheel(4), False),
        (wheel(5), False),
        (wheel(6), False),
        (wheel(7), True),
        (wheel(12), True),
        (cone(petersen()), True),
        (cone(kneser(7, 3)), True),
        (cone(hypercube(6)), False),
    ],
    ids=["K2", "K7", "S1", "S12", "W3", "W4", "W5", "W6", "W7", "W12", "Petersen+v", "O4+v", "Q6+u"],
)
def test_family_equality_verdicts(g, equal):
    r = product_bound_report(g, 1e-7)
    assert r.equalityWithinTol == equal
    assert (r.witness is not None) == equal
