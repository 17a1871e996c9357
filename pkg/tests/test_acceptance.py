"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""

import math
import time

import pytest

from regbond.bondage import (
    bondage_number,
    bondage_number_oracle,
    bondage_witness_oracle,
    gamma_after_removal,
)
from regbond.domination import (
    domination_number,
    domination_number_oracle,
    is_dominating,
    two_dominating_set_regular,
)
from regbond.generators import cocktail_party, complete_graph, cycle, enumerate_n_minus_3_regular
from regbond.graph import complement, from_edge_list, from_graph6, remove_edges, to_graph6
from regbond.harness import known_values, verify_theorem

from oracles import generated_graphs, graph6_corpus, nx_graph6, random_graphs

THEOREM_BUDGET_S = 300.0
KNOWN_VALUES_BUDGET_S = 30.0


def check_domination(g, cert):
    assert len(cert.witness) == cert.gamma
    assert is_dominating(g, cert.witness)


def check_bondage(g, cert):
    assert len(set(cert.witness)) == cert.b
    assert gamma_after_removal(g, cert.witness) == cert.gamma_before + 1 == cert.gamma_after


@pytest.mark.acceptance(1, "b(G) = n-3 and gamma = 2 for every (n-3)-regular graph, n = 4..10")
def test_criterion_1_theorem_reproduction():
    start = time.perf_counter()
    report = verify_theorem(4, 10)
    elapsed = time.perf_counter() - start

    counts = [sum(e.n == n for e in report.entries) for n in range(4, 11)]
    assert counts == [1, 1, 2, 2, 3, 4, 5]
    for e in report.entries:
        assert e.gamma == 2, e
        assert e.bondage == e.n - 3 == e.expected_bondage, e
        assert e.status == "pass"
        g = from_graph6(e.graph6)
        assert is_dominating(g, e.domination_witness)
        assert gamma_after_removal(g, [tuple(x) for x in e.bondage_witness]) == 3
    assert report.ok
    assert elapsed < THEOREM_BUDGET_S, f"{elapsed:.1f}s"


@pytest.mark.acceptance(2, "small cases b(2K2)=1, b(C5)=2, b(prism)=3, b(K33)=3")
def test_criterion_2_small_cases():
    two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
    prism = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    k33 = from_edge_list(6, [(u, v) for u in range(3) for v in range(3, 6)])
    for g, b in [(two_k2, 1), (cycle(5), 2), (prism, 3), (k33, 3)]:
        cert = bondage_number(g)
        check_bondage(g, cert)
        assert cert.b == b


@pytest.mark.acceptance(3, "b(K_n) = ceil(n/2) for n=2..8 and b(K_{2x t}) = 2t-1 for t=2..4, under 30 s")
def test_criterion_3_known_values():
    start = time.perf_counter()
    rows = known_values()
    elapsed = time.perf_counter() - start
    expected = [("complete", n, math.ceil(n / 2)) for n in range(2, 9)]
    expected += [("cocktail-party", t, 2 * t - 1) for t in range(2, 5)]
    assert [(r.family, r.parameter, r.expected) for r in rows] == expected
    assert all(r.computed == r.expected for r in rows)
    # the same graphs through the public constructors, with certificates checked
    for n in range(2, 9):
        g = complete_graph(n)
        check_bondage(g, bondage_number(g))
    for t in range(2, 5):
        g = cocktail_party(t)
        check_bondage(g, bondage_number(g))
    assert elapsed < KNOWN_VALUES_BUDGET_S, f"{elapsed:.1f}s"


@pytest.mark.acceptance(4, "solvers equal brute-force oracles on generated and fixed-seed random graphs")
def test_criterion_4_oracle_equivalence():
    dom_cases = list(generated_graphs(9)) + random_graphs(seed=4, count=200, n_range=(1, 12))
    assert len(dom_cases) >= 200 + 50
    mismatches = []
    for g in dom_cases:
        cert = domination_number(g)
        check_domination(g, cert)
        if cert.gamma != domination_number_oracle(g):
            mismatches.append(("gamma", to_graph6(g)))

    bond_cases = [g for g in generated_graphs(7) if g.m]
    bond_cases += random_graphs(seed=44, count=50, n_range=(2, 8), max_edges=16)
    for g in bond_cases:
        if not g.m:
            continue
        cert = bondage_number(g)
        check_bondage(g, cert)
        # K7 has 21 edges; the unpruned enumeration still finishes quickly at n = 7
        limits = {"max_edges": 21}
        if cert.b != bondage_number_oracle(g, **limits) or cert.witness != bondage_witness_oracle(g, **limits):
            mismatches.append(("bondage", to_graph6(g)))
    assert mismatches == []


@pytest.mark.acceptance(5, "edge-removal monotonicity, certificate soundness, graph6 and complement identities")
def test_criterion_5_property_suites():
    for g in generated_graphs(9):
        cert = domination_number(g)
        check_domination(g, cert)
        for e in g.edges():
            after = domination_number(remove_edges(g, [e]))
            check_domination(remove_edges(g, [e]), after)
            assert after.gamma in (cert.gamma, cert.gamma + 1), (to_graph6(g), e)

    corpus = graph6_corpus(seed=5, count=500)
    assert len(corpus) == 500
    for text in corpus:
        g = from_graph6(text)
        assert to_graph6(g) == text
        assert nx_graph6(g) == text
        assert from_graph6(to_graph6(g)) == g
        assert complement(complement(g)) == g


@pytest.mark.acceptance(6, "constructive dominating pair for every (n-3)-regular graph, n = 4..12")
def test_criterion_6_constructive_dominating_pair():
    total = 0
    for n in range(4, 13):
        for _, g in enumerate_n_minus_3_regular(n):
            pair = two_dominating_set_regular(g)
            assert len(set(pair)) == 2
            assert is_dominating(g, pair)
            total += 1
    assert total == sum(len(enumerate_n_minus_3_regular(n)) for n in range(4, 13))
