"""Minimum deletion sets and generalized Turán numbers, against naive oracles."""

import pytest
from hypothesis import given, settings

from matchkneser import (
    ParameterError,
    SearchTimeout,
    generalized_turan,
    make_graph,
    matching_graph,
    matching_number,
    min_deletion_set,
    petersen,
    remove_edges,
)
from matchkneser.verify import naive_max_free_edge_count, naive_min_deletion_size

from helpers import graphs

P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])


def test_independent_matching_deletion():
    cert = min_deletion_set(matching_graph(7), 3)
    assert cert.size == 5 and cert.optimal
    assert cert.deleted == ((0, 1), (2, 3), (4, 5), (6, 7), (8, 9))
    assert generalized_turan(matching_graph(7), 3) == 2


def test_trivially_free_graph():
    cert = min_deletion_set(P4, 3)
    assert cert.size == 0 and cert.deleted == () and cert.optimal
    assert generalized_turan(P4, 3) == 3


def test_path_single_deletion():
    cert = min_deletion_set(P4, 2)
    assert cert.size == 1
    assert cert.deleted == ((0, 1),)  # lexicographically least optimum
    assert generalized_turan(P4, 2) == 2


def test_petersen_deletion():
    cert = min_deletion_set(petersen(), 5)
    assert cert.size == 3 and cert.optimal
    assert cert.deleted == ((0, 1), (0, 4), (0, 5))  # isolates vertex 0
    assert generalized_turan(petersen(), 5) == 12


def test_deletion_domain():
    with pytest.raises(ParameterError):
        min_deletion_set(P4, 0)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7, max_m=10))
def test_duality_against_oracles(G):
    for r in (1, 2, 3, 4):
        cert = min_deletion_set(G, r)
        assert cert.optimal
        assert cert.size == naive_min_deletion_size(G, r)
        assert G.m - cert.size == naive_max_free_edge_count(G, r)
        # the certificate's remainder really is (rK2)-free
        assert matching_number(remove_edges(G, cert.deleted)) <= r - 1


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7, max_m=10))
def test_monotone_in_r(G):
    sizes = [min_deletion_set(G, r).size for r in (1, 2, 3, 4)]
    assert sizes == sorted(sizes, reverse=True)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=6, max_m=8))
def test_reported_set_is_lex_least_optimum(G):
    from itertools import combinations

    for r in (2, 3):
        cert = min_deletion_set(G, r)
        if cert.size == 0:
            continue
        valid = [
            combo
            for combo in combinations(G.edges, cert.size)
            if matching_number(remove_edges(G, combo)) <= r - 1
        ]
        assert cert.deleted == min(valid)


def test_timeout_yields_unclaimed_bound():
    cert = min_deletion_set(petersen(), 5, time_budget=-1.0)
    assert not cert.optimal
    assert matching_number(remove_edges(petersen(), cert.deleted)) <= 4
    with pytest.raises(SearchTimeout):
        generalized_turan(petersen(), 5, time_budget=-1.0)


def test_certificate_json_schema():
    payload = min_deletion_set(P4, 2).to_json_dict()
    assert payload == {"r": 2, "deleted": [[0, 1]], "size": 1, "optimal": True}
