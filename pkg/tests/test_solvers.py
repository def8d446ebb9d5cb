import random

import pytest

from isodom.enumerate import enumerate_connected_graphs, make_named, random_graph
from isodom.graph import Graph, complement, to_mask
from isodom.solvers import (
    DEFINITIONS,
    PARAMETERS,
    SCALAR_MEMBERSHIP,
    SubsetTables,
    UndefinedParameter,
    all_extremal_sets,
    compute_parameter,
    compute_report,
    is_dominating,
    is_independent,
    is_irredundant,
    is_isolate_set,
    is_maximal_by_extension,
    is_maximal_by_supersets,
    is_maximal_isolate_set,
    is_minimal_by_subsets,
    is_total_dominating,
    max_over,
    min_over,
)
import oracles


def test_is_dominating(star3, p4):
    assert is_dominating(star3, 0b0001)
    assert not is_dominating(p4, 0b0001)
    assert is_dominating(p4, p4.full)


def test_is_total_dominating(p4, star3):
    assert is_total_dominating(p4, 0b0110)
    assert not is_total_dominating(star3, 0b0001)
    assert is_total_dominating(star3, 0b0011)
    isolated = Graph.from_edges(3, [(0, 1)])
    assert not is_total_dominating(isolated, isolated.full)


def test_is_independent(c4, k3):
    assert is_independent(c4, 0b0101)
    assert not any(is_independent(k3, m) for m in (0b011, 0b101, 0b110))
    assert is_independent(c4, 0)


def test_is_irredundant(k3, c5, small_connected):
    for g in small_connected:
        assert all(is_irredundant(g, 1 << v) for v in range(g.n))
    assert not is_irredundant(k3, 0b011)
    assert is_irredundant(c5, 0b00101)
    nb = oracles.neighbors(k3)
    assert oracles.irredundant(nb, frozenset({0, 1})) is False
    assert oracles.irredundant(oracles.neighbors(c5), frozenset({0, 2})) is True


def test_is_isolate_set(c4):
    assert is_isolate_set(c4, 0b0001)
    assert not is_isolate_set(c4, 0b0011)
    assert is_isolate_set(c4, 0b0101)
    assert not is_isolate_set(c4, 0)


def test_is_maximal_isolate_set(c4):
    assert is_maximal_isolate_set(c4, 0b0101)
    assert is_maximal_by_supersets(c4, 0b0101, is_isolate_set)
    assert not is_maximal_isolate_set(c4, 0b0001)
    k5 = make_named("complete", 5)
    assert all(is_maximal_isolate_set(k5, 1 << v) for v in range(5))
    with pytest.raises(ValueError):
        is_maximal_isolate_set(c4, 0b0011)


def test_maximal_isolate_characterization_matches_both_oracles():
    graphs = [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]
    rng = random.Random(5)
    graphs += [random_graph(rng.randint(1, 6), 0.4, rng) for _ in range(40)]
    for g in graphs:
        for s in range(1, 1 << g.n):
            if is_isolate_set(g, s):
                char = is_maximal_isolate_set(g, s)
                assert char == is_maximal_by_extension(g, s, is_isolate_set)
                assert char == is_maximal_by_supersets(g, s, is_isolate_set)


def _scalar_table(g, member):
    pred = SCALAR_MEMBERSHIP[member]
    return [pred(g, s) for s in range(1 << g.n)]


def test_vector_membership_matches_scalar_predicates():
    rng = random.Random(1)
    graphs = [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]
    graphs += [random_graph(rng.randint(1, 7), rng.random(), rng) for _ in range(30)]
    for g in graphs:
        tables = SubsetTables(g)
        for member in SCALAR_MEMBERSHIP:
            assert list(tables.family(member)) == _scalar_table(g, member), (g, member)


def test_closures_match_direct_superset_and_subset_checks():
    rng = random.Random(2)
    graphs = [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]
    graphs += [random_graph(rng.randint(2, 6), 0.5, rng) for _ in range(20)]
    for g in graphs:
        tables = SubsetTables(g)
        for member, pred in SCALAR_MEMBERSHIP.items():
            maximal = tables.family(member, "maximal")
            minimal = tables.family(member, "minimal")
            for s in range(1 << g.n):
                assert maximal[s] == is_maximal_by_supersets(g, s, pred)
                assert minimal[s] == is_minimal_by_subsets(g, s, pred)


def test_one_vertex_extension_equals_superset_maximality_for_isolate_families():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            tables = SubsetTables(g)
            for member in ("isolate", "irredundant", "isolate_irredundant"):
                pred = SCALAR_MEMBERSHIP[member]
                exact = tables.family(member, "maximal")
                for s in range(1 << n):
                    assert exact[s] == is_maximal_by_extension(g, s, pred)


def test_parameters_match_definition_oracle():
    rng = random.Random(4)
    graphs = [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]
    graphs += [random_graph(rng.randint(1, 7), rng.random(), rng) for _ in range(25)]
    for g in graphs:
        expected = oracles.parameters(g)
        report = compute_report(g)
        got = {p: getattr(report, p) for p in PARAMETERS}
        assert got == expected, g


def test_witnesses_satisfy_their_families():
    for g in [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]:
        report = compute_report(g)
        tables = SubsetTables(g)
        for name, (_, member, condition) in DEFINITIONS.items():
            w = report.witness(name)
            if w is None:
                continue
            assert tables.family(member, condition)[w]
            assert bin(w).count("1") == getattr(report, name)


def test_min_over_examples(star3, c4, c5):
    assert min_over(star3, "dominating").value == 1
    assert min_over(c4, "total_dominating").value == 2
    assert min_over(c4, "isolate", "maximal").value == 2
    expected = {"ir": 2, "gamma": 2, "ind_dom": 2, "alpha": 2, "upper_gamma": 2, "IR": 2}
    assert {k: compute_parameter(c5, k).value for k in expected} == expected


def test_min_over_accepts_scalar_predicate(c5):
    assert min_over(c5, is_dominating).value == 2
    assert max_over(c5, is_independent).value == 2


def test_undefined_total_domination(k1):
    with pytest.raises(UndefinedParameter):
        min_over(k1, "total_dominating")
    with pytest.raises(UndefinedParameter):
        all_extremal_sets(Graph.from_edges(3, [(0, 1)]), "gamma_t")


def test_report_examples(k1, star3, p4):
    r = compute_report(k1)
    assert (r.gamma, r.i0, r.gamma_t) == (1, 1, None)
    r = compute_report(star3)
    assert (r.gamma, r.gamma_t, r.i0, r.alpha) == (1, 2, 1, 3)
    r = compute_report(p4)
    assert (r.gamma, r.gamma_t, r.diam) == (2, 2, 3)
    assert r.beta0 == r.alpha


def test_report_serialisation(p4):
    r = compute_report(p4)
    d = r.as_dict()
    assert d["graph6"] == "Ch" and d["diam"] == 3
    assert d["parameters"]["gamma_t"]["value"] == 2
    assert r.row()[:4] == ["Ch", 4, 3, 3]
    d = compute_report(Graph.from_edges(3, [(0, 1)])).as_dict()
    assert d["diam"] is None and d["parameters"]["gamma_t"] is None


def test_gamma_at_most_global_gamma_and_complement_symmetry():
    for g in [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]:
        r = compute_report(g)
        assert r.gamma <= r.gamma_g
        assert compute_report(complement(g)).gamma_g == r.gamma_g


def test_isolate_domination_total_on_all_graphs():
    rng = random.Random(9)
    for _ in range(50):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        r = compute_report(g)
        assert r.gamma0 is not None and r.upper_gamma0 >= r.gamma0


def test_all_extremal_sets_gamma_t_of_c4(c4):
    sets = all_extremal_sets(c4, "gamma_t")
    assert to_mask([0, 1]) in sets and all(bin(s).count("1") == 2 for s in sets)
    assert len(sets) == 4
