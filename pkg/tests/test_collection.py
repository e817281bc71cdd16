import random

import pytest

from cyclepack.collection import CycleCollection, canonical_cycle, potential, seed_collection, validate
from cyclepack.generators import gen_complete
from cyclepack.graph import Graph, GraphError

from conftest import all_graphs, cycle_graph


def test_potential_examples():
    c = CycleCollection(3, [(0, 1, 2), (3, 4, 5), (6,)])
    assert potential(c) == (2, 0, 1)
    assert potential(CycleCollection(4)) == (0, 0, 0, 0)
    assert (1, 5, 0) > (1, 4, 9)


def test_seed_collection():
    c = seed_collection(gen_complete(4), 3)
    assert potential(c) == (0, 0, 4)
    assert seed_collection(Graph(), 3).cycles == ()
    assert len(seed_collection(cycle_graph(5), 5).bucket(1)) == 5


@pytest.mark.parametrize("n", range(0, 6))
def test_seed_is_valid_and_spanning(n):
    for g in all_graphs(n):
        assert validate(seed_collection(g, 3), g, require_spanning=True).ok


def test_validate_overlap():
    g = gen_complete(5)
    rep = validate(CycleCollection(3, [(0, 1, 2), (2, 3, 4)]), g)
    assert rep.overlaps == [2] and not rep.ok


def test_validate_non_cycle_and_non_edge():
    g = cycle_graph(6)
    rep = validate(CycleCollection(3, [(0, 1, 3)]), g)
    assert rep.non_cycles == [(0, 1, 3)]
    rep = validate(CycleCollection(3, [(0, 2)]), g)
    assert rep.non_cycles == [(0, 2)]


def test_validate_order_and_spanning():
    g = gen_complete(5)
    rep = validate(CycleCollection(3, [(0, 1, 2, 3)]), g, require_spanning=True)
    assert rep.bad_orders and rep.uncovered == [4]
    assert validate(CycleCollection(3, [(9,)]), g).non_cycles == [(9,)]


def test_canonical_rotation():
    assert canonical_cycle([3, 1, 4, 2]) == (1, 3, 2, 4)
    assert canonical_cycle([5, 2]) == (2, 5)
    assert CycleCollection(3, [(2, 0, 1)]) == CycleCollection(3, [(1, 0, 2)])


def test_replace_and_missing_cycle():
    c = CycleCollection(3, [(0,), (1,), (2,)])
    d = c.replace([(0,), (1,)], [(1, 0)])
    assert d.cycles == ((2,), (0, 1))
    with pytest.raises(GraphError):
        c.replace([(7,)], [])


def test_json_round_trip_and_order():
    c = CycleCollection(4, [(5, 6, 7), (3,), (0, 1), (8, 9, 10, 11)])
    assert c.to_json() == '{"r": 4, "cycles": [[3], [0, 1], [5, 6, 7], [8, 9, 10, 11]]}'
    assert CycleCollection.from_json(c.to_json()) == c


def test_r_must_be_at_least_three():
    with pytest.raises(GraphError):
        CycleCollection(2)


def test_potential_order_is_total():
    rng = random.Random(3)
    vecs = [tuple(rng.randint(0, 3) for _ in range(4)) for _ in range(200)]
    for a, b, c in zip(vecs, vecs[1:], vecs[2:]):
        assert (a < b) + (a == b) + (a > b) == 1
        if a <= b and b <= a:
            assert a == b
        if a < b and b < c:
            assert a < c
