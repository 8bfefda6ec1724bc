"""Left and right tilting, Gabriel quivers, and the tilting graph."""

from itertools import chain, combinations

import pytest

from negcluster import (
    Diagonal,
    ParameterError,
    UnsupportedWeightError,
    enumerate_sms,
    gabriel_quiver,
    hom_dim,
    is_sms,
    left_tilt,
    make_category,
    make_sms,
    right_tilt,
    suspend,
    tilting_graph,
    verify_tilt_theorem_c,
)

D = Diagonal


def reference_system(params):
    return make_sms([D(3, 5), D(1, 6), D(7, 9)], params)


def subsets(items):
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def test_left_tilt_examples(p32):
    system = reference_system(p32)
    assert left_tilt(system, [D(3, 5)]).result.simples == (D(1, 6), D(2, 4), D(7, 9))
    assert left_tilt(system, [D(1, 6)]).result.simples == (D(0, 5), D(1, 3), D(7, 9))


def test_left_tilt_full_pivot_shifts_everything(p32):
    system = reference_system(p32)
    move = left_tilt(system, system.simples)
    assert set(move.result.simples) == {
        suspend(s, -1, p32) for s in system.simples
    }


def test_right_tilt_examples(p32):
    system = make_sms([D(1, 3), D(0, 5), D(7, 9)], p32)
    assert right_tilt(system, [D(0, 5)]).result.simples == (D(1, 6), D(3, 5), D(7, 9))
    system = make_sms([D(2, 4), D(1, 6), D(7, 9)], p32)
    assert right_tilt(system, [D(2, 4)]).result.simples == (D(1, 6), D(3, 5), D(7, 9))


def test_right_tilt_full_pivot(p32):
    system = reference_system(p32)
    move = right_tilt(system, system.simples)
    assert set(move.result.simples) == {suspend(s, 1, p32) for s in system.simples}


def test_subset_tilt_glues_abutting_pivot_chain(p32):
    # 35 abuts 68 (5 = 6 - 1), so tilting at both must rewrite 02 along
    # the glued diagonal 38, not along 35 alone
    system = make_sms([D(0, 2), D(3, 5), D(6, 8)], p32)
    move = left_tilt(system, [D(3, 5), D(6, 8)])
    assert move.result.simples == (D(0, 8), D(2, 4), D(5, 7))
    back = right_tilt(move.result, [D(2, 4), D(5, 7)])
    assert back.result.simples == system.simples


def test_tilt_rejects_pivot_outside_system(p32):
    with pytest.raises(ParameterError):
        left_tilt(reference_system(p32), [D(0, 2)])


def test_tilt_rejects_weight_one():
    params = make_category(2, 1)
    system = make_sms([D(0, 1), D(2, 3)], params)
    with pytest.raises(UnsupportedWeightError):
        left_tilt(system, [D(0, 1)])


def test_action_log_is_total(p32):
    system = reference_system(p32)
    move = left_tilt(system, [D(1, 6)])
    kinds = {simple: action.kind for simple, action in move.actions}
    assert kinds == {
        D(1, 6): "shifted",
        D(3, 5): "replaced",
        D(7, 9): "unchanged",
    }
    replaced = dict(move.actions)[D(3, 5)]
    assert replaced.result == D(1, 3) and replaced.pivot == D(1, 6)


def test_singleton_tilts_give_sms(desk_params):
    for system in enumerate_sms(desk_params):
        for s in system.simples:
            assert is_sms(left_tilt(system, [s]).result.simples, desk_params)
            assert is_sms(right_tilt(system, [s]).result.simples, desk_params)


def test_round_trips_all_subsets(desk_params):
    for system in enumerate_sms(desk_params):
        for pivot in subsets(system.simples):
            left = left_tilt(system, pivot)
            shifted = [suspend(p, -1, desk_params) for p in pivot]
            assert right_tilt(left.result, shifted).result.simples == system.simples
            right = right_tilt(system, pivot)
            shifted = [suspend(p, 1, desk_params) for p in pivot]
            assert left_tilt(right.result, shifted).result.simples == system.simples


def test_gabriel_quiver_reference(p32):
    system = reference_system(p32)  # simples sorted: 16, 35, 79
    matrix = gabriel_quiver(system)
    assert matrix == [
        [0, 0, 1],  # 16 -> 79
        [1, 0, 0],  # 35 -> 16
        [0, 0, 0],
    ]
    assert sum(map(sum, matrix)) == 2
    assert all(matrix[i][i] == 0 for i in range(3))


def test_gabriel_quiver_rank_one():
    params = make_category(1, 2)
    system = make_sms([D(0, 2)], params)
    expected = hom_dim(D(0, 2), 1, D(0, 2), params)
    assert gabriel_quiver(system) == [[expected]]


def test_gabriel_quiver_suspension_invariant(p32):
    system = reference_system(p32)
    shifted = make_sms([suspend(s, 1, p32) for s in system.simples], p32)
    matrix, shifted_matrix = gabriel_quiver(system), gabriel_quiver(shifted)
    position = {s: i for i, s in enumerate(shifted.simples)}
    sigma = [position[suspend(s, 1, p32)] for s in system.simples]
    for i in range(len(system)):
        for j in range(len(system)):
            assert matrix[i][j] == shifted_matrix[sigma[i]][sigma[j]]


def test_tilting_graph_counts(p23):
    graph = tilting_graph(p23)
    assert len(graph.nodes) == 15
    assert len(graph.edges) == 30
    assert len({(e.source, e.pivot) for e in graph.edges}) == 30


def test_tilting_graph_edges_reverse(p23):
    for edge in tilting_graph(p23).edges:
        back = right_tilt(edge.target, [suspend(edge.pivot, -1, p23)])
        assert back.result.simples == edge.source.simples


def test_tilting_graph_weakly_connected(p23):
    graph = tilting_graph(p23)
    neighbours = {}
    for edge in graph.edges:
        neighbours.setdefault(edge.source, set()).add(edge.target)
        neighbours.setdefault(edge.target, set()).add(edge.source)
    seen, stack = set(), [graph.nodes[0]]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(neighbours.get(node, ()))
    assert len(seen) == len(graph.nodes)


def test_verify_tilt_reference(p32):
    report = verify_tilt_theorem_c(reference_system(p32), [D(3, 5)], "left")
    assert report.ok, report.failures()


def test_verify_tilt_full_and_empty_pivot(p32):
    system = reference_system(p32)
    assert verify_tilt_theorem_c(system, system.simples, "left").ok
    assert verify_tilt_theorem_c(system, [], "left").ok


def test_verify_tilt_exhaustive_singletons(p23):
    for system in enumerate_sms(p23):
        for s in system.simples:
            assert verify_tilt_theorem_c(system, [s], "left").ok
            assert verify_tilt_theorem_c(system, [s], "right").ok
