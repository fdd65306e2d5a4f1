import json

import pytest

from tiltquiver.models import AInterval
from tiltquiver.quiver import all_orientations, d_quiver, path_quiver
from tiltquiver.rep import projective_dim_vectors
from tiltquiver.tilting import (
    TiltingModule,
    closed_form_counts,
    completions,
    degree_stats,
    enumerate_tilting,
    ext_table,
    hasse_check,
    is_tilting,
    leq,
    module_dim,
    tilting_quiver,
    tilting_quiver_dot,
    tilting_quiver_json,
)


def ids_for(table, *intervals):
    by_model = {ind.model: ind.id for ind in table.indecs}
    return tuple(sorted(by_model[iv] for iv in intervals))


def test_ext_table_a2_frozen():
    # ids sort by dimension vector: 0 = L(1,2), 1 = L(0,1), 2 = L(0,2)
    table = ext_table(path_quiver(2))
    assert [ind.model for ind in table.indecs] == [
        AInterval(1, 2),
        AInterval(0, 1),
        AInterval(0, 2),
    ]
    assert table.hom == ((1, 0, 1), (0, 1, 0), (0, 1, 1))
    assert table.ext == ((0, 0, 0), (1, 0, 0), (0, 0, 0))


def test_ext_diagonal_zero():
    for q in (path_quiver(4), d_quiver(3)):
        table = ext_table(q)
        assert all(table.ext[i][i] == 0 for i in range(len(table)))
        assert all(table.hom[i][i] == 1 for i in range(len(table)))


def test_ext_pattern_matches_predicate_on_q3():
    from tiltquiver.models import ext_vanish_pair

    table = ext_table(d_quiver(3))
    k = len(table)
    for i in range(k):
        for j in range(i, k):
            pred = ext_vanish_pair("D", table.indecs[i].model, table.indecs[j].model, 3)
            assert pred == (table.ext[i][j] == 0 and table.ext[j][i] == 0)


def test_enumerate_a2_exact():
    q = path_quiver(2)
    table = ext_table(q)
    mods = enumerate_tilting(q)
    assert mods == (
        TiltingModule(ids_for(table, AInterval(1, 2), AInterval(0, 2))),
        TiltingModule(ids_for(table, AInterval(0, 1), AInterval(0, 2))),
    )


def test_enumerate_counts():
    assert len(enumerate_tilting(path_quiver(3))) == 5
    assert len(enumerate_tilting(d_quiver(3))) == 20
    for n in range(1, 7):
        want, _ = closed_form_counts("A", n)
        assert len(enumerate_tilting(path_quiver(n))) == want


def test_rank_guard():
    with pytest.raises(ValueError):
        enumerate_tilting(path_quiver(13))


def test_leq_examples():
    q = path_quiver(2)
    table = ext_table(q)
    lower = TiltingModule(ids_for(table, AInterval(0, 1), AInterval(0, 2)))
    upper = TiltingModule(ids_for(table, AInterval(1, 2), AInterval(0, 2)))
    assert leq(table, lower, lower) and leq(table, upper, upper)
    assert leq(table, lower, upper)
    assert not leq(table, upper, lower)


def test_projectives_are_the_maximum():
    q = path_quiver(4)
    table = ext_table(q)
    proj = TiltingModule(
        tuple(
            sorted(
                table.id_by_dim[tuple(d[v] for v in q.vertices)]
                for d in projective_dim_vectors(q).values()
            )
        )
    )
    for t in enumerate_tilting(q):
        assert leq(table, t, proj)


def test_tilting_quiver_a2_direction():
    q = path_quiver(2)
    table = ext_table(q)
    tq = tilting_quiver(q)
    projectives = TiltingModule(ids_for(table, AInterval(1, 2), AInterval(0, 2)))
    other = TiltingModule(ids_for(table, AInterval(0, 1), AInterval(0, 2)))
    (arrow,) = tq.arrows
    assert tq.nodes[arrow[0]] == projectives
    assert tq.nodes[arrow[1]] == other


def test_arrow_counts():
    assert len(tilting_quiver(path_quiver(3)).arrows) == 5
    assert len(tilting_quiver(d_quiver(3)).arrows) == 32


def test_completions_one_or_two():
    for q in (path_quiver(4), d_quiver(3)):
        table = ext_table(q)
        for t in enumerate_tilting(q):
            for x in t.summands:
                part = tuple(s for s in t.summands if s != x)
                comp = completions(table, part)
                assert x in comp
                assert len(comp) in (1, 2)
                if len(comp) == 2:
                    y = next(s for s in comp if s != x)
                    one_way = (table.ext[x][y] != 0) + (table.ext[y][x] != 0)
                    assert one_way == 1


def test_hasse_property():
    for q in (path_quiver(1), path_quiver(3), d_quiver(3)):
        assert hasse_check(ext_table(q), tilting_quiver(q)).ok


def test_degree_stats():
    tq = tilting_quiver(path_quiver(4))
    report = degree_stats(tq)
    assert report.formula_ok
    assert report.histogram == {3: 14}
    tq = tilting_quiver(d_quiver(3))
    report = degree_stats(tq)
    assert report.formula_ok
    assert report.histogram == {2: 2, 3: 12, 4: 6}
    tq = tilting_quiver(path_quiver(1))
    assert degree_stats(tq).histogram == {0: 1}


def test_half_degree_sum():
    for q in (path_quiver(4), d_quiver(3)):
        tq = tilting_quiver(q)
        assert 2 * len(tq.arrows) == sum(tq.delta)


def test_closed_form_count_examples():
    assert closed_form_counts("A", 3) == (5, 5)
    assert closed_form_counts("A", 4) == (14, 21)
    assert closed_form_counts("D", 4) == (20, 32)
    assert closed_form_counts("D", 3) == (5, 5)  # alias of A3
    assert closed_form_counts("A", 1) == (1, 0)
    with pytest.raises(ValueError):
        closed_form_counts("A", 0)
    with pytest.raises(ValueError):
        closed_form_counts("D", 2)
    with pytest.raises(ValueError):
        closed_form_counts("E", 6)


def test_orientation_independence_small():
    for kind, fork, rank in (("A", 4, 4), ("D", 3, 4)):
        want = closed_form_counts(kind, rank)
        for _, q in all_orientations(kind, fork if kind == "D" else rank):
            tq = tilting_quiver(q)
            assert (len(tq.nodes), len(tq.arrows)) == want


def test_module_dim_and_is_tilting():
    q = d_quiver(3)
    table = ext_table(q)
    t = enumerate_tilting(q)[0]
    dims = module_dim(table, t)
    assert set(dims) == set(q.vertices)
    assert all(v >= 1 for v in dims.values())
    assert is_tilting(table, t.summands)
    assert not is_tilting(table, t.summands[:-1])


def test_json_and_dot_export():
    tq = tilting_quiver(path_quiver(3))
    data = tilting_quiver_json(tq)
    assert list(data.keys()) == ["quiver", "nodes", "arrows", "delta"]
    assert len(data["nodes"]) == 5 and len(data["arrows"]) == 5
    assert data["delta"] == [2, 2, 2, 2, 2]
    json.dumps(data)
    dot = tilting_quiver_dot(tq)
    lines = dot.strip().splitlines()
    assert lines[0] == "digraph tilting {" and lines[-1] == "}"
    assert sum(1 for ln in lines if "->" in ln) == 5
    assert sum(1 for ln in lines if "label=" in ln) == 5
    assert 'label="L(2,3)|L(1,3)|L(0,3)"' in dot


def test_unique_source_and_sink():
    for q in (path_quiver(4), d_quiver(3)):
        tq = tilting_quiver(q)
        assert sum(1 for d in tq.in_deg if d == 0) == 1
        assert sum(1 for d in tq.out_deg if d == 0) == 1
