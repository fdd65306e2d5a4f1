import json

import pytest

from tiltquiver.quiver import (
    Quiver,
    all_orientations,
    admissible_sink_order,
    canonical_form,
    classify_tree,
    d_quiver,
    delete_vertex,
    path_quiver,
    quiver_from_json,
    quiver_to_json,
    reflect,
    sink_reflection_sequence,
    sinks_sources,
)


def test_path_quiver_examples():
    q = path_quiver(2, [True])
    assert q.vertices == ("1", "2")
    assert q.arrows == (("1", "2"),)
    q = path_quiver(1, [])
    assert q.vertices == ("1",)
    assert q.arrows == ()
    q = path_quiver(3, [True, False])
    assert set(q.arrows) == {("1", "2"), ("3", "2")}


def test_path_quiver_rejects_rank_zero():
    with pytest.raises(ValueError):
        path_quiver(0)
    with pytest.raises(ValueError):
        path_quiver(3, [True])


def test_d_quiver_examples():
    q = d_quiver(3)
    assert q.vertices == ("1", "2", "3+", "3-")
    assert set(q.arrows) == {("1", "2"), ("2", "3+"), ("2", "3-")}
    q = d_quiver(2)
    assert q.vertices == ("1", "2+", "2-")
    assert set(q.arrows) == {("1", "2+"), ("1", "2-")}
    q = d_quiver(3, [False, False, False])
    assert set(q.arrows) == {("2", "1"), ("3+", "2"), ("3-", "2")}


def test_d_quiver_rejects_small_fork():
    with pytest.raises(ValueError):
        d_quiver(1)


def test_reflect_examples():
    q = path_quiver(2)
    assert reflect(q, "2").arrows == (("2", "1"),)
    q3 = path_quiver(3)
    assert set(reflect(q3, "2").arrows) == {("2", "1"), ("3", "2")}
    with pytest.raises(ValueError):
        reflect(q, "7")


def test_reflect_is_an_involution_everywhere():
    for _, q in all_orientations("A", 4):
        for x in q.vertices:
            assert reflect(reflect(q, x), x) == q
    for _, q in all_orientations("D", 3):
        for x in q.vertices:
            assert reflect(reflect(q, x), x) == q


def test_delete_vertex_examples():
    q = path_quiver(2)
    small = delete_vertex(q, "1")
    assert small.vertices == ("2",)
    small = delete_vertex(d_quiver(3), "1")
    assert set(small.arrows) == {("2", "3+"), ("2", "3-")}
    with pytest.raises(ValueError):
        delete_vertex(path_quiver(3), "2")
    with pytest.raises(ValueError):
        delete_vertex(q, "9")


def test_sinks_sources():
    assert sinks_sources(path_quiver(2)) == ({"2"}, {"1"})
    assert sinks_sources(d_quiver(3)) == ({"3+", "3-"}, {"1"})
    assert sinks_sources(path_quiver(1)) == ({"1"}, {"1"})


def test_every_connected_quiver_has_sink_and_source():
    for _, q in all_orientations("A", 4):
        assert q.sinks() and q.sources()
    for _, q in all_orientations("D", 3):
        assert q.sinks() and q.sources()


def test_sink_reflection_sequence_reaches_every_orientation():
    ref = path_quiver(4)
    for _, q in all_orientations("A", 4):
        seq = sink_reflection_sequence(ref, q)
        cur = ref
        for x in seq:
            assert cur.is_sink(x)
            cur = reflect(cur, x)
        assert cur == q
    ref = d_quiver(3)
    for _, q in all_orientations("D", 3):
        seq = sink_reflection_sequence(ref, q)
        cur = ref
        for x in seq:
            assert cur.is_sink(x)
            cur = reflect(cur, x)
        assert cur == q


def test_admissible_sink_order_round_trip():
    for q in (path_quiver(4), d_quiver(3), path_quiver(3, [False, True])):
        order = admissible_sink_order(q)
        assert sorted(order) == sorted(q.vertices)
        cur = q
        for x in order:
            assert cur.is_sink(x)
            cur = reflect(cur, x)
        assert cur == q


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver(("1", "1"), ())
    with pytest.raises(ValueError):
        Quiver(("1",), (("1", "1"),))
    with pytest.raises(ValueError):
        Quiver(("1", "2"), (("1", "2"), ("2", "1")))
    with pytest.raises(ValueError):
        Quiver(("1", "2", "3"), (("1", "2"),))


def test_json_round_trip_and_field_order():
    q = d_quiver(3)
    data = quiver_to_json(q)
    assert list(data.keys()) == ["vertices", "arrows"]
    assert data["vertices"] == ["1", "2", "3+", "3-"]
    assert quiver_from_json(json.loads(json.dumps(data))) == q


def test_classify_tree():
    assert classify_tree(path_quiver(5)) == ("A", 5)
    assert classify_tree(d_quiver(4)) == ("D", 4)
    assert classify_tree(d_quiver(2)) == ("D", 2)
    # deleting a fork tip leaves a path
    assert classify_tree(delete_vertex(d_quiver(3), "3+")) == ("A", 3)
    # deleting the stem end leaves a smaller fork
    assert classify_tree(delete_vertex(d_quiver(4), "1")) == ("D", 3)


def test_canonical_form_is_stable_and_relabels():
    for q in (path_quiver(4, [True, False, True]), d_quiver(3), d_quiver(2)):
        canon, mapping = canonical_form(q)
        assert canon == q
        assert all(mapping[v] == v for v in q.vertices)
    small = delete_vertex(d_quiver(3), "1")
    canon, mapping = canonical_form(small)
    assert canon == d_quiver(2)
    assert mapping == {"2": "1", "3+": "2+", "3-": "2-"}
