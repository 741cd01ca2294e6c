import numpy as np
import pytest

from relalg import (
    DimensionError,
    MultiplexNetwork,
    RelationMatrix,
    ValidationError,
    components,
    compose,
    network_from_dict,
    network_to_dict,
    permutation_order,
    permute,
    remove_isolates,
    select_subnetwork,
    transpose,
)


def rel(name, actors, ties):
    return RelationMatrix.from_ties(name, actors, ties)


class TestRelationMatrix:
    def test_from_ties(self):
        m = rel("C", ["a", "b", "c"], [("a", "b"), ("c", "a")])
        assert m.ties() == [("a", "b"), ("c", "a")]
        assert m.n == 3

    def test_unknown_actor_rejected(self):
        with pytest.raises(ValidationError):
            rel("C", ["a", "b"], [("a", "z")])

    def test_duplicate_actor_labels_rejected(self):
        with pytest.raises(ValidationError):
            rel("C", ["a", "a"], [])

    def test_cells_are_frozen(self):
        m = rel("C", ["a", "b"], [("a", "b")])
        with pytest.raises(ValueError):
            m.cells[0, 0] = True

    def test_equality_is_structural(self):
        a = rel("C", ["a", "b"], [("a", "b")])
        b = rel("D", ["a", "b"], [("a", "b")])
        c = rel("C", ["a", "b"], [("b", "a")])
        assert a == b          # the name is presentation, not identity
        assert a != c
        assert hash(a) == hash(b)


class TestCompose:
    def test_left_to_right_reading(self):
        actors = ["1", "2", "3"]
        c = rel("C", actors, [("1", "2")])
        f = rel("F", actors, [("2", "3")])
        cf = compose(c, f)
        assert cf.name == "CF"
        assert cf.ties() == [("1", "3")]
        assert compose(f, c).ties() == []

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            compose(rel("C", ["a"], []), rel("F", ["a", "b"], []))

    def test_transpose(self):
        m = rel("C", ["a", "b"], [("a", "b")])
        t = transpose(m)
        assert t.name == "tC"
        assert t.ties() == [("b", "a")]
        assert transpose(t) == m


class TestNetwork:
    def test_requires_a_slice(self):
        with pytest.raises(ValidationError):
            MultiplexNetwork(["a"], [])

    def test_slice_names_unique(self):
        a = rel("C", ["a"], [])
        with pytest.raises(ValidationError):
            MultiplexNetwork(["a"], [a, a])

    def test_slices_share_actors(self):
        with pytest.raises(ValidationError):
            MultiplexNetwork(["a"], [rel("C", ["a"], []), rel("F", ["b"], [])])

    def test_slice_lookup(self, ncc):
        assert ncc.slice("C").ties() == [("398", "357")]
        with pytest.raises(ValidationError):
            ncc.slice("missing")

    def test_dict_round_trip(self, ncc):
        back = network_from_dict(network_to_dict(ncc))
        assert back.actors == ncc.actors
        assert all(a == b for a, b in zip(back.slices, ncc.slices))

    def test_from_dict_validates(self):
        with pytest.raises(ValidationError):
            network_from_dict({"actors": ["a"]})


class TestComponents:
    def test_single_component_no_isolates(self, ncc):
        comps, isolates = components(ncc)
        assert comps == [list(ncc.actors)]
        assert isolates == []

    def test_isolate_detection(self):
        actors = ["a", "b", "c", "d"]
        net = MultiplexNetwork(
            actors, [rel("C", actors, [("a", "b")]), rel("F", actors, [("c", "a")])]
        )
        comps, isolates = components(net)
        assert comps == [["a", "b", "c"]]
        assert isolates == ["d"]
        trimmed = remove_isolates(net)
        assert trimmed.actors == ("a", "b", "c")

    def test_lone_tie_makes_a_component(self):
        actors = ["x", "y", "z"]
        net = MultiplexNetwork(actors, [rel("C", actors, [("x", "y")])])
        comps, isolates = components(net)
        assert comps == [["x", "y"]]
        assert isolates == ["z"]


class TestSelectPermute:
    def test_select_subnetwork(self, ncc):
        sub = select_subnetwork(ncc, ["357", "398"])
        assert sub.actors == ("357", "398")
        assert sub.slice("C").ties() == [("398", "357")]
        assert sub.slice("F").ties() == [("398", "357")]

    def test_select_unknown(self, ncc):
        with pytest.raises(ValidationError):
            select_subnetwork(ncc, ["357", "999"])

    def test_permutation_order_stable_within_class(self):
        order = permutation_order(["a", "b", "c", "d"], {"a": 2, "b": 1, "c": 2, "d": 1})
        assert order == [1, 3, 0, 2]

    def test_permutation_missing_actor(self):
        with pytest.raises(ValidationError):
            permutation_order(["a", "b"], {"a": 1})

    def test_permute_matrix(self):
        m = rel("C", ["a", "b", "c"], [("a", "c")])
        p = permute(m, {"a": 2, "b": 1, "c": 1})
        assert p.actors == ("b", "c", "a")
        assert p.ties() == [("a", "c")]
        assert np.array_equal(
            p.cells, np.array([[0, 0, 0], [0, 0, 0], [0, 1, 0]], dtype=bool)
        )
