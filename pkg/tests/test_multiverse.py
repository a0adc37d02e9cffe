import pytest
from hypothesis import given

from core.errors import FrameError, ResourceCapError
from core.multiverse import (
    Box,
    Diamond,
    KripkeFrame,
    Letter,
    MAnd,
    MImp,
    MNeg,
    MOr,
    WorldLabeling,
    canonical_button_model,
    eval_modal,
    is_button,
    is_persistent,
    pushed,
    pushed_set,
    truth_set,
)
from strategies import frames_with_persistent_letter

p0, p1 = Letter(0), Letter(1)


@pytest.fixture
def fork():
    frame = KripkeFrame.from_edges(3, [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)])
    return frame, WorldLabeling(1, 0, [[False, True, False]])


class TestFrame:
    def test_reflexivity_required(self):
        with pytest.raises(FrameError, match="not reflexive"):
            KripkeFrame.from_edges(2, [(0, 0), (0, 1)])

    def test_transitivity_required(self):
        with pytest.raises(FrameError, match="not transitive"):
            KripkeFrame.from_edges(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])

    def test_edges_in_range(self):
        with pytest.raises(FrameError):
            KripkeFrame.from_edges(2, [(0, 0), (1, 1), (1, 2)])

    def test_relation_is_read_only(self, fork):
        frame, _ = fork
        with pytest.raises(ValueError):
            frame.relation[1, 2] = True

    def test_successors_and_edges(self, fork):
        frame, _ = fork
        assert frame.successors(0) == (0, 1, 2)
        assert frame.successors(2) == (2,)
        assert frame.edges() == [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)]
        with pytest.raises(FrameError):
            frame.successors(3)

    def test_directedness(self, fork):
        frame, _ = fork
        assert not frame.is_directed()
        assert frame.remove_world(2).is_directed()
        diamond = KripkeFrame.from_edges(
            4, [(w, w) for w in range(4)] + [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
        )
        assert diamond.is_directed()

    def test_remove_world_keeps_names(self):
        frame, _ = canonical_button_model(2, 0)
        smaller = frame.remove_world(1)
        assert smaller.worlds == ("{}/", "{1}/", "{0,1}/")
        assert len(smaller.edges()) == 6


class TestLabeling:
    def test_row_count(self):
        with pytest.raises(FrameError):
            WorldLabeling(2, 0, [[True, False]])

    def test_frame_size_mismatch(self, fork):
        frame, _ = fork
        with pytest.raises(FrameError):
            truth_set(frame, WorldLabeling(1, 0, [[True, False]]), p0)

    def test_rows(self, fork):
        _, labeling = fork
        assert labeling.rows() == ["010"]
        assert labeling.remove_world(1).rows() == ["00"]


class TestModalTruth:
    def test_fork_refutes_confluence(self, fork):
        frame, labeling = fork
        assert eval_modal(frame, labeling, 0, Diamond(Box(p0)))
        assert not eval_modal(frame, labeling, 0, Box(Diamond(p0)))
        assert not eval_modal(frame, labeling, 0, MImp(Diamond(Box(p0)), Box(Diamond(p0))))

    def test_connectives(self, fork):
        frame, labeling = fork
        assert truth_set(frame, labeling, MNeg(p0)).tolist() == [True, False, True]
        assert truth_set(frame, labeling, MOr(p0, MNeg(p0))).all()
        assert not truth_set(frame, labeling, MAnd(p0, MNeg(p0))).any()
        assert truth_set(frame, labeling, Box(p0)).tolist() == [False, True, False]

    def test_unknown_letter(self, fork):
        frame, labeling = fork
        with pytest.raises(FrameError):
            eval_modal(frame, labeling, 0, p1)

    def test_not_a_formula(self, fork):
        frame, labeling = fork
        with pytest.raises(TypeError):
            truth_set(frame, labeling, "p0")

    def test_printing(self):
        assert str(MImp(Diamond(Box(p0)), Box(Diamond(p0)))) == "(◇□p0 → □◇p0)"


class TestButtons:
    def test_fork_letter_is_persistent_but_not_a_button(self, fork):
        frame, labeling = fork
        assert is_persistent(frame, labeling, 0)
        assert pushed(frame, labeling, 1, 0)
        assert not pushed(frame, labeling, 0, 0)
        assert not is_button(frame, labeling, 0, 0)
        assert is_button(frame, labeling, 1, 0)

    def test_canonical_model_shape(self):
        frame, labeling = canonical_button_model(2, 0)
        assert len(frame) == 4
        assert int(frame.relation.sum()) == 9
        assert frame.worlds == ("{}/", "{0}/", "{1}/", "{0,1}/")
        assert labeling.rows() == ["0101", "0011"]

    def test_canonical_buttons(self):
        frame, labeling = canonical_button_model(2, 1)
        assert len(frame) == 8
        assert frame.worlds[:2] == ("{}/0", "{}/1")
        for i in range(2):
            assert is_button(frame, labeling, 0, i)
            assert is_persistent(frame, labeling, i)
        assert not is_persistent(frame, labeling, 2)
        assert pushed_set(frame, labeling, 0) == frozenset()
        assert pushed_set(frame, labeling, 7) == frozenset({0, 1})

    def test_button_index_checked(self):
        frame, labeling = canonical_button_model(1, 1)
        with pytest.raises(FrameError):
            pushed(frame, labeling, 0, 1)

    def test_world_cap(self):
        with pytest.raises(ResourceCapError):
            canonical_button_model(5, 4, max_worlds=256)

    def test_negative_counts(self):
        with pytest.raises(FrameError):
            canonical_button_model(-1, 0)

    def test_pushed_matches_definition(self):
        frame, labeling = canonical_button_model(2, 1)
        for w in range(len(frame)):
            for i in range(2):
                expected = all(labeling.truth[i, v] for v in frame.successors(w))
                assert pushed(frame, labeling, w, i) == expected

    @given(frames_with_persistent_letter())
    def test_persistent_letters_are_pushed_where_true(self, case):
        frame, labeling = case
        assert is_persistent(frame, labeling, 0)
        for w in range(len(frame)):
            assert pushed(frame, labeling, w, 0) == bool(labeling.truth[0, w])
