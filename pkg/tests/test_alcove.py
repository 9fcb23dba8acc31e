import itertools

import pytest

from bunsod.alcove import (
    BFS_RADIUS_ENV,
    AlcoveClass,
    SearchBoundExceeded,
    classify_bfs,
    classify_sl2,
    classify_typeA,
    default_bfs_radius,
    replay_word,
)
from bunsod.liecore import GroupType

A1, A2, A3 = (GroupType("A", r) for r in (1, 2, 3))


def test_sl2_examples():
    assert classify_sl2(0, 1) == AlcoveClass.singular()
    assert classify_sl2(0, 2) == AlcoveClass(True, 1, 0)
    assert classify_sl2(1, 0) == AlcoveClass(True, 0, 0)


def test_bfs_examples():
    assert classify_bfs(A1, 0, 4) == AlcoveClass(True, 2, (0,))
    assert classify_bfs(A2, 1, (0, 0)) == AlcoveClass(True, 0, (0, 0))
    assert classify_bfs(A1, 2, 3) == AlcoveClass.singular()
    # closed form cross-check of the first example: q = 5 // 2
    assert classify_sl2(0, 4).length == 5 // 2


def test_typeA_examples():
    assert classify_typeA(1, 0, 2) == AlcoveClass(True, 1, (0,))
    assert classify_typeA(2, 0, (1, 0)) == AlcoveClass.singular()
    assert classify_typeA(2, 1, (1, 0)) == AlcoveClass(True, 0, (1, 0))


@pytest.mark.parametrize("c", range(7))
def test_sl2_matches_search(c):
    for lam in range(41):
        assert classify_sl2(c, lam).as_labels() == classify_bfs(A1, c, lam), (c, lam)


@pytest.mark.parametrize("t", [A2, A3], ids=str)
@pytest.mark.parametrize("c", range(4))
def test_residues_match_search(t, c):
    for lam in itertools.product(range(9), repeat=t.rank):
        if sum(lam) <= 8:
            assert classify_typeA(t.rank, c, lam) == classify_bfs(t, c, lam), lam


@pytest.mark.parametrize("lam", range(41))
def test_level_zero_closed_form(lam):
    got = classify_sl2(0, lam)
    if lam % 2:
        assert not got.regular
    else:
        assert got == AlcoveClass(True, lam // 2, 0)


@pytest.mark.parametrize("c", range(7))
def test_reduced_weight_is_integrable(c):
    for lam in range(60):
        cls = classify_sl2(c, lam)
        if cls.regular:
            assert 0 <= cls.reduced <= c


@pytest.mark.parametrize("t", [A1, A2, A3], ids=str)
def test_word_replay_recovers_weight(t):
    for c in range(3):
        for lam in itertools.product(range(7), repeat=t.rank):
            if sum(lam) > 6:
                continue
            cls = classify_bfs(t, c, lam)
            if cls.regular:
                assert len(cls.word) == cls.length
                assert replay_word(t, c, cls.reduced, cls.word) == lam


def test_radius_bound():
    with pytest.raises(SearchBoundExceeded):
        classify_bfs(A1, 0, 40, radius=3)
    assert classify_bfs(A1, 0, 40, radius=20).length == 20


def test_radius_env(monkeypatch):
    monkeypatch.setenv(BFS_RADIUS_ENV, "2")
    assert default_bfs_radius() == 2
    with pytest.raises(SearchBoundExceeded):
        classify_bfs(A1, 0, 10)
    monkeypatch.delenv(BFS_RADIUS_ENV)
    assert default_bfs_radius() == 64


def test_errors():
    with pytest.raises(ValueError):
        classify_sl2(-1, 2)
    with pytest.raises(ValueError):
        classify_sl2(0, -2)
    with pytest.raises(ValueError):
        classify_typeA(2, 0, (1, -1))
    with pytest.raises(ValueError):
        classify_typeA(2, 0, (1,))
    with pytest.raises(ValueError):
        classify_bfs(GroupType("B", 2), 0, (0, 0))


def test_to_dict():
    assert classify_sl2(0, 2).to_dict() == {"regular": True, "length": 1, "reduced": 0}
    assert classify_sl2(0, 1).to_dict() == {"regular": False}
