import pytest

from bestchoice.dyck import (
    DyckPath,
    count_partial_paths,
    dyck_from_corners,
    dyck_from_perm,
    enumerate_dyck,
    ne_corners,
    perm_from_dyck,
)
from bestchoice.exact import catalan
from bestchoice.oracle import enumerate_avoiders
from bestchoice.perms import PatternId, contains_pattern, left_to_right_maxima

FIG_PATH = "NNNNEENNNEENEEEE"  # the N = 8 path drawn for 41728356


def lattice_paths(a, b):
    """Independent DP over the staircase region, no closed form."""
    table = {}
    for y in range(b + 1):
        for x in range(min(a, y) + 1):
            if x == y == 0:
                table[x, y] = 1
            else:
                table[x, y] = table.get((x - 1, y), 0) + table.get((x, y - 1), 0)
    return table[a, b]


@pytest.mark.parametrize("bad", ["", "E", "NEE", "ENNE", "NNE", "NXE"])
def test_invalid_paths(bad):
    with pytest.raises(ValueError):
        DyckPath(bad)


@pytest.mark.parametrize("path, corners", [
    ("NNNEEE", [(1, 3)]),
    ("NNENEE", [(1, 2), (2, 3)]),
    ("NNEENE", [(1, 2), (3, 3)]),
    ("NENNEE", [(1, 1), (2, 3)]),
    ("NENENE", [(1, 1), (2, 2), (3, 3)]),
])
def test_corners_of_size_three_paths(path, corners):
    assert ne_corners(DyckPath(path)) == corners
    assert dyck_from_corners(corners, 3) == path


def test_enumerate_size_three_in_figure_order():
    assert list(enumerate_dyck(3)) == ["NNNEEE", "NNENEE", "NNEENE", "NENNEE", "NENENE"]
    assert list(enumerate_dyck(1)) == ["NE"]


def test_enumerate_counts_and_bound():
    paths = list(enumerate_dyck(10))
    assert len(paths) == len(set(paths)) == 16796 == catalan(10)
    assert paths == sorted(paths, key=lambda d: d.replace("N", "0").replace("E", "1"))
    with pytest.raises(OverflowError):
        next(enumerate_dyck(15))


def test_figure_path_and_permutation():
    assert dyck_from_corners([(1, 4), (3, 7), (5, 8)], 8) == FIG_PATH
    assert perm_from_dyck(FIG_PATH) == (4, 1, 7, 2, 8, 3, 5, 6)
    assert ne_corners(dyck_from_perm((4, 1, 7, 2, 8, 3, 5, 6))) == [(1, 4), (3, 7), (5, 8)]


def test_small_bijection_examples():
    assert perm_from_dyck("NENENE") == (1, 2, 3)
    assert perm_from_dyck("NNNEEE") == (3, 1, 2)
    assert dyck_from_perm((1, 2, 3)) == "NENENE"
    assert ne_corners(dyck_from_perm((2, 1, 3))) == [(1, 2), (3, 3)]


def test_dyck_from_perm_rejects_321():
    with pytest.raises(ValueError):
        dyck_from_perm((3, 2, 1))


@pytest.mark.parametrize("corners, n", [
    ([(2, 2)], 2),             # first corner not in column 1
    ([(1, 2), (1, 3)], 3),     # columns not increasing
    ([(1, 1), (3, 3)], 3),     # column 3 unreachable from height 1
    ([(1, 2)], 3),             # never reaches height N
    ([(1, 1), (2, 1)], 2),     # heights not increasing
])
def test_bad_corner_sets(corners, n):
    with pytest.raises(ValueError):
        dyck_from_corners(corners, n)


def test_roundtrip_all_paths_up_to_eight():
    for n in range(1, 9):
        images = set()
        for d in enumerate_dyck(n):
            p = perm_from_dyck(d)
            assert not contains_pattern(p, PatternId.P321)
            assert dyck_from_perm(p) == d
            assert ne_corners(d) == [tuple(m) for m in left_to_right_maxima(p)]
            images.add(p)
        assert images == set(enumerate_avoiders(n, PatternId.P321))


def test_corner_gap_bound():
    # between corners j and j+1 at most (height_j - column_j) east steps are taken
    for n in range(1, 9):
        for d in enumerate_dyck(n):
            cs = ne_corners(d)
            for (c1, h1), (c2, _) in zip(cs, cs[1:]):
                assert c2 - c1 - 1 <= h1 - c1


def test_count_partial_paths_examples():
    assert all(count_partial_paths(0, b) == 1 for b in range(10))
    assert count_partial_paths(5, 5) == 42 == catalan(5)
    assert count_partial_paths(2, 4) == 9 == catalan(4) - catalan(3)
    with pytest.raises(ValueError):
        count_partial_paths(3, 2)


def test_count_partial_paths_against_lattice_dp():
    for b in range(21):
        for a in range(b + 1):
            assert count_partial_paths(a, b) == lattice_paths(a, b)


def test_count_partial_paths_pascal_recurrence():
    for b in range(1, 21):
        for a in range(1, b + 1):
            below = count_partial_paths(a, b - 1) if a <= b - 1 else 0
            assert count_partial_paths(a, b) == count_partial_paths(a - 1, b) + below
