import pytest

from icechar.algebra import LaurentPoly
from icechar.characters import weyl_dim_b
from icechar.combinat import ValidationError, vertex_config
from icechar.koiketerada import (
    KTIceState,
    enumerate_kt_ice,
    enumerate_kt_ice_direct,
    enumerate_kt_patterns,
    enumerate_kt_tableaux,
    enumerate_shifted_kt,
    enumerate_strict_kt,
    kt_char,
    kt_ice_to_strict,
    kt_pattern_to_tableau,
    kt_tableau_to_pattern,
    kt_weight,
    pattern_to_kt_ice_unchecked,
    rule4,
    rule5,
    shifted_to_strict_kt,
    strict_kt_to_ice,
    strict_kt_to_shifted,
    tableau_from_labels,
    tableau_labels,
    tie_name,
    validate_kt_pattern,
    verify_kt_three_vertex,
    verify_three_vertex,
)
from icechar.sundaram import so_char_via_tableaux

EXAMPLE_PATTERN = ((5, 3), (4, 2), (2, 1), (2,), (1,), (0,))
EXAMPLE_TABLEAU = [["1b", "1bb", "2b", "2b", "2bb"], ["2", "2b", "2bb"]]
FIGURE_PATTERN = ((2, 1), (2, 1), (2, 0), (2,), (2,), (1,))


def drawn_state():
    """The example lattice for lambda = (2, 1), read off its arrow lists.

    x = 0, 1 are columns 2, 1; y = 0..5 are rows 1, 1b, 1bb, 2, 2b, 2bb.
    Unbarred rows (y = 0, 3) end in a tie at x = 1.
    """
    up = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (1, 0)]
    down = [(0, 1), (0, 0), (1, 0), (1, 2), (1, 3), (1, 4)]
    right = [(-1, 0), (-1, 1), (-1, 2), (-1, 3), (-1, 4), (-1, 5), (0, 0), (0, 3), (0, 4), (0, 5), (0, 2)]
    left = [(1, 1)]
    vert = {(x, y + 1): "up" for x, y in up}
    vert.update({(x, y): "down" for x, y in down})
    hor = {(x, y): "right" for x, y in right}
    hor.update({(x - 1, y): "left" for x, y in left})
    for y, out in {5: True, 4: False, 2: True, 1: True}.items():  # bend A on rows 5/4, C on rows 2/1
        hor[(1, y)] = "right" if out else "left"

    def cfg(x, y):
        return vertex_config(hor[(x - 1, y)] == "right", vert[(x, y + 1)] == "down", vert[(x, y)] == "up", hor[(x, y)] == "left")

    grid, ties = [], {}
    for y in (5, 4, 3, 2, 1, 0):
        xs = (0,) if y in (0, 3) else (0, 1)
        grid.append(tuple(cfg(x, y) for x in xs))
        if y in (0, 3):
            ties[y // 3 + 1] = tie_name(hor[(0, y)] == "right", vert[(1, y + 1)] == "down", vert[(1, y)] == "up")
    return tuple(grid), (ties[1], ties[2])


def z(i, n, p=1):
    return LaurentPoly.z(i, n, p)


# -- tableaux ---------------------------------------------------------------------------------

def test_single_cell():
    tabs = list(enumerate_kt_tableaux((1,), 1))
    assert [tableau_labels(T) for T in tabs] == [[["1"]], [["1b"]], [["1bb"]]]
    assert [kt_weight(T, 1).z for T in tabs] == [(0,), (1,), (-1,)]
    assert kt_char((1,), 1) == z(1, 1) + 1 + z(1, 1, -1)
    assert kt_char((0,), 1) == LaurentPoly.one(1)


def test_char_matches_dimension_and_sundaram():
    for lam, n in [((1,), 1), ((1, 0), 2), ((1, 1), 2), ((2, 0), 2), ((2, 1), 2), ((2,), 1), ((2, 2), 2)]:
        c = kt_char(lam, n)
        assert c.specialize([1] * n) == weyl_dim_b(lam, n)
        assert c == so_char_via_tableaux(lam, n)
    assert kt_char((1, 0), 2).specialize([1, 1]) == 5


def test_example_pair():
    T = tableau_from_labels(EXAMPLE_TABLEAU, 2)
    assert kt_pattern_to_tableau(EXAMPLE_PATTERN, 2) == T
    assert kt_tableau_to_pattern(T, 2) == EXAMPLE_PATTERN
    assert tableau_labels(T) == EXAMPLE_TABLEAU


def test_zero_pattern_and_empty_tableau():
    p = ((0, 0), (0, 0), (0, 0), (0,), (0,), (0,))
    assert kt_pattern_to_tableau(p, 2) == ()
    assert kt_tableau_to_pattern((), 2) == p


@pytest.mark.parametrize("lam", [(2, 1), (1, 0), (2, 2), (1, 1)])
def test_pattern_round_trip_exhaustive(lam):
    pats = list(enumerate_kt_patterns(lam, 2))
    tabs = set(enumerate_kt_tableaux(lam, 2))
    assert {kt_pattern_to_tableau(p, 2) for p in pats} == tabs
    for T in tabs:
        assert kt_pattern_to_tableau(kt_tableau_to_pattern(T, 2), 2) == T


def test_rule_checks():
    assert rule4(EXAMPLE_PATTERN, 2) and rule5(EXAMPLE_PATTERN, 2)
    bad5 = ((2, 1), (2, 1), (1, 0), (0,), (0,), (0,))
    assert rule4(bad5, 2) and not rule5(bad5, 2)
    with pytest.raises(ValidationError):
        validate_kt_pattern(bad5, 2)
    validate_kt_pattern(bad5, 2, rules=False)


# -- strict patterns and shifted tableaux -------------------------------------------------------

def test_shifted_round_trip_21():
    strict = list(enumerate_strict_kt((2, 1), 2))
    shifted = set(enumerate_shifted_kt((2, 1), 2))
    assert len(strict) == len(shifted) == 24
    assert {strict_kt_to_shifted(p, 2) for p in strict} == shifted
    for S in shifted:
        assert strict_kt_to_shifted(shifted_to_strict_kt(S, 2), 2) == S


def test_listed_shifted_rules_alone_overcount():
    # the listed rules need "an unbarred k only starts row k" to match the strict patterns
    assert len(list(enumerate_shifted_kt((2, 1), 2, unbarred_rule=False))) == 36


def test_repeated_zero_column_rejected():
    p = ((1, 0, 0), (1, 0, 0), (1, 0, 0), (1, 0), (1, 0), (1, 0), (1,), (1,), (1,))
    validate_kt_pattern(p, 3, rules=False)
    with pytest.raises(ValidationError):
        validate_kt_pattern(p, 3, strict=True, rules=False)
    with pytest.raises(ValidationError):
        list(enumerate_strict_kt((1, 0, 0), 3))


def test_empty_lambda():
    assert list(enumerate_strict_kt((0,), 1)) == [((0,), (0,), (0,))]
    assert list(enumerate_shifted_kt((0,), 1)) == [()]


# -- ice ----------------------------------------------------------------------------------------

def test_drawn_state():
    s = strict_kt_to_ice(FIGURE_PATTERN, 2)
    grid, ties = drawn_state()
    assert s.grid == grid
    assert s.ties == ties == ("O", "D")
    assert s.bends == ("C", "A")
    assert kt_ice_to_strict(s) == FIGURE_PATTERN
    assert verify_three_vertex(s)


def test_ice_round_trip_and_oracle_21():
    image = list(enumerate_kt_ice((2, 1), 2))
    for s in image:
        assert strict_kt_to_ice(kt_ice_to_strict(s), 2) == s
    oracle = set(enumerate_kt_ice_direct((2, 1), 2))
    assert set(image) <= oracle
    # three-vertex rows and ties let extra states through; each reads back as a rule-5 violator
    assert len(oracle) - len(image) == 3


def test_source_bend_never_occurs():
    for lam, n in [((2, 1), 2), ((3,), 1), ((2, 0), 2)]:
        states = list(enumerate_kt_ice_direct(lam, n, three_vertex=False, source_bend=True))
        assert states and all(None not in s.bends for s in states)


def test_unbarred_rows_are_three_vertex():
    for s in enumerate_kt_ice((2, 1), 2):
        assert verify_three_vertex(s)


def test_rule4_violators_fail_check():
    for p in enumerate_strict_kt((3,), 1, rules=False):
        if not rule4(p, 1):
            assert not verify_three_vertex(pattern_to_kt_ice_unchecked(p, 1))


def test_rule5_violator_that_passes_check():
    p = ((2, 1), (2, 1), (1, 0), (0,), (0,), (0,))
    assert not rule5(p, 2)
    assert verify_three_vertex(pattern_to_kt_ice_unchecked(p, 2))


def test_verify_report_n1_passes():
    for lam in [(1,), (2,), (3,)]:
        assert verify_kt_three_vertex(lam, 1).passed


def test_verify_report_21_lists_counterexamples():
    r = verify_kt_three_vertex((2, 1), 2)
    assert r.details["forward_holds"]
    assert r.details["rule4_violators_passing_check"] == []
    assert len(r.details["rule5_violators_passing_check"]) == 3
    assert not r.passed


def test_inadmissible_state_rejected():
    s = strict_kt_to_ice(FIGURE_PATTERN, 2)
    bad = KTIceState(s.n, s.top_row, s.columns, s.grid, ("D", "D"), s.bends)
    with pytest.raises(ValidationError):
        kt_ice_to_strict(bad)
