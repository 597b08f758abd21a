import pytest

from icechar.algebra import LaurentPoly
from icechar.combinat import ValidationError, partitions_in_box, staircase, vertex_config
from icechar.iceb import (
    DEFAULT_WEIGHTS,
    FIGURE_WEIGHTS,
    IceStateB,
    c_star,
    c_star_deformed,
    check_bend_lemma,
    check_no_ne_top_row,
    check_second_row_grouping,
    embed_template,
    enumerate_ice_b,
    enumerate_ice_b_direct,
    ice_b_to_strict_pattern,
    partition_function_b,
    pattern_to_ice_b_unchecked,
    state_weight,
    strict_pattern_to_ice_b,
    verify_cor52,
    verify_thm51,
)
from icechar.sundaram import enumerate_strict_patterns, so_char_via_tableaux

EXAMPLE = ((3, 2, 0), (3, 1), (2, 1), (2,), (1,))


def z(i, n, p=1):
    return LaurentPoly.z(i, n, p)


def tops(n, max_part):
    for lam in partitions_in_box(n, max_part):
        if lam[-1] >= 0:
            yield lam, tuple(a + b for a, b in zip(lam, staircase(n, 1)))


def drawn_state():
    """The filled-in example lattice, read off its arrow lists.

    x = 0, 1, 2 are columns 3, 2, 1; y = 1..5 are rows 1, 1b, 2, 2b, 0.
    """
    down = [(0, 1), (1, 1), (2, 1), (2, 6), (1, 5), (0, 4), (0, 3), (2, 3), (0, 2), (1, 2)]
    up = [(0, 5), (1, 5), (0, 4), (2, 4), (1, 3), (2, 3), (1, 2), (2, 1)]
    right = [(-1, 1), (-1, 2), (-1, 3), (-1, 4), (-1, 5), (2, 5), (0, 5), (1, 4), (0, 3), (1, 3), (0, 2), (0, 1), (1, 1)]
    left = [(2, 5), (1, 4), (2, 2)]
    vert = {(x, y): "down" for x, y in down}
    vert.update({(x, y + 1): "up" for x, y in up})
    hor = {(x, y): "right" for x, y in right}
    hor.update({(x - 1, y): "left" for x, y in left})
    for y in (1, 2, 3, 4):  # both bends leave the barred row and return into the unbarred one
        hor[(2, y)] = "right" if y in (2, 4) else "left"
    grid = tuple(
        tuple(
            vertex_config(hor[(x - 1, y)] == "right", vert[(x, y + 1)] == "down", vert[(x, y)] == "up", hor[(x, y)] == "left")
            for x in (0, 1, 2)
        )
        for y in (5, 4, 3, 2, 1)
    )
    return IceStateB(2, (3, 2), (3, 2, 1), grid, ("A", "A"))


# -- states and bijections ----------------------------------------------------------------

def test_drawn_example_state():
    s = strict_pattern_to_ice_b(EXAMPLE, 2)
    assert s == drawn_state()
    assert ice_b_to_strict_pattern(s) == EXAMPLE
    assert check_bend_lemma(s) and check_no_ne_top_row(s)
    assert s in set(enumerate_ice_b((3, 2), 2))


def test_drawn_state_has_ns_in_top_row():
    assert drawn_state().grid[0] == ("SW", "EW", "NS")


def test_n1_round_trip_and_count():
    states = list(enumerate_ice_b((2,), 1))
    assert len(states) == sum(1 for _ in enumerate_strict_patterns((1,), 1))
    for s in states:
        assert strict_pattern_to_ice_b(ice_b_to_strict_pattern(s), 1) == s


def test_empty_top_row_rejected():
    with pytest.raises(ValidationError):
        list(enumerate_ice_b((), 0))
    with pytest.raises(ValidationError):
        list(enumerate_ice_b((2, 0), 2))


def test_inconsistent_state_rejected():
    s = strict_pattern_to_ice_b(EXAMPLE, 2)
    bad = IceStateB(2, s.top_row, s.columns, s.grid, ("B", "A"))
    with pytest.raises(ValidationError):
        ice_b_to_strict_pattern(bad)


@pytest.mark.parametrize("n,max_part", [(1, 3), (2, 2)])
def test_direct_oracle_equals_image(n, max_part):
    for lam, top in tops(n, max_part):
        assert set(enumerate_ice_b_direct(top, n)) == set(enumerate_ice_b(top, n))


def test_direct_oracle_needs_top_row_restriction():
    assert len(list(enumerate_ice_b((4, 2), 2))) == 198
    assert len(list(enumerate_ice_b_direct((4, 2), 2, forbid_top_ne=False))) == 210


# -- lemmas ----------------------------------------------------------------------------------

def test_lemmas_exhaustive_21():
    states = list(enumerate_ice_b((4, 2), 2))
    assert all(check_bend_lemma(s) and check_no_ne_top_row(s) for s in states)


def test_flipped_bend_fails_lemma():
    s = strict_pattern_to_ice_b(EXAMPLE, 2)
    flipped = IceStateB(s.n, s.top_row, s.columns, s.grid, ("B",) + s.bends[1:])
    assert not check_bend_lemma(flipped)


def test_top_step_of_two_shows_ne():
    s = pattern_to_ice_b_unchecked(((4, 2, 0), (2, 1), (2, 1), (2,), (1,)), 2)
    assert s is not None and not check_no_ne_top_row(s)


def test_top_row_weight_is_one():
    seen = set()
    for s in enumerate_ice_b((4, 2), 2):
        seen.update(s.grid[0])
        w = LaurentPoly.one(2)
        for name in s.grid[0]:
            w = w * embed_template(DEFAULT_WEIGHTS.top[name], 0, 2)
        assert w == LaurentPoly.one(2)
    assert "NE" not in seen and "NS" in seen


# -- weights and the deformation identity --------------------------------------------------

def test_c_star_examples():
    t1, t2 = LaurentPoly.t_var(1), LaurentPoly.t_var(2)
    assert c_star(1) == z(1, 1, -1) * (1 + t1 * z(1, 1, 2))
    expected = (
        z(1, 2, -2) * z(2, 2, -1)
        * (1 + t2 * z(1, 2, 2)) * (1 + t2 * z(2, 2, 2))
        * (1 + t2 * z(1, 2) * z(2, 2)) * (1 + z(1, 2) * z(2, 2, -1))
    )
    assert c_star(2) == expected
    assert c_star(2).specialize([1, 1], 0) == 2
    assert c_star_deformed(1) == c_star(1)


def test_n1_partition_function():
    t = LaurentPoly.t_var(1)
    expected = z(1, 1, -1) * (1 + t * z(1, 1, 2)) * (z(1, 1) + 1 + z(1, 1, -1))
    assert partition_function_b((1,), 1) == expected


def test_calibration_only_one_assignment_passes():
    tables = {
        "figure": FIGURE_WEIGHTS,
        "figure-swapped": FIGURE_WEIGHTS.swapped(),
        "calibrated": DEFAULT_WEIGHTS,
        "calibrated-swapped": DEFAULT_WEIGHTS.swapped(),
    }
    passing = {name for name, w in tables.items() if verify_thm51((1,), 1, w).passed}
    assert passing == {"calibrated"}
    assert DEFAULT_WEIGHTS.barred == "delta"


@pytest.mark.parametrize("lam", [(1,), (2,), (3,)])
def test_main_identity_as_stated_n1(lam):
    assert verify_thm51(lam, 1).passed
    assert verify_cor52(lam, 1).passed


def test_main_identity_as_stated_fails_at_n2():
    r = verify_thm51((1, 1), 2)
    assert not r.passed
    # at t = 0 the sum collapses to z^-rho s^so, which the (1 + z_i/z_j) factor cannot match
    assert r.lhs.at_t(0) == so_char_via_tableaux((1, 1), 2).shift([-2, -1])
    assert r.rhs.at_t(0) != r.lhs.at_t(0)


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (2, 2)])
def test_main_and_bend_corrected_identities_deformed_n2(lam):
    assert verify_thm51(lam, 2, deformed=True).passed
    assert verify_cor52(lam, 2, deformed=True).passed


def test_second_row_grouping():
    reports = check_second_row_grouping((2, 1), 2)
    assert reports and all(r.passed for r in reports)


def test_parallel_sum_matches_serial():
    assert partition_function_b((2, 1), 2, jobs=2) == partition_function_b((2, 1), 2)


def test_state_json():
    obj = strict_pattern_to_ice_b(EXAMPLE, 2).to_json_obj()
    assert obj["bends"] == ["A", "A"]
    assert obj["row_labels"] == ["0", "2b", "2", "1b", "1"]
    assert obj["grid"][0] == ["SW", "EW", "NS"]


def test_state_weight_is_a_monomial_sum():
    total = LaurentPoly.zero(2)
    for s in enumerate_ice_b((3, 2), 2):
        total = total + state_weight(s)
    assert total == partition_function_b((1, 1), 2)
