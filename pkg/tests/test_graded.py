import random

import pytest

from linkfloer.atlas import (
    BASE_GROUPS,
    CABLE_24_SAME,
    CABLE_24_OPP_PRINTED,
    PRINTED_TABLE,
    TORUS_24_OPP,
    reversed_cable,
)
from linkfloer.graded import (
    CollapsedGroup,
    EmptyGroupError,
    MultiGradedGroup,
    check_symmetry,
    collapse,
    disjoint_union,
    half_str,
    is_fibered,
    is_nearly_fibered,
    mirror,
    parse_half,
    rank_at,
    reverse_component,
    s_top,
    total_rank,
)
from linkfloer.selftest import random_collapsed_group, random_multigraded_group

UNKNOT = BASE_GROUPS["unknot"]
TREFOIL = BASE_GROUPS["T(2,3)"]
HOPF = BASE_GROUPS["T(2,2)"]

# Collapsed group of the oppositely oriented trefoil cable, doubled gradings.
CABLE_OPP_COLLAPSED = CollapsedGroup(2, {
    (-1, 2): 2, (-2, 0): 4, (-1, 0): 1, (0, 0): 1, (-3, -2): 2,
})


def test_half_str_and_parse_half():
    assert half_str(4) == "2"
    assert half_str(3) == "3/2"
    assert half_str(-1) == "-1/2"
    assert half_str(0) == "0"
    assert parse_half("2") == 4
    assert parse_half("-3/2") == -3
    assert parse_half("4/2") == 4
    with pytest.raises(ValueError):
        parse_half("1/3")


def test_group_construction_drops_zero_ranks():
    group = CollapsedGroup(1, {(0, 0): 1, (1, 2): 0})
    assert group.ranks == {(0, 0): 1}
    multi = MultiGradedGroup(2, {(0, (0, 0)): 0})
    assert multi.ranks == {}


def test_group_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        CollapsedGroup(0, {})
    with pytest.raises(ValueError):
        CollapsedGroup(1, {(0, 0): -1})
    with pytest.raises(ValueError):
        MultiGradedGroup(2, {(0, (0,)): 1})  # tuple too short


def test_collapse_of_cable():
    # Summing the ten generators over s_1 + s_2 gives ranks 1,2,1,2,1,2,1
    # in collapsed gradings 4,3,2,0,-2,-3,-4.
    collapsed = collapse(CABLE_24_SAME)
    assert collapsed == CollapsedGroup(2, {
        (0, 8): 1, (-1, 6): 2, (-2, 4): 1, (-2, 0): 1, (-3, 0): 1,
        (-6, -4): 1, (-7, -6): 2, (-8, -8): 1,
    })
    for s, rank in [(8, 1), (6, 2), (4, 1), (0, 2), (-4, 1), (-6, 2), (-8, 1)]:
        assert rank_at(collapsed, s) == rank


def test_collapse_singleton():
    group = MultiGradedGroup(2, {(0, (0, 0)): 1})
    assert collapse(group) == CollapsedGroup(2, {(0, 0): 1})


def test_collapse_empty_group_raises():
    with pytest.raises(EmptyGroupError, match="empty group"):
        collapse(MultiGradedGroup(1, {}))


def test_collapse_of_reversed_cable_is_the_table_row():
    assert collapse(reversed_cable()) == CABLE_OPP_COLLAPSED


def test_mirror_of_torus_link_row():
    mirrored = mirror(TORUS_24_OPP)
    assert mirrored == PRINTED_TABLE["T'(2,-4)"]
    # the rank-2 generator in (d, s) = (-2, -1) lands in (1, 1)
    assert mirrored.ranks[(1, 2)] == 2


def test_mirror_of_unknot_is_unknot():
    assert mirror(UNKNOT) == UNKNOT


def test_mirror_is_an_involution():
    rng = random.Random(7)
    for _ in range(200):
        group = random_collapsed_group(rng)
        assert mirror(mirror(group)) == group


def test_disjoint_union_with_unknot_matches_table():
    assert disjoint_union(TREFOIL, UNKNOT) == PRINTED_TABLE["T(2,3) U unknot"]


def test_disjoint_union_of_two_unknots():
    union = disjoint_union(UNKNOT, UNKNOT)
    assert union == CollapsedGroup(2, {(0, 0): 1, (-1, 0): 1})


def test_disjoint_union_of_figure_eight_and_unknot():
    union = disjoint_union(BASE_GROUPS["4_1"], UNKNOT)
    assert total_rank(union) == 10  # 2 * 5 * 1
    assert {key: rank for key, rank in union.ranks.items() if key[1] == 0} == {
        (0, 0): 3, (-1, 0): 3,
    }


def test_disjoint_union_rank_and_genus_properties():
    rng = random.Random(11)
    for _ in range(200):
        first = random_collapsed_group(rng, max_n=2)
        second = random_collapsed_group(rng, max_n=2)
        union = disjoint_union(first, second)
        assert total_rank(union) == 2 * total_rank(first) * total_rank(second)
        assert s_top(union) == s_top(first) + s_top(second)


def test_reverse_component_on_cable():
    reversed_group = reverse_component(CABLE_24_SAME, 2, 2)
    # spot checks, doubled gradings: [2,2] in degree 0 -> [2,-2] in degree -2
    assert reversed_group.ranks[(-2, (4, -4))] == 1
    assert reversed_group.ranks[(-3, (2, -4))] == 1
    # the generator the published list misprints: [-2,-1] in degree -7
    # lands at [-2,1] in degree -3 (not at [-1,2])
    assert reversed_group.ranks[(-3, (-4, 2))] == 1
    assert (-3, (-2, 4)) not in reversed_group.ranks
    assert total_rank(reversed_group) == 10


def test_reverse_component_rejects_bad_index():
    with pytest.raises(ValueError, match="component index out of range"):
        reverse_component(CABLE_24_SAME, 3, 2)
    with pytest.raises(ValueError, match="component index out of range"):
        reverse_component(CABLE_24_SAME, 0, 2)


def test_reverse_component_is_an_involution():
    rng = random.Random(13)
    for _ in range(200):
        group = random_multigraded_group(rng)
        component = rng.randint(1, group.n)
        linking = rng.randint(-6, 6)
        back = reverse_component(
            reverse_component(group, component, linking), component, -linking
        )
        assert back == group


def test_collapse_preserves_rank_and_maslov_multiset():
    rng = random.Random(17)
    for _ in range(200):
        group = random_multigraded_group(rng)
        collapsed = collapse(group)
        assert total_rank(collapsed) == total_rank(group)
        multiset = lambda g: sorted(d for (d, _s), r in g.ranks.items() for _ in range(r))
        assert multiset(collapsed) == multiset(group)


def test_s_top_values():
    assert s_top(UNKNOT) == 0
    assert s_top(collapse(CABLE_24_SAME)) == 8  # big genus 4, doubled
    for row in PRINTED_TABLE.values():
        assert s_top(row) == 2  # big genus 1, doubled


def test_s_top_empty_group_raises():
    with pytest.raises(EmptyGroupError):
        s_top(CollapsedGroup(1, {}))


def test_fiberedness_predicates():
    assert is_fibered(HOPF)
    assert is_fibered(UNKNOT)
    assert not is_fibered(TORUS_24_OPP)
    assert is_nearly_fibered(TORUS_24_OPP)
    assert not is_nearly_fibered(TREFOIL)
    for row in PRINTED_TABLE.values():
        assert is_nearly_fibered(row) and not is_fibered(row)
    single_top = CollapsedGroup(1, {(0, 2): 1, (-1, 0): 5})
    assert not is_nearly_fibered(single_top)


def test_total_rank_values():
    assert total_rank(CABLE_24_SAME) == 10
    assert total_rank(UNKNOT) == 1
    assert total_rank(disjoint_union(BASE_GROUPS["4_1"], UNKNOT)) == 10


def test_check_symmetry():
    assert check_symmetry(CABLE_24_SAME)
    assert check_symmetry(reversed_cable())
    assert not check_symmetry(CABLE_24_OPP_PRINTED)  # the misprinted generator
    assert check_symmetry(UNKNOT)
    # every printed row is symmetric, even the misprinted figure-eight one
    for group in PRINTED_TABLE.values():
        assert check_symmetry(group)


def test_reverse_component_preserves_other_components():
    rng = random.Random(19)
    for _ in range(100):
        group = random_multigraded_group(rng)
        component = rng.randint(1, group.n)
        image = reverse_component(group, component, rng.randint(-6, 6))
        i = component - 1
        for j in range(group.n):
            if j == i:
                continue
            before = sorted(abs(s[j]) for (_d, s), r in group.ranks.items() for _ in range(r))
            after = sorted(abs(s[j]) for (_d, s), r in image.ranks.items() for _ in range(r))
            assert before == after
