import random

import pytest

from linkfloer.graded import CollapsedGroup, MultiGradedGroup
from linkfloer.groupfile import GroupFileError, parse, serialize
from linkfloer.selftest import random_collapsed_group, random_multigraded_group


def test_serialize_collapsed():
    group = CollapsedGroup(2, {(0, 2): 1, (-1, 0): 4, (-2, -2): 2})
    assert serialize(group) == "collapsed 2\n0 1 1\n-1 0 4\n-2 -1 2\n"


def test_serialize_multigraded_with_halves():
    group = MultiGradedGroup(2, {(0, (1, -1)): 2})
    assert serialize(group) == "components 2\n0 1/2 -1/2 2\n"


def test_parse_with_comments_and_blank_lines():
    text = """
# a collapsed group
collapsed 1   # header
0 0 1

# done
"""
    assert parse(text) == CollapsedGroup(1, {(0, 0): 1})


def test_parse_accumulates_repeated_gradings():
    text = "collapsed 1\n0 0 1\n0 0 2\n"
    assert parse(text) == CollapsedGroup(1, {(0, 0): 3})


def test_parse_empty_body_gives_empty_group():
    group = parse("collapsed 2\n")
    assert group == CollapsedGroup(2, {})
    assert group.ranks == {}


def test_round_trip_random_groups():
    rng = random.Random(37)
    for trial in range(300):
        if trial % 2:
            group = random_collapsed_group(rng)
        else:
            group = random_multigraded_group(rng)
        assert parse(serialize(group)) == group


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GroupFileError, match="line 1"):
        parse("nonsense 2\n")
    with pytest.raises(GroupFileError, match="line 2: expected 3 fields"):
        parse("collapsed 1\n0 0\n")
    with pytest.raises(GroupFileError, match="line 3: rank must be positive"):
        parse("collapsed 1\n0 0 1\n1 1 0\n")
    with pytest.raises(GroupFileError, match="line 2"):
        parse("components 2\n0 1/3 0 1\n")
    err = None
    try:
        parse("# only comments\n\n")
    except GroupFileError as caught:
        err = caught
    assert err is not None and err.line == 1


def test_parse_rejects_bad_component_count():
    with pytest.raises(GroupFileError, match="component count"):
        parse("collapsed 0\n")
    with pytest.raises(GroupFileError, match="component count"):
        parse("collapsed x\n")
