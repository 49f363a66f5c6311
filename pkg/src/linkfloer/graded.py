"""Exact graded homology groups of links and their transformation rules.

The objects here are finitely supported rank functions on gradings over the
two-element field, modelling the hat version of link Floer homology of an
oriented link in the 3-sphere.  The Maslov grading d is an integer.
Alexander gradings are half-integers in general, so every Alexander grading
in this package is stored *doubled*: an int equal to twice the actual value.
``half_str`` and ``parse_half`` translate between the doubled representation
and the usual notation ("2", "-3/2").  No floating point is used anywhere.

Groups are immutable after construction and every operation is a pure
function, so everything here is safe for concurrent read-only use.
"""

from dataclasses import dataclass


class EmptyGroupError(ValueError):
    """Raised when an operation needs a nonempty group."""


def half_str(twice: int) -> str:
    """Render a doubled grading: 4 -> "2", 3 -> "3/2", -1 -> "-1/2"."""
    if twice % 2 == 0:
        return str(twice // 2)
    return "%d/2" % twice


def parse_half(text: str) -> int:
    """Parse a grading ("2" or "3/2") into its doubled integer value."""
    text = text.strip()
    if "/" in text:
        numerator, _, denominator = text.partition("/")
        if denominator.strip() != "2":
            raise ValueError("grading must be an integer or a half: %r" % text)
        return int(numerator)
    return 2 * int(text)


def _check_rank(key, rank):
    if not isinstance(rank, int) or rank < 0:
        raise ValueError("rank at %r must be a nonnegative integer, got %r" % (key, rank))


@dataclass(frozen=True)
class MultiGradedGroup:
    """Rank function on (Maslov grading, Alexander multi-grading) pairs.

    ``ranks`` maps (d, s) to a positive rank, where d is an int and s is a
    tuple of n doubled Alexander gradings.  Zero ranks may be passed in and
    are dropped, so equality of groups is plain structural equality.
    """

    n: int
    ranks: dict

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("component count must be a positive integer")
        clean = {}
        for key, rank in self.ranks.items():
            d, s = key
            if not isinstance(d, int):
                raise ValueError("Maslov grading must be an integer: %r" % (key,))
            s = tuple(s)
            if len(s) != self.n or not all(isinstance(a, int) for a in s):
                raise ValueError(
                    "Alexander grading must be a tuple of %d integers: %r" % (self.n, key)
                )
            _check_rank(key, rank)
            if rank:
                clean[(d, s)] = rank
        object.__setattr__(self, "ranks", clean)


@dataclass(frozen=True)
class CollapsedGroup:
    """Rank function on (Maslov grading, collapsed Alexander grading) pairs.

    The collapsed Alexander grading is the sum of the per-component gradings;
    the component count n is kept because the mirror formula depends on it.
    """

    n: int
    ranks: dict

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("component count must be a positive integer")
        clean = {}
        for key, rank in self.ranks.items():
            d, s = key
            if not isinstance(d, int) or not isinstance(s, int):
                raise ValueError("gradings must be integers: %r" % (key,))
            _check_rank(key, rank)
            if rank:
                clean[(d, s)] = rank
        object.__setattr__(self, "ranks", clean)


def collapse(group: MultiGradedGroup) -> CollapsedGroup:
    """Sum the Alexander multi-grading into a single collapsed grading.

    The rank in collapsed grading (d, s) is the total rank of the multigraded
    pieces (d, (s_1, ..., s_n)) with s_1 + ... + s_n = s.  Total rank and the
    multiset of Maslov gradings are preserved.
    """
    if not group.ranks:
        raise EmptyGroupError("empty group")
    out = {}
    for (d, s), rank in group.ranks.items():
        key = (d, sum(s))
        out[key] = out.get(key, 0) + rank
    return CollapsedGroup(group.n, out)


def mirror(group: CollapsedGroup) -> CollapsedGroup:
    """Collapsed group of the mirror image: rank at (d, s) comes from
    (-d + 1 - n, -s).  An involution."""
    n = group.n
    return CollapsedGroup(
        n, {(-d + 1 - n, -s): rank for (d, s), rank in group.ranks.items()}
    )


def disjoint_union(first: CollapsedGroup, second: CollapsedGroup) -> CollapsedGroup:
    """Collapsed group of a split union of two links.

    Every pair of generators in degrees (d1, s1) and (d2, s2) contributes its
    rank product twice, at (d1 + d2, s1 + s2) and at (d1 + d2 - 1, s1 + s2),
    so the total rank of the union is 2 * rk(first) * rk(second).
    """
    out = {}
    for (d1, s1), r1 in first.ranks.items():
        for (d2, s2), r2 in second.ranks.items():
            s = s1 + s2
            for d in (d1 + d2, d1 + d2 - 1):
                out[(d, s)] = out.get((d, s), 0) + r1 * r2
    return CollapsedGroup(first.n + second.n, out)


def reverse_component(group: MultiGradedGroup, component: int, linking: int) -> MultiGradedGroup:
    """Multi-graded group after reversing the orientation of one component.

    ``component`` is 1-based.  ``linking`` is the linking number of that
    component with the rest of the *input* link (an integer).  A generator in
    grading (d, s) with i-th Alexander grading a moves to Maslov grading
    d - 2a + linking and Alexander grading -a in the i-th slot; since a is
    stored doubled, 2a is exactly the stored value.  Applying the operation
    again with the opposite linking number gives back the original group.
    """
    if not 1 <= component <= group.n:
        raise ValueError(
            "component index out of range: %d (group has %d components)"
            % (component, group.n)
        )
    i = component - 1
    out = {}
    for (d, s), rank in group.ranks.items():
        a = s[i]
        moved = (d - a + linking, s[:i] + (-a,) + s[i + 1:])
        out[moved] = out.get(moved, 0) + rank
    return MultiGradedGroup(group.n, out)


def s_top(group: CollapsedGroup) -> int:
    """Top collapsed Alexander grading with nonzero rank (doubled).

    This equals twice the Seifert big genus of the underlying link.
    """
    if not group.ranks:
        raise EmptyGroupError("empty group")
    return max(s for (_d, s) in group.ranks)


def rank_at(group: CollapsedGroup, s: int) -> int:
    """Total rank in the collapsed Alexander grading s (doubled)."""
    return sum(rank for (_d, s0), rank in group.ranks.items() if s0 == s)


def is_fibered(group: CollapsedGroup) -> bool:
    """True iff the rank in the top Alexander grading is 1."""
    return rank_at(group, s_top(group)) == 1


def is_nearly_fibered(group: CollapsedGroup) -> bool:
    """True iff the rank in the top Alexander grading is exactly 2."""
    return rank_at(group, s_top(group)) == 2


def total_rank(group) -> int:
    """Sum of all stored ranks of a collapsed or multi-graded group."""
    return sum(group.ranks.values())


def check_symmetry(group) -> bool:
    """Check invariance of the support under (d, s) -> (d - 2*sum(s), -s).

    Every group of an actual link satisfies this; it is the main sanity
    check for catalog data.  Works on both group flavors.
    """
    if isinstance(group, MultiGradedGroup):
        for (d, s), rank in group.ranks.items():
            partner = (d - sum(s), tuple(-a for a in s))
            if group.ranks.get(partner) != rank:
                return False
        return True
    for (d, s), rank in group.ranks.items():
        if group.ranks.get((d - s, -s)) != rank:
            return False
    return True
