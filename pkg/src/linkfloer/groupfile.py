"""Plain-text serialization of graded groups.

Format, one group per file:

    # comments and blank lines are ignored
    collapsed 2        <- header: "collapsed <n>" or "components <n>"
    0 1 2              <- collapsed body line:    <d> <s> <rank>
    -1 0 4

    components 2
    0 2 2 1            <- multi-graded body line: <d> <s_1> ... <s_n> <rank>

Gradings are written as integers or halves like "3/2"; ranks are positive.
Parsing and serialization are exact inverses of each other on valid groups.
"""

from .graded import CollapsedGroup, MultiGradedGroup, half_str, parse_half


class GroupFileError(ValueError):
    """Malformed group file; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


def _int_field(token, line, what):
    try:
        return int(token)
    except ValueError:
        raise GroupFileError("%s must be an integer, got %r" % (what, token), line) from None


def parse(text: str):
    """Parse a group file into a CollapsedGroup or MultiGradedGroup."""
    kind = None
    n = None
    ranks = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if kind is None:
            if len(tokens) != 2 or tokens[0] not in ("collapsed", "components"):
                raise GroupFileError(
                    "expected header 'collapsed <n>' or 'components <n>'", line_number
                )
            kind = tokens[0]
            n = _int_field(tokens[1], line_number, "component count")
            if n < 1:
                raise GroupFileError("component count must be positive", line_number)
            continue
        expected = 3 if kind == "collapsed" else n + 2
        if len(tokens) != expected:
            raise GroupFileError(
                "expected %d fields, got %d" % (expected, len(tokens)), line_number
            )
        d = _int_field(tokens[0], line_number, "Maslov grading")
        rank = _int_field(tokens[-1], line_number, "rank")
        if rank < 1:
            raise GroupFileError("rank must be positive, got %d" % rank, line_number)
        try:
            gradings = [parse_half(token) for token in tokens[1:-1]]
        except ValueError as err:
            raise GroupFileError(str(err), line_number) from None
        key = (d, gradings[0]) if kind == "collapsed" else (d, tuple(gradings))
        ranks[key] = ranks.get(key, 0) + rank
    if kind is None:
        raise GroupFileError("missing header 'collapsed <n>' or 'components <n>'", 1)
    if kind == "collapsed":
        return CollapsedGroup(n, ranks)
    return MultiGradedGroup(n, ranks)


def serialize(group) -> str:
    """Write a group in the file format, top Alexander grading first."""
    if isinstance(group, MultiGradedGroup):
        lines = ["components %d" % group.n]
        for (d, s), rank in sorted(
            group.ranks.items(), key=lambda item: (item[0][1], item[0][0]), reverse=True
        ):
            lines.append("%d %s %d" % (d, " ".join(half_str(a) for a in s), rank))
    else:
        lines = ["collapsed %d" % group.n]
        for (d, s), rank in sorted(
            group.ranks.items(), key=lambda item: (item[0][1], item[0][0]), reverse=True
        ):
            lines.append("%d %s %d" % (d, half_str(s), rank))
    return "\n".join(lines) + "\n"
