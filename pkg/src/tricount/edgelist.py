"""Plain text edge lists.

Format: one edge per line, two whitespace separated decimal vertex ids.
Lines whose first non-blank character is '#' are comments, blank lines are
skipped.  Vertex ids are non-negative integers and need not be contiguous.
"""

from .graph import canonical_edge, GraphError


class EdgeListParseError(ValueError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)
        self.lineno = lineno


def parse_edge_line(line, lineno=None):
    """Parse one line; returns a canonical (u, v) pair or None for
    comments and blanks."""
    s = line.strip()
    if not s or s.startswith("#"):
        return None
    parts = s.split()
    if len(parts) != 2:
        raise EdgeListParseError(
            "expected two vertex ids, got %d tokens" % len(parts), lineno)
    try:
        u = int(parts[0])
        v = int(parts[1])
    except ValueError:
        raise EdgeListParseError("vertex ids must be decimal integers: %r" % s, lineno)
    try:
        return canonical_edge(u, v)
    except GraphError as exc:
        raise EdgeListParseError(str(exc), lineno)


def iter_edge_file(path):
    """Yield (edge, lineno) pairs from an edge list file, skipping
    comments and blanks."""
    with open(path, "r") as f:
        for lineno, line in enumerate(f, start=1):
            e = parse_edge_line(line, lineno)
            if e is not None:
                yield e, lineno


def read_edge_list(path):
    """Read a whole file into a list of canonical edges, rejecting duplicates."""
    edges = []
    seen = set()
    for e, lineno in iter_edge_file(path):
        if e in seen:
            raise EdgeListParseError("duplicate edge (%d, %d)" % e, lineno)
        seen.add(e)
        edges.append(e)
    return edges


def write_edge_list(path, edges, comment=None):
    """Write edges one per line; `edges` may be any iterable of pairs."""
    n = 0
    with open(path, "w") as f:
        if comment:
            for line in comment.splitlines():
                f.write("# %s\n" % line)
        for u, v in edges:
            f.write("%d %d\n" % (u, v))
            n += 1
    return n
