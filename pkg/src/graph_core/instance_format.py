"""
Plain-text instance format.

    # optional comments anywhere
    n k m
    u v label        (m lines, 1-based, whitespace separated)

Parsing rejects any violation with the offending line number.
"""

from typing import List, Tuple

from exceptions import GraphValidationError, ParseError
from graph_core.labeled_graph import LabeledGraph, build_graph


def _strip_comment(line: str) -> str:
    return line.split('#', 1)[0].strip()


def _parse_ints(fields: List[str], expected: int, line_number: int, what: str) -> List[int]:
    if len(fields) != expected:
        raise ParseError(f"expected {expected} integers ({what}), found {len(fields)} fields", line_number)
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise ParseError(f"non-integer field in {what}: {' '.join(fields)!r}", line_number)


def parse_instance_text(text: str) -> LabeledGraph:
    """
    Parse instance text into a validated graph.

    Raises:
        ParseError: On malformed lines, wrong edge counts, or graph validation
            failures (reported at the line of the offending edge)
    """
    header = None
    edges: List[Tuple[int, int, int]] = []
    edge_lines: List[int] = []

    for line_number, raw in enumerate(text.split('\n'), start=1):
        content = _strip_comment(raw.rstrip('\r'))
        if not content:
            continue
        fields = content.split()
        if header is None:
            header = _parse_ints(fields, 3, line_number, 'header "n k m"')
            continue
        u, v, label = _parse_ints(fields, 3, line_number, 'edge "u v label"')
        if len(edges) == header[2]:
            raise ParseError(f"more than m={header[2]} edge lines", line_number)
        edges.append((u, v, label))
        edge_lines.append(line_number)

    if header is None:
        raise ParseError("missing header line 'n k m'", 1)
    n, k, m = header
    if len(edges) != m:
        raise ParseError(f"header declares m={m} edges, found {len(edges)}", None)

    try:
        return build_graph(n, k, edges)
    except GraphValidationError as e:
        line_number = edge_lines[e.edge_index] if e.edge_index is not None else None
        raise ParseError(str(e), line_number) from e


def format_instance_text(g: LabeledGraph) -> str:
    """Canonical text: header then edges sorted by (u, v) with u < v, LF endings."""
    lines = [f"{g.node_count} {g.label_count} {g.edge_count}"]
    lines.extend(f"{u} {v} {label}" for u, v, label in g.canonical_edges())
    return '\n'.join(lines) + '\n'
