"""graph6, edge-list, and DOT serialization.

graph6 packs the upper triangle of the adjacency matrix column by column into
printable characters (values 63..126, six bits each, zero padded). Parsers
report the byte offset and, for multi-line input, the 1-based line number of
the first problem.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph, VertexCapError, from_edges, members


class FormatError(ValueError):
    """Malformed serialized graph; carries position info when available."""

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


def write_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        head = chr(n + 63)
    else:  # cap is 64, so the 18-bit order form always suffices
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        val <<= 6 - len(bits[k:k + 6])  # zero padding in the final group
        body.append(chr(val + 63))
    return head + "".join(body)


def _char_value(text: str, pos: int, line: int | None) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise FormatError(f"character {text[pos]!r} outside the graph6 range", line=line, offset=pos)
    return c - 63


def parse_graph6(text: str, *, _line: int | None = None) -> Graph:
    """Parse a single graph6 token (surrounding whitespace ignored)."""
    token = text.strip()
    if not token:
        raise FormatError("empty graph6 token", line=_line)
    if token.startswith("~~"):
        raise VertexCapError(f"order beyond {MAX_VERTICES} (long-form graph6 header)")
    if token.startswith("~"):
        if len(token) < 4:
            raise FormatError("truncated graph6 order header", line=_line, offset=len(token))
        n = 0
        for pos in range(1, 4):
            n = n << 6 | _char_value(token, pos, _line)
        body_start = 4
    else:
        n = _char_value(token, 0, _line)
        body_start = 1
    if n > MAX_VERTICES:
        raise VertexCapError(f"order {n} exceeds the cap of {MAX_VERTICES}")
    edge_bits = n * (n - 1) // 2
    expected = body_start + (edge_bits + 5) // 6
    if len(token) != expected:
        raise FormatError(
            f"body length {len(token) - body_start} does not match order {n} "
            f"(expected {expected - body_start} characters)",
            line=_line,
            offset=min(len(token), expected),
        )
    values = [_char_value(token, pos, _line) for pos in range(body_start, len(token))]
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            bit = values[k // 6] >> (5 - k % 6) & 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if values and values[-1] & (1 << (-edge_bits % 6)) - 1:
        raise FormatError("nonzero padding bits", line=_line, offset=len(token) - 1)
    return Graph(tuple(adj))


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse one graph6 token per nonblank line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            out.append(parse_graph6(raw, _line=lineno))
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: one ``u v`` pair per line, 0-indexed vertices,
    with an optional leading ``n <order>`` line. Without the header the order
    is one more than the largest index seen."""
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen_rows = False
    max_index = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if not seen_rows and declared is None and tokens[0] == "n":
            if len(tokens) != 2:
                raise FormatError("order header must be exactly 'n <count>'", line=lineno)
            try:
                declared = int(tokens[1])
            except ValueError:
                raise FormatError(f"order {tokens[1]!r} is not an integer", line=lineno) from None
            if declared < 0:
                raise FormatError(f"negative order {declared}", line=lineno)
            continue
        if len(tokens) != 2:
            raise FormatError(f"expected 'u v', got {len(tokens)} tokens", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"non-integer endpoint in {raw.strip()!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise FormatError(f"negative vertex in edge ({u}, {v})", line=lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", line=lineno)
        if declared is not None and (u >= declared or v >= declared):
            raise FormatError(f"edge ({u}, {v}) out of range for declared order {declared}", line=lineno)
        seen_rows = True
        max_index = max(max_index, u, v)
        edges.append((u, v))
    if declared is None:
        if not seen_rows:
            raise FormatError("empty edge list and no 'n <order>' header")
        declared = max_index + 1
    if declared > MAX_VERTICES:
        raise VertexCapError(f"order {declared} exceeds the cap of {MAX_VERTICES}")
    return from_edges(declared, edges)


def write_dot(g: Graph, highlight: int = 0) -> str:
    """DOT text for Graphviz; vertices in ``highlight`` are drawn filled."""
    if highlight & ~g.full_mask:
        raise ValueError("highlight mask mentions vertices outside the graph")
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(g.order):
        if highlight >> v & 1:
            lines.append(f"  {v} [style=filled];")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
