"""graph6 interchange format plus a plain edge-list text format.

Only the short form of graph6 is supported (n <= 62, single header byte
63+n). The upper triangle of the adjacency matrix is read column by
column -- bit (i, j) with i < j sits at position j(j-1)/2 + i -- and packed
six bits per printable byte, most significant bit first, zero padded.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import Graph6Error, UnsupportedSizeError
from .graph import Graph

log = logging.getLogger(__name__)

GRAPH6_MAX_N = 62


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    text = text.strip()
    if not text:
        raise Graph6Error("empty graph6 line")
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII byte in graph6 line", offset=exc.start) from exc
    if data[0:1] == b">":
        # optional ">>graph6<<" header prefix
        if data.startswith(b">>graph6<<"):
            data = data[10:]
        else:
            raise Graph6Error("unrecognized header", offset=0)
    if not data:
        raise Graph6Error("empty graph6 payload")
    first = data[0]
    if first == 126:
        raise UnsupportedSizeError(
            "long-form graph6 (n > 62) is not supported"
        )
    if not 63 <= first <= 125:
        raise Graph6Error(f"header byte {first} outside 63..125", offset=0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated: need {nbytes} body bytes for n={n}, got {len(body)}",
            offset=len(data),
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 body", offset=1 + nbytes)
    bitstream = 0
    for k, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"body byte {byte} outside 63..126", offset=1 + k)
        bitstream = (bitstream << 6) | (byte - 63)
    pad = nbytes * 6 - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", offset=len(data) - 1)
    bitstream >>= pad
    rows = [0] * n
    # bits come most-significant-first, so bit index (from the top) follows
    # the (i, j) column-major pair order directly
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream & (1 << pos):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph.from_rows(rows)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical graph6 line (no padding variants)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(
            f"graph6 supports at most {GRAPH6_MAX_N} vertices, got {n}"
        )
    nbits = n * (n - 1) // 2
    bitstream = 0
    for j in range(1, n):
        for i in range(j):
            bitstream = (bitstream << 1) | (1 if g.has_edge(i, j) else 0)
    nbytes = (nbits + 5) // 6
    bitstream <<= nbytes * 6 - nbits
    out = [63 + n]
    for k in range(nbytes - 1, -1, -1):
        out.append(63 + ((bitstream >> (6 * k)) & 63))
    return bytes(out).decode("ascii")


def read_graph6_stream(
    source: Union[str, Path, Iterable[str]],
    *,
    skip_errors: bool = False,
) -> Iterator[Graph]:
    """Lazily parse graph6 lines from a path or an iterable of lines.

    Parse failures raise Graph6Error tagged with the line number, or are
    logged and skipped when skip_errors is set. Blank lines are ignored.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="ascii") as fh:
            yield from read_graph6_stream(fh, skip_errors=skip_errors)
        return
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except (Graph6Error, UnsupportedSizeError) as exc:
            if not skip_errors:
                raise Graph6Error(str(exc), line=lineno) from exc
            log.warning("skipping malformed graph6 line %d: %s", lineno, exc)


def parse_edge_list(text: str) -> Graph:
    """Parse the 'n m' header then m whitespace-separated 'u v' pairs."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge list needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    pairs = tokens[2:]
    if len(pairs) != 2 * m:
        raise ValueError(f"expected {2 * m} endpoint tokens, got {len(pairs)}")
    edges = [(int(pairs[2 * k]), int(pairs[2 * k + 1])) for k in range(m)]
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
