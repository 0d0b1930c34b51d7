"""Instance families and file formats.

Generators cover the families used in benchmarks (grids, random trees)
plus small fixtures. Two text formats are read:

* edge list: first non-comment line ``n m``, then one ``u v`` pair per
  line, 1-based, ``#`` comments;
* MatrixMarket coordinate files, whose off-diagonal nonzero pattern
  becomes the edge set.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field

from .errors import InvalidParameter, InvalidVertex, ParseError, UnsupportedFormat
from .graph import Graph
from .heuristics import RandomSource


def gen_grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise InvalidParameter(f"grid dimensions must be >= 1, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gen_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def gen_star(k: int) -> Graph:
    """Star with centre 1 and leaves ``2..k+1``."""
    if k < 1:
        raise InvalidParameter(f"star needs k >= 1 leaves, got {k}")
    return Graph(k + 1, [(1, v) for v in range(2, k + 2)])


def prufer_to_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def gen_random_tree(n: int, rng: RandomSource) -> Graph:
    """Uniform labelled tree on ``n`` vertices from a random Prüfer sequence."""
    if n < 1:
        raise InvalidParameter(f"tree needs n >= 1, got {n}")
    if n == 1:
        return Graph(1, [])
    seq = [rng.below(n) + 1 for _ in range(n - 2)]
    return Graph(n, prufer_to_edges(seq, n))


def _content_lines(text: str, comment: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith(comment):
            yield lineno, line


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers for {what}, got {' '.join(tokens)!r}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` + ``u v`` edge-list format.

    ``m`` in the header is informational: duplicate edges are collapsed, so
    the graph can end up with fewer edges than listed.
    """
    lines = _content_lines(text, "#")
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing 'n m' header") from None
    tokens = header.split()
    if len(tokens) != 2:
        raise ParseError(lineno, f"header must be 'n m', got {header!r}")
    n, _m = _ints(tokens, lineno, "header")
    if n < 1:
        raise ParseError(lineno, f"vertex count must be >= 1, got {n}")
    edges = []
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"edge line must be 'u v', got {line!r}")
        u, v = _ints(tokens, lineno, "edge")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidVertex(f"line {lineno}: edge ({u}, {v}) outside 1..{n}")
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    edges = g.edges()
    out.append(f"{g.n} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


_MM_FIELDS = {"real": 1, "integer": 1, "pattern": 0, "complex": 2}
_MM_SYMMETRY = {"symmetric", "general"}


def parse_matrix_market(text: str) -> Graph:
    """Undirected graph of a square MatrixMarket coordinate matrix.

    Diagonal entries and values are dropped; ``(i, j)`` and ``(j, i)``
    become one edge.
    """
    raw_lines = text.splitlines()
    if not raw_lines:
        raise UnsupportedFormat("empty file")
    header = raw_lines[0].split()
    if len(header) != 5 or header[0].lower() != "%%matrixmarket":
        raise UnsupportedFormat(f"bad MatrixMarket banner: {raw_lines[0]!r}")
    obj, fmt, fld, sym = (h.lower() for h in header[1:])
    if obj != "matrix" or fmt != "coordinate" or fld not in _MM_FIELDS or sym not in _MM_SYMMETRY:
        raise UnsupportedFormat(f"unsupported MatrixMarket type: {' '.join(header[1:])}")
    n_values = _MM_FIELDS[fld]

    lines = _content_lines("\n".join(raw_lines[1:]), "%")
    try:
        lineno, size = next(lines)
    except StopIteration:
        raise ParseError(2, "missing size line") from None
    lineno += 1
    tokens = size.split()
    if len(tokens) != 3:
        raise ParseError(lineno, f"size line must be 'rows cols nnz', got {size!r}")
    rows, cols, nnz = _ints(tokens, lineno, "size line")
    if rows != cols:
        raise UnsupportedFormat(f"matrix is {rows}x{cols}; only square matrices define a graph")
    if rows < 1:
        raise ParseError(lineno, f"matrix dimension must be >= 1, got {rows}")
    edges = []
    seen = 0
    for lineno, line in lines:
        lineno += 1
        tokens = line.split()
        if len(tokens) != 2 + n_values:
            raise ParseError(lineno, f"expected {2 + n_values} fields, got {line!r}")
        i, j = _ints(tokens[:2], lineno, "entry indices")
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise InvalidVertex(f"line {lineno}: entry ({i}, {j}) outside {rows}x{cols}")
        seen += 1
        if i != j:
            edges.append((i, j))
    if seen != nnz:
        raise ParseError(lineno, f"size line promises {nnz} entries, found {seen}")
    return Graph(rows, edges)


def read_graph(path: str) -> Graph:
    """Load an edge-list or MatrixMarket file (sniffed from the banner)."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().lower().startswith("%%matrixmarket"):
        return parse_matrix_market(text)
    return parse_edge_list(text)


FAMILIES = {
    "grid": 2,
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "tree": (1, 2),
    "file": 1,
}


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    params: tuple = ()
    path: str | None = None
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        want = FAMILIES[self.family]
        if self.family == "file":
            if not self.path:
                raise InvalidParameter("file instance needs a path")
            return
        counts = want if isinstance(want, tuple) else (want,)
        if len(self.params) not in counts:
            raise InvalidParameter(f"{self.family} takes {' or '.join(map(str, counts))} integer parameter(s), got {len(self.params)}")
        floor = 3 if self.family == "cycle" else 1
        sized = self.params[:1] if self.family == "tree" else self.params
        if any(p < floor for p in sized) or (self.family == "tree" and len(self.params) > 1 and self.params[1] < 0):
            raise InvalidParameter(f"invalid {self.family} parameters {self.params}")

    @property
    def instance_id(self) -> str:
        if self.label:
            return self.label
        if self.family == "file":
            return os.path.splitext(os.path.basename(self.path))[0]
        if self.family == "grid":
            return f"grid-{self.params[0]}x{self.params[1]}"
        if self.family == "tree":
            seed = self.params[1] if len(self.params) > 1 else 0
            return f"tree-{self.params[0]}-s{seed}"
        return f"{self.family}-{self.params[0]}"

    def build(self) -> Graph:
        f, p = self.family, self.params
        if f == "grid":
            return gen_grid(*p)
        if f == "path":
            return gen_path(*p)
        if f == "cycle":
            return gen_cycle(*p)
        if f == "complete":
            return gen_complete(*p)
        if f == "star":
            return gen_star(*p)
        if f == "tree":
            seed = p[1] if len(p) > 1 else 0
            return gen_random_tree(p[0], RandomSource(seed))
        return read_graph(self.path)


def parse_instance_spec(tokens) -> InstanceSpec:
    """Build a spec from ``family p1 p2 ...`` tokens.

    A single string is split on whitespace and ``:``; a leading token that
    is not a family name is taken as a file path.
    """
    if isinstance(tokens, str):
        tokens = tokens.replace(":", " ").split()
    tokens = list(tokens)
    if not tokens:
        raise InvalidParameter("empty instance spec")
    family, rest = tokens[0], tokens[1:]
    if family == "file":
        if len(rest) != 1:
            raise InvalidParameter("usage: file <path>")
        return InstanceSpec("file", path=rest[0])
    if family not in FAMILIES:
        if not rest and (os.sep in family or "." in family):
            return InstanceSpec("file", path=family)
        raise InvalidParameter(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "grid" and len(rest) == 1 and "x" in rest[0]:
        rest = rest[0].split("x")
    try:
        params = tuple(int(t) for t in rest)
    except ValueError:
        raise InvalidParameter(f"{family} parameters must be integers, got {rest}") from None
    return InstanceSpec(family, params)


def parse_manifest(text: str, base_dir: str = ".") -> list[tuple[str, InstanceSpec]]:
    """Read ``<class> <family-or-file> <params>`` lines into (class, spec) pairs.

    Relative file paths resolve against ``base_dir``.
    """
    out = []
    for lineno, line in _content_lines(text, "#"):
        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError(lineno, f"manifest line must be '<class> <family-or-file> [params]', got {line!r}")
        try:
            spec = parse_instance_spec(tokens[1:])
        except InvalidParameter as exc:
            raise ParseError(lineno, str(exc)) from None
        if spec.family == "file" and not os.path.isabs(spec.path):
            spec = InstanceSpec("file", path=os.path.join(base_dir, spec.path))
        out.append((tokens[0], spec))
    return out
