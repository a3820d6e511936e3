"""Exception types raised across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for malformed or unsupported graph input."""


class MalformedLine(GraphError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: cannot parse {line!r} as an edge 'u v'")
        self.lineno = lineno
        self.line = line


class SelfLoop(GraphError):
    def __init__(self, vertex, lineno: int | None = None):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}self-loop at vertex {vertex}")
        self.vertex = vertex
        self.lineno = lineno


class DuplicateEdge(GraphError):
    def __init__(self, u, v, lineno: int | None = None):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}duplicate edge {u}-{v}")
        self.edge = (u, v)
        self.lineno = lineno


class Disconnected(GraphError):
    def __init__(self, components: int):
        super().__init__(f"graph is disconnected ({components} components)")
        self.components = components


class NotACactus(GraphError):
    """Some biconnected block is not a single cycle."""

    def __init__(self, block):
        self.block = tuple(sorted(block))
        super().__init__("not a cactus: block {" + ",".join(map(str, self.block)) + "}")


class NotBiactiveBranchResolving(ValueError):
    pass


class InfeasibleParams(ValueError):
    pass


class TooLarge(ValueError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"graph has {n} vertices, exhaustive search limit is {limit}")
        self.n = n
        self.limit = limit


class InternalInconsistency(RuntimeError):
    """The structural construction produced a set that fails verification."""
