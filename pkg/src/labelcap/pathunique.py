"""Path-unique digraphs and the minimal number of labels s(l, q) for l in {1, 2}.

A digraph is path-unique when between any ordered pair of vertices there is
at most one walk of each length. Length-2 labels over q symbols correspond
to the complement of a digraph on q vertices: the labels are exactly the
non-edges. The label set reaches the full capacity log2(q) iff that digraph
is path-unique.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InvalidLabelError, UnsupportedScopeError
from .words import DNA, Alphabet, Label, LabelSet


@dataclass(frozen=True)
class DiGraph:
    """Simple digraph on vertices ``0..n-1``; loops allowed, multi-edges not."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        edge_list = [(int(u), int(v)) for u, v in edges]
        for u, v in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        edge_set = frozenset(edge_list)
        if len(edge_set) != len(edge_list):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_set)

    @classmethod
    def complete(cls, n: int) -> DiGraph:
        return cls(n, [(u, v) for u in range(n) for v in range(n)])

    @classmethod
    def from_text(cls, text: str) -> DiGraph:
        """Parse ``n`` on the first line, then one ``u v`` edge per line (``#`` starts a comment)."""
        rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
        rows = [r for r in rows if r]
        if not rows or len(rows[0]) != 1:
            raise ValueError("first line must hold the vertex count")
        n = int(rows[0][0])
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise ValueError(f"bad edge line: {' '.join(r)}")
            edges.append((int(r[0]), int(r[1])))
        return cls(n, edges)

    def to_text(self) -> str:
        return "\n".join([str(self.n)] + [f"{u} {v}" for u, v in sorted(self.edges)]) + "\n"

    def to_dot(self, name: str = "G", alphabet: Alphabet | None = None) -> str:
        def vname(v: int) -> str:
            if alphabet is not None and alphabet.symbols is not None:
                return alphabet.symbols[v]
            return str(v)

        lines = [f"digraph {name} {{"]
        lines += [f'  v{v} [label="{vname(v)}"];' for v in range(self.n)]
        lines += [f"  v{u} -> v{v};" for u, v in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
        return a

    def successors(self, u: int) -> list[int]:
        return sorted(v for (w, v) in self.edges if w == u)

    def with_edge(self, u: int, v: int) -> DiGraph:
        return DiGraph(self.n, self.edges | {(u, v)})

    def absent_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(self.n) if (u, v) not in self.edges]

    def __len__(self) -> int:
        return len(self.edges)


def is_path_unique(g: DiGraph) -> bool:
    """Decide path-uniqueness with a breadth-first search in the pair graph.

    Two different equal-length walks u -> v share a (possibly empty) common
    prefix ending at some w, then leave w along distinct edges w -> x and
    w -> y, then run in lockstep until they first meet again. So uniqueness
    fails exactly when some split pair (x, y), x != y, with a common
    predecessor reaches a diagonal pair (z, z) in the product graph.
    """
    succ = [g.successors(u) for u in range(g.n)]
    start = {(x, y) for w in range(g.n) for x in succ[w] for y in succ[w] if x != y}
    seen = set(start)
    queue = deque(start)
    while queue:
        x, y = queue.popleft()
        for a in succ[x]:
            for b in succ[y]:
                if a == b:
                    return False
                if (a, b) not in seen:
                    seen.add((a, b))
                    queue.append((a, b))
    return True


def walk_length_bound(n: int) -> int:
    """Longest walk length that needs checking by the matrix-power test.

    A shortest witness is one split edge followed by a shortest path from
    the split pair to the first diagonal pair; that path only visits the
    n^2 - n off-diagonal pairs, so its length is at most n^2 - n and the
    whole walk is at most n^2. The brute-force oracle uses n^2 + n, which
    is a looser bound and is therefore also sufficient.
    """
    return n * n + n


def is_path_unique_bruteforce(g: DiGraph, max_length: int | None = None) -> bool:
    """Test oracle: every entry of A^k is at most 1 for all k up to the walk bound.

    Entries are saturated at 2 so the products cannot overflow.
    """
    a = g.adjacency()
    kmax = walk_length_bound(g.n) if max_length is None else max_length
    power = np.eye(g.n, dtype=np.int64)
    for _ in range(kmax):
        power = np.minimum(power @ a, 2)
        if power.max(initial=0) > 1:
            return False
    return True


def h_max(n: int) -> int:
    """Maximum edge count of a path-unique digraph on n vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (n + 1) ** 2 // 4 if n % 2 else n * (n + 2) // 4


def extremal_path_unique_graph(n: int) -> DiGraph:
    """Loops on X = {0..a-1} and every edge X -> Y, where Y is the rest.

    ``a = (n+1)/2`` for odd n (the tie with (n-1)/2 is broken upward) and
    ``a = n/2`` for even n, which maximizes the edge count ``a(n - a + 1)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = (n + 1) // 2
    edges = [(x, x) for x in range(a)] + [(x, y) for x in range(a) for y in range(a, n)]
    return DiGraph(n, edges)


def minimal_label_count(ell: int, q: int) -> int:
    """s(l, q): fewest length-l labels whose capacity is log2(q)."""
    if q < 1:
        raise ValueError("q must be >= 1")
    if ell == 1:
        return q - 1
    if ell == 2:
        return q * q - h_max(q)
    raise UnsupportedScopeError("s(l, q) is only known for l in {1, 2}")


def complement_label_set(g: DiGraph, alphabet: Alphabet | None = None) -> LabelSet:
    """All length-2 labels ``xy`` with ``(x, y)`` not an edge of ``g``."""
    alphabet = alphabet if alphabet is not None else (DNA if g.n == 4 else Alphabet(g.n))
    if alphabet.size != g.n:
        raise ValueError(f"graph has {g.n} vertices but the alphabet has {alphabet.size} symbols")
    pairs = g.absent_edges()
    if not pairs:
        raise InvalidLabelError("the complete graph has no complement: a label set must be nonempty")
    return LabelSet(tuple(Label((u, v), alphabet) for u, v in pairs))


def graph_of_label_set(ls: LabelSet) -> DiGraph:
    """Inverse of :func:`complement_label_set` for sets of length-2 labels."""
    words = ls.words()
    if any(len(w) != 2 for w in words):
        raise ValueError("only sets of length-2 labels correspond to graphs")
    q = ls.alphabet.size
    used = set(words)
    return DiGraph(q, [(u, v) for u in range(q) for v in range(q) if (u, v) not in used])


def minimal_label_set(q: int, alphabet: Alphabet | None = None) -> LabelSet:
    """A set of s(2, q) length-2 labels reaching capacity log2(q), from the extremal graph."""
    if q < 2:
        raise ValueError("need q >= 2 (for q = 1 no label is needed)")
    return complement_label_set(extremal_path_unique_graph(q), alphabet)
