"""Explicit canonical diagrams of rational tangles and their closures.

A diagram is a set of nodes joined by edges.  Every crossing owns four nodes,
listed counterclockwise starting on the under-strand, so the A-smoothing joins
ports 0-1 and 2-3.  Crossingless arcs use plain nodes of degree two.

The tangle of a sequence is grown in ``if_eval`` order: start from the
0-tangle, add ``a_1`` horizontal twists, then for each further entry reflect
in the NW-SE diagonal (``T -> 1/T``) and add that many twists.  The diagram is
independent of the skein recursion in :mod:`ratknot.polyinv` and serves as its
brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .kernels import state_histogram
from .laurent import LaurentPoly

__all__ = ["TangleDiagram", "ClosedDiagram", "tangle_diagram", "bracket_state_sum", "writhe", "components"]

# A positive twist [1]: under-strand SW -> NE, over-strand SE -> NW.
_PLUS_PORTS = ("SW", "SE", "NE", "NW")
_MINUS_PORTS = ("SE", "NE", "NW", "SW")


@dataclass
class TangleDiagram:
    n_nodes: int = 0
    crossings: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    boundary: dict = field(default_factory=dict)

    def _new_nodes(self, k: int) -> list[int]:
        start = self.n_nodes
        self.n_nodes += k
        return list(range(start, start + k))

    @classmethod
    def zero(cls) -> "TangleDiagram":
        t = cls()
        nw, ne, sw, se = t._new_nodes(4)
        t.edges += [(nw, ne), (sw, se)]
        t.boundary = {"NW": nw, "NE": ne, "SW": sw, "SE": se}
        return t

    def add_twist(self, sign: int) -> None:
        """Tangle sum with ``[sign]`` on the right."""
        nodes = self._new_nodes(4)
        ports = _PLUS_PORTS if sign > 0 else _MINUS_PORTS
        corner = dict(zip(ports, nodes))
        self.crossings.append(tuple(nodes))
        self.edges += [(self.boundary["NE"], corner["NW"]), (self.boundary["SE"], corner["SW"])]
        self.boundary["NE"] = corner["NE"]
        self.boundary["SE"] = corner["SE"]

    def invert(self) -> None:
        """``T -> 1/T``: reflect in the NW-SE diagonal."""
        b = self.boundary
        b["NE"], b["SW"] = b["SW"], b["NE"]
        self.crossings = [(a, d, c, bb) for a, bb, c, d in self.crossings]

    def numerator(self) -> "ClosedDiagram":
        b = self.boundary
        return ClosedDiagram(self.n_nodes, list(self.crossings), self.edges + [(b["NW"], b["NE"]), (b["SW"], b["SE"])])

    def denominator(self) -> "ClosedDiagram":
        b = self.boundary
        return ClosedDiagram(self.n_nodes, list(self.crossings), self.edges + [(b["NW"], b["SW"]), (b["NE"], b["SE"])])


@dataclass
class ClosedDiagram:
    n_nodes: int
    crossings: list
    edges: list

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def arc_labels(self) -> tuple[int, list[int]]:
        """Connected pieces of the diagram with all crossings removed."""
        parent = list(range(self.n_nodes))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        ids: dict[int, int] = {}
        labels = []
        for x in range(self.n_nodes):
            r = find(x)
            labels.append(ids.setdefault(r, len(ids)))
        return len(ids), labels


def tangle_diagram(a: Sequence[int]) -> TangleDiagram:
    t = TangleDiagram.zero()
    for i, m in enumerate(a):
        if i:
            t.invert()
        sign = 1 if m > 0 else -1
        for _ in range(abs(m)):
            t.add_twist(sign)
    return t


def bracket_state_sum(d: ClosedDiagram) -> LaurentPoly:
    """Kauffman bracket in ``A`` by summing over all ``2**c`` states.

    ``<D> = sum_S A^(#A - #B) delta^(loops - 1)`` with ``delta = -A^2 - A^-2``.
    """
    n_arcs, labels = d.arc_labels()
    corners = [labels[x] for cr in d.crossings for x in cr]
    hist = state_histogram(n_arcs, corners)
    nc = d.crossing_count
    delta = LaurentPoly({2: -1, -2: -1})
    powers = [LaurentPoly.const(1)]
    for _ in range(n_arcs):
        powers.append(powers[-1] * delta)
    total = LaurentPoly()
    for n_a, row in enumerate(hist):
        for loops, count in enumerate(row):
            if count:
                total = total + (powers[loops - 1] * count).shift(2 * n_a - nc)
    return total


def _walk(d: ClosedDiagram):
    """Traverse every component once; yield per component the list of (crossing, port) entries."""
    adj: list[list[int]] = [[] for _ in range(d.n_nodes)]
    for u, v in d.edges:
        adj[u].append(v)
        adj[v].append(u)
    port_of: dict[int, tuple[int, int]] = {}
    for k, cr in enumerate(d.crossings):
        for i, x in enumerate(cr):
            port_of[x] = (k, i)
    seen_edges: set = set()
    for start in range(d.n_nodes):
        if not adj[start]:
            continue
        key = (min(start, adj[start][0]), max(start, adj[start][0]))
        if key in seen_edges:
            continue
        entries = []
        prev, cur = start, adj[start][0]
        seen_edges.add(key)
        while True:
            if cur in port_of:
                k, i = port_of[cur]
                entries.append((k, i))
                nxt_port = d.crossings[k][(i + 2) % 4]
                prev, cur = nxt_port, adj[nxt_port][0]
            else:
                a, b = adj[cur]
                nxt = b if a == prev else a
                prev, cur = cur, nxt
            key = (min(prev, cur), max(prev, cur))
            if key in seen_edges:
                break
            seen_edges.add(key)
        yield entries


def components(d: ClosedDiagram) -> int:
    return sum(1 for _ in _walk(d))


def writhe(d: ClosedDiagram) -> int:
    """Writhe under the orientation found by walking each component once."""
    enter: dict[int, dict[str, int]] = {}
    for entries in _walk(d):
        for k, i in entries:
            enter.setdefault(k, {})["under" if i % 2 == 0 else "over"] = i
    w = 0
    for k in range(len(d.crossings)):
        u, o = enter[k]["under"], enter[k]["over"]
        w += 1 if o == (u - 1) % 4 else -1
    return w
