"""Quivers as combinatorial objects.

Adjacency matrices, Frobenius-Perron dimension, cycle numbers, classification
of underlying graphs against the (extended) Dynkin shapes, and positive roots
of the ADE root systems.

Convention: adjacency entry (i, j) counts arrows i -> j.  The radius is
transpose invariant so this choice is observationally irrelevant, but it is
fixed here for file-format stability.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .exactlin import RatMatrix
from .spectral import SpectralValue, rho_nonnegative_via_scc

CYCLE_ENUM_MAX_VERTICES = 12
CYCLE_ENUM_MAX_ARROWS = 24


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


class Quiver:
    """A finite directed multigraph with labeled arrows (loops allowed)."""

    __slots__ = ("vertices", "arrows", "_vindex")

    def __init__(self, vertices: Sequence[str], arrows: Sequence):
        vs = tuple(str(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise QuiverError("duplicate vertex names")
        ars = []
        for a in arrows:
            if isinstance(a, Arrow):
                ars.append(a)
            else:
                label, s, t = a
                ars.append(Arrow(str(label), str(s), str(t)))
        labels = [a.label for a in ars]
        if len(set(labels)) != len(labels):
            raise QuiverError("duplicate arrow labels")
        vset = set(vs)
        for a in ars:
            if a.source not in vset or a.target not in vset:
                raise QuiverError(f"arrow {a.label}: {a.source}->{a.target} "
                                  "has undeclared endpoint")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arrows", tuple(ars))
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(vs)})

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Quiver is immutable")

    def vertex_index(self, v: str) -> int:
        return self._vindex[str(v)]

    def arrows_from(self, v: str):
        return [a for a in self.arrows if a.source == str(v)]

    def arrows_into(self, v: str):
        return [a for a in self.arrows if a.target == str(v)]

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise QuiverError(f"no arrow labeled {label!r}")

    def reversed(self) -> "Quiver":
        return Quiver(self.vertices,
                      [(a.label, a.target, a.source) for a in self.arrows])

    def __repr__(self):
        return (f"Quiver({len(self.vertices)} vertices, "
                f"{len(self.arrows)} arrows)")


def adjacency(q: Quiver) -> RatMatrix:
    """Arrow-count matrix: entry (i, j) = number of arrows i -> j."""
    n = len(q.vertices)
    counts = [[0] * n for _ in range(n)]
    for a in q.arrows:
        counts[q.vertex_index(a.source)][q.vertex_index(a.target)] += 1
    return RatMatrix(counts, cols=n)


def underlying_adjacency(q: Quiver) -> RatMatrix:
    """Symmetric edge-count matrix of the underlying undirected graph.

    Loops are rejected: the classification target (simple graphs) has none.
    """
    n = len(q.vertices)
    counts = [[0] * n for _ in range(n)]
    for a in q.arrows:
        i, j = q.vertex_index(a.source), q.vertex_index(a.target)
        if i == j:
            raise QuiverError("underlying simple graph is undefined with loops")
        counts[i][j] += 1
        counts[j][i] += 1
    return RatMatrix(counts, cols=n)


def quiver_fpdim(q: Quiver) -> SpectralValue:
    """Perron root of the adjacency matrix of q."""
    return rho_nonnegative_via_scc(adjacency(q))


# ---------------------------------------------------------------------------
# cycle numbers
# ---------------------------------------------------------------------------

def simple_cycles(q: Quiver) -> List[Tuple[Arrow, ...]]:
    """All vertex-simple oriented cycles, as arrow tuples.

    Parallel arrows give distinct cycles.  Each cycle is reported once, based
    at its smallest vertex index.  Enumeration is capped at small quivers.
    """
    n = len(q.vertices)
    if n > CYCLE_ENUM_MAX_VERTICES or len(q.arrows) > CYCLE_ENUM_MAX_ARROWS:
        raise QuiverError(
            f"cycle enumeration capped at {CYCLE_ENUM_MAX_VERTICES} vertices / "
            f"{CYCLE_ENUM_MAX_ARROWS} arrows")
    out_arrows: List[List[Arrow]] = [[] for _ in range(n)]
    for a in q.arrows:
        out_arrows[q.vertex_index(a.source)].append(a)

    cycles: List[Tuple[Arrow, ...]] = []

    def dfs(base: int, v: int, visited: set, path: List[Arrow]):
        for a in out_arrows[v]:
            w = q.vertex_index(a.target)
            if w == base:
                cycles.append(tuple(path + [a]))
            elif w > base and w not in visited:
                visited.add(w)
                dfs(base, w, visited, path + [a])
                visited.remove(w)

    for base in range(n):
        dfs(base, base, {base}, [])
    return cycles


def is_acyclic(q: Quiver) -> bool:
    """True when q has no oriented cycle (no cap; Kahn's algorithm)."""
    n = len(q.vertices)
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a in q.arrows:
        s, t = q.vertex_index(a.source), q.vertex_index(a.target)
        indeg[t] += 1
        out[s].append(t)
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


@dataclass(frozen=True)
class CycleNumber:
    """Per-vertex and global cycle counts, saturated at 2 (meaning >= 2)."""

    per_vertex: Dict[str, int]
    theta: int

    def describe(self) -> str:
        return {0: "0", 1: "1", 2: ">=2"}[self.theta]


def cycle_number(q: Quiver) -> CycleNumber:
    """Count first-return oriented cycles per vertex, saturated at >= 2.

    A closed walk based at v that visits v only at its endpoints contains a
    vertex-simple cycle through v, and conversely extra first-return walks
    exist exactly when either two simple cycles pass through v, or the unique
    one passes through a vertex lying on some cycle that avoids v (side
    cycles can then be traversed arbitrarily often).  So the saturated count
    is decidable from the simple-cycle list alone.
    """
    cycles = simple_cycles(q)
    vertex_sets = []
    for c in cycles:
        vs = {a.source for a in c}
        vertex_sets.append(vs)
    per: Dict[str, int] = {}
    for v in q.vertices:
        through = [vs for vs in vertex_sets if v in vs]
        if not through:
            per[v] = 0
        elif len(through) >= 2:
            per[v] = 2
        else:
            cyc = through[0]
            avoid = [vs for vs in vertex_sets if v not in vs]
            if any(vs & cyc for vs in avoid):
                per[v] = 2
            else:
                per[v] = 1
    theta = max(per.values()) if per else 0
    return CycleNumber(per, theta)


@dataclass(frozen=True)
class TrichotomyReport:
    fpdim: SpectralValue
    theta: int
    consistent: bool
    detail: str


def fpdim_trichotomy_check(q: Quiver, tol: float = 1e-9) -> TrichotomyReport:
    """Check the three biconditionals relating fpdim(Q) and the cycle number:
    theta 0 <-> radius 0, theta 1 <-> radius 1, theta >= 2 <-> radius > 1."""
    r = quiver_fpdim(q)
    theta = cycle_number(q).theta
    if theta == 0:
        ok = r.value <= tol
        detail = "acyclic: radius must be 0"
    elif theta == 1:
        ok = abs(r.value - 1.0) <= tol
        detail = "single cycle structure: radius must be 1"
    else:
        ok = r.value > 1.0 + tol
        detail = "multiple cycle structure: radius must exceed 1"
    return TrichotomyReport(r, theta, ok, detail)


# ---------------------------------------------------------------------------
# (extended) Dynkin classification and positive roots
# ---------------------------------------------------------------------------

def _is_connected(q: Quiver) -> bool:
    n = len(q.vertices)
    if n == 0:
        return False
    U = underlying_adjacency(q)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(n):
            if U.data[v][w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _leg_lengths(U: RatMatrix, center: int, n: int) -> Optional[List[int]]:
    """Lengths of the simple paths hanging off a single branch vertex."""
    legs = []
    for w in range(n):
        if w != center and U.data[center][w]:
            length = 1
            prev, cur = center, w
            while True:
                nbrs = [x for x in range(n) if U.data[cur][x] and x != prev]
                if not nbrs:
                    break
                if len(nbrs) > 1:
                    return None
                prev, cur = cur, nbrs[0]
                length += 1
            legs.append(length)
    return sorted(legs)


def classify_underlying_graph(q: Quiver):
    """Match the underlying undirected graph against the ADE and extended
    ADE shapes.

    Returns ('A'|'D'|'E', rank), ('~A'|'~D'|'~E', rank), or None.  Input must
    be connected and loop-free; parallel edges are only meaningful for the
    two-vertex double edge, which is the rank-1 extended A shape.
    """
    if not _is_connected(q):
        raise QuiverError("classification needs a connected graph")
    n = len(q.vertices)
    U = underlying_adjacency(q)
    edge_count = sum(int(U.data[i][j]) for i in range(n) for j in range(i + 1, n))
    deg = [int(sum(U.data[i][j] for j in range(n))) for i in range(n)]
    multi = any(U.data[i][j] > 1 for i in range(n) for j in range(i + 1, n))

    if multi:
        if n == 2 and edge_count == 2:
            return ("~A", 1)
        return None
    if edge_count == n and all(d == 2 for d in deg):
        return ("~A", n - 1)
    if edge_count != n - 1:
        return None  # not a tree
    branch = [i for i in range(n) if deg[i] >= 3]
    if not branch:
        return ("A", n)
    if len(branch) == 1:
        c = branch[0]
        if deg[c] == 4:
            legs = _leg_lengths(U, c, n)
            if legs == [1, 1, 1, 1]:
                return ("~D", 4)
            return None
        if deg[c] != 3:
            return None
        legs = _leg_lengths(U, c, n)
        if legs is None:
            return None
        a, b, cc = legs
        if (a, b) == (1, 1):
            return ("D", cc + 3)
        if (a, b, cc) == (1, 2, 2):
            return ("E", 6)
        if (a, b, cc) == (1, 2, 3):
            return ("E", 7)
        if (a, b, cc) == (1, 2, 4):
            return ("E", 8)
        if (a, b, cc) == (2, 2, 2):
            return ("~E", 6)
        if (a, b, cc) == (1, 3, 3):
            return ("~E", 7)
        if (a, b, cc) == (1, 2, 5):
            return ("~E", 8)
        return None
    if len(branch) == 2:
        # a tree with exactly two degree-3 vertices, four leaves and all
        # remaining degrees 2 is forced to be the extended D shape
        if any(deg[i] != 3 for i in branch):
            return None
        leaves = sum(1 for d in deg if d == 1)
        if leaves == 4 and all(d in (1, 2, 3) for d in deg):
            return ("~D", n - 1)
        return None
    return None


# builders ------------------------------------------------------------------

def path_quiver(n: int) -> Quiver:
    """Linearly oriented A_n: arrows i -> i+1."""
    vs = [str(i) for i in range(1, n + 1)]
    ars = [(f"a{i}", str(i), str(i + 1)) for i in range(1, n)]
    return Quiver(vs, ars)


def cycle_quiver(n: int) -> Quiver:
    """A single oriented n-cycle."""
    vs = [str(i) for i in range(1, n + 1)]
    ars = [(f"a{i}", str(i), str(i % n + 1)) for i in range(1, n + 1)]
    return Quiver(vs, ars)


def kronecker_quiver(arrow_count: int = 2) -> Quiver:
    """Two vertices with arrow_count parallel arrows 1 -> 2."""
    labels = "bcdefgh"
    return Quiver(["1", "2"],
                  [(labels[i], "1", "2") for i in range(arrow_count)])


def dynkin_quiver(family: str, rank: int) -> Quiver:
    """A quiver (one fixed orientation) whose underlying graph is the Dynkin
    diagram of the given family and rank."""
    family = family.upper()
    if family == "A":
        return path_quiver(rank)
    if family == "D":
        if rank < 4:
            raise QuiverError("type D needs rank >= 4")
        vs = [str(i) for i in range(1, rank + 1)]
        ars = [("f1", "1", "3"), ("f2", "2", "3")]
        ars += [(f"a{i}", str(i), str(i + 1)) for i in range(3, rank)]
        return Quiver(vs, ars)
    if family == "E":
        if rank not in (6, 7, 8):
            raise QuiverError("type E needs rank 6, 7 or 8")
        vs = [str(i) for i in range(1, rank)] + ["q"]
        ars = [(f"a{i}", str(i), str(i + 1)) for i in range(1, rank - 1)]
        ars.append(("b", "q", "3"))
        return Quiver(vs, ars)
    raise QuiverError(f"unknown Dynkin family {family!r}")


def extended_dynkin_quiver(family: str, rank: int) -> Quiver:
    """One orientation of the extended (affine) diagram of the family."""
    family = family.upper().lstrip("~")
    if family == "A":
        if rank == 1:
            return kronecker_quiver(2)
        if rank < 1:
            raise QuiverError("extended type A needs rank >= 1")
        return cycle_quiver(rank + 1)
    if family == "D":
        if rank < 4:
            raise QuiverError("extended type D needs rank >= 4")
        vs = [str(i) for i in range(1, rank)] + ["u", "w"]
        ars = [("f1", "1", "3"), ("f2", "2", "3")]
        ars += [(f"a{i}", str(i), str(i + 1)) for i in range(3, rank - 1)]
        ars += [("g1", "u", str(rank - 1)), ("g2", "w", str(rank - 1))]
        return Quiver(vs, ars)
    if family == "E":
        base = dynkin_quiver("E", rank)
        attach = {6: "q", 7: "1", 8: str(rank - 1)}[rank]
        vs = list(base.vertices) + ["x"]
        ars = [(a.label, a.source, a.target) for a in base.arrows]
        ars.append(("ext", "x", attach))
        return Quiver(vs, ars)
    raise QuiverError(f"unknown extended Dynkin family {family!r}")


# positive roots ------------------------------------------------------------

def positive_roots(q: Quiver) -> List[Tuple[int, ...]]:
    """Positive roots of the ADE root system of the underlying graph.

    Simple roots are closed under the simple reflections
    s_i(x) = x - (sum_j C_ij x_j) e_i with C = 2I - A the Cartan matrix;
    the positive vectors of the resulting root set are returned sorted.
    """
    cls = classify_underlying_graph(q)
    if cls is None or cls[0] not in ("A", "D", "E"):
        raise QuiverError("positive roots need an ADE graph")
    n = len(q.vertices)
    U = underlying_adjacency(q)
    cartan = [[(2 if i == j else -int(U.data[i][j])) for j in range(n)]
              for i in range(n)]
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for x in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * x[j] for j in range(n))
                y = tuple(x[j] - (pairing if j == i else 0) for j in range(n))
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    pos = sorted(v for v in seen if all(c >= 0 for c in v) and any(v))
    return pos


# JSON / DOT ----------------------------------------------------------------

def quiver_to_json(q: Quiver) -> str:
    return json.dumps({
        "vertices": list(q.vertices),
        "arrows": [{"label": a.label, "from": a.source, "to": a.target}
                   for a in q.arrows],
    }, indent=2, sort_keys=True)


def quiver_from_json(text: str) -> Quiver:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise QuiverError(f"invalid JSON: {e}") from e
    try:
        vertices = raw["vertices"]
        arrows = [(a["label"], a["from"], a["to"]) for a in raw.get("arrows", [])]
    except (KeyError, TypeError) as e:
        raise QuiverError(f"malformed quiver file: missing {e}") from e
    return Quiver(vertices, arrows)


def quiver_to_dot(q: Quiver) -> str:
    lines = ["digraph quiver {"]
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for a in q.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
