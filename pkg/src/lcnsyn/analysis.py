"""Graph analyses: controllability and observability decisions.

Controllability reduces to strong connectivity of the state transition
graph, whose adjacency matrix has the closed form ``[L_1 1_M, ...,
L_N 1_M]`` (column x counts, per target state, the inputs driving x
there).

Observability uses the pair graph on unordered equal-output state pairs
``{x, x'}``: an input u induces an edge to ``{f(x,u), f(x',u)}`` when
that target is again a vertex. Pairs whose successors have unequal
outputs contribute no edge for that input. All diagonal pairs ``{x, x}``
are collapsed into a single sentinel vertex :data:`DIAG` carrying an
unconditional self-loop (the diagonal subgraph always contains cycles
and every diagonal vertex stays diagonal, so its internal structure is
irrelevant to the decision). The network is unobservable exactly when
some non-diagonal vertex has a path (possibly empty) to a vertex on a
cycle; DIAG counts as on a cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import Lcn
from .stp import DenseMatrix


class _Diag:
    """Sentinel vertex for the collapsed diagonal subgraph."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "DIAG"


DIAG = _Diag()

#: A vertex of an observability graph: a sorted state pair or DIAG.
Vertex = tuple | _Diag


def _vertex_key(v):
    return (1,) if v is DIAG else (0, v)


@dataclass(frozen=True)
class StateTransitionGraph:
    """State transition graph as an N x N count matrix.

    ``adjacency.entry(i, j)`` is the number of inputs driving state j to
    state i; positive means the edge j -> i exists. Column sums all
    equal the input count M.
    """

    n_vertices: int
    adjacency: DenseMatrix


@dataclass(frozen=True)
class ObservabilityGraph:
    vertices: tuple[tuple[int, int], ...]  # non-diagonal pairs (i, j), i < j
    edges: tuple[tuple[Vertex, Vertex, tuple[int, ...]], ...]
    n_inputs: int


@dataclass(frozen=True)
class ControllabilityResult:
    controllable: bool
    #: On failure, a (source, target) state pair with no path source -> target.
    witness: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.controllable


@dataclass(frozen=True)
class ObservabilityWitness:
    """A pair that cannot be told apart: it reaches a cycle."""

    pair: tuple[int, int]
    path: tuple[Vertex, ...]  # shortest path from ``pair`` to ``cycle_entry``
    cycle_entry: Vertex


@dataclass(frozen=True)
class ObservabilityResult:
    observable: bool
    witness: ObservabilityWitness | None

    def __bool__(self) -> bool:
        return self.observable


def transition_graph(lcn: Lcn) -> StateTransitionGraph:
    """Adjacency ``[L_1 1_M, ..., L_N 1_M]`` of the transition graph."""
    n, m = lcn.state_dim, lcn.input_dim
    counts = [0] * (n * n)
    for x in range(1, n + 1):
        for u in range(1, m + 1):
            t = lcn.step(x, u)
            counts[(t - 1) * n + (x - 1)] += 1
    return StateTransitionGraph(n, DenseMatrix(n, n, tuple(counts)))


def _successor_lists(adj: DenseMatrix) -> list[list[int]]:
    """0-based successor lists: succs[j] = targets of vertex j, ascending."""
    n = adj.rows
    succs: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if adj.entries[i * n + j] > 0:
                succs[j].append(i)
    return succs


def _strong_components(succs: list[list[int]]) -> list[list[int]]:
    """Strongly connected components of a 0-based digraph (iterative Tarjan)."""
    n = len(succs)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    next_index = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = next_index
                next_index += 1
                stack.append(v)
                on_stack[v] = True
            recursed = False
            for k in range(pi, len(succs[v])):
                w = succs[v][k]
                if index[w] == -1:
                    work.append((v, k + 1))
                    work.append((w, 0))
                    recursed = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recursed:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


def _reach_set(succs: list[list[int]], src: int) -> set[int]:
    seen = {src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in succs[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_controllable(lcn: Lcn) -> ControllabilityResult:
    """Controllable iff the transition graph is strongly connected.

    The failure witness is deterministic: among all (source, target)
    pairs with no path, the one with the greatest source and, for that
    source, the least target.
    """
    succs = _successor_lists(transition_graph(lcn).adjacency)
    if len(_strong_components(succs)) == 1:
        return ControllabilityResult(True, None)
    n = len(succs)
    for src in range(n - 1, -1, -1):
        reach = _reach_set(succs, src)
        if len(reach) == n:
            continue
        tgt = min(t for t in range(n) if t not in reach)
        return ControllabilityResult(False, (src + 1, tgt + 1))
    raise AssertionError("unreachable: >1 SCC implies a failing pair")


def observability_graph(lcn: Lcn) -> ObservabilityGraph:
    """Pair graph on equal-output state pairs, diagonal collapsed to DIAG."""
    n, m = lcn.state_dim, lcn.input_dim
    out = [lcn.output(x) for x in range(1, n + 1)]
    vertices = tuple(
        (i, j) for i in range(1, n) for j in range(i + 1, n + 1) if out[i - 1] == out[j - 1]
    )
    weights: dict[tuple, set[int]] = {}
    for i, j in vertices:
        for u in range(1, m + 1):
            a, b = lcn.step(i, u), lcn.step(j, u)
            if a == b:
                tgt: Vertex = DIAG
            else:
                if out[a - 1] != out[b - 1]:
                    continue  # successors distinguishable: no edge
                tgt = (a, b) if a < b else (b, a)
            weights.setdefault(((i, j), tgt), set()).add(u)
    weights[(DIAG, DIAG)] = set(range(1, m + 1))
    edges = tuple(
        (src, dst, tuple(sorted(ws)))
        for (src, dst), ws in sorted(
            weights.items(), key=lambda kv: (_vertex_key(kv[0][0]), _vertex_key(kv[0][1]))
        )
    )
    return ObservabilityGraph(vertices, edges, m)


def _pair_successors(graph: ObservabilityGraph) -> dict:
    succs: dict = {v: [] for v in graph.vertices}
    succs[DIAG] = []
    for src, dst, _w in graph.edges:
        succs[src].append(dst)
    for v in succs:
        succs[v].sort(key=_vertex_key)
    return succs


def _cyclic_vertices(graph: ObservabilityGraph) -> set:
    """Vertices on a cycle: DIAG, self-loops, and SCCs of size >= 2."""
    verts = [*graph.vertices, DIAG]
    pos = {v: k for k, v in enumerate(verts)}
    succs0: list[list[int]] = [[] for _ in verts]
    cyclic: set = {DIAG}
    for src, dst, _w in graph.edges:
        if src == dst:
            cyclic.add(src)
        succs0[pos[src]].append(pos[dst])
    for comp in _strong_components(succs0):
        if len(comp) >= 2:
            cyclic.update(verts[w] for w in comp)
    return cyclic


def is_observable(lcn: Lcn) -> ObservabilityResult:
    """Observable iff no equal-output pair can reach a cycle.

    The failure witness is the least such pair (pairs ordered
    lexicographically) together with its shortest path to a cyclic
    vertex; BFS ties are broken by vertex order, DIAG last.
    """
    graph = observability_graph(lcn)
    succs = _pair_successors(graph)
    cyclic = _cyclic_vertices(graph)
    # reverse reachability from the cyclic set over non-diagonal vertices
    preds: dict = {v: [] for v in succs}
    for src, dst, _w in graph.edges:
        preds[dst].append(src)
    bad = set(v for v in cyclic if v is not DIAG)
    queue = deque(cyclic)
    while queue:
        v = queue.popleft()
        for p in preds[v]:
            if p is not DIAG and p not in bad:
                bad.add(p)
                queue.append(p)
    bad_pairs = sorted(v for v in bad)
    if not bad_pairs:
        return ObservabilityResult(True, None)
    start = bad_pairs[0]
    # shortest path from the least bad pair to the cyclic set
    parent: dict = {start: None}
    queue = deque([start])
    entry = None
    while queue:
        v = queue.popleft()
        if v in cyclic:
            entry = v
            break
        for w in succs[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    assert entry is not None
    path = []
    v = entry
    while v is not None:
        path.append(v)
        v = parent[v]
    path.reverse()
    return ObservabilityResult(False, ObservabilityWitness(start, tuple(path), entry))


def _pair_name(v: Vertex, wide: bool) -> str:
    if v is DIAG:
        return "DIAG"
    i, j = v
    return f"{i}-{j}" if wide else f"{i}{j}"


def export_dot(graph: StateTransitionGraph | ObservabilityGraph) -> str:
    """Deterministic Graphviz DOT text for either graph kind.

    Observability graphs sort pair vertices lexicographically with DIAG
    last and label edges with the comma-joined input indices of their
    weight; transition graphs label edges with their input multiplicity.
    """
    lines: list[str] = []
    if isinstance(graph, StateTransitionGraph):
        n = graph.n_vertices
        lines.append("digraph transitions {")
        for v in range(1, n + 1):
            lines.append(f'  "{v}";')
        adj = graph.adjacency
        for src in range(1, n + 1):
            for tgt in range(1, n + 1):
                c = adj.entry(tgt, src)
                if c > 0:
                    lines.append(f'  "{src}" -> "{tgt}" [label="{c}"];')
    else:
        wide = any(j > 9 for _i, j in graph.vertices)
        lines.append("digraph observability {")
        for v in sorted(graph.vertices):
            lines.append(f'  "{_pair_name(v, wide)}";')
        lines.append('  "DIAG";')
        for src, dst, ws in graph.edges:
            label = ",".join(str(u) for u in ws)
            lines.append(
                f'  "{_pair_name(src, wide)}" -> "{_pair_name(dst, wide)}" [label="{label}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
