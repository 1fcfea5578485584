"""Exhaustive arrowing search with monochromatic-copy propagation.

Decides host -> (red, blue), computes Ramsey numbers and deletion-critical
numbers, and exports the search space as DIMACS CNF.

The engine enumerates every copy of each target inside the host, turns the
copies into clauses ("some edge of a red copy must be blue" and vice
versa), and runs a depth-first search over edge assignments with
counter-based unit propagation.  Exhausting the space proves arrowing; a
surviving complete assignment is a verified counterexample coloring.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from . import formulas
from .coloring import BLUE, RED, Coloring, monochromatic_subgraph
from .containment import (
    BookT,
    Clique,
    FanT,
    MatchingT,
    PathT,
    StarT,
    TargetKind,
    _embeddings,
    contains_target,
    target_label,
    target_to_spec,
)
from .graphs import Complete, Graph, Matching, Minus, Path, realize

DEFAULT_COPY_CAP = 2_000_000


class CopyCapError(RuntimeError):
    """Copy enumeration exceeded the configured cap."""


class IndeterminateError(RuntimeError):
    """Search budget exhausted before reaching a verdict."""


class NotFoundWithinBoundError(RuntimeError):
    """No arrowing complete graph exists within the requested bound."""


@dataclass
class SearchStats:
    nodes: int = 0
    runtime_ms: float = 0.0
    propagation_mode: str = "clauses"
    budget_exhausted: bool = False


@dataclass
class ArrowingResult:
    verdict: str  # "arrows" | "counterexample" | "indeterminate"
    counterexample: Coloring | None
    stats: SearchStats

    @property
    def arrows(self) -> bool:
        return self.verdict == "arrows"


class DeletionFamily(Enum):
    """Indexed family of subgraphs deleted from K_r.

    Path and Clique are indexed by vertex count (so PATH matches the
    path-critical definition); MATCHING is indexed by edge count.
    """

    PATH = "path"
    MATCHING = "matching"
    CLIQUE = "clique"

    def deletion_spec(self, index: int):
        if self is DeletionFamily.PATH:
            return Path(index)
        if self is DeletionFamily.MATCHING:
            return Matching(index)
        return Complete(index)

    def first_index(self) -> int:
        # index 1 deletes no edge for PATH/CLIQUE, so the scan starts at 2
        return 1 if self is DeletionFamily.MATCHING else 2

    def max_index(self, r: int) -> int:
        return r // 2 if self is DeletionFamily.MATCHING else r

    @property
    def index_unit(self) -> str:
        return "edges" if self is DeletionFamily.MATCHING else "vertices"


# ---------------------------------------------------------------------------
# Copy enumeration


def _star_copies(host: Graph, n: int, emit) -> None:
    ei = host.edge_index
    for center in range(host.order):
        nbrs = [u for u in range(host.order) if host.adj[center] >> u & 1]
        if len(nbrs) < n:
            continue
        for leaves in combinations(nbrs, n):
            emit(tuple(sorted(ei[(center, u) if center < u else (u, center)] for u in leaves)))


def _clique_copies(host: Graph, m: int, emit) -> None:
    ei = host.edge_index
    adj = host.adj

    def grow(chosen: list[int], cand: int) -> None:
        if len(chosen) == m:
            emit(tuple(sorted(ei[(u, v)] for u, v in combinations(chosen, 2))))
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            grow(chosen + [v], adj[v] & cand)

    grow([], (1 << host.order) - 1)


def _path_copies(host: Graph, n: int, emit) -> None:
    ei = host.edge_index
    adj = host.adj
    path: list[int] = []

    def extend(v: int, visited: int) -> None:
        path.append(v)
        if len(path) == n:
            if path[0] < path[-1]:
                emit(
                    tuple(
                        sorted(
                            ei[(a, b) if a < b else (b, a)]
                            for a, b in zip(path, path[1:])
                        )
                    )
                )
        else:
            ext = adj[v] & ~visited
            while ext:
                low = ext & -ext
                ext ^= low
                extend(low.bit_length() - 1, visited | low)
        path.pop()

    for start in range(host.order):
        extend(start, 1 << start)


def _matching_copies(host: Graph, m: int, emit) -> None:
    edges = host.edges

    def pick(start: int, used: int, chosen: list[int]) -> None:
        if len(chosen) == m:
            emit(tuple(chosen))
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            bits = 1 << u | 1 << v
            if used & bits:
                continue
            pick(idx + 1, used | bits, chosen + [idx])

    pick(0, 0, [])


def _book_copies(host: Graph, m: int, emit) -> None:
    ei = host.edge_index
    adj = host.adj
    for (u, v) in host.edges:
        common = adj[u] & adj[v]
        pages = [w for w in range(host.order) if common >> w & 1]
        if len(pages) < m:
            continue
        spine = ei[(u, v)]
        for chosen in combinations(pages, m):
            ids = [spine]
            for w in chosen:
                ids.append(ei[(u, w) if u < w else (w, u)])
                ids.append(ei[(v, w) if v < w else (w, v)])
            emit(tuple(sorted(ids)))


def _fan_copies(host: Graph, n: int, emit) -> None:
    ei = host.edge_index
    adj = host.adj
    for hub in range(host.order):
        row = adj[hub]
        if row.bit_count() < 2 * n:
            continue
        hood_edges = [
            (a, b)
            for a, b in host.edges
            if row >> a & 1 and row >> b & 1
        ]

        def pick(start: int, used: int, chosen: list[tuple[int, int]]) -> None:
            if len(chosen) == n:
                ids = []
                for a, b in chosen:
                    ids.append(ei[(a, b)])
                    ids.append(ei[(hub, a) if hub < a else (a, hub)])
                    ids.append(ei[(hub, b) if hub < b else (b, hub)])
                emit(tuple(sorted(ids)))
                return
            for idx in range(start, len(hood_edges)):
                a, b = hood_edges[idx]
                bits = 1 << a | 1 << b
                if used & bits:
                    continue
                pick(idx + 1, used | bits, chosen + [(a, b)])

        pick(0, 0, [])


def enumerate_copies(host: Graph, target: TargetKind, cap: int = DEFAULT_COPY_CAP):
    """All distinct edge-index sets of host subgraphs isomorphic to the target.

    Deterministic: the result is sorted.  Raises CopyCapError past the cap.
    """
    pattern = realize(target_to_spec(target))
    if pattern.order > host.order:
        return []
    if pattern.edge_count == 0:
        # an edgeless target sits inside every coloring of a large-enough host
        return [()]
    seen: set[tuple[int, ...]] = set()

    def emit(ids: tuple[int, ...]) -> None:
        seen.add(ids)
        if len(seen) > cap:
            raise CopyCapError(f"more than {cap} target copies in the host")

    if isinstance(target, Clique):
        _clique_copies(host, target.m, emit)
    elif isinstance(target, StarT):
        _star_copies(host, target.n, emit)
    elif isinstance(target, PathT):
        _path_copies(host, target.n, emit)
    elif isinstance(target, MatchingT):
        _matching_copies(host, target.m, emit)
    elif isinstance(target, BookT):
        _book_copies(host, target.m, emit)
    elif isinstance(target, FanT):
        _fan_copies(host, target.n, emit)
    else:
        ei = host.edge_index
        pedges = pattern.edges
        for emb in _embeddings(host, pattern):
            ids = []
            for a, b in pedges:
                u, v = emb[a], emb[b]
                ids.append(ei[(u, v) if u < v else (v, u)])
            emit(tuple(sorted(ids)))
    return sorted(seen)


# ---------------------------------------------------------------------------
# Clause-propagation search


class _Budget(Exception):
    pass


def _branch_order(host: Graph, deterministic: bool) -> list[int]:
    m = host.edge_count
    if deterministic:
        return list(range(m))
    degs = [host.degree(v) for v in range(host.order)]
    return sorted(range(m), key=lambda i: (-(degs[host.edges[i][0]] + degs[host.edges[i][1]]), i))


def _clause_search(host, red_copies, blue_copies, *, order, symmetric, budget, on_solution):
    """DFS with counter-based unit propagation over copy clauses.

    on_solution(assignment) -> bool; True stops the search.  Returns
    (exhausted: bool, nodes: int); exhausted=False means a solution stopped
    the search early.  Raises _Budget(nodes) when the node budget runs out.
    """
    m = host.edge_count
    cl_edges: list[tuple[int, ...]] = []
    cl_forbid: list[int] = []
    for ids in red_copies:
        cl_edges.append(ids)
        cl_forbid.append(RED)
    for ids in blue_copies:
        cl_edges.append(ids)
        cl_forbid.append(BLUE)
    ncl = len(cl_edges)
    cl_len = [len(ids) for ids in cl_edges]
    occ: list[list[list[int]]] = [[[] for _ in range(m)], [[] for _ in range(m)]]
    for ci in range(ncl):
        for e in cl_edges[ci]:
            occ[cl_forbid[ci]][e].append(ci)
    occ_red = [tuple(lst) for lst in occ[RED]]
    occ_blue = [tuple(lst) for lst in occ[BLUE]]

    cnt = [0] * ncl
    sat = [0] * ncl
    assign = [-1] * m
    trail: list[int] = []
    nodes = 0

    def propagate(e0: int, c0: int) -> bool:
        queue = [(e0, c0)]
        qi = 0
        while qi < len(queue):
            e, c = queue[qi]
            qi += 1
            a = assign[e]
            if a != -1:
                if a != c:
                    return False
                continue
            assign[e] = c
            trail.append(e)
            if c == RED:
                bump, ease = occ_red[e], occ_blue[e]
            else:
                bump, ease = occ_blue[e], occ_red[e]
            for ci in ease:
                sat[ci] += 1
            # finish every counter update before reporting a conflict so
            # that undo_to can reverse assignments uniformly
            conflict = False
            units = None
            for ci in bump:
                k = cnt[ci] + 1
                cnt[ci] = k
                length = cl_len[ci]
                if k == length:
                    conflict = True
                elif k == length - 1 and sat[ci] == 0:
                    if units is None:
                        units = [ci]
                    else:
                        units.append(ci)
            if conflict:
                return False
            if units:
                for ci in units:
                    if sat[ci]:
                        continue
                    for f in cl_edges[ci]:
                        if assign[f] == -1:
                            queue.append((f, 1 - cl_forbid[ci]))
                            break
        return True

    def undo_to(mark: int) -> None:
        while len(trail) > mark:
            e = trail.pop()
            c = assign[e]
            assign[e] = -1
            if c == RED:
                bump, ease = occ_red[e], occ_blue[e]
            else:
                bump, ease = occ_blue[e], occ_red[e]
            for ci in ease:
                sat[ci] -= 1
            for ci in bump:
                cnt[ci] -= 1

    # clauses that are violated or unit before any decision
    for ci in range(ncl):
        if cl_len[ci] == 0:
            return True, 0
    for ci in range(ncl):
        if cl_len[ci] == 1 and sat[ci] == 0:
            e = cl_edges[ci][0]
            if not propagate(e, 1 - cl_forbid[ci]):
                return True, 0

    if symmetric:
        first = next((e for e in order if assign[e] == -1), None)
        if first is not None and not propagate(first, RED):
            return True, 0

    def descend(start: int) -> bool:
        nonlocal nodes
        oi = start
        while oi < m and assign[order[oi]] != -1:
            oi += 1
        if oi == m:
            return on_solution(list(assign))
        e = order[oi]
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget(nodes)
        for c in (RED, BLUE):
            mark = len(trail)
            if propagate(e, c):
                if descend(oi + 1):
                    return True
            undo_to(mark)
        return False

    stopped = descend(0)
    return (not stopped), nodes


def _prune_only_search(host, red, blue, *, order, symmetric, budget, on_solution):
    """Fallback DFS pruned by direct containment checks; no propagation."""
    m = host.edge_count
    n = host.order
    edges = host.edges
    assign = [-1] * m
    red_rows = [0] * n
    blue_rows = [0] * n
    nodes = 0

    def paint(e: int, c: int, on: bool) -> None:
        u, v = edges[e]
        rows = red_rows if c == RED else blue_rows
        if on:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)

    def blocked(c: int) -> bool:
        if c == RED:
            return contains_target(Graph._raw(n, tuple(red_rows)), red)
        return contains_target(Graph._raw(n, tuple(blue_rows)), blue)

    def descend(oi: int) -> bool:
        nonlocal nodes
        while oi < m and assign[order[oi]] != -1:
            oi += 1
        if oi == m:
            return on_solution(list(assign))
        e = order[oi]
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget(nodes)
        colors = (RED,) if (symmetric and oi == 0) else (RED, BLUE)
        for c in colors:
            assign[e] = c
            paint(e, c, True)
            if not blocked(c):
                if descend(oi + 1):
                    return True
            paint(e, c, False)
            assign[e] = -1
        return False

    stopped = descend(0)
    return (not stopped), nodes


def _search_free_colorings(
    host: Graph,
    red: TargetKind,
    blue: TargetKind,
    *,
    budget: int | None = None,
    deterministic: bool = False,
    copy_cap: int = DEFAULT_COPY_CAP,
    allow_symmetry: bool = True,
    collect_all: bool = False,
):
    """Shared driver: find one (or every) complete free coloring of the host.

    Returns (solutions, stats); solutions are raw assignment lists.
    """
    t0 = time.perf_counter()
    stats = SearchStats()
    order = _branch_order(host, deterministic)
    symmetric = allow_symmetry and not collect_all and red == blue
    solutions: list[list[int]] = []

    def keep_first(a):
        solutions.append(a)
        return True

    def keep_all(a):
        solutions.append(a)
        return False

    on_solution = keep_all if collect_all else keep_first
    try:
        red_copies = enumerate_copies(host, red, copy_cap)
        blue_copies = enumerate_copies(host, blue, copy_cap)
    except CopyCapError:
        stats.propagation_mode = "prune-only"
        red_copies = blue_copies = None
    try:
        if red_copies is None:
            exhausted, nodes = _prune_only_search(
                host, red, blue, order=order, symmetric=symmetric,
                budget=budget, on_solution=on_solution,
            )
        else:
            exhausted, nodes = _clause_search(
                host, red_copies, blue_copies, order=order, symmetric=symmetric,
                budget=budget, on_solution=on_solution,
            )
        stats.nodes = nodes
    except _Budget as exc:
        stats.nodes = exc.args[0]
        stats.budget_exhausted = True
    stats.runtime_ms = (time.perf_counter() - t0) * 1000.0
    return solutions, stats


def _verify_counterexample(host: Graph, assignment, red: TargetKind, blue: TargetKind) -> Coloring:
    col = Coloring(host, assignment)
    if not col.is_complete:
        raise RuntimeError("search returned an incomplete counterexample")
    if contains_target(monochromatic_subgraph(col, RED), red):
        raise RuntimeError("counterexample re-check failed: red side contains the red target")
    if contains_target(monochromatic_subgraph(col, BLUE), blue):
        raise RuntimeError("counterexample re-check failed: blue side contains the blue target")
    return col


def arrows(
    host: Graph,
    red: TargetKind,
    blue: TargetKind,
    *,
    budget: int | None = None,
    deterministic: bool = False,
    copy_cap: int = DEFAULT_COPY_CAP,
) -> ArrowingResult:
    """Decide host -> (red, blue).

    Arrows means every complete red/blue coloring of the host edges has a
    red copy of the red target or a blue copy of the blue target.  A
    counterexample is a complete free coloring, re-verified by containment
    before it is returned.  In deterministic mode the counterexample is the
    lexicographically least free assignment in canonical edge order (red
    below blue).
    """
    solutions, stats = _search_free_colorings(
        host, red, blue,
        budget=budget, deterministic=deterministic, copy_cap=copy_cap,
    )
    if stats.budget_exhausted:
        return ArrowingResult("indeterminate", None, stats)
    if solutions:
        col = _verify_counterexample(host, solutions[0], red, blue)
        return ArrowingResult("counterexample", col, stats)
    return ArrowingResult("arrows", None, stats)


# ---------------------------------------------------------------------------
# Ramsey and critical numbers


def ramsey_number(
    red: TargetKind,
    blue: TargetKind,
    max_r: int = 64,
    *,
    budget: int | None = None,
    deterministic: bool = False,
    copy_cap: int = DEFAULT_COPY_CAP,
) -> int:
    """Smallest r <= max_r with K_r -> (red, blue), by ascending search.

    The scan starts from the Burr lower bound when its hypotheses apply.
    If the pair is cataloged, a disagreement between search and catalog is
    a hard error.
    """
    if max_r > 64:
        raise ValueError("max_r is capped at 64")
    red_spec = target_to_spec(red)
    blue_spec = target_to_spec(blue)
    start = 2
    try:
        start = max(start, formulas.burr_bound(red_spec, blue_spec))
    except (formulas.HypothesisError, ValueError):
        pass
    found = None
    for r in range(start, max_r + 1):
        result = arrows(
            realize(Complete(r)), red, blue,
            budget=budget, deterministic=deterministic, copy_cap=copy_cap,
        )
        if result.verdict == "indeterminate":
            raise IndeterminateError(f"budget exhausted deciding K_{r}")
        if result.arrows:
            found = r
            break
    if found is None:
        raise NotFoundWithinBoundError(
            f"no complete graph up to K_{max_r} arrows ({target_label(red)}, {target_label(blue)})"
        )
    cataloged = formulas.known_ramsey(red_spec, blue_spec)
    if cataloged is not None and cataloged.value != found:
        raise RuntimeError(
            f"search found R={found} but catalog entry {cataloged.source} "
            f"gives {cataloged.value}"
        )
    return found


def critical_number(
    red: TargetKind,
    blue: TargetKind,
    family: DeletionFamily,
    r: int | None = None,
    *,
    budget: int | None = None,
    deterministic: bool = False,
    copy_cap: int = DEFAULT_COPY_CAP,
) -> int:
    """Largest family index whose deletion from K_r preserves arrowing.

    Returns 0 when even the smallest one-edge deletion (P_2 / M_1 / K_2)
    breaks arrowing.  Deleting family member i+1 removes a superset of the
    edges of member i under the canonical placement, so the upward scan
    stops at the first failure.
    """
    if r is None:
        r = ramsey_number(
            red, blue, budget=budget, deterministic=deterministic, copy_cap=copy_cap
        )
    last = 0
    index = family.first_index()
    while index <= family.max_index(r):
        host = realize(Minus(Complete(r), family.deletion_spec(index)))
        result = arrows(
            host, red, blue, budget=budget, deterministic=deterministic, copy_cap=copy_cap
        )
        if result.verdict == "indeterminate":
            raise IndeterminateError(
                f"budget exhausted deciding K_{r} minus {family.value} index {index}"
            )
        if not result.arrows:
            break
        last = index
        index += 1
    return last


def result_to_json(host_label: str, red: TargetKind, blue: TargetKind, result: ArrowingResult) -> dict:
    """Wire form of a search outcome (counterexample key only when present)."""
    payload = {
        "host": host_label,
        "red": target_label(red),
        "blue": target_label(blue),
        "verdict": result.verdict,
        "stats": {
            "nodes": result.stats.nodes,
            "runtime_ms": round(result.stats.runtime_ms, 1),
            "propagation_mode": result.stats.propagation_mode,
        },
    }
    if result.counterexample is not None:
        payload["counterexample"] = result.counterexample.edge_triples()
    return payload


# ---------------------------------------------------------------------------
# DIMACS export


def export_dimacs(
    host: Graph,
    red: TargetKind,
    blue: TargetKind,
    copy_cap: int = DEFAULT_COPY_CAP,
) -> str:
    """CNF whose satisfying assignments are exactly the free colorings.

    One variable per host edge in canonical order (positive literal = red);
    each red-target copy contributes an all-negative clause, each
    blue-target copy an all-positive clause.  The formula is satisfiable
    iff the host does NOT arrow.
    """
    red_copies = enumerate_copies(host, red, copy_cap)
    blue_copies = enumerate_copies(host, blue, copy_cap)
    lines = [
        "c arrowing CNF: satisfiable iff the host admits a free coloring",
        f"c host: {host.order} vertices, {host.edge_count} edges",
        f"c red target {target_label(red)}: {len(red_copies)} copies, clauses all-negative",
        f"c blue target {target_label(blue)}: {len(blue_copies)} copies, clauses all-positive",
        "c positive literal = red edge",
    ]
    for (u, v), idx in host.edge_index.items():
        lines.append(f"c edge {u} {v} var {idx + 1}")
    lines.append(f"p cnf {host.edge_count} {len(red_copies) + len(blue_copies)}")
    for ids in red_copies:
        lines.append(" ".join(str(-(e + 1)) for e in ids) + " 0")
    for ids in blue_copies:
        lines.append(" ".join(str(e + 1) for e in ids) + " 0")
    return "\n".join(lines) + "\n"
