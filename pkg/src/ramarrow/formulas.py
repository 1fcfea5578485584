"""Chromatic quantities, the Burr lower bound, and cataloged exact values.

Catalog entries carry their validity ranges; querying outside a range
returns None rather than extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .containment import max_clique_size
from .graphs import (
    Book,
    Complete,
    Empty,
    Fan,
    Graph,
    GraphSpec,
    Matching,
    Path,
    Star,
    realize,
    stats,
)


class HypothesisError(ValueError):
    """A formula was queried outside its stated hypotheses."""


@dataclass(frozen=True)
class ChromaticData:
    chi: int
    surplus: int


@dataclass(frozen=True)
class KnownValue:
    value: int
    source: str


# ---------------------------------------------------------------------------
# Chromatic number and surplus


def _k_colorable(g: Graph, k: int) -> bool:
    if k >= g.order:
        return True
    order = sorted(range(g.order), key=g.degree, reverse=True)
    colors = [-1] * g.order

    def assign(i: int, used: int) -> bool:
        if i == g.order:
            return True
        v = order[i]
        forbidden = 0
        row = g.adj[v]
        while row:
            low = row & -row
            row ^= low
            c = colors[low.bit_length() - 1]
            if c >= 0:
                forbidden |= 1 << c
        # trying at most one fresh color kills color-permutation symmetry
        for c in range(min(used + 1, k)):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chi via backtracking between a clique lower and greedy upper bound."""
    if g.order > 20:
        raise ValueError(f"chromatic_number supports at most 20 vertices, got {g.order}")
    lower = max_clique_size(g)
    # greedy upper bound on a descending-degree order
    colors: dict[int, int] = {}
    for v in sorted(range(g.order), key=g.degree, reverse=True):
        taken = {colors[u] for u in g.neighbors(v) if u in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    upper = max(colors.values()) + 1
    for k in range(lower, upper):
        if _k_colorable(g, k):
            return k
    return upper


def chromatic_surplus(g: Graph) -> int:
    """Minimum color-class size over all proper chi-colorings.

    A class of size z in some chi-coloring is exactly an independent set S
    with chi(G - S) <= chi - 1, so scan independent sets by size.
    """
    if g.order > 16:
        raise ValueError(f"chromatic_surplus supports at most 16 vertices, got {g.order}")
    chi = chromatic_number(g)
    if chi == 1:
        return g.order
    vertices = range(g.order)
    for size in range(1, g.order // chi + 1):
        for subset in combinations(vertices, size):
            independent = True
            for u, v in combinations(subset, 2):
                if g.has_edge(u, v):
                    independent = False
                    break
            if not independent:
                continue
            rest = g.induced([v for v in vertices if v not in subset])
            if _k_colorable(rest, chi - 1):
                return size
    raise AssertionError("pigeonhole guarantees a class of size at most n/chi")


def chromatic_data(g: Graph) -> ChromaticData:
    return ChromaticData(chi=chromatic_number(g), surplus=chromatic_surplus(g))


# ---------------------------------------------------------------------------
# Burr bound and the deletion upper bound


def burr_bound(G: GraphSpec, H: GraphSpec) -> int:
    """(chi(H)-1)(|V(G)|-1) + s(H); needs G connected and |V(G)| >= s(H)."""
    g = realize(G)
    h = realize(H)
    if not stats(g).is_connected:
        raise HypothesisError("Burr bound requires the first graph to be connected")
    data = chromatic_data(h)
    if g.order < data.surplus:
        raise HypothesisError(
            f"Burr bound requires |V(G)| >= s(H): {g.order} < {data.surplus}"
        )
    return (data.chi - 1) * (g.order - 1) + data.surplus


def is_ramsey_good(G: GraphSpec, H: GraphSpec, ramsey_value: int) -> bool:
    """G is H-good when the Ramsey number meets the Burr lower bound."""
    return ramsey_value == burr_bound(G, H)


def path_critical_upper_bound(G: GraphSpec, H: GraphSpec, r: int) -> int:
    """Upper bound t*n-1 on the path-critical number, t = r-(chi-1)(n-1)-s+1.

    Hypotheses: G connected of order n with a dominating vertex, n >= s(H),
    and r <= (chi(H)-1)n + s(H) - 1.
    """
    g = realize(G)
    h = realize(H)
    n = g.order
    if not stats(g).is_connected:
        raise HypothesisError("upper bound requires G connected")
    if stats(g).max_degree != n - 1:
        raise HypothesisError(
            f"upper bound requires max degree n-1={n - 1}, got {stats(g).max_degree}"
        )
    data = chromatic_data(h)
    if n < data.surplus:
        raise HypothesisError(f"upper bound requires n >= s(H): {n} < {data.surplus}")
    limit = (data.chi - 1) * n + data.surplus - 1
    if r > limit:
        raise HypothesisError(f"upper bound requires r <= (chi-1)n+s-1 = {limit}, got {r}")
    t = r - (data.chi - 1) * (n - 1) - data.surplus + 1
    if t < 1:
        raise HypothesisError(f"r={r} lies below the Burr lower bound")
    return t * n - 1


# ---------------------------------------------------------------------------
# Catalog pattern accessors.  Tiny graphs coincide across families
# (K2 = P2 = 1K2 = K_{1,1}, K3 = B1 = F1, P3 = K_{1,2}); the accessors
# recognize those aliases so equivalent spellings hit the same entries.


def _as_clique(spec: GraphSpec) -> int | None:
    if isinstance(spec, Complete):
        return spec.n
    if isinstance(spec, (Path, Empty)) and spec.n == 1:
        return 1
    if isinstance(spec, Path) and spec.n == 2:
        return 2
    if isinstance(spec, Star) and spec.n == 1:
        return 2
    if isinstance(spec, Matching) and spec.m == 1:
        return 2
    if isinstance(spec, Book) and spec.m == 1:
        return 3
    if isinstance(spec, Fan) and spec.n == 1:
        return 3
    return None


def _as_star(spec: GraphSpec) -> int | None:
    if isinstance(spec, Star):
        return spec.n
    if isinstance(spec, Path) and spec.n in (2, 3):
        return spec.n - 1
    if isinstance(spec, Complete) and spec.n == 2:
        return 1
    if isinstance(spec, Matching) and spec.m == 1:
        return 1
    return None


def _as_path(spec: GraphSpec) -> int | None:
    if isinstance(spec, Path):
        return spec.n
    if isinstance(spec, (Complete, Empty)) and spec.n == 1:
        return 1
    if isinstance(spec, Complete) and spec.n == 2:
        return 2
    if isinstance(spec, Star) and spec.n in (1, 2):
        return spec.n + 1
    if isinstance(spec, Matching) and spec.m == 1:
        return 2
    return None


def _as_matching(spec: GraphSpec) -> int | None:
    if isinstance(spec, Matching):
        return spec.m
    if isinstance(spec, Complete) and spec.n == 2:
        return 1
    if isinstance(spec, Path) and spec.n == 2:
        return 1
    if isinstance(spec, Star) and spec.n == 1:
        return 1
    return None


def _as_book(spec: GraphSpec) -> int | None:
    if isinstance(spec, Book):
        return spec.m
    if isinstance(spec, Complete) and spec.n == 3:
        return 1
    if isinstance(spec, Fan) and spec.n == 1:
        return 1
    return None


def _as_fan(spec: GraphSpec) -> int | None:
    if isinstance(spec, Fan):
        return spec.n
    if isinstance(spec, Complete) and spec.n == 3:
        return 1
    if isinstance(spec, Book) and spec.m == 1:
        return 1
    return None


# ---------------------------------------------------------------------------
# Known Ramsey numbers


def _match_known(a: GraphSpec, b: GraphSpec) -> KnownValue | None:
    ns = _as_star(a)
    if ns is not None:
        m = _as_clique(b)
        if m is not None and m >= 2:
            return KnownValue(ns * (m - 1) + 1, "star-clique")
        nb = _as_star(b)
        if nb is not None:
            eps = 1 if ns % 2 == 0 and nb % 2 == 0 else 0
            return KnownValue(ns + nb - eps, "star-star")
        mb = _as_book(b)
        if mb is not None and mb >= 2 and ns >= 3 * mb - 4:
            return KnownValue(2 * ns + 1, "star-book")
        np_ = _as_path(b)
        if np_ is not None and np_ >= 2 * ns + 1:
            return KnownValue(np_, "star-path")
    nf = _as_fan(a)
    if nf is not None and nf >= 2 and _as_clique(b) == 3:
        return KnownValue(4 * nf + 1, "fan-triangle")
    nm = _as_matching(a)
    if nm is not None and nm >= 2 and _as_clique(b) == 3:
        return KnownValue(2 * nm + 1, "matching-triangle")
    ma = _as_matching(a)
    mb = _as_matching(b)
    if ma is not None and mb is not None and mb >= ma >= 1:
        return KnownValue(2 * mb + ma - 1, "matching-matching")
    return None


def known_ramsey(red: GraphSpec, blue: GraphSpec) -> KnownValue | None:
    """Cataloged Ramsey number for the pair, if its validity range applies.

    The star-star entry is classical background (re-verified by search for
    small parameters); the rest are the exact families the closed forms
    build on.  Pairs are matched in either order since R(G,H) = R(H,G).
    """
    for a, b in ((red, blue), (blue, red)):
        value = _match_known(a, b)
        if value is not None:
            return value
    return None


# ---------------------------------------------------------------------------
# Closed-form path-critical numbers


def _match_critical(a: GraphSpec, b: GraphSpec) -> KnownValue | None:
    ns = _as_star(a)
    if ns is not None:
        m = _as_clique(b)
        if m is not None and m >= 2 and ns >= 2:
            return KnownValue(ns, "path-critical star-clique")
        nb = _as_star(b)
        if nb is not None and ns + nb >= 3:
            if ns % 2 == 0 and nb % 2 == 0:
                return KnownValue(0, "path-critical star-star")
            return KnownValue(ns + nb - 1, "path-critical star-star")
        mb = _as_book(b)
        if mb is not None and mb >= 2 and ns >= 3 * mb + 2:
            return KnownValue(ns, "path-critical star-book")
        np_ = _as_path(b)
        if np_ is not None and np_ >= 2 * ns + 3:
            return KnownValue(np_, "path-critical star-path")
    nf = _as_fan(a)
    if nf is not None and nf >= 2 and _as_clique(b) == 3:
        return KnownValue(2 * nf, "path-critical fan-triangle")
    ma = _as_matching(a)
    mb = _as_matching(b)
    if ma is not None and mb is not None and mb >= ma >= 1 and mb >= 2:
        return KnownValue(2 * mb + ma - 1, "path-critical matching-matching")
    return None


def closed_form_path_critical(red: GraphSpec, blue: GraphSpec) -> KnownValue | None:
    """Cataloged path-critical Ramsey number, when the parameters qualify."""
    for a, b in ((red, blue), (blue, red)):
        value = _match_critical(a, b)
        if value is not None:
            return value
    return None
