"""Independent brute-force oracles used to freeze expected test values.

Nothing here touches stabilizer chains: orders come from closure
enumeration, suborbits from element-set filtering, arc counts from explicit
walk enumeration, and coset adjacency from double-coset membership.
"""

from collections import deque

from arcgraphs.perm import Permutation


def closure(generators) -> set:
    """All elements of <generators> by breadth-first product enumeration."""
    gens = list(generators)
    ident = Permutation.identity(gens[0].degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def orbit_brute(elements, x: int) -> set:
    return {p.apply(x) for p in elements}


def stabilizer_brute(elements, points) -> list:
    pts = list(points)
    return [p for p in elements if all(p.apply(x) == x for x in pts)]


def suborbits_brute(elements, alpha: int, degree: int) -> list:
    """Orbit partition of the point stabilizer, sorted by minimum point."""
    stab = stabilizer_brute(elements, [alpha])
    remaining = set(range(degree))
    out = []
    while remaining:
        x = min(remaining)
        orb = sorted({p.apply(x) for p in stab})
        out.append(orb)
        remaining -= set(orb)
    return out


def orbital_brute(elements, alpha: int, beta: int) -> set:
    return {(p.apply(alpha), p.apply(beta)) for p in elements}


def s_arcs_brute(graph, s: int) -> list:
    """Every s-arc, enumerated explicitly."""
    if s == 0:
        return [(v,) for v in range(graph.vertex_count)]
    arcs = [(u, v) for u in range(graph.vertex_count) for v in graph.neighbors(u)]
    for _ in range(s - 1):
        arcs = [arc + (w,) for arc in arcs for w in graph.neighbors(arc[-1])
                if w != arc[-2]]
    return arcs


def double_coset_adjacency(G_elements, K_elements, g):
    """Cosets of K in G and the edge relation y*x^-1 in KgK, all elements."""
    cosets = []
    seen = set()
    for x in sorted(G_elements, key=lambda p: p.images):
        if x in seen:
            continue
        coset = frozenset(k * x for k in K_elements)
        seen |= coset
        cosets.append(x)
    kgk = {k1 * g * k2 for k1 in K_elements for k2 in K_elements}
    edges = set()
    for i, x in enumerate(cosets):
        for j, y in enumerate(cosets):
            if i < j and y * x.inverse() in kgk:
                edges.add((i, j))
    return cosets, edges


def random_permutation(rng, degree: int) -> Permutation:
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(images)
