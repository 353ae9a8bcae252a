"""Builders for the concrete groups and graphs the toolkit studies.

Symmetric/alternating/cyclic/dihedral groups, one-dimensional affine groups
over explicit finite fields, PGL2(p) on the projective line, Cayley graphs,
coset graphs Cos(G, K, g), orbital graphs, induced actions, and the main
coset-graph triple (K = AGL1(q^2):2, g the field inversion) for q = 3 mod 4.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .gf import FiniteField, make_field, prime_power, smallest_primitive_root
from .graphs import Graph, GroupAction
from .group import CapExceeded, CosetSpace, PermGroup, coset_space
from .perm import DTYPE, Permutation


# ---------------------------------------------------------------------------
# classical groups
# ---------------------------------------------------------------------------

def build_sym(n: int) -> PermGroup:
    """Sym(n) from the standard transposition and n-cycle."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return PermGroup([Permutation.identity(1)], name="Sym(1)", _known_kind="sym")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return PermGroup(gens, name=f"Sym({n})", _known_kind="sym")


def build_alt(n: int) -> PermGroup:
    """Alt(n) from a 3-cycle and a long even cycle."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n <= 2:
        return PermGroup([Permutation.identity(n)], name=f"Alt({n})")
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        if n % 2 == 1:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n))]))
    return PermGroup(gens, name=f"Alt({n})", _known_kind="alt")


def build_cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("degree must be positive")
    return PermGroup([Permutation.from_cycles(n, [tuple(range(n))])], name=f"C{n}")


def build_dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on the vertices of an n-gon."""
    if n < 3:
        raise ValueError("dihedral action needs at least 3 points")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, ref], name=f"D{n}")


def perm_from_field_map(F: FiniteField, fn) -> Permutation:
    """The permutation of {0, ..., |F|-1} induced by a bijection of F."""
    images = np.empty(F.size, dtype=DTYPE)
    for v in F.elements():
        images[v.to_int()] = fn(v).to_int()
    return Permutation(images)


def build_agl1(F: FiniteField) -> PermGroup:
    """AGL1(F) = <v -> v+1, v -> w*v> on the |F| field points, w primitive."""
    w = F.primitive_element()
    one = F.one()
    trans = perm_from_field_map(F, lambda v: v + one)
    scale = perm_from_field_map(F, lambda v: v * w)
    return PermGroup([trans, scale], name=f"AGL1({F.size})")


def build_pgl2(p: int) -> PermGroup:
    """PGL2(p) on the projective line, sharply 3-transitive of order (p+1)p(p-1).

    Point labels: index i < p is the field element i, index p is infinity.
    Generators, in order: z -> z+1, z -> c*z (c the smallest primitive root
    mod p), and the swap z -> 1/z.
    """
    from .gf import is_prime

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = p + 1
    inf = p
    t = np.empty(n, dtype=DTYPE)
    m = np.empty(n, dtype=DTYPE)
    w = np.empty(n, dtype=DTYPE)
    c = smallest_primitive_root(p)
    for z in range(p):
        t[z] = (z + 1) % p
        m[z] = (z * c) % p
        w[z] = pow(z, p - 2, p) if z else inf
    t[inf] = inf
    m[inf] = inf
    w[inf] = 0
    return PermGroup([Permutation(t), Permutation(m), Permutation(w)],
                     name=f"PGL2({p})")


def pgl2_point_at_infinity(p: int) -> int:
    return p


# ---------------------------------------------------------------------------
# induced actions
# ---------------------------------------------------------------------------

def _induced(G: PermGroup, points: list, image_of, name: str):
    index = {pt: i for i, pt in enumerate(points)}
    gens = []
    for g in G.generators:
        images = np.empty(len(points), dtype=DTYPE)
        for i, pt in enumerate(points):
            images[i] = index[image_of(pt, g)]
        gens.append(Permutation(images))
    return PermGroup(gens, name=name), points


def action_on_ordered_pairs(G: PermGroup):
    """G acting on ordered pairs of distinct points; returns (group, labels)."""
    n = G.degree
    points = [(i, j) for i in range(n) for j in range(n) if i != j]
    return _induced(
        G, points,
        lambda pt, g: (g.apply(pt[0]), g.apply(pt[1])),
        name=f"{G.name or 'G'} on ordered pairs")


def action_on_2subsets(G: PermGroup):
    """G acting on 2-element subsets; returns (group, labels)."""
    n = G.degree
    points = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return _induced(
        G, points,
        lambda pt, g: tuple(sorted((g.apply(pt[0]), g.apply(pt[1])))),
        name=f"{G.name or 'G'} on 2-subsets")


def action_on_cosets(space: CosetSpace, H: PermGroup) -> PermGroup:
    """The action of a subgroup H of the ambient group on the coset indices."""
    if H.degree != space.ambient.degree:
        raise ValueError("H acts on the wrong domain")
    if not H.is_subgroup_of(space.ambient):
        raise ValueError("H is not a subgroup of the ambient group")
    gens = space.act(H.generators)
    return PermGroup(gens, name=f"{H.name or 'H'} on cosets")


# ---------------------------------------------------------------------------
# Cayley graphs
# ---------------------------------------------------------------------------

@dataclass
class CayleyGraph:
    """Cay(H, S) on element labels 0..|H|-1 (chain-transversal product order)."""

    graph: Graph
    elements: list          # label -> group element
    right_action: PermGroup  # H acting on labels by right multiplication

    def label_of(self, x: Permutation) -> int:
        return self._index[x]

    def __post_init__(self):
        self._index = {x: i for i, x in enumerate(self.elements)}


def cayley_graph(H: PermGroup, S, cap: int = 10**5) -> CayleyGraph:
    """The Cayley graph of H with connection set S: x ~ y iff y*x^-1 in S."""
    S = list(S)
    if not S:
        raise ValueError("connection set is empty")
    for s in S:
        if s.is_identity():
            raise ValueError("connection set contains the identity")
        if not H.contains(s):
            raise ValueError("connection set element outside the group")
    sset = set(S)
    for s in S:
        if s.inverse() not in sset:
            raise ValueError(
                f"connection set is not inverse-closed: missing inverse of "
                f"{s.cycle_string()}")
    order = H.order()
    if order > cap:
        raise CapExceeded(f"cayley_graph: |H| = {order} exceeds cap {cap}")

    elements = list(H.elements())
    index = {x: i for i, x in enumerate(elements)}
    edges = set()
    for i, x in enumerate(elements):
        for s in sset:
            j = index[s * x]  # y = s*x satisfies y*x^-1 = s
            edges.add((min(i, j), max(i, j)))
    graph = Graph.from_edges(order, sorted(edges))

    right_gens = []
    for h in H.generators:
        images = np.empty(order, dtype=DTYPE)
        for i, x in enumerate(elements):
            images[i] = index[x * h]
        right_gens.append(Permutation(images))
    right_action = PermGroup(right_gens, name="right regular action")
    return CayleyGraph(graph=graph, elements=elements, right_action=right_action)


# ---------------------------------------------------------------------------
# coset graphs
# ---------------------------------------------------------------------------

@dataclass
class CosetGraphResult:
    """Cos(G, K, g) together with the machinery that built it."""

    graph: Graph
    space: CosetSpace
    action: GroupAction          # induced action of G's generators
    induced_group: PermGroup
    valency: int
    intersection: PermGroup      # K ∩ K^g on the original domain
    transversal: list            # right transversal of K ∩ K^g in K


def coset_graph(G: PermGroup, K: PermGroup, g: Permutation,
                cap: int = 10**5) -> CosetGraphResult:
    """The coset graph Cos(G, K, g): cosets Kx ~ Ky iff y*x^-1 in KgK.

    K ∩ K^g is computed as the stabilizer in K of the coset Kg under right
    multiplication on [G:K], reusing the coset-space machinery; the level-0
    transversal of that chain is a right transversal of K ∩ K^g in K, which
    lists each neighbourhood as {K(g*k_i*x)}.
    """
    if g.degree != G.degree:
        raise ValueError("g acts on the wrong domain")
    if not G.contains(g):
        raise ValueError("g is not an element of G")
    space = coset_space(G, K, cap)
    i_g = space.index(g)
    if i_g == 0:
        raise ValueError("g lies in K; the coset graph needs g in G \\ K")
    if not K.contains(g * g):
        raise ValueError("g^2 is not in K, so adjacency would be directed")

    n = G.degree
    k_images = space.act(K.generators)
    combined_gens = [
        Permutation(np.concatenate([kg._img, (ki._img + n).astype(DTYPE)]))
        for kg, ki in zip(K.generators, k_images)
    ]
    combined = PermGroup(combined_gens, _known_order=K.order())
    chain = combined.chain_with_base([n + i_g])
    level0 = chain._levels[0]
    d = len(level0.pts)
    if K.order() % d:
        raise RuntimeError("orbit of Kg does not divide |K|; chain is corrupt")
    transversal = [Permutation(level0.tvsl[pos][:n].copy()) for pos in range(d)]
    suffix = chain.suffix(1)
    if suffix.depth and suffix._levels[0].gens:
        inter_gens = [Permutation(a[:n].copy()) for a in suffix._levels[0].gens]
    else:
        inter_gens = [Permutation.identity(n)]
    intersection = PermGroup(inter_gens, name="K ∩ K^g",
                             _known_order=K.order() // d)

    g_arr = g._img
    t_arrs = [t._img for t in transversal]
    count = len(space)
    adj = []
    for rep in space.reps:
        x_arr = rep._img
        nbrs = set()
        for t_arr in t_arrs:
            nbrs.add(space.index(Permutation._wrap(x_arr[t_arr[g_arr]])))
        adj.append(nbrs)
    for i, nbrs in enumerate(adj):
        if i in nbrs:
            raise RuntimeError("coset graph produced a loop; g K g K misbehaves")
        if len(nbrs) != d:
            raise RuntimeError("neighbourhood size differs from |K : K ∩ K^g|")
        for j in nbrs:
            if i not in adj[j]:
                raise RuntimeError("coset adjacency is not symmetric")
    graph = Graph(count, [tuple(sorted(nbrs)) for nbrs in adj])
    induced_group = PermGroup(space.generator_images,
                              name=f"{G.name or 'G'} on cosets")
    action = GroupAction(induced_group, graph)
    return CosetGraphResult(
        graph=graph, space=space, action=action, induced_group=induced_group,
        valency=d, intersection=intersection, transversal=transversal)


# ---------------------------------------------------------------------------
# orbital graphs
# ---------------------------------------------------------------------------

def orbital_graph(G: PermGroup, alpha: int, beta: int):
    """The orbital graph with edge set {alpha, beta}^G; returns (graph, action).

    Requires the orbital to be self-paired, otherwise the edge relation would
    be directed.
    """
    if not G.is_transitive():
        raise ValueError("orbital graphs are defined for transitive groups")
    if alpha == beta:
        raise ValueError("orbital graph needs two distinct points")
    if not G.is_self_paired(alpha, beta):
        raise ValueError(
            f"the orbital of ({alpha}, {beta}) is not self-paired: "
            f"({beta}, {alpha}) lies in a different orbital")
    edges = {(min(a, b), max(a, b)) for a, b in G.orbital(alpha, beta)}
    graph = Graph.from_edges(G.degree, sorted(edges))
    return graph, GroupAction(G, graph)


# ---------------------------------------------------------------------------
# the main construction: K = AGL1(q^2):<tau>, g the inversion of F_{q^2}
# ---------------------------------------------------------------------------

@dataclass
class ConstructionTriple:
    """The coset-graph triple (Sym(q^2), K, g) on the points of F_{q^2}.

    K = AGL1(q^2):<tau> where tau: v -> v^q, and g fixes 0 and inverts the
    multiplicative group.  omega generates the stabilizer of 0 in AGL1(q^2).
    """

    q: int
    p: int
    f: int
    field: FiniteField
    K: PermGroup
    g: Permutation
    omega: Permutation
    tau: Permutation
    translation: Permutation

    @property
    def degree(self) -> int:
        return self.q * self.q

    @property
    def G_name(self) -> str:
        return f"Sym({self.degree})"

    def sym_group(self) -> PermGroup:
        return build_sym(self.degree)

    def alt_group(self) -> PermGroup:
        return build_alt(self.degree)

    def to_json(self) -> str:
        return json.dumps({
            "q": self.q,
            "p": self.p,
            "f": self.f,
            "degree": self.degree,
            "G_name": self.G_name,
            "field": self.field.descriptor(),
            "K_generators": [list(k.images) for k in self.K.generators],
            "g": list(self.g.images),
            "omega": list(self.omega.images),
            "tau": list(self.tau.images),
        }, sort_keys=True)


def build_construction(q: int) -> ConstructionTriple:
    """Build the (Sym(q^2), AGL1(q^2):<tau>, inversion) coset-graph triple.

    Requires q to be a prime power with q ≡ 3 (mod 4); tau is then an odd
    permutation and the triple generates the full symmetric group.
    """
    p, f = prime_power(q)  # raises ValueError for non prime powers
    if q % 4 != 3:
        raise ValueError(f"q = {q} violates the hypothesis q ≡ 3 (mod 4)")
    F = make_field(p, 2 * f)
    one = F.one()
    omega_elt = F.primitive_element()
    translation = perm_from_field_map(F, lambda v: v + one)
    omega = perm_from_field_map(F, lambda v: v * omega_elt)
    tau = perm_from_field_map(F, lambda v: F.frobenius(v, f))
    g = perm_from_field_map(F, lambda v: v if v.is_zero() else v.inv())

    if not (tau * tau).is_identity():
        raise RuntimeError("tau is not an involution; field construction is corrupt")
    if not (g * g).is_identity():
        raise RuntimeError("g is not an involution; inversion map is corrupt")
    n = q * q
    K = PermGroup([translation, omega, tau], name=f"AGL1({n}):2")
    expected = 2 * n * (n - 1)
    if K.order() != expected:
        raise RuntimeError(f"|K| = {K.order()}, expected {expected}")
    return ConstructionTriple(q=q, p=p, f=f, field=F, K=K, g=g,
                              omega=omega, tau=tau, translation=translation)


def construction_graph(triple: ConstructionTriple, cap: int = 10**5) -> CosetGraphResult:
    """The explicit coset graph of the triple (index must fit under cap)."""
    G = triple.sym_group()
    index = math.factorial(triple.degree) // triple.K.order()
    if index > cap:
        raise CapExceeded(
            f"coset graph on {index} vertices exceeds cap {cap}")
    return coset_graph(G, triple.K, triple.g, cap)
