"""Built-in property battery: engine oracles, field axioms, cross-validation.

Everything here is independent of the stabilizer-chain machinery it checks:
orders come from brute-force closure enumeration, membership from element
sets, and coset-graph adjacency from double-coset membership over all group
elements.  The battery is deterministic for a fixed seed; the seed only
feeds the random membership candidates.
"""

from __future__ import annotations

import random
from collections import deque

from .constructions import (
    build_agl1,
    build_alt,
    build_construction,
    build_cyclic,
    build_dihedral,
    build_pgl2,
    build_sym,
    coset_graph,
)
from .gf import make_field
from .group import PermGroup
from .perm import Permutation


def closure(generators) -> set:
    """Brute-force closure of a generator set: the full element set."""
    gens = [g for g in generators]
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


def double_coset_graph_bruteforce(G_elements, K_elements, g):
    """Adjacency on cosets Kx by the relation y*x^-1 in KgK, all elements."""
    kset = set(K_elements)
    cosets = []
    seen = set()
    for x in G_elements:
        if x in seen:
            continue
        coset = frozenset(k * x for k in K_elements)
        seen |= coset
        cosets.append((x, coset))
    kgk = {k1 * g * k2 for k1 in K_elements for k2 in K_elements}
    edges = set()
    for i, (x, _) in enumerate(cosets):
        for j, (y, _) in enumerate(cosets):
            if i < j and y * x.inverse() in kgk:
                edges.add((i, j))
    assert all((y * x.inverse() in kgk) == (x * y.inverse() in kgk)
               for x, _ in cosets for y, _ in cosets), "KgK not symmetric"
    return cosets, edges, kset


def _corpus():
    return [
        ("Sym(4)", build_sym(4)),
        ("Alt(5)", build_alt(5)),
        ("D6", build_dihedral(6)),
        ("C12", build_cyclic(12)),
        ("AGL1(8)", build_agl1(make_field(2, 3))),
        ("PGL2(5)", build_pgl2(5)),
    ]


def run_selftest(seed: int = 0) -> dict:
    """Run the battery; returns a deterministic report dictionary."""
    checks = []

    def record(name, passed, detail=""):
        checks.append({"name": name, "status": "pass" if passed else "FAIL",
                       "detail": detail})

    # permutation algebra, exhaustive over Sym(4)
    s4 = sorted(closure(build_sym(4).generators), key=lambda p: p.images)
    ok = all(((a * b).is_even() == (a.is_even() == b.is_even()))
             for a in s4 for b in s4)
    ok = ok and all(a.inverse().inverse() == a for a in s4)
    ok = ok and all(a.cycle_type() == a.conjugate(c).cycle_type()
                    for a in s4 for c in s4[:6])
    record("perm_algebra_S4", ok, "parity product, inverse involution, conjugacy")

    # field axioms on three small fields
    field_ok = True
    for p, d in ((2, 3), (3, 2), (5, 2)):
        F = make_field(p, d)
        elems = list(F.elements())
        nonzero = [e for e in elems if not e.is_zero()]
        sample = elems if F.size <= 9 else elems[:12]
        field_ok &= all((a + b) + c == a + (b + c)
                        for a in sample for b in sample for c in sample)
        field_ok &= all(a * (b + c) == a * b + a * c
                        for a in sample for b in sample for c in sample)
        field_ok &= all(v * v.inv() == F.one() for v in nonzero)
        frob = {v: F.frobenius(v, 1) for v in elems}
        field_ok &= all(frob[a] + frob[b] == F.frobenius(a + b, 1)
                        and frob[a] * frob[b] == F.frobenius(a * b, 1)
                        for a in elems for b in elems)
        w = F.primitive_element()
        powers = set()
        x = F.one()
        for _ in range(F.size - 1):
            powers.add(x)
            x = x * w
        field_ok &= len(powers) == F.size - 1
    record("field_axioms", field_ok, "F_8, F_9, F_25 exhaustive")

    # engine orders and membership against closure enumeration
    rng = random.Random(seed)
    orders_ok = True
    member_ok = True
    orbstab_ok = True
    for name, G in _corpus():
        elements = closure(G.generators)
        orders_ok &= G.order() == len(elements)
        degree = G.degree
        element_list = sorted(elements, key=lambda p: p.images)
        for _ in range(50):
            if rng.random() < 0.5:
                cand = element_list[rng.randrange(len(element_list))]
            else:
                images = list(range(degree))
                rng.shuffle(images)
                cand = Permutation(images)
            member_ok &= G.contains(cand) == (cand in elements)
        for x in range(degree):
            stab = G.point_stabilizer(x)
            orbstab_ok &= G.order() == stab.order() * len(G.orbit(x))
    record("engine_orders_vs_closure", orders_ok, "six groups")
    record("membership_vs_enumeration", member_ok, f"50 candidates per group, seed {seed}")
    record("orbit_stabilizer_identity", orbstab_ok, "every point of every corpus group")

    # coset graphs against brute-force double-coset adjacency
    coset_ok = True
    s3 = build_sym(3)
    K = PermGroup([Permutation.from_cycles(3, [(0, 1)])], name="S2")
    g = Permutation.from_cycles(3, [(1, 2)])
    result = coset_graph(s3, K, g, cap=100)
    cosets, edges, _ = double_coset_graph_bruteforce(
        list(closure(s3.generators)), list(closure(K.generators)), g)
    coset_ok &= len(cosets) == len(result.space) == 3
    coset_ok &= len(edges) == result.graph.edge_count() == 3
    coset_ok &= result.valency == 2

    s4 = build_sym(4)
    K4 = s4.point_stabilizer(3)
    g4 = Permutation.from_cycles(4, [(0, 3)])
    result4 = coset_graph(s4, K4, g4, cap=100)
    coset_ok &= result4.graph.is_complete() and result4.graph.vertex_count == 4
    record("coset_graph_vs_double_coset", coset_ok, "S3 triangle and S4 -> K4")

    # construction triple identities at q = 3
    triple = build_construction(3)
    tri_ok = triple.K.order() == 144
    tri_ok &= triple.g * triple.tau == triple.tau * triple.g
    tri_ok &= triple.omega.conjugate(triple.g) == triple.omega.inverse()
    K01 = triple.K.tuple_stabilizer((0, 1))
    tri_ok &= K01.order() == 2 and K01.contains(triple.tau)
    record("construction_triple_q3", tri_ok,
           "|K| = 144, g tau = tau g, omega^g = omega^-1, K_01 = <tau>")

    all_pass = all(c["status"] == "pass" for c in checks)
    return {"seed": seed, "checks": checks, "all_pass": all_pass}
