"""Finitely generated permutation groups via deterministic stabilizer chains.

The chain builder is an incremental Schreier-Sims: strong generators are
discovered by sifting Schreier generators, deepest pending level first.  Two
exactness facts make it usable at desk scale without randomization:

* the product of basic orbit lengths is always a lower bound on the group
  order (distinct transversal products are distinct elements), and
* degree! (or degree!/2 when every input generator is even) is an exact
  upper bound.

When the two meet the chain is complete and Schreier verification stops
early; this is what makes order computations like |<K, g>| = n! feasible
for degrees in the hundreds.  Groups that never hit the bound are verified
the classical way, by sifting every remaining Schreier generator.
"""

from __future__ import annotations

import json
import math
from collections import deque

import numpy as np

from .perm import DTYPE, Permutation


class CapExceeded(ValueError):
    """A bounded computation was asked to exceed its cap."""


# ---------------------------------------------------------------------------
# chain internals
# ---------------------------------------------------------------------------

class _Level:
    __slots__ = (
        "point", "gens", "pair_gens", "pts", "orbit", "tvsl", "tvsl_inv",
        "member", "edge", "orb_swept", "sch_swept", "room",
    )

    def __init__(self, point: int, degree: int):
        ident = np.arange(degree, dtype=DTYPE)
        ident.flags.writeable = False
        self.point = point
        self.gens: list = []        # generators of the group at this level
        self.pair_gens: list = []   # generating subset used for Schreier pairs
        self.pts: list = [point]
        self.orbit: dict = {point: 0}
        self.tvsl: list = [ident]
        self.tvsl_inv: list = [ident]
        member = np.zeros(degree, dtype=bool)
        member[point] = True
        self.member = member
        self.edge: list = [None]    # (parent_pos, id(gen)) that defined each point
        self.orb_swept: list = []   # per gens[k]: positions already expanded
        self.sch_swept: list = []   # per pair_gens[k]: positions already paired
        self.room: deque = deque()  # pair-gen indices that may have work


class StabilizerChain:
    """Base, strong generators, basic orbits and transversals of a group."""

    def __init__(self, levels: list, degree: int, order: int):
        self._levels = levels
        self.degree = degree
        self.order = order

    @property
    def base(self) -> tuple:
        return tuple(lv.point for lv in self._levels)

    @property
    def depth(self) -> int:
        return len(self._levels)

    def orbit_lengths(self) -> tuple:
        return tuple(len(lv.pts) for lv in self._levels)

    def basic_orbit(self, i: int) -> tuple:
        return tuple(sorted(self._levels[i].pts))

    def strong_generators(self, i: int) -> tuple:
        return tuple(Permutation._wrap(a) for a in self._levels[i].gens)

    def transversal(self, i: int) -> dict:
        lv = self._levels[i]
        return {pt: Permutation._wrap(lv.tvsl[pos]) for pt, pos in lv.orbit.items()}

    def sift_array(self, arr: np.ndarray):
        """Sift an image array; return (residue_or_None, stop_level)."""
        x = arr
        for i, lv in enumerate(self._levels):
            pos = lv.orbit.get(int(x[lv.point]))
            if pos is None:
                return x, i
            x = lv.tvsl_inv[pos][x]
        if (x == np.arange(self.degree, dtype=DTYPE)).all():
            return None, len(self._levels)
        return x, len(self._levels)

    def sift(self, p: Permutation):
        """Sift a permutation; the residue is None exactly for members."""
        residue, _ = self.sift_array(p._img)
        return None if residue is None else Permutation._wrap(residue)

    def suffix(self, k: int) -> "StabilizerChain":
        """Chain of the pointwise stabilizer of the first k base points."""
        order = 1
        for lv in self._levels[k:]:
            order *= len(lv.pts)
        return StabilizerChain(self._levels[k:], self.degree, order)

    def elements_arrays(self):
        """All group elements, one per transversal-product combination.

        Mixed-radix order with the level-0 transversal varying fastest and
        each basic orbit traversed in ascending point order.
        """
        levels = self._levels
        ident = np.arange(self.degree, dtype=DTYPE)
        if not levels:
            yield ident
            return
        sorted_tvsl = [
            [lv.tvsl[lv.orbit[pt]] for pt in sorted(lv.pts)] for lv in levels
        ]

        def rec(i):
            if i == len(levels):
                yield ident
                return
            for rest in rec(i + 1):
                # rest fixes this level's base point; u sets its image
                for u in sorted_tvsl[i]:
                    yield u[rest]
        yield from rec(0)


def _is_even_array(arr: np.ndarray, degree: int) -> bool:
    seen = bytearray(degree)
    cycles = 0
    for i in range(degree):
        if seen[i]:
            continue
        cycles += 1
        j = i
        while not seen[j]:
            seen[j] = 1
            j = int(arr[j])
    return (degree - cycles) % 2 == 0


def _build_chain(gen_arrays: list, degree: int, preferred_base=(),
                 known_order: int | None = None) -> StabilizerChain:
    ident = np.arange(degree, dtype=DTYPE)
    inputs = [a for a in gen_arrays if not (a == ident).all()]

    levels: list[_Level] = []
    seen_base = set()
    for b in preferred_base:
        b = int(b)
        if not 0 <= b < degree:
            raise ValueError(f"base point {b} outside domain of degree {degree}")
        if b not in seen_base:
            seen_base.add(b)
            levels.append(_Level(b, degree))

    if known_order is not None:
        upper = known_order
    else:
        upper = math.factorial(degree)
        if inputs and all(_is_even_array(a, degree) for a in inputs):
            upper //= 2

    prod = [1]

    def sift(x, start=0):
        for i in range(start, len(levels)):
            lv = levels[i]
            pos = lv.orbit.get(int(x[lv.point]))
            if pos is None:
                return x, i
            x = lv.tvsl_inv[pos][x]
        if (x == ident).all():
            return None, len(levels)
        return x, len(levels)

    def drain_orbit(i):
        # close the level-i basic orbit under the level's current generators
        lv = levels[i]
        changed = True
        while changed:
            changed = False
            for k, gen in enumerate(lv.gens):
                start = lv.orb_swept[k]
                npts = len(lv.pts)
                if start >= npts:
                    continue
                lv.orb_swept[k] = npts
                chunk = np.array(lv.pts[start:npts], dtype=DTYPE)
                images = gen[chunk]
                fresh = np.flatnonzero(~lv.member[images])
                for idx in fresh:
                    pt = int(images[idx])
                    if lv.member[pt]:
                        continue  # duplicate within the chunk
                    parent = start + int(idx)
                    u = gen[lv.tvsl[parent]]
                    u_inv = np.empty(degree, dtype=DTYPE)
                    u_inv[u] = ident
                    lv.member[pt] = True
                    lv.orbit[pt] = len(lv.pts)
                    lv.pts.append(pt)
                    lv.tvsl.append(u)
                    lv.tvsl_inv.append(u_inv)
                    lv.edge.append((parent, id(gen)))
                    prod[0] = prod[0] // (len(lv.pts) - 1) * len(lv.pts)
                    changed = True
        # new positions may carry new Schreier pairs
        npts = len(lv.pts)
        for k in range(len(lv.pair_gens)):
            if lv.sch_swept[k] < npts:
                lv.room.append(k)

    def init_level0_pairs():
        lv0 = levels[0]
        lv0.pair_gens = list(inputs)
        lv0.sch_swept = [0] * len(inputs)
        lv0.room.extend(range(len(inputs)))

    def assign(j, x):
        # register strong generator x (fixes base[0..j-1]) at levels 0..j
        if j == len(levels):
            moved = int(np.flatnonzero(x != ident)[0])
            levels.append(_Level(moved, degree))
            if j == 0:
                # the whole group is generated by the inputs, so level 0
                # only needs Schreier pairs against them
                init_level0_pairs()
        for i in range(j + 1):
            lv = levels[i]
            lv.gens.append(x)
            lv.orb_swept.append(0)
            if i >= 1:
                if lv.pair_gens is not lv.gens:
                    lv.pair_gens = lv.gens
                    lv.sch_swept = [0] * (len(lv.gens) - 1)
                lv.sch_swept.append(0)
                lv.room.append(len(lv.gens) - 1)
        for i in range(j, -1, -1):
            drain_orbit(i)

    # Deterministic product pump: fixed-schedule product replacement feeding
    # well-mixed group elements into the sift.  It discovers strong
    # generators at the pace of the orbit product instead of the Schreier
    # grind; correctness never depends on it, since residues are genuine
    # group elements and completeness is certified by the exact bound or by
    # the pair loop below.
    pool = list(inputs)
    while 0 < len(pool) < 6:
        pool.append(pool[-1][pool[len(pool) % len(inputs)]])
    pump_state = {"acc": ident, "step": 0}

    def pump(stall_limit):
        if not pool:
            return
        stall = 0
        while prod[0] != upper and stall <= stall_limit:
            s = pump_state["step"]
            pump_state["step"] = s + 1
            i = s % len(pool)
            j = (s + 1 + s // len(pool)) % len(pool)
            if i == j:
                j = (j + 1) % len(pool)
            w = pool[j][pool[i]]  # pool[i] * pool[j]
            pool[i] = w
            pump_state["acc"] = w[pump_state["acc"]]
            residue, stop = sift(pump_state["acc"])
            if residue is not None:
                assign(stop, residue)
                stall = 0
            else:
                stall += 1

    for arr in inputs:
        if prod[0] == upper:
            break
        if not levels:
            assign(0, arr)
            continue
        residue, stop = sift(arr)
        if residue is not None:
            assign(stop, residue)

    if levels and not levels[0].pair_gens and inputs:
        # level 0 was created from the preferred base
        init_level0_pairs()

    pump(16 + 2 * degree)

    while prod[0] != upper:
        deepest = None
        for i in range(len(levels) - 1, -1, -1):
            if levels[i].room:
                deepest = i
                break
        if deepest is None:
            break
        lv = levels[deepest]
        k = lv.room.popleft()
        gen = lv.pair_gens[k]
        gid = id(gen)
        pos = lv.sch_swept[k]
        while pos < len(lv.pts):
            dpos = lv.orbit[int(gen[lv.pts[pos]])]
            lv.sch_swept[k] = pos + 1
            if lv.edge[dpos] == (pos, gid):
                pos += 1
                continue  # trivial Schreier generator by construction
            t = gen[lv.tvsl[pos]]
            sg = lv.tvsl_inv[dpos][t]
            if not (sg == ident).all():
                residue, stop = sift(sg, deepest + 1)
                if residue is not None:
                    assign(stop, residue)
                    pump(32)
                    if lv.sch_swept[k] < len(lv.pts):
                        lv.room.append(k)
                    break
            pos += 1

    if prod[0] > upper:
        raise RuntimeError("orbit product exceeded the exact order bound; "
                           "a known_order hint was wrong")
    return StabilizerChain(levels, degree, prod[0])


# ---------------------------------------------------------------------------
# permutation groups
# ---------------------------------------------------------------------------

class PermGroup:
    """A permutation group given by generators on {0, ..., degree-1}.

    The stabilizer chain is computed lazily and cached; all orders are exact
    Python integers.  Instances are immutable once built and safe to share.

    Groups constructed as full symmetric or alternating groups carry a kind
    tag so that order and membership never need an explicit chain there
    (|Sym(n)| = n! and membership is a degree or parity check, by
    definition of those groups).
    """

    def __init__(self, generators, name: str | None = None,
                 _known_order: int | None = None, _known_kind: str | None = None):
        gens = tuple(generators)
        if not gens:
            raise ValueError("a PermGroup needs at least one generator")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generators have mixed degrees")
        self.generators = gens
        self.degree = degree
        self.name = name
        self._known_order = _known_order
        self._known_kind = _known_kind  # None | "sym" | "alt"
        self._chain: StabilizerChain | None = None

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([Permutation.identity(degree)], name=f"1 (degree {degree})")

    @classmethod
    def _with_chain(cls, generators, chain: StabilizerChain,
                    name: str | None = None) -> "PermGroup":
        G = cls(generators, name=name)
        G._chain = chain
        return G

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            known = self._known_order
            if known is None and self._known_kind == "sym":
                known = math.factorial(self.degree)
            elif known is None and self._known_kind == "alt":
                known = math.factorial(self.degree) // 2
            self._chain = _build_chain(
                [g._img for g in self.generators], self.degree,
                known_order=known)
        return self._chain

    def chain_with_base(self, base) -> StabilizerChain:
        """A fresh chain whose base starts with the given points."""
        known = self._known_order
        if known is None and self._known_kind == "sym":
            known = math.factorial(self.degree)
        elif known is None and self._known_kind == "alt":
            known = math.factorial(self.degree) // 2
        return _build_chain([g._img for g in self.generators], self.degree,
                            preferred_base=tuple(base), known_order=known)

    def order(self) -> int:
        if self._chain is None:
            if self._known_kind == "sym":
                return math.factorial(self.degree)
            if self._known_kind == "alt":
                return math.factorial(self.degree) // 2
            if self._known_order is not None:
                return self._known_order
        return self.chain.order

    def contains(self, x: Permutation) -> bool:
        if x.degree != self.degree:
            raise ValueError(f"degree mismatch: {x.degree} vs {self.degree}")
        if self._known_kind == "sym":
            return True
        if self._known_kind == "alt":
            return x.is_even()
        return self.chain.sift(x) is None

    def orbit(self, x: int) -> list:
        """The orbit of a point, sorted."""
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} outside domain of degree {self.degree}")
        seen = {x}
        queue = deque([x])
        arrs = [g._img for g in self.generators]
        while queue:
            a = queue.popleft()
            for arr in arrs:
                b = int(arr[a])
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def orbits(self) -> list:
        """All orbits on the domain, each sorted, ordered by minimum point."""
        remaining = np.ones(self.degree, dtype=bool)
        out = []
        for x in range(self.degree):
            if remaining[x]:
                orb = self.orbit(x)
                out.append(orb)
                remaining[orb] = False
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def point_stabilizer(self, x: int) -> "PermGroup":
        return self.tuple_stabilizer((x,))

    def tuple_stabilizer(self, xs) -> "PermGroup":
        """Pointwise stabilizer of a tuple, via a chain based at those points."""
        xs = tuple(int(x) for x in xs)
        for x in xs:
            if not 0 <= x < self.degree:
                raise ValueError(f"point {x} outside domain of degree {self.degree}")
        chain = self.chain_with_base(xs)
        k = len(dict.fromkeys(xs))
        suffix = chain.suffix(k)
        if suffix.depth and suffix._levels[0].gens:
            gens = [Permutation._wrap(a) for a in suffix._levels[0].gens]
        else:
            gens = [Permutation.identity(self.degree)]
        return PermGroup._with_chain(gens, suffix)

    def suborbits(self, alpha: int) -> list:
        """Orbits of the stabilizer of alpha on the domain; {alpha} first."""
        if not self.is_transitive():
            raise ValueError("suborbits are defined for transitive groups only")
        stab = self.point_stabilizer(alpha)
        orbs = stab.orbits()
        return [[alpha]] + [o for o in orbs if o != [alpha]]

    def is_self_paired(self, alpha: int, beta: int) -> bool:
        """Whether the orbital of (alpha, beta) also contains (beta, alpha)."""
        if alpha == beta:
            raise ValueError("self-pairing needs two distinct points")
        start = (alpha, beta)
        target = (beta, alpha)
        seen = {start}
        queue = deque([start])
        arrs = [g._img for g in self.generators]
        while queue:
            a, b = queue.popleft()
            for arr in arrs:
                pair = (int(arr[a]), int(arr[b]))
                if pair == target:
                    return True
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        return False

    def orbital(self, alpha: int, beta: int) -> set:
        """The orbit of the ordered pair (alpha, beta) on the square."""
        start = (alpha, beta)
        seen = {start}
        queue = deque([start])
        arrs = [g._img for g in self.generators]
        while queue:
            a, b = queue.popleft()
            for arr in arrs:
                pair = (int(arr[a]), int(arr[b]))
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        return seen

    def transitivity_grade(self, k_max: int = 6) -> int:
        """Largest k <= k_max with the group k-transitive (0 if intransitive).

        Decided by orbit arithmetic: k-transitivity holds iff the orbit of
        the tuple (0, ..., k-1) has size n(n-1)...(n-k+1).
        """
        n = self.degree
        k_max = max(0, min(k_max, n))
        if k_max == 0:
            return 0
        lens = self.chain_with_base(tuple(range(k_max))).orbit_lengths()
        grade = 0
        orbit_prod = 1
        tuples = 1
        for k in range(1, k_max + 1):
            orbit_prod *= lens[k - 1]
            tuples *= n - (k - 1)
            if orbit_prod != tuples:
                break
            grade = k
        return grade

    def is_semiregular(self) -> bool:
        order = self.order()
        return all(len(o) == order for o in self.orbits())

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    def is_sharply_2transitive(self) -> bool:
        n = self.degree
        return self.order() == n * (n - 1) and self.transitivity_grade(2) >= 2

    def even_subgroup(self) -> "PermGroup":
        """The intersection with the alternating group on the domain.

        With an odd generator t present, the index-2 kernel of the sign map
        is generated by the Schreier generators of the {id, t} transversal.
        """
        odd = [g for g in self.generators if not g.is_even()]
        if not odd:
            return self
        t = odd[0]
        t_inv = t.inverse()
        gens = []
        seen = set()
        for s in self.generators:
            for cand in ((s if s.is_even() else s * t_inv),
                         (t * s * t_inv if s.is_even() else t * s)):
                if not cand.is_identity() and cand not in seen:
                    seen.add(cand)
                    gens.append(cand)
        if not gens:
            gens = [Permutation.identity(self.degree)]
        return PermGroup(gens, name=(f"even({self.name})" if self.name else None),
                         _known_order=self.order() // 2)

    def elements(self):
        """Iterate all elements in chain-transversal product order."""
        for arr in self.chain.elements_arrays():
            yield Permutation._wrap(arr)

    def conjugate_by(self, g: Permutation) -> "PermGroup":
        return PermGroup([x.conjugate(g) for x in self.generators])

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def to_json(self) -> str:
        obj = {"degree": self.degree,
               "generators": [list(g.images) for g in self.generators]}
        if self.name:
            obj["name"] = self.name
        return json.dumps(obj, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PermGroup":
        obj = json.loads(text)
        degree = int(obj["degree"])
        gens = [Permutation(images) for images in obj["generators"]]
        if not gens:
            gens = [Permutation.identity(degree)]
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree disagrees with declared degree")
        return cls(gens, name=obj.get("name"))

    def __repr__(self):
        label = self.name or f"{len(self.generators)} generators"
        return f"PermGroup({label}, degree={self.degree})"


# ---------------------------------------------------------------------------
# predicates and brute-force subgroup machinery
# ---------------------------------------------------------------------------

def normalizes(x: Permutation, K: PermGroup) -> bool:
    """Whether x^-1 * k * x stays in K for every generator k of K."""
    if x.degree != K.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {K.degree}")
    x_inv = x.inverse()
    return all(K.contains(x_inv * k * x) for k in K.generators)


class _GrowingGroup:
    """Accumulates filtered elements into a subgroup, skipping known members."""

    def __init__(self, degree: int):
        self.degree = degree
        self.group: PermGroup | None = None

    def add(self, x: Permutation):
        if x.is_identity():
            return
        if self.group is None:
            self.group = PermGroup([x])
        elif not self.group.contains(x):
            self.group = PermGroup(self.group.generators + (x,))

    def result(self, name=None) -> PermGroup:
        if self.group is None:
            return PermGroup.trivial(self.degree)
        if name:
            self.group.name = name
        return self.group


def normalizer_bruteforce(G: PermGroup, K: PermGroup, cap: int = 10**6) -> PermGroup:
    """Nor_G(K) by filtering an exhaustive enumeration of G."""
    order = G.order()
    if order > cap:
        raise CapExceeded(f"normalizer_bruteforce: |G| = {order} exceeds cap {cap}")
    acc = _GrowingGroup(G.degree)
    for x in G.elements():
        if normalizes(x, K):
            acc.add(x)
    return acc.result(name="normalizer")


def conjugate_intersection(K: PermGroup, g: Permutation, cap: int = 10**6) -> PermGroup:
    """K ∩ K^g by streaming the elements of K (|K| must fit under cap)."""
    order = K.order()
    if order > cap:
        raise CapExceeded(f"conjugate_intersection: |K| = {order} exceeds cap {cap}")
    g_arr = g._img
    g_inv_arr = g.inverse()._img
    chain = K.chain
    acc = _GrowingGroup(K.degree)
    for arr in chain.elements_arrays():
        # k in K^g  <=>  g k g^-1 in K; the product g*k*g^-1 applies g first
        conj = g_inv_arr[arr[g_arr]]
        residue, _ = chain.sift_array(conj)
        if residue is None:
            acc.add(Permutation._wrap(arr.copy()))
    return acc.result(name="K ∩ K^g")


# ---------------------------------------------------------------------------
# coset spaces
# ---------------------------------------------------------------------------

class CosetSpace:
    """Right cosets [G:K] with canonical representatives.

    The canonical representative of Kx is the element of the coset whose
    base-image sequence under descent through K's stabilizer chain is
    lexicographically minimal; it is found greedily, one chain level at a
    time, in time polynomial in the degree and chain depth.
    """

    def __init__(self, ambient: PermGroup, subgroup: PermGroup, cap: int):
        if subgroup.degree != ambient.degree:
            raise ValueError("subgroup degree differs from ambient degree")
        if not subgroup.is_subgroup_of(ambient):
            raise ValueError("K is not a subgroup of G (a generator fails membership)")
        index, rem = divmod(ambient.order(), subgroup.order())
        if rem:
            raise RuntimeError("group order not divisible by subgroup order")
        if index > cap:
            raise CapExceeded(f"coset space index {index} exceeds cap {cap}")
        self.ambient = ambient
        self.subgroup = subgroup
        self._descent = [
            (np.array(lv.pts, dtype=DTYPE), lv) for lv in subgroup.chain._levels
        ]

        rep0 = self.canonical(Permutation.identity(ambient.degree))
        self.reps: list = [rep0]
        self.index_of: dict = {rep0._img.tobytes(): 0}
        gen_arrs = [g._img for g in ambient.generators]
        images = [[] for _ in gen_arrs]
        i = 0
        while i < len(self.reps):
            x_arr = self.reps[i]._img
            for j, arr in enumerate(gen_arrs):
                y = self.canonical(Permutation._wrap(arr[x_arr]))
                key = y._img.tobytes()
                idx = self.index_of.get(key)
                if idx is None:
                    idx = len(self.reps)
                    if idx >= index:
                        raise RuntimeError("coset enumeration exceeded the index")
                    self.reps.append(y)
                    self.index_of[key] = idx
                images[j].append(idx)
            i += 1
        if len(self.reps) != index:
            raise RuntimeError(
                f"coset enumeration found {len(self.reps)} cosets, expected {index}")
        self.generator_images = tuple(
            Permutation(np.array(im, dtype=DTYPE)) for im in images)

    def canonical(self, x: Permutation) -> Permutation:
        """Canonical representative of the coset K*x."""
        arr = x._img
        for pts, lv in self._descent:
            best = int(np.argmin(arr[pts]))
            u = lv.tvsl[lv.orbit[int(pts[best])]]
            arr = arr[u]  # u acts first: the new representative is u*x
        return Permutation._wrap(arr)

    def index(self, x: Permutation) -> int:
        key = self.canonical(x)._img.tobytes()
        idx = self.index_of.get(key)
        if idx is None:
            raise RuntimeError("coset representative missing; space is corrupt")
        return idx

    def act(self, perms) -> list:
        """Images of arbitrary ambient elements on the coset indices."""
        out = []
        for h in perms:
            arr = h._img
            images = np.empty(len(self.reps), dtype=DTYPE)
            for i, x in enumerate(self.reps):
                images[i] = self.index(Permutation._wrap(arr[x._img]))
            out.append(Permutation(images))
        return out

    def __len__(self) -> int:
        return len(self.reps)


def coset_space(G: PermGroup, K: PermGroup, cap: int = 10**5) -> CosetSpace:
    """The right coset space [G:K] with the induced action of G's generators."""
    return CosetSpace(G, K, cap)
