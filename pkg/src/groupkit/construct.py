"""Group constructors: cyclic, dihedral, direct and semidirect products.

Product groups use the pair encoding (k, h) -> k*|H| + h, so the K-copy
sits at indices {k*|H|} and the H-copy at {0..|H|-1}. A semidirect product
with the trivial action produces a table identical to the direct product,
not merely isomorphic to it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import aut as _aut
from .core import (
    DEFAULT_SIZE_CAP,
    GroupTable,
    Morphism,
    SizeCapError,
    SubgroupRef,
    compose,
    identity_morphism,
    is_normal,
    make_table,
    subgroup_generated,
    subgroup_table,
)
from ._search import generating_sequence, search_morphisms


@dataclass(frozen=True)
class Action:
    """A group H acting on K by automorphisms: maps[h] is what h does to K.

    Fully validated at construction: each map must be an automorphism of K,
    the identity of H must act trivially, and maps[h1*h2] must equal
    maps[h1] after maps[h2].
    """

    h_group: GroupTable
    k_group: GroupTable
    maps: tuple[Morphism, ...]

    def __post_init__(self):
        h, k = self.h_group, self.k_group
        if len(self.maps) != h.order:
            raise ValueError("need exactly one automorphism per element of H")
        for i, m in enumerate(self.maps):
            if m.source != k or m.target != k:
                raise ValueError(f"maps[{i}] is not a self-map of K")
            if not m.is_isomorphism():
                raise ValueError(f"maps[{i}] is not an automorphism of K")
        ident = tuple(range(k.order))
        if self.maps[h.identity].image != ident:
            raise ValueError("identity of H must act trivially")
        for a in range(h.order):
            ia = self.maps[a].image
            for b in range(h.order):
                ib = self.maps[b].image
                expect = self.maps[h.mul[a][b]].image
                if any(expect[x] != ia[ib[x]] for x in range(k.order)):
                    raise ValueError(
                        f"action is not a homomorphism: maps[{a}*{b}] != maps[{a}] o maps[{b}]")

    def is_trivial(self) -> bool:
        ident = tuple(range(self.k_group.order))
        return all(m.image == ident for m in self.maps)


@dataclass(frozen=True)
class SplitWitness:
    """Evidence that G splits as normal_part x| complement.

    `iso` maps the reconstructed semidirect product (pair encoding) onto G.
    """

    normal_part: SubgroupRef
    complement: SubgroupRef
    action: Action
    iso: Morphism


def trivial_action(h_group: GroupTable, k_group: GroupTable) -> Action:
    ident = identity_morphism(k_group)
    return Action(h_group, k_group, tuple(ident for _ in range(h_group.order)))


def cyclic(n: int, gen: str = "r", size_cap: int = DEFAULT_SIZE_CAP) -> GroupTable:
    """Z_n with elements 0..n-1 named e, gen, gen^2, ..."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    if n > size_cap:
        raise SizeCapError(f"order {n} exceeds size cap {size_cap}")
    mul = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    names = ["e"]
    if n > 1:
        names.append(gen)
        names.extend(f"{gen}^{i}" for i in range(2, n))
    return make_table(mul, names, identity=0)


def _pair_names(k: GroupTable, h: GroupTable) -> tuple[str, ...]:
    names = []
    for kk in range(k.order):
        for hh in range(h.order):
            if kk == k.identity and hh == h.identity:
                names.append(k.elem_names[k.identity])
            elif hh == h.identity:
                names.append(k.elem_names[kk])
            elif kk == k.identity:
                names.append(h.elem_names[hh])
            else:
                names.append(f"{k.elem_names[kk]}·{h.elem_names[hh]}")
    return tuple(names)


def semidirect(k: GroupTable, h: GroupTable, action: Action,
               size_cap: int = DEFAULT_SIZE_CAP) -> GroupTable:
    """K x| H with (k1,h1)(k2,h2) = (k1 * h1(k2), h1*h2), pair encoded."""
    if action.k_group != k or action.h_group != h:
        raise ValueError("action does not match the given K and H")
    order = k.order * h.order
    if order > size_cap:
        raise SizeCapError(f"order {order} exceeds size cap {size_cap}")
    no_h, kmul, hmul = h.order, k.mul, h.mul
    images = [m.image for m in action.maps]
    mul = []
    for k1 in range(k.order):
        row_base = kmul[k1]
        for h1 in range(no_h):
            act = images[h1]
            hrow = hmul[h1]
            mul.append(tuple(row_base[act[k2]] * no_h + hrow[h2]
                             for k2 in range(k.order) for h2 in range(no_h)))
    return make_table(mul, _pair_names(k, h), identity=k.identity * no_h + h.identity)


def direct_product(k: GroupTable, h: GroupTable,
                   size_cap: int = DEFAULT_SIZE_CAP) -> GroupTable:
    return semidirect(k, h, trivial_action(h, k), size_cap=size_cap)


def dihedral(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> GroupTable:
    """D_n of order 2n: rotations r and a reflection s with s r s = r^-1."""
    if n < 1:
        raise ValueError(f"dihedral parameter must be >= 1, got {n}")
    k = cyclic(n, "r", size_cap=size_cap)
    h = cyclic(2, "s", size_cap=size_cap)
    inversion = Morphism(k, k, tuple((-x) % n for x in range(n)))
    return semidirect(k, h, Action(h, k, (identity_morphism(k), inversion)),
                      size_cap=size_cap)


def kh_copies(k_order: int, h_order: int, product: GroupTable) -> tuple[SubgroupRef, SubgroupRef]:
    """The K-copy and H-copy of a pair-encoded product as subgroup refs."""
    if product.order != k_order * h_order:
        raise ValueError("product order does not match k_order * h_order")
    kc = SubgroupRef(product, tuple(kk * h_order for kk in range(k_order)))
    hc = SubgroupRef(product, tuple(range(h_order)))
    return kc, hc


def hom_set(h: GroupTable, k: GroupTable, cap: int | None = 100_000) -> list[Morphism]:
    """Every homomorphism H -> K, sorted lexicographically by image array."""
    return [Morphism(h, k, img)
            for img in search_morphisms(h, k, injective=False, exact_order=False, cap=cap)]


def actions(h: GroupTable, k: GroupTable, aut_cap: int = 10_000) -> list[Action]:
    """All actions of H on K, one per homomorphism H -> Aut(K).

    Deterministic order: lexicographic on the underlying arrays of
    Aut(K)-element indices.
    """
    ag = _aut.aut_group(k, cap=aut_cap)
    out = []
    for hom in hom_set(h, ag.table):
        out.append(Action(h, k, tuple(ag.elements[hom.image[x]] for x in range(h.order))))
    return out


def action_classes(h: GroupTable, k: GroupTable, aut_cap: int = 10_000) -> list[list[Action]]:
    """Partition actions(H, K) by precomposition with Aut(H).

    Two actions land in one class when one is the other composed with an
    automorphism of H. Classes are ordered by their smallest member and each
    class is sorted, so the output is deterministic.
    """
    ag = _aut.aut_group(k, cap=aut_cap)
    index_of = {m.image: i for i, m in enumerate(ag.elements)}
    acts = actions(h, k, aut_cap=aut_cap)
    keys = [tuple(index_of[m.image] for m in a.maps) for a in acts]
    by_key = dict(zip(keys, acts))
    h_autos = search_morphisms(h, h, injective=True, exact_order=True)
    classes = []
    remaining = dict(sorted(by_key.items()))
    while remaining:
        seed = next(iter(remaining))
        orbit = {tuple(seed[d[x]] for x in range(h.order)) for d in h_autos}
        classes.append([remaining.pop(key) for key in sorted(orbit) if key in remaining])
    return classes


def holomorph(n: int, size_cap: int = DEFAULT_SIZE_CAP, aut_cap: int = 10_000) -> GroupTable:
    """Z_n x| Aut(Z_n) under the identity action, order n * phi(n)."""
    k = cyclic(n, size_cap=size_cap)
    ag = _aut.aut_group(k, cap=aut_cap)
    return semidirect(k, ag.table, Action(ag.table, k, ag.elements), size_cap=size_cap)


def recognize_split(g: GroupTable, k: SubgroupRef) -> SplitWitness | None:
    """Find a complement H for a normal subgroup K, or None.

    Searches subgroups meeting K trivially by adding generators in ascending
    index order, pruning branches whose partial subgroup cannot sit inside a
    complement. On success returns the conjugation action of H on K and a
    verified isomorphism from the reconstructed semidirect product onto G.
    """
    if k.parent != g:
        raise ValueError("subgroup belongs to a different parent group")
    if not is_normal(g, k):
        raise ValueError("recognize_split requires a normal subgroup")
    n = g.order
    kset = set(k.members)
    q, rem = divmod(n, len(k.members))
    if rem:
        raise ValueError("subgroup size does not divide group order")

    def extend(members: frozenset, start: int) -> frozenset | None:
        if len(members) == q:
            return members
        for x in range(start, n):
            if x in members or x in kset:
                continue
            grown = set(subgroup_generated(g, list(members) + [x]).members)
            if len(grown) > q or q % len(grown) or len(grown & kset) > 1:
                continue
            if len(grown) == q:
                return frozenset(grown)
            found = extend(frozenset(grown), x + 1)
            if found is not None:
                return found
        return None

    comp = extend(frozenset([g.identity]), 0)
    if comp is None:
        return None
    h_ref = SubgroupRef(g, tuple(sorted(comp)))
    k_table, k_embed = subgroup_table(g, k.members)
    h_table, h_embed = subgroup_table(g, h_ref.members)
    k_back = {x: i for i, x in enumerate(k_embed)}
    mul, inv = g.mul, g.inv
    maps = []
    for hh in h_embed:
        hi = inv[hh]
        maps.append(Morphism(k_table, k_table,
                             tuple(k_back[mul[mul[hh][k_embed[x]]][hi]]
                                   for x in range(k_table.order))))
    action = Action(h_table, k_table, tuple(maps))
    product = semidirect(k_table, h_table, action, size_cap=max(n, DEFAULT_SIZE_CAP))
    iso_img = tuple(mul[k_embed[p // h_table.order]][h_embed[p % h_table.order]]
                    for p in range(product.order))
    iso = Morphism(product, g, iso_img)
    if not iso.is_isomorphism():
        raise RuntimeError("internal error: reconstructed product failed verification")
    return SplitWitness(k, h_ref, action, iso)
