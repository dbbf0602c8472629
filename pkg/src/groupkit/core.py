"""Finite groups as explicit Cayley tables, plus element-level queries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

DEFAULT_SIZE_CAP = 4096


class SizeCapError(Exception):
    """A construction or enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class GroupTable:
    """A finite group stored as a full multiplication table.

    Elements are dense indices 0..order-1 and mul[a][b] is the index of a*b.
    Constructors in this package put the identity at index 0, but every query
    honours the stored identity field, so relabeled tables stay valid.
    elem_names are display-only and never affect semantics.
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    elem_names: tuple[str, ...]

    def name_of(self, x: int) -> str:
        return self.elem_names[x]

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order})"


@dataclass(frozen=True)
class Morphism:
    """A map between two groups, stored as an image array over source indices."""

    source: GroupTable
    target: GroupTable
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_homomorphism(self) -> bool:
        src, tgt, img = self.source, self.target, self.image
        if img[src.identity] != tgt.identity:
            return False
        tmul = tgt.mul
        for a in range(src.order):
            ta = tmul[img[a]]
            if [img[x] for x in src.mul[a]] != [ta[w] for w in img]:
                return False
        return True

    def is_bijective(self) -> bool:
        return (
            self.source.order == self.target.order
            and len(set(self.image)) == self.source.order
        )

    def is_isomorphism(self) -> bool:
        return self.is_bijective() and self.is_homomorphism()


def identity_morphism(g: GroupTable) -> Morphism:
    return Morphism(g, g, tuple(range(g.order)))


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """outer after inner: x -> outer(inner(x))."""
    if inner.target != outer.source:
        raise ValueError("composition mismatch: inner.target != outer.source")
    oi = outer.image
    return Morphism(inner.source, outer.target, tuple(oi[x] for x in inner.image))


@dataclass(frozen=True)
class SubgroupRef:
    """A subgroup of `parent`, stored as a sorted tuple of element indices."""

    parent: GroupTable
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", mem)
        g = self.parent
        inside = set(mem)
        if g.identity not in inside:
            raise ValueError("subgroup must contain the identity")
        for a in mem:
            if not 0 <= a < g.order:
                raise ValueError(f"element index {a} out of range")
            if g.inv[a] not in inside:
                raise ValueError(f"not closed under inverse at element {a}")
            for b in mem:
                if g.mul[a][b] not in inside:
                    raise ValueError(f"not closed under product at ({a}, {b})")

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of verify_group_axioms: ok, or the first violated axiom."""

    ok: bool
    axiom: str | None = None  # dimensions|closure|identity|inverses|associativity
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


TableCandidate = Union[GroupTable, Sequence[Sequence[int]]]


def verify_group_axioms(candidate: TableCandidate, identity: int | None = None) -> AxiomVerdict:
    """Check closure, identity, inverses and associativity on a raw table.

    Accepts a GroupTable (its claimed identity/inv are verified) or a bare
    mul array. Returns the first violated axiom with a concrete witness;
    malformed dimensions are reported distinctly from axiom failures.
    """
    claimed_inv = None
    if isinstance(candidate, GroupTable):
        mul = candidate.mul
        identity = candidate.identity
        claimed_inv = candidate.inv
        n = candidate.order
        if len(mul) != n:
            return AxiomVerdict(False, "dimensions", (len(mul),),
                                f"order says {n} but mul has {len(mul)} rows")
    else:
        mul = candidate
        n = len(mul)
    for i, row in enumerate(mul):
        if len(row) != n:
            return AxiomVerdict(False, "dimensions", (i,),
                                f"row {i} has length {len(row)}, expected {n}")
    for a in range(n):
        for b in range(n):
            v = mul[a][b]
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                return AxiomVerdict(False, "closure", (a, b),
                                    f"mul[{a}][{b}] = {v!r} is not an element index")

    if identity is None:
        identity = next((e for e in range(n)
                         if all(mul[e][x] == x and mul[x][e] == x for x in range(n))), None)
        if identity is None:
            return AxiomVerdict(False, "identity", None, "no two-sided identity exists")
    else:
        if not 0 <= identity < n:
            return AxiomVerdict(False, "identity", (identity,), "identity index out of range")
        for x in range(n):
            if mul[identity][x] != x or mul[x][identity] != x:
                return AxiomVerdict(False, "identity", (identity, x),
                                    f"mul[{identity}][{x}] or mul[{x}][{identity}] != {x}")

    for x in range(n):
        if claimed_inv is not None:
            y = claimed_inv[x]
            if not 0 <= y < n or mul[x][y] != identity or mul[y][x] != identity:
                return AxiomVerdict(False, "inverses", (x, y),
                                    f"claimed inverse {y} of {x} fails")
        elif not any(mul[x][y] == identity and mul[y][x] == identity for y in range(n)):
            return AxiomVerdict(False, "inverses", (x,), f"element {x} has no two-sided inverse")

    for a in range(n):
        ra = mul[a]
        for b in range(n):
            ab = ra[b]
            rb = mul[b]
            rab = mul[ab]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return AxiomVerdict(False, "associativity", (a, b, c),
                                        f"(a*b)*c != a*(b*c) at a={a}, b={b}, c={c}")
    return AxiomVerdict(True)


def make_table(mul: Sequence[Sequence[int]], names: Sequence[str] | None = None,
               identity: int | None = None) -> GroupTable:
    """Build a GroupTable from a mul array, deriving identity and inverses.

    Performs cheap identity/inverse validation only; run verify_group_axioms
    for the full (cubic-time) axiom check.
    """
    n = len(mul)
    rows = tuple(tuple(r) for r in mul)
    if any(len(r) != n for r in rows):
        raise ValueError("mul array is not square")
    if identity is None:
        identity = next((e for e in range(n)
                         if all(rows[e][x] == x and rows[x][e] == x for x in range(n))), None)
        if identity is None:
            raise ValueError("table has no two-sided identity")
    inv = []
    for x in range(n):
        y = next((y for y in range(n) if rows[x][y] == identity and rows[y][x] == identity), None)
        if y is None:
            raise ValueError(f"element {x} has no two-sided inverse")
        inv.append(y)
    if names is None:
        names = tuple(f"g{i}" for i in range(n))
    return GroupTable(n, rows, identity, tuple(inv), tuple(names))


def element_order(g: GroupTable, x: int) -> int:
    if not 0 <= x < g.order:
        raise IndexError(f"element index {x} out of range for order-{g.order} group")
    k, y = 1, x
    while y != g.identity:
        y = g.mul[y][x]
        k += 1
    return k


def element_orders(g: GroupTable) -> list[int]:
    return [element_order(g, x) for x in range(g.order)]


def order_spectrum(g: GroupTable) -> dict[int, int]:
    """Map each element order to its multiplicity; an isomorphism invariant."""
    spec: dict[int, int] = {}
    for x in range(g.order):
        d = element_order(g, x)
        spec[d] = spec.get(d, 0) + 1
    return dict(sorted(spec.items()))


def is_abelian(g: GroupTable) -> bool:
    mul = g.mul
    return all(mul[a][b] == mul[b][a] for a in range(g.order) for b in range(a + 1, g.order))


def center(g: GroupTable) -> SubgroupRef:
    mul = g.mul
    members = [a for a in range(g.order)
               if all(mul[a][b] == mul[b][a] for b in range(g.order))]
    return SubgroupRef(g, tuple(members))


def subgroup_generated(g: GroupTable, gens: Iterable[int]) -> SubgroupRef:
    closure = {g.identity}
    frontier = [g.identity]
    gens = [x for x in gens]
    for x in gens:
        if not 0 <= x < g.order:
            raise IndexError(f"generator index {x} out of range")
    mul = g.mul
    todo = list(gens)
    while todo:
        x = todo.pop()
        if x in closure:
            continue
        closure.add(x)
        new = [x]
        while new:
            a = new.pop()
            for b in list(closure):
                for p in (mul[a][b], mul[b][a]):
                    if p not in closure:
                        closure.add(p)
                        new.append(p)
    return SubgroupRef(g, tuple(sorted(closure)))


def is_subgroup(g: GroupTable, members: Iterable[int]) -> bool:
    try:
        SubgroupRef(g, tuple(members))
    except ValueError:
        return False
    return True


def is_normal(g: GroupTable, h: SubgroupRef) -> bool:
    if h.parent != g:
        raise ValueError("subgroup belongs to a different parent group")
    mem = set(h.members)
    mul, inv = g.mul, g.inv
    for x in range(g.order):
        xi = inv[x]
        for a in h.members:
            if mul[mul[x][a]][xi] not in mem:
                return False
    return True


def quotient(g: GroupTable, n: SubgroupRef) -> GroupTable:
    """G/N for a normal subgroup N; cosets reindexed with [e] first."""
    if not is_normal(g, n):
        raise ValueError("quotient requires a normal subgroup")
    mul = g.mul
    coset_of: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for x in range(g.order):
        if x in coset_of:
            continue
        cs = tuple(sorted(mul[x][a] for a in n.members))
        for y in cs:
            coset_of[y] = len(cosets)
        cosets.append(cs)
    # canonical order: identity coset first, the rest sorted by member tuple
    order_key = sorted(range(len(cosets)),
                       key=lambda i: (g.identity not in cosets[i], cosets[i]))
    renum = {old: new for new, old in enumerate(order_key)}
    cosets = [cosets[i] for i in order_key]
    coset_of = {x: renum[i] for x, i in coset_of.items()}
    q = len(cosets)
    qmul = tuple(tuple(coset_of[mul[cs[0]][ct[0]]] for ct in cosets) for cs in cosets)
    names = tuple(f"[{g.elem_names[cs[0]]}]" for cs in cosets)
    return make_table(qmul, names, identity=0)


def subgroup_table(g: GroupTable, members: Iterable[int]) -> tuple[GroupTable, tuple[int, ...]]:
    """Extract a subgroup as its own GroupTable.

    Returns (table, embed) where embed maps new indices to parent indices;
    the identity lands at new index 0.
    """
    ref = SubgroupRef(g, tuple(members))
    embed = [g.identity] + [x for x in ref.members if x != g.identity]
    back = {x: i for i, x in enumerate(embed)}
    mul = tuple(tuple(back[g.mul[a][b]] for b in embed) for a in embed)
    names = tuple(g.elem_names[x] for x in embed)
    return make_table(mul, names, identity=0), tuple(embed)


def kernel(m: Morphism) -> SubgroupRef:
    e = m.target.identity
    return SubgroupRef(m.source, tuple(x for x in range(m.source.order) if m.image[x] == e))


def image_subgroup(m: Morphism) -> SubgroupRef:
    return SubgroupRef(m.target, tuple(sorted(set(m.image))))


def to_json_dict(g: GroupTable) -> dict:
    """Cayley-table JSON shape: order / identity / mul / names."""
    return {
        "order": g.order,
        "identity": g.identity,
        "mul": [list(row) for row in g.mul],
        "names": list(g.elem_names),
    }
