"""Categorical constructions on finite posets: discrete and improper
orders, the reflector onto posets, products, coproducts, quotient objects,
factorization of surjections, pushouts of order-embeddings, equalizers, and
cokernel pairs.

Conventions fixed here and relied on everywhere else:

* the two-copy carrier of ``X + Y`` lists all tag-0 elements first (in
  carrier order), then all tag-1 elements; ``(x, i)`` is labeled ``"x:i"``;
* quotient classes are labeled by their sorted member labels joined with
  ``'+'`` and ordered by their least member index, so identical inputs give
  byte-identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    Carrier,
    MonotoneMap,
    Poset,
    Preorder,
    Relation,
    _transitivity_witness,
    require_embedding,
    require_monotone,
    symmetrize,
)


class PushoutInvariantError(RuntimeError):
    """The glued pre-order of a pushout of embeddings failed an invariant
    that the construction guarantees (transitivity of the union of the
    same-side and crossing parts, or glue classes larger than two). This
    should never fire; if it does it falsifies the construction."""


def delta(s: Carrier) -> Poset:
    """Discrete order: only the diagonal."""
    return Poset(Relation.diagonal(s))


def nabla(s: Carrier) -> Preorder:
    """Improper order: the full relation."""
    return Preorder(Relation.full(s))


def tag_label(label: str, i: int) -> str:
    return f"{label}:{i}"


def tagged_carrier(left: Carrier, right: Carrier) -> Carrier:
    """Disjoint-union carrier: tag-0 block then tag-1 block."""
    return Carrier(
        tuple(tag_label(x, 0) for x in left) + tuple(tag_label(y, 1) for y in right)
    )


def coproduct(x: Poset, y: Poset) -> Poset:
    """Disjoint union with the block-diagonal order: same-tag pairs only."""
    n0 = x.carrier.size
    rows = tuple(r for r in x.rel.rows) + tuple(r << n0 for r in y.rel.rows)
    return Poset(Relation(tagged_carrier(x.carrier, y.carrier), rows))


def double(x: Poset) -> Poset:
    """The coproduct of a poset with itself; element (x, i) sits at index
    i*n + x."""
    return coproduct(x, x)


def pair_index(n: int, x: int, i: int) -> int:
    return i * n + x


def product(x: Poset, y: Poset) -> Poset:
    """Componentwise order on the product carrier, left-then-right ordering."""
    n1 = y.carrier.size
    labels = tuple(f"({a},{b})" for a in x.carrier for b in y.carrier)
    rows = []
    for ra in x.rel.rows:
        for rb in y.rel.rows:
            row = 0
            bits = ra
            while bits:
                low = bits & -bits
                row |= rb << ((low.bit_length() - 1) * n1)
                bits ^= low
            rows.append(row)
    return Poset(Relation(Carrier(labels), tuple(rows)))


def _class_label(members: Iterable[str]) -> str:
    return "+".join(sorted(members))


def reflect(p: Preorder) -> tuple[Poset, MonotoneMap]:
    """Collapse the symmetrization of a pre-order to get its poset quotient.

    Returns the quotient together with the projection; the projection
    satisfies x <= y in the input iff its values are ordered in the output.
    """
    n = p.carrier.size
    sym = symmetrize(p).rows
    reps: list[int] = []
    cls_of = [0] * n
    for i in range(n):
        low = (sym[i] & -sym[i]).bit_length() - 1
        if low == i:
            cls_of[i] = len(reps)
            reps.append(i)
        else:
            cls_of[i] = cls_of[low]
    labels = tuple(
        _class_label(p.carrier.label(j) for j in _bits(sym[r])) for r in reps
    )
    rows = []
    for r in reps:
        row = 0
        for j in _bits(p.rel.rows[r]):
            row |= 1 << cls_of[j]
        rows.append(row)
    quotient = Poset(Relation(Carrier(labels), tuple(rows)))
    rho = MonotoneMap(p, quotient, tuple(cls_of))
    return quotient, rho


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class QuotientObject:
    """Canonical representative of a quotient object: a pre-order on the
    source carrier extending the source order."""

    source: Poset
    preord: Preorder

    def __post_init__(self) -> None:
        if self.preord.carrier != self.source.carrier:
            raise ValueError("pre-order lives on a different carrier than the source")
        if not self.source.rel.is_subrelation(self.preord.rel):
            raise ValueError("pre-order does not extend the source order")


def preorder_of_map(f: MonotoneMap) -> QuotientObject:
    """The pre-order pulled back through a map: x1 below x2 whenever their
    images are ordered. Extends the source order exactly because the map is
    monotone; surjectivity is not needed."""
    require_monotone(f)
    source = f.dom
    if not isinstance(source, Poset):
        raise TypeError("quotient objects are taken over a poset source")
    cod_rows, t = f.cod.rel.rows, f.table
    n = source.carrier.size
    rows = []
    for i in range(n):
        row = 0
        ti = cod_rows[t[i]]
        for j in range(n):
            if ti >> t[j] & 1:
                row |= 1 << j
        rows.append(row)
    return QuotientObject(source, Preorder(Relation(source.carrier, tuple(rows))))


def quotient_of_preorder(q: QuotientObject) -> tuple[Poset, MonotoneMap]:
    """The surjection onto the poset quotient of the pre-order; inverse to
    preorder_of_map up to the canonical labeling."""
    quotient, rho = reflect(q.preord)
    return quotient, MonotoneMap(q.source, quotient, rho.table)


@dataclass(frozen=True)
class FactorObstruction:
    """Witness pair (x, y) with f1(x) <= f1(y) but f2(x) !<= f2(y)."""

    witness: tuple[str, str]

    def __bool__(self) -> bool:
        return False


def factor_through(f1: MonotoneMap, f2: MonotoneMap) -> MonotoneMap | FactorObstruction:
    """The unique g with g . f1 = f2, when it exists.

    f1 must be surjective. g exists iff f1(x) <= f1(y) always implies
    f2(x) <= f2(y); otherwise the violating pair is returned.
    """
    if f1.dom.carrier != f2.dom.carrier:
        raise ValueError("maps must share their domain")
    if len(set(f1.table)) != f1.cod.carrier.size:
        raise ValueError("factor_through requires a surjective first map")
    n = f1.dom.carrier.size
    r1, r2 = f1.cod.rel.rows, f2.cod.rel.rows
    for x in range(n):
        for y in range(n):
            if r1[f1.table[x]] >> f1.table[y] & 1 and not r2[f2.table[x]] >> f2.table[y] & 1:
                labs = f1.dom.carrier.elements
                return FactorObstruction((labs[x], labs[y]))
    table = [0] * f1.cod.carrier.size
    seen = [False] * f1.cod.carrier.size
    for x in range(n):
        w = f1.table[x]
        if not seen[w]:
            table[w] = f2.table[x]
            seen[w] = True
    g = MonotoneMap(f1.cod, f2.cod, tuple(table))
    assert tuple(g.table[v] for v in f1.table) == f2.table
    return g


@dataclass(frozen=True)
class PushoutResult:
    apex: Poset
    ins0: MonotoneMap
    ins1: MonotoneMap
    glue_classes: tuple[tuple[str, ...], ...]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _glue(f0: MonotoneMap, f1: MonotoneMap) -> tuple[Carrier, list[int], tuple[tuple[str, ...], ...]]:
    """Quotient carrier of cod(f0) + cod(f1) identifying f0(x) with f1(x).

    Returns the class carrier, the class index of every disjoint-union
    index (tag-0 block first), and the classes as label tuples. Because the
    legs are embeddings every class has at most two members; that is
    asserted, not assumed.
    """
    n0, n1 = f0.cod.carrier.size, f1.cod.carrier.size
    labels = [tag_label(x, 0) for x in f0.cod.carrier] + [
        tag_label(y, 1) for y in f1.cod.carrier
    ]
    uf = _UnionFind(n0 + n1)
    for x in range(f0.dom.carrier.size):
        uf.union(f0.table[x], n0 + f1.table[x])
    members: dict[int, list[int]] = {}
    for k in range(n0 + n1):
        members.setdefault(uf.find(k), []).append(k)
    roots = sorted(members, key=lambda r: min(members[r]))
    cls_of = [0] * (n0 + n1)
    classes = []
    class_labels = []
    for pos, r in enumerate(roots):
        ms = members[r]
        if len(ms) > 2:
            raise PushoutInvariantError(
                f"glue class with more than two members: {[labels[k] for k in ms]}"
            )
        for k in ms:
            cls_of[k] = pos
        membs = tuple(sorted(labels[k] for k in ms))
        classes.append(membs)
        class_labels.append(_class_label(membs))
    return Carrier(tuple(class_labels)), cls_of, tuple(classes)


def pushout_embeddings(f0: MonotoneMap, f1: MonotoneMap) -> PushoutResult:
    """Pushout of a cospan of order-embeddings sharing a domain.

    The glued carrier identifies the two images of each domain point. Its
    pre-order is the union of the same-side image pairs with the crossing
    pairs that pass through a glue point: p below q when a representative
    of p sits below the gluing image of some x on its own side while the
    other side's image of x sits below a representative of q. That union
    is already transitive for embeddings; the construction asserts this
    rather than closing, then reflects onto a poset.

    Only defined for cospans of embeddings; anything else is rejected.
    """
    if f0.dom.carrier != f1.dom.carrier or f0.dom.rel != f1.dom.rel:
        raise ValueError("pushout legs must share their domain")
    require_embedding(f0, "pushout leg f0")
    require_embedding(f1, "pushout leg f1")
    carrier, cls_of, classes = _glue(f0, f1)
    n0 = f0.cod.carrier.size
    m = carrier.size
    rows = [0] * m
    sides = (f0, f1)
    # same-side pairs
    for i, f in enumerate(sides):
        off = 0 if i == 0 else n0
        for w, row in enumerate(f.cod.rel.rows):
            for wp in _bits(row):
                rows[cls_of[off + w]] |= 1 << cls_of[off + wp]
    # crossing pairs through a glue point
    nx = f0.dom.carrier.size
    for i, f in enumerate(sides):
        g = sides[1 - i]
        off_f = 0 if i == 0 else n0
        off_g = n0 if i == 0 else 0
        for x in range(nx):
            below = [w for w in range(f.cod.carrier.size) if f.cod.rel.has(w, f.table[x])]
            above = g.cod.rel.rows[g.table[x]]
            for w in below:
                for wp in _bits(above):
                    rows[cls_of[off_f + w]] |= 1 << cls_of[off_g + wp]
    rel = Relation(carrier, tuple(rows))
    bad = _transitivity_witness(rel.rows)
    if bad is not None:
        labs = tuple(carrier.label(k) for k in bad)
        raise PushoutInvariantError(f"glued pre-order not transitive, witness {labs}")
    apex, rho = reflect(Preorder(rel))
    ins0 = MonotoneMap(f0.cod, apex, tuple(rho.table[cls_of[w]] for w in range(n0)))
    ins1 = MonotoneMap(
        f1.cod, apex, tuple(rho.table[cls_of[n0 + w]] for w in range(f1.cod.carrier.size))
    )
    return PushoutResult(apex, ins0, ins1, classes)


def subset_poset(x: Poset, indices: Iterable[int]) -> tuple[Poset, MonotoneMap]:
    """Sub-poset on a subset of the carrier with the induced order, plus
    the inclusion (always an order-embedding)."""
    keep = sorted(set(indices))
    labels = tuple(x.carrier.label(i) for i in keep)
    pos = {i: p for p, i in enumerate(keep)}
    rows = tuple(
        sum(1 << pos[j] for j in _bits(x.rel.rows[i]) if j in pos) for i in keep
    )
    sub = Poset(Relation(Carrier(labels), rows))
    return sub, MonotoneMap(sub, x, tuple(keep))


def equalizer(q0: MonotoneMap, q1: MonotoneMap) -> MonotoneMap:
    """The embedded part of the domain where both maps agree."""
    if q0.dom.carrier != q1.dom.carrier or q0.cod.carrier != q1.cod.carrier:
        raise ValueError("equalizer needs a parallel pair")
    if not isinstance(q0.dom, Poset):
        raise TypeError("equalizer is taken over a poset domain")
    keep = [x for x in range(q0.dom.carrier.size) if q0.table[x] == q1.table[x]]
    _, incl = subset_poset(q0.dom, keep)
    return incl


def subset_corelation_rows(x: Poset, subset_mask: int) -> tuple[int, ...]:
    """Rows (on the two-copy carrier of x) of the pre-order induced by a
    subset Y: same-tag pairs follow the order of x, and a cross pair holds
    exactly when some member of Y interpolates between its endpoints."""
    n = x.carrier.size
    up = x.rel.rows
    rows = [0] * (2 * n)
    for a in range(n):
        through = 0
        zbits = up[a] & subset_mask
        while zbits:
            low = zbits & -zbits
            through |= up[low.bit_length() - 1]
            zbits ^= low
        for i in (0, 1):
            rows[i * n + a] = (up[a] << (i * n)) | (through << ((1 - i) * n))
    return tuple(rows)


def cokernel_pair(k: MonotoneMap) -> QuotientObject:
    """Quotient object of X + X obtained by pushing an embedding out along
    itself. Computed twice, from the interpolation formula and from the
    pushout construction; the two must coincide and that is checked on
    every call."""
    require_embedding(k, "cokernel pair input")
    x = k.cod
    if not isinstance(x, Poset):
        raise TypeError("cokernel pairs are taken over a poset")
    n = x.carrier.size
    subset_mask = 0
    for v in k.table:
        subset_mask |= 1 << v
    formula_rows = subset_corelation_rows(x, subset_mask)

    po = pushout_embeddings(k, k)
    binom = MonotoneMap(
        double(x),
        po.apex,
        tuple(po.ins0.table) + tuple(po.ins1.table),
    )
    via_pushout = preorder_of_map(binom).preord.rel.rows
    if via_pushout != formula_rows:
        raise PushoutInvariantError(
            "cokernel pair mismatch between formula and pushout routes"
        )
    dbl = double(x)
    return QuotientObject(dbl, Preorder(Relation(dbl.carrier, formula_rows)))
