"""Finite Birkhoff duality: posets to bounded distributive lattices via
up-sets, back via join-irreducibles, contravariant dual maps, separation of
incomparable points by maps into the 2-chain, and the canonical-form
machinery used for isomorphism tests and unlabeled deduplication.

Up-sets (rather than down-sets) carry the duality here; the down-set
variant is the order-dual of everything below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Carrier,
    MonotoneMap,
    Poset,
    Relation,
    check_poset,
    require_monotone,
    up_closure,
)


class NonDistributiveError(ValueError):
    """Lattice fails distributivity; carries a witnessing label triple."""

    def __init__(self, witness: tuple[str, str, str]):
        super().__init__(
            f"not distributive: meet({witness[0]}, join({witness[1]}, {witness[2]})) "
            f"differs from join of the meets"
        )
        self.witness = witness


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DistLattice:
    """Bounded distributive lattice: order plus explicit meet/join tables.

    Construction verifies that the order is a partial order, that the
    tables really are greatest lower / least upper bounds, and that bot
    and top bound everything. Distributivity is verified by the public
    builders and by every operation that requires it.
    """

    carrier: Carrier
    leq: Relation
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bot: int
    top: int

    def __post_init__(self) -> None:
        p = check_poset(self.leq)
        if not p:
            raise ValueError(f"lattice order invalid: {p.axiom}, witness {p.witness}")
        n = self.carrier.size
        up = self.leq.rows
        down = _down_masks(up)
        full = (1 << n) - 1
        if down[self.bot] != 1 << self.bot or up[self.bot] != full:
            raise ValueError(f"{self.carrier.label(self.bot)!r} is not a least element")
        if down[self.top] != full:
            raise ValueError(f"{self.carrier.label(self.top)!r} is not a greatest element")
        for i in range(n):
            for j in range(n):
                m, v = self.meet[i][j], self.join[i][j]
                common_low = down[i] & down[j]
                if not (common_low >> m & 1) or common_low & ~down[m]:
                    raise ValueError(
                        f"meet table wrong at ({self.carrier.label(i)}, {self.carrier.label(j)})"
                    )
                common_up = up[i] & up[j]
                if not (common_up >> v & 1) or common_up & ~up[v]:
                    raise ValueError(
                        f"join table wrong at ({self.carrier.label(i)}, {self.carrier.label(j)})"
                    )

    @classmethod
    def from_order(cls, carrier: Carrier, leq: Relation) -> "DistLattice":
        """Build the lattice determined by an order, computing meets and
        joins; rejects orders without them and non-distributive lattices
        (with a witnessing triple)."""
        p = check_poset(leq)
        if not p:
            raise ValueError(f"lattice order invalid: {p.axiom}, witness {p.witness}")
        n = carrier.size
        up = leq.rows
        down = _down_masks(up)
        meet = []
        join = []
        for i in range(n):
            mrow = []
            jrow = []
            for j in range(n):
                mrow.append(_extremum(carrier, down[i] & down[j], down, "greatest lower", i, j))
                jrow.append(_extremum(carrier, up[i] & up[j], up, "least upper", i, j))
            meet.append(tuple(mrow))
            join.append(tuple(jrow))
        full = (1 << n) - 1
        bot = next(i for i in range(n) if up[i] == full)
        top = next(i for i in range(n) if down[i] == full)
        lat = cls(carrier, leq, tuple(meet), tuple(join), bot, top)
        w = distributivity_witness(lat)
        if w is not None:
            raise NonDistributiveError(w)
        return lat


def _down_masks(up: tuple[int, ...]) -> tuple[int, ...]:
    down = [0] * len(up)
    for i, row in enumerate(up):
        for j in _bits(row):
            down[j] |= 1 << i
    return tuple(down)


def _extremum(carrier: Carrier, candidates: int, cone: tuple[int, ...], kind: str, i: int, j: int) -> int:
    for c in _bits(candidates):
        if candidates & ~cone[c] == 0:
            return c
    raise ValueError(
        f"no {kind} bound for ({carrier.label(i)}, {carrier.label(j)}): not a lattice"
    )


def distributivity_witness(l: DistLattice) -> tuple[str, str, str] | None:
    """A triple violating meet-over-join distributivity, or None."""
    n = l.carrier.size
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = l.meet[x][l.join[y][z]]
                rhs = l.join[l.meet[x][y]][l.meet[x][z]]
                if lhs != rhs:
                    lab = l.carrier.elements
                    return lab[x], lab[y], lab[z]
    return None


def is_priestley(p: Poset) -> tuple[bool, dict[tuple[str, str], frozenset[str]]]:
    """Total order-disconnectedness, checked literally: for every pair
    x !<= y the principal up-set of x is verified to be an up-set (clopen
    is vacuous on a finite discrete carrier) containing x but not y.
    Always true at this scale; the table of witnesses is returned."""
    n = p.carrier.size
    lab = p.carrier.elements
    table: dict[tuple[str, str], frozenset[str]] = {}
    ok = True
    for x in range(n):
        for y in range(n):
            if p.rel.has(x, y):
                continue
            c = up_closure(p, [x])
            if up_closure(p, c) != c or x not in c or y in c:
                ok = False
                continue
            table[(lab[x], lab[y])] = frozenset(lab[v] for v in c)
    return ok, table


def _upset_masks(p: Poset) -> list[int]:
    """All up-sets as bitmasks, ordered by (size, mask)."""
    n = p.carrier.size
    up = p.rel.rows
    out = [s for s in range(1 << n) if all(up[i] & ~s == 0 for i in _bits(s))]
    out.sort(key=lambda s: (s.bit_count(), s))
    return out


def _set_label(p: Poset, mask: int) -> str:
    return "{" + ",".join(p.carrier.label(i) for i in _bits(mask)) + "}"


@lru_cache(maxsize=None)
def upset_lattice(p: Poset) -> DistLattice:
    """The lattice of up-sets under inclusion; meet is intersection and
    join is union."""
    masks = _upset_masks(p)
    index = {s: k for k, s in enumerate(masks)}
    carrier = Carrier(tuple(_set_label(p, s) for s in masks))
    m = len(masks)
    rows = tuple(
        sum(1 << k for k, t in enumerate(masks) if s & ~t == 0) for s in masks
    )
    meet = tuple(tuple(index[s & t] for t in masks) for s in masks)
    join = tuple(tuple(index[s | t] for t in masks) for s in masks)
    return DistLattice(carrier, Relation(carrier, rows), meet, join, index[0], m - 1)


def join_irreducibles(l: DistLattice) -> Poset:
    """Poset of elements that are not the bottom and not the join of two
    strictly smaller elements. Distributivity is re-checked before use.

    The result carries the order dual to the induced lattice order: in an
    up-set lattice the irreducibles are the principal up-sets, and those
    sit in reverse inclusion to their generators, so dualizing here is
    what makes the round trip through upset_lattice the identity."""
    w = distributivity_witness(l)
    if w is not None:
        raise NonDistributiveError(w)
    n = l.carrier.size
    up = l.leq.rows
    down = _down_masks(up)
    irr = []
    for j in range(n):
        if j == l.bot:
            continue
        strict = down[j] & ~(1 << j)
        reducible = any(
            l.join[a][b] == j for a in _bits(strict) for b in _bits(strict)
        )
        if not reducible:
            irr.append(j)
    labels = tuple(l.carrier.label(j) for j in irr)
    pos = {j: k for k, j in enumerate(irr)}
    rows = tuple(
        sum(1 << pos[t] for t in _bits(down[j]) if t in pos) for j in irr
    )
    return Poset(Relation(Carrier(labels), rows))


@dataclass(frozen=True)
class LatticeHom:
    """Bounded-lattice homomorphism; preservation of meet, join, bottom
    and top is asserted at construction."""

    dom: DistLattice
    cod: DistLattice
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        t = self.table
        if len(t) != self.dom.carrier.size:
            raise ValueError("table does not cover the domain")
        if t[self.dom.bot] != self.cod.bot or t[self.dom.top] != self.cod.top:
            raise ValueError("bounds not preserved")
        n = self.dom.carrier.size
        for i in range(n):
            for j in range(n):
                if t[self.dom.meet[i][j]] != self.cod.meet[t[i]][t[j]]:
                    raise ValueError(f"meet not preserved at ({i}, {j})")
                if t[self.dom.join[i][j]] != self.cod.join[t[i]][t[j]]:
                    raise ValueError(f"join not preserved at ({i}, {j})")

    def compose(self, other: "LatticeHom") -> "LatticeHom":
        """self after other."""
        if other.cod.carrier != self.dom.carrier:
            raise ValueError("homomorphisms do not compose")
        return LatticeHom(other.dom, self.cod, tuple(self.table[v] for v in other.table))

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.carrier.size


def dual_map(f: MonotoneMap) -> LatticeHom:
    """Preimage homomorphism between up-set lattices, contravariant in f:
    sends an up-set of the codomain to its inverse image."""
    require_monotone(f)
    if not isinstance(f.dom, Poset) or not isinstance(f.cod, Poset):
        raise TypeError("dual maps are taken between posets")
    lq = upset_lattice(f.cod)
    lp = upset_lattice(f.dom)
    masks_q = _upset_masks(f.cod)
    index_p = {s: k for k, s in enumerate(_upset_masks(f.dom))}
    table = []
    for s in masks_q:
        pre = 0
        for v in range(f.dom.carrier.size):
            if s >> f.table[v] & 1:
                pre |= 1 << v
        table.append(index_p[pre])
    return LatticeHom(lq, lp, tuple(table))


_CHAIN2 = Poset(Relation(Carrier(("0", "1")), (0b11, 0b10)))


def chain2() -> Poset:
    """The 2-chain 0 < 1, the separating codomain."""
    return _CHAIN2


def separate(p: Poset, x: int, y: int) -> MonotoneMap:
    """Characteristic map of the principal up-set of x: a monotone map to
    the 2-chain sending x to 1 and y to 0. Defined only when x !<= y."""
    if p.rel.has(x, y):
        raise ValueError(
            f"{p.carrier.label(x)!r} <= {p.carrier.label(y)!r}: nothing to separate"
        )
    row = p.rel.rows[x]
    table = tuple(1 if row >> v & 1 else 0 for v in range(p.carrier.size))
    return MonotoneMap(p, _CHAIN2, table)


def _invariants(p: Poset) -> list[tuple]:
    up = p.rel.rows
    down = _down_masks(up)
    base = [(down[i].bit_count(), up[i].bit_count()) for i in range(p.carrier.size)]
    return [
        (
            base[i],
            tuple(sorted(base[j] for j in _bits(down[i] & ~(1 << i)))),
            tuple(sorted(base[j] for j in _bits(up[i] & ~(1 << i)))),
        )
        for i in range(p.carrier.size)
    ]


def canonical_relabeling(p: Poset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical row key plus a permutation (old index -> new position)
    achieving it.

    Candidate permutations respect the degree invariants (elements with
    different in/out-degree profiles cannot swap under an isomorphism),
    and the lexicographically least relabeled matrix among them is the
    canonical form. Intended for the tiny carriers of the enumeration
    suites."""
    n = p.carrier.size
    inv = _invariants(p)
    groups: dict[tuple, list[int]] = {}
    for i in range(n):
        groups.setdefault(inv[i], []).append(i)
    keys = sorted(groups)
    blocks = [groups[k] for k in keys]
    starts = []
    pos = 0
    for b in blocks:
        starts.append(pos)
        pos += len(b)
    pairs = [(i, j) for i in range(n) for j in _bits(p.rel.rows[i])]
    best_key: tuple[int, ...] | None = None
    best_perm: tuple[int, ...] | None = None
    for arrangement in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [0] * n
        for block, start in zip(arrangement, starts):
            for offset, old in enumerate(block):
                perm[old] = start + offset
        rows = [0] * n
        for i, j in pairs:
            rows[perm[i]] |= 1 << perm[j]
        key = tuple(rows)
        if best_key is None or key < best_key:
            best_key = key
            best_perm = tuple(perm)
    assert best_key is not None and best_perm is not None
    return best_key, best_perm


def canonical_form(p: Poset) -> tuple[int, ...]:
    """Relabeling-invariant key: equal keys mean isomorphic posets."""
    return canonical_relabeling(p)[0]


def find_isomorphism(p: Poset, q: Poset) -> MonotoneMap | None:
    """An order-isomorphism found by canonical-form matching, or None."""
    if p.carrier.size != q.carrier.size:
        return None
    key_p, perm_p = canonical_relabeling(p)
    key_q, perm_q = canonical_relabeling(q)
    if key_p != key_q:
        return None
    inv_q = [0] * len(perm_q)
    for old, new in enumerate(perm_q):
        inv_q[new] = old
    return MonotoneMap(p, q, tuple(inv_q[perm_p[i]] for i in range(p.carrier.size)))


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return find_isomorphism(p, q) is not None
