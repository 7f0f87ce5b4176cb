"""Finite carriers, binary relations as bit matrices, pre-orders, posets,
and monotone maps.

Relations are stored as dense bit matrices (one int row-mask per element),
indexed by carrier position; labels are opaque strings that only surface at
I/O boundaries. Every value is immutable after construction, so everything
here is safe to share across workers.

Topological vocabulary (closedness, compactness, continuity) is carried
along as trivially-true flags: on a finite carrier the topology is discrete,
every subset and relation is closed, and every map is continuous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from ._backend import rtclosure

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Carrier:
    """Ordered tuple of distinct labels; iteration order is the index order."""

    elements: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"duplicate labels in carrier: {self.elements}")
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.elements)})

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in carrier {self.elements}") from None

    def label(self, i: int) -> str:
        return self.elements[i]


def default_carrier(n: int) -> Carrier:
    """Carrier with labels 'a', 'b', ... used by the enumeration suites."""
    if n > len(_ALPHABET):
        raise ValueError(f"default carrier supports at most {len(_ALPHABET)} elements")
    return Carrier(tuple(_ALPHABET[:n]))


@dataclass(frozen=True)
class Relation:
    """Binary relation on a carrier; bit j of ``rows[i]`` means i -> j."""

    carrier: Carrier
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.carrier.size
        if len(self.rows) != n:
            raise ValueError(f"expected {n} rows, got {len(self.rows)}")
        mask = (1 << n) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise ValueError(f"row {i} has bits outside the carrier: {row:#x}")

    @classmethod
    def from_pairs(cls, carrier: Carrier, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * carrier.size
        for i, j in pairs:
            rows[i] |= 1 << j
        return cls(carrier, tuple(rows))

    @classmethod
    def from_label_pairs(cls, carrier: Carrier, pairs: Iterable[tuple[str, str]]) -> "Relation":
        return cls.from_pairs(carrier, ((carrier.index(a), carrier.index(b)) for a, b in pairs))

    @classmethod
    def diagonal(cls, carrier: Carrier) -> "Relation":
        return cls(carrier, tuple(1 << i for i in range(carrier.size)))

    @classmethod
    def full(cls, carrier: Carrier) -> "Relation":
        mask = (1 << carrier.size) - 1
        return cls(carrier, tuple(mask for _ in range(carrier.size)))

    def has(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                yield i, low.bit_length() - 1
                row ^= low

    def label_pairs(self) -> list[tuple[str, str]]:
        lab = self.carrier.elements
        return [(lab[i], lab[j]) for i, j in self.pairs()]

    def converse(self) -> "Relation":
        n = self.carrier.size
        rows = [0] * n
        for i, j in self.pairs():
            rows[j] |= 1 << i
        return Relation(self.carrier, tuple(rows))

    def union(self, other: "Relation") -> "Relation":
        self._check_same_carrier(other)
        return Relation(self.carrier, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def intersection(self, other: "Relation") -> "Relation":
        self._check_same_carrier(other)
        return Relation(self.carrier, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def is_subrelation(self, other: "Relation") -> bool:
        self._check_same_carrier(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def _check_same_carrier(self, other: "Relation") -> None:
        if self.carrier != other.carrier:
            raise ValueError("relations live on different carriers")

    @property
    def is_closed(self) -> bool:
        """Closedness in the product topology; vacuous on a finite discrete carrier."""
        return True


def _reflexivity_witness(rows: tuple[int, ...]) -> int | None:
    for i, row in enumerate(rows):
        if not row >> i & 1:
            return i
    return None


def _transitivity_witness(rows: tuple[int, ...]) -> tuple[int, int, int] | None:
    n = len(rows)
    for i in range(n):
        row = rows[i]
        reach = row
        j_bits = row
        while j_bits:
            low = j_bits & -j_bits
            reach |= rows[low.bit_length() - 1]
            j_bits ^= low
        missing = reach & ~row
        if missing:
            k = (missing & -missing).bit_length() - 1
            j_bits = row
            while j_bits:
                low = j_bits & -j_bits
                j = low.bit_length() - 1
                if rows[j] >> k & 1:
                    return i, j, k
                j_bits ^= low
    return None


def _antisymmetry_witness(rows: tuple[int, ...]) -> tuple[int, int] | None:
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] >> j & 1 and rows[j] >> i & 1:
                return i, j
    return None


@dataclass(frozen=True)
class OrderViolation:
    """Named axiom failure with a witnessing tuple of labels.

    Returned (not raised) by the check_* functions: enumeration treats
    failed axiom checks as data, not as errors.
    """

    axiom: str
    witness: tuple[str, ...]

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation. Closedness is vacuous here: the
    carrier is finite and discrete, so the trivially-true ``is_closed``
    flag on the underlying relation records it."""

    rel: Relation

    def __post_init__(self) -> None:
        bad = _reflexivity_witness(self.rel.rows)
        if bad is not None:
            raise ValueError(f"not reflexive at {self.carrier.label(bad)!r}")
        bad3 = _transitivity_witness(self.rel.rows)
        if bad3 is not None:
            labs = tuple(self.carrier.label(k) for k in bad3)
            raise ValueError(f"not transitive, witness {labs}")

    @property
    def carrier(self) -> Carrier:
        return self.rel.carrier

    def leq(self, i: int, j: int) -> bool:
        return self.rel.has(i, j)


@dataclass(frozen=True)
class Poset(Preorder):
    """Partial order: a pre-order that is also antisymmetric."""

    def __post_init__(self) -> None:
        super().__post_init__()
        bad = _antisymmetry_witness(self.rel.rows)
        if bad is not None:
            i, j = bad
            raise ValueError(
                f"not antisymmetric, witness ({self.carrier.label(i)!r}, {self.carrier.label(j)!r})"
            )


def check_preorder(r: Relation) -> Preorder | OrderViolation:
    """Validate reflexivity and transitivity; violation reports are data."""
    lab = r.carrier.elements
    i = _reflexivity_witness(r.rows)
    if i is not None:
        return OrderViolation("reflexivity", (lab[i],))
    ijk = _transitivity_witness(r.rows)
    if ijk is not None:
        return OrderViolation("transitivity", tuple(lab[k] for k in ijk))
    return Preorder(r)


def check_poset(r: Relation) -> Poset | OrderViolation:
    """Validate the three partial-order axioms, naming the first violated one."""
    pre = check_preorder(r)
    if isinstance(pre, OrderViolation):
        return pre
    ij = _antisymmetry_witness(r.rows)
    if ij is not None:
        lab = r.carrier.elements
        return OrderViolation("antisymmetry", (lab[ij[0]], lab[ij[1]]))
    return Poset(r)


def reflexive_transitive_closure(r: Relation) -> Preorder:
    """Smallest pre-order containing r."""
    return Preorder(Relation(r.carrier, rtclosure(r.rows, r.carrier.size)))


def symmetrize(p: Preorder) -> Relation:
    """The equivalence relation obtained by intersecting the pre-order with
    its converse; on a poset this is the diagonal."""
    return p.rel.intersection(p.rel.converse())


def opposite(p: Preorder) -> Preorder:
    """Pair-reversed order; an involution. Posets stay posets."""
    rel = p.rel.converse()
    return Poset(rel) if isinstance(p, Poset) else Preorder(rel)


def down_closure(p: Preorder, s: Iterable[int]) -> frozenset[int]:
    """Everything below some member of s."""
    n = p.carrier.size
    targets = 0
    for j in s:
        targets |= 1 << j
    return frozenset(i for i in range(n) if p.rel.rows[i] & targets)


def up_closure(p: Preorder, s: Iterable[int]) -> frozenset[int]:
    """Everything above some member of s."""
    out = 0
    for i in s:
        out |= p.rel.rows[i]
    return frozenset(_bits(out))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def covering_relation(p: Poset) -> Relation:
    """Transitive reduction: the pairs x < y with nothing strictly between.

    Its reflexive-transitive closure reproduces the poset exactly.
    """
    n = p.carrier.size
    strict = tuple(row & ~(1 << i) for i, row in enumerate(p.rel.rows))
    rows = []
    for i in range(n):
        via = 0
        for j in _bits(strict[i]):
            via |= strict[j]
        rows.append(strict[i] & ~via)
    return Relation(p.carrier, tuple(rows))


OrderedSpace = Union[Preorder, Poset]


@dataclass(frozen=True)
class MonotoneMap:
    """Total function between ordered carriers, stored as an index table.

    Monotonicity is not forced at construction: classify_map reports the
    three morphism flags independently, and library constructions that
    need a monotone (or embedding) input validate explicitly.
    """

    dom: OrderedSpace
    cod: OrderedSpace
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.dom.carrier.size:
            raise ValueError("table does not cover the domain")
        n = self.cod.carrier.size
        for i, v in enumerate(self.table):
            if not 0 <= v < n:
                raise ValueError(f"table entry {i} -> {v} outside the codomain")

    @classmethod
    def from_labels(cls, dom: OrderedSpace, cod: OrderedSpace, mapping: dict[str, str]) -> "MonotoneMap":
        table = tuple(mapping[x] for x in dom.carrier.elements)
        return cls(dom, cod, tuple(cod.carrier.index(v) for v in table))

    @classmethod
    def identity(cls, p: OrderedSpace) -> "MonotoneMap":
        return cls(p, p, tuple(range(p.carrier.size)))

    def __call__(self, i: int) -> int:
        return self.table[i]

    def label_map(self) -> dict[str, str]:
        lab_d, lab_c = self.dom.carrier.elements, self.cod.carrier.elements
        return {lab_d[i]: lab_c[v] for i, v in enumerate(self.table)}

    def compose(self, other: "MonotoneMap") -> "MonotoneMap":
        """self after other."""
        if other.cod.carrier != self.dom.carrier:
            raise ValueError("maps do not compose")
        return MonotoneMap(other.dom, self.cod, tuple(self.table[v] for v in other.table))

    @property
    def is_continuous(self) -> bool:
        """Continuity is vacuous between finite discrete spaces."""
        return True


@dataclass(frozen=True)
class MapFlags:
    is_monotone: bool
    is_surjective: bool
    is_order_embedding: bool


def monotonicity_witness(f: MonotoneMap) -> tuple[int, int] | None:
    """A domain pair x <= y with f(x) !<= f(y), if any."""
    dom, cod, t = f.dom.rel.rows, f.cod.rel.rows, f.table
    for i, row in enumerate(dom):
        for j in _bits(row):
            if not cod[t[i]] >> t[j] & 1:
                return i, j
    return None


def classify_map(f: MonotoneMap) -> MapFlags:
    """Morphism flags: monotone, surjective, order-embedding.

    Order-embedding means x <= y iff f(x) <= f(y); on posets this forces
    injectivity. The three flags vary independently.
    """
    monotone = monotonicity_witness(f) is None
    surjective = len(set(f.table)) == f.cod.carrier.size
    embedding = monotone
    if embedding:
        dom, cod, t = f.dom.rel.rows, f.cod.rel.rows, f.table
        for i in range(len(t)):
            for j in range(len(t)):
                if cod[t[i]] >> t[j] & 1 and not dom[i] >> j & 1:
                    embedding = False
                    break
            if not embedding:
                break
    return MapFlags(monotone, surjective, embedding)


class NonEmbeddingError(ValueError):
    """Raised when a construction defined only for order-embeddings is
    handed something else; carries a witnessing pair of labels."""

    def __init__(self, message: str, witness: tuple[str, str]):
        super().__init__(f"{message}, witness {witness}")
        self.witness = witness


def require_monotone(f: MonotoneMap, what: str = "map") -> MonotoneMap:
    w = monotonicity_witness(f)
    if w is not None:
        labs = f.dom.carrier.elements
        raise ValueError(f"{what} is not monotone, witness ({labs[w[0]]!r}, {labs[w[1]]!r})")
    return f


def require_embedding(f: MonotoneMap, what: str = "map") -> MonotoneMap:
    """Reject anything that is not an order-embedding, naming a witness pair."""
    labs = f.dom.carrier.elements
    w = monotonicity_witness(f)
    if w is not None:
        raise NonEmbeddingError(f"{what} is not monotone", (labs[w[0]], labs[w[1]]))
    dom, cod, t = f.dom.rel.rows, f.cod.rel.rows, f.table
    for i in range(len(t)):
        for j in range(len(t)):
            if cod[t[i]] >> t[j] & 1 and not dom[i] >> j & 1:
                raise NonEmbeddingError(
                    f"{what} is not an order-embedding", (labs[i], labs[j])
                )
    return f
