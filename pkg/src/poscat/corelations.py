"""Equivalence co-relations on a finite poset X: pre-orders on the
two-copy carrier X + X that extend the coproduct order, viewed as the dual
presentation of equivalence relations on the quotient side.

The module provides the three defining checks (co-reflexivity, co-symmetry,
co-transitivity), the effectiveness criterion with its certificate, the
glued subset of a co-relation, the co-relation induced by a subset, and the
maximal-element witness search used to certify effectiveness.

Naming convention for the two copies: (x, i) with tag i in {0, 1} sits at
index i*n + x; i* is the complementary tag. A "cross pair" is a related
pair whose endpoints carry complementary tags.

The raw ``*_witness`` helpers work directly on row masks so the exhaustive
enumeration can filter millions of candidates without building objects;
the public checks wrap them with labeled verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .constructions import double, subset_corelation_rows
from .core import Poset, Preorder, Relation


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check; falsy on failure, carrying the axiom
    name and a witness built from (label, tag) pairs."""

    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


@dataclass(frozen=True)
class CoRelation:
    """A pre-order on X + X extending the coproduct order of the base."""

    base: Poset
    preord: Preorder

    def __post_init__(self) -> None:
        dbl = double(self.base)
        if self.preord.carrier != dbl.carrier:
            raise ValueError("pre-order does not live on the two-copy carrier of the base")
        if not dbl.rel.is_subrelation(self.preord.rel):
            raise ValueError("pre-order does not extend the coproduct order")

    @property
    def size(self) -> int:
        return self.base.carrier.size

    def element(self, k: int) -> tuple[str, int]:
        n = self.size
        return self.base.carrier.label(k % n), k // n

    def rows(self) -> tuple[int, ...]:
        return self.preord.rel.rows


def _coreflexive_witness(rows: tuple[int, ...], n: int, up: tuple[int, ...]):
    """First related pair whose endpoints do not project onto an order
    pair of the base, scanning in row-major order."""
    for k in range(2 * n):
        env = up[k % n]
        env |= env << n
        bad = rows[k] & ~env
        if bad:
            return k, (bad & -bad).bit_length() - 1
    return None


def _cosymmetry_witness(rows: tuple[int, ...], n: int):
    """First related pair whose simultaneous tag-flip is missing."""
    low = (1 << n) - 1
    two_n = 2 * n
    for k in range(two_n):
        flipped = (rows[k] >> n) | ((rows[k] & low) << n)
        missing = flipped & ~rows[(k + n) % two_n]
        if missing:
            t_f = (missing & -missing).bit_length() - 1
            return k, (t_f + n) % two_n
    return None


def _cross_targets(rows: tuple[int, ...], n: int, k: int) -> int:
    """Base-index mask of the opposite-tag targets of index k."""
    if k < n:
        return rows[k] >> n
    return rows[k] & ((1 << n) - 1)


def _cotransitivity_witness(rows: tuple[int, ...], n: int):
    """First cross pair admitting no interpolating point z with
    (x,i) below (z,i*) and (z,i) below (y,i*)."""
    for i in (0, 1):
        for a in range(n):
            k = i * n + a
            targets = _cross_targets(rows, n, k)
            cands_from = targets  # {z : (a,i) below (z,i*)}
            bits = targets
            while bits:
                lowbit = bits & -bits
                b = lowbit.bit_length() - 1
                t = (1 - i) * n + b
                ok = False
                zbits = cands_from
                while zbits:
                    zl = zbits & -zbits
                    z = zl.bit_length() - 1
                    if rows[i * n + z] >> t & 1:
                        ok = True
                        break
                    zbits ^= zl
                if not ok:
                    return k, t
                bits ^= lowbit
    return None


def _phi_mask(rows: tuple[int, ...], n: int) -> int:
    mask = 0
    for a in range(n):
        if rows[a] >> (n + a) & 1 and rows[n + a] >> a & 1:
            mask |= 1 << a
    return mask


def _effectiveness_failure(rows: tuple[int, ...], n: int, up: tuple[int, ...], down: tuple[int, ...]):
    """First cross pair with no point of the glued subset between its
    endpoints, or None."""
    glued = _phi_mask(rows, n)
    for i in (0, 1):
        for a in range(n):
            k = i * n + a
            bits = _cross_targets(rows, n, k)
            while bits:
                lowbit = bits & -bits
                b = lowbit.bit_length() - 1
                if not up[a] & down[b] & glued:
                    return k, (1 - i) * n + b
                bits ^= lowbit
    return None


def _down_masks(x: Poset) -> tuple[int, ...]:
    n = x.carrier.size
    down = [0] * n
    for i, row in enumerate(x.rel.rows):
        bits = row
        while bits:
            lowbit = bits & -bits
            down[lowbit.bit_length() - 1] |= 1 << i
            bits ^= lowbit
    return tuple(down)


def _verdict(c: CoRelation, axiom: str, pair: tuple[int, int]) -> Verdict:
    return Verdict(False, axiom, (c.element(pair[0]), c.element(pair[1])))


def is_coreflexive(c: CoRelation) -> Verdict:
    """Every related pair must project to an order pair of the base."""
    w = _coreflexive_witness(c.rows(), c.size, c.base.rel.rows)
    return PASS if w is None else _verdict(c, "co-reflexivity", w)


def is_cosymmetric(c: CoRelation) -> Verdict:
    """The relation must be invariant under flipping both tags."""
    w = _cosymmetry_witness(c.rows(), c.size)
    return PASS if w is None else _verdict(c, "co-symmetry", w)


def is_cotransitive(c: CoRelation) -> Verdict:
    """Every cross pair must admit an interpolating point.

    The characterization presupposes co-reflexivity, so that is checked
    first and its failure reported distinctly rather than evaluating the
    condition out of scope.
    """
    pre = is_coreflexive(c)
    if not pre:
        return Verdict(False, "co-reflexivity precondition", pre.witness)
    w = _cotransitivity_witness(c.rows(), c.size)
    return PASS if w is None else _verdict(c, "co-transitivity", w)


def is_equivalence_corelation(c: CoRelation) -> Verdict:
    """Conjunction of co-reflexivity, co-symmetry and co-transitivity,
    naming the first failing axiom."""
    v = is_coreflexive(c)
    if not v:
        return v
    v = is_cosymmetric(c)
    if not v:
        return v
    w = _cotransitivity_witness(c.rows(), c.size)
    return PASS if w is None else _verdict(c, "co-transitivity", w)


def phi(c: CoRelation) -> frozenset[int]:
    """The glued subset: base points whose two copies are identified."""
    mask = _phi_mask(c.rows(), c.size)
    out = set()
    while mask:
        lowbit = mask & -mask
        out.add(lowbit.bit_length() - 1)
        mask ^= lowbit
    return frozenset(out)


def corelation_of_subset(x: Poset, y: Iterable[int]) -> CoRelation:
    """The co-relation induced by a subset: cross pairs hold exactly when
    some member of the subset interpolates between the endpoints."""
    mask = 0
    for v in y:
        if not 0 <= v < x.carrier.size:
            raise ValueError(f"subset index {v} outside the carrier")
        mask |= 1 << v
    rows = subset_corelation_rows(x, mask)
    dbl = double(x)
    return CoRelation(x, Preorder(Relation(dbl.carrier, rows)))


@dataclass(frozen=True)
class EffectivenessCertificate:
    """One witness per cross pair: entries (x, y, i, z) record that the
    cross pair from (x, i) to (y, i*) is interpolated by z, which lies
    between x and y and has its two copies identified."""

    base: Poset
    entries: tuple[tuple[int, int, int, int], ...]

    def witness_for(self, x: int, y: int, i: int) -> int:
        for ex, ey, ei, ez in self.entries:
            if (ex, ey, ei) == (x, y, i):
                return ez
        raise KeyError(f"no certificate entry for cross pair ({x}, {y}, tag {i})")

    def __bool__(self) -> bool:
        return True


def is_effective(c: CoRelation) -> EffectivenessCertificate | Verdict:
    """Certificate that every cross pair is interpolated by a glued point
    between its endpoints, or the first failing cross pair.

    The witness chosen for each cross pair is the least glued point of the
    interval, so certificates are deterministic.
    """
    rows, n = c.rows(), c.size
    up = c.base.rel.rows
    down = _down_masks(c.base)
    failure = _effectiveness_failure(rows, n, up, down)
    if failure is not None:
        return _verdict(c, "effectiveness", failure)
    glued = _phi_mask(rows, n)
    entries = []
    for i in (0, 1):
        for a in range(n):
            bits = _cross_targets(rows, n, i * n + a)
            while bits:
                lowbit = bits & -bits
                b = lowbit.bit_length() - 1
                cand = up[a] & down[b] & glued
                z = (cand & -cand).bit_length() - 1
                entries.append((a, b, i, z))
                bits ^= lowbit
    return EffectivenessCertificate(c.base, tuple(entries))


def maximal_witness(c: CoRelation, x: int, y: int, i: int) -> int:
    """A maximal element of the set of points u with (x,i) below (u,i*)
    and (u,i) below (y,i*); the least-index maximal element is returned
    when several are maximal.

    Requires the cross pair from (x,i) to (y,i*) to be present. For an
    equivalence co-relation the returned z always lies between x and y
    with its two copies identified; this is verified and a violation is
    raised loudly since it would falsify the effectiveness theorem.
    """
    rows, n = c.rows(), c.size
    k = i * n + x
    t = (1 - i) * n + y
    if not rows[k] >> t & 1:
        raise ValueError(
            f"cross pair ({c.element(k)}, {c.element(t)}) is absent; precondition violated"
        )
    a_mask = _cross_targets(rows, n, k)
    b_mask = 0
    for z in range(n):
        if rows[i * n + z] >> t & 1:
            b_mask |= 1 << z
    omega = a_mask & b_mask
    if not omega:
        raise ValueError("empty candidate set; the input is not an equivalence co-relation")
    up = c.base.rel.rows
    maxima = [u for u in _mask_bits(omega) if up[u] & omega == 1 << u]
    z = min(maxima)
    if not (up[x] >> z & 1 and up[z] >> y & 1):
        raise RuntimeError(f"maximal witness {c.base.carrier.label(z)} is not between the endpoints")
    if not (rows[z] >> (n + z) & 1 and rows[n + z] >> z & 1):
        raise RuntimeError(
            f"maximal witness {c.base.carrier.label(z)} does not have its copies identified"
        )
    return z


def _mask_bits(mask: int):
    while mask:
        lowbit = mask & -mask
        yield lowbit.bit_length() - 1
        mask ^= lowbit
