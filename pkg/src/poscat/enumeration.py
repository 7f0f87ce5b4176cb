"""Exhaustive generators and independent brute-force oracles: the engine
behind every "for all small instances" verification.

Everything here is deterministic given the budget: generators emit in a
stable order, and parallel runs merge per-task results in task order, so
reports are reproducible bit for bit (timing aside).
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from ._backend import closed_extensions, rtclosure
from .constructions import (
    MonotoneMap,
    PushoutInvariantError,
    PushoutResult,
    QuotientObject,
    _class_label,
    cokernel_pair,
    double,
    factor_through,
    preorder_of_map,
    pushout_embeddings,
    quotient_of_preorder,
    reflect,
    subset_poset,
    tag_label,
)
from .core import (
    Carrier,
    Poset,
    Preorder,
    Relation,
    classify_map,
    default_carrier,
    require_embedding,
)
from .corelations import (
    CoRelation,
    _cosymmetry_witness,
    _cotransitivity_witness,
    _coreflexive_witness,
    corelation_of_subset,
    is_coreflexive,
    is_cotransitive,
    is_effective,
    is_equivalence_corelation,
    phi,
)
from .duality import (
    LatticeHom,
    canonical_form,
    dual_map,
    find_isomorphism,
    join_irreducibles,
    separate,
    upset_lattice,
)
from . import formats

# Labeled pre-order counts reach ~9.5e6 on seven points; eight would blow
# the 1e7 budget line, so seven is the hard ceiling for any enumerated
# carrier.
MAX_POINTS = 7


class BudgetExceededError(ValueError):
    pass


class UnknownTheoremError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_n: int = 3
    labeled: bool = True
    dedupe_iso: bool = False
    parallelism: int = 1

    def __post_init__(self) -> None:
        if self.max_n < 0:
            raise ValueError("max_n must be non-negative")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")


def _guard_points(points: int) -> None:
    if points > MAX_POINTS:
        raise BudgetExceededError(
            f"{points} points exceeds the {MAX_POINTS}-point enumeration budget"
        )


def enumerate_preorders_extending(p: Preorder) -> Iterator[Preorder]:
    """All pre-orders on the carrier of p containing p, smallest first."""
    n = p.carrier.size
    _guard_points(n)
    for rows in closed_extensions(p.rel.rows, n):
        yield Preorder(Relation(p.carrier, rows))


def enumerate_preorders(n: int) -> Iterator[Preorder]:
    """All pre-orders on the default n-element carrier."""
    _guard_points(n)
    carrier = default_carrier(n)
    for rows in closed_extensions(tuple([0] * n), n):
        yield Preorder(Relation(carrier, rows))


def enumerate_posets(n: int, labeled: bool = True) -> Iterator[Poset]:
    """All partial orders on the default n-element carrier; with
    labeled=False, one representative per isomorphism class (deduped by
    canonical form)."""
    _guard_points(n)
    carrier = default_carrier(n)
    seen: set[tuple[int, ...]] = set()
    for rows in closed_extensions(tuple([0] * n), n):
        if _antisymmetric(rows, n):
            p = Poset(Relation(carrier, rows))
            if not labeled:
                key = canonical_form(p)
                if key in seen:
                    continue
                seen.add(key)
            yield p


def _antisymmetric(rows: tuple[int, ...], n: int) -> bool:
    for i in range(n):
        row = rows[i] >> (i + 1)
        j = i + 1
        while row:
            if row & 1 and rows[j] >> i & 1:
                return False
            row >>= 1
            j += 1
    return True


def _coproduct_envelope_forbidden(p: Poset) -> tuple[int, ...]:
    """Pairs that co-reflexivity rules out, as a forbidden-mask for the
    extension kernel: (x,i) can only sit below (y,j) when x <= y."""
    n = p.carrier.size
    full = (1 << 2 * n) - 1
    forb = []
    for i in (0, 1):
        for a in range(n):
            env = p.rel.rows[a]
            env |= env << n
            forb.append(full & ~env)
    order = [forb[a] for a in range(n)] + [forb[n + a] for a in range(n)]
    return tuple(order)


def enumerate_corelations(p: Poset, prune_coreflexive: bool = True) -> Iterator[CoRelation]:
    """All equivalence co-relations on p: pre-orders on the two-copy
    carrier extending the coproduct order that are co-reflexive,
    co-symmetric and co-transitive.

    By default the search space is pruned to co-reflexive candidates up
    front (the pruned pairs are exactly the ones the co-reflexivity filter
    would discard); prune_coreflexive=False enumerates every extension and
    filters after the fact, which is the slow cross-check pipeline."""
    n = p.carrier.size
    _guard_points(2 * n)
    dbl = double(p)
    forbidden = _coproduct_envelope_forbidden(p) if prune_coreflexive else None
    up = p.rel.rows
    for rows in closed_extensions(dbl.rel.rows, 2 * n, forbidden):
        if not prune_coreflexive and _coreflexive_witness(rows, n, up) is not None:
            continue
        if _cosymmetry_witness(rows, n) is not None:
            continue
        if _cotransitivity_witness(rows, n) is not None:
            continue
        yield CoRelation(p, Preorder(Relation(dbl.carrier, rows)))


def enumerate_monotone_maps(x: Preorder, y: Preorder) -> Iterator[MonotoneMap]:
    """All monotone maps from x to y, in table order."""
    nx, ny = x.carrier.size, y.carrier.size
    if nx == 0:
        yield MonotoneMap(x, y, ())
        return
    xr, yr = x.rel.rows, y.rel.rows
    for table in itertools.product(range(ny), repeat=nx):
        ok = True
        for i in range(nx):
            row = xr[i]
            ti = yr[table[i]]
            for j in _bits(row):
                if not ti >> table[j] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield MonotoneMap(x, y, table)


def enumerate_surjections(x: Preorder, y: Preorder) -> Iterator[MonotoneMap]:
    ny = y.carrier.size
    for f in enumerate_monotone_maps(x, y):
        if len(set(f.table)) == ny:
            yield f


def enumerate_embeddings(x: Preorder, y: Preorder) -> Iterator[MonotoneMap]:
    for f in enumerate_monotone_maps(x, y):
        if classify_map(f).is_order_embedding:
            yield f


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_force_pushout(f0: MonotoneMap, f1: MonotoneMap) -> PushoutResult:
    """Independent pushout oracle: glue the two codomains along the shared
    domain, seed the smallest relation making both insertions monotone,
    take its reflexive-transitive closure, and reflect.

    Unlike the direct construction this never writes down the crossing
    pairs; they must emerge from the closure. Classes are merged by label
    propagation rather than union-find."""
    if f0.dom.carrier != f1.dom.carrier or f0.dom.rel != f1.dom.rel:
        raise ValueError("pushout legs must share their domain")
    require_embedding(f0, "pushout leg f0")
    require_embedding(f1, "pushout leg f1")
    n0, n1 = f0.cod.carrier.size, f1.cod.carrier.size
    labels = [tag_label(x, 0) for x in f0.cod.carrier] + [
        tag_label(y, 1) for y in f1.cod.carrier
    ]
    cls = list(range(n0 + n1))
    for x in range(f0.dom.carrier.size):
        a, b = cls[f0.table[x]], cls[n0 + f1.table[x]]
        if a != b:
            lo, hi = (a, b) if a < b else (b, a)
            cls = [lo if c == hi else c for c in cls]
    roots = sorted(set(cls))
    pos = {r: k for k, r in enumerate(roots)}
    cls_of = [pos[c] for c in cls]
    m = len(roots)
    classes = tuple(
        tuple(sorted(labels[k] for k in range(n0 + n1) if cls_of[k] == idx))
        for idx in range(m)
    )
    carrier = Carrier(tuple(_class_label(c) for c in classes))
    rows = [0] * m
    for off, f in ((0, f0), (n0, f1)):
        for w, row in enumerate(f.cod.rel.rows):
            for wp in _bits(row):
                rows[cls_of[off + w]] |= 1 << cls_of[off + wp]
    closed = rtclosure(tuple(rows), m)
    apex, rho = reflect(Preorder(Relation(carrier, closed)))
    ins0 = MonotoneMap(f0.cod, apex, tuple(rho.table[cls_of[w]] for w in range(n0)))
    ins1 = MonotoneMap(f1.cod, apex, tuple(rho.table[cls_of[n0 + w]] for w in range(n1)))
    return PushoutResult(apex, ins0, ins1, classes)


def pushout_results_equal(a: PushoutResult, b: PushoutResult) -> bool:
    """Structural agreement under the shared canonical labeling."""
    return (
        a.apex.carrier.elements == b.apex.carrier.elements
        and a.apex.rel.rows == b.apex.rel.rows
        and a.ins0.table == b.ins0.table
        and a.ins1.table == b.ins1.table
        and a.glue_classes == b.glue_classes
    )


def count_preorders_by_filter(n: int) -> int:
    """Independent counting pipeline: run over every reflexive relation
    and keep the transitive ones. Exponential in n*n, deliberately naive."""
    if n > 4:
        raise BudgetExceededError("filter-based counting is capped at four points")
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    count = 0
    for sel in range(1 << len(offdiag)):
        pairs = {(i, i) for i in range(n)}
        for idx, pq in enumerate(offdiag):
            if sel >> idx & 1:
                pairs.add(pq)
        if _pairs_transitive(pairs):
            count += 1
    return count


def count_posets_by_filter(n: int) -> int:
    if n > 4:
        raise BudgetExceededError("filter-based counting is capped at four points")
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    count = 0
    for sel in range(1 << len(offdiag)):
        pairs = {(i, i) for i in range(n)}
        for idx, pq in enumerate(offdiag):
            if sel >> idx & 1:
                pairs.add(pq)
        if _pairs_transitive(pairs) and _pairs_antisymmetric(pairs):
            count += 1
    return count


def _pairs_transitive(pairs: set[tuple[int, int]]) -> bool:
    for a, b in pairs:
        for c, d in pairs:
            if b == c and (a, d) not in pairs:
                return False
    return True


def _pairs_antisymmetric(pairs: set[tuple[int, int]]) -> bool:
    for a, b in pairs:
        if a != b and (b, a) in pairs:
            return False
    return True


def map_tasks(fn: Callable, items: Iterable, workers: int) -> list:
    """Order-preserving fan-out; results merge in task order so parallel
    runs reproduce the sequential output exactly."""
    items = list(items)
    if workers <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    budget: EnumerationBudget
    instances: int
    failures: tuple[dict, ...]
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_doc(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "budget": {
                "max_n": self.budget.max_n,
                "labeled": self.budget.labeled,
                "dedupe_iso": self.budget.dedupe_iso,
                "parallelism": self.budget.parallelism,
            },
            "instances": self.instances,
            "failures": list(self.failures),
            "elapsed_ms": self.elapsed_ms,
        }


def _failure(axiom: str, witness, poset: Poset | None = None, corelation: CoRelation | None = None) -> dict:
    return {
        "poset": formats.poset_to_doc(poset) if poset is not None else None,
        "corelation": formats.corelation_extra_pairs(corelation) if corelation is not None else None,
        "axiom": axiom,
        "witness": witness,
    }


def _all_posets_up_to(max_n: int) -> Iterator[Poset]:
    for n in range(max_n + 1):
        yield from enumerate_posets(n)


# ---------------------------------------------------------------------------
# theorem runners


def _effectiveness_task(p: Poset) -> tuple[int, list[dict]]:
    count = 0
    failures = []
    for c in enumerate_corelations(p):
        count += 1
        cert = is_effective(c)
        if not cert:
            failures.append(_failure(cert.axiom, cert.witness, p, c))
    return count, failures


def _run_effectiveness(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    posets = list(_all_posets_up_to(budget.max_n))
    results = map_tasks(_effectiveness_task, posets, budget.parallelism)
    instances = sum(c for c, _ in results)
    failures = [f for _, fs in results for f in fs]
    return instances, failures


def _run_corollary_bijection(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    instances = 0
    failures = []
    for p in _all_posets_up_to(budget.max_n):
        n = p.carrier.size
        enumerated = list(enumerate_corelations(p))
        instances += 1
        if len(enumerated) != 2**n:
            failures.append(
                _failure("count", {"expected": 2**n, "got": len(enumerated)}, p)
            )
        subsets = [frozenset(s) for s in _subsets(n)]
        induced = {s: corelation_of_subset(p, s) for s in subsets}
        enum_rows = {c.rows() for c in enumerated}
        ind_rows = {c.rows() for c in induced.values()}
        instances += 1
        if enum_rows != ind_rows:
            failures.append(_failure("image", "enumerated co-relations differ from the subset images", p))
        for s in subsets:
            instances += 1
            if phi(induced[s]) != s:
                failures.append(_failure("phi-of-subset", sorted(p.carrier.label(i) for i in s), p))
        for c in enumerated:
            instances += 1
            back = corelation_of_subset(p, phi(c))
            if back.rows() != c.rows():
                failures.append(_failure("subset-of-phi", None, p, c))
        for s1 in subsets:
            r1 = induced[s1].rows()
            for s2 in subsets:
                instances += 1
                r2 = induced[s2].rows()
                if (s1 <= s2) != all(a & ~b == 0 for a, b in zip(r1, r2)):
                    failures.append(
                        _failure(
                            "order-isomorphism",
                            [sorted(p.carrier.label(i) for i in s1), sorted(p.carrier.label(i) for i in s2)],
                            p,
                        )
                    )
    return instances, failures


def _subsets(n: int) -> Iterator[tuple[int, ...]]:
    for mask in range(1 << n):
        yield tuple(_bits(mask))


def _run_preo_quot(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    instances = 0
    failures = []
    for p in _all_posets_up_to(budget.max_n):
        for pre in enumerate_preorders_extending(p):
            instances += 1
            q = QuotientObject(p, pre)
            _, rho = quotient_of_preorder(q)
            back = preorder_of_map(rho)
            if back.preord.rel.rows != pre.rel.rows:
                failures.append(_failure("preorder-roundtrip", formats.preorder_to_doc(pre), p))
        for ny in range(p.carrier.size + 1):
            for y in enumerate_posets(ny):
                for f in enumerate_surjections(p, y):
                    instances += 1
                    _, rho = quotient_of_preorder(preorder_of_map(f))
                    h = factor_through(rho, f)
                    if not isinstance(h, MonotoneMap):
                        failures.append(_failure("surjection-roundtrip", "no factorization", p))
                        continue
                    flags = classify_map(h)
                    good = (
                        flags.is_monotone
                        and flags.is_surjective
                        and flags.is_order_embedding
                        and tuple(h.table[v] for v in rho.table) == f.table
                    )
                    if not good:
                        failures.append(
                            _failure("surjection-roundtrip", formats.map_to_doc(f), p)
                        )
    return instances, failures


def _run_pushout_theta(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    instances = 0
    failures = []
    posets = list(_all_posets_up_to(budget.max_n))
    for x in posets:
        legs = [
            f for y in posets for f in enumerate_embeddings(x, y)
        ]
        for f0 in legs:
            for f1 in legs:
                instances += 1
                try:
                    direct = pushout_embeddings(f0, f1)
                except PushoutInvariantError as e:
                    failures.append(_failure("theta-transitivity", str(e), x))
                    continue
                oracle = brute_force_pushout(f0, f1)
                if not pushout_results_equal(direct, oracle):
                    failures.append(_failure("pushout-oracle", formats.pushout_to_doc(direct), x))
                square = [
                    (direct.ins0.table[f0.table[v]], direct.ins1.table[f1.table[v]])
                    for v in range(x.carrier.size)
                ]
                if any(a != b for a, b in square):
                    failures.append(_failure("pushout-square", square, x))
                for name, ins in (("ins0", direct.ins0), ("ins1", direct.ins1)):
                    if not classify_map(ins).is_order_embedding:
                        failures.append(_failure("embedding-stability", name, x))
    return instances, failures


def _run_cokernel_pair(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    instances = 0
    failures = []
    for x in _all_posets_up_to(budget.max_n):
        for subset in _subsets(x.carrier.size):
            instances += 1
            _, incl = subset_poset(x, subset)
            try:
                qo = cokernel_pair(incl)  # internally cross-checks both routes
            except PushoutInvariantError as e:
                failures.append(_failure("cokernel-routes", str(e), x))
                continue
            expected = corelation_of_subset(x, subset)
            if qo.preord.rel.rows != expected.rows():
                failures.append(
                    _failure("cokernel-subset", sorted(x.carrier.label(i) for i in subset), x)
                )
    return instances, failures


_POSET_COUNTS = (1, 1, 3, 19, 219)
_PREORDER_COUNTS = (1, 1, 4, 29, 355)


def _run_counting(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    instances = 0
    failures = []
    for n in range(budget.max_n + 1):
        instances += 2
        gen_posets = sum(1 for _ in enumerate_posets(n))
        gen_preorders = sum(1 for _ in enumerate_preorders(n))
        filt_posets = count_posets_by_filter(n)
        filt_preorders = count_preorders_by_filter(n)
        if not (gen_posets == filt_posets == _POSET_COUNTS[n]):
            failures.append(
                _failure(
                    "poset-count",
                    {"n": n, "generator": gen_posets, "filter": filt_posets, "expected": _POSET_COUNTS[n]},
                )
            )
        if not (gen_preorders == filt_preorders == _PREORDER_COUNTS[n]):
            failures.append(
                _failure(
                    "preorder-count",
                    {"n": n, "generator": gen_preorders, "filter": filt_preorders, "expected": _PREORDER_COUNTS[n]},
                )
            )
    return instances, failures


def _run_birkhoff(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    instances = 0
    failures = []
    for n in range(budget.max_n + 1):
        for p in enumerate_posets(n, labeled=False):
            instances += 2
            lat = upset_lattice(p)
            back = join_irreducibles(lat)
            h = find_isomorphism(back, p)
            if h is None:
                failures.append(_failure("roundtrip-poset", None, p))
                continue
            if not _lattice_roundtrip_holds(p, back, h):
                failures.append(_failure("roundtrip-lattice", None, p))
    reps = [p for n in range(min(3, budget.max_n) + 1) for p in enumerate_posets(n, labeled=False)]
    maps = {}
    for a in reps:
        for b in reps:
            maps[(a, b)] = list(enumerate_monotone_maps(a, b))
    for a in reps:
        for b in reps:
            for c in reps:
                for f in maps[(a, b)]:
                    duf = dual_map(f)
                    for g in maps[(b, c)]:
                        instances += 1
                        lhs = dual_map(g.compose(f))
                        rhs = duf.compose(dual_map(g))
                        if lhs.table != rhs.table or lhs.dom.carrier != rhs.dom.carrier:
                            failures.append(
                                _failure("contravariance", [formats.map_to_doc(f), formats.map_to_doc(g)])
                            )
    return instances, failures


def _lattice_roundtrip_holds(p: Poset, back: Poset, h: MonotoneMap) -> bool:
    """Check upset_lattice(join_irreducibles(L)) is isomorphic to L for
    L = upset_lattice(p), given the poset iso h: back -> p. The candidate
    lattice iso transports each up-set of back through h; the canonical
    search is avoided because lattices this produces can have automorphism
    groups far too large for it."""
    from .duality import _upset_masks

    masks_back = _upset_masks(back)
    masks_p = _upset_masks(p)
    index_p = {s: k for k, s in enumerate(masks_p)}
    table = []
    for s in masks_back:
        transported = 0
        for v in _bits(s):
            transported |= 1 << h.table[v]
        if transported not in index_p:
            return False
        table.append(index_p[transported])
    if len(set(table)) != len(masks_p):
        return False
    try:
        LatticeHom(upset_lattice(back), upset_lattice(p), tuple(table))
    except ValueError:
        return False
    return True


def _run_negative_controls(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    instances = 0
    failures = []
    chain3 = Poset(Relation.from_label_pairs(default_carrier(3), [("a", "b"), ("b", "c"), ("a", "c"), ("a", "a"), ("b", "b"), ("c", "c")]))
    dbl = double(chain3)
    rows = list(dbl.rel.rows)
    rows[0] |= 1 << 5  # (a,0) below (c,1)
    rows[3] |= 1 << 2  # (a,1) below (c,0)
    control = CoRelation(chain3, Preorder(Relation(dbl.carrier, tuple(rows))))
    expected_witness = (("a", 0), ("c", 1))

    instances += 1
    v = is_cotransitive(control)
    if v or v.axiom != "co-transitivity" or v.witness != expected_witness:
        failures.append(_failure("negative-cotransitivity", getattr(v, "witness", None), chain3, control))
    instances += 1
    cert = is_effective(control)
    if cert or cert.witness != expected_witness:
        failures.append(_failure("negative-effectiveness", getattr(cert, "witness", None), chain3, control))
    instances += 1
    diag = is_equivalence_corelation(control)
    if diag or diag.axiom != "co-transitivity":
        failures.append(_failure("negative-diagnosis", getattr(diag, "axiom", None), chain3, control))

    chain2 = Poset(Relation.from_label_pairs(default_carrier(2), [("a", "b"), ("a", "a"), ("b", "b")]))
    dbl2 = double(chain2)
    nabla_rows = tuple((1 << dbl2.carrier.size) - 1 for _ in range(dbl2.carrier.size))
    improper = CoRelation(chain2, Preorder(Relation(dbl2.carrier, nabla_rows)))
    instances += 1
    v = is_coreflexive(improper)
    witness_valid = False
    if not v and v.witness is not None:
        (xl, _), (yl, _) = v.witness
        witness_valid = not chain2.rel.has(chain2.carrier.index(xl), chain2.carrier.index(yl))
    if v or not witness_valid:
        failures.append(_failure("negative-coreflexivity", getattr(v, "witness", None), chain2, improper))
    return instances, failures


def _separation_task(p: Poset) -> tuple[int, list[dict]]:
    count = 0
    failures = []
    n = p.carrier.size
    for x in range(n):
        for y in range(n):
            if p.rel.has(x, y):
                continue
            count += 1
            f = separate(p, x, y)
            if not (classify_map(f).is_monotone and f.table[x] == 1 and f.table[y] == 0):
                failures.append(
                    _failure("separation", (p.carrier.label(x), p.carrier.label(y)), p)
                )
    return count, failures


def _run_separation(budget: EnumerationBudget) -> tuple[int, list[dict]]:
    posets = list(_all_posets_up_to(budget.max_n))
    results = map_tasks(_separation_task, posets, budget.parallelism)
    instances = sum(c for c, _ in results)
    failures = [f for _, fs in results for f in fs]
    return instances, failures


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    description: str
    default_max_n: int
    max_cap: int
    runner: Callable[[EnumerationBudget], tuple[int, list[dict]]]


THEOREMS: dict[str, Theorem] = {
    t.theorem_id: t
    for t in (
        Theorem(
            "effectiveness",
            "every equivalence co-relation admits an effectiveness certificate",
            3,
            3,
            _run_effectiveness,
        ),
        Theorem(
            "corollary_bijection",
            "equivalence co-relations correspond to subsets, respecting order",
            3,
            3,
            _run_corollary_bijection,
        ),
        Theorem(
            "preo_quot",
            "pre-orders extending the order correspond to monotone surjections",
            3,
            4,
            _run_preo_quot,
        ),
        Theorem(
            "pushout_theta",
            "direct pushout of embeddings agrees with the closure oracle",
            3,
            3,
            _run_pushout_theta,
        ),
        Theorem(
            "cokernel_pair",
            "cokernel pair of an embedding matches the subset co-relation",
            3,
            3,
            _run_cokernel_pair,
        ),
        Theorem(
            "counting",
            "poset and pre-order counts agree across two independent pipelines",
            4,
            4,
            _run_counting,
        ),
        Theorem(
            "birkhoff",
            "up-set lattice and join-irreducibles round trips, dual-map contravariance",
            5,
            5,
            _run_birkhoff,
        ),
        Theorem(
            "negative_controls",
            "documented counterexamples must keep failing",
            3,
            MAX_POINTS,
            _run_negative_controls,
        ),
        Theorem(
            "separation",
            "incomparable points are separated by maps into the 2-chain",
            5,
            5,
            _run_separation,
        ),
    )
}


def verify(theorem_id: str, budget: EnumerationBudget) -> VerificationReport:
    """Run one exhaustive suite and report instance count, failures (which
    must be empty), and wall time. A budget past the theorem's cap is
    rejected before any work starts."""
    if theorem_id not in THEOREMS:
        raise UnknownTheoremError(
            f"unknown theorem {theorem_id!r}; known: {', '.join(sorted(THEOREMS))}"
        )
    theorem = THEOREMS[theorem_id]
    if budget.max_n > theorem.max_cap:
        raise BudgetExceededError(
            f"theorem {theorem_id!r} budget is capped at max_n={theorem.max_cap}"
        )
    t0 = time.perf_counter()
    instances, failures = theorem.runner(budget)
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return VerificationReport(theorem_id, budget, instances, tuple(failures), elapsed_ms)
