"""Wire formats: JSON documents for posets, pre-orders, maps, co-relations,
lattices and pushout results, plus DOT export of Hasse diagrams.

All loaders validate: orders are checked axiom by axiom and rejected with
the violated axiom and a witness; maps are checked for monotonicity;
lattice meet/join tables are recomputed from the order and verified. The
diagonal of an order is implied in files and never serialized.
"""

from __future__ import annotations

import json

from .constructions import double
from .core import (
    Carrier,
    MonotoneMap,
    Poset,
    Preorder,
    Relation,
    check_poset,
    check_preorder,
    covering_relation,
    monotonicity_witness,
)
from .corelations import CoRelation
from .duality import DistLattice


class FormatError(ValueError):
    pass


def _carrier_from_doc(doc: dict) -> Carrier:
    elements = doc.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise FormatError("'elements' must be a list of strings")
    try:
        return Carrier(tuple(elements))
    except ValueError as e:
        raise FormatError(str(e)) from None


def _relation_from_doc(doc: dict, carrier: Carrier) -> Relation:
    pairs = doc.get("pairs", [])
    idx_pairs = []
    for entry in pairs:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise FormatError(f"bad pair entry: {entry!r}")
        a, b = entry
        try:
            idx_pairs.append((carrier.index(a), carrier.index(b)))
        except KeyError as e:
            raise FormatError(str(e)) from None
    diag = Relation.diagonal(carrier)
    return diag.union(Relation.from_pairs(carrier, idx_pairs))


def _order_pairs(rel: Relation) -> list[list[str]]:
    lab = rel.carrier.elements
    return [[lab[i], lab[j]] for i, j in rel.pairs() if i != j]


def poset_to_doc(p: Poset) -> dict:
    return {"elements": list(p.carrier.elements), "pairs": _order_pairs(p.rel)}


def poset_from_doc(doc: dict) -> Poset:
    carrier = _carrier_from_doc(doc)
    rel = _relation_from_doc(doc, carrier)
    result = check_poset(rel)
    if not result:
        raise FormatError(f"not a partial order: {result.axiom} violated, witness {result.witness}")
    return result


def preorder_to_doc(p: Preorder) -> dict:
    return {"elements": list(p.carrier.elements), "pairs": _order_pairs(p.rel)}


def preorder_from_doc(doc: dict) -> Preorder:
    carrier = _carrier_from_doc(doc)
    rel = _relation_from_doc(doc, carrier)
    result = check_preorder(rel)
    if not result:
        raise FormatError(f"not a pre-order: {result.axiom} violated, witness {result.witness}")
    return result


def map_to_doc(f: MonotoneMap) -> dict:
    return {
        "dom": poset_to_doc(f.dom),
        "cod": poset_to_doc(f.cod),
        "map": f.label_map(),
    }


def map_from_doc(doc: dict) -> MonotoneMap:
    dom = poset_from_doc(doc["dom"])
    cod = poset_from_doc(doc["cod"])
    mapping = doc.get("map")
    if not isinstance(mapping, dict):
        raise FormatError("'map' must be an object")
    missing = [x for x in dom.carrier if x not in mapping]
    if missing:
        raise FormatError(f"map is not total, missing {missing}")
    try:
        f = MonotoneMap.from_labels(dom, cod, mapping)
    except KeyError as e:
        raise FormatError(str(e)) from None
    w = monotonicity_witness(f)
    if w is not None:
        labs = dom.carrier.elements
        raise FormatError(f"map is not monotone, witness ({labs[w[0]]!r}, {labs[w[1]]!r})")
    return f


def corelation_extra_pairs(c: CoRelation) -> list[list[list]]:
    """Pairs beyond the implied coproduct order, as [[x, i], [y, j]]."""
    dbl_rows = double(c.base).rel.rows
    out = []
    for k, row in enumerate(c.rows()):
        extra = row & ~dbl_rows[k]
        while extra:
            low = extra & -extra
            t = low.bit_length() - 1
            xa, xi = c.element(k)
            ya, yi = c.element(t)
            out.append([[xa, xi], [ya, yi]])
            extra ^= low
    return out


def corelation_to_doc(c: CoRelation) -> dict:
    return {"base": poset_to_doc(c.base), "pairs": corelation_extra_pairs(c)}


def corelation_from_doc(doc: dict) -> CoRelation:
    base = poset_from_doc(doc["base"])
    dbl = double(base)
    n = base.carrier.size
    rows = list(dbl.rel.rows)
    for entry in doc.get("pairs", []):
        try:
            (xa, xi), (ya, yi) = entry
        except (TypeError, ValueError):
            raise FormatError(f"bad tagged pair entry: {entry!r}") from None
        if xi not in (0, 1) or yi not in (0, 1):
            raise FormatError(f"tags must be 0 or 1 in {entry!r}")
        try:
            k = xi * n + base.carrier.index(xa)
            t = yi * n + base.carrier.index(ya)
        except KeyError as e:
            raise FormatError(str(e)) from None
        rows[k] |= 1 << t
    rel = Relation(dbl.carrier, tuple(rows))
    result = check_preorder(rel)
    if not result:
        raise FormatError(f"not a pre-order: {result.axiom} violated, witness {result.witness}")
    return CoRelation(base, result)


def lattice_to_doc(l: DistLattice) -> dict:
    return {
        "elements": list(l.carrier.elements),
        "pairs": _order_pairs(l.leq),
        "bot": l.carrier.label(l.bot),
        "top": l.carrier.label(l.top),
    }


def lattice_from_doc(doc: dict) -> DistLattice:
    carrier = _carrier_from_doc(doc)
    rel = _relation_from_doc(doc, carrier)
    try:
        lat = DistLattice.from_order(carrier, rel)
    except ValueError as e:
        raise FormatError(str(e)) from None
    for key, idx in (("bot", lat.bot), ("top", lat.top)):
        declared = doc.get(key)
        if declared != carrier.label(idx):
            raise FormatError(
                f"declared {key} {declared!r} differs from computed {carrier.label(idx)!r}"
            )
    return lat


def pushout_to_doc(r) -> dict:
    return {
        "apex": poset_to_doc(r.apex),
        "ins0": map_to_doc(r.ins0),
        "ins1": map_to_doc(r.ins1),
        "glue_classes": [list(c) for c in r.glue_classes],
    }


def dot_hasse(p: Poset) -> str:
    """Hasse diagram in DOT, covering pairs drawn bottom to top."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for label in p.carrier:
        lines.append(f'  "{label}";')
    for a, b in covering_relation(p).label_pairs():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def dumps_line(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"
