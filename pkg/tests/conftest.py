"""Shared fixtures and the independent oracles the tests check against.

The oracles here are deliberately naive (pair sets and fixpoint loops, no
bitmasks) so they share no code with the library paths they validate.
"""

from __future__ import annotations

import pytest

from poscat import Carrier, Poset, Relation, check_poset


def naive_closure(pairs, elements):
    """Reflexive-transitive closure by fixpoint iteration on pair sets."""
    rel = set(pairs) | {(x, x) for x in elements}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def naive_is_reflexive(pairs, elements):
    return all((x, x) in pairs for x in elements)


def naive_is_transitive(pairs):
    return all(
        (a, d) in pairs for a, b in pairs for c, d in pairs if b == c
    )


def naive_is_antisymmetric(pairs):
    return all(not (a != b and (b, a) in pairs) for a, b in pairs)


def rel_pairs(rel: Relation) -> set[tuple[str, str]]:
    return set(rel.label_pairs())


def poset_from(labels, pairs) -> Poset:
    """Build a poset from generating pairs, closing them with the naive
    oracle so fixtures never depend on the library closure."""
    closed = naive_closure(pairs, labels)
    p = check_poset(Relation.from_label_pairs(Carrier(tuple(labels)), closed))
    assert isinstance(p, Poset), p
    return p


@pytest.fixture
def empty_poset():
    return poset_from([], [])


@pytest.fixture
def point():
    return poset_from(["a"], [])


@pytest.fixture
def chain2():
    return poset_from(["a", "b"], [("a", "b")])


@pytest.fixture
def chain3():
    return poset_from(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def antichain2():
    return poset_from(["a", "b"], [])


@pytest.fixture
def antichain3():
    return poset_from(["a", "b", "c"], [])


@pytest.fixture
def vee():
    # one bottom below two incomparable tops
    return poset_from(["a", "b", "c"], [("a", "b"), ("a", "c")])


@pytest.fixture
def diamond():
    return poset_from(
        ["bot", "m1", "m2", "top"],
        [("bot", "m1"), ("bot", "m2"), ("m1", "top"), ("m2", "top")],
    )


@pytest.fixture
def en_poset():
    # N-shaped four-element poset: a < c, b < c, b < d
    return poset_from(["a", "b", "c", "d"], [("a", "c"), ("b", "c"), ("b", "d")])
