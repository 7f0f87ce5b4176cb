"""Finite posets, their categorical constructions, and exhaustive
verification that equivalence co-relations are effective."""

from ._backend import BACKEND
from .core import (
    Carrier,
    MapFlags,
    MonotoneMap,
    NonEmbeddingError,
    OrderViolation,
    Poset,
    Preorder,
    Relation,
    check_poset,
    check_preorder,
    classify_map,
    covering_relation,
    default_carrier,
    down_closure,
    opposite,
    reflexive_transitive_closure,
    symmetrize,
    up_closure,
)
from .constructions import (
    FactorObstruction,
    PushoutInvariantError,
    PushoutResult,
    QuotientObject,
    cokernel_pair,
    coproduct,
    delta,
    double,
    equalizer,
    factor_through,
    nabla,
    preorder_of_map,
    product,
    pushout_embeddings,
    quotient_of_preorder,
    reflect,
    subset_poset,
)
from .corelations import (
    CoRelation,
    EffectivenessCertificate,
    Verdict,
    corelation_of_subset,
    is_coreflexive,
    is_cosymmetric,
    is_cotransitive,
    is_effective,
    is_equivalence_corelation,
    maximal_witness,
    phi,
)
from .duality import (
    DistLattice,
    LatticeHom,
    NonDistributiveError,
    canonical_form,
    chain2,
    dual_map,
    find_isomorphism,
    is_isomorphic,
    is_priestley,
    join_irreducibles,
    separate,
    upset_lattice,
)
from .enumeration import (
    THEOREMS,
    BudgetExceededError,
    EnumerationBudget,
    UnknownTheoremError,
    VerificationReport,
    brute_force_pushout,
    enumerate_corelations,
    enumerate_posets,
    enumerate_preorders,
    enumerate_preorders_extending,
    verify,
)

__version__ = "0.1.0"
