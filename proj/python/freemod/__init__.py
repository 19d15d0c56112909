"""Semiring-generic free semimodule toolkit.

Exact scalar systems (finite fields, rationals, boolean, tropical,
Cayley tables), dense and finitely-supported vectors over them,
table-defined finite structures with the nine-condition axiom checker,
isomorphism search, basis search, and coordinatization.
"""

from ._freemod import (
    Basis,
    BudgetError,
    CheckMode,
    ConditionReport,
    Coordinatization,
    DenseVec,
    DimensionMismatchError,
    DomainMismatchError,
    EquivalenceReport,
    FieldReport,
    FileParseError,
    FinSupp,
    FiniteStructure,
    FreemodError,
    FreenessStatus,
    FreenessVerdict,
    InvertibilityVerdict,
    IsoSearchResult,
    IsoStatus,
    LemmaReport,
    LemmaStatus,
    LinearMapTable,
    LinearityVerdict,
    PreconditionError,
    RealizedPower,
    RingReport,
    Scalar,
    ScalarTriple,
    Semiring,
    SemiringAxiomReport,
    SemiringConditionResult,
    StructureAxiomReport,
    StructureEnumerator,
    TransportReport,
    TriState,
    Witness,
    check_axioms,
    check_field,
    check_invertible,
    check_isomorphic,
    check_linear,
    check_ring,
    check_semiring_axioms,
    compose,
    coordinatize,
    dense_add,
    dense_scale,
    dense_to_finsupp,
    find_basis,
    finsupp_add,
    finsupp_scale,
    finsupp_to_dense,
    identity_map,
    inverse,
    lemma_8_iff_1_and_9,
    lemma_a_zero,
    lemma_commutativity_derivable,
    parse_dense,
    parse_finsupp,
    parse_semiring,
    parse_structure,
    serialize_semiring,
    serialize_structure,
    transport_axioms,
    verified,
    verify_free_iff_standard,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
