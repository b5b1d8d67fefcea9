"""Bipolar soft sets: set algebra, tabular encodings and decision making."""

from .core import (
    BipolarSoftSet,
    Parameter,
    ParameterSpace,
    ProductParameter,
    SubsetOfU,
    Universe,
    and_product,
    complement,
    equals,
    hesitation,
    intersection_extended,
    intersection_restricted,
    is_subset,
    new_bipolar_soft_set,
    or_product,
    relative_absolute,
    relative_null,
    union_extended,
    union_restricted,
)
from .decision import (
    DecisionTable,
    Partition,
    WeightedDecisionTable,
    decide,
    decide_weighted,
    decision_table,
    decision_values,
    dispensable,
    ind,
    ind_decision,
    is_consistent,
    reduce,
    sigma,
    weighted_entries,
)
from .errors import (
    BadEntry,
    BipolarSoftError,
    ConsistencyViolation,
    DomainError,
    DomainMismatch,
    DuplicateIdentifier,
    EmptyCommonDomain,
    InconsistentTable,
    ParseError,
    SizeMismatch,
    UniverseMismatch,
    UnknownObject,
    UnknownParameter,
    WeightCountMismatch,
    WeightError,
    WeightOutOfRange,
)

from .io import load_dataset, save_dataset
from .tabular import PairTable, TriTable, from_pair_table, from_tri_table, to_pair_table, to_tri_table

__version__ = "0.1.0"
