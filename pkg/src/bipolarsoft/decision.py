"""Decision making over bipolar soft sets.

Covers decision values, the indiscernibility relations induced by parameters
and by decision values, table consistency, dispensable and core parameters,
and the unweighted and weighted choice algorithms.

Real-valued decisions are compared with an absolute tolerance of ``1e-9``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import BipolarSoftSet, Parameter, ParamLike
from .errors import (
    InconsistentTable,
    UnknownParameter,
    WeightCountMismatch,
    WeightOutOfRange,
)
from .tabular import TriTable, to_tri_table

__all__ = [
    "TOLERANCE",
    "Partition",
    "DecisionTable",
    "WeightedDecisionTable",
    "ReductionReport",
    "DispensabilityCheck",
    "DecisionResult",
    "sigma",
    "ind",
    "ind_table",
    "ind_decision",
    "is_consistent",
    "decision_values",
    "decision_table",
    "weighted_entries",
    "dispensable",
    "check_dispensable",
    "reduce",
    "decide",
    "decide_weighted",
]

TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Partition:
    """Disjoint, non-empty blocks covering a universe.

    Blocks and their members keep the order of first appearance, so a
    partition built over universe order is canonical. Equality ignores order.
    """

    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block in partition")
            for x in b:
                if x in seen:
                    raise ValueError(f"{x!r} appears in two blocks")
                seen.add(x)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_keys(cls, elements: Iterable[str], keys: Iterable) -> "Partition":
        groups: dict = {}
        for x, k in zip(elements, keys):
            groups.setdefault(k, []).append(x)
        return cls(tuple(groups.values()))

    @classmethod
    def universal(cls, elements: Iterable[str]) -> "Partition":
        elements = tuple(elements)
        return cls((elements,) if elements else ())

    @classmethod
    def identity(cls, elements: Iterable[str]) -> "Partition":
        return cls(tuple((x,) for x in elements))

    @property
    def elements(self) -> frozenset[str]:
        return frozenset(x for b in self.blocks for x in b)

    def _block_index(self) -> dict[str, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def block_of(self, x: str) -> tuple[str, ...]:
        return self.blocks[self._block_index()[x]]

    def as_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(b) for b in self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.as_sets() == other.as_sets()

    def __hash__(self) -> int:
        return hash(self.as_sets())

    def __len__(self) -> int:
        return len(self.blocks)

    def is_identity(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def refines(self, other: "Partition") -> bool:
        """Relation inclusion: every block of ``self`` lies inside one block of ``other``."""
        where = other._block_index()
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def meet(self, other: "Partition") -> "Partition":
        where = other._block_index()
        order = [x for b in self.blocks for x in b]
        mine = self._block_index()
        return Partition.from_keys(order, ((mine[x], where[x]) for x in order))


# decision tables ------------------------------------------------------------


def decision_values(table) -> tuple[int, ...]:
    """Row sums ``d_i`` of a tri table (or of a decision table's entries)."""
    tri = table.tri if isinstance(table, DecisionTable) else table
    return tuple(int(v) for v in tri.entries.sum(axis=1, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class DecisionTable:
    """A tri table over choice parameters plus its decision column."""

    tri: TriTable
    decisions: tuple[int, ...] = field(init=False)

    tolerance = 0.0

    def __post_init__(self):
        object.__setattr__(self, "decisions", decision_values(self.tri))

    @property
    def columns(self) -> tuple[str, ...]:
        return self.tri.column_labels

    @property
    def rows(self) -> tuple[str, ...]:
        return self.tri.row_labels

    def drop(self, label: str) -> "DecisionTable":
        return DecisionTable(self.tri.drop(label))


@dataclass(frozen=True, eq=False)
class WeightedDecisionTable:
    """Weighted entries ``b_ij`` and real decision values over a tri table.

    ``b_ij`` is ``w_j`` for a positive entry, ``0`` for a hesitant one and
    ``-(1 - w_j)`` for a negative one.
    """

    tri: TriTable
    weights: tuple[float, ...]
    weighted_entries: np.ndarray = field(init=False)
    decisions: tuple[float, ...] = field(init=False)

    tolerance = TOLERANCE

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        if len(weights) != len(self.tri.column_labels):
            raise WeightCountMismatch(
                f"{len(weights)} weights for {len(self.tri.column_labels)} columns"
            )
        for label, w in zip(self.tri.column_labels, weights):
            if not 0.0 <= w <= 1.0:
                raise WeightOutOfRange(f"weight {w} for {label!r} is outside [0, 1]")
        w = np.array(weights, dtype=float)
        a = self.tri.entries
        b = np.where(a == 1, w, np.where(a == -1, -(1.0 - w), 0.0))
        b = b.reshape(a.shape)
        b.setflags(write=False)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "weighted_entries", b)
        object.__setattr__(self, "decisions", tuple(float(v) for v in b.sum(axis=1)))

    @property
    def columns(self) -> tuple[str, ...]:
        return self.tri.column_labels

    @property
    def rows(self) -> tuple[str, ...]:
        return self.tri.row_labels

    def drop(self, label: str) -> "WeightedDecisionTable":
        j = self.columns.index(label)
        weights = self.weights[:j] + self.weights[j + 1:]
        return WeightedDecisionTable(self.tri.drop(label), weights)


def decision_table(bss: BipolarSoftSet, params: Iterable[ParamLike] | None = None) -> DecisionTable:
    """Decision table of ``bss`` restricted to ``params`` (whole domain if ``None``)."""
    tri = to_tri_table(bss)
    if params is None:
        return DecisionTable(tri)
    chosen = _choice(bss, params)
    return DecisionTable(tri.select([e.positive_label for e in chosen]))


def weighted_entries(table, weights) -> WeightedDecisionTable:
    """Apply per-column weights to a decision table.

    ``weights`` is a sequence aligned with the table columns or a mapping
    from column label to weight.
    """
    tri = table.tri if isinstance(table, (DecisionTable, WeightedDecisionTable)) else table
    if isinstance(weights, Mapping):
        keys = {getattr(k, "positive_label", k) for k in weights}
        extra = keys - set(tri.column_labels)
        missing = set(tri.column_labels) - keys
        if extra or missing:
            raise WeightCountMismatch(
                f"weights do not match columns (missing {sorted(missing)}, extra {sorted(extra)})"
            )
        by_label = {getattr(k, "positive_label", k): v for k, v in weights.items()}
        weights = [by_label[c] for c in tri.column_labels]
    return WeightedDecisionTable(tri, tuple(weights))


# indiscernibility -----------------------------------------------------------


def _choice(bss: BipolarSoftSet, params: Iterable[ParamLike]) -> tuple[Parameter, ...]:
    if isinstance(params, str):
        params = [params]
    chosen = []
    for p in params:
        e = bss.space.resolve(p)
        if e not in bss.domain:
            raise UnknownParameter(e.positive_label)
        chosen.append(e)
    return bss.space.ordered(chosen)


def sigma(bss: BipolarSoftSet, e: ParamLike) -> Partition:
    """Partition of the universe into the non-empty sets among ``F(e)``, ``G(not e)``, ``H(e)``."""
    (p,) = _choice(bss, [e])
    f, g = bss.positive_mask(p), bss.negative_mask(p)
    keys = [1 if f >> i & 1 else -1 if g >> i & 1 else 0 for i in range(len(bss.universe))]
    return Partition.from_keys(bss.universe, keys)


def ind(bss: BipolarSoftSet, params: Iterable[ParamLike]) -> Partition:
    """Common refinement of ``sigma(e)`` over ``params``; universal when ``params`` is empty."""
    result = Partition.universal(bss.universe)
    for e in _choice(bss, params):
        result = result.meet(sigma(bss, e))
    return result


def ind_table(table) -> Partition:
    """Parameter indiscernibility of a (weighted) decision table: equal rows share a block."""
    tri = table.tri if hasattr(table, "tri") else table
    return Partition.from_keys(tri.row_labels, map(tuple, tri.entries.tolist()))


def _tolerance_groups(values: Sequence[float], tol: float) -> list[list[int]]:
    """Indices grouped by value; sorted values closer than ``tol`` chain together."""
    order = sorted(range(len(values)), key=lambda i: (values[i], i))
    groups: list[list[int]] = []
    prev = None
    for i in order:
        if prev is None or values[i] - prev > tol:
            groups.append([])
        groups[-1].append(i)
        prev = values[i]
    return groups


def ind_decision(decisions, labels: Sequence[str] | None = None, tol: float | None = None) -> Partition:
    """Group objects with equal decision values.

    ``decisions`` is a table, a mapping from object to value, or a sequence
    (objects are then ``labels`` or positional indices). Integer decisions
    compare exactly; real ones within ``tol`` (default ``TOLERANCE``).
    """
    if hasattr(decisions, "decisions"):
        labels, tol = decisions.rows, decisions.tolerance if tol is None else tol
        decisions = decisions.decisions
    elif isinstance(decisions, Mapping):
        labels, decisions = list(decisions.keys()), list(decisions.values())
    decisions = list(decisions)
    if labels is None:
        labels = [str(i) for i in range(len(decisions))]
    labels = list(labels)
    if tol is None:
        tol = 0.0 if all(isinstance(d, (int, np.integer)) for d in decisions) else TOLERANCE
    index = {}
    for g in _tolerance_groups(decisions, tol):
        for i in g:
            index[i] = g[0]
    rank = {}
    keys = [rank.setdefault(index[i], len(rank)) for i in range(len(labels))]
    return Partition.from_keys(labels, keys)


def is_consistent(table) -> bool:
    """True iff the parameter partition refines the decision partition."""
    return ind_table(table).refines(ind_decision(table))


# reduction ------------------------------------------------------------------


@dataclass(frozen=True)
class DispensabilityCheck:
    parameter: str
    consistent_without: bool
    equality_without: bool
    same_decision_partition: bool

    @property
    def dispensable(self) -> bool:
        return self.consistent_without and self.same_decision_partition


def check_dispensable(table, gamma: str) -> DispensabilityCheck:
    """Evaluate both dispensability conditions for column ``gamma``.

    The reduced table must stay consistent (parameter partition refines its
    own decision partition) and must induce the same decision partition as
    ``table``. ``equality_without`` records whether the two reduced
    partitions coincide exactly, the stronger reading of the first condition.
    """
    gamma = getattr(gamma, "positive_label", gamma)
    if gamma not in table.columns:
        raise UnknownParameter(gamma)
    reduced = table.drop(gamma)
    ind_c = ind_table(reduced)
    ind_d_gamma = ind_decision(reduced)
    return DispensabilityCheck(
        parameter=gamma,
        consistent_without=ind_c.refines(ind_d_gamma),
        equality_without=ind_c == ind_d_gamma,
        same_decision_partition=ind_decision(table) == ind_d_gamma,
    )


def dispensable(table, gamma: str) -> bool:
    return check_dispensable(table, gamma).dispensable


@dataclass(frozen=True)
class ReductionReport:
    eliminated: tuple[str, ...]
    core: tuple[str, ...]
    consistency_flag: bool
    steps: tuple[DispensabilityCheck, ...] = ()
    reduced: object = field(default=None, repr=False, compare=False)


def reduce(table) -> ReductionReport:
    """Eliminate dispensable columns one at a time.

    Columns are scanned left to right; after each elimination the scan
    restarts on the reduced table. The survivors form the core.
    """
    if not is_consistent(table):
        raise InconsistentTable("reduction needs a consistent decision table")
    current = table
    eliminated, steps = [], []
    while True:
        for label in current.columns:
            check = check_dispensable(current, label)
            if check.dispensable:
                eliminated.append(label)
                steps.append(check)
                current = current.drop(label)
                break
        else:
            break
    return ReductionReport(
        eliminated=tuple(eliminated),
        core=tuple(current.columns),
        consistency_flag=True,
        steps=tuple(steps),
        reduced=current,
    )


# choice ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DecisionResult:
    table: DecisionTable | WeightedDecisionTable
    consistent: bool
    ind_parameters: Partition
    ind_decisions: Partition
    reduction: ReductionReport | None
    ranking: tuple[tuple[str, float], ...]
    tiers: tuple[tuple[str, ...], ...]

    @property
    def maximizers(self) -> tuple[str, ...]:
        return self.tiers[0] if self.tiers else ()

    @property
    def optimal(self) -> str | None:
        """First maximizer in universe order; any maximizer is an equally valid choice."""
        return self.maximizers[0] if self.maximizers else None


def _rank(table) -> tuple[tuple[tuple[str, float], ...], tuple[tuple[str, ...], ...]]:
    values = table.decisions
    groups = _tolerance_groups(values, table.tolerance)
    groups.sort(key=lambda g: -max(values[i] for i in g))
    tiers, ranking = [], []
    for g in groups:
        g = sorted(g)
        tiers.append(tuple(table.rows[i] for i in g))
        ranking.extend((table.rows[i], values[i]) for i in g)
    return tuple(ranking), tuple(tiers)


def _run(table) -> DecisionResult:
    consistent = is_consistent(table)
    report = reduce(table) if consistent else None
    ranking, tiers = _rank(table)
    return DecisionResult(
        table=table,
        consistent=consistent,
        ind_parameters=ind_table(table),
        ind_decisions=ind_decision(table),
        reduction=report,
        ranking=ranking,
        tiers=tiers,
    )


def decide(bss: BipolarSoftSet, choice_params: Iterable[ParamLike]) -> DecisionResult:
    """Unweighted choice: rank objects by the row sums over ``choice_params``.

    Ties keep universe order. An inconsistent table is reported through
    ``consistent=False`` and skips reduction; its ranking is still returned.
    """
    return _run(decision_table(bss, choice_params))


def decide_weighted(bss: BipolarSoftSet, choice_params: Iterable[ParamLike], weights) -> DecisionResult:
    """Weighted choice; ``weights`` align with ``choice_params`` in parameter-space order or map labels to weights."""
    table = decision_table(bss, choice_params)
    return _run(weighted_entries(table, weights))
