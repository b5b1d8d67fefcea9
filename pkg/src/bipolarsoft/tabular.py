"""Matrix encodings of a bipolar soft set.

The single-table form has one {-1, 0, 1} column per domain parameter: 1 for a
positive example, -1 for a negative example, 0 for a hesitant object. The
pair form keeps separate 0/1 indicator tables for ``F`` and ``G``; the tri
table is their elementwise difference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BipolarSoftSet, ParameterSpace, Universe
from .errors import BadEntry, ConsistencyViolation, DomainMismatch, SizeMismatch

__all__ = ["TriTable", "PairTable", "to_tri_table", "from_tri_table", "to_pair_table", "from_pair_table"]


def _frozen(a, dtype) -> np.ndarray:
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class TriTable:
    row_labels: tuple[str, ...]
    column_labels: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "column_labels", tuple(self.column_labels))
        raw = np.asarray(self.entries)
        shape = (len(self.row_labels), len(self.column_labels))
        if raw.size == 0:
            raw = raw.reshape(shape)
        if raw.shape != shape:
            raise SizeMismatch(f"table is {raw.shape}, labels give {shape}")
        bad = ~np.isin(raw, (-1, 0, 1))
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            raise BadEntry(raw[i, j].item(), line=i + 1, field=self.column_labels[j])
        object.__setattr__(self, "entries", _frozen(raw, np.int8))

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriTable):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.column_labels == other.column_labels
            and np.array_equal(self.entries, other.entries)
        )

    def column(self, label: str) -> np.ndarray:
        return self.entries[:, self.column_labels.index(label)]

    def row(self, label: str) -> np.ndarray:
        return self.entries[self.row_labels.index(label)]

    def select(self, labels) -> "TriTable":
        """Sub-table restricted to ``labels``, in the given order."""
        idx = [self.column_labels.index(c) for c in labels]
        return TriTable(self.row_labels, tuple(labels), self.entries[:, idx])

    def drop(self, label: str) -> "TriTable":
        keep = [c for c in self.column_labels if c != label]
        return self.select(keep)


@dataclass(frozen=True, eq=False)
class PairTable:
    row_labels: tuple[str, ...]
    f_labels: tuple[str, ...]
    g_labels: tuple[str, ...]
    f_table: np.ndarray
    g_table: np.ndarray

    def __post_init__(self):
        shape = (len(self.row_labels), len(self.f_labels))
        if len(self.g_labels) != len(self.f_labels):
            raise SizeMismatch("F and G tables have different column counts")
        for name in ("f_table", "g_table"):
            raw = np.asarray(getattr(self, name))
            if raw.size == 0:
                raw = raw.reshape(shape)
            if raw.shape != shape:
                raise SizeMismatch(f"{name} is {raw.shape}, labels give {shape}")
            if not np.isin(raw, (0, 1)).all():
                bad = raw[~np.isin(raw, (0, 1))][0]
                raise BadEntry(bad.item(), field=name)
            object.__setattr__(self, name, _frozen(raw, np.int8))
        for name in ("row_labels", "f_labels", "g_labels"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairTable):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.f_labels == other.f_labels
            and self.g_labels == other.g_labels
            and np.array_equal(self.f_table, other.f_table)
            and np.array_equal(self.g_table, other.g_table)
        )

    def to_tri(self) -> TriTable:
        both = (self.f_table & self.g_table).astype(bool)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise ConsistencyViolation(self.f_labels[j], (self.row_labels[i],))
        diff = self.f_table.astype(np.int8) - self.g_table.astype(np.int8)
        return TriTable(self.row_labels, self.f_labels, diff)


def to_tri_table(bss: BipolarSoftSet) -> TriTable:
    n = len(bss.universe)
    out = np.zeros((n, len(bss.domain)), dtype=np.int8)
    for j, (_, f, g) in enumerate(bss.masks()):
        for i in range(n):
            if f >> i & 1:
                out[i, j] = 1
            elif g >> i & 1:
                out[i, j] = -1
    return TriTable(bss.universe.elements, tuple(e.positive_label for e in bss.domain), out)


def from_tri_table(tri: TriTable, space: ParameterSpace) -> BipolarSoftSet:
    """Inverse of :func:`to_tri_table`; rows become the universe."""
    universe = Universe(tri.row_labels)
    pos, neg = {}, {}
    for j, label in enumerate(tri.column_labels):
        e = space.resolve(label)
        if e in pos:
            raise DomainMismatch(f"column {label!r} appears twice")
        col = tri.entries[:, j]
        pos[e] = sum(1 << i for i in np.flatnonzero(col == 1).tolist())
        neg[e] = sum(1 << i for i in np.flatnonzero(col == -1).tolist())
    return BipolarSoftSet(universe, space, pos, neg)


def to_pair_table(bss: BipolarSoftSet) -> PairTable:
    tri = to_tri_table(bss).entries
    return PairTable(
        bss.universe.elements,
        tuple(e.positive_label for e in bss.domain),
        tuple(e.negation_label for e in bss.domain),
        (tri == 1).astype(np.int8),
        (tri == -1).astype(np.int8),
    )


def from_pair_table(pair: PairTable, space: ParameterSpace) -> BipolarSoftSet:
    for f_label, g_label in zip(pair.f_labels, pair.g_labels):
        e = space.resolve(f_label)
        if space.resolve_negative(g_label) != e:
            raise DomainMismatch(f"G column {g_label!r} does not negate {f_label!r}")
    return from_tri_table(pair.to_tri(), space)
