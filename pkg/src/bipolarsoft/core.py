"""Bipolar soft sets and their set-level algebra.

A bipolar soft set over a finite universe ``U`` is a triple ``(F, G, A)``:
``A`` is a subset of the parameter space ``E``, ``F`` maps each ``e`` in ``A``
to its positive approximation and ``G`` maps the negated parameter ``not e``
to its negative approximation, with ``F(e) & G(not e) == {}`` for every ``e``.

Subsets of the universe are held as integer bitmasks indexed by universe
order; the public accessors hand back frozensets of object identifiers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    ConsistencyViolation,
    DomainMismatch,
    DuplicateIdentifier,
    EmptyCommonDomain,
    SizeMismatch,
    UniverseMismatch,
    UnknownObject,
    UnknownParameter,
)

__all__ = [
    "Universe",
    "Parameter",
    "ProductParameter",
    "ParameterSpace",
    "SubsetOfU",
    "BipolarSoftSet",
    "new_bipolar_soft_set",
    "hesitation",
    "is_subset",
    "equals",
    "complement",
    "relative_null",
    "relative_absolute",
    "union_extended",
    "intersection_extended",
    "union_restricted",
    "intersection_restricted",
    "and_product",
    "or_product",
]


class Universe:
    """Finite ordered collection of distinct object identifiers."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[str]):
        elements = tuple(str(x) for x in elements)
        index = {}
        for i, x in enumerate(elements):
            if x in index:
                raise DuplicateIdentifier(f"duplicate object identifier {x!r}")
            index[x] = i
        self.elements = elements
        self._index = index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> str:
        return self.elements[i]

    def __contains__(self, ident) -> bool:
        return ident in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Universe):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Universe({list(self.elements)!r})"

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, ident: str) -> int:
        try:
            return self._index[ident]
        except KeyError:
            raise UnknownObject(ident) from None

    def mask_of(self, idents: Iterable[str]) -> int:
        mask = 0
        for x in idents:
            mask |= 1 << self.index(x)
        return mask

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.elements) if mask >> i & 1)


class Parameter:
    """A parameter paired with the label of its negation.

    ``p.negated`` swaps the two labels, so negating twice gives ``p`` back.
    Equality is by label pair, which lets a parameter read back from a file
    compare equal to the product parameter it was rendered from.
    """

    __slots__ = ("positive_label", "negation_label")

    def __init__(self, positive_label: str, negation_label: str | None = None):
        if negation_label is None:
            negation_label = f"not_{positive_label}"
        if positive_label == negation_label:
            raise ValueError(f"parameter {positive_label!r} is its own negation")
        self.positive_label = positive_label
        self.negation_label = negation_label

    @property
    def negated(self) -> "Parameter":
        return Parameter(self.negation_label, self.positive_label)

    def _key(self):
        return (self.positive_label, self.negation_label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Parameter):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Parameter({self.positive_label!r}, {self.negation_label!r})"

    def __str__(self) -> str:
        return self.positive_label


class ProductParameter(Parameter):
    """Pair ``(a,b)`` from a product domain; its negation renders as ``(not a,not b)``."""

    __slots__ = ("left", "right")

    def __init__(self, left: Parameter, right: Parameter):
        super().__init__(
            f"({left.positive_label},{right.positive_label})",
            f"({left.negation_label},{right.negation_label})",
        )
        self.left = left
        self.right = right

    @property
    def negated(self) -> "ProductParameter":
        return ProductParameter(self.left.negated, self.right.negated)

    def __repr__(self) -> str:
        return f"ProductParameter({self.left!r}, {self.right!r})"


ParamLike = Union[Parameter, str]


class ParameterSpace:
    """The ordered parameter set ``E``; its NOT set comes from the negation labels."""

    __slots__ = ("parameters", "_by_label", "_by_negation", "_order")

    def __init__(self, parameters: Iterable[ParamLike]):
        params = tuple(p if isinstance(p, Parameter) else Parameter(p) for p in parameters)
        by_label, by_neg = {}, {}
        for p in params:
            if p.positive_label in by_label:
                raise DuplicateIdentifier(f"duplicate parameter label {p.positive_label!r}")
            if p.negation_label in by_neg:
                raise DuplicateIdentifier(f"duplicate negation label {p.negation_label!r}")
            by_label[p.positive_label] = p
            by_neg[p.negation_label] = p
        clash = by_label.keys() & by_neg.keys()
        if clash:
            raise DuplicateIdentifier(
                f"labels used both as parameter and negation: {sorted(clash)}"
            )
        self.parameters = params
        self._by_label = by_label
        self._by_negation = by_neg
        self._order = {p: i for i, p in enumerate(params)}

    def __len__(self) -> int:
        return len(self.parameters)

    def __iter__(self) -> Iterator[Parameter]:
        return iter(self.parameters)

    def __contains__(self, p) -> bool:
        return p in self._order

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParameterSpace):
            return NotImplemented
        return self.parameters == other.parameters

    def __hash__(self) -> int:
        return hash(self.parameters)

    def __repr__(self) -> str:
        return f"ParameterSpace({[p.positive_label for p in self.parameters]!r})"

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(p.positive_label for p in self.parameters)

    def resolve(self, p: ParamLike) -> Parameter:
        """Look up a parameter by object or positive label."""
        if isinstance(p, Parameter):
            if p in self._order:
                return p
            raise UnknownParameter(p.positive_label)
        try:
            return self._by_label[p]
        except KeyError:
            raise UnknownParameter(p) from None

    def resolve_negative(self, p: ParamLike) -> Parameter:
        """Like ``resolve`` but also accepts a negation label, e.g. ``not_e1``."""
        if isinstance(p, str) and p in self._by_negation:
            return self._by_negation[p]
        return self.resolve(p)

    def ordered(self, params: Iterable[Parameter]) -> tuple[Parameter, ...]:
        return tuple(sorted(set(params), key=self._order.__getitem__))

    def product(self, other: "ParameterSpace") -> "ParameterSpace":
        return ParameterSpace(ProductParameter(a, b) for a in self for b in other)


@dataclass(frozen=True)
class SubsetOfU:
    """Bit-vector over universe order; bit ``i`` set means ``universe[i]`` is a member."""

    mask: int
    size: int

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "SubsetOfU":
        mask = 0
        for i, b in enumerate(bits):
            if b not in (0, 1, True, False):
                raise ValueError(f"bit {i} is {b!r}, expected 0 or 1")
            if b:
                mask |= 1 << i
        return cls(mask, len(bits))

    def bits(self) -> tuple[int, ...]:
        return tuple(self.mask >> i & 1 for i in range(self.size))


class BipolarSoftSet:
    """An immutable, validated ``(F, G, A)`` over a universe and parameter space.

    ``positive`` and ``negative`` map each parameter ``e`` of the domain to a
    bitmask; ``negative[e]`` is the approximation of the negated parameter.
    The domain may be empty (the bottom of the global lattice).
    """

    __slots__ = ("universe", "space", "domain", "_pos", "_neg")

    def __init__(
        self,
        universe: Universe,
        space: ParameterSpace,
        positive: Mapping[Parameter, int],
        negative: Mapping[Parameter, int],
    ):
        if positive.keys() != negative.keys():
            missing = positive.keys() ^ negative.keys()
            labels = sorted(p.positive_label for p in missing)
            raise DomainMismatch(f"positive and negative maps differ on {labels}")
        full = universe.full
        for e in positive:
            if e not in space:
                raise UnknownParameter(e.positive_label)
            f, g = positive[e], negative[e]
            if f & ~full or g & ~full:
                raise SizeMismatch(f"approximation for {e.positive_label!r} exceeds the universe")
            if f & g:
                raise ConsistencyViolation(e, universe.members(f & g))
        self.universe = universe
        self.space = space
        self.domain = space.ordered(positive)
        self._pos = {e: positive[e] for e in self.domain}
        self._neg = {e: negative[e] for e in self.domain}

    # accessors ----------------------------------------------------------

    def _param(self, e: ParamLike) -> Parameter:
        p = self.space.resolve_negative(e)
        if p not in self._pos:
            raise UnknownParameter(p.positive_label)
        return p

    def positive_mask(self, e: ParamLike) -> int:
        return self._pos[self._param(e)]

    def negative_mask(self, e: ParamLike) -> int:
        return self._neg[self._param(e)]

    def positive(self, e: ParamLike) -> frozenset[str]:
        """``F(e)`` as a set of object identifiers."""
        return frozenset(self.universe.members(self.positive_mask(e)))

    def negative(self, e: ParamLike) -> frozenset[str]:
        """``G(not e)``; ``e`` may be given by its positive or negation label."""
        return frozenset(self.universe.members(self.negative_mask(e)))

    def value(self, obj: str, e: ParamLike) -> int:
        """Three-valued membership: 1 positive, -1 negative, 0 hesitant."""
        bit = 1 << self.universe.index(obj)
        p = self._param(e)
        if self._pos[p] & bit:
            return 1
        if self._neg[p] & bit:
            return -1
        return 0

    def masks(self) -> Iterator[tuple[Parameter, int, int]]:
        for e in self.domain:
            yield e, self._pos[e], self._neg[e]

    # protocol -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipolarSoftSet):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.space == other.space
            and self.domain == other.domain
            and self._pos == other._pos
            and self._neg == other._neg
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.space, tuple(self.masks())))

    def __repr__(self) -> str:
        parts = []
        for e, f, g in self.masks():
            pos = ",".join(self.universe.members(f))
            neg = ",".join(self.universe.members(g))
            parts.append(f"{e.positive_label}:+{{{pos}}}-{{{neg}}}")
        return f"BipolarSoftSet({'; '.join(parts)})"

    def __invert__(self) -> "BipolarSoftSet":
        return complement(self)

    def __or__(self, other: "BipolarSoftSet") -> "BipolarSoftSet":
        return union_extended(self, other)

    def __and__(self, other: "BipolarSoftSet") -> "BipolarSoftSet":
        return intersection_extended(self, other)

    def __le__(self, other: "BipolarSoftSet") -> bool:
        return is_subset(self, other)

    def __ge__(self, other: "BipolarSoftSet") -> bool:
        return is_subset(other, self)


# construction ---------------------------------------------------------------


def _to_mask(universe: Universe, value, where: str) -> int:
    if isinstance(value, SubsetOfU):
        if value.size != len(universe):
            raise SizeMismatch(
                f"{where}: bit-vector of length {value.size}, universe has {len(universe)}"
            )
        return value.mask
    if isinstance(value, str):
        value = [value]
    return universe.mask_of(value)


def new_bipolar_soft_set(
    universe: Universe | Iterable[str],
    space: ParameterSpace | Iterable[ParamLike],
    domain: Iterable[ParamLike] | None,
    positive: Mapping,
    negative: Mapping,
) -> BipolarSoftSet:
    """Build and validate a bipolar soft set from friendly inputs.

    Map keys are parameters or labels (negative keys may also use negation
    labels); values are iterables of object identifiers or ``SubsetOfU``.
    ``domain=None`` takes the keys of ``positive``.
    """
    if not isinstance(universe, Universe):
        universe = Universe(universe)
    if not isinstance(space, ParameterSpace):
        space = ParameterSpace(space)
    if domain is None:
        dom = {space.resolve(k) for k in positive}
    else:
        dom = {space.resolve(k) for k in domain}

    def collect(mapping, resolver, side):
        out = {}
        for key, value in mapping.items():
            e = resolver(key)
            if e not in dom:
                raise DomainMismatch(f"{side} key {key!s} is outside the domain")
            if e in out:
                raise DomainMismatch(f"{side} key {key!s} given twice")
            out[e] = _to_mask(universe, value, f"{side}[{e.positive_label}]")
        missing = dom - out.keys()
        if missing:
            labels = sorted(p.positive_label for p in missing)
            raise DomainMismatch(f"{side} map is not total on the domain; missing {labels}")
        return out

    pos = collect(positive, space.resolve, "positive")
    neg = collect(negative, space.resolve_negative, "negative")
    return BipolarSoftSet(universe, space, pos, neg)


def relative_null(universe: Universe, space: ParameterSpace, domain: Iterable[ParamLike]) -> BipolarSoftSet:
    """``(Phi, U, A)``: nothing positive, everything negative."""
    dom = [space.resolve(e) for e in domain]
    return BipolarSoftSet(universe, space, dict.fromkeys(dom, 0), dict.fromkeys(dom, universe.full))


def relative_absolute(universe: Universe, space: ParameterSpace, domain: Iterable[ParamLike]) -> BipolarSoftSet:
    """``(U, Phi, A)``: everything positive, nothing negative."""
    dom = [space.resolve(e) for e in domain]
    return BipolarSoftSet(universe, space, dict.fromkeys(dom, universe.full), dict.fromkeys(dom, 0))


# unary ---------------------------------------------------------------------


def hesitation(bss: BipolarSoftSet) -> dict[Parameter, frozenset[str]]:
    """``H(e) = U - (F(e) | G(not e))`` for every ``e`` in the domain."""
    full = bss.universe.full
    return {e: frozenset(bss.universe.members(full & ~(f | g))) for e, f, g in bss.masks()}


def complement(bss: BipolarSoftSet) -> BipolarSoftSet:
    return BipolarSoftSet(bss.universe, bss.space, dict(bss._neg), dict(bss._pos))


# comparison ----------------------------------------------------------------


def _check_common(x: BipolarSoftSet, y: BipolarSoftSet) -> None:
    if x.universe != y.universe:
        raise UniverseMismatch("bipolar soft sets are over different universes")
    if x.space != y.space:
        raise UniverseMismatch("bipolar soft sets use different parameter spaces")


def is_subset(x: BipolarSoftSet, y: BipolarSoftSet) -> bool:
    """``x`` is a bipolar soft subset of ``y``.

    Requires ``A <= B`` and, for every ``e`` in ``A``, ``F(e) <= F1(e)`` and
    ``G1(not e) <= G(not e)``.
    """
    _check_common(x, y)
    for e, f, g in x.masks():
        if e not in y._pos:
            return False
        if f & ~y._pos[e] or y._neg[e] & ~g:
            return False
    return True


def equals(x: BipolarSoftSet, y: BipolarSoftSet) -> bool:
    return is_subset(x, y) and is_subset(y, x)


# binary --------------------------------------------------------------------


def _extended(x, y, pos_op, neg_op):
    _check_common(x, y)
    pos, neg = dict(x._pos), dict(x._neg)
    for e, f1, g1 in y.masks():
        if e in pos:
            pos[e] = pos_op(pos[e], f1)
            neg[e] = neg_op(neg[e], g1)
        else:
            pos[e], neg[e] = f1, g1
    return BipolarSoftSet(x.universe, x.space, pos, neg)


def _restricted(x, y, pos_op, neg_op):
    _check_common(x, y)
    common = [e for e in x.domain if e in y._pos]
    if not common:
        raise EmptyCommonDomain("restricted operation needs a non-empty common domain")
    pos = {e: pos_op(x._pos[e], y._pos[e]) for e in common}
    neg = {e: neg_op(x._neg[e], y._neg[e]) for e in common}
    return BipolarSoftSet(x.universe, x.space, pos, neg)


def _or(a: int, b: int) -> int:
    return a | b


def _and(a: int, b: int) -> int:
    return a & b


def union_extended(x: BipolarSoftSet, y: BipolarSoftSet) -> BipolarSoftSet:
    """Domain ``A | B``; on the overlap ``F | F1`` and ``G & G1``."""
    return _extended(x, y, _or, _and)


def intersection_extended(x: BipolarSoftSet, y: BipolarSoftSet) -> BipolarSoftSet:
    """Domain ``A | B``; on the overlap ``F & F1`` and ``G | G1``."""
    return _extended(x, y, _and, _or)


def union_restricted(x: BipolarSoftSet, y: BipolarSoftSet) -> BipolarSoftSet:
    """Domain ``A & B`` (must be non-empty); ``F | F1`` and ``G & G1``."""
    return _restricted(x, y, _or, _and)


def intersection_restricted(x: BipolarSoftSet, y: BipolarSoftSet) -> BipolarSoftSet:
    """Domain ``A & B`` (must be non-empty); ``F & F1`` and ``G | G1``."""
    return _restricted(x, y, _and, _or)


def _product(x, y, pos_op, neg_op):
    # products only need a shared universe; the result lives in x.space * y.space
    if x.universe != y.universe:
        raise UniverseMismatch("bipolar soft sets are over different universes")
    space = x.space.product(y.space)
    pos, neg = {}, {}
    for a, fa, ga in x.masks():
        for b, fb, gb in y.masks():
            p = ProductParameter(a, b)
            pos[p] = pos_op(fa, fb)
            neg[p] = neg_op(ga, gb)
    return BipolarSoftSet(x.universe, space, pos, neg)


def and_product(x: BipolarSoftSet, y: BipolarSoftSet) -> BipolarSoftSet:
    """``x AND y`` over ``A x B``: ``H(a,b) = F(a) & F1(b)``, ``I = G(not a) | G1(not b)``."""
    return _product(x, y, _and, _or)


def or_product(x: BipolarSoftSet, y: BipolarSoftSet) -> BipolarSoftSet:
    """``x OR y`` over ``A x B``: ``H(a,b) = F(a) | F1(b)``, ``I = G(not a) & G1(not b)``."""
    return _product(x, y, _or, _and)
