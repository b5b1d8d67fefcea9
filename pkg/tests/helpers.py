"""Shared test machinery: random generators, hypothesis strategies and a
brute-force oracle that recomputes every operation element by element with
plain Python sets."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from bipolarsoft import (
    BipolarSoftSet,
    EmptyCommonDomain,
    Parameter,
    ParameterSpace,
    Universe,
    new_bipolar_soft_set,
)

# -- construction -------------------------------------------------------------


def make_context(n_objects: int, n_params: int) -> tuple[Universe, ParameterSpace]:
    universe = Universe(f"u{i}" for i in range(1, n_objects + 1))
    space = ParameterSpace(Parameter(f"e{j}") for j in range(1, n_params + 1))
    return universe, space


def from_assignment(universe, space, assignment: dict) -> BipolarSoftSet:
    """``assignment`` maps a parameter label to a tuple of tri values in universe order."""
    pos = {e: [u for u, v in zip(universe, vals) if v == 1] for e, vals in assignment.items()}
    neg = {e: [u for u, v in zip(universe, vals) if v == -1] for e, vals in assignment.items()}
    return new_bipolar_soft_set(universe, space, list(assignment), pos, neg)


def random_set(rng: random.Random, universe, space, domain=None, p_include=0.6) -> BipolarSoftSet:
    if domain is None:
        domain = [p.positive_label for p in space if rng.random() < p_include]
    assignment = {e: tuple(rng.choice((-1, 0, 1)) for _ in universe) for e in domain}
    return from_assignment(universe, space, assignment)


def random_context(rng: random.Random, max_objects=8, max_params=6):
    return make_context(rng.randint(1, max_objects), rng.randint(1, max_params))


def all_sets(universe, space):
    """Every consistent bipolar soft set over the given universe and space."""
    labels = [p.positive_label for p in space]
    n = len(universe)
    for r in range(len(labels) + 1):
        for domain in itertools.combinations(labels, r):
            columns = list(itertools.product((-1, 0, 1), repeat=n))
            for combo in itertools.product(columns, repeat=len(domain)):
                yield from_assignment(universe, space, dict(zip(domain, combo)))


# -- hypothesis ---------------------------------------------------------------


@st.composite
def contexts(draw, max_objects=8, max_params=6):
    return make_context(draw(st.integers(1, max_objects)), draw(st.integers(1, max_params)))


@st.composite
def sets_over(draw, universe, space, domain=None):
    labels = [p.positive_label for p in space]
    if domain is None:
        domain = [e for e in labels if draw(st.booleans())]
    tri = st.tuples(*[st.sampled_from((-1, 0, 1))] * len(universe))
    assignment = {e: draw(tri) for e in domain}
    return from_assignment(universe, space, assignment)


@st.composite
def bss_tuples(draw, k: int, same_domain=False):
    universe, space = draw(contexts())
    domain = None
    if same_domain:
        domain = [p.positive_label for p in space if draw(st.booleans())]
    return tuple(draw(sets_over(universe, space, domain)) for _ in range(k))


# -- oracle -------------------------------------------------------------------


def explode(x: BipolarSoftSet) -> dict:
    """``{label: (F(e), G(not e))}`` as frozensets of identifiers."""
    return {e.positive_label: (x.positive(e), x.negative(e)) for e in x.domain}


def oracle_union_ext(x, y):
    a, b = explode(x), explode(y)
    out = {}
    for e in set(a) | set(b):
        if e in a and e in b:
            out[e] = (a[e][0] | b[e][0], a[e][1] & b[e][1])
        else:
            out[e] = a.get(e) or b.get(e)
    return out


def oracle_int_ext(x, y):
    a, b = explode(x), explode(y)
    out = {}
    for e in set(a) | set(b):
        if e in a and e in b:
            out[e] = (a[e][0] & b[e][0], a[e][1] | b[e][1])
        else:
            out[e] = a.get(e) or b.get(e)
    return out


def oracle_union_res(x, y):
    a, b = explode(x), explode(y)
    common = set(a) & set(b)
    if not common:
        raise EmptyCommonDomain("oracle")
    return {e: (a[e][0] | b[e][0], a[e][1] & b[e][1]) for e in common}


def oracle_int_res(x, y):
    a, b = explode(x), explode(y)
    common = set(a) & set(b)
    if not common:
        raise EmptyCommonDomain("oracle")
    return {e: (a[e][0] & b[e][0], a[e][1] | b[e][1]) for e in common}


def oracle_and(x, y):
    a, b = explode(x), explode(y)
    return {f"({p},{q})": (a[p][0] & b[q][0], a[p][1] | b[q][1]) for p in a for q in b}


def oracle_or(x, y):
    a, b = explode(x), explode(y)
    return {f"({p},{q})": (a[p][0] | b[q][0], a[p][1] & b[q][1]) for p in a for q in b}


def oracle_complement(x):
    return {e: (g, f) for e, (f, g) in explode(x).items()}


def oracle_subset(x, y) -> bool:
    a, b = explode(x), explode(y)
    return all(e in b and a[e][0] <= b[e][0] and b[e][1] <= a[e][1] for e in a)


def defined(fn, *args):
    """Result of ``fn(*args)`` or ``None`` if a restricted operation is undefined."""
    try:
        return fn(*args)
    except EmptyCommonDomain:
        return None

