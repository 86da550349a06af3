"""Distances between interpretations and SE pairs, and minimal-distance selection.

Internally every model-set element is a packed integer code: an SE pair
``(x, y)`` is ``(y << w) | x`` and a classical interpretation ``y`` is
``y << w``, where ``w`` is the alphabet width.  The symmetric difference of
two elements is the XOR of their codes, and the pair order on differences
(there-part by inclusion first, here-part on ties) reduces to plain set
inclusion on classical elements.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

from ._backend import kernels
from .semantics import CapacityError, ModelSet, SEModelSet
from .syntax import Alphabet

MAX_TUPLES = 2_000_000

AnyModelSet = Union[ModelSet, SEModelSet]


class PairDiff(NamedTuple):
    """Componentwise symmetric difference of two SE interpretations."""

    first: frozenset[str]
    second: frozenset[str]


def pair_symdiff(a: tuple[Iterable[str], Iterable[str]], b: tuple[Iterable[str], Iterable[str]]) -> PairDiff:
    return PairDiff(frozenset(a[0]) ^ frozenset(b[0]), frozenset(a[1]) ^ frozenset(b[1]))


def pairdiff_subset(a: PairDiff, b: PairDiff) -> bool:
    if not a.second <= b.second:
        return False
    return a.second != b.second or a.first <= b.first


def pairdiff_strict_subset(a: PairDiff, b: PairDiff) -> bool:
    return pairdiff_subset(a, b) and not pairdiff_subset(b, a)


def pairdiff_card_le(a: PairDiff, b: PairDiff) -> bool:
    return (len(a.second), len(a.first)) <= (len(b.second), len(b.first))


def pairdiff_card_lt(a: PairDiff, b: PairDiff) -> bool:
    return (len(a.second), len(a.first)) < (len(b.second), len(b.first))


# --- packed codes --------------------------------------------------------------


def encode(s: AnyModelSet) -> list[int]:
    w = len(s.alphabet)
    if isinstance(s, SEModelSet):
        return [(y << w) | x for x, y in s]
    return [y << w for y in s]


def decode(codes: Iterable[int], like: AnyModelSet) -> AnyModelSet:
    w = len(like.alphabet)
    low = (1 << w) - 1
    if isinstance(like, SEModelSet):
        return SEModelSet(like.alphabet, frozenset((c & low, c >> w) for c in codes))
    return ModelSet(like.alphabet, frozenset(c >> w for c in codes))


def _element(code: int, w: int, se: bool):
    return (code & ((1 << w) - 1), code >> w) if se else code >> w


def _check(e1: AnyModelSet, e2: AnyModelSet) -> None:
    if type(e1) is not type(e2):
        raise TypeError("selectors need two classical or two SE model sets")
    if e1.alphabet != e2.alphabet:
        raise ValueError("model sets are over different alphabets")


def sigma_subset(e1: AnyModelSet, e2: AnyModelSet) -> AnyModelSet:
    """Elements of e1 at an inclusion-minimal distance from some element of e2."""
    _check(e1, e2)
    codes = encode(e1)
    mask = kernels.sigma_subset(codes, encode(e2), len(e1.alphabet))
    return decode((c for c, keep in zip(codes, mask) if keep), e1)


def sigma_card(e1: AnyModelSet, e2: AnyModelSet) -> AnyModelSet:
    """Elements of e1 at a cardinality-minimal distance from some element of e2."""
    _check(e1, e2)
    codes = encode(e1)
    mask = kernels.sigma_card(codes, encode(e2), len(e1.alphabet))
    return decode((c for c, keep in zip(codes, mask) if keep), e1)


# --- tuple minimality ----------------------------------------------------------


def _pairs_a(width: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(width), 2))


def _pairs_b(width: int) -> list[tuple[int, int]]:
    return [(0, j) for j in range(1, width)]


def _minimal_tuples(tuples: Sequence[tuple[int, ...]], w: int, pairs: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    tuples = list(dict.fromkeys(tuple(t) for t in tuples))
    if not pairs:
        return tuples
    rows = [tuple(t[i] ^ t[j] for i, j in pairs) for t in tuples]
    distinct = list(dict.fromkeys(rows))
    minimal = {r for r, keep in zip(distinct, kernels.minimal_rows(distinct, w)) if keep}
    return [t for t, r in zip(tuples, rows) if r in minimal]


def min_a_codes(tuples: Sequence[tuple[int, ...]], w: int) -> list[tuple[int, ...]]:
    """Minimal tuples when every pair of coordinates is compared."""
    if not tuples:
        return []
    return _minimal_tuples(tuples, w, _pairs_a(len(tuples[0])))


def min_b_codes(tuples: Sequence[tuple[int, ...]], w: int) -> list[tuple[int, ...]]:
    """Minimal tuples when coordinate 0 is compared against every other one."""
    if not tuples:
        return []
    return _minimal_tuples(tuples, w, _pairs_b(len(tuples[0])))


def _product_size(sets: Sequence[Sequence[int]]) -> int:
    size = 1
    for s in sets:
        size *= len(s)
    return size


def _check_cap(size: int, cap: int | None) -> None:
    if cap is not None and size > cap:
        raise CapacityError(f"profile product has {size} tuples, above the cap of {cap}")


def min_a_product(sets: Sequence[Sequence[int]], w: int, cap: int | None = MAX_TUPLES) -> list[tuple[int, ...]]:
    """Minimal tuples of the cartesian product of ``sets`` (pairwise comparison)."""
    size = _product_size(sets)
    if size == 0:
        return []
    _check_cap(size, cap)
    n = len(sets)
    if n == 1:
        return [(c,) for c in dict.fromkeys(sets[0])]
    cols = [np.asarray(s, dtype=np.int64) for s in sets]
    grids = np.meshgrid(*cols, indexing="ij")
    table = np.stack([g.ravel() for g in grids], axis=1)
    rows = np.stack([table[:, i] ^ table[:, j] for i, j in _pairs_a(n)], axis=1)
    distinct, inverse = np.unique(rows, axis=0, return_inverse=True)
    keep = np.asarray(kernels.minimal_rows(distinct, w), dtype=bool)
    selected = table[keep[inverse.ravel()]]
    return [tuple(int(v) for v in t) for t in selected]


def min_b_product(sets: Sequence[Sequence[int]], w: int, cap: int | None = MAX_TUPLES) -> list[tuple[int, ...]]:
    """Minimal tuples of the product under the coordinate-0 comparison.

    A tuple whose j-th distance to coordinate 0 is not minimal among the
    choices for coordinate j is dominated by swapping in a closer element,
    so only per-coordinate minimal choices need to be materialized.
    """
    if _product_size(sets) == 0:
        return []
    if len(sets) == 1:
        return [(c,) for c in dict.fromkeys(sets[0])]
    candidates: list[tuple[int, ...]] = []
    for s0 in dict.fromkeys(sets[0]):
        choices = []
        for other in sets[1:]:
            best = set(kernels.minimal_codes([s0 ^ x for x in other], w))
            choices.append([x for x in dict.fromkeys(other) if s0 ^ x in best])
        count = _product_size(choices)
        _check_cap(len(candidates) + count, cap)
        candidates.extend((s0,) + rest for rest in itertools.product(*choices))
    return _minimal_tuples(candidates, w, _pairs_b(len(sets)))


# --- public tuple-level API -------------------------------------------------------


def profile_codes(sets: Sequence[AnyModelSet]) -> tuple[list[list[int]], int]:
    if not sets:
        raise ValueError("empty profile")
    for s in sets[1:]:
        _check(sets[0], s)
    return [encode(s) for s in sets], len(sets[0].alphabet)


def _decode_tuples(tuples, w: int, se: bool):
    return sorted(tuple(_element(c, w, se) for c in t) for t in tuples)


def min_a(sets: Sequence[AnyModelSet], cap: int | None = MAX_TUPLES) -> list[tuple]:
    """Minimal tuples of the product of ``sets`` under pairwise comparison.

    Tuple coordinates are ``(x, y)`` masks for SE sets and ``y`` masks for
    classical sets.
    """
    codes, w = profile_codes(sets)
    return _decode_tuples(min_a_product(codes, w, cap), w, isinstance(sets[0], SEModelSet))


def min_b(sets: Sequence[AnyModelSet], cap: int | None = MAX_TUPLES) -> list[tuple]:
    codes, w = profile_codes(sets)
    return _decode_tuples(min_b_product(codes, w, cap), w, isinstance(sets[0], SEModelSet))


def tuple_union(tuples: Iterable[tuple], alphabet: Alphabet, se: bool) -> AnyModelSet:
    elements = frozenset(c for t in tuples for c in t)
    return SEModelSet(alphabet, elements) if se else ModelSet(alphabet, elements)


def coord_zero(tuples: Iterable[tuple], alphabet: Alphabet, se: bool) -> AnyModelSet:
    elements = frozenset(t[0] for t in tuples)
    return SEModelSet(alphabet, elements) if se else ModelSet(alphabet, elements)
