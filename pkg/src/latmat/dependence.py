"""Dependence spaces on the power set and reduct enumeration.

A dependence space is an equivalence relation on the subsets of a ground
set.  It is kept intensional here: a space is a canonical-key function, and
two subsets are related exactly when their keys compare equal.  Two spaces
matter for reduction: relating subsets with the same containment profile
over a fixed collection of sets, and relating subsets with the same matroid
closure.  Over the hyperplanes of a matroid the two coincide, which turns
reduct enumeration into minimal hitting sets of the hyperplane complements.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable

from .errors import (
    CapacityError,
    DegenerateMatroidError,
    EmptyTargetError,
)
from .matroid import GroundSet, TransversalMatroid, iter_bits

__all__ = [
    "DependenceSpace",
    "closure_space",
    "complement_family",
    "minimal_hitting_sets",
    "profile_space",
    "reducts_via_hyperplanes",
    "spaces_equal_on",
]


class DependenceSpace:
    """Equivalence relation on the power set, given by a canonical key.

    The extensional relation is doubly exponential, so it is never
    materialized; exhaustive comparisons live behind :func:`spaces_equal_on`.
    """

    def __init__(self, ground: GroundSet, key_of_mask: Callable[[int], Hashable]):
        self.ground = ground
        self._key_of_mask = key_of_mask

    def key_of_mask(self, mask: int) -> Hashable:
        return self._key_of_mask(mask)

    def key(self, subset: Iterable) -> Hashable:
        return self._key_of_mask(self.ground.mask_of(subset))

    def related(self, first: Iterable, second: Iterable) -> bool:
        return self.key(first) == self.key(second)


def profile_space(ground: GroundSet, profile_sets: Iterable[Iterable]) -> DependenceSpace:
    """Space relating subsets with the same containment profile.

    The key of a subset B is the tuple of indices of the profile sets that
    contain B; with no profile sets every pair of subsets is related.
    """
    masks = tuple(
        sorted(
            {ground.mask_of(s) for s in profile_sets},
            key=lambda m: (m.bit_count(), tuple(iter_bits(m))),
        )
    )

    def key(mask: int) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(masks) if mask & ~t == 0)

    return DependenceSpace(ground, key)


def closure_space(matroid: TransversalMatroid) -> DependenceSpace:
    """Space relating subsets with equal closures."""
    return DependenceSpace(matroid.ground, matroid.closure_mask)


def spaces_equal_on(matroid: TransversalMatroid, *, max_elements: int = 12) -> bool:
    """Compare the hyperplane-profile and closure spaces of ``matroid``.

    Exhaustively partitions the power set under both keys and compares the
    partitions; guarded because the scan is 2**n.
    """
    n = len(matroid.ground)
    if n > max_elements:
        raise CapacityError(
            f"power-set comparison capped at {max_elements} elements, got {n}"
        )
    if matroid.ground_rank == 0:
        raise DegenerateMatroidError("comparison needs at least one hyperplane")
    hyperplanes = [matroid.ground.subset_of(h) for h in matroid.hyperplane_masks()]
    profiles = profile_space(matroid.ground, hyperplanes)
    closures = closure_space(matroid)
    by_profile: dict[Hashable, set[int]] = {}
    by_closure: dict[Hashable, set[int]] = {}
    for mask in range(1 << n):
        by_profile.setdefault(profiles.key_of_mask(mask), set()).add(mask)
        by_closure.setdefault(closures.key_of_mask(mask), set()).add(mask)
    return {frozenset(c) for c in by_profile.values()} == {
        frozenset(c) for c in by_closure.values()
    }


def _inclusion_minimal(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for mask in sorted(set(masks), key=lambda m: m.bit_count()):
        if not any(kept & ~mask == 0 for kept in out):
            out.append(mask)
    return out


def minimal_hitting_sets(
    ground: GroundSet, targets: Iterable[Iterable]
) -> tuple[frozenset, ...]:
    """All inclusion-minimal subsets meeting every target set.

    Depth-first branching on the unmet target with fewest remaining options;
    within a target, elements are tried in descending hit frequency, and the
    alternatives already branched are banned below, so no hitter is generated
    twice.  A final antichain filter drops the non-minimal strays the search
    can emit.  With no targets at all the empty set is the unique answer.
    """
    target_masks = []
    for t in targets:
        mask = ground.mask_of(t)
        if mask == 0:
            raise EmptyTargetError("an empty target set cannot be hit")
        target_masks.append(mask)
    target_masks = sorted(set(target_masks))
    if not target_masks:
        return (frozenset(),)

    frequency = [0] * len(ground)
    for t in target_masks:
        for i in iter_bits(t):
            frequency[i] += 1

    found: list[int] = []

    def descend(chosen: int, banned: int, pending: list[int]) -> None:
        if not pending:
            found.append(chosen)
            return
        pivot = min(pending, key=lambda t: (t & ~banned).bit_count())
        options = sorted(iter_bits(pivot & ~banned), key=lambda i: (-frequency[i], i))
        veto = banned
        for i in options:
            bit = 1 << i
            descend(chosen | bit, veto, [t for t in pending if not t & bit])
            veto |= bit

    descend(0, 0, target_masks)
    minimal = _inclusion_minimal(found)
    minimal.sort(key=lambda m: (m.bit_count(), tuple(iter_bits(m))))
    return tuple(ground.subset_of(m) for m in minimal)


def complement_family(ground: GroundSet, sets: Iterable[Iterable]) -> tuple[frozenset, ...]:
    """Complement of each given set within the ground set, input order kept."""
    full = ground.full_mask
    return tuple(ground.subset_of(full & ~ground.mask_of(s)) for s in sets)


def reducts_via_hyperplanes(matroid: TransversalMatroid) -> tuple[frozenset, ...]:
    """Minimal subsets meeting every hyperplane complement.

    These are exactly the subsets that span the matroid and are minimal with
    that property, i.e. the reducts of both dependence spaces above.  Output
    is sorted by (size, member indices).
    """
    if matroid.ground_rank == 0:
        raise DegenerateMatroidError("a rank-zero matroid has no hyperplane reducts")
    ground = matroid.ground
    complements = [ground.full_mask & ~h for h in matroid.hyperplane_masks()]
    if any(c == 0 for c in complements):
        raise EmptyTargetError("found a hyperplane equal to the ground set")
    return minimal_hitting_sets(ground, (ground.subset_of(c) for c in complements))
