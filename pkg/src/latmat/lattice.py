"""The lattice of closed sets of a matroid, ordered by inclusion.

Meet is intersection, join is the least flat containing the union, and the
height of a flat equals its matroid rank, which makes the lattice graded.
The structure is self-contained: once built it answers order queries without
the inducing matroid, so it can round-trip through serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DegenerateLatticeError, NotAFlatError
from .matroid import GroundSet, TransversalMatroid

__all__ = ["GeometricLattice", "GeometricityReport", "build_lattice"]


@dataclass(frozen=True)
class GeometricityReport:
    """Outcome of the atomicity and height-semimodularity checks."""

    atomic: bool
    semimodular: bool
    atomicity_failure: frozenset | None = None
    semimodularity_failure: tuple[frozenset, frozenset] | None = None

    @property
    def passed(self) -> bool:
        return self.atomic and self.semimodular


@dataclass(frozen=True)
class GeometricLattice:
    """Flats in canonical order plus their Hasse diagram.

    ``covers[i]`` lists the indices of the flats immediately above flat ``i``;
    ``heights[i]`` is its rank in the inducing matroid.  Flats are sorted by
    (height, member indices), so the bottom sits at index 0 and the top last.
    """

    ground: GroundSet
    flats: tuple[frozenset, ...]
    heights: tuple[int, ...]
    covers: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        masks = tuple(self.ground.mask_of(f) for f in self.flats)
        object.__setattr__(self, "_masks", masks)
        object.__setattr__(self, "_position", {m: i for i, m in enumerate(masks)})

    @classmethod
    def from_flats(
        cls,
        ground: GroundSet,
        flats: Iterable[frozenset],
        heights: Iterable[int],
    ) -> "GeometricLattice":
        """Assemble the lattice from its flats and their heights.

        Covers are read off adjacent height buckets: x is covered by y iff
        x < y and height(y) = height(x) + 1, valid because height equals rank
        and the lattice is graded.
        """
        items = sorted(
            zip(flats, heights),
            key=lambda fh: (fh[1], tuple(sorted(map(ground.index_of, fh[0])))),
        )
        flats_t = tuple(f for f, _ in items)
        heights_t = tuple(h for _, h in items)
        masks = [ground.mask_of(f) for f in flats_t]
        buckets: list[list[int]] = [[] for _ in range(heights_t[-1] + 2)]
        for i, h in enumerate(heights_t):
            buckets[h].append(i)
        covers = tuple(
            tuple(j for j in buckets[h + 1] if masks[i] & ~masks[j] == 0)
            for i, h in enumerate(heights_t)
        )
        return cls(
            ground=ground,
            flats=flats_t,
            heights=heights_t,
            covers=covers,
            bottom=0,
            top=len(flats_t) - 1,
        )

    # order queries ------------------------------------------------------

    def index_of(self, flat: Iterable) -> int:
        mask = self.ground.mask_of(flat)
        try:
            return self._position[mask]
        except KeyError:
            members = ",".join(str(e) for e in self.ground.sorted_members(flat))
            raise NotAFlatError(f"{{{members}}} is not a flat of this lattice") from None

    def height_of(self, flat: Iterable) -> int:
        return self.heights[self.index_of(flat)]

    def _closed_hull(self, mask: int) -> int:
        # least flat containing mask; flats are closed under intersection
        hull = self._masks[self.top]
        for m in self._masks:
            if mask & ~m == 0:
                hull &= m
        return hull

    def meet(self, x: Iterable, y: Iterable) -> frozenset:
        """Greatest lower bound: plain intersection, itself a flat."""
        i, j = self.index_of(x), self.index_of(y)
        return self.ground.subset_of(self._masks[i] & self._masks[j])

    def join(self, x: Iterable, y: Iterable) -> frozenset:
        """Least upper bound: the least flat containing the union."""
        union = self._masks[self.index_of(x)] | self._masks[self.index_of(y)]
        return self.ground.subset_of(self._closed_hull(union))

    def atoms(self) -> tuple[frozenset, ...]:
        """Flats of height one."""
        return tuple(f for f, h in zip(self.flats, self.heights) if h == 1)

    def coatoms(self) -> tuple[frozenset, ...]:
        """Flats covered by the top; equals the matroid's hyperplanes."""
        if self.top == self.bottom:
            raise DegenerateLatticeError("a single-flat lattice has no coatoms")
        return tuple(
            self.flats[i] for i, ups in enumerate(self.covers) if self.top in ups
        )

    # diagnostics ----------------------------------------------------------

    def verify_geometric(self) -> GeometricityReport:
        """Exhaustive pairwise geometricity check; desk-scale lattices only.

        Atomicity: every flat is the join of the atoms below it.
        Semimodularity: h(x) + h(y) >= h(x v y) + h(x ^ y) for all pairs.
        """
        atom_masks = [self.ground.mask_of(a) for a in self.atoms()]
        atomic = True
        atomicity_failure = None
        for i, mask in enumerate(self._masks):
            below = 0
            for am in atom_masks:
                if am & ~mask == 0:
                    below |= am
            if self._closed_hull(below) != mask:
                atomic = False
                atomicity_failure = self.flats[i]
                break

        semimodular = True
        semimodularity_failure = None
        count = len(self._masks)
        for i in range(count):
            for j in range(i, count):
                meet_h = self.heights[self._position[self._masks[i] & self._masks[j]]]
                join_h = self.heights[
                    self._position[self._closed_hull(self._masks[i] | self._masks[j])]
                ]
                if self.heights[i] + self.heights[j] < join_h + meet_h:
                    semimodular = False
                    semimodularity_failure = (self.flats[i], self.flats[j])
                    break
            if not semimodular:
                break

        return GeometricityReport(
            atomic=atomic,
            semimodular=semimodular,
            atomicity_failure=atomicity_failure,
            semimodularity_failure=semimodularity_failure,
        )

    # rendering ------------------------------------------------------------

    def to_dot(self) -> str:
        """Hasse diagram as a deterministic DOT digraph, one rank row per height."""
        def label(flat: frozenset) -> str:
            return "{" + ",".join(str(e) for e in self.ground.sorted_members(flat)) + "}"

        lines = ["digraph flats {", "  rankdir=BT;", "  node [shape=box];"]
        for i, flat in enumerate(self.flats):
            lines.append(f'  n{i} [label="{label(flat)}"];')
        for h in range(self.heights[self.top] + 1):
            row = [f"n{i}" for i, hh in enumerate(self.heights) if hh == h]
            if row:
                lines.append("  { rank=same; " + "; ".join(row) + "; }")
        for i, ups in enumerate(self.covers):
            for j in ups:
                lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_lattice(matroid: TransversalMatroid) -> GeometricLattice:
    """Materialize the full lattice of flats of ``matroid``."""
    ground = matroid.ground
    masks = matroid.flat_masks()
    flats = [ground.subset_of(m) for m in masks]
    heights = [matroid.rank_mask(m) for m in masks]
    return GeometricLattice.from_flats(ground, flats, heights)
