"""Rokhlin towers over the nine-piece exchange.

At stage k the nine induced pieces I_{i,k} serve as tower bases; tower i has
height equal to the length of the stage-k word of letter i, and its levels
are the forward images of the base under the original (stage-0) map T.  Each
level travels as a single interval: pushing an interval that straddled a
discontinuity would be a construction fault and raises immediately.  The
letters read along the levels spell out the stage-k word itself, which ties
the geometric towers back to the substitutive words.

Grouping bases by projected letter (1-4 -> a, 5-7 -> b, 8-9 -> c) gives
three coarser towers whose levels are unions of at most three, two, and one
intervals respectively.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import OutOfDomain
from .iet import Ar9Map, Interval, OrderTag
from .induction import InductionStage
from .words import A9, heights_by_matrix, letter_height

A3_MEMBERS = {"a": "1234", "b": "567", "c": "89"}

Pieces = tuple[Interval, ...]


def _merge(intervals) -> Pieces:
    pieces = sorted(p for p in intervals if p.length > 0)
    merged: list[Interval] = []
    for p in pieces:
        if merged and merged[-1].right == p.left:
            merged[-1] = Interval(merged[-1].left, p.right)
        else:
            merged.append(p)
    return tuple(merged)


@dataclass(frozen=True)
class Tower:
    """One tower: base, integer height, and the level sets T^j(base)."""

    label: str
    stage: int
    base: Pieces
    height: int
    levels: tuple[Pieces, ...]
    word: str | None = None  # nine-letter towers: letters read along levels

    def measure(self) -> Fraction:
        return sum((p.length for p in self.base), Fraction(0)) * self.height


@dataclass(frozen=True)
class TowerFamily:
    """All towers of one stage: nine fine ones plus the three projected ones."""

    stage: int
    order: OrderTag
    nine: dict[str, Tower]
    three: dict[str, Tower]
    base_map: Ar9Map  # the stage-0 map whose powers build the levels


def towers_at_stage(
    m0: Ar9Map, stages: Sequence[InductionStage], k: int
) -> TowerFamily:
    """Build the stage-k towers by pushing the stage-k pieces under T.

    stages come from iterate_induction(m0, K) with K >= k; k = 0 uses the
    original pieces and height-1 towers.
    """
    if not 0 <= k <= len(stages):
        raise ValueError(f"stage {k} outside the computed range 0..{len(stages)}")
    stage_map = m0 if k == 0 else stages[k - 1].map
    prefix = tuple(s.case for s in stages[:k])
    hv = heights_by_matrix(prefix)[-1]
    nine: dict[str, Tower] = {}
    for ch in A9:
        height = letter_height(ch, hv)
        cur = stage_map.domain[ch]
        levels = []
        letters = []
        for j in range(height):
            here = m0.letter_of(cur.left)
            if cur.right > m0.domain[here].right:
                raise RuntimeError(
                    f"level {j} of tower {ch} straddles piece {here}"
                )
            levels.append((cur,))
            letters.append(here)
            if j + 1 < height:
                cur = cur.translate(m0.offsets[here])
        nine[ch] = Tower(ch, k, (stage_map.domain[ch],), height, tuple(levels),
                         "".join(letters))
    three: dict[str, Tower] = {}
    for letter, members in A3_MEMBERS.items():
        height = nine[members[0]].height
        assert all(nine[ch].height == height for ch in members)
        levels = tuple(
            _merge(p for ch in members for p in nine[ch].levels[j])
            for j in range(height)
        )
        base = _merge(p for ch in members for p in nine[ch].base)
        three[letter] = Tower(letter, k, base, height, levels)
    return TowerFamily(k, stage_map.order, nine, three, m0)


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    total_length: Fraction
    expected_length: Fraction
    defect: str | None = None


def partition_check(f: TowerFamily) -> PartitionReport:
    """All levels of the nine towers tile the full space exactly."""
    pieces = sorted(
        p for t in f.nine.values() for level in t.levels for p in level
    )
    support = _merge(f.base_map.role_blocks)
    total = sum((p.length for p in pieces), Fraction(0))
    expected = sum((s.length for s in support), Fraction(0))
    for prev, nxt in zip(pieces, pieces[1:]):
        if nxt.left < prev.right:
            return PartitionReport(False, total, expected,
                                   f"levels {prev} and {nxt} overlap")
    if _merge(pieces) != support:
        return PartitionReport(False, total, expected,
                               "union of levels differs from the space")
    return PartitionReport(True, total, expected)


@dataclass(frozen=True)
class AdjacencyReport:
    ok: bool
    violations: tuple[str, ...] = ()


ADJACENT_PAIRS = (("2", "3"), ("5", "6"), ("8", "9"))


def adjacency_check(f: TowerFamily) -> AdjacencyReport:
    """Levels of towers 2|3, 5|6, 8|9 at equal height are adjacent, with
    2, 5, 8 on the left exactly when the stage order is not reversed."""
    reversed_ = f.order.reversed
    violations: list[str] = []
    for lo, hi in ADJACENT_PAIRS:
        t_lo, t_hi = f.nine[lo], f.nine[hi]
        for j in range(min(t_lo.height, t_hi.height)):
            (p_lo,), (p_hi,) = t_lo.levels[j], t_hi.levels[j]
            left, right = (p_hi, p_lo) if reversed_ else (p_lo, p_hi)
            if left.right != right.left:
                violations.append(
                    f"level {j} of towers {lo},{hi}: {p_lo} vs {p_hi} "
                    f"not adjacent with {lo} {'right' if reversed_ else 'left'}most"
                )
    return AdjacencyReport(not violations, tuple(violations))


def level_component_counts(f: TowerFamily) -> dict[str, int]:
    """Largest number of intervals in any level of each projected tower."""
    return {
        letter: max(len(level) for level in tower.levels)
        for letter, tower in f.three.items()
    }


def locate(f: TowerFamily, x: Fraction) -> tuple[str, int]:
    """The (tower letter, level index) pair containing a point."""
    for ch in A9:
        for j, level in enumerate(f.nine[ch].levels):
            if any(p.contains(x) for p in level):
                return ch, j
    raise OutOfDomain(f"{x} lies in no tower level", point=str(x))
