"""Exact geometric models: nine-piece line exchanges and six-arc circle exchanges.

The nine-letter map T lives on three disjoint intervals Omega, Omega',
Omega'' of lengths a+b, b+c, a+c.  Each carries a fixed split into domain
pieces I_i and image pieces TI_i; T translates I_i onto TI_i.  The three
intervals can sit on the line in any of six arrangements (three cyclic
orders, each with a mirrored variant); the arrangement is recoverable from
the block positions, so builders only need the triple and the placements.

Gluing the three intervals end to end in first order turns T into an
exchange of six arcs on a circle of length 2(a+b+c), labeled
a-, a+, b-, b+, c-, c+ (encoded 0..5).  The same circle exchange also has a
direct construction; the two agree up to a rotation of the origin.

All coordinates are exact rationals.  Intervals are half-open [left, right):
closed on the left, open on the right, so interval endpoints are legal orbit
points and the maps are total on their domains.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, NamedTuple, Sequence

from .errors import OutOfDomain
from .gasket import Triple, omega_lengths, require_admissible
from .words import A6_NAMES, A9, project


class Interval(NamedTuple):
    """Half-open [left, right)."""

    left: Fraction
    right: Fraction

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def contains(self, x: Fraction) -> bool:
        return self.left <= x < self.right

    def translate(self, d: Fraction) -> "Interval":
        return Interval(self.left + d, self.right + d)

    def __str__(self) -> str:
        return f"[{self.left},{self.right})"


@dataclass(frozen=True)
class OrderTag:
    """Arrangement of the three intervals on the line.

    base names which interval leads in the cyclic order (first: Omega,
    Omega', Omega''; second: Omega', Omega'', Omega; third: Omega'', Omega,
    Omega'); reversed mirrors the whole picture, reversing both the block
    order and the piece order inside each block.
    """

    base: Literal["first", "second", "third"]
    reversed: bool = False

    def __str__(self) -> str:
        return f"reversed-{self.base}" if self.reversed else self.base


_BASE_SEQ = {"first": (0, 1, 2), "second": (1, 2, 0), "third": (2, 0, 1)}

ORDER_TAGS = tuple(
    OrderTag(base, rev) for rev in (False, True) for base in ("first", "second", "third")
)

FIRST_ORDER = OrderTag("first", False)


def screen_roles(order: OrderTag) -> tuple[int, int, int]:
    """Left-to-right role indices (0=Omega, 1=Omega', 2=Omega'')."""
    seq = _BASE_SEQ[order.base]
    return tuple(reversed(seq)) if order.reversed else seq


def order_from_roles(roles: Sequence[int]) -> OrderTag:
    """The unique arrangement with the given left-to-right role sequence."""
    roles = tuple(roles)
    for tag in ORDER_TAGS:
        if screen_roles(tag) == roles:
            return tag
    raise ValueError(f"not a role permutation: {roles}")


def parse_order(text: str) -> OrderTag:
    t = text.strip().lower().replace("_", "-")
    rev = t.startswith("reversed-")
    base = t.removeprefix("reversed-")
    if base not in _BASE_SEQ:
        raise ValueError(f"unknown order {text!r}")
    return OrderTag(base, rev)


# per-role piece layouts, left to right in non-reversed orientation:
# (letter, length) with lengths as coefficient rows over (a, b, c)
def _piece_layout(t: Triple):
    a, b, c = t
    domain = (
        (("7", b - c), ("8", c), ("9", c), ("1", a - c)),
        (("2", c), ("3", b)),
        (("4", a - b), ("5", b), ("6", c)),
    )
    image = (
        (("1", a - c), ("2", c), ("6", c), ("7", b - c)),
        (("5", b), ("9", c)),
        (("8", c), ("3", b), ("4", a - b)),
    )
    return domain, image


@dataclass(frozen=True)
class Ar9Map:
    """Nine-piece translation map on three disjoint intervals."""

    triple: Triple
    order: OrderTag
    placements: tuple[Fraction, Fraction, Fraction]  # left ends by role
    domain: dict[str, Interval]  # letter -> I_i
    image: dict[str, Interval]  # letter -> TI_i
    offsets: dict[str, Fraction]  # letter -> translation I_i -> TI_i

    @property
    def role_blocks(self) -> tuple[Interval, Interval, Interval]:
        lens = omega_lengths(self.triple)
        return tuple(
            Interval(p, p + lens[r]) for r, p in enumerate(self.placements)
        )

    @property
    def support(self) -> tuple[Interval, ...]:
        return tuple(sorted(self.role_blocks))

    def letter_of(self, x: Fraction) -> str:
        for ch in A9:
            if self.domain[ch].contains(x):
                return ch
        raise OutOfDomain(f"{x} lies in a gap or outside the domain", point=str(x))


def ar9_from_placements(
    t: Triple, placements: Sequence[Fraction], reversed_: bool
) -> Ar9Map:
    """Assemble the map from the triple and the three block left ends.

    The block arrangement determines the order tag: the role permutation
    read off the line is cyclic exactly when the layout is non-reversed, so
    only the mirror flag needs to be supplied.
    """
    require_admissible(t)
    placements = tuple(Fraction(p) for p in placements)
    lens = omega_lengths(t)
    blocks = [Interval(p, p + lens[r]) for r, p in enumerate(placements)]
    for r in range(3):
        for s in range(r + 1, 3):
            if blocks[r].left < blocks[s].right and blocks[s].left < blocks[r].right:
                raise ValueError(f"role blocks {r} and {s} overlap: {blocks[r]} {blocks[s]}")
    roles = tuple(sorted(range(3), key=lambda r: placements[r]))
    order = order_from_roles(roles)
    if order.reversed != reversed_:
        raise ValueError(
            f"block arrangement {roles} implies reversed={order.reversed}, got {reversed_}"
        )
    dom_layout, img_layout = _piece_layout(t)
    domain: dict[str, Interval] = {}
    image: dict[str, Interval] = {}
    for role in range(3):
        dpieces = dom_layout[role]
        ipieces = img_layout[role]
        if reversed_:
            dpieces = tuple(reversed(dpieces))
            ipieces = tuple(reversed(ipieces))
        x = placements[role]
        for ch, length in dpieces:
            domain[ch] = Interval(x, x + length)
            x += length
        assert x == blocks[role].right
        x = placements[role]
        for ch, length in ipieces:
            image[ch] = Interval(x, x + length)
            x += length
        assert x == blocks[role].right
    offsets = {ch: image[ch].left - domain[ch].left for ch in A9}
    assert all(image[ch].length == domain[ch].length for ch in A9)
    return Ar9Map(t, order, placements, domain, image, offsets)


def build_ar9(
    t: Triple,
    order: OrderTag = FIRST_ORDER,
    gaps: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0)),
    origin: Fraction = Fraction(0),
) -> Ar9Map:
    """Lay the three blocks on the line in the given arrangement.

    gaps are inserted between consecutive blocks (left gap, right gap);
    adjacency (zero gaps) is allowed and is the default.
    """
    require_admissible(t)
    g1, g2 = (Fraction(g) for g in gaps)
    if g1 < 0 or g2 < 0:
        raise ValueError("gaps must be nonnegative")
    lens = omega_lengths(t)
    roles = screen_roles(order)
    placements = [Fraction(0)] * 3
    x = Fraction(origin)
    for pos, role in enumerate(roles):
        placements[role] = x
        x += lens[role]
        if pos == 0:
            x += g1
        elif pos == 1:
            x += g2
    return ar9_from_placements(t, placements, order.reversed)


def ar9_apply(m: Ar9Map, x: Fraction) -> tuple[Fraction, str]:
    """One step: translate x by the offset of its piece; returns (Tx, letter)."""
    ch = m.letter_of(x)
    return x + m.offsets[ch], ch


def ar9_apply_inverse(m: Ar9Map, x: Fraction) -> tuple[Fraction, str]:
    """One step of the inverse: x must lie in some image piece TI_i."""
    for ch in A9:
        if m.image[ch].contains(x):
            return x - m.offsets[ch], ch
    raise OutOfDomain(f"{x} lies outside every image piece", point=str(x))


def trajectory(
    m: Ar9Map, x: Fraction, n: int, partition: Literal["nine", "three"] = "nine"
) -> str:
    """Length-n coding of the forward orbit of x.

    nine: letters 1..9 by domain piece; three: the same word projected
    letterwise onto a, b, c.
    """
    out = []
    for _ in range(n):
        x, ch = ar9_apply(m, x)
        out.append(ch)
    word = "".join(out)
    if partition == "three":
        return project(word, "A3")
    if partition == "nine":
        return word
    raise ValueError(f"unknown partition {partition!r}")


# six-letter circle exchanges ------------------------------------------------

# constituent nine-letter domain pieces of each circle arc, by A6 label
ARC_LETTERS = ("12", "34", "5", "67", "8", "9")


@dataclass(frozen=True)
class Ar6Map:
    """Exchange of six labeled arcs on a circle of length 2(a+b+c).

    Arcs are stored as 1-2 half-open pieces, cut at coordinate 0 when they
    wrap; offsets are translations mod L.
    """

    triple: Triple
    length: Fraction
    arcs: tuple[tuple[Interval, ...], ...]  # by label 0..5
    offsets: tuple[Fraction, ...]  # by label, reduced mod length

    def label_of(self, x: Fraction) -> int:
        x = x % self.length
        for label, pieces in enumerate(self.arcs):
            if any(p.contains(x) for p in pieces):
                return label
        raise OutOfDomain(f"{x} not covered by any arc", point=str(x))


def _normalize_pieces(pieces: Iterable[Interval], L: Fraction) -> tuple[Interval, ...]:
    """Reduce mod L, cut at 0, sort, merge adjacent."""
    cut: list[Interval] = []
    for p in pieces:
        if p.length <= 0:
            continue
        left = p.left % L
        right = left + p.length
        if right <= L:
            cut.append(Interval(left, right))
        else:
            cut.append(Interval(left, L))
            cut.append(Interval(Fraction(0), right - L))
    cut.sort()
    merged: list[Interval] = []
    for p in cut:
        if merged and merged[-1].right == p.left:
            merged[-1] = Interval(merged[-1].left, p.right)
        else:
            merged.append(p)
    return tuple(merged)


def ar6_apply(m: Ar6Map, x: Fraction) -> tuple[Fraction, int]:
    """One step on the circle; returns (Tx mod L, arc label 0..5)."""
    x = x % m.length
    label = m.label_of(x)
    return (x + m.offsets[label]) % m.length, label


def ar6_image_pieces(m: Ar6Map) -> tuple[tuple[Interval, ...], ...]:
    return tuple(
        _normalize_pieces((p.translate(m.offsets[label]) for p in pieces), m.length)
        for label, pieces in enumerate(m.arcs)
    )


def build_ar6_canonical(t: Triple) -> Ar6Map:
    """Direct circle exchange: arcs a-, a+, b-, b+, c-, c+ in that order
    from the origin, with lengths a, a, b, b, c, c.

    The two a-arcs swap as a block with the rest (a block exchange by a),
    and everything is then rotated by the half circle a+b+c; the listed
    offsets are the composition.
    """
    require_admissible(t)
    a, b, c = t
    L = 2 * (a + b + c)
    bounds = [Fraction(0), a, 2 * a, 2 * a + b, 2 * a + 2 * b, 2 * a + 2 * b + c, L]
    arcs = tuple(
        (Interval(bounds[i], bounds[i + 1]),) for i in range(6)
    )
    offsets = (
        2 * a + b + c,
        b + c,
        a + 2 * b + c,
        a + c,
        a + b + 2 * c,
        a + b,
    )
    return Ar6Map(t, L, arcs, tuple(o % L for o in offsets))


def first_order_adjacent(m: Ar9Map) -> bool:
    """True when the blocks sit in first order, origin 0, with no gaps."""
    lens = omega_lengths(m.triple)
    return m.placements == (Fraction(0), lens[0], lens[0] + lens[1])


def glue_point(m: Ar9Map, x: Fraction) -> Fraction:
    """Circle coordinate of a line point under the end-to-end gluing.

    Defined for first-order adjacent maps, where the gluing is the identity;
    kept explicit so conjugacy checks read as two genuine routes.
    """
    if not first_order_adjacent(m):
        raise ValueError("gluing requires the first-order adjacent layout")
    lens = omega_lengths(m.triple)
    cumulative = (Fraction(0), lens[0], lens[0] + lens[1])
    for role, block in enumerate(m.role_blocks):
        if block.contains(x):
            return (x - m.placements[role]) + cumulative[role]
    raise OutOfDomain(f"{x} lies in a gap or outside the domain", point=str(x))


def glue_to_ar6(m: Ar9Map) -> Ar6Map:
    """Glue the three intervals into a circle exchange of six arcs.

    Non-first-order or gapped maps are first rebuilt in the first-order
    adjacent layout (the arrangement on the line never changes the system).
    Each circle arc is the glued union of the domain pieces listed in
    ARC_LETTERS; the constituent pieces of one arc share a single circle
    translation, which becomes the arc's offset.
    """
    if not first_order_adjacent(m):
        m = build_ar9(m.triple, FIRST_ORDER)
    L = 2 * (m.triple.a + m.triple.b + m.triple.c)
    arcs: list[tuple[Interval, ...]] = []
    offsets: list[Fraction] = []
    for letters in ARC_LETTERS:
        pieces = []
        arc_offset: Fraction | None = None
        for ch in letters:
            gl = glue_point(m, m.domain[ch].left)
            pieces.append(Interval(gl, gl + m.domain[ch].length))
            gi = glue_point(m, m.image[ch].left)
            off = (gi - gl) % L
            if arc_offset is None:
                arc_offset = off
            elif arc_offset != off:
                raise RuntimeError(
                    f"pieces of arc {letters} disagree on the circle offset"
                )
        arcs.append(_normalize_pieces(pieces, L))
        offsets.append(arc_offset if arc_offset is not None else Fraction(0))
    return Ar6Map(m.triple, L, tuple(arcs), tuple(offsets))


def ar6_rotation_match(m1: Ar6Map, m2: Ar6Map) -> Fraction | None:
    """The rotation rho with m1 = rotate(m2, rho) (same labels, same
    offsets, arc tables shifted by rho); None when no such rotation exists.
    """
    if m1.length != m2.length or m1.offsets != m2.offsets:
        return None
    L = m1.length
    candidates = {
        (p1.left - p2.left) % L for p1 in m1.arcs[0] for p2 in m2.arcs[0]
    }
    for rho in sorted(candidates):
        if all(
            _normalize_pieces((p.translate(rho) for p in m2.arcs[label]), L)
            == m1.arcs[label]
            for label in range(6)
        ):
            return rho
    return None


def ar6_arc_name(label: int) -> str:
    return A6_NAMES[label]
