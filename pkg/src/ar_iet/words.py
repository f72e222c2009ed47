"""Substitution engine on three- and nine-letter alphabets.

Stage words are generated by iterated substitution along a directing prefix:
stage k maps each letter i to the concatenation of the stage-(k-1) words of
the letters of sigma_{r_k}(i).  Lengths grow exponentially (Tribonacci
heights roughly double every step and a half), so every materializing
operation takes a mandatory letter cap; per-letter lengths are always
available cheaply through the incidence-matrix recurrence.

Words are plain strings over "abc" (three letters) or "123456789" (nine
letters).  The six-letter alphabet {a-, a+, b-, b+, c-, c+} is encoded as
integers 0..5 and produced only by projection from nine letters: the
six-letter system has no substitutive presentation of its own.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import WordOverflow
from .gasket import PartialQuotients, Prefix, Sym

A3 = "abc"
A9 = "123456789"
A6_NAMES = ("a-", "a+", "b-", "b+", "c-", "c+")

AlphabetTag = Literal["A3", "A9"]

# nine-letter class structure: 1-4 behave like a, 5-7 like b, 8-9 like c
A9_CLASS = {
    "1": "a", "2": "a", "3": "a", "4": "a",
    "5": "b", "6": "b", "7": "b",
    "8": "c", "9": "c",
}

# letter-to-letter projections
_PHI3 = str.maketrans({
    "1": "a", "2": "a", "3": "a", "4": "a",
    "5": "b", "6": "b", "7": "b",
    "8": "c", "9": "c",
})
_PHI6 = {
    "1": 0, "2": 0,          # a-
    "3": 1, "4": 1,          # a+
    "5": 2,                  # b-
    "6": 3, "7": 3,          # b+
    "8": 4,                  # c-
    "9": 5,                  # c+
}
_PHI6_TO_3 = {0: "a", 1: "a", 2: "b", 3: "b", 4: "c", 5: "c"}


@dataclass(frozen=True)
class Substitution:
    """Total letter-to-word map over one alphabet, extended to a morphism."""

    alphabet: AlphabetTag
    table: dict[str, str]

    def __post_init__(self):
        letters = A3 if self.alphabet == "A3" else A9
        assert set(self.table) == set(letters)
        assert all(w and set(w) <= set(letters) for w in self.table.values())

    def __call__(self, word: str) -> str:
        return "".join(self.table[ch] for ch in word)


_SIGMA3 = {
    Sym.I: Substitution("A3", {"a": "ab", "b": "ac", "c": "a"}),
    Sym.II: Substitution("A3", {"a": "ab", "b": "a", "c": "ac"}),
    Sym.III: Substitution("A3", {"a": "a", "b": "ab", "c": "ac"}),
}

_SIGMA9 = {
    Sym.I: Substitution("A9", {
        "1": "35", "2": "45", "3": "46", "4": "17",
        "5": "18", "6": "19", "7": "29",
        "8": "2", "9": "3",
    }),
    Sym.II: Substitution("A9", {
        "1": "17", "2": "46", "3": "45", "4": "35",
        "5": "3", "6": "2", "7": "1",
        "8": "19", "9": "18",
    }),
    Sym.III: Substitution("A9", {
        "1": "1", "2": "2", "3": "3", "4": "4",
        "5": "45", "6": "46", "7": "17",
        "8": "18", "9": "19",
    }),
}


def sigma3(s: Sym) -> Substitution:
    return _SIGMA3[s]


def sigma9(s: Sym) -> Substitution:
    return _SIGMA9[s]


def _tables(alphabet: AlphabetTag) -> tuple[str, dict[Sym, Substitution]]:
    if alphabet == "A3":
        return A3, _SIGMA3
    if alphabet == "A9":
        return A9, _SIGMA9
    raise ValueError(f"unknown alphabet tag {alphabet!r}")


def heights_by_matrix(prefix: Sequence[Sym]) -> list[tuple[int, int, int]]:
    """Per-class word lengths (h_a, h_b, h_c) at stages 0..len(prefix).

    The nine-letter classes follow the same recurrence as the three letters
    (1-4 share h_a, 5-7 share h_b, 8-9 share h_c), so one triple per stage
    covers both alphabets.
    """
    h = (1, 1, 1)
    out = [h]
    for sym in prefix:
        a, b, c = h
        if sym is Sym.I:
            h = (a + b, a + c, a)
        elif sym is Sym.II:
            h = (a + b, a, a + c)
        else:
            h = (a, a + b, a + c)
        out.append(h)
    return out


def letter_height(letter: str, hv: tuple[int, int, int]) -> int:
    """Length of the stage word for one letter, from a class height triple."""
    if letter in A3:
        return hv["abc".index(letter)]
    return hv["abc".index(A9_CLASS[letter])]


def stage_words(
    prefix: Sequence[Sym], alphabet: AlphabetTag, max_total_letters: int
) -> dict[str, str]:
    """Materialize the stage-K words for every letter of the alphabet.

    Raises WordOverflow before building any word longer than
    max_total_letters; the stage that would overflow is reported so callers
    can fall back to heights_by_matrix.
    """
    letters, sigmas = _tables(alphabet)
    heights = heights_by_matrix(prefix)
    for k, hv in enumerate(heights):
        if max(hv) > max_total_letters:
            raise WordOverflow(
                f"stage {k} word length {max(hv)} exceeds cap {max_total_letters}",
                stage=k,
                length=max(hv),
                cap=max_total_letters,
            )
    words = {ch: ch for ch in letters}
    for sym in prefix:
        table = sigmas[sym].table
        words = {i: "".join(words[j] for j in table[i]) for i in letters}
    return words


# multiplicative rules: new word for each letter as (source letter, exponent)
# factors, with k the partial quotient of the block being closed
def _mult_factors_a3(rule: Sym, k: int) -> dict[str, list[tuple[str, int]]]:
    if rule is Sym.I:
        return {"a": [("a", k), ("b", 1)], "b": [("a", k), ("c", 1)], "c": [("a", 1)]}
    return {"a": [("a", k), ("b", 1)], "b": [("a", 1)], "c": [("a", k), ("c", 1)]}


def _mult_factors_a9(rule: Sym, k: int) -> dict[str, list[tuple[str, int]]]:
    if rule is Sym.I:
        return {
            "1": [("3", 1), ("4", k - 1), ("5", 1)],
            "2": [("4", k), ("5", 1)],
            "3": [("4", k), ("6", 1)],
            "4": [("1", k), ("7", 1)],
            "5": [("1", k), ("8", 1)],
            "6": [("1", k), ("9", 1)],
            "7": [("2", 1), ("1", k - 1), ("9", 1)],
            "8": [("2", 1)],
            "9": [("3", 1)],
        }
    return {
        "1": [("1", k), ("7", 1)],
        "2": [("4", k), ("6", 1)],
        "3": [("4", k), ("5", 1)],
        "4": [("3", 1), ("4", k - 1), ("5", 1)],
        "5": [("3", 1)],
        "6": [("2", 1)],
        "7": [("1", 1)],
        "8": [("1", k), ("9", 1)],
        "9": [("1", k), ("8", 1)],
    }


def multiplicative_heights(pq: PartialQuotients) -> list[tuple[int, int, int]]:
    """Class height triples at multiplicative times m_0..m_N, matrix-only."""
    h = (1, 1, 1)
    out = [h]
    for k, rule in zip(pq.ks, pq.rules):
        a, b, c = h
        if rule is Sym.I:
            h = (k * a + b, k * a + c, a)
        else:
            h = (k * a + b, a, k * a + c)
        out.append(h)
    return out


def multiplicative_stage_words(
    pq: PartialQuotients, alphabet: AlphabetTag, n: int, cap: int
) -> dict[str, str]:
    """Words at multiplicative time m_n, built blockwise by the k-step rules.

    Equals stage_words(expansion up to m_n) letter for letter; n = 0 gives
    the single-letter stage-0 words.
    """
    if not 0 <= n <= len(pq):
        raise ValueError(f"n = {n} out of range for {len(pq)} blocks")
    letters, _ = _tables(alphabet)
    mult_heights = multiplicative_heights(pq)
    for j in range(n + 1):
        if max(mult_heights[j]) > cap:
            raise WordOverflow(
                f"block {j} word length {max(mult_heights[j])} exceeds cap {cap}",
                stage=j,
                length=max(mult_heights[j]),
                cap=cap,
            )
    factors_of = _mult_factors_a3 if alphabet == "A3" else _mult_factors_a9
    words = {ch: ch for ch in letters}
    for k, rule in zip(pq.ks[:n], pq.rules[:n]):
        rules = factors_of(rule, k)
        words = {
            i: "".join(words[src] * e for src, e in rules[i]) for i in letters
        }
    return words


def project(word: str, target: Literal["A3", "A6"]) -> str | tuple[int, ...]:
    """Letterwise projection of a nine-letter word.

    Three-letter target: classes 1-4 -> a, 5-7 -> b, 8-9 -> c (a string).
    Six-letter target: sign-refined classes as integers 0..5 in the order
    a-, a+, b-, b+, c-, c+ (a tuple).  Composing the six-letter projection
    with the sign-forgetting map gives the three-letter one.
    """
    if target == "A3":
        return word.translate(_PHI3)
    if target == "A6":
        return tuple(_PHI6[ch] for ch in word)
    raise ValueError(f"unknown projection target {target!r}")


def a6_to_a3(letters: Iterable[int]) -> str:
    """Forget the signs: 0,1 -> a; 2,3 -> b; 4,5 -> c."""
    return "".join(_PHI6_TO_3[x] for x in letters)


def a6_to_str(letters: Iterable[int]) -> str:
    return ",".join(A6_NAMES[x] for x in letters)


def factor_complexity(words: Iterable[str], n: int) -> int:
    """Number of distinct length-n factors across the supplied words.

    The caller is responsible for supplying words deep enough that all
    factors of the limiting language appear; compare two consecutive stages
    and accept the count only when it has stabilized.
    """
    if n == 0:
        return 1
    seen: set[str] = set()
    for w in words:
        for i in range(len(w) - n + 1):
            seen.add(w[i : i + n])
    return len(seen)


def stable_factor_complexity(
    prefix: Sequence[Sym], alphabet: AlphabetTag, n: int, cap: int
) -> int | None:
    """Factor count once equal across two consecutive stages; None otherwise.

    Walks stages upward within the prefix, comparing p(n) at stages K-1 and
    K; returns the first stabilized value.
    """
    letters, sigmas = _tables(alphabet)
    words = {ch: ch for ch in letters}
    prev = factor_complexity(words.values(), n)
    heights = heights_by_matrix(prefix)
    for k, sym in enumerate(prefix, start=1):
        if max(heights[k]) > cap:
            raise WordOverflow(
                f"stage {k} word length {max(heights[k])} exceeds cap {cap}",
                stage=k,
                length=max(heights[k]),
                cap=cap,
            )
        table = sigmas[sym].table
        words = {i: "".join(words[j] for j in table[i]) for i in letters}
        cur = factor_complexity(words.values(), n)
        if cur == prev and min(len(w) for w in words.values()) >= n:
            return cur
        prev = cur
    return None


def occurrence_horizon(
    prefix: Sequence[Sym], letter: str, n: int, max_N: int, cap: int = 10**6
) -> int | None:
    """Least stage N <= max_N at which the stage-n word of `letter` occurs
    in the stage-N words of all nine letters; None when the cap is reached.

    Requires len(prefix) >= max_N >= n.
    """
    if letter not in A9:
        raise ValueError(f"letter {letter!r} is not a nine-letter symbol")
    if not 0 <= n <= max_N <= len(prefix):
        raise ValueError(
            f"need 0 <= n={n} <= max_N={max_N} <= len(prefix)={len(prefix)}"
        )
    target = stage_words(prefix[:n], "A9", cap)[letter]
    words = {ch: ch for ch in A9}
    _, sigmas = _tables("A9")
    heights = heights_by_matrix(prefix)
    for N in range(0, max_N + 1):
        if N > 0:
            if max(heights[N]) > cap:
                raise WordOverflow(
                    f"stage {N} word length {max(heights[N])} exceeds cap {cap}",
                    stage=N,
                    length=max(heights[N]),
                    cap=cap,
                )
            table = sigmas[prefix[N - 1]].table
            words = {i: "".join(words[j] for j in table[i]) for i in A9}
        if all(target in w for w in words.values()):
            return N
    return None
