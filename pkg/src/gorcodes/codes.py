"""Binary linear codes and their dictionary with half-integral groups.

Words are Python ints.  Coordinate ``i`` of a length-``n`` word is bit
``n - 1 - i``, so integer order agrees with the lexicographic order of the
0/1 strings (``"110000"`` is coordinate 0 set, coordinate 1 set, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from gorcodes.correspondence import lexmin_rows
from gorcodes.simplex import HStarPolynomial, IntegralityError, SimplexGroup

MAX_ENUM_LENGTH = 10


class NotHalfIntegralError(ValueError):
    """A group element has a coordinate outside {0, 1/2}."""


def weight(word: int) -> int:
    return bin(word).count("1")


def word_to_bits(word: int, n: int) -> Tuple[int, ...]:
    return tuple((word >> (n - 1 - i)) & 1 for i in range(n))


def bits_to_word(bits: Sequence[int]) -> int:
    w = 0
    for b in bits:
        w = (w << 1) | (1 if b else 0)
    return w


def word_to_str(word: int, n: int) -> str:
    return format(word, f"0{n}b") if n else ""


def reduce_basis(words: Iterable[int]) -> List[int]:
    """Reduced row echelon basis of the span, leading bits descending."""
    basis: List[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis = [min(b, b ^ w) for b in basis]
            basis.append(w)
            basis.sort(reverse=True)
    return basis


def span(basis: Sequence[int]) -> List[int]:
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return sorted(words)


@dataclass(frozen=True)
class BinaryCode:
    """Linear subspace of ``F_2^length``; generators are kept in reduced echelon form."""

    length: int
    generators: Tuple[int, ...]
    codewords: Tuple[int, ...]

    def __init__(self, length: int, generators: Iterable[int] = ()):
        gens = list(generators)
        if any(g < 0 or g >> length for g in gens):
            raise ValueError(f"generator wider than length {length}")
        basis = reduce_basis(gens)
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "generators", tuple(basis))
        object.__setattr__(self, "codewords", tuple(span(basis)))

    @classmethod
    def from_strings(cls, rows: Iterable[str], length: int | None = None) -> "BinaryCode":
        rows = [r.strip() for r in rows if r.strip()]
        if length is None:
            if not rows:
                raise ValueError("length is required for the zero code")
            length = len(rows[0])
        for r in rows:
            if len(r) != length or set(r) - {"0", "1"}:
                raise ValueError(f"bad codeword {r!r} for length {length}")
        return cls(length, [int(r, 2) for r in rows])

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def generator_strings(self) -> List[str]:
        return [word_to_str(g, self.length) for g in self.generators]

    def __contains__(self, word: int) -> bool:
        return word in set(self.codewords)

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def all_ones(self) -> int:
        return (1 << self.length) - 1


def weight_distribution(code: BinaryCode) -> Tuple[int, ...]:
    """``(A_0, ..., A_n)`` by enumerating every codeword."""
    counts = [0] * (code.length + 1)
    for w in code.codewords:
        counts[weight(w)] += 1
    return tuple(counts)


def is_even(code: BinaryCode) -> bool:
    return all(weight(g) % 2 == 0 for g in code.generators)


def is_self_complementary(code: BinaryCode) -> bool:
    return code.all_ones in code


def code_to_group(code: BinaryCode) -> SimplexGroup:
    """The group of half codewords ``c / 2``."""
    if not is_even(code):
        raise IntegralityError("code has an odd-weight codeword")
    n = code.length
    return SimplexGroup(n, 2, [word_to_bits(w, n) for w in code.codewords])


def group_to_code(group: SimplexGroup) -> BinaryCode:
    """Inverse of :func:`code_to_group` on half-integral groups."""
    if group.denominator not in (1, 2):
        raise NotHalfIntegralError(
            f"coordinates with denominator {group.denominator} occur; expected only 0 and 1/2"
        )
    words = [bits_to_word(v) for v in group.vectors]
    code = BinaryCode(group.length, words)
    if set(code.codewords) != set(words):
        raise ValueError("doubled elements do not form a linear code")
    return code


def hstar_from_code(code: BinaryCode) -> HStarPolynomial:
    """Coefficient ``i`` is the number of codewords of weight ``2i``."""
    if not is_even(code):
        raise IntegralityError("code has an odd-weight codeword")
    return HStarPolynomial(weight_distribution(code)[::2])


@dataclass(frozen=True)
class CanonicalCode:
    """Sorted codeword list minimised over coordinate permutations."""

    length: int
    codewords: Tuple[int, ...]

    def code(self) -> BinaryCode:
        return BinaryCode(self.length, self.codewords)

    @property
    def generators(self) -> Tuple[int, ...]:
        return tuple(reduce_basis(self.codewords))


def canonical_code(code: BinaryCode) -> CanonicalCode:
    """Canonical form under coordinate permutations.

    Codewords are labelled by weight, so columns are first told apart by how
    many codewords of each weight cover them.
    """
    n = code.length
    rows = [word_to_bits(w, n) for w in code.codewords]
    labels = [weight(w) for w in code.codewords]
    best, _ = lexmin_rows(rows, 2, labels, n)
    return CanonicalCode(n, tuple(bits_to_word(r) for r in best))


def codes_equivalent(c1: BinaryCode, c2: BinaryCode) -> bool:
    if c1.length != c2.length or len(c1) != len(c2):
        return False
    if weight_distribution(c1) != weight_distribution(c2):
        return False
    return canonical_code(c1) == canonical_code(c2)


def echelon_subspaces(m: int) -> Iterator[List[int]]:
    """Every subspace of ``F_2^m``, once each, as a reduced echelon basis.

    Bit ``m - 1 - i`` is coordinate ``i``; pivots are the leading bits.
    """
    for k in range(m + 1):
        for pivots in combinations(range(m), k):
            free = [
                (r, c)
                for r, p in enumerate(pivots)
                for c in range(p + 1, m)
                if c not in pivots
            ]
            for fill in product((0, 1), repeat=len(free)):
                rows = [1 << (m - 1 - p) for p in pivots]
                for (r, c), bit in zip(free, fill):
                    if bit:
                        rows[r] |= 1 << (m - 1 - c)
                yield rows


def enumerate_escc(length: int) -> List[BinaryCode]:
    """One code per permutation class of even self-complementary codes.

    Such codes sit between ``<1>`` and the even-weight code ``E``; they match
    subspaces of ``E / <1>``, realised here as the even words vanishing on the
    last coordinate, with basis ``e_i + e_{n-2}``.
    """
    if length % 2 or not 2 <= length <= MAX_ENUM_LENGTH:
        raise ValueError(f"length must be even and in [2, {MAX_ENUM_LENGTH}]")
    n = length
    m = n - 2
    ones = (1 << n) - 1
    lift = [(1 << (n - 1 - i)) | (1 << 1) for i in range(m)]
    buckets: Dict[Tuple[int, Tuple[int, ...]], Dict[CanonicalCode, BinaryCode]] = {}
    for rows in echelon_subspaces(m):
        gens = [ones]
        for r in rows:
            w = 0
            for i in range(m):
                if (r >> (m - 1 - i)) & 1:
                    w ^= lift[i]
            gens.append(w)
        code = BinaryCode(n, gens)
        key = (code.dimension, weight_distribution(code))
        canon = canonical_code(code)
        buckets.setdefault(key, {}).setdefault(canon, canon.code())
    out = [c for key in sorted(buckets) for c in sorted(buckets[key].values(), key=lambda c: c.codewords)]
    return out
