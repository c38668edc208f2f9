"""Pattern vectors, the recursive pattern-basis hierarchy, and imbalance ratios.

A pattern vector is the truth table of a Boolean function flattened into a
bit string: bit i (counting from the right) is f(i). Text form is MSB-first,
so "0001" is the function that is 1 only on input 00.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

# Largest rank basis() will materialize by default; member length is 4**rank.
MAX_RANK = 8


def _is_power_of_four(n: int) -> bool:
    return n >= 4 and n & (n - 1) == 0 and (n.bit_length() - 1) % 2 == 0


@dataclass(frozen=True)
class BitVector:
    """Fixed-length bit string. bits is the integer whose bit i is element i."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits do not fit in the declared length")

    @classmethod
    def parse(cls, text: str) -> "BitVector":
        """Parse an MSB-first bit string; spaces and underscores are ignored."""
        digits = text.replace(" ", "").replace("_", "")
        if not digits or set(digits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(int(digits, 2), len(digits))

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise ValueError(f"bit index {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def popcount(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.bits ^ other.bits, self.length)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        raw = format(self.bits, f"0{self.length}b")
        if self.length < 16:
            return raw
        # group in 4s (aligned to the LSB end) for readability at larger sizes
        rem = len(raw) % 4
        parts = ([raw[:rem]] if rem else []) + [raw[k : k + 4] for k in range(rem, len(raw), 4)]
        return " ".join(parts)


@dataclass(frozen=True)
class PatternVector(BitVector):
    """BitVector whose length is 4**rank for some rank >= 1."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not _is_power_of_four(self.length):
            raise ValueError(f"pattern length must be a power of 4 (>= 4), got {self.length}")

    @property
    def rank(self) -> int:
        return (self.length.bit_length() - 1) // 2


@dataclass(frozen=True)
class TruthTable:
    """Boolean function on `arity` input bits; outputs[x] = f(x)."""

    arity: int
    outputs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        if len(self.outputs) != 1 << self.arity:
            raise ValueError(f"expected {1 << self.arity} outputs, got {len(self.outputs)}")
        if set(self.outputs) - {0, 1}:
            raise ValueError("outputs must be 0 or 1")

    def __call__(self, x: int | BitVector) -> int:
        i = x.bits if isinstance(x, BitVector) else x
        if not 0 <= i < len(self.outputs):
            raise ValueError(f"input {i} out of range for arity {self.arity}")
        return self.outputs[i]


@dataclass(frozen=True)
class PatternBasis:
    """Ordered collection of 4**rank pairwise orthogonal pattern vectors."""

    rank: int
    members: tuple[PatternVector, ...]

    def member(self, i: int) -> PatternVector:
        return self.members[i]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


class BasisLookup(NamedTuple):
    index: Optional[int]
    negation_index: Optional[int]


def pattern_of_function(t: TruthTable) -> BitVector:
    """Flatten a truth table into its pattern vector (bit i = f(i)).

    Returns a PatternVector when the arity is even, a plain BitVector otherwise.
    """
    bits = 0
    for i, out in enumerate(t.outputs):
        bits |= out << i
    length = 1 << t.arity
    return PatternVector(bits, length) if t.arity % 2 == 0 else BitVector(bits, length)


def function_of_pattern(p: BitVector) -> TruthTable:
    """Inverse of pattern_of_function; round trip is the identity."""
    arity = p.length.bit_length() - 1
    if 1 << arity != p.length:
        raise ValueError(f"pattern length {p.length} is not a power of 2")
    return TruthTable(arity, tuple(p.bit(i) for i in range(p.length)))


def negate(p: BitVector) -> BitVector:
    """Flip every bit; an involution."""
    mask = (1 << p.length) - 1
    return type(p)(p.bits ^ mask, p.length)


def is_equivalent(p: BitVector, q: BitVector) -> bool:
    """True iff q is the bitwise complement of p."""
    return (p ^ q).bits == (1 << p.length) - 1


def is_orthogonal(p: BitVector, q: BitVector) -> bool:
    """True iff p and q differ in exactly half their positions."""
    if p.length % 2:
        raise ValueError("orthogonality needs an even length")
    return (p ^ q).popcount() == p.length // 2


def imbalance_ratio(p: BitVector) -> Fraction:
    """min(#0s, #1s) / length, in lowest terms."""
    ones = p.popcount()
    return Fraction(min(ones, p.length - ones), p.length)


def imbalance_closed_form(n: int) -> Fraction:
    """Imbalance ratio shared by every member of the rank-n basis: 1/2 - 1/2^(n+1)."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    return Fraction(1, 2) - Fraction(1, 2 ** (n + 1))


def imbalance_recurrence(n: int) -> Fraction:
    """Same ratio obtained by iterating rho(n) = 1/4 + rho(n-1)/2 from rho(1) = 1/4."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    rho = Fraction(1, 4)
    for _ in range(n - 1):
        rho = Fraction(1, 4) + rho / 2
    return rho


def base_basis() -> PatternBasis:
    """Rank-1 basis: member j is the one-hot pattern with bit j set."""
    return PatternBasis(1, tuple(PatternVector(1 << j, 4) for j in range(4)))


def extend_basis(basis_n: PatternBasis) -> PatternBasis:
    """Extend a rank-n basis to rank n+1.

    Member a*4**n + j is four copies of member j laid out MSB-first as
    block3 block2 block1 block0, with block a replaced by its negation.
    """
    n = basis_n.rank
    length = 4**n
    mask = (1 << length) - 1
    members = []
    for a in range(4):
        for m in basis_n.members:
            bits = 0
            for k in range(4):
                block = m.bits ^ mask if k == a else m.bits
                bits |= block << (k * length)
            members.append(PatternVector(bits, 4 * length))
    return PatternBasis(n + 1, tuple(members))


def basis(rank: int, *, max_rank: int = MAX_RANK) -> PatternBasis:
    """The rank-n basis: base_basis() pushed through extend_basis n-1 times."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if rank > max_rank:
        raise ValueError(f"rank {rank} exceeds the guard ({max_rank}); raise max_rank to override")
    b = base_basis()
    for _ in range(rank - 1):
        b = extend_basis(b)
    return b


def member_at(rank: int, index: int) -> PatternVector:
    """Member `index` of the rank-n basis, built directly without the full basis."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if not 0 <= index < 4**rank:
        raise ValueError(f"index {index} out of range for rank {rank}")
    bits = 1 << (index & 3)
    length = 4
    for level in range(1, rank):
        a = (index >> (2 * level)) & 3
        mask = (1 << length) - 1
        new_bits = 0
        for k in range(4):
            block = bits ^ mask if k == a else bits
            new_bits |= block << (k * length)
        bits = new_bits
        length *= 4
    return PatternVector(bits, length)


def index_of(p: PatternVector, b: PatternBasis) -> BasisLookup:
    """Locate p in b, reporting both direct membership and negation membership."""
    if p.length != 4**b.rank:
        raise ValueError(f"pattern length {p.length} does not match basis rank {b.rank}")
    neg = negate(p)
    found = neg_found = None
    for i, m in enumerate(b.members):
        if m == p:
            found = i
        if m == neg:
            neg_found = i
    return BasisLookup(found, neg_found)
