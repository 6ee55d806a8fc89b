"""Permutations of {1, ..., p} and their rational group algebra.

Composition convention, fixed globally: ``(s * t)(i) = s(t(i))`` — the right
factor acts first.  Every symmetrizer and every tensor action in the package
derives from this single choice.

The row/column subgroups of a Young diagram use the row-major filling: boxes
numbered consecutively left to right, top to bottom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InternalConsistencyError, SizeGuardError
from .partitions import Partition, SetPartition
from .rational import as_fraction

MAX_GROUP_DEGREE = 8
MAX_PROJECTOR_DEGREE = 6


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., p}, stored as the tuple of images of 1, ..., p."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Iterable[int]) -> Permutation:
        """Build from disjoint cycles; unmentioned points are fixed."""
        images = list(range(1, degree + 1))
        for cycle in cycles:
            cycle = tuple(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition with the right factor applied first."""
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(images)

    def cycles(self) -> list[tuple[int, ...]]:
        """Orbits of the permutation, fixed points included, as sorted-start cycles."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            out.append(tuple(cycle))
        return out

    def cycle_partition(self) -> SetPartition:
        """The set partition of {1..p} into orbits."""
        return SetPartition(self.cycles())

    @property
    def sign(self) -> int:
        """Parity: (-1) ** (degree - number of cycles)."""
        return -1 if (self.degree - len(self.cycles())) % 2 else 1

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.images) + "]"


def compose(first: Permutation, second: Permutation) -> Permutation:
    return first * second


def cycle_partition(perm: Permutation) -> SetPartition:
    return perm.cycle_partition()


def all_permutations(degree: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, degree + 1)):
        yield Permutation(images)


class AlgebraElement:
    """A finite rational-linear combination of permutations of {1, ..., p}.

    Terms with coefficient zero are never stored, so equality is equality of
    the term maps.  Multiplication is the bilinear extension of composition.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms=None):
        self.degree = degree
        clean: dict[Permutation, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            if perm.degree != degree:
                raise ValueError("term degree mismatch")
            coeff = as_fraction(coeff)
            if coeff:
                clean[perm] = coeff
        self._terms = clean

    @classmethod
    def unit(cls, degree: int) -> AlgebraElement:
        return cls(degree, {Permutation.identity(degree): Fraction(1)})

    @classmethod
    def from_permutation(cls, perm: Permutation, coeff=1) -> AlgebraElement:
        return cls(perm.degree, {perm: as_fraction(coeff)})

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def terms(self) -> Iterator[tuple[Permutation, Fraction]]:
        return iter(self._terms.items())

    @property
    def support_size(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        terms = dict(self._terms)
        for perm, coeff in other._terms.items():
            terms[perm] = terms.get(perm, Fraction(0)) + coeff
        return AlgebraElement(self.degree, terms)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.degree, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, scalar) -> AlgebraElement:
        scalar = as_fraction(scalar)
        return AlgebraElement(
            self.degree, {p: scalar * c for p, c in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar) -> AlgebraElement:
        return self.scale(scalar)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.degree == other.degree
            and self._terms == other._terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        bits = [f"{c}*{p}" for p, c in sorted(self._terms.items(), key=lambda t: t[0].images)]
        return " + ".join(bits)

    def to_json_obj(self) -> list[dict]:
        return [
            {"perm": list(perm.images), "coeff": str(coeff)}
            for perm, coeff in sorted(self._terms.items(), key=lambda t: t[0].images)
        ]

    @staticmethod
    def from_json_obj(obj, degree: int | None = None) -> AlgebraElement:
        terms: dict[Permutation, Fraction] = {}
        for item in obj:
            perm = Permutation(item["perm"])
            terms[perm] = terms.get(perm, Fraction(0)) + as_fraction(item["coeff"])
            degree = perm.degree if degree is None else degree
        if degree is None:
            raise ValueError("cannot infer degree of an empty element")
        return AlgebraElement(degree, terms)


def multiply(left: AlgebraElement, right: AlgebraElement) -> AlgebraElement:
    """Group algebra product: bilinear extension of composition."""
    if left.degree != right.degree:
        raise ValueError("degree mismatch")
    terms: dict[Permutation, Fraction] = {}
    for sigma, a in left.terms():
        for tau, b in right.terms():
            perm = sigma * tau
            terms[perm] = terms.get(perm, Fraction(0)) + a * b
    return AlgebraElement(left.degree, terms)


def _row_major_rows(lam: Partition) -> list[tuple[int, ...]]:
    rows = []
    start = 1
    for length in lam.parts:
        rows.append(tuple(range(start, start + length)))
        start += length
    return rows


def _row_major_columns(lam: Partition) -> list[tuple[int, ...]]:
    rows = _row_major_rows(lam)
    width = lam.parts[0] if lam.parts else 0
    return [
        tuple(row[j] for row in rows if len(row) > j) for j in range(width)
    ]


def _block_stabilizer(degree: int, blocks: list[tuple[int, ...]]) -> list[Permutation]:
    """All permutations of 1..degree mapping each listed block to itself."""
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = list(range(1, degree + 1))
        for block, perm_of_block in zip(blocks, choice):
            for source, target in zip(block, perm_of_block):
                images[source - 1] = target
        out.append(Permutation(images))
    return out


def _check_group_degree(lam: Partition, what: str) -> None:
    if lam.weight > MAX_GROUP_DEGREE:
        raise SizeGuardError(
            f"{what} supports weight <= {MAX_GROUP_DEGREE}, got {lam.weight}"
        )


def row_group(lam: Partition) -> list[Permutation]:
    """Permutations preserving each row of the row-major filling of lam."""
    _check_group_degree(lam, "row_group")
    return _block_stabilizer(lam.weight, _row_major_rows(lam))


def column_group(lam: Partition) -> list[Permutation]:
    """Permutations preserving each column of the row-major filling of lam."""
    _check_group_degree(lam, "column_group")
    return _block_stabilizer(lam.weight, _row_major_columns(lam))


@lru_cache(maxsize=None)
def row_symmetrizer(lam: Partition) -> AlgebraElement:
    """Sum of the row group, all coefficients +1."""
    return AlgebraElement(lam.weight, {p: Fraction(1) for p in row_group(lam)})


@lru_cache(maxsize=None)
def column_antisymmetrizer(lam: Partition) -> AlgebraElement:
    """Signed sum of the column group."""
    return AlgebraElement(
        lam.weight, {p: Fraction(p.sign) for p in column_group(lam)}
    )


@lru_cache(maxsize=None)
def young_symmetrizer(lam: Partition) -> AlgebraElement:
    """Product (row symmetrizer) * (column antisymmetrizer) for lam.

    Squares to (p! / standard_tableau_count(lam)) times itself.
    """
    return row_symmetrizer(lam) * column_antisymmetrizer(lam)


def positive_element(pi: SetPartition) -> AlgebraElement:
    """Sum of all permutations whose cycle partition refines pi.

    Those are exactly the permutations moving each block of pi within itself,
    so the support is the product of the per-block symmetric groups.
    """
    p = pi.ground_size
    if p > MAX_GROUP_DEGREE:
        raise SizeGuardError(
            f"positive_element supports ground size <= {MAX_GROUP_DEGREE}, got {p}"
        )
    support = _block_stabilizer(p, list(pi.blocks))
    return AlgebraElement(p, {perm: Fraction(1) for perm in support})


@lru_cache(maxsize=None)
def _central_sum(lam: Partition) -> AlgebraElement:
    """Sum of all conjugates of the Young symmetrizer; central, integer coefficients."""
    p = lam.weight
    sym = young_symmetrizer(lam)
    terms: dict[Permutation, Fraction] = {}
    for g in all_permutations(p):
        g_inv = g.inverse()
        for sigma, coeff in sym.terms():
            conj = g * sigma * g_inv
            terms[conj] = terms.get(conj, Fraction(0)) + coeff
    return AlgebraElement(p, terms)


@lru_cache(maxsize=None)
def isotypic_projector(lam: Partition) -> tuple[AlgebraElement, Fraction]:
    """Idempotent projector onto the lam-isotypic block, with its normalizer.

    Builds the central element z = sum over g of g * c * g^{-1} (c the Young
    symmetrizer), finds the scalar s with z*z = s*z — guaranteed because z is
    central and supported on a single isotypic block — and returns (z/s, s).
    """
    if lam.weight > MAX_PROJECTOR_DEGREE:
        raise SizeGuardError(
            f"isotypic_projector supports weight <= {MAX_PROJECTOR_DEGREE}, got {lam.weight}"
        )
    central = _central_sum(lam)
    identity = Permutation.identity(lam.weight)
    anchor = central.coefficient(identity)
    if not anchor:
        raise InternalConsistencyError("central sum lost its identity coefficient")
    square = central * central
    scale = square.coefficient(identity) / anchor
    if not scale:
        raise InternalConsistencyError("central sum squares to zero")
    if square != central.scale(scale):
        raise InternalConsistencyError("central sum square is not proportional to it")
    return central.scale(1 / scale), scale
